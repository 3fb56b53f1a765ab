#include "xdn/mwsieve.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "xdn/error.hpp"

namespace xdn {

IntSextic f23_sextic()
{
    /* (x^3 - x + 1)(x^3 - 8x^2 + 3x - 7) = x^6 - 8x^5 + 2x^4 + 2x^3 - 11x^2 + 10x - 7 */
    return {-7, 10, -11, 2, 2, -8, 1};
}

u64 twist_scale(i64 d, u64 p)
{
    u64 const a = reduce_signed(d, p);
    if (a == 0)
        throw error(errc::bad_reduction, "p divides d");
    auto r = fp_roots(FpPoly(p, {(p - a) % p, 0, 1}));
    if (r.empty())
        throw error(errc::non_split_prime,
                    std::to_string(d) + " is not a square modulo " + std::to_string(p));
    return r.front();
}

HyperellipticCurveFp reduce_twist(IntSextic const & f, i64 d, u64 p)
{
    if (f.size() != 7 || f[6] == 0)
        throw error(errc::invalid_argument, "expected a sextic with 7 coefficients");
    if (p < 3 || !is_prime(p))
        throw error(errc::bad_reduction, "reduction needs an odd prime, got " + std::to_string(p));
    if (reduce_signed(d, p) == 0)
        throw error(errc::bad_reduction, std::to_string(p) + " divides d = " + std::to_string(d));
    FpPoly const fp = FpPoly::from_signed(p, f);
    if (fp.degree() != 6 || !is_squarefree(fp))
        throw error(errc::bad_reduction, std::to_string(p) + " divides the discriminant of f");
    twist_scale(d, p);
    return HyperellipticCurveFp::make(fp);
}

std::vector<CurvePoint> enumerate_points(HyperellipticCurveFp const & C)
{
    u64 const p = C.p;
    std::vector<u64> root_of(p, p);
    for (u64 y = 0; y < p; ++y) {
        u64 const s = mulmod(y, y, p);
        if (root_of[s] == p)
            root_of[s] = y;
    }
    std::vector<CurvePoint> pts;
    for (u64 x = 0; x < p; ++x) {
        u64 const fx = C.f.eval(x);
        if (root_of[fx] == p)
            continue;
        u64 const y = root_of[fx];
        if (y == 0) {
            pts.push_back({x, 0, 1});
        } else {
            u64 const lo = std::min(y, p - y), hi = std::max(y, p - y);
            pts.push_back({x, lo, 1});
            pts.push_back({x, hi, 1});
        }
    }
    u64 const l = C.lead_root;
    pts.push_back({1, l, 0});
    pts.push_back({1, (p - l) % p, 0});
    return pts;
}

namespace {

std::string trim(std::string const & s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

std::string squash(std::string const & s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

i64 parse_i64(std::string const & t, int line)
{
    std::size_t pos = 0;
    i64 v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (std::exception const &) {
        pos = 0;
    }
    if (pos == 0 || pos != t.size())
        throw error(errc::parse_error, "line " + std::to_string(line) + ": expected an integer, got '" + t + "'");
    return v;
}

} // namespace

GensFile parse_gens_text(std::string const & text)
{
    GensFile G;
    bool have_curve = false;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        s = trim(s);
        if (s.empty())
            continue;
        std::size_t const colon = s.find(':');
        if (colon == std::string::npos)
            throw error(errc::parse_error, "line " + std::to_string(line) + ": expected 'key: value'");
        std::string const key = trim(s.substr(0, colon));
        std::string const value = trim(s.substr(colon + 1));
        if (key == "curve") {
            std::istringstream vs(value);
            std::string tok;
            G.f.clear();
            while (vs >> tok)
                G.f.push_back(parse_i64(tok, line));
            if (G.f.size() != 7 || G.f[6] == 0)
                throw error(errc::parse_error, "line " + std::to_string(line) + ": curve needs 7 coefficients of a sextic");
            have_curve = true;
        } else if (key == "d") {
            G.d = parse_i64(value, line);
            if (G.d == 0)
                throw error(errc::parse_error, "line " + std::to_string(line) + ": d must be nonzero");
        } else if (key == "model") {
            std::string const m = squash(value);
            if (m == "y^2=d*f" || m == "y^2=df")
                G.model = TwistModel::y2_eq_df;
            else if (m == "d*y^2=f" || m == "dy^2=f")
                G.model = TwistModel::dy2_eq_f;
            else
                throw error(errc::parse_error, "line " + std::to_string(line) + ": unknown model '" + value + "'");
        } else if (key == "gen") {
            G.gens.push_back(value);
        } else if (key == "divisor") {
            G.divisors.push_back(value);
        } else {
            throw error(errc::parse_error, "line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    if (!have_curve)
        throw error(errc::parse_error, "gens file has no curve line");
    return G;
}

GensFile read_gens_file(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw error(errc::io_error, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_gens_text(ss.str());
}

u64 model_y_scale(TwistModel model, i64 d, u64 p)
{
    u64 const s = twist_scale(d, p);
    /* y^2 = d f: y = s y'; d y^2 = f: y' = s y */
    return model == TwistModel::y2_eq_df ? invmod(s, p) : s;
}

MumfordDivisor transport_divisor(HyperellipticCurveFp const & C, std::string const & text,
                                 TwistModel model, i64 d)
{
    return parse_mumford(C, text, model_y_scale(model, d, C.p));
}

char const * sieve_status_name(SieveStatus s)
{
    return s == SieveStatus::obstruction_found ? "ObstructionFound" : "Inconclusive";
}

ScharaschkinResult scharaschkin_test(HyperellipticCurveFp const & C, std::vector<MumfordDivisor> const & gens)
{
    ScharaschkinResult R;
    auto const pts = enumerate_points(C);
    R.points = pts.size();

    std::vector<std::vector<MumfordDivisor>> multiples;
    R.combinations = 1;
    for (auto const & G : gens) {
        u64 const ord = jac_order(C, G);
        R.gen_orders.push_back(ord);
        R.combinations *= ord;
        std::vector<MumfordDivisor> row{jac_identity(C)};
        for (u64 k = 1; k < ord; ++k)
            row.push_back(jac_add(C, row.back(), G));
        multiples.push_back(std::move(row));
    }

    std::vector<std::pair<std::string, std::size_t>> s2;
    std::set<std::string> s2_keys;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string key = print_mumford(point_pair_class(C, pts[i], pts[i]));
        s2_keys.insert(key);
        s2.emplace_back(std::move(key), i);
    }

    std::set<std::string> hit;
    std::vector<std::size_t> idx(gens.size(), 0);
    std::vector<MumfordDivisor> partial(gens.size() + 1, jac_identity(C));
    /* odometer over all combinations; partial[i] is the sum of the first i terms */
    for (std::size_t i = 0; i < gens.size(); ++i)
        partial[i + 1] = jac_add(C, partial[i], multiples[i][0]);
    std::size_t const g = gens.size();
    while (true) {
        std::string const key = print_mumford(partial[g]);
        if (s2_keys.count(key))
            hit.insert(key);
        std::size_t pos = g;
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < multiples[pos].size()) {
                done = false;
                break;
            }
            idx[pos] = 0;
        }
        if (done)
            break;
        for (std::size_t i = pos; i < g; ++i)
            partial[i + 1] = jac_add(C, partial[i], multiples[i][idx[i]]);
    }

    for (auto const & [key, i] : s2)
        if (hit.count(key))
            R.witnesses.push_back(pts[i]);
    R.status = R.witnesses.empty() ? SieveStatus::obstruction_found : SieveStatus::inconclusive;
    return R;
}

Rank0Result rank0_divisor_test(std::vector<HyperellipticCurveFp> const & curves,
                               std::vector<MumfordDivisor> const & divisors)
{
    if (curves.size() != divisors.size())
        throw error(errc::invalid_argument, "one divisor per curve is required");
    if (curves.empty())
        throw error(errc::invalid_argument, "at least one test prime is required");
    Rank0Result R;
    bool all = true;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        auto const & C = curves[i];
        auto const & D = divisors[i];
        if (D.degree() != 1)
            throw error(errc::invalid_argument, "the rank-0 test needs a degree-1 class");
        Rank0PrimeReport rep;
        rep.p = C.p;
        auto const pts = enumerate_points(C);
        rep.points = pts.size();
        rep.verified = true;
        for (auto const & P : pts) {
            MumfordDivisor const E = jac_add(C, D, jac_neg(C, point_class(C, P)));
            if (jac_is_identity(E)) {
                rep.verified = false;
                break;
            }
        }
        all = all && rep.verified;
        R.primes.push_back(rep);
    }
    R.status = all ? SieveStatus::obstruction_found : SieveStatus::inconclusive;
    return R;
}

} // namespace xdn
