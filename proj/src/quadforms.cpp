#include "xdn/quadforms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "xdn/error.hpp"

namespace xdn {

namespace {

using i128 = __int128;

i64 floor_div(i64 a, i64 b)
{
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

/* Extended gcd on signed values: returns g >= 0 with x*a + y*b = g. */
i64 ext_gcd(i64 a, i64 b, i64 & x, i64 & y)
{
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        i64 q = floor_div(a, b);
        i64 t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

i64 mod_pos(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

bool BQForm::is_reduced() const
{
    if (!(a > 0 && std::abs(b) <= a && a <= c))
        return false;
    if ((std::abs(b) == a || a == c) && b < 0)
        return false;
    return true;
}

bool BQForm::is_primitive() const
{
    return std::gcd(std::gcd(a, b), c) == 1;
}

bool BQForm::is_ambiguous() const
{
    return b == 0 || a == b || a == c;
}

std::string BQForm::str() const
{
    std::ostringstream os;
    os << '(' << a << ", " << b << ", " << c << ')';
    return os.str();
}

BQForm reduce(BQForm f)
{
    i64 const D = f.disc();
    if (D >= 0 || f.a <= 0)
        throw error(errc::invalid_argument, "reduce expects a positive definite form, got " + f.str());
    auto normalize = [&](BQForm & g) {
        /* move b into (-a, a] */
        i64 k = floor_div(g.a - g.b, 2 * g.a);
        g.b += 2 * k * g.a;
        g.c = static_cast<i64>((static_cast<i128>(g.b) * g.b - D) / (4 * static_cast<i128>(g.a)));
    };
    normalize(f);
    while (f.a > f.c) {
        f = BQForm{f.c, -f.b, f.a};
        normalize(f);
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

BQForm compose(BQForm const & f, BQForm const & g)
{
    i64 const D = f.disc();
    if (g.disc() != D)
        throw error(errc::discriminant_mismatch, "cannot compose " + f.str() + " and " + g.str());
    BQForm f1 = f, f2 = g;
    if (f1.a > f2.a)
        std::swap(f1, f2);
    i64 const s = (f1.b + f2.b) / 2;
    i64 const n = f2.b - s;
    i64 d, y1, v_unused;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        d = f1.a;
    } else {
        /* y1 * a2 + v * a1 = d */
        d = ext_gcd(f2.a, f1.a, y1, v_unused);
    }
    i64 d1, x2, y2;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        d1 = ext_gcd(s, d, x2, y2);
        y2 = -y2;
    }
    i64 const v1 = f1.a / d1;
    i64 const v2 = f2.a / d1;
    i128 r128 = (static_cast<i128>(y1) * y2 % v1) * n - static_cast<i128>(x2) * f2.c;
    i64 const r = static_cast<i64>(((r128 % v1) + v1) % v1);
    i64 const b3 = f2.b + 2 * v2 * r;
    i64 const a3 = v1 * v2;
    i128 const c3 = (static_cast<i128>(b3) * b3 - D) / (4 * static_cast<i128>(a3));
    return reduce(BQForm{a3, b3, static_cast<i64>(c3)});
}

BQForm inverse(BQForm const & f)
{
    return reduce(BQForm{f.a, -f.b, f.c});
}

BQForm principal_form(i64 D)
{
    if (D >= 0 || ((D % 4) + 4) % 4 > 1)
        throw error(errc::invalid_argument, "not a negative discriminant: " + std::to_string(D));
    i64 const b = (D % 2 == 0) ? 0 : 1;
    return BQForm{1, b, (b - D) / 4};
}

int ClassGroup::index_of(BQForm const & f) const
{
    BQForm const r = reduce(f);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i] == r)
            return static_cast<int>(i);
    }
    throw error(errc::discriminant_mismatch, "form " + f.str() + " is not in the class group of " + std::to_string(D));
}

quadforms_config const & default_quadforms_config()
{
    static quadforms_config const cfg;
    return cfg;
}

void require_level(i64 N)
{
    if (N < 2)
        throw error(errc::invalid_argument, "level N must be a squarefree integer >= 2, got " + std::to_string(N));
    factor_squarefree(N);
}

std::vector<BQForm> reduced_forms(i64 D)
{
    if (D >= 0)
        throw error(errc::invalid_argument, "reduced_forms expects D < 0");
    std::vector<BQForm> out;
    i64 const absD = -D;
    for (i64 a = 1; 3 * a * a <= absD; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            if (mod_pos(b - D, 2) != 0)
                continue;
            i64 const num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            BQForm f{a, b, num / (4 * a)};
            if (f.c < a)
                continue;
            if (f.c == a && b < 0)
                continue;
            if (!f.is_primitive())
                continue;
            out.push_back(f);
        }
    }
    BQForm const one = principal_form(D);
    std::stable_partition(out.begin(), out.end(), [&](BQForm const & f) { return f == one; });
    return out;
}

ClassGroup class_group(i64 N, quadforms_config const & cfg)
{
    require_level(N);
    if (4 * N > cfg.max_abs_disc)
        throw error(errc::too_large, "discriminant -4*" + std::to_string(N) + " exceeds the class group bound");
    ClassGroup G;
    G.D = -4 * N;
    G.reps = reduced_forms(G.D);
    G.h = static_cast<int>(G.reps.size());
    for (auto const & f : G.reps) {
        if (f.is_ambiguous())
            ++G.twoTorsion;
    }
    G.twoGsize = G.h / G.twoTorsion;
    return G;
}

std::string Rational::str() const
{
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational make_rational(i64 num, i64 den)
{
    if (den == 0)
        throw error(errc::invalid_argument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i64 g = std::gcd(num, den);
    if (g == 0)
        g = 1;
    return Rational{num / g, den / g};
}

Rational density_SN(i64 N, quadforms_config const & cfg)
{
    ClassGroup const G = class_group(N, cfg);
    return make_rational(G.twoGsize + 1, 2 * G.h);
}

std::vector<i64> genus_field(i64 N)
{
    require_level(N);
    std::vector<i64> gens;
    i64 prod = 1;
    for (u64 q : factor_squarefree(N).primes) {
        if (q == 2)
            continue;
        i64 const qs = (q % 4 == 1) ? static_cast<i64>(q) : -static_cast<i64>(q);
        gens.push_back(qs);
        prod *= qs;
    }
    i64 const rest = (-4 * N) / prod;
    if (!(rest > 0 && is_square(static_cast<u64>(rest))))
        gens.push_back(rest);
    return gens;
}

bool represents(BQForm const & f, u64 m)
{
    i64 const absD = -f.disc();
    if (absD <= 0 || f.a <= 0)
        throw error(errc::invalid_argument, "represents expects a positive definite form");
    /* 4am = (2ax + by)^2 + |D| y^2 */
    i128 const four_am = 4 * static_cast<i128>(f.a) * m;
    for (i64 y = 0; static_cast<i128>(absD) * y * y <= four_am; ++y) {
        i128 const rest = four_am - static_cast<i128>(absD) * y * y;
        u64 const s = isqrt(static_cast<u64>(rest));
        if (static_cast<i128>(s) * s != rest)
            continue;
        for (i64 sg : {1, -1}) {
            i128 const t = static_cast<i128>(sg) * static_cast<i128>(s) - static_cast<i128>(f.b) * y;
            if (t % (2 * f.a) == 0)
                return true;
        }
    }
    return false;
}

} // namespace xdn
