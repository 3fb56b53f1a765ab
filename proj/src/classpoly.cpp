#include "xdn/classpoly.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include <boost/multiprecision/mpfr.hpp>

#include "xdn/error.hpp"

namespace xdn {

namespace {

using boost::multiprecision::mpfr_float;

/* Scoped change of the mpfr default precision, given in bits. */
class precision_guard
{
    unsigned saved_;

    public:

    explicit precision_guard(unsigned bits)
        : saved_(mpfr_float::default_precision())
    {
        mpfr_float::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 5);
    }

    ~precision_guard() { mpfr_float::default_precision(saved_); }

    precision_guard(precision_guard const &) = delete;
    precision_guard & operator=(precision_guard const &) = delete;
};

struct cplx {
    mpfr_float re, im;
};

cplx operator+(cplx const & x, cplx const & y)
{
    return {x.re + y.re, x.im + y.im};
}

cplx operator-(cplx const & x, cplx const & y)
{
    return {x.re - y.re, x.im - y.im};
}

cplx operator*(cplx const & x, cplx const & y)
{
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

cplx operator/(cplx const & x, cplx const & y)
{
    mpfr_float const n = y.re * y.re + y.im * y.im;
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
}

cplx scale(cplx const & x, mpfr_float const & s)
{
    return {x.re * s, x.im * s};
}

/* j((-b + sqrt D) / 2a) from j = E4^3 / Delta with q-expansions truncated below 2^-bits. */
cplx j_at_form(BQForm const & f, i64 D, unsigned bits)
{
    mpfr_float const pi = boost::multiprecision::mpfr_float(boost::math::constants::pi<mpfr_float>());
    mpfr_float const sqrt_absD = sqrt(mpfr_float(-D));
    mpfr_float const decay = pi * sqrt_absD / f.a; /* |q| = exp(-decay) */
    mpfr_float const angle = pi * f.b / f.a;
    mpfr_float const mod = exp(-decay);
    cplx const q{mod * cos(angle), -mod * sin(angle)};

    double const decay_d = static_cast<double>(decay);
    long const nmax = static_cast<long>(std::ceil((bits + 16) * std::log(2.0) / decay_d)) + 2;

    std::vector<cplx> qpow(static_cast<std::size_t>(nmax) + 1);
    qpow[0] = cplx{mpfr_float(1), mpfr_float(0)};
    for (long n = 1; n <= nmax; ++n)
        qpow[n] = qpow[n - 1] * q;

    /* E4 = 1 + 240 sum sigma_3(n) q^n */
    std::vector<mpfr_float> sigma3(static_cast<std::size_t>(nmax) + 1, mpfr_float(0));
    for (long dv = 1; dv <= nmax; ++dv) {
        mpfr_float const cube = mpfr_float(dv) * dv * dv;
        for (long m = dv; m <= nmax; m += dv)
            sigma3[m] += cube;
    }
    cplx E4{mpfr_float(0), mpfr_float(0)};
    for (long n = nmax; n >= 1; --n)
        E4 = E4 + scale(qpow[n], sigma3[n]);
    E4 = scale(E4, mpfr_float(240));
    E4.re += 1;

    /* prod (1 - q^n) by the pentagonal number theorem */
    cplx P{mpfr_float(1), mpfr_float(0)};
    for (long k = 1;; ++k) {
        long const e1 = k * (3 * k - 1) / 2;
        if (e1 > nmax)
            break;
        long const e2 = k * (3 * k + 1) / 2;
        cplx t = qpow[e1];
        if (e2 <= nmax)
            t = t + qpow[e2];
        P = (k % 2 == 1) ? P - t : P + t;
    }
    cplx P2 = P * P;
    cplx P4 = P2 * P2;
    cplx P8 = P4 * P4;
    cplx P16 = P8 * P8;
    cplx const Delta = q * P16 * P8;
    return (E4 * E4 * E4) / Delta;
}

bigint round_to_bigint(mpfr_float const & x)
{
    bigint z;
    mpfr_get_z(z.backend().data(), x.backend().data(), MPFR_RNDN);
    return z;
}

/* One attempt at a fixed precision; empty on a failed integrality check. */
std::optional<std::vector<bigint>> attempt(i64 D, std::vector<BQForm> const & forms, unsigned bits)
{
    precision_guard guard(bits);
    std::vector<cplx> poly{cplx{mpfr_float(1), mpfr_float(0)}}; /* low to high */
    for (auto const & f : forms) {
        cplx const j = j_at_form(f, D, bits);
        std::vector<cplx> next(poly.size() + 1, cplx{mpfr_float(0), mpfr_float(0)});
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] - poly[i] * j;
        }
        poly = std::move(next);
    }
    std::vector<bigint> out;
    mpfr_float const quarter = mpfr_float(1) / 4;
    for (auto const & c : poly) {
        bigint z = round_to_bigint(c.re);
        mpfr_float const resid = abs(c.re - mpfr_float(z));
        if (!(resid < quarter) || !(abs(c.im) < quarter))
            return std::nullopt;
        out.push_back(std::move(z));
    }
    return out;
}

std::mutex memo_mutex;
std::map<i64, ClassPolynomial> memo;

} // namespace

FpPoly ClassPolynomial::mod(u64 p) const
{
    std::vector<u64> c;
    c.reserve(coeffs.size());
    bigint const pp = p;
    for (auto const & a : coeffs) {
        bigint r = a % pp;
        if (r < 0)
            r += pp;
        c.push_back(r.convert_to<u64>());
    }
    return FpPoly(p, std::move(c));
}

std::string ClassPolynomial::str() const
{
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        bigint const & c = coeffs[k];
        if (c == 0)
            continue;
        bigint mag = c < 0 ? bigint(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        bool const unit = (mag == 1) && k > 0;
        if (!unit)
            os << mag;
        if (k > 0) {
            if (!unit)
                os << '*';
            os << 'x';
            if (k > 1)
                os << '^' << k;
        }
        first = false;
    }
    if (first)
        os << '0';
    return os.str();
}

classpoly_config const & default_classpoly_config()
{
    static classpoly_config const cfg;
    return cfg;
}

unsigned initial_precision_bits(i64 D)
{
    double sum = 0;
    for (auto const & f : reduced_forms(D))
        sum += 1.0 / static_cast<double>(f.a);
    double const pi = std::acos(-1.0);
    return static_cast<unsigned>(std::ceil(pi * std::sqrt(static_cast<double>(-D)) * sum / std::log(2.0))) + 64;
}

bigint poly_discriminant(std::vector<bigint> const & coeffs)
{
    int const n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1 || coeffs.back() == 0)
        throw error(errc::invalid_argument, "discriminant needs a polynomial of degree >= 1");
    if (n == 1)
        return bigint(1);
    /* Hadamard bound on the Sylvester determinant of f and f' */
    bigint norm_f = 0, norm_df = 0;
    for (int k = 0; k <= n; ++k) {
        norm_f += coeffs[k] * coeffs[k];
        if (k > 0)
            norm_df += coeffs[k] * coeffs[k] * k * k;
    }
    std::size_t const bound_bits = (static_cast<std::size_t>(n - 1) * (msb(norm_f) + 1) + 1) / 2 +
                                   (static_cast<std::size_t>(n) * (msb(norm_df) + 1) + 1) / 2 + 2;

    bigint x = 0, M = 1;
    u64 q = (1ULL << 62);
    bool const negate = (static_cast<long>(n) * (n - 1) / 2) % 2 == 1;
    while (msb(M) < bound_bits) {
        do {
            q -= 1;
        } while (!is_prime(q));
        std::vector<u64> c;
        c.reserve(coeffs.size());
        for (auto const & a : coeffs) {
            bigint r = a % q;
            if (r < 0)
                r += q;
            c.push_back(r.convert_to<u64>());
        }
        if (c.back() == 0)
            continue;
        FpPoly const f(q, c);
        u64 r = mulmod(resultant(f, f.derivative()), invmod(c.back(), q), q);
        if (negate)
            r = (q - r) % q;
        /* incremental Chinese remaindering */
        bigint xm = x % q;
        u64 const xq = xm.convert_to<u64>();
        bigint Mm = M % q;
        u64 const t = mulmod((r + q - xq) % q, invmod(Mm.convert_to<u64>(), q), q);
        x += M * t;
        M *= q;
    }
    if (x > M / 2)
        x -= M;
    return x;
}

ClassPolynomial compute_class_polynomial(i64 D, unsigned max_precision_bits, unsigned min_precision_bits)
{
    std::vector<BQForm> const forms = reduced_forms(D);
    unsigned bits = std::min(std::max(initial_precision_bits(D), min_precision_bits), max_precision_bits);
    for (;;) {
        if (auto c = attempt(D, forms, bits)) {
            ClassPolynomial H;
            H.D = D;
            H.coeffs = std::move(*c);
            H.discPoly = poly_discriminant(H.coeffs);
            return H;
        }
        if (bits >= max_precision_bits)
            break;
        bits = std::min(2 * bits, max_precision_bits);
    }
    throw error(errc::precision_exhausted,
                "class polynomial of D = " + std::to_string(D) + " failed the integrality check at " +
                    std::to_string(bits) + " bits");
}

ClassPolynomial class_polynomial(i64 N, classpoly_config const & cfg)
{
    require_level(N);
    if (N > cfg.max_N)
        throw error(errc::too_large,
                    "class polynomial bound is N <= " + std::to_string(cfg.max_N) + ", got " + std::to_string(N));
    i64 const D = -4 * N;
    int const h = static_cast<int>(reduced_forms(D).size());
    auto consistent = [&](ClassPolynomial const & H) { return H.D == D && H.degree() == h; };

    std::optional<ClassPolyCache> cache;
    if (cfg.cache_dir) {
        cache.emplace(*cfg.cache_dir);
        if (auto H = cache->get(D); H && consistent(*H))
            return *H;
    }
    std::optional<ClassPolynomial> found;
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find(D); it != memo.end())
            found = it->second;
    }
    if (!found) {
        found = compute_class_polynomial(D, cfg.max_precision_bits);
        std::lock_guard lock(memo_mutex);
        memo.emplace(D, *found);
    }
    if (cache)
        cache->put(*found);
    return *found;
}

char const * tri_name(Tri t)
{
    switch (t) {
    case Tri::no:
        return "false";
    case Tri::yes:
        return "true";
    case Tri::undetermined:
        return "Undetermined";
    }
    return "Undetermined";
}

SNResult in_S_N(i64 N, u64 p, classpoly_config const & cfg)
{
    require_level(N);
    if (!is_prime(p))
        throw error(errc::invalid_argument, std::to_string(p) + " is not prime");
    if (N % static_cast<i64>(p) == 0 || (p == 2 && N % 4 != 3))
        throw error(errc::ramified_in_m,
                    std::to_string(p) + " ramifies in Q(sqrt(-" + std::to_string(N) + "))");
    return in_S_N(N, p, class_polynomial(N, cfg));
}

SNResult in_S_N(i64 N, u64 p, ClassPolynomial const & H)
{
    require_level(N);
    if (!is_prime(p))
        throw error(errc::invalid_argument, std::to_string(p) + " is not prime");
    if (N % static_cast<i64>(p) == 0 || (p == 2 && N % 4 != 3))
        throw error(errc::ramified_in_m,
                    std::to_string(p) + " ramifies in Q(sqrt(-" + std::to_string(N) + "))");
    if (H.D != -4 * N)
        throw error(errc::discriminant_mismatch, "class polynomial does not belong to N = " + std::to_string(N));

    i64 const dM = (N % 4 == 3) ? -N : -4 * N;
    bool const split = kronecker(dM, static_cast<i64>(p)) == 1;
    bool const disc_divisible = (H.discPoly % bigint(p)) == 0;
    /* For N = 3 mod 8 the maximal-order CM points are fixed as well; they split exactly when 4p = x^2 + N y^2. */
    bool const maximal_extra = (N % 8 == 3);

    SNResult r;
    if (p == 2 && disc_divisible) {
        r.value = Tri::undetermined;
        r.test = "RootModP";
        r.reason = "DiscPolyDivisible";
        return r;
    }
    auto as_tri = [](bool b) { return b ? Tri::yes : Tri::no; };
    if (split) {
        bool value;
        if (!disc_divisible) {
            r.test = "SplitsCompletely";
            value = fp_splits_completely(H.mod(p));
        } else {
            r.test = "PrincipalForm";
            value = represents(principal_form(-4 * N), p);
        }
        if (!value && maximal_extra && p != 2) {
            if (represents(principal_form(-N), p)) {
                value = true;
                r.test = "MaximalOrderPrincipalForm";
            }
        }
        r.value = as_tri(value);
        return r;
    }
    if (!disc_divisible) {
        r.test = "RootModP";
        r.value = as_tri(fp_root_count(H.mod(p)) > 0);
        return r;
    }
    r.test = "GenusCharacters";
    bool all = true;
    for (i64 g : genus_field(N))
        all = all && kronecker(g, static_cast<i64>(p)) == (g < 0 ? -1 : 1);
    r.value = as_tri(all);
    return r;
}

} // namespace xdn
