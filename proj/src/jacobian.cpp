#include "xdn/jacobian.hpp"

#include <cctype>
#include <sstream>

#include "xdn/error.hpp"

namespace xdn {

namespace {

u64 sqrt_mod(u64 a, u64 p)
{
    a %= p;
    if (a == 0)
        return 0;
    auto r = fp_roots(FpPoly(p, {(p - a) % p, 0, 1}));
    if (r.empty())
        throw error(errc::non_split_prime, "not a square modulo " + std::to_string(p));
    return r.front();
}

} // namespace

HyperellipticCurveFp HyperellipticCurveFp::make(FpPoly f)
{
    u64 const p = f.modulus();
    if (p < 3 || !is_prime(p))
        throw error(errc::invalid_argument, "genus-2 curves need an odd prime field");
    if (f.degree() != 6)
        throw error(errc::bad_reduction, "the sextic drops degree modulo " + std::to_string(p));
    if (!is_squarefree(f))
        throw error(errc::bad_reduction, "the sextic is not squarefree modulo " + std::to_string(p));

    HyperellipticCurveFp C;
    C.p = p;
    C.f = f;
    C.lead_root = sqrt_mod(f.lead(), p);

    /* V = l x^3 + c2 x^2 + c1 x + c0 matching f in degrees 6..3 */
    u64 const l = C.lead_root;
    u64 const inv2l = invmod(mulmod(2, l, p), p);
    u64 const c2 = mulmod(f[5], inv2l, p);
    u64 const c1 = mulmod((f[4] + p - mulmod(c2, c2, p)) % p, inv2l, p);
    u64 const c0 = mulmod((f[3] + p - mulmod(2, mulmod(c2, c1, p), p)) % p, inv2l, p);
    C.V = FpPoly(p, {c0, c1, c2, l});
    return C;
}

std::string CurvePoint::str() const
{
    std::ostringstream os;
    os << '(' << x << " : " << y << " : " << z << ')';
    return os.str();
}

MumfordDivisor make_divisor(HyperellipticCurveFp const & C, FpPoly u, FpPoly v, int n, int m)
{
    if (u.modulus() != C.p || v.modulus() != C.p)
        throw error(errc::degenerate_divisor, "divisor and curve live over different fields");
    if (u.is_zero() || u.lead() != 1)
        throw error(errc::degenerate_divisor, "u must be monic");
    v = v % u;
    if (!((v * v - C.f) % u).is_zero())
        throw error(errc::degenerate_divisor, "u does not divide v^2 - f");
    /* f squarefree makes every such pair semi-reduced: a double root a of u with v(a) = 0 would force (x - a)^2 | f */
    MumfordDivisor D;
    D.u = std::move(u);
    D.v = std::move(v);
    D.n = n;
    D.m = m;
    return D;
}

MumfordDivisor jac_identity(HyperellipticCurveFp const & C)
{
    MumfordDivisor D;
    D.u = FpPoly::constant(C.p, 1);
    D.v = FpPoly(C.p);
    D.n = 1;
    D.m = 1;
    return D;
}

bool jac_is_identity(MumfordDivisor const & D)
{
    return D.u.degree() == 0 && D.n == 1 && D.m == 1;
}

namespace {

/* Cantor composition of the affine parts; the point-at-infinity weights follow the removed pairs. */
MumfordDivisor compose(HyperellipticCurveFp const & C, MumfordDivisor const & A, MumfordDivisor const & B)
{
    FpPoly e1, e2, c1, c2;
    FpPoly const d0 = xgcd(A.u, B.u, e1, e2);
    FpPoly const d = xgcd(d0, A.v + B.v, c1, c2);
    FpPoly const s1 = c1 * e1;
    FpPoly const s2 = c1 * e2;
    FpPoly const & s3 = c2;

    MumfordDivisor R;
    R.u = (A.u * B.u) / (d * d);
    FpPoly const num = s1 * A.u * B.v + s2 * B.u * A.v + s3 * (A.v * B.v + C.f);
    R.v = (num / d) % R.u;
    R.n = A.n + B.n + d.degree() - 1;
    R.m = A.m + B.m + d.degree() - 1;
    return R;
}

int deg_or(FpPoly const & g, int fallback)
{
    return g.is_zero() ? fallback : g.degree();
}

/*
 * Replace the affine part A by iota(A'), where div(y - w) = A + A' - a inf_plus - b inf_minus
 * and w = v mod u is chosen close to sigma * V so that A' has degree at most 2.
 */
void flip(HyperellipticCurveFp const & C, MumfordDivisor & D, int sigma)
{
    FpPoly const & V = C.V;
    FpPoly w = sigma > 0 ? V - ((V - D.v) % D.u) : -V + ((V + D.v) % D.u);
    FpPoly const g = C.f - w * w;
    FpPoly q, r;
    divmod(g, D.u, q, r);
    if (!r.is_zero())
        throw error(errc::degenerate_divisor, "u does not divide f - w^2");
    int const degR = (C.f - V * V).degree();
    int const a = deg_or(V - w, degR - 3);
    int const b = deg_or(V + w, degR - 3);
    FpPoly const u2 = q.monic();
    int const k = u2.degree();
    D.n += a - k;
    D.m += b - k;
    D.u = u2;
    D.v = (-w) % u2;
}

} // namespace

MumfordDivisor jac_reduce(HyperellipticCurveFp const & C, MumfordDivisor D)
{
    if (D.degree() != 0)
        throw error(errc::invalid_argument, "only degree-0 classes have a reduced form");
    for (int iter = 0; iter < 64; ++iter) {
        int const du = D.u.degree();
        if (du <= 2 && D.n >= 0 && D.m >= 0)
            return D;
        int sigma;
        if (du > 2)
            sigma = D.n < D.m ? -1 : 1;
        else
            sigma = D.n < 0 ? -1 : 1;
        flip(C, D, sigma);
    }
    throw error(errc::degenerate_divisor, "reduction did not terminate");
}

MumfordDivisor jac_add(HyperellipticCurveFp const & C, MumfordDivisor const & A, MumfordDivisor const & B)
{
    MumfordDivisor R = compose(C, A, B);
    if (R.degree() == 0)
        return jac_reduce(C, std::move(R));
    return R;
}

MumfordDivisor jac_neg(HyperellipticCurveFp const & C, MumfordDivisor const & D)
{
    (void)C;
    int const delta = D.degree();
    MumfordDivisor R;
    R.u = D.u;
    R.v = -D.v;
    R.n = D.m - delta;
    R.m = D.n - delta;
    return R;
}

MumfordDivisor jac_scalar(HyperellipticCurveFp const & C, i64 k, MumfordDivisor const & D)
{
    if (D.degree() != 0)
        throw error(errc::invalid_argument, "scalar multiples need a degree-0 class");
    MumfordDivisor base = k < 0 ? jac_neg(C, D) : D;
    u64 e = k < 0 ? static_cast<u64>(-(k + 1)) + 1 : static_cast<u64>(k);
    MumfordDivisor acc = jac_identity(C);
    while (e > 0) {
        if (e & 1)
            acc = jac_add(C, acc, base);
        e >>= 1;
        if (e > 0)
            base = jac_add(C, base, base);
    }
    return acc;
}

u64 weil_bound(u64 p)
{
    /* (1 + sqrt p)^4 = (1 + p)^2 + 4p + 4 (1 + p) sqrt p */
    u64 const q = 1 + p;
    return q * q + 4 * p + isqrt(16 * p * q * q);
}

u64 jac_order(HyperellipticCurveFp const & C, MumfordDivisor const & D)
{
    if (D.degree() != 0)
        throw error(errc::invalid_argument, "order of a class that is not of degree 0");
    u64 const cap = weil_bound(C.p);
    MumfordDivisor Q = jac_reduce(C, D);
    for (u64 k = 1; k <= cap; ++k) {
        if (jac_is_identity(Q))
            return k;
        Q = jac_add(C, Q, D);
    }
    throw error(errc::degenerate_divisor, "order exceeds the Weil bound");
}

MumfordDivisor point_class(HyperellipticCurveFp const & C, CurvePoint const & P)
{
    MumfordDivisor D = jac_identity(C);
    if (P.at_infinity()) {
        if (P.y == C.lead_root % C.p)
            D.n = 2;
        else
            D.m = 2;
        return D;
    }
    return make_divisor(C, FpPoly::linear(C.p, P.x), FpPoly::constant(C.p, P.y), 1, 1);
}

MumfordDivisor point_pair_class(HyperellipticCurveFp const & C, CurvePoint const & P1, CurvePoint const & P2)
{
    MumfordDivisor S = compose(C, point_class(C, P1), point_class(C, P2));
    S.n -= 1;
    S.m -= 1;
    return jac_reduce(C, std::move(S));
}

namespace {

[[noreturn]] void parse_fail(std::string const & what, std::string const & text)
{
    throw error(errc::parse_error, what + ": '" + text + "'");
}

struct PolyParser {
    std::string const & s;
    u64 p;
    std::size_t i = 0;

    void skip()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }

    bool peek(char c)
    {
        skip();
        return i < s.size() && s[i] == c;
    }

    u64 integer()
    {
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            parse_fail("expected an integer", s);
        u64 acc = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            acc = (mulmod(acc, 10, p) + static_cast<u64>(s[i] - '0')) % p;
            ++i;
        }
        return acc;
    }

    int exponent()
    {
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            parse_fail("expected an exponent", s);
        int e = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            e = e * 10 + (s[i] - '0');
            if (e > 64)
                parse_fail("exponent too large", s);
            ++i;
        }
        return e;
    }

    /* x or x^e; returns the exponent */
    int monomial()
    {
        skip();
        if (i >= s.size() || s[i] != 'x')
            parse_fail("expected x", s);
        ++i;
        if (peek('^')) {
            ++i;
            return exponent();
        }
        return 1;
    }

    FpPoly parse()
    {
        std::vector<u64> c;
        bool first = true;
        skip();
        if (i >= s.size())
            parse_fail("empty polynomial", s);
        while (true) {
            skip();
            if (i >= s.size())
                break;
            bool neg = false;
            if (s[i] == '+' || s[i] == '-') {
                neg = s[i] == '-';
                ++i;
            } else if (!first) {
                parse_fail("expected + or -", s);
            }
            first = false;
            u64 coef = 1;
            int e = 0;
            skip();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coef = integer();
                if (peek('/')) {
                    ++i;
                    u64 const den = integer();
                    if (den == 0)
                        throw error(errc::bad_reduction, "denominator divisible by " + std::to_string(p));
                    coef = mulmod(coef, invmod(den, p), p);
                }
                if (peek('*')) {
                    ++i;
                    e = monomial();
                } else if (peek('x')) {
                    e = monomial();
                }
            } else {
                e = monomial();
            }
            if (neg)
                coef = (p - coef) % p;
            if (c.size() <= static_cast<std::size_t>(e))
                c.resize(e + 1, 0);
            c[e] = (c[e] + coef) % p;
        }
        return FpPoly(p, c);
    }
};

std::vector<std::string> split_fields(std::string const & body)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : body) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int small_int(std::string const & t, std::string const & text)
{
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(t, &pos);
    } catch (std::exception const &) {
        parse_fail("expected an integer field", text);
    }
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos])))
        ++pos;
    if (pos != t.size())
        parse_fail("expected an integer field", text);
    return v;
}

} // namespace

FpPoly parse_fp_polynomial(std::string const & text, u64 p)
{
    PolyParser P{text, p};
    return P.parse();
}

MumfordDivisor parse_mumford(std::string const & text, u64 p)
{
    std::size_t const lo = text.find('<');
    std::size_t const hi = text.rfind('>');
    if (lo == std::string::npos || hi == std::string::npos || hi < lo)
        parse_fail("divisor must be written <u, v, k>", text);
    for (std::size_t i = 0; i < text.size(); ++i)
        if ((i < lo || i > hi) && !std::isspace(static_cast<unsigned char>(text[i])))
            parse_fail("trailing characters around divisor", text);
    auto fields = split_fields(text.substr(lo + 1, hi - lo - 1));
    if (fields.size() != 3 && fields.size() != 5)
        parse_fail("divisor needs 3 or 5 fields", text);
    MumfordDivisor D;
    D.u = parse_fp_polynomial(fields[0], p);
    D.v = parse_fp_polynomial(fields[1], p);
    int const k = small_int(fields[2], text);
    if (k != D.u.degree())
        parse_fail("degree tag differs from deg u", text);
    if (fields.size() == 5) {
        D.n = small_int(fields[3], text);
        D.m = small_int(fields[4], text);
    } else {
        D.n = D.m = 1 - k / 2;
    }
    return D;
}

MumfordDivisor parse_mumford(HyperellipticCurveFp const & C, std::string const & text, u64 y_scale)
{
    MumfordDivisor const raw = parse_mumford(text, C.p);
    MumfordDivisor D = make_divisor(C, raw.u, raw.v.scaled(y_scale % C.p), raw.n, raw.m);
    if (D.degree() == 0)
        D = jac_reduce(C, std::move(D));
    return D;
}

std::string print_mumford(MumfordDivisor const & D)
{
    int const k = D.u.degree();
    std::ostringstream os;
    os << '<' << D.u.str() << ", " << D.v.str() << ", " << k;
    if (!(D.n == 1 - k / 2 && D.m == D.n))
        os << ", " << D.n << ", " << D.m;
    os << '>';
    return os.str();
}

} // namespace xdn
