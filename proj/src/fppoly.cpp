#include "xdn/fppoly.hpp"

#include <algorithm>
#include <sstream>

#include "xdn/error.hpp"

namespace xdn {

namespace {

void check_same_field(FpPoly const & a, FpPoly const & b)
{
    if (a.modulus() != b.modulus())
        throw error(errc::invalid_argument, "polynomials over different prime fields");
}

inline u64 addm(u64 a, u64 b, u64 p)
{
    u64 s = a + b;
    return s >= p ? s - p : s;
}

inline u64 subm(u64 a, u64 b, u64 p)
{
    return a >= b ? a - b : a + p - b;
}

} // namespace

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs))
{
    for (auto & a : c_)
        a %= p_;
    trim();
}

void FpPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

FpPoly FpPoly::from_signed(u64 p, std::vector<i64> const & coeffs)
{
    std::vector<u64> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[i] = reduce_signed(coeffs[i], p);
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::constant(u64 p, u64 a)
{
    return FpPoly(p, std::vector<u64>{a});
}

FpPoly FpPoly::x(u64 p)
{
    return FpPoly(p, std::vector<u64>{0, 1});
}

FpPoly FpPoly::linear(u64 p, u64 r)
{
    return FpPoly(p, std::vector<u64>{(p - r % p) % p, 1});
}

void FpPoly::set(std::size_t i, u64 a)
{
    if (c_.size() <= i)
        c_.resize(i + 1, 0);
    c_[i] = a % p_;
    trim();
}

u64 FpPoly::eval(u64 a) const
{
    u64 r = 0;
    a %= p_;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = addm(mulmod(r, a, p_), c_[i], p_);
    return r;
}

FpPoly FpPoly::monic() const
{
    if (c_.empty())
        return *this;
    return scaled(xdn::invmod(c_.back(), p_));
}

FpPoly FpPoly::derivative() const
{
    std::vector<u64> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(mulmod(c_[i], i % p_, p_));
    return FpPoly(p_, std::move(d));
}

FpPoly FpPoly::scaled(u64 a) const
{
    std::vector<u64> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        d[i] = mulmod(c_[i], a % p_, p_);
    return FpPoly(p_, std::move(d));
}

FpPoly operator+(FpPoly const & a, FpPoly const & b)
{
    check_same_field(a, b);
    u64 const p = a.p_;
    std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = addm(a[i], b[i], p);
    return FpPoly(p, std::move(c));
}

FpPoly operator-(FpPoly const & a, FpPoly const & b)
{
    check_same_field(a, b);
    u64 const p = a.p_;
    std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = subm(a[i], b[i], p);
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::operator-() const
{
    return FpPoly(p_) - *this;
}

FpPoly operator*(FpPoly const & a, FpPoly const & b)
{
    check_same_field(a, b);
    u64 const p = a.p_;
    if (a.is_zero() || b.is_zero())
        return FpPoly(p);
    std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
    /* accumulate unreduced products; flush before the 128-bit sum can overflow */
    unsigned __int128 const limit = static_cast<unsigned __int128>(1) << 126;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
            if (acc[i + j] >= limit)
                acc[i + j] %= p;
        }
    }
    std::vector<u64> c(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
        c[i] = static_cast<u64>(acc[i] % p);
    return FpPoly(p, std::move(c));
}

std::string FpPoly::str(char var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1)
            os << c_[i];
        if (i > 0) {
            if (c_[i] != 1)
                os << '*';
            os << var;
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

void divmod(FpPoly const & a, FpPoly const & b, FpPoly & q, FpPoly & r)
{
    check_same_field(a, b);
    if (b.is_zero())
        throw error(errc::invalid_argument, "polynomial division by zero");
    u64 const p = a.modulus();
    std::vector<u64> rem = a.coeffs();
    int const db = b.degree();
    int const da = a.degree();
    if (da < db) {
        q = FpPoly(p);
        r = a;
        return;
    }
    std::vector<u64> quo(da - db + 1, 0);
    u64 const inv = invmod(b.lead(), p);
    auto const & bc = b.coeffs();
    for (int i = da; i >= db; --i) {
        u64 const t = mulmod(rem[i], inv, p);
        if (t == 0)
            continue;
        quo[i - db] = t;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = subm(rem[i - db + j], mulmod(t, bc[j], p), p);
    }
    rem.resize(db);
    q = FpPoly(p, std::move(quo));
    r = FpPoly(p, std::move(rem));
}

FpPoly operator/(FpPoly const & a, FpPoly const & b)
{
    FpPoly q, r;
    divmod(a, b, q, r);
    return q;
}

FpPoly operator%(FpPoly const & a, FpPoly const & b)
{
    FpPoly q, r;
    divmod(a, b, q, r);
    return r;
}

FpPoly gcd(FpPoly const & a, FpPoly const & b)
{
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FpPoly xgcd(FpPoly const & a, FpPoly const & b, FpPoly & s, FpPoly & t)
{
    u64 const p = a.modulus();
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = FpPoly::constant(p, 1), s1(p);
    FpPoly t0(p), t1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        FpPoly q, r;
        divmod(r0, r1, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly ns = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(ns);
        FpPoly nt = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (r0.is_zero()) {
        s = s0;
        t = t0;
        return r0;
    }
    u64 const inv = invmod(r0.lead(), p);
    s = s0.scaled(inv);
    t = t0.scaled(inv);
    return r0.scaled(inv);
}

FpPoly invmod(FpPoly const & a, FpPoly const & m)
{
    FpPoly s, t;
    FpPoly g = xgcd(a % m, m, s, t);
    if (g.degree() != 0)
        throw error(errc::invalid_argument, "polynomial is not invertible modulo the given modulus");
    return s % m;
}

FpPoly powmod(FpPoly const & base, u64 e, FpPoly const & m)
{
    u64 const p = m.modulus();
    FpPoly r = FpPoly::constant(p, 1) % m;
    FpPoly b = base % m;
    while (e) {
        if (e & 1)
            r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

FpPoly compose_mod(FpPoly const & g, FpPoly const & h, FpPoly const & m)
{
    u64 const p = m.modulus();
    FpPoly r(p);
    FpPoly const hm = h % m;
    for (int i = g.degree(); i >= 0; --i)
        r = (r * hm + FpPoly::constant(p, g[i])) % m;
    return r;
}

u64 resultant(FpPoly const & f, FpPoly const & g)
{
    u64 const p = f.modulus();
    if (f.is_zero() || g.is_zero())
        return 0;
    FpPoly a = f, b = g;
    u64 acc = 1;
    while (b.degree() > 0) {
        FpPoly r = a % b;
        if (r.is_zero())
            return 0;
        int const da = a.degree(), db = b.degree(), dr = r.degree();
        if ((static_cast<long>(da) * db) % 2 == 1)
            acc = (p - acc) % p;
        acc = mulmod(acc, powmod(b.lead(), static_cast<u64>(da - dr), p), p);
        a = std::move(b);
        b = std::move(r);
    }
    return mulmod(acc, powmod(b.lead(), static_cast<u64>(a.degree()), p), p);
}

bool is_squarefree(FpPoly const & f)
{
    if (f.degree() <= 0)
        return true;
    FpPoly const d = f.derivative();
    if (d.is_zero())
        return false;
    return gcd(f, d).degree() == 0;
}

bool is_irreducible(FpPoly const & f)
{
    int const n = f.degree();
    if (n <= 0)
        return false;
    if (n == 1)
        return true;
    if (!is_squarefree(f))
        return false;
    auto const dd = distinct_degree_factor(f.monic());
    return dd.size() == 1 && dd[0].first == n;
}

int fp_root_count(FpPoly const & f)
{
    if (f.is_zero())
        throw error(errc::invalid_argument, "root count of the zero polynomial");
    if (f.degree() == 0)
        return 0;
    u64 const p = f.modulus();
    FpPoly const xp = powmod(FpPoly::x(p), p, f);
    return gcd(xp - FpPoly::x(p), f).degree();
}

bool fp_splits_completely(FpPoly const & f)
{
    if (f.is_zero())
        throw error(errc::invalid_argument, "splitting test of the zero polynomial");
    if (f.degree() == 0)
        return true;
    if (!is_squarefree(f))
        return false;
    u64 const p = f.modulus();
    FpPoly const xp = powmod(FpPoly::x(p), p, f);
    return ((xp - FpPoly::x(p)) % f).is_zero();
}

std::vector<std::pair<int, FpPoly>> distinct_degree_factor(FpPoly const & f)
{
    u64 const p = f.modulus();
    std::vector<std::pair<int, FpPoly>> out;
    FpPoly rest = f.monic();
    FpPoly const x = FpPoly::x(p);
    FpPoly h = x;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = powmod(h, p, rest);
        FpPoly g = gcd(h - x, rest);
        if (g.degree() > 0) {
            out.emplace_back(d, g);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0)
        out.emplace_back(rest.degree(), rest);
    return out;
}

std::vector<FpPoly> equal_degree_factor(FpPoly const & g, int d, std::mt19937_64 & rng)
{
    u64 const p = g.modulus();
    FpPoly const gm = g.monic();
    if (gm.degree() == d)
        return {gm};
    if (gm.degree() <= 0)
        return {};
    int const n = gm.degree();
    for (;;) {
        std::vector<u64> rc(n);
        for (auto & a : rc)
            a = rng() % p;
        FpPoly r(p, rc);
        if (r.degree() <= 0)
            continue;
        FpPoly w;
        if (p == 2) {
            /* trace map r + r^2 + ... + r^(2^(d-1)) */
            w = r;
            FpPoly s = r;
            for (int i = 1; i < d; ++i) {
                s = (s * s) % gm;
                w = w + s;
            }
        } else {
            /* r^((p^d-1)/2) = (r * r^p * ... * r^(p^(d-1)))^((p-1)/2) */
            FpPoly t = r % gm, s = r % gm;
            for (int i = 1; i < d; ++i) {
                s = powmod(s, p, gm);
                t = (t * s) % gm;
            }
            w = powmod(t, (p - 1) / 2, gm) - FpPoly::constant(p, 1);
        }
        FpPoly f1 = gcd(w, gm);
        if (f1.degree() > 0 && f1.degree() < n) {
            auto a = equal_degree_factor(f1, d, rng);
            auto b = equal_degree_factor(gm / f1, d, rng);
            a.insert(a.end(), b.begin(), b.end());
            return a;
        }
    }
}

namespace {

bool poly_less(FpPoly const & a, FpPoly const & b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return false;
}

} // namespace

std::vector<FpPoly> irreducible_factors(FpPoly const & f)
{
    if (!is_squarefree(f))
        throw error(errc::invalid_argument, "irreducible_factors expects a squarefree polynomial");
    std::mt19937_64 rng(0x5eedULL + f.modulus());
    std::vector<FpPoly> out;
    for (auto const & [d, g] : distinct_degree_factor(f)) {
        auto parts = equal_degree_factor(g, d, rng);
        out.insert(out.end(), parts.begin(), parts.end());
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<u64> fp_roots(FpPoly const & f)
{
    u64 const p = f.modulus();
    if (f.degree() <= 0)
        return {};
    FpPoly const xp = powmod(FpPoly::x(p), p, f);
    FpPoly const g = gcd(xp - FpPoly::x(p), f);
    std::vector<u64> out;
    if (g.degree() <= 0)
        return out;
    std::mt19937_64 rng(0x700fULL + p);
    for (auto const & lin : equal_degree_factor(g, 1, rng))
        out.push_back((p - lin[0]) % p);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace xdn
