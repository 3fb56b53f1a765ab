#include "xdn/fpk.hpp"

#include "xdn/error.hpp"

namespace xdn {

namespace {

u64 checked_power(u64 p, int k)
{
    u64 q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > (1ULL << 62) / p)
            throw error(errc::too_large, "field of size " + std::to_string(p) + "^" + std::to_string(k) + " is too large");
        q *= p;
    }
    return q;
}

FpPoly first_irreducible(u64 p, int k)
{
    if (k < 1)
        throw error(errc::invalid_argument, "extension degree must be positive");
    std::vector<u64> c(k + 1, 0);
    c[k] = 1;
    u64 const count = checked_power(p, k);
    for (u64 idx = 0; idx < count; ++idx) {
        u64 t = idx;
        for (int i = 0; i < k; ++i) {
            c[i] = t % p;
            t /= p;
        }
        FpPoly g(p, c);
        if (is_irreducible(g))
            return g;
    }
    throw error(errc::invalid_argument, "no irreducible polynomial found");
}

} // namespace

Fq::Fq(u64 p, int k)
    : Fq(first_irreducible(p, k))
{
}

Fq::Fq(FpPoly modulus)
    : p_(modulus.modulus()), mod_(modulus.monic()), k_(modulus.degree()), size_(checked_power(modulus.modulus(), modulus.degree()))
{
    if (k_ < 1)
        throw error(errc::invalid_argument, "field modulus must have positive degree");
}

Fq::elem Fq::from_int(i64 a) const
{
    elem e(k_, 0);
    e[0] = reduce_signed(a, p_);
    return e;
}

Fq::elem Fq::gen() const
{
    if (k_ == 1)
        return elem{mod_.is_zero() ? 0 : (p_ - mod_[0]) % p_};
    elem e(k_, 0);
    e[1] = 1;
    return e;
}

Fq::elem Fq::element(u64 index) const
{
    elem e(k_, 0);
    for (int i = 0; i < k_; ++i) {
        e[i] = index % p_;
        index /= p_;
    }
    return e;
}

Fq::elem Fq::add(elem const & a, elem const & b) const
{
    elem r(k_);
    for (int i = 0; i < k_; ++i) {
        u64 s = a[i] + b[i];
        r[i] = s >= p_ ? s - p_ : s;
    }
    return r;
}

Fq::elem Fq::sub(elem const & a, elem const & b) const
{
    elem r(k_);
    for (int i = 0; i < k_; ++i)
        r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
    return r;
}

Fq::elem Fq::neg(elem const & a) const
{
    elem r(k_);
    for (int i = 0; i < k_; ++i)
        r[i] = a[i] == 0 ? 0 : p_ - a[i];
    return r;
}

Fq::elem Fq::scale(elem const & a, u64 c) const
{
    elem r(k_);
    c %= p_;
    for (int i = 0; i < k_; ++i)
        r[i] = mulmod(a[i], c, p_);
    return r;
}

Fq::elem Fq::mul(elem const & a, elem const & b) const
{
    std::vector<u64> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < k_; ++j) {
            if (b[j] == 0)
                continue;
            u64 s = prod[i + j] + mulmod(a[i], b[j], p_);
            prod[i + j] = s >= p_ ? s - p_ : s;
        }
    }
    /* reduce by the monic modulus from the top */
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        u64 const c = prod[d];
        if (c == 0)
            continue;
        prod[d] = 0;
        for (int i = 0; i < k_; ++i) {
            u64 const t = mulmod(c, mod_[i], p_);
            u64 & slot = prod[d - k_ + i];
            slot = slot >= t ? slot - t : slot + p_ - t;
        }
    }
    prod.resize(k_);
    return prod;
}

Fq::elem Fq::pow(elem const & a, u64 e) const
{
    elem result = one();
    elem base = a;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        e >>= 1;
        if (e > 0)
            base = mul(base, base);
    }
    return result;
}

Fq::elem Fq::inv(elem const & a) const
{
    if (is_zero(a))
        throw error(errc::invalid_argument, "inverse of zero");
    return pow(a, size_ - 2);
}

bool Fq::is_zero(elem const & a) const
{
    for (u64 c : a) {
        if (c != 0)
            return false;
    }
    return true;
}

bool Fq::in_prime_field(elem const & a) const
{
    for (int i = 1; i < k_; ++i) {
        if (a[i] != 0)
            return false;
    }
    return true;
}

std::vector<Fq::elem> Fq::roots(elem const & v, u64 r) const
{
    if (is_zero(v))
        return {zero()};
    u64 const q1 = size_ - 1;
    if (q1 % r != 0) {
        /* r-th powering is a bijection */
        u64 t = q1;
        u64 const e = static_cast<u64>(invmod(r % t, t));
        return {pow(v, e)};
    }
    if (pow(v, q1 / r) != one())
        return {};
    u64 t = q1;
    int s = 0;
    u64 rs = 1;
    while (t % r == 0) {
        t /= r;
        ++s;
        rs *= r;
    }
    if (rs > 20000000)
        throw error(errc::too_large, "Sylow subgroup too large for root extraction");
    /* generator of the r-Sylow subgroup */
    elem g;
    for (u64 idx = 1; idx < size_; ++idx) {
        elem z = element(idx);
        if (pow(z, q1 / r) != one()) {
            g = pow(z, t);
            break;
        }
    }
    u64 const alpha = (t == 1) ? 0 : invmod(r % t, t);
    elem const x1 = pow(v, alpha);
    elem const c = div(v, pow(x1, r)); /* lies in the Sylow subgroup */
    elem gp = one();
    u64 e = 0;
    for (; e < rs; ++e) {
        if (gp == c)
            break;
        gp = mul(gp, g);
    }
    if (e == rs || e % r != 0)
        return {};
    elem const x = mul(x1, pow(g, e / r));
    elem const zeta = pow(g, rs / r);
    std::vector<elem> out;
    elem cur = x;
    for (u64 i = 0; i < r; ++i) {
        out.push_back(cur);
        cur = mul(cur, zeta);
    }
    return out;
}

std::vector<Fq::elem> Fq::roots_by_search(std::vector<elem> const & poly, u64 max_size) const
{
    if (size_ > max_size)
        throw error(errc::too_large, "field too large for exhaustive root search");
    std::vector<elem> out;
    for (u64 idx = 0; idx < size_; ++idx) {
        elem const x = element(idx);
        elem acc = zero();
        for (std::size_t i = poly.size(); i-- > 0;)
            acc = add(mul(acc, x), poly[i]);
        if (is_zero(acc))
            out.push_back(x);
    }
    return out;
}

Fq::elem Fq::eval(FpPoly const & f, elem const & x) const
{
    elem acc = zero();
    for (int i = f.degree(); i >= 0; --i) {
        acc = mul(acc, x);
        acc[0] = (acc[0] + f[i]) % p_;
    }
    return acc;
}

} // namespace xdn
