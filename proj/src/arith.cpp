#include "xdn/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "xdn/error.hpp"

namespace xdn {

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m)
{
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m)
{
    i64 t = 0, nt = 1;
    i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
    while (nr != 0) {
        i64 q = r / nr;
        i64 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1)
        throw error(errc::invalid_argument, "element is not invertible modulo " + std::to_string(m));
    return static_cast<u64>(t < 0 ? t + static_cast<i64>(m) : t);
}

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    static u64 const small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : small) {
        if (n % q == 0)
            return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : small) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

u64 next_prime(u64 n)
{
    u64 q = n + 1;
    while (!is_prime(q))
        ++q;
    return q;
}

std::vector<u64> primes_up_to(u64 bound)
{
    std::vector<u64> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(bound + 1, false);
    for (u64 i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (u64 j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

u64 isqrt(u64 n)
{
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

bool is_square(u64 n)
{
    u64 r = isqrt(n);
    return r * r == n;
}

factor_config const & default_factor_config()
{
    static factor_config const cfg;
    return cfg;
}

namespace {

u64 pollard_brent(u64 n)
{
    if (n % 2 == 0)
        return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 const m = 64;
        u64 r = 1;
        auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = step(y);
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_rec(u64 n, std::vector<u64> & out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 g = pollard_brent(n);
    factor_rec(g, out);
    factor_rec(n / g, out);
}

} // namespace

std::vector<std::pair<u64, int>> factor(i64 n, factor_config const & cfg)
{
    if (n == 0)
        throw error(errc::invalid_argument, "cannot factor zero");
    u64 m = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    if (m > cfg.max_abs)
        throw error(errc::too_large, "|" + std::to_string(n) + "| exceeds the factorization bound");
    std::vector<u64> ps;
    for (u64 q = 2; q <= cfg.trial_bound && q * q <= m; q += (q == 2 ? 1 : 2)) {
        while (m % q == 0) {
            ps.push_back(q);
            m /= q;
        }
    }
    factor_rec(m, ps);
    std::sort(ps.begin(), ps.end());
    std::vector<std::pair<u64, int>> out;
    for (u64 q : ps) {
        if (!out.empty() && out.back().first == q)
            ++out.back().second;
        else
            out.emplace_back(q, 1);
    }
    return out;
}

bool SquarefreeInt::divisible_by(u64 p) const
{
    return std::binary_search(primes.begin(), primes.end(), p);
}

SquarefreeInt factor_squarefree(i64 n, factor_config const & cfg)
{
    SquarefreeInt s;
    s.value = n;
    s.sign = n < 0 ? -1 : 1;
    for (auto const & [q, e] : factor(n, cfg)) {
        if (e > 1)
            throw error(errc::not_squarefree, std::to_string(n) + " is divisible by " + std::to_string(q) + "^2");
        s.primes.push_back(q);
    }
    return s;
}

bool is_squarefree(i64 n)
{
    if (n == 0)
        return false;
    for (auto const & fe : factor(n)) {
        if (fe.second > 1)
            return false;
    }
    return true;
}

int kronecker(i64 a, i64 n)
{
    /* (a/2) as a function of a mod 8 */
    static int const tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0)
        return 0;
    int v = 0;
    while ((n & 1) == 0) {
        n /= 2;
        ++v;
    }
    int k = (v % 2 == 0) ? 1 : tab2[a & 7];
    if (n < 0) {
        n = -n;
        if (a < 0)
            k = -k;
    }
    /* n is now odd and positive */
    i64 b = n;
    a %= b;
    if (a < 0)
        a += b;
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1)
            k *= tab2[b & 7];
        if ((a & b & 2) != 0)
            k = -k;
        i64 r = a;
        a = b % r;
        b = r;
    }
    return b == 1 ? k : 0;
}

std::string Place::str() const
{
    return is_infinite() ? std::string("inf") : std::to_string(p);
}

int valuation(i64 a, u64 p, i64 * unit)
{
    if (a == 0)
        throw error(errc::invalid_argument, "valuation of zero");
    int v = 0;
    i64 const q = static_cast<i64>(p);
    while (a % q == 0) {
        a /= q;
        ++v;
    }
    if (unit)
        *unit = a;
    return v;
}

int hilbert_local(i64 a, i64 b, Place place)
{
    if (a == 0 || b == 0)
        throw error(errc::invalid_argument, "Hilbert symbol needs nonzero arguments");
    if (place.is_infinite())
        return (a > 0 || b > 0) ? 1 : -1;
    u64 const p = place.p;
    i64 u, v;
    int const alpha = valuation(a, p, &u);
    int const beta = valuation(b, p, &v);
    if (p == 2) {
        auto eps = [](i64 t) { return ((t % 4 + 4) % 4 == 3) ? 1 : 0; };
        auto omega = [](i64 t) {
            i64 r = (t % 8 + 8) % 8;
            return (r == 3 || r == 5) ? 1 : 0;
        };
        int e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
        return (e % 2 == 0) ? 1 : -1;
    }
    i64 const q = static_cast<i64>(p);
    int s = 1;
    if ((alpha * beta) % 2 == 1 && ((q - 1) / 2) % 2 == 1)
        s = -s;
    if (beta % 2 == 1)
        s *= kronecker(u, q);
    if (alpha % 2 == 1)
        s *= kronecker(v, q);
    return s;
}

std::vector<Place> hilbert_support(i64 a, i64 b)
{
    std::vector<Place> out{Place::infinity(), Place::prime(2)};
    std::vector<u64> ps;
    for (auto const & fe : factor(a))
        ps.push_back(fe.first);
    for (auto const & fe : factor(b))
        ps.push_back(fe.first);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (u64 q : ps) {
        if (q != 2)
            out.push_back(Place::prime(q));
    }
    return out;
}

int hilbert_global(i64 a, i64 b)
{
    for (Place const & v : hilbert_support(a, b)) {
        if (hilbert_local(a, b, v) == -1)
            return -1;
    }
    return 1;
}

i64 quadratic_discriminant(i64 d)
{
    if (d == 1 || d == 0)
        throw error(errc::invalid_argument, "Q(sqrt " + std::to_string(d) + ") is not a quadratic field");
    return ((d % 4 + 4) % 4 == 1) ? d : 4 * d;
}

char const * splitting_name(Splitting s)
{
    switch (s) {
    case Splitting::split: return "Split";
    case Splitting::inert: return "Inert";
    case Splitting::ramified: return "Ramified";
    }
    return "?";
}

Splitting splitting_type(i64 d, u64 p)
{
    i64 const D = quadratic_discriminant(d);
    if (D % static_cast<i64>(p) == 0)
        return Splitting::ramified;
    return kronecker(D, static_cast<i64>(p)) == 1 ? Splitting::split : Splitting::inert;
}

Splitting splitting_type(SquarefreeInt const & d, u64 p)
{
    return splitting_type(d.value, p);
}

} // namespace xdn
