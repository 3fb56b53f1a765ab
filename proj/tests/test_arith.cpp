#include <random>
#include <set>

#include "doctest.h"
#include "xdn/arith.hpp"
#include "xdn/error.hpp"
#include "xdn/fppoly.hpp"

using namespace xdn;

namespace {

int legendre_by_squares(i64 a, i64 p)
{
    i64 r = ((a % p) + p) % p;
    if (r == 0)
        return 0;
    for (i64 t = 1; t < p; ++t) {
        if ((t * t) % p == r)
            return 1;
    }
    return -1;
}

/* Primitive solvability of z^2 = a x^2 + b y^2 modulo p^k. */
bool conic_solvable_mod(i64 a, i64 b, i64 p, int k)
{
    i64 m = 1;
    for (int i = 0; i < k; ++i)
        m *= p;
    std::vector<bool> square(m, false);
    for (i64 z = 0; z < m; ++z)
        square[(z * z) % m] = true;
    for (i64 x = 0; x < m; ++x) {
        for (i64 y = 0; y < m; ++y) {
            if (x % p == 0 && y % p == 0)
                continue;
            i64 v = ((a % m + m) % m * ((x * x) % m) + (b % m + m) % m * ((y * y) % m)) % m;
            if (square[v])
                return true;
        }
    }
    return false;
}

/* Rational point search on z^2 = a x^2 + b y^2 inside the Legendre box. */
bool conic_has_rational_point(i64 a, i64 b)
{
    i64 const X = static_cast<i64>(isqrt(static_cast<u64>(std::abs(b)))) + 1;
    i64 const Y = static_cast<i64>(isqrt(static_cast<u64>(std::abs(a)))) + 1;
    for (i64 x = 0; x <= X; ++x) {
        for (i64 y = 0; y <= Y; ++y) {
            if (x == 0 && y == 0)
                continue;
            i64 v = a * x * x + b * y * y;
            if (v >= 0 && is_square(static_cast<u64>(v)))
                return true;
        }
    }
    return false;
}

} // namespace

TEST_SUITE("arith")
{
    TEST_CASE("factor_squarefree examples")
    {
        auto s = factor_squarefree(133);
        CHECK(s.sign == 1);
        CHECK(s.primes == std::vector<u64>{7, 19});
        auto t = factor_squarefree(-15);
        CHECK(t.sign == -1);
        CHECK(t.primes == std::vector<u64>{3, 5});
        CHECK_THROWS_AS(factor_squarefree(12), error);
        try {
            factor_squarefree(12);
        } catch (error const & e) {
            CHECK(e.code() == errc::not_squarefree);
        }
        factor_config small;
        small.max_abs = 1000;
        try {
            factor_squarefree(1001, small);
            CHECK(false);
        } catch (error const & e) {
            CHECK(e.code() == errc::too_large);
        }
    }

    TEST_CASE("factorization beyond trial division")
    {
        /* product of two primes above 10^6 forces Pollard rho */
        i64 const n = 1000003LL * 1000033LL;
        auto f = factor(n);
        REQUIRE(f.size() == 2);
        CHECK(f[0].first == 1000003);
        CHECK(f[1].first == 1000033);
        std::mt19937_64 rng(7);
        for (int i = 0; i < 200; ++i) {
            i64 m = static_cast<i64>(rng() % 1000000000000ULL) + 2;
            i64 prod = 1;
            for (auto const & [q, e] : factor(m)) {
                CHECK(is_prime(q));
                for (int j = 0; j < e; ++j)
                    prod *= static_cast<i64>(q);
            }
            CHECK(prod == m);
        }
    }

    TEST_CASE("primality agrees with a sieve")
    {
        auto ps = primes_up_to(20000);
        std::set<u64> s(ps.begin(), ps.end());
        for (u64 n = 0; n <= 20000; ++n)
            CHECK(is_prime(n) == (s.count(n) == 1));
        CHECK(is_prime(1000000007ULL));
        CHECK(!is_prime(3215031751ULL)); /* strong pseudoprime to bases 2, 3, 5, 7 */
    }

    TEST_CASE("kronecker examples")
    {
        CHECK(kronecker(3, 19) == -1);
        CHECK(kronecker(17, 23) == -1);
        for (i64 p : {3, 5, 7, 11, 13, 97})
            CHECK(kronecker(1, p) == 1);
        /* truth table of (a/2) */
        int const expect[8] = {0, 1, 0, -1, 0, -1, 0, 1};
        for (i64 a = -16; a <= 16; ++a)
            CHECK(kronecker(a, 2) == expect[((a % 8) + 8) % 8]);
        CHECK(kronecker(-1, -1) == -1);
        CHECK(kronecker(5, -1) == 1);
        CHECK(kronecker(1, 0) == 1);
        CHECK(kronecker(2, 0) == 0);
    }

    TEST_CASE("kronecker matches Legendre for odd primes")
    {
        for (u64 p : primes_up_to(200)) {
            if (p == 2)
                continue;
            for (i64 a = -250; a <= 250; ++a)
                CHECK(kronecker(a, static_cast<i64>(p)) == legendre_by_squares(a, static_cast<i64>(p)));
        }
    }

    TEST_CASE("kronecker multiplicativity and reciprocity")
    {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 3000; ++i) {
            i64 a = static_cast<i64>(rng() % 2001) - 1000;
            i64 b = static_cast<i64>(rng() % 2001) - 1000;
            i64 n = static_cast<i64>(rng() % 999) + 1;
            if (std::gcd(a * b, n) != 1)
                continue;
            CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
            i64 m = static_cast<i64>(rng() % 999) + 1;
            CHECK(kronecker(a, n * m) == kronecker(a, n) * kronecker(a, m));
        }
        auto ps = primes_up_to(400);
        for (int i = 0; i < 2000; ++i) {
            i64 p = static_cast<i64>(ps[1 + rng() % (ps.size() - 1)]);
            i64 q = static_cast<i64>(ps[1 + rng() % (ps.size() - 1)]);
            if (p == q)
                continue;
            int sign = (((p - 1) / 2) * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
            CHECK(kronecker(p, q) * kronecker(q, p) == sign);
        }
    }

    TEST_CASE("hilbert symbol examples")
    {
        CHECK(hilbert_local(133, 3, Place::prime(19)) == -1);
        CHECK(hilbert_local(133, 3, Place::prime(7)) == -1);
        CHECK(hilbert_local(5, -7, Place::infinity()) == 1);
        CHECK(hilbert_local(-5, -7, Place::infinity()) == -1);
        CHECK(hilbert_global(5, 29) == 1);
        CHECK(hilbert_global(133, 3) == -1);
        for (i64 d : {-7, 2, 3, 5, 17, -23})
            CHECK(hilbert_global(1, d) == 1);
    }

    TEST_CASE("hilbert local symbol matches conic solvability modulo prime powers")
    {
        std::vector<i64> vals;
        for (i64 a = -30; a <= 30; ++a) {
            if (a != 0 && is_squarefree(a))
                vals.push_back(a);
        }
        for (i64 a : vals) {
            for (i64 b : vals) {
                if (std::abs(a) > 12 || std::abs(b) > 12)
                    continue;
                CHECK(hilbert_local(a, b, Place::prime(2)) == (conic_solvable_mod(a, b, 2, 6) ? 1 : -1));
                for (i64 p : {3, 5, 7})
                    CHECK(hilbert_local(a, b, Place::prime(p)) == (conic_solvable_mod(a, b, p, 3) ? 1 : -1));
            }
        }
    }

    TEST_CASE("hilbert global symbol matches rational point search")
    {
        for (i64 a = -30; a <= 30; ++a) {
            for (i64 b = -30; b <= 30; ++b) {
                if (a == 0 || b == 0 || !is_squarefree(a) || !is_squarefree(b) || std::gcd(a, b) != 1)
                    continue;
                CHECK(hilbert_global(a, b) == (conic_has_rational_point(a, b) ? 1 : -1));
            }
        }
    }

    TEST_CASE("hilbert product formula on random pairs")
    {
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 10000; ++i) {
            i64 a = static_cast<i64>(rng() % 20001) - 10000;
            i64 b = static_cast<i64>(rng() % 20001) - 10000;
            if (a == 0 || b == 0)
                continue;
            int prod = 1;
            for (Place const & v : hilbert_support(a, b))
                prod *= hilbert_local(a, b, v);
            CHECK(prod == 1);
        }
    }

    TEST_CASE("splitting type")
    {
        CHECK(splitting_type(3, 19) == Splitting::inert);
        CHECK(splitting_type(5, 5) == Splitting::ramified);
        CHECK(splitting_type(17, 13) == Splitting::split);
        CHECK(splitting_type(17, 2) == Splitting::split);
        CHECK(splitting_type(5, 2) == Splitting::inert);
        CHECK(splitting_type(3, 2) == Splitting::ramified);
        CHECK(splitting_type(-2, 2) == Splitting::ramified);
        for (i64 d = -60; d <= 60; ++d) {
            if (d == 0 || d == 1 || !is_squarefree(d))
                continue;
            i64 D = quadratic_discriminant(d);
            for (u64 p : primes_up_to(60)) {
                bool ram = D % static_cast<i64>(p) == 0;
                CHECK((splitting_type(d, p) == Splitting::ramified) == ram);
                if (p != 2 && !ram) {
                    bool split = legendre_by_squares(d, static_cast<i64>(p)) == 1;
                    CHECK((splitting_type(d, p) == Splitting::split) == split);
                }
            }
        }
    }

    TEST_CASE("FpPoly root count examples")
    {
        CHECK(fp_root_count(FpPoly::from_signed(19, {1, 0, 1})) == 0);
        CHECK(fp_root_count(FpPoly::from_signed(13, {3, 0, 1})) == 2);
        CHECK(fp_root_count(FpPoly::from_signed(7, {-5, 1})) == 1);
        CHECK(FpPoly(5, {0, 0, 0}).is_zero());
        CHECK(FpPoly::from_signed(7, {-1, 3}).coeffs() == std::vector<u64>{6, 3});
    }

    TEST_CASE("FpPoly root count agrees with evaluation")
    {
        std::mt19937_64 rng(5);
        for (u64 p : primes_up_to(97)) {
            for (int trial = 0; trial < 20; ++trial) {
                int deg = 1 + static_cast<int>(rng() % 7);
                std::vector<u64> c(deg + 1);
                for (auto & a : c)
                    a = rng() % p;
                c[deg] = 1 + rng() % (p - 1);
                FpPoly f(p, c);
                int count = 0;
                std::vector<u64> roots;
                for (u64 x = 0; x < p; ++x) {
                    if (f.eval(x) == 0) {
                        ++count;
                        roots.push_back(x);
                    }
                }
                CHECK(fp_root_count(f) == count);
                CHECK(fp_roots(f) == roots);
                bool split = count == f.degree() && is_squarefree(f);
                CHECK(fp_splits_completely(f) == split);
            }
        }
    }

    TEST_CASE("FpPoly factorization reconstructs the input")
    {
        std::mt19937_64 rng(9);
        for (u64 p : {2ULL, 3ULL, 5ULL, 13ULL, 47ULL}) {
            for (int trial = 0; trial < 30; ++trial) {
                int deg = 1 + static_cast<int>(rng() % 12);
                std::vector<u64> c(deg + 1);
                for (auto & a : c)
                    a = rng() % p;
                c[deg] = 1;
                FpPoly f(p, c);
                if (!is_squarefree(f))
                    continue;
                FpPoly prod = FpPoly::constant(p, 1);
                for (auto const & g : irreducible_factors(f)) {
                    CHECK(is_irreducible(g));
                    prod = prod * g;
                }
                CHECK(prod == f);
            }
        }
    }
}
