#ifndef XDN_ARITH_HPP
#define XDN_ARITH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace xdn {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/* Modular helpers, valid for any modulus below 2^63. */
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
u64 invmod(u64 a, u64 m);
inline u64 reduce_signed(i64 a, u64 m)
{
    i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

/*
 * Miller-Rabin with the first twelve prime bases. This fixed base set is
 * exact for every n < 3.3e24, hence for all 64-bit inputs.
 */
bool is_prime(u64 n);
u64 next_prime(u64 n); /* smallest prime > n */
std::vector<u64> primes_up_to(u64 bound);
u64 isqrt(u64 n);
bool is_square(u64 n);

/*
 * Factorization limits. Trial division runs up to trial_bound, Pollard rho
 * handles the cofactor. Inputs with |n| > max_abs are rejected with TooLarge.
 */
struct factor_config {
    u64 trial_bound = 1000000;
    u64 max_abs = 1000000000000000000ULL;
};

factor_config const & default_factor_config();

/* Full factorization of |n| as ascending (prime, exponent) pairs. */
std::vector<std::pair<u64, int>> factor(i64 n, factor_config const & cfg = default_factor_config());

/* A squarefree integer together with its sign and ascending prime support. */
struct SquarefreeInt {
    i64 value = 1;
    int sign = 1;
    std::vector<u64> primes;

    bool divisible_by(u64 p) const;
    u64 abs() const { return static_cast<u64>(value < 0 ? -value : value); }
};

SquarefreeInt factor_squarefree(i64 n, factor_config const & cfg = default_factor_config());
bool is_squarefree(i64 n);

/* Kronecker symbol (a/n), the standard total extension to all integers n. */
int kronecker(i64 a, i64 n);

/* A place of Q: a finite prime or the real place. */
struct Place {
    u64 p = 0; /* 0 encodes the infinite place */

    static Place infinity() { return Place{0}; }
    static Place prime(u64 q) { return Place{q}; }
    bool is_infinite() const { return p == 0; }
    std::string str() const;
    bool operator==(Place const &) const = default;
    auto operator<=>(Place const &) const = default;
};

/* p-adic valuation and unit part of a nonzero integer. */
int valuation(i64 a, u64 p, i64 * unit = nullptr);

/* Local Hilbert symbol (a,b)_v for nonzero integers a, b. */
int hilbert_local(i64 a, i64 b, Place v);

/* Places where (a,b)_v could be -1: infinity, 2 and the odd primes of ab. */
std::vector<Place> hilbert_support(i64 a, i64 b);

/* +1 iff every local symbol is +1, i.e. a is a norm from Q(sqrt b). */
int hilbert_global(i64 a, i64 b);

/* Discriminant of Q(sqrt d) for squarefree d != 1. */
i64 quadratic_discriminant(i64 d);

enum class Splitting { split, inert, ramified };
char const * splitting_name(Splitting s);

/* Decomposition of the prime p in Q(sqrt d). */
Splitting splitting_type(SquarefreeInt const & d, u64 p);
Splitting splitting_type(i64 d, u64 p);

} // namespace xdn

#endif
