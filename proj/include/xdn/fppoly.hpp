#ifndef XDN_FPPOLY_HPP
#define XDN_FPPOLY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "xdn/arith.hpp"

namespace xdn {

/*
 * Dense univariate polynomial over the prime field F_p. Coefficients are
 * stored lowest degree first, reduced into [0, p), with no trailing zeros.
 * The zero polynomial is the empty coefficient list.
 */
class FpPoly
{
    u64 p_ = 2;
    std::vector<u64> c_;

    void trim();

    public:

    FpPoly() = default;
    explicit FpPoly(u64 p) : p_(p) {}
    FpPoly(u64 p, std::vector<u64> coeffs);

    static FpPoly from_signed(u64 p, std::vector<i64> const & coeffs);
    static FpPoly constant(u64 p, u64 a);
    static FpPoly x(u64 p);           /* the monomial x */
    static FpPoly linear(u64 p, u64 r); /* x - r */

    u64 modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    u64 lead() const { return c_.empty() ? 0 : c_.back(); }
    u64 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::vector<u64> const & coeffs() const { return c_; }
    void set(std::size_t i, u64 a);

    u64 eval(u64 a) const;
    FpPoly monic() const;
    FpPoly derivative() const;
    FpPoly scaled(u64 a) const;

    friend FpPoly operator+(FpPoly const & a, FpPoly const & b);
    friend FpPoly operator-(FpPoly const & a, FpPoly const & b);
    friend FpPoly operator*(FpPoly const & a, FpPoly const & b);
    FpPoly operator-() const;
    bool operator==(FpPoly const & o) const { return p_ == o.p_ && c_ == o.c_; }

    std::string str(char var = 'x') const;
};

/* Euclidean division a = q*b + r with deg r < deg b. */
void divmod(FpPoly const & a, FpPoly const & b, FpPoly & q, FpPoly & r);
FpPoly operator/(FpPoly const & a, FpPoly const & b);
FpPoly operator%(FpPoly const & a, FpPoly const & b);

/* Monic greatest common divisor (zero if both arguments vanish). */
FpPoly gcd(FpPoly const & a, FpPoly const & b);

/* Extended gcd: returns monic g with s*a + t*b = g. */
FpPoly xgcd(FpPoly const & a, FpPoly const & b, FpPoly & s, FpPoly & t);

/* Inverse of a modulo m; throws if gcd(a, m) != 1. */
FpPoly invmod(FpPoly const & a, FpPoly const & m);

/* base^e mod m by square and multiply. */
FpPoly powmod(FpPoly const & base, u64 e, FpPoly const & m);

/* g(h) mod m */
FpPoly compose_mod(FpPoly const & g, FpPoly const & h, FpPoly const & m);

/* Resultant of two polynomials over F_p. */
u64 resultant(FpPoly const & f, FpPoly const & g);

bool is_squarefree(FpPoly const & f);
bool is_irreducible(FpPoly const & f);

/* Number of distinct roots in F_p: deg gcd(x^p - x, f). */
int fp_root_count(FpPoly const & f);

/* True iff f is squarefree and x^p = x mod f, i.e. f is a product of distinct linear factors. */
bool fp_splits_completely(FpPoly const & f);

/* Distinct roots of f in F_p, ascending. */
std::vector<u64> fp_roots(FpPoly const & f);

/*
 * Distinct degree factorization of a squarefree monic f: pairs (d, g_d)
 * where g_d is the product of all irreducible factors of degree d.
 */
std::vector<std::pair<int, FpPoly>> distinct_degree_factor(FpPoly const & f);

/* Split a product of irreducible factors of common degree d (Cantor-Zassenhaus). */
std::vector<FpPoly> equal_degree_factor(FpPoly const & g, int d, std::mt19937_64 & rng);

/* Monic irreducible factors of a squarefree f, sorted by degree then coefficients. */
std::vector<FpPoly> irreducible_factors(FpPoly const & f);

} // namespace xdn

#endif
