#ifndef XDN_QUADFORMS_HPP
#define XDN_QUADFORMS_HPP

#include <string>
#include <vector>

#include "xdn/arith.hpp"

namespace xdn {

/* Positive definite binary quadratic form a x^2 + b x y + c y^2. */
struct BQForm {
    i64 a = 1, b = 0, c = 1;

    i64 disc() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    bool is_primitive() const;
    bool is_ambiguous() const; /* b = 0, a = b or a = c (for reduced forms) */
    bool operator==(BQForm const &) const = default;
    std::string str() const;
};

/* The reduced form equivalent to f (D < 0, a > 0). */
BQForm reduce(BQForm f);

/* Reduced representative of the Gauss composite; throws DiscriminantMismatch. */
BQForm compose(BQForm const & f, BQForm const & g);
BQForm inverse(BQForm const & f);
BQForm principal_form(i64 D);

/* Class group of primitive forms of discriminant D = -4N, stored extensionally. */
struct ClassGroup {
    i64 D = 0;
    int h = 0;
    std::vector<BQForm> reps; /* reduced, principal form first */
    int twoTorsion = 0;
    int twoGsize = 0;

    int index_of(BQForm const & f) const; /* index of reduce(f) in reps */
};

struct quadforms_config {
    i64 max_abs_disc = 400000;
};

quadforms_config const & default_quadforms_config();

/* Squarefree N >= 2, the levels accepted throughout the library. */
void require_level(i64 N);

ClassGroup class_group(i64 N, quadforms_config const & cfg = default_quadforms_config());

/* All reduced primitive forms of an arbitrary negative discriminant. */
std::vector<BQForm> reduced_forms(i64 D);

struct Rational {
    i64 num = 0, den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(Rational const &) const = default;
    std::string str() const;
};

Rational make_rational(i64 num, i64 den);

/* Density (|2G| + 1) / (2h) of S_N. */
Rational density_SN(i64 N, quadforms_config const & cfg = default_quadforms_config());

/*
 * Quadratic discriminants generating the genus field of the order Z[sqrt -N]:
 * q* = (-1)^((q-1)/2) q for each odd q | N, plus the 2-adic generator
 * -4N / prod q* when that quotient is not a square.
 */
std::vector<i64> genus_field(i64 N);

/* Whether the form represents the positive integer m, by direct search. */
bool represents(BQForm const & f, u64 m);

} // namespace xdn

#endif
