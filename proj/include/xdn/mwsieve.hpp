#ifndef XDN_MWSIEVE_HPP
#define XDN_MWSIEVE_HPP

#include <string>
#include <vector>

#include "xdn/jacobian.hpp"

namespace xdn {

/* Integer sextic f, coefficients lowest degree first. */
using IntSextic = std::vector<i64>;

/* f_23 = (x^3 - x + 1)(x^3 - 8x^2 + 3x - 7), the sextic behind X^d(23). */
IntSextic f23_sextic();

/*
 * Reduction of the twist d y^2 = f at a prime p where d is a nonzero square:
 * absorbing sqrt(d) into y gives y^2 = f over F_p. Throws NonSplitPrime when d
 * is not a square mod p and BadReduction when p | d, p | disc(f) or p = 2.
 */
HyperellipticCurveFp reduce_twist(IntSextic const & f, i64 d, u64 p);

/* The square root s of d mod p used by reduce_twist (the smaller one). */
u64 twist_scale(i64 d, u64 p);

/* All F_p-points y^2 = f: the affine ones by ascending (x, y), then inf_plus and inf_minus. */
std::vector<CurvePoint> enumerate_points(HyperellipticCurveFp const & C);

/* How divisors in a gens file relate to the curve: on y^2 = d f or on d y^2 = f. */
enum class TwistModel { y2_eq_df, dy2_eq_f };

/* Contents of a generators file for one twist. */
struct GensFile {
    IntSextic f;
    i64 d = 0; /* 0 when the file does not fix the twist */
    TwistModel model = TwistModel::y2_eq_df;
    std::vector<std::string> gens;
    std::vector<std::string> divisors;
};

/*
 * Line-oriented format, '#' starts a comment:
 *   curve: c0 c1 c2 c3 c4 c5 c6      (integer coefficients of f, lowest degree first)
 *   d: 17                            (optional)
 *   model: y^2 = d*f                 (or d*y^2 = f; default y^2 = d*f)
 *   gen: <x^2 + 3, 17*x - 34, 2>
 *   divisor: <x^3 - x + 1, 0, 3>
 * Throws ParseError or IOError.
 */
GensFile parse_gens_text(std::string const & text);
GensFile read_gens_file(std::string const & path);

/* Multiplier taking the y-coordinate of the file model to the curve returned by reduce_twist. */
u64 model_y_scale(TwistModel model, i64 d, u64 p);

/* Parse a divisor written on the file model and transport it to reduce_twist(f, d, p). */
MumfordDivisor transport_divisor(HyperellipticCurveFp const & C, std::string const & text,
                                 TwistModel model, i64 d);

enum class SieveStatus { obstruction_found, inconclusive };
char const * sieve_status_name(SieveStatus s);

struct ScharaschkinResult {
    SieveStatus status = SieveStatus::inconclusive;
    std::vector<u64> gen_orders;
    u64 combinations = 0;  /* prod gen_orders: size of the scanned set S1 */
    u64 points = 0;        /* #C(F_p) */
    /* For an Inconclusive verdict: a point P whose class [2P - inf_plus - inf_minus] lies in S1. */
    std::vector<CurvePoint> witnesses;
};

/*
 * S1 = all combinations sum k_i G_i with 0 <= k_i < ord(G_i), S2 = {[2P - inf_plus - inf_minus]}.
 * ObstructionFound iff S1 and S2 are disjoint.
 */
ScharaschkinResult scharaschkin_test(HyperellipticCurveFp const & C, std::vector<MumfordDivisor> const & gens);

struct Rank0PrimeReport {
    u64 p = 0;
    u64 points = 0;
    bool verified = false; /* no point P has [P] = D mod p */
};

struct Rank0Result {
    SieveStatus status = SieveStatus::inconclusive;
    std::vector<Rank0PrimeReport> primes;
};

/*
 * If J(Q) is trivial, a rational point P forces [P] = D for the rational degree-1 class D.
 * For each supplied curve C_p and reduction D_p, checks that no P in C_p(F_p) has [P] = D_p.
 * ObstructionFound iff this holds at every supplied prime.
 */
Rank0Result rank0_divisor_test(std::vector<HyperellipticCurveFp> const & curves,
                               std::vector<MumfordDivisor> const & divisors);

} // namespace xdn

#endif
