#ifndef XDN_JACOBIAN_HPP
#define XDN_JACOBIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "xdn/arith.hpp"
#include "xdn/fppoly.hpp"

namespace xdn {

/*
 * Genus-2 curve y^2 = f(x) over F_p, p odd, with deg f = 6, f squarefree and
 * a square leading coefficient l^2. The two points at infinity are inf_plus
 * (y/x^3 -> l) and inf_minus (y/x^3 -> -l).
 */
struct HyperellipticCurveFp {
    u64 p = 0;
    FpPoly f;
    u64 lead_root = 0; /* l, the smaller square root of the leading coefficient */
    FpPoly V;          /* polynomial part of sqrt(f) at inf_plus: deg(f - V^2) <= 2 */

    static HyperellipticCurveFp make(FpPoly f);
};

/* A point (x : y : z) with weights (1, 3, 1); z = 0 for the two points at infinity. */
struct CurvePoint {
    u64 x = 0, y = 0, z = 1;

    bool at_infinity() const { return z == 0; }
    bool operator==(CurvePoint const &) const = default;
    std::string str() const;
};

/*
 * Divisor class div(u, v) + n inf_plus + m inf_minus - (inf_plus + inf_minus)
 * in balanced form. Its degree is deg u + n + m - 2. A class of degree 0 is
 * reduced when deg u <= 2 and n, m >= 0, and the reduced form is unique.
 */
struct MumfordDivisor {
    FpPoly u, v;
    int n = 1, m = 1;

    int degree() const { return u.degree() + n + m - 2; }
    bool operator==(MumfordDivisor const &) const = default;
};

/* Validated constructor; throws DegenerateDivisor unless u is monic and u | f - v^2. */
MumfordDivisor make_divisor(HyperellipticCurveFp const & C, FpPoly u, FpPoly v, int n, int m);

MumfordDivisor jac_identity(HyperellipticCurveFp const & C);
bool jac_is_identity(MumfordDivisor const & D);

/* Bring a class of degree 0 or 1 to its reduced balanced form. */
MumfordDivisor jac_reduce(HyperellipticCurveFp const & C, MumfordDivisor D);

MumfordDivisor jac_add(HyperellipticCurveFp const & C, MumfordDivisor const & A, MumfordDivisor const & B);
MumfordDivisor jac_neg(HyperellipticCurveFp const & C, MumfordDivisor const & D);
MumfordDivisor jac_scalar(HyperellipticCurveFp const & C, i64 k, MumfordDivisor const & D);

/* Order of a degree-0 class by iterated addition, capped by the Weil bound (1 + sqrt p)^4. */
u64 jac_order(HyperellipticCurveFp const & C, MumfordDivisor const & D);

/* Upper bound floor((1 + sqrt p)^4) on #J(F_p). */
u64 weil_bound(u64 p);

/* The class [P1 + P2 - inf_plus - inf_minus]. */
MumfordDivisor point_pair_class(HyperellipticCurveFp const & C, CurvePoint const & P1, CurvePoint const & P2);

/* The degree-1 class [P] - 0, i.e. P + (inf_plus + inf_minus) - (inf_plus + inf_minus). */
MumfordDivisor point_class(HyperellipticCurveFp const & C, CurvePoint const & P);

/*
 * Text form "<u, v, k>" with k = deg u, denoting div(u, v) - floor(k/2) (inf_plus + inf_minus),
 * and "<u, v, k, n, m>" for div(u, v) + n inf_plus + m inf_minus - (inf_plus + inf_minus).
 * Rational coefficients are reduced mod p. Throws ParseError on malformed text.
 * The first overload only reads the fields.
 */
MumfordDivisor parse_mumford(std::string const & text, u64 p);

/* Parse, multiply v by y_scale, validate against C and reduce classes of degree 0. */
MumfordDivisor parse_mumford(HyperellipticCurveFp const & C, std::string const & text, u64 y_scale = 1);
std::string print_mumford(MumfordDivisor const & D);

/* Polynomial with rational coefficients in x, reduced mod p. Throws ParseError. */
FpPoly parse_fp_polynomial(std::string const & text, u64 p);

} // namespace xdn

#endif
