#ifndef XDN_ISOGENY_HPP
#define XDN_ISOGENY_HPP

#include <optional>
#include <vector>

#include "xdn/arith.hpp"
#include "xdn/fpk.hpp"
#include "xdn/fppoly.hpp"

namespace xdn {

/* y^2 = x^3 + a2 x^2 + a4 x + a6 over F_p, p odd. */
struct Curve {
    u64 p = 0;
    u64 a2 = 0, a4 = 0, a6 = 0;

    FpPoly rhs() const;
    u64 discriminant() const;
    bool is_nonsingular() const { return discriminant() != 0; }
    u64 j_invariant() const;
    bool operator==(Curve const &) const = default;
};

Curve make_curve(u64 p, i64 a2, i64 a4, i64 a6);

/* One curve from every F_p-isomorphism class (twists included), p odd. */
std::vector<Curve> curves_up_to_isomorphism(u64 p);

/* Number of affine points plus the point at infinity. */
u64 count_points(Curve const & E);

/* The odd-index division polynomial psi_l as a polynomial in x. */
FpPoly division_polynomial(Curve const & E, u64 ell);

/* Values of psi_0..psi_n at x; even-index entries omit the factor y. */
std::vector<Fq::elem> division_values(Fq const & F, Curve const & E, Fq::elem const & x, int n);

/* x([n]P) from x(P); empty when [n]P is the point at infinity. */
std::optional<Fq::elem> x_multiple(Fq const & F, Curve const & E, Fq::elem const & x, int n);

/* Kernel polynomials of the F_p-rational subgroups of prime order l. */
std::vector<FpPoly> rational_kernels(Curve const & E, u64 ell);

/* Separable isogeny of prime degree with rational x-map num/den. */
struct Isogeny {
    Curve domain, codomain;
    u64 degree = 1;
    FpPoly num, den;
};

/* Velu's formulas for the subgroup with kernel polynomial kappa of prime order l. */
Isogeny velu(Curve const & E, FpPoly const & kappa, u64 ell);

/* phi_x(x), empty at a pole. */
std::optional<Fq::elem> apply_x(Fq const & F, Isogeny const & phi, Fq::elem const & x);

/* Kernel polynomial of the image of a subgroup (given by its kernel polynomial) under phi. */
FpPoly push_kernel(Isogeny const & phi, FpPoly const & kappa);

/* Characteristic polynomial of an m x m matrix over F_p (row-major). */
FpPoly charpoly(u64 p, std::vector<std::vector<u64>> M);

/* Solutions in F of r^p + c r = b; the left side is additive in characteristic p. */
std::vector<Fq::elem> solve_additive(Fq const & F, Fq::elem const & c, Fq::elem const & b);

/* The x-maps x -> rho x + r of all isomorphisms from E1 onto E2, with rho, r in F. */
struct XAffine {
    Fq::elem rho, r;

    Fq::elem operator()(Fq const & F, Fq::elem const & x) const { return F.add(F.mul(rho, x), r); }
};

std::vector<XAffine> isomorphisms(Fq const & F, Curve const & E1, Curve const & E2);

} // namespace xdn

#endif
