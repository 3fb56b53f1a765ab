#ifndef XDN_SUPERSINGULAR_HPP
#define XDN_SUPERSINGULAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "xdn/arith.hpp"
#include "xdn/fpk.hpp"
#include "xdn/isogeny.hpp"
#include "xdn/quadforms.hpp"

namespace xdn {

/* Element c0 + c1 t of F_{p^2} = F_p[t]/(g), g the field modulus of fp2_field(p). */
struct Fp2Elem {
    u64 c0 = 0, c1 = 0;

    bool in_prime_field() const { return c1 == 0; }
    std::string str() const; /* "7" or "3+5*t" */
    bool operator==(Fp2Elem const &) const = default;
    auto operator<=>(Fp2Elem const &) const = default;
};

Fq fp2_field(u64 p);

struct supersingular_config {
    u64 max_p_sj = 1000;
    u64 max_p_count = 100;
    u64 max_M_count = 100;
    u64 max_N_fixed = 30;
    u64 max_p_fixed = 50;
};

supersingular_config const & default_supersingular_config();

/* Supersingular j-invariants in F_{p^2}, ascending. */
std::vector<Fp2Elem> ss_j_invariants(u64 p, supersingular_config const & cfg = default_supersingular_config());

/* |Aut(E)| of a supersingular curve with the given j over an algebraic closure. */
int aut_size(u64 p, Fp2Elem const & j);

/* Sum of 1/|Aut(E)| over the supersingular j-invariants. */
Rational eichler_mass(u64 p, supersingular_config const & cfg = default_supersingular_config());

struct SSPoint {
    Fp2Elem j;
    u64 subgroupOrder = 1;
    int autOrder = 2; /* order of Aut(E, C) */
};

struct SSCount {
    u64 count = 0;
    std::vector<SSPoint> points;
};

/* Supersingular points of X_0(M) in characteristic p: pairs (E, C) modulo Aut(E). */
SSCount count_ss_points(u64 M, u64 p, supersingular_config const & cfg = default_supersingular_config());

/* Congruence criterion for a supersingular point of X_0(N/p) with an automorphism of order 4. */
bool has_deg4_aut_point(u64 N, u64 p);

/* The same question answered by enumerating supersingular points. */
bool has_deg4_aut_point_by_enumeration(u64 N, u64 p, supersingular_config const & cfg = default_supersingular_config());

u64 genus_X0(u64 M);

/* g(X_0(N)) = 2 g(X_0(N/p)) + n - 1 with n = count_ss_points(N/p, p). */
bool genus_identity_check(u64 N, u64 p, supersingular_config const & cfg = default_supersingular_config());

/* A pair (E, C) over F_p with w_N(E, C) isomorphic to (E, C). */
struct FixedPointWitness {
    Curve curve;
    std::vector<FpPoly> kernels; /* one rational kernel polynomial per prime of N */
};

struct FixedPointResult {
    bool fixed = false;
    std::optional<FixedPointWitness> witness;
    u64 pairs_examined = 0;
};

/* Brute-force search for F_p-rational w_N-fixed points on X_0(N), p odd and prime to N. */
FixedPointResult wN_fixed_point_mod_p(u64 N, u64 p, supersingular_config const & cfg = default_supersingular_config());

} // namespace xdn

#endif
