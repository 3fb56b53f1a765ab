#include <numeric>
#include <set>

#include "doctest.h"
#include "xdn/classpoly.hpp"
#include "xdn/error.hpp"
#include "xdn/supersingular.hpp"

using namespace xdn;

namespace {

using poly_q = std::vector<Fq::elem>;

poly_q poly_mul(Fq const & F, poly_q const & a, poly_q const & b)
{
    poly_q r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

/* Supersingular j in F_{p^2} by the x^(p-1) coefficient of (x^3 + a x + b)^((p-1)/2), swept over j. */
std::set<Fp2Elem> hasse_sweep(u64 p)
{
    Fq const F = fp2_field(p);
    std::set<Fp2Elem> out;
    for (u64 idx = 0; idx < F.size(); ++idx) {
        Fq::elem const j = F.element(idx);
        Fq::elem a, b;
        if (F.is_zero(j)) {
            a = F.zero();
            b = F.one();
        } else if (j == F.from_int(1728)) {
            a = F.one();
            b = F.zero();
        } else {
            /* y^2 = x^3 + 3 j (1728 - j) x + 2 j (1728 - j)^2 has invariant j */
            Fq::elem const c = F.sub(F.from_int(1728), j);
            a = F.scale(F.mul(j, c), 3);
            b = F.scale(F.mul(j, F.mul(c, c)), 2);
        }
        poly_q const cubic{b, a, F.zero(), F.one()};
        poly_q acc{F.one()};
        for (u64 i = 0; i < (p - 1) / 2; ++i)
            acc = poly_mul(F, acc, cubic);
        if (F.is_zero(acc[p - 1]))
            out.insert(Fp2Elem{j[0], j[1]});
    }
    return out;
}

/* Curve over F_p with the given j-invariant, p >= 5. */
Curve curve_with_j(u64 p, u64 j)
{
    if (j == 0)
        return Curve{p, 0, 0, 1};
    if (j == 1728 % p)
        return Curve{p, 0, 1, 0};
    u64 const c = (1728 % p + p - j) % p;
    return Curve{p, 0, mulmod(3, mulmod(j, c, p), p), mulmod(2, mulmod(j, mulmod(c, c, p), p), p)};
}

u64 psi_index(u64 M)
{
    u64 r = 1;
    for (auto const & [q, e] : factor(static_cast<i64>(M)))
        r *= q + 1;
    return r;
}

std::vector<u64> squarefree_upto(u64 n)
{
    std::vector<u64> out;
    for (u64 m = 1; m <= n; ++m) {
        if (is_squarefree(static_cast<i64>(m)))
            out.push_back(m);
    }
    return out;
}

} // namespace

TEST_SUITE("supersingular")
{
    TEST_CASE("finite field arithmetic")
    {
        Fq const F(7, 3);
        CHECK(F.size() == 343);
        CHECK(is_irreducible(F.modulus()));
        for (u64 i = 1; i < F.size(); i += 17) {
            auto const a = F.element(i);
            CHECK(F.mul(a, F.inv(a)) == F.one());
            CHECK(F.pow(a, F.size() - 1) == F.one());
        }
        auto const a = F.element(100), b = F.element(200), c = F.element(300);
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        CHECK_THROWS_AS(F.inv(F.zero()), error);
    }

    TEST_CASE("roots in finite fields")
    {
        for (u64 p : {5ULL, 7ULL, 13ULL}) {
            Fq const F(p, 6);
            for (u64 idx = 1; idx < 400; idx += 7) {
                auto const v = F.element(idx);
                for (u64 r : {2ULL, 3ULL}) {
                    auto const rs = F.roots(v, r);
                    for (auto const & x : rs)
                        CHECK(F.pow(x, r) == v);
                    CHECK((rs.empty() || rs.size() == r || (F.size() - 1) % r != 0));
                }
            }
            /* every element of F_p is a square and a cube in F_{p^6} */
            for (u64 a = 1; a < p; ++a) {
                CHECK(F.roots(F.from_int(static_cast<i64>(a)), 2).size() == 2);
                CHECK(F.roots(F.from_int(static_cast<i64>(a)), 3).size() == 3);
            }
        }
        Fq const F3(3, 6);
        for (u64 idx = 0; idx < 60; ++idx) {
            auto const c = F3.element(idx * 11 + 1), b = F3.element(idx * 5);
            for (auto const & r : solve_additive(F3, c, b))
                CHECK(F3.add(F3.pow(r, 3), F3.mul(c, r)) == b);
        }
    }

    TEST_CASE("ss_j_invariants examples")
    {
        CHECK(ss_j_invariants(19) == std::vector<Fp2Elem>{{7, 0}, {18, 0}});
        CHECK(ss_j_invariants(7) == std::vector<Fp2Elem>{{6, 0}});
        CHECK(ss_j_invariants(2) == std::vector<Fp2Elem>{{0, 0}});
        CHECK(ss_j_invariants(3) == std::vector<Fp2Elem>{{0, 0}});
        CHECK(1728 % 19 == 18);
        try {
            ss_j_invariants(1009);
            CHECK(false);
        } catch (error const & e) {
            CHECK(e.code() == errc::too_large);
        }
        CHECK_THROWS_AS(ss_j_invariants(21), error);
    }

    TEST_CASE("Legendre-form Hasse polynomial agrees with the Weierstrass sweep")
    {
        for (u64 p : primes_up_to(41)) {
            if (p < 5)
                continue;
            auto const got = ss_j_invariants(p);
            CHECK_MESSAGE(std::set<Fp2Elem>(got.begin(), got.end()) == hasse_sweep(p), "p = " << p);
        }
    }

    TEST_CASE("rational supersingular j agree with point counts")
    {
        for (u64 p : primes_up_to(200)) {
            if (p < 5)
                continue;
            std::set<u64> rational;
            for (auto const & j : ss_j_invariants(p)) {
                if (j.in_prime_field())
                    rational.insert(j.c0);
            }
            for (u64 j = 0; j < p; ++j) {
                Curve const E = curve_with_j(p, j);
                bool const ss = (static_cast<i64>(p + 1) - static_cast<i64>(count_points(E))) % static_cast<i64>(p) == 0;
                CHECK_MESSAGE(ss == (rational.count(j) == 1), "p = " << p << " j = " << j);
            }
        }
    }

    TEST_CASE("number of supersingular j-invariants")
    {
        for (u64 p : primes_up_to(1000)) {
            if (p < 5)
                continue;
            u64 const n = ss_j_invariants(p).size();
            /* p = 11 mod 12 carries both 0 and 1728 and reaches floor(p/12) + 2 */
            if (p % 12 != 11)
                CHECK((n == p / 12 || n == p / 12 + 1));
            u64 const extra[12] = {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2};
            CHECK(n == p / 12 + extra[p % 12]);
        }
    }

    TEST_CASE("Eichler mass formula")
    {
        for (u64 p : primes_up_to(100)) {
            if (p < 5)
                continue;
            CHECK_MESSAGE(eichler_mass(p) == make_rational(static_cast<i64>(p) - 1, 24), "p = " << p);
        }
        CHECK(eichler_mass(2) == make_rational(1, 24));
        CHECK(eichler_mass(3) == make_rational(1, 12));
    }

    TEST_CASE("count_ss_points examples")
    {
        auto const c = count_ss_points(7, 19);
        CHECK(c.count == 12);
        int at1728 = 0, at7 = 0;
        for (auto const & pt : c.points) {
            CHECK(pt.subgroupOrder == 7);
            if (pt.j == Fp2Elem{18, 0}) {
                ++at1728;
                CHECK(pt.autOrder == 2);
            } else if (pt.j == Fp2Elem{7, 0}) {
                ++at7;
            }
        }
        CHECK(at1728 == 4);
        CHECK(at7 == 8);
        auto const d = count_ss_points(19, 7);
        CHECK(d.count == 10);
        for (auto const & pt : d.points)
            CHECK(pt.j == Fp2Elem{6, 0});
        auto const e = count_ss_points(1, 2);
        REQUIRE(e.count == 1);
        CHECK(e.points[0].autOrder == 24);
        CHECK_THROWS_AS(count_ss_points(101, 7), error);
        CHECK_THROWS_AS(count_ss_points(7, 101), error);
        CHECK_THROWS_AS(count_ss_points(14, 7), error);
        CHECK_THROWS_AS(count_ss_points(12, 7), error);
    }

    TEST_CASE("supersingular points satisfy the level mass formula")
    {
        /* sum over (E, C) of 1 / |Aut(E, C)| = (p - 1) psi(M) / 24 */
        for (u64 p : primes_up_to(50)) {
            for (u64 M : squarefree_upto(60)) {
                if (M % p == 0)
                    continue;
                auto const c = count_ss_points(M, p);
                i64 num = 0, den = 1;
                for (auto const & pt : c.points) {
                    CHECK(aut_size(p, pt.j) % pt.autOrder == 0);
                    if (p > 3)
                        CHECK((pt.autOrder == 2 || pt.autOrder == 4 || pt.autOrder == 6));
                    num = num * pt.autOrder + den;
                    den *= pt.autOrder;
                    i64 const g = std::gcd(num, den);
                    num /= g;
                    den /= g;
                }
                CHECK_MESSAGE(make_rational(num, den) == make_rational(static_cast<i64>((p - 1) * psi_index(M)), 24), "M = " << M << " p = " << p);
            }
        }
    }

    TEST_CASE("degree-4 automorphisms")
    {
        CHECK(!has_deg4_aut_point(133, 19));
        CHECK(has_deg4_aut_point(39, 3));
        CHECK(!has_deg4_aut_point(133, 7));
        CHECK(has_deg4_aut_point_by_enumeration(39, 3));
        CHECK_THROWS_AS(has_deg4_aut_point(35, 2), error);
        CHECK_THROWS_AS(has_deg4_aut_point(35, 3), error);
        int compared = 0;
        for (u64 N : squarefree_upto(100)) {
            for (u64 p : primes_up_to(50)) {
                if (p == 2 || N % p != 0)
                    continue;
                ++compared;
                CHECK_MESSAGE(has_deg4_aut_point(N, p) == has_deg4_aut_point_by_enumeration(N, p), "N = " << N << " p = " << p);
            }
        }
        CHECK(compared > 50);
    }

    TEST_CASE("genus of X_0(M)")
    {
        CHECK(genus_X0(133) == 11);
        CHECK(genus_X0(19) == 1);
        CHECK(genus_X0(7) == 0);
        CHECK(genus_X0(1) == 0);
        CHECK(genus_X0(11) == 1);
        CHECK(genus_X0(23) == 2);
        CHECK(genus_X0(37) == 2);
        CHECK(genus_X0(30) == 3);
        CHECK(genus_X0(35) == 3);
        for (u64 M : {2, 3, 5, 6, 7, 10, 13})
            CHECK(genus_X0(M) == 0);
        CHECK_THROWS_AS(genus_X0(12), error);
        CHECK(genus_identity_check(133, 7));
        CHECK(genus_identity_check(133, 19));
        CHECK(count_ss_points(7, 19).count == 12);
        CHECK(genus_X0(133) == 2 * genus_X0(7) + 12 - 1);
        for (u64 N : squarefree_upto(300)) {
            for (u64 p : primes_up_to(100)) {
                if (N % p != 0 || N / p > 100)
                    continue;
                CHECK_MESSAGE(genus_identity_check(N, p), "N = " << N << " p = " << p);
            }
        }
    }

    TEST_CASE("division polynomials and multiplication maps")
    {
        for (u64 p : {3ULL, 11ULL, 13ULL}) {
            Fq const F(p, 6);
            for (Curve const & E : curves_up_to_isomorphism(p)) {
                for (u64 l : {3ULL, 5ULL, 7ULL}) {
                    if (l == p)
                        continue;
                    FpPoly const psi = division_polynomial(E, l);
                    CHECK(psi.degree() == static_cast<int>((l * l - 1) / 2));
                    CHECK(is_squarefree(psi));
                }
                for (u64 idx = 50; idx < 56; ++idx) {
                    auto const x = F.element(idx);
                    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 5}, {5, 3}, {4, 3}}) {
                        auto const ab = x_multiple(F, E, x, a * b);
                        auto const xa = x_multiple(F, E, x, a);
                        if (!ab || !xa)
                            continue;
                        auto const c = x_multiple(F, E, *xa, b);
                        REQUIRE(c.has_value());
                        CHECK(*c == *ab);
                    }
                }
            }
        }
    }

    TEST_CASE("curve classes over small fields")
    {
        /* each j has 2 twists, plus 4 at j = 1728 (resp. 6 at j = 0) when i (resp. a cube root of 1) lies in F_p */
        for (u64 p : {5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL}) {
            u64 expect = 2 * p + (p % 4 == 1 ? 2 : 0) + (p % 3 == 1 ? 4 : 0);
            CHECK(curves_up_to_isomorphism(p).size() == expect);
        }
        CHECK(curves_up_to_isomorphism(3).size() == 8);
    }

    TEST_CASE("Velu isogenies")
    {
        for (u64 p : {3ULL, 11ULL, 13ULL, 23ULL}) {
            for (Curve const & E : curves_up_to_isomorphism(p)) {
                for (u64 l : {2ULL, 3ULL, 5ULL, 7ULL}) {
                    if (l == p)
                        continue;
                    for (FpPoly const & k : rational_kernels(E, l)) {
                        Isogeny const phi = velu(E, k, l);
                        REQUIRE(phi.codomain.is_nonsingular());
                        CHECK(count_points(phi.codomain) == count_points(E));
                        if (l > 2)
                            CHECK((division_polynomial(E, l) % k).is_zero());
                        FpPoly const f = E.rhs(), g = phi.codomain.rhs();
                        for (u64 x = 0; x < p; ++x) {
                            u64 const v = f.eval(x), d = phi.den.eval(x);
                            if (v == 0 || d == 0 || powmod(v, (p - 1) / 2, p) != 1)
                                continue;
                            u64 const w = g.eval(mulmod(phi.num.eval(x), invmod(d, p), p));
                            CHECK((w == 0 || powmod(w, (p - 1) / 2, p) == 1));
                        }
                    }
                }
            }
        }
    }

    TEST_CASE("pushed kernels are rational subgroups of the codomain")
    {
        for (u64 p : {11ULL, 13ULL, 29ULL}) {
            for (Curve const & E : curves_up_to_isomorphism(p)) {
                auto const k2 = rational_kernels(E, 2);
                auto const k3 = rational_kernels(E, 3);
                for (auto const & a : k2) {
                    for (auto const & b : k3) {
                        Isogeny const phi = velu(E, a, 2);
                        FpPoly const pushed = push_kernel(phi, b);
                        auto const targets = rational_kernels(phi.codomain, 3);
                        CHECK(std::find(targets.begin(), targets.end(), pushed) != targets.end());
                        Isogeny const psi = velu(E, b, 3);
                        auto const back = rational_kernels(psi.codomain, 2);
                        CHECK(std::find(back.begin(), back.end(), push_kernel(psi, a)) != back.end());
                    }
                }
            }
        }
        /* companion matrix of x^3 - 2x + 5 */
        std::vector<std::vector<u64>> C{{0, 0, 13 - 5}, {1, 0, 2}, {0, 1, 0}};
        CHECK(charpoly(13, C) == FpPoly::from_signed(13, {5, -2, 0, 1}));
    }

    TEST_CASE("automorphism x-maps")
    {
        for (u64 p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
            Fq const F(p, p == 3 ? 12 : 6);
            for (Curve const & E : curves_up_to_isomorphism(p)) {
                u64 const j = E.j_invariant();
                std::size_t expect = 1;
                if (p == 3 && j == 0)
                    expect = 6;
                else if (p > 3 && j == 0)
                    expect = 3;
                else if (p > 3 && j == 1728 % p)
                    expect = 2;
                auto const auts = isomorphisms(F, E, E);
                CHECK_MESSAGE(auts.size() == expect, "p = " << p << " j = " << j);
                for (auto const & a : auts) {
                    /* x -> rho x + r carries y^2 = f(x) to rho^3 y^2 */
                    for (u64 idx = 0; idx < 20; ++idx) {
                        auto const x = F.element(idx * 31 + 5);
                        CHECK(F.eval(E.rhs(), a(F, x)) == F.mul(F.pow(a.rho, 3), F.eval(E.rhs(), x)));
                    }
                }
            }
        }
    }

    TEST_CASE("w_N fixed point examples")
    {
        CHECK(!wN_fixed_point_mod_p(5, 7).fixed);
        auto const r = wN_fixed_point_mod_p(2, 5);
        REQUIRE(r.fixed);
        REQUIRE(r.witness.has_value());
        auto const ks = rational_kernels(r.witness->curve, 2);
        CHECK(std::find(ks.begin(), ks.end(), r.witness->kernels[0]) != ks.end());
        auto const s = in_S_N(5, 3);
        CHECK(s.value == Tri::no);
        CHECK(wN_fixed_point_mod_p(5, 3).fixed == false);
        CHECK_THROWS_AS(wN_fixed_point_mod_p(31, 7), error);
        CHECK_THROWS_AS(wN_fixed_point_mod_p(5, 53), error);
        CHECK_THROWS_AS(wN_fixed_point_mod_p(5, 2), error);
        CHECK_THROWS_AS(wN_fixed_point_mod_p(15, 5), error);
        CHECK_THROWS_AS(wN_fixed_point_mod_p(12, 5), error);
    }

    TEST_CASE("w_N fixed points agree with the class polynomial criterion")
    {
        int compared = 0;
        for (u64 N : squarefree_upto(11)) {
            if (N < 2)
                continue;
            for (u64 p : primes_up_to(31)) {
                if (p == 2 || N % p == 0)
                    continue;
                auto const s = in_S_N(static_cast<i64>(N), p);
                if (s.value == Tri::undetermined)
                    continue;
                ++compared;
                CHECK_MESSAGE(wN_fixed_point_mod_p(N, p).fixed == (s.value == Tri::yes), "N = " << N << " p = " << p);
            }
        }
        CHECK(compared > 40);
    }
}
