#include "xdn/supersingular.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "xdn/error.hpp"

namespace xdn {

namespace {

void require_prime(u64 p)
{
    if (p < 2 || !is_prime(p))
        throw error(errc::invalid_argument, std::to_string(p) + " is not prime");
}

Fp2Elem to_fp2(Fq const & F, Fq::elem const & e)
{
    return Fp2Elem{e[0], F.degree() > 1 ? e[1] : 0};
}

constexpr u64 need_cap = 1ULL << 40;

/* 2x2 matrices over F_l acting on lines of F_l^2. */
using mat2 = std::array<u64, 4>; /* row-major a b / c d */

mat2 mat_mul(mat2 const & A, mat2 const & B, u64 l)
{
    return {(A[0] * B[0] + A[1] * B[2]) % l, (A[0] * B[1] + A[1] * B[3]) % l, (A[2] * B[0] + A[3] * B[2]) % l, (A[2] * B[1] + A[3] * B[3]) % l};
}

/* Lines indexed 0..l: index t < l is [1 : t], index l is [0 : 1]. */
u64 act_on_line(mat2 const & A, u64 line, u64 l)
{
    u64 x, y;
    if (line < l) {
        x = 1;
        y = line;
    } else {
        x = 0;
        y = 1;
    }
    u64 const nx = (A[0] * x + A[1] * y) % l;
    u64 const ny = (A[2] * x + A[3] * y) % l;
    if (nx == 0)
        return l;
    return ny * invmod(nx, l) % l;
}

/* Images in GL_2(F_l) of generators of Aut(E) for a supersingular j. */
std::vector<mat2> aut_generators(u64 p, Fp2Elem const & j, u64 l)
{
    mat2 const I4{0, l - 1, 1, 0};           /* x^2 + 1 */
    mat2 const Z3{0, l - 1, 1, (l - 1) % l}; /* x^2 + x + 1 */
    if (p == 2) {
        /* quaternions i, j with i^2 = j^2 = -1, ij = -ji, and w = -(1 + i + j + ij)/2 */
        for (u64 a = 0; a < l; ++a) {
            for (u64 b = 0; b < l; ++b) {
                if ((a * a + b * b + 1) % l != 0)
                    continue;
                mat2 const J{a, b, b, (l - a) % l};
                mat2 const K = mat_mul(I4, J, l);
                u64 const h = invmod(2, l);
                mat2 W;
                mat2 const one{1, 0, 0, 1};
                for (int t = 0; t < 4; ++t)
                    W[t] = (l - (one[t] + I4[t] + J[t] + K[t]) % l * h % l) % l;
                return {I4, J, W};
            }
        }
        throw error(errc::invalid_argument, "no quaternion basis mod " + std::to_string(l));
    }
    if (p == 3) {
        /* Z of order 3 and J with J^2 = -1, J Z J^-1 = Z^-1 */
        mat2 const Zinv = mat_mul(Z3, Z3, l);
        for (u64 a = 0; a < l; ++a) {
            for (u64 b = 0; b < l; ++b) {
                for (u64 c = 0; c < l; ++c) {
                    if ((a * a + b * c + 1) % l != 0)
                        continue;
                    mat2 const J{a, b, c, (l - a) % l};
                    if (mat_mul(J, Z3, l) == mat_mul(Zinv, J, l))
                        return {Z3, J};
                }
            }
        }
        throw error(errc::invalid_argument, "no order-12 automorphism model mod " + std::to_string(l));
    }
    if (j == Fp2Elem{1728 % p, 0})
        return {I4};
    if (j == Fp2Elem{0, 0})
        return {Z3};
    return {};
}

u64 binom_mod(u64 m, u64 i, u64 p)
{
    u64 r = 1;
    for (u64 k = 0; k < i; ++k)
        r = mulmod(mulmod(r, (m - k) % p, p), invmod((k + 1) % p, p), p);
    return r;
}

} // namespace

std::string Fp2Elem::str() const
{
    if (c1 == 0)
        return std::to_string(c0);
    return std::to_string(c0) + "+" + std::to_string(c1) + "*t";
}

Fq fp2_field(u64 p)
{
    return Fq(p, 2);
}

supersingular_config const & default_supersingular_config()
{
    static supersingular_config const cfg;
    return cfg;
}

std::vector<Fp2Elem> ss_j_invariants(u64 p, supersingular_config const & cfg)
{
    require_prime(p);
    if (p > cfg.max_p_sj)
        throw error(errc::too_large, "p = " + std::to_string(p) + " exceeds the supersingular bound " + std::to_string(cfg.max_p_sj));
    if (p <= 3)
        return {Fp2Elem{0, 0}};
    /* Legendre form y^2 = x(x-1)(x-l) is supersingular iff H(l) = sum C(m,i)^2 l^i vanishes, m = (p-1)/2 */
    u64 const m = (p - 1) / 2;
    std::vector<u64> h(m + 1);
    for (u64 i = 0; i <= m; ++i) {
        u64 const b = binom_mod(m, i, p);
        h[i] = mulmod(b, b, p);
    }
    Fq const F = fp2_field(p);
    std::vector<Fq::elem> lambdas;
    for (FpPoly const & g : irreducible_factors(FpPoly(p, h))) {
        if (g.degree() == 1) {
            lambdas.push_back(F.from_int(static_cast<i64>((p - g[0]) % p)));
        } else if (g.degree() == 2) {
            /* roots of x^2 + b x + c in F_{p^2} */
            Fq::elem const b = F.from_int(static_cast<i64>(g[1]));
            Fq::elem const c = F.from_int(static_cast<i64>(g[0]));
            Fq::elem const disc = F.sub(F.mul(b, b), F.scale(c, 4));
            Fq::elem const half = F.from_int(static_cast<i64>(invmod(2, p)));
            for (auto const & s : F.roots(disc, 2))
                lambdas.push_back(F.mul(F.sub(s, b), half));
        } else {
            throw error(errc::invalid_argument, "Hasse polynomial factor of degree above 2");
        }
    }
    std::set<Fp2Elem> js;
    for (auto const & l : lambdas) {
        Fq::elem const l2 = F.mul(l, l);
        Fq::elem const num0 = F.add(F.sub(l2, l), F.one());
        Fq::elem const num = F.scale(F.mul(num0, F.mul(num0, num0)), 256);
        Fq::elem const lm1 = F.sub(l, F.one());
        Fq::elem const den = F.mul(l2, F.mul(lm1, lm1));
        js.insert(to_fp2(F, F.div(num, den)));
    }
    return {js.begin(), js.end()};
}

int aut_size(u64 p, Fp2Elem const & j)
{
    bool const j0 = j == Fp2Elem{0, 0};
    if (p == 2)
        return j0 ? 24 : 2;
    if (p == 3)
        return j0 ? 12 : 2;
    if (j == Fp2Elem{1728 % p, 0})
        return 4;
    if (j0)
        return 6;
    return 2;
}

Rational eichler_mass(u64 p, supersingular_config const & cfg)
{
    i64 num = 0, den = 1;
    for (auto const & j : ss_j_invariants(p, cfg)) {
        i64 const a = aut_size(p, j);
        num = num * a + den;
        den *= a;
        i64 const g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return make_rational(num, den);
}

SSCount count_ss_points(u64 M, u64 p, supersingular_config const & cfg)
{
    require_prime(p);
    if (p > cfg.max_p_count || M > cfg.max_M_count)
        throw error(errc::too_large, "count_ss_points bound exceeded (p <= " + std::to_string(cfg.max_p_count) + ", M <= " + std::to_string(cfg.max_M_count) + ")");
    if (M < 1 || !is_squarefree(static_cast<i64>(M)))
        throw error(errc::not_squarefree, "level " + std::to_string(M) + " is not squarefree");
    if (M % p == 0)
        throw error(errc::not_coprime, "p divides the level");
    std::vector<u64> ells;
    for (auto const & [q, e] : factor(static_cast<i64>(M)))
        ells.push_back(q);
    /* mixed-radix index over the product of projective lines */
    u64 total = 1;
    for (u64 l : ells)
        total *= l + 1;
    SSCount out;
    for (auto const & j : ss_j_invariants(p, cfg)) {
        int const aut = aut_size(p, j);
        std::vector<std::vector<mat2>> gens(ells.size());
        for (std::size_t i = 0; i < ells.size(); ++i)
            gens[i] = aut_generators(p, j, ells[i]);
        std::size_t const ngen = ells.empty() ? 0 : gens[0].size();
        std::vector<bool> seen(total, false);
        for (u64 start = 0; start < total; ++start) {
            if (seen[start])
                continue;
            std::vector<u64> orbit{start};
            seen[start] = true;
            for (std::size_t at = 0; at < orbit.size(); ++at) {
                for (std::size_t g = 0; g < ngen; ++g) {
                    u64 rest = orbit[at], img = 0, radix = 1;
                    for (std::size_t i = 0; i < ells.size(); ++i) {
                        u64 const l = ells[i];
                        u64 const line = rest % (l + 1);
                        rest /= l + 1;
                        img += act_on_line(gens[i][g], line, l) * radix;
                        radix *= l + 1;
                    }
                    if (!seen[img]) {
                        seen[img] = true;
                        orbit.push_back(img);
                    }
                }
            }
            out.points.push_back(SSPoint{j, M, aut / static_cast<int>(orbit.size())});
        }
    }
    out.count = out.points.size();
    return out;
}

bool has_deg4_aut_point(u64 N, u64 p)
{
    if (p % 2 == 0 || !is_prime(p) || N % p != 0)
        throw error(errc::invalid_argument, "has_deg4_aut_point needs an odd prime p dividing N");
    if (!is_squarefree(static_cast<i64>(N)))
        throw error(errc::not_squarefree, "level " + std::to_string(N) + " is not squarefree");
    if (p % 4 != 3)
        return false;
    for (auto const & [q, e] : factor(static_cast<i64>(N / p))) {
        if (q != 2 && q % 4 != 1)
            return false;
    }
    return true;
}

bool has_deg4_aut_point_by_enumeration(u64 N, u64 p, supersingular_config const & cfg)
{
    if (p % 2 == 0 || !is_prime(p) || N % p != 0)
        throw error(errc::invalid_argument, "has_deg4_aut_point needs an odd prime p dividing N");
    for (auto const & pt : count_ss_points(N / p, p, cfg).points) {
        if (pt.autOrder % 4 == 0)
            return true;
    }
    return false;
}

u64 genus_X0(u64 M)
{
    if (M > 1000000000000000ULL)
        throw error(errc::too_large, "level too large for the genus formula");
    if (M < 1 || !is_squarefree(static_cast<i64>(M)))
        throw error(errc::not_squarefree, "level " + std::to_string(M) + " is not squarefree");
    i64 mu = 1, nu2 = 1, nu3 = 1, cusps = 1;
    for (auto const & [l, e] : factor(static_cast<i64>(M))) {
        i64 const q = static_cast<i64>(l);
        mu *= q + 1;
        nu2 *= 1 + kronecker(-4, q);
        nu3 *= 1 + kronecker(-3, q);
        cusps *= 2;
    }
    i64 const twelve_g = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * cusps;
    if (twelve_g < 0 || twelve_g % 12 != 0)
        throw error(errc::invalid_argument, "genus formula produced a non-integer");
    return static_cast<u64>(twelve_g / 12);
}

bool genus_identity_check(u64 N, u64 p, supersingular_config const & cfg)
{
    require_prime(p);
    if (N % p != 0)
        throw error(errc::invalid_argument, "p must divide N");
    i64 const n = static_cast<i64>(count_ss_points(N / p, p, cfg).count);
    return static_cast<i64>(genus_X0(N)) == 2 * static_cast<i64>(genus_X0(N / p)) + n - 1;
}

FixedPointResult wN_fixed_point_mod_p(u64 N, u64 p, supersingular_config const & cfg)
{
    require_prime(p);
    if (p == 2)
        throw error(errc::invalid_argument, "the fixed-point oracle needs an odd prime p");
    if (N < 2 || !is_squarefree(static_cast<i64>(N)))
        throw error(errc::not_squarefree, "level " + std::to_string(N) + " must be squarefree and at least 2");
    if (N > cfg.max_N_fixed || p > cfg.max_p_fixed)
        throw error(errc::too_large, "wN_fixed_point_mod_p bound exceeded (N <= " + std::to_string(cfg.max_N_fixed) + ", p <= " + std::to_string(cfg.max_p_fixed) + ")");
    if (N % p == 0)
        throw error(errc::not_coprime, "p divides N");

    /* the test field holds every isomorphism and more than 2 N^2 regular points */
    u64 const need = 4 * N * N + 16;
    auto field_size = [p](int e) {
        u64 q = 1;
        for (int i = 0; i < e && q < need_cap; ++i)
            q *= p;
        return q;
    };
    int k = 6;
    while (field_size(k) < need)
        k += 6;
    Fq const F(p, k);
    u64 const points_needed = 2 * N * N + 1;

    std::vector<u64> ells;
    for (auto const & [l, e] : factor(static_cast<i64>(N)))
        ells.push_back(l);

    FixedPointResult res;
    for (Curve const & E : curves_up_to_isomorphism(p)) {
        std::vector<std::vector<FpPoly>> kernels;
        bool any = true;
        for (u64 l : ells) {
            kernels.push_back(rational_kernels(E, l));
            if (kernels.back().empty()) {
                any = false;
                break;
            }
        }
        if (!any)
            continue;
        u64 const jE = E.j_invariant();
        std::vector<std::size_t> pick(ells.size(), 0);
        for (;;) {
            ++res.pairs_examined;
            /* chain of prime-degree isogenies with kernel C */
            std::vector<Isogeny> chain;
            std::vector<FpPoly> rem;
            for (std::size_t i = 0; i < ells.size(); ++i)
                rem.push_back(kernels[i][pick[i]]);
            Curve cur = E;
            for (std::size_t i = 0; i < ells.size(); ++i) {
                Isogeny phi = velu(cur, rem[i], ells[i]);
                for (std::size_t t = i + 1; t < ells.size(); ++t)
                    rem[t] = push_kernel(phi, rem[t]);
                cur = phi.codomain;
                chain.push_back(std::move(phi));
            }
            if (cur.j_invariant() == jE) {
                auto const Ls = isomorphisms(F, cur, E);
                auto const Bs = isomorphisms(F, E, E);
                std::vector<std::pair<std::size_t, std::size_t>> cand;
                for (std::size_t a = 0; a < Ls.size(); ++a) {
                    for (std::size_t b = 0; b < Bs.size(); ++b)
                        cand.emplace_back(a, b);
                }
                auto push = [&](Fq::elem x) -> std::optional<Fq::elem> {
                    for (auto const & phi : chain) {
                        auto y = apply_x(F, phi, x);
                        if (!y)
                            return std::nullopt;
                        x = std::move(*y);
                    }
                    return x;
                };
                u64 good = 0;
                for (u64 idx = 0; idx < F.size() && !cand.empty() && good < points_needed; ++idx) {
                    Fq::elem const x = F.element(idx);
                    auto const rx = push(x);
                    if (!rx)
                        continue;
                    auto const xn = x_multiple(F, E, x, static_cast<int>(N));
                    if (!xn)
                        continue;
                    std::vector<std::optional<Fq::elem>> lhs(Ls.size());
                    bool pole = false;
                    for (std::size_t a = 0; a < Ls.size() && !pole; ++a) {
                        lhs[a] = push(Ls[a](F, *rx));
                        if (!lhs[a])
                            pole = true;
                    }
                    if (pole)
                        continue;
                    ++good;
                    std::vector<std::pair<std::size_t, std::size_t>> keep;
                    for (auto const & [a, b] : cand) {
                        if (Ls[a](F, *lhs[a]) == Bs[b](F, *xn))
                            keep.emplace_back(a, b);
                    }
                    cand = std::move(keep);
                }
                if (!cand.empty() && good >= points_needed) {
                    res.fixed = true;
                    FixedPointWitness w{E, {}};
                    for (std::size_t i = 0; i < ells.size(); ++i)
                        w.kernels.push_back(kernels[i][pick[i]]);
                    res.witness = std::move(w);
                    return res;
                }
            }
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < kernels[i].size())
                    break;
                pick[i] = 0;
            }
            if (i == pick.size())
                break;
        }
    }
    return res;
}

} // namespace xdn
