#include "xdn/isogeny.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "xdn/error.hpp"

namespace xdn {

namespace {

u64 add_p(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 sub_p(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
u64 mul_p(u64 a, u64 b, u64 p) { return mulmod(a, b, p); }

struct BInvariants {
    u64 b2, b4, b6, b8;
};

BInvariants b_invariants(Curve const & E)
{
    u64 const p = E.p;
    BInvariants b;
    b.b2 = mul_p(4, E.a2, p);
    b.b4 = mul_p(2, E.a4, p);
    b.b6 = mul_p(4, E.a6, p);
    b.b8 = sub_p(mul_p(mul_p(4, E.a2, p), E.a6, p), mul_p(E.a4, E.a4, p), p);
    return b;
}

void require_odd(u64 p)
{
    if (p < 3 || !is_prime(p))
        throw error(errc::invalid_argument, "curve arithmetic needs an odd prime, got " + std::to_string(p));
}

/*
 * Division values by the standard recurrence. Entry n stores psi_n for odd n
 * and psi_n / y for even n, so every entry is a function of x alone; f is
 * the right-hand side y^2.
 */
template <class T, class Mul, class Sub, class Half>
std::vector<T> division_recurrence(std::vector<T> v, T const & f, int n, Mul mul, Sub sub, Half half)
{
    if (n < 5) {
        v.resize(n + 1);
        return v;
    }
    T const f2 = mul(f, f);
    v.reserve(n + 1);
    for (int k = 5; k <= n; ++k) {
        if (k % 2 == 1) {
            int const m = (k - 1) / 2;
            T a = mul(v[m + 2], mul(v[m], mul(v[m], v[m])));
            T b = mul(v[m - 1], mul(v[m + 1], mul(v[m + 1], v[m + 1])));
            if (m % 2 == 0)
                a = mul(a, f2);
            else
                b = mul(b, f2);
            v.push_back(sub(a, b));
        } else {
            int const m = k / 2;
            T t = sub(mul(v[m + 2], mul(v[m - 1], v[m - 1])), mul(v[m - 2], mul(v[m + 1], v[m + 1])));
            v.push_back(half(mul(v[m], t)));
        }
    }
    return v;
}

/* psi_3 and psi_4 / y as coefficient lists, lowest degree first. */
std::vector<u64> psi3_coeffs(Curve const & E)
{
    u64 const p = E.p;
    auto const b = b_invariants(E);
    return {b.b8, mul_p(3, b.b6, p), mul_p(3, b.b4, p), b.b2, 3 % p};
}

std::vector<u64> psi4_coeffs(Curve const & E)
{
    u64 const p = E.p;
    auto const b = b_invariants(E);
    std::vector<u64> c{sub_p(mul_p(b.b4, b.b8, p), mul_p(b.b6, b.b6, p), p),
                       sub_p(mul_p(b.b2, b.b8, p), mul_p(b.b4, b.b6, p), p),
                       mul_p(10, b.b8, p),
                       mul_p(10, b.b6, p),
                       mul_p(5, b.b4, p),
                       b.b2,
                       2 % p};
    for (auto & a : c)
        a = mul_p(2, a, p);
    return c;
}

bool poly_less(FpPoly const & a, FpPoly const & b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return false;
}

/* Factors of f of degree at most max_d, grouped by degree (partial distinct degree factorization). */
std::vector<std::pair<int, FpPoly>> small_degree_parts(FpPoly f, int max_d)
{
    std::vector<std::pair<int, FpPoly>> out;
    u64 const p = f.modulus();
    f = f.monic();
    FpPoly const x = FpPoly::x(p);
    FpPoly h = x % f;
    for (int d = 1; d <= max_d && f.degree() >= 2 * d - 1 && f.degree() > 0; ++d) {
        h = powmod(h, p, f);
        FpPoly const g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(d, g);
            f = f / g;
            if (f.degree() <= 0)
                break;
            h = h % f;
        }
    }
    if (f.degree() > 0 && f.degree() <= max_d)
        out.emplace_back(f.degree(), f);
    return out;
}

std::vector<u64> solve_mod_p(std::vector<std::vector<u64>> A, std::vector<u64> b, u64 p, std::vector<std::vector<u64>> & kernel, bool & solvable)
{
    /* Gaussian elimination on A r = b over F_p; returns a particular solution and a kernel basis. */
    std::size_t const rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && A[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(A[piv], A[r]);
        std::swap(b[piv], b[r]);
        u64 const inv = invmod(A[r][c], p);
        for (auto & a : A[r])
            a = mul_p(a, inv, p);
        b[r] = mul_p(b[r], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0)
                continue;
            u64 const t = A[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                A[i][j] = sub_p(A[i][j], mul_p(t, A[r][j], p), p);
            b[i] = sub_p(b[i], mul_p(t, b[r], p), p);
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    solvable = true;
    for (std::size_t i = r; i < rows; ++i) {
        if (b[i] != 0)
            solvable = false;
    }
    std::vector<u64> sol(cols, 0);
    for (std::size_t i = 0; i < r; ++i)
        sol[pivot_col[i]] = b[i];
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col)
        is_pivot[c] = true;
    kernel.clear();
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc])
            continue;
        std::vector<u64> k(cols, 0);
        k[fc] = 1;
        for (std::size_t i = 0; i < r; ++i)
            k[pivot_col[i]] = sub_p(0, A[i][fc], p);
        kernel.push_back(k);
    }
    return sol;
}

} // namespace

FpPoly Curve::rhs() const
{
    return FpPoly(p, {a6, a4, a2, 1});
}

u64 Curve::discriminant() const
{
    auto const b = b_invariants(*this);
    u64 d = 0;
    d = sub_p(d, mul_p(mul_p(b.b2, b.b2, p), b.b8, p), p);
    d = sub_p(d, mul_p(8, mul_p(mul_p(b.b4, b.b4, p), b.b4, p), p), p);
    d = sub_p(d, mul_p(27, mul_p(b.b6, b.b6, p), p), p);
    d = add_p(d, mul_p(9, mul_p(mul_p(b.b2, b.b4, p), b.b6, p), p), p);
    return d;
}

u64 Curve::j_invariant() const
{
    u64 const D = discriminant();
    if (D == 0)
        throw error(errc::invalid_argument, "j-invariant of a singular curve");
    auto const b = b_invariants(*this);
    u64 const c4 = sub_p(mul_p(b.b2, b.b2, p), mul_p(24, b.b4, p), p);
    return mul_p(mul_p(mul_p(c4, c4, p), c4, p), invmod(D, p), p);
}

Curve make_curve(u64 p, i64 a2, i64 a4, i64 a6)
{
    require_odd(p);
    return Curve{p, reduce_signed(a2, p), reduce_signed(a4, p), reduce_signed(a6, p)};
}

std::vector<Curve> curves_up_to_isomorphism(u64 p)
{
    require_odd(p);
    std::vector<Curve> out;
    if (p == 3) {
        /* a2-forms modulo x -> u^2 x + r */
        std::set<std::array<u64, 3>> seen;
        for (u64 a2 = 0; a2 < 3; ++a2) {
            for (u64 a4 = 0; a4 < 3; ++a4) {
                for (u64 a6 = 0; a6 < 3; ++a6) {
                    Curve E{3, a2, a4, a6};
                    if (!E.is_nonsingular())
                        continue;
                    std::array<u64, 3> best{9, 9, 9};
                    for (u64 u = 1; u < 3; ++u) {
                        u64 const iu2 = invmod(u * u % 3, 3);
                        u64 const iu4 = iu2 * iu2 % 3, iu6 = iu4 * iu2 % 3;
                        for (u64 r = 0; r < 3; ++r) {
                            u64 const b2 = a2 * iu2 % 3;
                            u64 const b4 = (2 * a2 * r + a4) % 3 * iu4 % 3;
                            u64 const b6 = (r * r * r + a2 * r * r + a4 * r + a6) % 3 * iu6 % 3;
                            best = std::min(best, std::array<u64, 3>{b2, b4, b6});
                        }
                    }
                    if (seen.insert(best).second)
                        out.push_back(Curve{3, best[0], best[1], best[2]});
                }
            }
        }
        return out;
    }
    /* short forms modulo (a, b) -> (u^4 a, u^6 b) */
    std::set<std::pair<u64, u64>> scal;
    for (u64 u = 1; u < p; ++u) {
        u64 const u2 = mul_p(u, u, p);
        scal.emplace(mul_p(u2, u2, p), mul_p(mul_p(u2, u2, p), u2, p));
    }
    for (u64 a = 0; a < p; ++a) {
        for (u64 b = 0; b < p; ++b) {
            Curve E{p, 0, a, b};
            if (!E.is_nonsingular())
                continue;
            bool minimal = true;
            for (auto const & [s4, s6] : scal) {
                std::pair<u64, u64> const img{mul_p(s4, a, p), mul_p(s6, b, p)};
                if (img < std::pair<u64, u64>{a, b}) {
                    minimal = false;
                    break;
                }
            }
            if (minimal)
                out.push_back(E);
        }
    }
    return out;
}

u64 count_points(Curve const & E)
{
    u64 const p = E.p;
    FpPoly const f = E.rhs();
    u64 n = 1;
    for (u64 x = 0; x < p; ++x) {
        u64 const v = f.eval(x);
        if (v == 0)
            n += 1;
        else if (powmod(v, (p - 1) / 2, p) == 1)
            n += 2;
    }
    return n;
}

FpPoly division_polynomial(Curve const & E, u64 ell)
{
    if (ell % 2 == 0)
        throw error(errc::invalid_argument, "division_polynomial needs an odd index");
    u64 const p = E.p;
    std::vector<FpPoly> v{FpPoly(p), FpPoly::constant(p, 1), FpPoly::constant(p, 2 % p), FpPoly(p, psi3_coeffs(E)), FpPoly(p, psi4_coeffs(E))};
    u64 const inv2 = invmod(2, p);
    auto const vals = division_recurrence(
        v, E.rhs(), static_cast<int>(ell), [](FpPoly const & a, FpPoly const & b) { return a * b; },
        [](FpPoly const & a, FpPoly const & b) { return a - b; }, [inv2](FpPoly const & a) { return a.scaled(inv2); });
    return vals[ell];
}

std::vector<Fq::elem> division_values(Fq const & F, Curve const & E, Fq::elem const & x, int n)
{
    std::vector<Fq::elem> v{F.zero(), F.one(), F.from_int(2), F.eval(FpPoly(E.p, psi3_coeffs(E)), x), F.eval(FpPoly(E.p, psi4_coeffs(E)), x)};
    u64 const inv2 = invmod(2, E.p);
    return division_recurrence(
        v, F.eval(E.rhs(), x), n, [&F](Fq::elem const & a, Fq::elem const & b) { return F.mul(a, b); },
        [&F](Fq::elem const & a, Fq::elem const & b) { return F.sub(a, b); }, [&F, inv2](Fq::elem const & a) { return F.scale(a, inv2); });
}

std::optional<Fq::elem> x_multiple(Fq const & F, Curve const & E, Fq::elem const & x, int n)
{
    if (n < 0)
        n = -n;
    if (n == 0)
        return std::nullopt;
    if (n == 1)
        return x;
    auto const v = division_values(F, E, x, n + 1);
    Fq::elem const fx = F.eval(E.rhs(), x);
    Fq::elem const sq = F.mul(v[n], v[n]);
    Fq::elem num = F.mul(v[n - 1], v[n + 1]);
    Fq::elem den = sq;
    if (n % 2 == 1)
        num = F.mul(num, fx);
    else
        den = F.mul(den, fx);
    if (F.is_zero(den))
        return std::nullopt;
    return F.sub(x, F.div(num, den));
}

std::vector<FpPoly> rational_kernels(Curve const & E, u64 ell)
{
    u64 const p = E.p;
    if (!is_prime(ell) || ell == p)
        throw error(errc::invalid_argument, "rational_kernels needs a prime l different from p");
    std::vector<FpPoly> out;
    if (ell == 2) {
        for (u64 r : fp_roots(E.rhs()))
            out.push_back(FpPoly::linear(p, r));
        return out;
    }
    int const m = static_cast<int>((ell - 1) / 2);
    FpPoly const psi = division_polynomial(E, ell);
    std::mt19937_64 rng(0x5eed0000ULL + ell * 1000003ULL + p);
    for (auto const & [d, part] : small_degree_parts(psi, m)) {
        if (m % d != 0)
            continue;
        for (FpPoly const & g : equal_degree_factor(part, d, rng)) {
            bool covered = false;
            for (auto const & k : out) {
                if ((k % g).is_zero()) {
                    covered = true;
                    break;
                }
            }
            if (covered)
                continue;
            Fq const F(g);
            Fq::elem const theta = F.gen();
            /* kappa = prod_{k=1}^{m} (X - x([k] theta)) over F */
            std::vector<Fq::elem> kappa{F.one()};
            for (int k = 1; k <= m; ++k) {
                auto const xk = x_multiple(F, E, theta, k);
                if (!xk)
                    throw error(errc::invalid_argument, "division polynomial root of wrong order");
                std::vector<Fq::elem> next(kappa.size() + 1, F.zero());
                for (std::size_t i = 0; i < kappa.size(); ++i) {
                    next[i + 1] = F.add(next[i + 1], kappa[i]);
                    next[i] = F.sub(next[i], F.mul(*xk, kappa[i]));
                }
                kappa = std::move(next);
            }
            bool rational = true;
            std::vector<u64> coeffs;
            for (auto const & c : kappa) {
                if (!F.in_prime_field(c)) {
                    rational = false;
                    break;
                }
                coeffs.push_back(c[0]);
            }
            if (rational)
                out.emplace_back(p, coeffs);
        }
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

Isogeny velu(Curve const & E, FpPoly const & kappa, u64 ell)
{
    u64 const p = E.p;
    Isogeny phi;
    phi.domain = E;
    phi.degree = ell;
    FpPoly const x = FpPoly::x(p);
    if (ell == 2) {
        if (kappa.degree() != 1)
            throw error(errc::invalid_argument, "a 2-kernel polynomial must be linear");
        u64 const x0 = sub_p(0, kappa.monic()[0], p);
        u64 const tq = add_p(add_p(mul_p(3, mul_p(x0, x0, p), p), mul_p(mul_p(2, E.a2, p), x0, p), p), E.a4, p);
        u64 const t = tq, w = mul_p(x0, tq, p);
        phi.codomain = Curve{p, E.a2, sub_p(E.a4, mul_p(5, t, p), p), sub_p(sub_p(E.a6, mul_p(mul_p(4, E.a2, p), t, p), p), mul_p(7, w, p), p)};
        FpPoly const k = kappa.monic();
        phi.num = x * k + FpPoly::constant(p, tq);
        phi.den = k;
        return phi;
    }
    FpPoly const k = kappa.monic();
    int const m = k.degree();
    if (static_cast<u64>(2 * m + 1) != ell)
        throw error(errc::invalid_argument, "kernel polynomial degree does not match the isogeny degree");
    u64 const e1 = sub_p(0, k[m - 1], p);
    u64 const e2 = m >= 2 ? k[m - 2] : 0;
    u64 const e3 = m >= 3 ? sub_p(0, k[m - 3], p) : 0;
    u64 const p1 = e1;
    u64 const p2 = sub_p(mul_p(e1, p1, p), mul_p(2, e2, p), p);
    u64 const p3 = add_p(sub_p(mul_p(e1, p2, p), mul_p(e2, p1, p), p), mul_p(3, e3, p), p);
    u64 const mm = static_cast<u64>(m) % p;
    u64 const t = add_p(add_p(mul_p(6, p2, p), mul_p(mul_p(4, E.a2, p), p1, p), p), mul_p(mul_p(2, E.a4, p), mm, p), p);
    u64 w = mul_p(10, p3, p);
    w = add_p(w, mul_p(mul_p(8, E.a2, p), p2, p), p);
    w = add_p(w, mul_p(mul_p(6, E.a4, p), p1, p), p);
    w = add_p(w, mul_p(mul_p(4, E.a6, p), mm, p), p);
    phi.codomain = Curve{p, E.a2, sub_p(E.a4, mul_p(5, t, p), p), sub_p(sub_p(E.a6, mul_p(mul_p(4, E.a2, p), t, p), p), mul_p(7, w, p), p)};
    FpPoly const dk = k.derivative();
    FpPoly const tx(p, {mul_p(2, E.a4, p), mul_p(4, E.a2, p), 6 % p});
    FpPoly const T = (tx * dk) % k;
    FpPoly const U = (E.rhs().scaled(4) * dk) % k;
    phi.num = x * k * k + T * k + U * dk - U.derivative() * k;
    phi.den = k * k;
    return phi;
}

std::optional<Fq::elem> apply_x(Fq const & F, Isogeny const & phi, Fq::elem const & x)
{
    Fq::elem const d = F.eval(phi.den, x);
    if (F.is_zero(d))
        return std::nullopt;
    return F.div(F.eval(phi.num, x), d);
}

FpPoly charpoly(u64 p, std::vector<std::vector<u64>> H)
{
    int const n = static_cast<int>(H.size());
    /* reduce to upper Hessenberg form by similarity transformations */
    for (int m = 1; m + 1 < n; ++m) {
        int i = m;
        while (i < n && H[i][m - 1] == 0)
            ++i;
        if (i == n)
            continue;
        if (i != m) {
            std::swap(H[i], H[m]);
            for (int r = 0; r < n; ++r)
                std::swap(H[r][i], H[r][m]);
        }
        u64 const tinv = invmod(H[m][m - 1], p);
        for (int r = m + 1; r < n; ++r) {
            u64 const u = mul_p(H[r][m - 1], tinv, p);
            if (u == 0)
                continue;
            for (int c = 0; c < n; ++c)
                H[r][c] = sub_p(H[r][c], mul_p(u, H[m][c], p), p);
            for (int c = 0; c < n; ++c)
                H[c][m] = add_p(H[c][m], mul_p(u, H[c][r], p), p);
        }
    }
    /* p_k(X) = (X - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1} (1-based) */
    std::vector<FpPoly> P{FpPoly::constant(p, 1)};
    FpPoly const X = FpPoly::x(p);
    for (int k = 1; k <= n; ++k) {
        FpPoly cur = (X - FpPoly::constant(p, H[k - 1][k - 1])) * P[k - 1];
        u64 prod = 1;
        for (int i = k - 1; i >= 1; --i) {
            prod = mul_p(prod, H[i][i - 1], p);
            u64 const coef = mul_p(H[i - 1][k - 1], prod, p);
            if (coef != 0)
                cur = cur - P[i - 1].scaled(coef);
        }
        P.push_back(cur);
    }
    return P[n];
}

FpPoly push_kernel(Isogeny const & phi, FpPoly const & kappa)
{
    u64 const p = phi.domain.p;
    FpPoly const k = kappa.monic();
    int const m = k.degree();
    FpPoly const a = (phi.num * invmod(phi.den % k, k)) % k;
    std::vector<std::vector<u64>> M(m, std::vector<u64>(m, 0));
    FpPoly col = a;
    FpPoly const x = FpPoly::x(p);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i)
            M[i][j] = col[i];
        col = (col * x) % k;
    }
    return charpoly(p, M);
}

std::vector<Fq::elem> solve_additive(Fq const & F, Fq::elem const & c, Fq::elem const & b)
{
    u64 const p = F.p();
    int const k = F.degree();
    std::vector<std::vector<u64>> A(k, std::vector<u64>(k, 0));
    for (int j = 0; j < k; ++j) {
        Fq::elem e = F.zero();
        e[j] = 1;
        Fq::elem const img = F.add(F.pow(e, p), F.mul(c, e));
        for (int i = 0; i < k; ++i)
            A[i][j] = img[i];
    }
    std::vector<std::vector<u64>> kernel;
    bool ok = false;
    auto const sol = solve_mod_p(A, b, p, kernel, ok);
    if (!ok)
        return {};
    std::vector<Fq::elem> out{sol};
    for (auto const & kv : kernel) {
        std::vector<Fq::elem> more;
        for (auto const & s : out) {
            Fq::elem cur = s;
            for (u64 t = 1; t < p; ++t) {
                cur = F.add(cur, kv);
                more.push_back(cur);
            }
        }
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

std::vector<XAffine> isomorphisms(Fq const & F, Curve const & E1, Curve const & E2)
{
    u64 const p = E1.p;
    if (E2.p != p || F.p() != p)
        throw error(errc::invalid_argument, "curves over different fields");
    if (E1.j_invariant() != E2.j_invariant())
        return {};
    auto lift = [&F](u64 a) { return F.from_int(static_cast<i64>(a)); };
    std::vector<XAffine> out;
    if (p == 3) {
        if ((E1.a2 == 0) != (E2.a2 == 0))
            return {};
        if (E2.a2 != 0) {
            /* x2 = rho x1 + r with rho, r in F_3 */
            u64 const rho = mul_p(E2.a2, invmod(E1.a2, p), p);
            u64 const r = mul_p(sub_p(mul_p(E1.a4, mul_p(rho, rho, p), p), E2.a4, p), invmod(mul_p(2, E2.a2, p), p), p);
            if (E2.rhs().eval(r) == mul_p(mul_p(mul_p(rho, rho, p), rho, p), E1.a6, p))
                out.push_back(XAffine{lift(rho), lift(r)});
            return out;
        }
        Fq::elem const q = F.div(lift(E2.a4), lift(E1.a4));
        for (auto const & rho : F.roots(q, 2)) {
            Fq::elem const rho3 = F.mul(rho, F.mul(rho, rho));
            Fq::elem const rhs = F.sub(F.mul(rho3, lift(E1.a6)), lift(E2.a6));
            for (auto const & r : solve_additive(F, lift(E2.a4), rhs))
                out.push_back(XAffine{rho, r});
        }
        return out;
    }
    /* pass to short forms X = x + a2/3 */
    u64 const i3 = invmod(3, p), i27 = invmod(27, p);
    auto shorten = [&](Curve const & E, u64 & s, u64 & A, u64 & B) {
        s = mul_p(E.a2, i3, p);
        A = sub_p(E.a4, mul_p(mul_p(E.a2, E.a2, p), i3, p), p);
        B = add_p(sub_p(E.a6, mul_p(mul_p(E.a2, E.a4, p), i3, p), p), mul_p(mul_p(2, mul_p(mul_p(E.a2, E.a2, p), E.a2, p), p), i27, p), p);
    };
    u64 s1, A1, B1, s2, A2, B2;
    shorten(E1, s1, A1, B1);
    shorten(E2, s2, A2, B2);
    std::vector<Fq::elem> rhos;
    if (A2 != 0 && B2 != 0) {
        if (A1 == 0 || B1 == 0)
            return {};
        rhos.push_back(lift(mul_p(mul_p(B2, A1, p), invmod(mul_p(B1, A2, p), p), p)));
    } else if (B2 == 0) {
        if (B1 != 0)
            return {};
        rhos = F.roots(F.div(lift(A2), lift(A1)), 2);
    } else {
        if (A1 != 0)
            return {};
        rhos = F.roots(F.div(lift(B2), lift(B1)), 3);
    }
    for (auto const & rho : rhos) {
        Fq::elem const rho2 = F.mul(rho, rho), rho3 = F.mul(rho2, rho);
        if (F.mul(rho2, lift(A1)) != lift(A2) || F.mul(rho3, lift(B1)) != lift(B2))
            continue;
        /* x2 = X2 - s2 = rho (x1 + s1) - s2 */
        out.push_back(XAffine{rho, F.sub(F.mul(rho, lift(s1)), lift(s2))});
    }
    return out;
}

} // namespace xdn
