#include <cmath>
#include <numeric>
#include <set>

#include "doctest.h"
#include "xdn/error.hpp"
#include "xdn/quadforms.hpp"

using namespace xdn;

namespace {

/* Class number of a fundamental discriminant D < 0 from the analytic formula. */
i64 class_number_fundamental(i64 D)
{
    i64 const absD = -D;
    i64 sum = 0;
    for (i64 a = 1; a < absD; ++a)
        sum += kronecker(D, a) * a;
    int const w = (D == -3) ? 6 : (D == -4 ? 4 : 2);
    return -(w * sum) / (2 * absD);
}

/* h(-4N) for squarefree N, through the conductor formula when -4N is not fundamental. */
i64 class_number_oracle(i64 N)
{
    if (N % 4 == 1 || N % 4 == 2)
        return class_number_fundamental(-4 * N);
    i64 const D0 = -N;
    i64 const h0 = class_number_fundamental(D0);
    i64 const unit_index = (N == 3) ? 3 : 1;
    /* h(D0 f^2) = h(D0) f (1 - chi(2)/2) / unit_index with f = 2 */
    return h0 * (2 - kronecker(D0, 2)) / unit_index;
}

bool is_squarefree_level(i64 N)
{
    return N >= 2 && is_squarefree(N);
}

} // namespace

TEST_SUITE("quadforms")
{
    TEST_CASE("class group examples")
    {
        auto G20 = class_group(5);
        CHECK(G20.D == -20);
        CHECK(G20.h == 2);
        CHECK(G20.reps[0] == BQForm{1, 0, 5});
        CHECK(G20.reps[1] == BQForm{2, 2, 3});
        auto G92 = class_group(23);
        CHECK(G92.h == 3);
        CHECK(G92.twoTorsion == 1);
        CHECK(class_group(29).h == 6);
        CHECK(class_group(29).twoTorsion == 2);
        CHECK(class_group(2).h == 1);
    }

    TEST_CASE("level validation")
    {
        for (i64 bad : {1, 0, -5}) {
            try {
                class_group(bad);
                CHECK(false);
            } catch (error const & e) {
                CHECK(e.code() == errc::invalid_argument);
            }
        }
        try {
            class_group(12);
            CHECK(false);
        } catch (error const & e) {
            CHECK(e.code() == errc::not_squarefree);
        }
        quadforms_config small;
        small.max_abs_disc = 100;
        try {
            class_group(26, small);
            CHECK(false);
        } catch (error const & e) {
            CHECK(e.code() == errc::too_large);
        }
        CHECK(class_group(23, small).h == 3);
    }

    TEST_CASE("class number agrees with the analytic formula")
    {
        for (i64 N = 2; N <= 1500; ++N) {
            if (!is_squarefree_level(N))
                continue;
            auto G = class_group(N);
            CHECK_MESSAGE(G.h == class_number_oracle(N), "N = " << N);
            for (auto const & f : G.reps) {
                CHECK(f.is_reduced());
                CHECK(f.is_primitive());
                CHECK(f.disc() == G.D);
            }
        }
    }

    TEST_CASE("reduction is idempotent and preserves the class")
    {
        for (i64 N : {5, 23, 29, 105, 389}) {
            auto G = class_group(N);
            for (auto const & f : G.reps) {
                CHECK(reduce(f) == f);
                /* act by a few unimodular substitutions and reduce back */
                for (i64 t = -4; t <= 4; ++t) {
                    BQForm g{f.a, f.b + 2 * t * f.a, 0};
                    g.c = (g.b * g.b - G.D) / (4 * g.a);
                    CHECK(reduce(g) == f);
                    BQForm h{g.c, -g.b, g.a};
                    CHECK(reduce(h) == f);
                }
            }
        }
    }

    TEST_CASE("composition satisfies the group axioms")
    {
        for (i64 N = 2; N <= 400; ++N) {
            if (!is_squarefree_level(N))
                continue;
            auto G = class_group(N);
            if (G.h > 20)
                continue;
            BQForm const one = principal_form(G.D);
            for (auto const & f : G.reps) {
                CHECK(compose(f, one) == f);
                CHECK(compose(f, inverse(f)) == one);
                BQForm pw = one;
                for (int k = 0; k < G.h; ++k)
                    pw = compose(pw, f);
                CHECK(pw == one);
                for (auto const & g : G.reps) {
                    BQForm fg = compose(f, g);
                    CHECK(fg == compose(g, f));
                    CHECK(G.index_of(fg) >= 0);
                    for (auto const & k : G.reps)
                        CHECK(compose(fg, k) == compose(f, compose(g, k)));
                }
            }
        }
    }

    TEST_CASE("composite represents products of represented values")
    {
        for (i64 N : {5, 14, 23, 29, 41}) {
            auto G = class_group(N);
            for (auto const & f : G.reps) {
                for (auto const & g : G.reps) {
                    BQForm fg = compose(f, g);
                    /* f(1,0) g(1,0) = a_f a_g is represented by the composite */
                    CHECK(represents(fg, static_cast<u64>(f.a * g.a)));
                }
            }
        }
    }

    TEST_CASE("composition rejects discriminant mismatch")
    {
        try {
            compose(BQForm{1, 0, 5}, BQForm{1, 0, 6});
            CHECK(false);
        } catch (error const & e) {
            CHECK(e.code() == errc::discriminant_mismatch);
        }
    }

    TEST_CASE("two-torsion matches the genus count")
    {
        for (i64 N = 2; N <= 2000; ++N) {
            if (!is_squarefree_level(N))
                continue;
            auto G = class_group(N);
            auto gens = genus_field(N);
            CHECK_MESSAGE(G.twoTorsion == (1 << (gens.size() - 1)), "N = " << N);
            std::set<std::pair<i64, i64>> squares;
            for (auto const & f : G.reps) {
                auto s = compose(f, f);
                squares.insert({s.a, s.b});
            }
            CHECK(static_cast<int>(squares.size()) == G.twoGsize);
            CHECK(G.twoGsize * G.twoTorsion == G.h);
        }
        for (u64 N : primes_up_to(200)) {
            if (N % 4 == 3)
                CHECK(class_group(static_cast<i64>(N)).twoTorsion == 1);
        }
    }

    TEST_CASE("genus characters are constant on classes")
    {
        for (i64 N : {5, 6, 10, 21, 30, 105}) {
            auto G = class_group(N);
            auto gens = genus_field(N);
            std::set<std::vector<int>> seen;
            for (auto const & f : G.reps) {
                std::set<std::vector<int>> vals;
                for (i64 x = -6; x <= 6; ++x) {
                    for (i64 y = -6; y <= 6; ++y) {
                        i64 m = f.a * x * x + f.b * x * y + f.c * y * y;
                        if (m <= 0 || std::gcd(m, 4 * N) != 1)
                            continue;
                        std::vector<int> chi;
                        for (i64 g : gens)
                            chi.push_back(kronecker(g, m));
                        vals.insert(chi);
                    }
                }
                CHECK(vals.size() == 1);
                seen.insert(*vals.begin());
            }
            CHECK(static_cast<int>(seen.size()) == G.twoTorsion);
        }
    }

    TEST_CASE("density examples")
    {
        CHECK(density_SN(23) == Rational{2, 3});
        CHECK(density_SN(2) == Rational{1, 1});
        CHECK(density_SN(5) == Rational{1, 2});
        CHECK(density_SN(29) == Rational{1, 3});
        CHECK(density_SN(29).str() == "1/3");
    }

    TEST_CASE("genus field generators")
    {
        CHECK(genus_field(5) == std::vector<i64>{5, -4});
        CHECK(genus_field(6) == std::vector<i64>{-3, 8});
        CHECK(genus_field(10) == std::vector<i64>{5, -8});
        CHECK(genus_field(2) == std::vector<i64>{-8});
        CHECK(genus_field(7) == std::vector<i64>{-7});
        CHECK(genus_field(15) == std::vector<i64>{-3, 5});
        CHECK(genus_field(23) == std::vector<i64>{-23});
        CHECK(genus_field(13) == std::vector<i64>{13, -4});
    }

    TEST_CASE("represents matches a direct search")
    {
        for (i64 N : {5, 7, 23}) {
            for (auto const & f : class_group(N).reps) {
                std::set<i64> hit;
                for (i64 x = -40; x <= 40; ++x) {
                    for (i64 y = -40; y <= 40; ++y)
                        hit.insert(f.a * x * x + f.b * x * y + f.c * y * y);
                }
                for (i64 m = 1; m <= 200; ++m)
                    CHECK(represents(f, static_cast<u64>(m)) == (hit.count(m) == 1));
            }
        }
    }
}
