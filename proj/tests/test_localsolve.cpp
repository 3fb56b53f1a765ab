#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "xdn/error.hpp"
#include "xdn/localsolve.hpp"

using namespace xdn;

namespace {

std::vector<i64> squarefree_range(i64 lo, i64 hi)
{
    std::vector<i64> out;
    for (i64 d = lo; d <= hi; ++d) {
        if (d != 0 && d != 1 && is_squarefree(d))
            out.push_back(d);
    }
    return out;
}

bool doubly_ramified_somewhere(i64 N, i64 d)
{
    /* with gcd(N, d) = 1 only p = 2 can ramify in both fields */
    bool const ram_K = ((d % 4) + 4) % 4 != 1;
    bool const ram_M = N % 4 != 3;
    return ram_K && ram_M;
}

} // namespace

TEST_SUITE("localsolve")
{
    TEST_CASE("decide_local examples")
    {
        auto v19 = decide_local(133, 3, Place::prime(19));
        CHECK(v19.status == Status::empty);
        CHECK(v19.kind == Case::inert_dividing_odd);
        auto v7 = decide_local(133, 3, Place::prime(7));
        CHECK(v7.status == Status::empty);
        CHECK(v7.kind == Case::inert_dividing_odd);
        auto v5 = decide_local(29, 5, Place::prime(5));
        CHECK(v5.status == Status::empty);
        CHECK(v5.kind == Case::ramified_sn);
        auto vinf = decide_local(29, 5, Place::infinity());
        CHECK(vinf.status == Status::solvable);
        CHECK(vinf.kind == Case::real_place);
        /* 11 splits in Q(sqrt 5) */
        auto vs = decide_local(29, 5, Place::prime(11));
        CHECK(vs.status == Status::solvable);
        CHECK(vs.kind == Case::split_prime);
        auto vi = decide_local(29, 5, Place::prime(7));
        CHECK(vi.kind == Case::inert_not_dividing);
        CHECK(vi.status == Status::solvable);
    }

    TEST_CASE("input validation")
    {
        try {
            decide_local(15, 3, Place::prime(5));
            CHECK(false);
        } catch (error const & e) {
            CHECK(e.code() == errc::not_coprime);
        }
        CHECK_THROWS_AS(decide_local(12, 5, Place::prime(5)), error);
        CHECK_THROWS_AS(decide_local(5, 1, Place::prime(3)), error);
        CHECK_THROWS_AS(decide_local(5, 8, Place::prime(3)), error);
        CHECK_THROWS_AS(decide_local(5, 3, Place::prime(9)), error);
    }

    TEST_CASE("inert places dividing N")
    {
        /* N = 19 * 5, 19 inert in Q(sqrt 2): 19 = 3 mod 4 and 5 = 1 mod 4 */
        REQUIRE(splitting_type(2, 19) == Splitting::inert);
        CHECK(decide_local(95, 2, Place::prime(19)).status == Status::solvable);
        /* N = 2 * 5 with 2 inert in Q(sqrt -3) */
        REQUIRE(splitting_type(-3, 2) == Splitting::inert);
        auto v = decide_local(10, -3, Place::prime(2));
        CHECK(v.kind == Case::inert_dividing_two);
        CHECK(v.status == Status::solvable);
        auto w = decide_local(14, -3, Place::prime(2));
        CHECK(w.kind == Case::inert_dividing_two);
        CHECK(w.status == Status::empty);
    }

    TEST_CASE("doubly ramified places are undetermined")
    {
        auto v = decide_local(5, 3, Place::prime(2));
        CHECK(v.kind == Case::doubly_ramified);
        CHECK(v.status == Status::undetermined);
        CHECK(v.reason_code == "DoublyRamified");
        auto R = everywhere_local(5, 3);
        CHECK(R.everywhereLocal != Tri::yes);
    }

    TEST_CASE("everywhere_local examples")
    {
        auto R = everywhere_local(23, 17);
        CHECK(R.everywhereLocal == Tri::yes);
        auto E = everywhere_local(29, 5);
        CHECK(E.everywhereLocal == Tri::no);
        CHECK(E.failing_places() == std::vector<Place>{Place::prime(5)});
        for (auto const & [place, v] : E.perPlace) {
            if (place != Place::prime(5))
                CHECK(v.status == Status::solvable);
        }
        for (i64 d : {-7, -3, 5, 13, 17, -23, 101}) {
            auto G = everywhere_local(2, d);
            CHECK_MESSAGE(G.everywhereLocal == Tri::yes, "d = " << d);
        }
    }

    TEST_CASE("critical set covers every non-trivial place")
    {
        for (i64 N : {5, 23, 29, 133}) {
            for (i64 d : squarefree_range(-60, 60)) {
                if (std::gcd(N, d) != 1)
                    continue;
                auto crit = critical_places(N, d);
                std::set<Place> cs(crit.begin(), crit.end());
                for (u64 p : primes_up_to(200)) {
                    if (cs.count(Place::prime(p)))
                        continue;
                    auto v = decide_local(N, d, Place::prime(p));
                    CHECK(v.status == Status::solvable);
                    CHECK((v.kind == Case::split_prime || v.kind == Case::inert_not_dividing));
                }
            }
        }
    }

    TEST_CASE("search over prime d for N = 23")
    {
        auto res = search_d(23, -299, 299, true);
        CHECK(res.size() == 39);
        std::set<i64> ds;
        for (auto const & e : res)
            ds.insert(e.d);
        CHECK(ds.count(17) == 1);
        std::vector<i64> const residual{-283, -271, -263, -251, -227, -223, -211, -199, -191, -83,
                                        -59,  17,   37,   53,   61,   89,   97,   101,  109,  113,
                                        137,  149,  157,  173,  181,  229,  241,  281,  293};
        CHECK(residual.size() == 29);
        for (i64 d : residual)
            CHECK_MESSAGE(ds.count(d) == 1, "d = " << d);
        for (std::size_t i = 1; i < res.size(); ++i) {
            i64 a = std::abs(res[i - 1].d), b = std::abs(res[i].d);
            CHECK((a < b || (a == b && res[i - 1].d < res[i].d)));
        }
    }

    TEST_CASE("search for N = 2 returns every admissible d decided by the tree")
    {
        auto res = search_d(2, -40, 40);
        std::vector<i64> expect;
        for (i64 d : squarefree_range(-40, 40)) {
            if (d % 2 == 0)
                continue;
            if (doubly_ramified_somewhere(2, d)) {
                auto R = everywhere_local(2, d);
                CHECK(R.everywhereLocal == Tri::undetermined);
                CHECK(R.perPlace.at(Place::prime(2)).kind == Case::doubly_ramified);
                continue;
            }
            expect.push_back(d);
        }
        std::vector<i64> got;
        for (auto const & e : res)
            got.push_back(e.d);
        std::sort(got.begin(), got.end());
        CHECK(got == expect);
    }

    TEST_CASE("Quer obstruction examples")
    {
        auto w = quer_obstruction(133, 3);
        REQUIRE(w.has_value());
        CHECK(w->N1 == 133);
        CHECK(hilbert_global(133, 3) == -1);
        CHECK(!quer_obstruction(29, 5).has_value());
        for (i64 d : squarefree_range(-100, 100)) {
            if (std::gcd<i64>(23, d) == 1)
                CHECK(!quer_obstruction(23, d).has_value());
        }
    }

    TEST_CASE("Quer witnesses are local obstructions")
    {
        int checked = 0;
        for (i64 N = 2; N <= 150; ++N) {
            if (!is_squarefree(N))
                continue;
            for (i64 d : squarefree_range(-150, 150)) {
                if (std::gcd(N, d) != 1)
                    continue;
                auto w = quer_obstruction(N, d);
                if (!w || w->p.is_infinite() || w->p.p == 2)
                    continue;
                auto v = decide_local(N, d, w->p);
                if (v.status == Status::undetermined)
                    continue;
                ++checked;
                CHECK_MESSAGE(v.status == Status::empty, "N = " << N << " d = " << d << " p = " << w->p.p);
            }
        }
        CHECK(checked > 100);
    }

    TEST_CASE("conic_expected examples")
    {
        CHECK(conic_expected(5, 11));
        CHECK(!conic_expected(5, 7));
        for (i64 d : squarefree_range(-50, 50))
            CHECK(conic_expected(3, d));
        CHECK(conic_expected(13, -1));
        CHECK(conic_expected(13, 3));
        CHECK(!conic_expected(13, 5));
        CHECK(conic_expected(6, 7));
        CHECK(!conic_expected(6, 5));
        try {
            conic_expected(11, 3);
            CHECK(false);
        } catch (error const & e) {
            CHECK(e.code() == errc::unsupported_level);
        }
    }

    TEST_CASE("genus-zero levels agree with the conic characterization")
    {
        for (i64 N : {2, 3, 5, 6, 7, 10, 13}) {
            for (i64 d : squarefree_range(-300, 300)) {
                if (std::gcd(N, d) != 1 || doubly_ramified_somewhere(N, d))
                    continue;
                auto R = everywhere_local(N, d);
                REQUIRE(R.everywhereLocal != Tri::undetermined);
                CHECK_MESSAGE((R.everywhereLocal == Tri::yes) == conic_expected(N, d), "N = " << N << " d = " << d);
            }
        }
    }

    TEST_CASE("Clark predictions")
    {
        auto P = clark_expected(13, 5);
        CHECK(P.d == 5);
        CHECK(P.expected.at(Place::prime(13)) == Status::empty);
        CHECK(P.expected.at(Place::prime(5)) == Status::empty);
        CHECK(P.expected.size() == 13);
        CHECK(clark_expected(29, 3).d == -3);
        try {
            clark_expected(13, 3);
            CHECK(false);
        } catch (error const & e) {
            CHECK(e.code() == errc::hypothesis_violated);
        }
        CHECK_THROWS_AS(clark_expected(23, 5), error);
        for (u64 N : primes_up_to(101)) {
            if (N % 4 != 1)
                continue;
            for (u64 p : primes_up_to(50)) {
                if (p == 2 || kronecker(static_cast<i64>(N), static_cast<i64>(p)) != -1)
                    continue;
                auto C = clark_expected(static_cast<i64>(N), static_cast<i64>(p));
                for (auto const & [place, st] : C.expected)
                    CHECK(decide_local(static_cast<i64>(N), C.d, place).status == st);
            }
        }
    }

    TEST_CASE("inert-dividing verdicts depend only on residues mod 4")
    {
        auto ps = primes_up_to(400);
        std::vector<u64> one, three;
        for (u64 q : ps) {
            if (q == 2)
                continue;
            (q % 4 == 1 ? one : three).push_back(q);
        }
        /* N = p * q with p inert in K = Q(sqrt d) for a suitable d, varying q in its class */
        int compared = 0;
        for (u64 p : {3ULL, 7ULL, 5ULL, 13ULL}) {
            for (auto const * cls : {&one, &three}) {
                std::optional<Status> seen;
                for (std::size_t i = 0; i < 12; ++i) {
                    u64 const q = (*cls)[i + 3];
                    if (q == p)
                        continue;
                    i64 const N = static_cast<i64>(p * q);
                    /* find a prime d coprime to N with p inert */
                    for (u64 d : ps) {
                        if (d == p || d == q || d < 3 || splitting_type(static_cast<i64>(d), p) != Splitting::inert)
                            continue;
                        auto v = decide_local(N, static_cast<i64>(d), Place::prime(p));
                        CHECK(v.kind == Case::inert_dividing_odd);
                        if (seen)
                            CHECK(*seen == v.status);
                        seen = v.status;
                        ++compared;
                        break;
                    }
                }
            }
        }
        CHECK(compared > 50);
    }
}
