#include "xdn/localsolve.hpp"

#include <algorithm>
#include <numeric>

#include "xdn/error.hpp"
#include "xdn/quadforms.hpp"

namespace xdn {

namespace {

void validate(i64 N, i64 d)
{
    require_level(N);
    if (d == 0 || d == 1)
        throw error(errc::invalid_argument, "d must be a squarefree integer other than 0 and 1");
    factor_squarefree(d);
    if (std::gcd(N, d) != 1)
        throw error(errc::not_coprime,
                    "N = " + std::to_string(N) + " and d = " + std::to_string(d) + " are not coprime");
}

std::string mod4_list(std::vector<u64> const & qs)
{
    std::string s;
    for (u64 q : qs) {
        if (!s.empty())
            s += ", ";
        s += std::to_string(q) + " = " + std::to_string(q % 4) + " mod 4";
    }
    return s.empty() ? "none" : s;
}

Verdict make(Status s, Case c, std::string reason)
{
    Verdict v;
    v.status = s;
    v.kind = c;
    v.reason = std::move(reason);
    return v;
}

} // namespace

char const * status_name(Status s)
{
    switch (s) {
    case Status::solvable:
        return "Solvable";
    case Status::empty:
        return "Empty";
    case Status::undetermined:
        return "Undetermined";
    }
    return "Undetermined";
}

char const * case_name(Case c)
{
    switch (c) {
    case Case::real_place:
        return "RealPlace";
    case Case::split_prime:
        return "SplitPrime";
    case Case::inert_not_dividing:
        return "InertNotDividing";
    case Case::inert_dividing_odd:
        return "InertDividingOdd";
    case Case::inert_dividing_two:
        return "InertDividingTwo";
    case Case::ramified_sn:
        return "RamifiedSN";
    case Case::doubly_ramified:
        return "DoublyRamified";
    }
    return "RealPlace";
}

char const * everywhere_name(Tri t)
{
    switch (t) {
    case Tri::yes:
        return "true";
    case Tri::no:
        return "false";
    case Tri::undetermined:
        return "Unknown";
    }
    return "Unknown";
}

std::vector<Place> GlobalReport::failing_places() const
{
    std::vector<Place> out;
    for (auto const & [place, v] : perPlace) {
        if (v.status == Status::empty)
            out.push_back(place);
    }
    return out;
}

localsolve_config const & default_localsolve_config()
{
    static localsolve_config const cfg;
    return cfg;
}

Verdict decide_local(i64 N, i64 d, Place place, localsolve_config const & cfg)
{
    validate(N, d);
    if (place.is_infinite())
        return make(Status::solvable, Case::real_place, "the real points are nonempty for every twist");
    u64 const p = place.p;
    if (!is_prime(p))
        throw error(errc::invalid_argument, std::to_string(p) + " is not prime");

    SquarefreeInt const Nf = factor_squarefree(N);
    Splitting const sK = splitting_type(d, p);
    bool const p_divides_N = Nf.divisible_by(p);

    if (sK == Splitting::split)
        return make(Status::solvable, Case::split_prime, std::to_string(p) + " splits in Q(sqrt(" + std::to_string(d) + "))");

    if (sK == Splitting::inert) {
        if (!p_divides_N)
            return make(Status::solvable, Case::inert_not_dividing,
                        std::to_string(p) + " is inert in K and does not divide N");
        std::vector<u64> odd_rest;
        for (u64 q : Nf.primes) {
            if (q != p && q != 2)
                odd_rest.push_back(q);
        }
        bool const rest_ok = std::all_of(odd_rest.begin(), odd_rest.end(), [](u64 q) { return q % 4 == 1; });
        if (p != 2) {
            bool const ok = (p % 4 == 3) && rest_ok;
            std::string reason = std::to_string(p) + " = " + std::to_string(p % 4) +
                                 " mod 4; other odd primes of N: " + mod4_list(odd_rest);
            return make(ok ? Status::solvable : Status::empty, Case::inert_dividing_odd, reason);
        }
        std::string reason = "2 | N inert in K; odd primes of N: " + mod4_list(odd_rest);
        return make(rest_ok ? Status::solvable : Status::empty, Case::inert_dividing_two, reason);
    }

    /* p ramifies in K */
    bool const ramified_in_M = p_divides_N || (p == 2 && N % 4 != 3);
    if (ramified_in_M) {
        Verdict v = make(Status::undetermined, Case::doubly_ramified,
                         std::to_string(p) + " ramifies in both Q(sqrt(" + std::to_string(d) + ")) and Q(sqrt(-" +
                             std::to_string(N) + "))");
        v.reason_code = "DoublyRamified";
        return v;
    }
    SNResult const r = in_S_N(N, p, cfg.classpoly);
    if (r.value == Tri::undetermined) {
        Verdict v = make(Status::undetermined, Case::ramified_sn,
                         "membership of " + std::to_string(p) + " in S_N is undetermined (" + r.test + ")");
        v.reason_code = r.reason;
        return v;
    }
    bool const in = r.value == Tri::yes;
    return make(in ? Status::solvable : Status::empty, Case::ramified_sn,
                std::to_string(p) + (in ? " is" : " is not") + " in S_N by " + r.test);
}

std::vector<Place> critical_places(i64 N, i64 d)
{
    validate(N, d);
    std::vector<Place> out{Place::infinity()};
    i64 const DK = quadratic_discriminant(d);
    std::vector<u64> ps;
    for (auto const & [q, e] : factor(DK))
        ps.push_back(q);
    for (u64 q : factor_squarefree(N).primes) {
        if (splitting_type(d, q) == Splitting::inert)
            ps.push_back(q);
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (u64 q : ps)
        out.push_back(Place::prime(q));
    return out;
}

GlobalReport everywhere_local(i64 N, i64 d, localsolve_config const & cfg)
{
    GlobalReport R;
    R.N = N;
    R.d = d;
    bool any_empty = false, any_undetermined = false;
    for (Place const & v : critical_places(N, d)) {
        Verdict const verdict = decide_local(N, d, v, cfg);
        any_empty = any_empty || verdict.status == Status::empty;
        any_undetermined = any_undetermined || verdict.status == Status::undetermined;
        R.perPlace.emplace(v, verdict);
    }
    R.everywhereLocal = any_empty ? Tri::no : (any_undetermined ? Tri::undetermined : Tri::yes);
    return R;
}

std::vector<SearchEntry> search_d(i64 N, i64 dmin, i64 dmax, bool primes_only, localsolve_config const & cfg)
{
    require_level(N);
    if (dmin > dmax)
        throw error(errc::invalid_argument, "empty d range");
    if (dmax - dmin > 10000000)
        throw error(errc::too_large, "d range wider than 10^7");
    std::vector<SearchEntry> out;
    for (i64 d = dmin; d <= dmax; ++d) {
        if (d == 0 || d == 1 || !is_squarefree(d) || std::gcd(N, d) != 1)
            continue;
        if (primes_only && !is_prime(static_cast<u64>(d < 0 ? -d : d)))
            continue;
        GlobalReport R = everywhere_local(N, d, cfg);
        if (R.everywhereLocal == Tri::yes)
            out.push_back(SearchEntry{d, std::move(R)});
    }
    std::sort(out.begin(), out.end(), [](SearchEntry const & a, SearchEntry const & b) {
        i64 const aa = a.d < 0 ? -a.d : a.d, bb = b.d < 0 ? -b.d : b.d;
        return aa != bb ? aa < bb : a.d < b.d;
    });
    return out;
}

std::optional<QuerWitness> quer_obstruction(i64 N, i64 d)
{
    validate(N, d);
    for (i64 N1 = 1; N1 <= N; ++N1) {
        if (N % N1 != 0)
            continue;
        bool const eligible = (N1 % 4 == 1) || (N1 % 2 == 0 && (N / N1) % 4 == 3);
        if (!eligible || hilbert_global(N1, d) != -1)
            continue;
        for (Place const & v : hilbert_support(N1, d)) {
            if (!v.is_infinite() && v.p != 2 && hilbert_local(N1, d, v) == -1)
                return QuerWitness{N1, v};
        }
        for (Place const & v : hilbert_support(N1, d)) {
            if (hilbert_local(N1, d, v) == -1)
                return QuerWitness{N1, v};
        }
    }
    return std::nullopt;
}

bool conic_expected(i64 N, i64 d)
{
    static std::vector<i64> const levels{2, 3, 5, 6, 7, 10, 13};
    if (std::find(levels.begin(), levels.end(), N) == levels.end())
        throw error(errc::unsupported_level, "level " + std::to_string(N) + " is not of genus zero");
    if (d == 0 || d == 1)
        throw error(errc::invalid_argument, "d must be a squarefree integer other than 0 and 1");
    factor_squarefree(d);
    if (N == 2 || N == 3 || N == 7)
        return true;
    i64 m = d;
    if (d % N == 0)
        m = d / N;
    if (std::gcd(m, N) != 1)
        return false;
    auto primes_of_m = factor_squarefree(m).primes;
    auto all = [&](auto pred) { return std::all_of(primes_of_m.begin(), primes_of_m.end(), pred); };
    if (N == 5 || N == 10)
        return all([](u64 q) { return kronecker(static_cast<i64>(q), 5) == 1; });
    if (N == 13)
        return all([](u64 q) { return kronecker(static_cast<i64>(q), 13) == 1; });
    /* N = 6: 2 must be a square modulo every prime of m */
    return all([](u64 q) { return q % 8 == 1 || q % 8 == 7; });
}

ClarkPrediction clark_expected(i64 N, i64 p, int others)
{
    if (N < 2 || !is_prime(static_cast<u64>(N)) || N % 4 != 1)
        throw error(errc::hypothesis_violated, "N must be a prime congruent to 1 mod 4");
    if (p < 3 || !is_prime(static_cast<u64>(p)))
        throw error(errc::hypothesis_violated, "p must be an odd prime");
    if (kronecker(N, p) != -1)
        throw error(errc::hypothesis_violated,
                    "(" + std::to_string(N) + "/" + std::to_string(p) + ") must be -1");
    ClarkPrediction P;
    P.d = (p % 4 == 1) ? p : -p;
    P.expected[Place::infinity()] = Status::solvable;
    P.expected[Place::prime(static_cast<u64>(N))] = Status::empty;
    P.expected[Place::prime(static_cast<u64>(p))] = Status::empty;
    u64 q = 1;
    for (int k = 0; k < others;) {
        q = next_prime(q);
        if (q == static_cast<u64>(N) || q == static_cast<u64>(p))
            continue;
        P.expected[Place::prime(q)] = Status::solvable;
        ++k;
    }
    return P;
}

} // namespace xdn
