#ifndef XDN_LOCALSOLVE_HPP
#define XDN_LOCALSOLVE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xdn/arith.hpp"
#include "xdn/classpoly.hpp"

namespace xdn {

enum class Status { solvable, empty, undetermined };

enum class Case {
    real_place,
    split_prime,
    inert_not_dividing,
    inert_dividing_odd,
    inert_dividing_two,
    ramified_sn,
    doubly_ramified,
};

char const * status_name(Status s); /* "Solvable", "Empty", "Undetermined" */
char const * case_name(Case c);     /* "RealPlace", "SplitPrime", ... */

struct Verdict {
    Status status = Status::undetermined;
    Case kind = Case::real_place;
    std::string reason;      /* the sub-condition that was evaluated */
    std::string reason_code; /* set when status is Undetermined */
};

struct GlobalReport {
    i64 N = 0;
    i64 d = 0;
    std::map<Place, Verdict> perPlace; /* infinity first, then primes ascending */
    Tri everywhereLocal = Tri::undetermined;

    std::vector<Place> failing_places() const;
};

char const * everywhere_name(Tri t); /* "true", "false", "Unknown" */

struct localsolve_config {
    classpoly_config classpoly;
};

localsolve_config const & default_localsolve_config();

/* Local solvability of X^d(N) at one place: p = Place::infinity() or a prime. */
Verdict decide_local(i64 N, i64 d, Place p, localsolve_config const & cfg = default_localsolve_config());

/* The places outside of which solvability holds unconditionally. */
std::vector<Place> critical_places(i64 N, i64 d);

GlobalReport everywhere_local(i64 N, i64 d, localsolve_config const & cfg = default_localsolve_config());

struct SearchEntry {
    i64 d = 0;
    GlobalReport report;
};

/*
 * Squarefree d in [dmin, dmax], d != 1 and coprime to N, that are locally
 * solvable everywhere. With primes_only, |d| must be prime. Ordered by |d|,
 * negative before positive.
 */
std::vector<SearchEntry> search_d(i64 N, i64 dmin, i64 dmax, bool primes_only = false,
                                  localsolve_config const & cfg = default_localsolve_config());

struct QuerWitness {
    i64 N1 = 1;
    Place p;
};

/* Divisor N1 of N whose Hilbert symbol with d is globally -1, with an odd place witnessing it. */
std::optional<QuerWitness> quer_obstruction(i64 N, i64 d);

/* Genus-zero levels, where rational points are characterized directly. */
bool conic_expected(i64 N, i64 d);

/* Verdicts predicted at N, p, the real place and the first `others` remaining primes, with d = p*. */
struct ClarkPrediction {
    i64 d = 0;
    std::map<Place, Status> expected;
};

ClarkPrediction clark_expected(i64 N, i64 p, int others = 10);

} // namespace xdn

#endif
