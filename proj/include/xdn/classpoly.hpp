#ifndef XDN_CLASSPOLY_HPP
#define XDN_CLASSPOLY_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "xdn/arith.hpp"
#include "xdn/fppoly.hpp"
#include "xdn/quadforms.hpp"

namespace xdn {

using bigint = boost::multiprecision::mpz_int;

/* Monic class polynomial H_D of the order of discriminant D = -4N. */
struct ClassPolynomial {
    i64 D = 0;
    std::vector<bigint> coeffs; /* low to high, coeffs.back() == 1 */
    bigint discPoly;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    FpPoly mod(u64 p) const;
    std::string str() const; /* e.g. "x^2 - 1264000*x - 681472000" */
    bool operator==(ClassPolynomial const &) const = default;
};

struct classpoly_config {
    i64 max_N = 2000;
    unsigned max_precision_bits = 1u << 17;
    /* Empty disables the on-disk cache. */
    std::optional<std::filesystem::path> cache_dir;
};

classpoly_config const & default_classpoly_config();

/* Exact class polynomial of Z[sqrt -N], read from or written to the cache. */
ClassPolynomial class_polynomial(i64 N, classpoly_config const & cfg = default_classpoly_config());

/* The computation itself for an arbitrary negative discriminant, bypassing the cache. */
ClassPolynomial compute_class_polynomial(i64 D, unsigned max_precision_bits = 1u << 17, unsigned min_precision_bits = 0);

/* Working precision used for the first evaluation attempt. */
unsigned initial_precision_bits(i64 D);

/* Discriminant of an integer polynomial (low to high coefficients). */
bigint poly_discriminant(std::vector<bigint> const & coeffs);

/* On-disk cache: one text file per discriminant. */
class ClassPolyCache
{
    std::filesystem::path dir_;

    public:

    explicit ClassPolyCache(std::filesystem::path dir);

    std::filesystem::path path_for(i64 D) const;
    /* Miss on absent, unreadable or corrupted entries. */
    std::optional<ClassPolynomial> get(i64 D) const;
    /* Atomic replace; throws IoError. */
    void put(ClassPolynomial const & H) const;
};

std::string serialize_class_polynomial(ClassPolynomial const & H);
std::optional<ClassPolynomial> parse_class_polynomial(std::string const & text);

enum class Tri { no, yes, undetermined };

char const * tri_name(Tri t); /* "false", "true", "Undetermined" */

/* Outcome of the S_N membership test with the sub-test that decided it. */
struct SNResult {
    Tri value = Tri::undetermined;
    std::string test;   /* e.g. "RootModP", "SplitsCompletely", "GenusCharacters" */
    std::string reason; /* reason code when undetermined */
};

/*
 * Membership of the prime p in S_N. Requires p unramified in Q(sqrt -N):
 * p odd with p not dividing N, or p = 2 with N = 3 mod 4. Throws RamifiedInM
 * otherwise.
 */
SNResult in_S_N(i64 N, u64 p, classpoly_config const & cfg = default_classpoly_config());

/* The same test for callers that already hold H_{-4N}. */
SNResult in_S_N(i64 N, u64 p, ClassPolynomial const & H);

} // namespace xdn

#endif
