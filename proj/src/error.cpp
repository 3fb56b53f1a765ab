#include "xdn/error.hpp"

namespace xdn {

char const * errc_name(errc c)
{
    switch (c) {
    case errc::not_squarefree: return "NotSquarefree";
    case errc::too_large: return "TooLarge";
    case errc::discriminant_mismatch: return "DiscriminantMismatch";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::ramified_in_m: return "RamifiedInM";
    case errc::not_coprime: return "NotCoprime";
    case errc::unsupported_level: return "UnsupportedLevel";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::non_split_prime: return "NonSplitPrime";
    case errc::bad_reduction: return "BadReduction";
    case errc::degenerate_divisor: return "DegenerateDivisor";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace xdn
