#ifndef XDN_ERROR_HPP
#define XDN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace xdn {

/* Machine-readable failure codes shared by every module. */
enum class errc {
    not_squarefree,
    too_large,
    discriminant_mismatch,
    precision_exhausted,
    ramified_in_m,
    not_coprime,
    unsupported_level,
    hypothesis_violated,
    non_split_prime,
    bad_reduction,
    degenerate_divisor,
    parse_error,
    io_error,
    invalid_argument,
};

char const * errc_name(errc c);

class error : public std::runtime_error
{
    errc code_;

    public:

    error(errc c, std::string const & what)
        : std::runtime_error(what), code_(c)
    {
    }

    errc code() const { return code_; }
};

} // namespace xdn

#endif
