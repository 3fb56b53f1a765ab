#ifndef XDN_FPK_HPP
#define XDN_FPK_HPP

#include <vector>

#include "xdn/arith.hpp"
#include "xdn/fppoly.hpp"

namespace xdn {

/* The finite field F_p[t]/(g) for a monic irreducible g of degree k. */
class Fq
{
    u64 p_;
    FpPoly mod_;
    int k_;
    u64 size_;

    public:

    /* Coefficients of t^0 .. t^(k-1). */
    using elem = std::vector<u64>;

    /* Uses the first monic irreducible of degree k in lexicographic order. */
    Fq(u64 p, int k);
    explicit Fq(FpPoly modulus);

    u64 p() const { return p_; }
    int degree() const { return k_; }
    u64 size() const { return size_; }
    FpPoly const & modulus() const { return mod_; }

    elem zero() const { return elem(k_, 0); }
    elem one() const { return from_int(1); }
    elem from_int(i64 a) const;
    elem gen() const; /* the class of t */
    /* The index-th element in base-p digit order, index < size(). */
    elem element(u64 index) const;

    elem add(elem const & a, elem const & b) const;
    elem sub(elem const & a, elem const & b) const;
    elem neg(elem const & a) const;
    elem mul(elem const & a, elem const & b) const;
    elem scale(elem const & a, u64 c) const;
    elem pow(elem const & a, u64 e) const;
    elem inv(elem const & a) const; /* throws on zero */
    elem div(elem const & a, elem const & b) const { return mul(a, inv(b)); }

    bool is_zero(elem const & a) const;
    bool in_prime_field(elem const & a) const;

    /* Every r-th root of v in the field, for a prime r. */
    std::vector<elem> roots(elem const & v, u64 r) const;
    /* Every root in the field of a polynomial with F_p coefficients, by exhaustive search. */
    std::vector<elem> roots_by_search(std::vector<elem> const & poly_low_to_high, u64 max_size = 2000000) const;

    /* Value of an F_p polynomial at a field element. */
    elem eval(FpPoly const & f, elem const & x) const;
};

} // namespace xdn

#endif
