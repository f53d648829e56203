#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ordex {

// Expression templates are disabled so that arithmetic yields plain values
// (they have to live inside std::variant payloads).
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// p/q reduced, denominator positive. q may be negative; q must be nonzero.
Rat make_rat(Int p, Int q);

/// Largest integer n with n <= q.
Int rat_floor(const Rat& q);

/// Exponent of 2 in the factorization of x (negative when the reduced
/// denominator is even). x must be nonzero.
Int dyadic_valuation(const Rat& x);

/// Exponent of the prime p in the factorization of x. x must be nonzero.
Int prime_valuation(const Int& p, const Rat& x);

}  // namespace ordex
