// Exact rational arithmetic (GMP-backed).
#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace khoreo {

// Always canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline int sign_of(const Rational& r) { return r.sign(); }

}  // namespace khoreo
