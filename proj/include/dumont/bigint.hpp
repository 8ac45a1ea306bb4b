#pragma once

#include <gmpxx.h>

#include <string>

namespace dumont {

// Arbitrary-precision signed integer. Triangle entries grow like (2n-1)!!
// and 2^n*n!, so fixed-width types overflow around n=10.
using BigInt = mpz_class;

BigInt factorial(unsigned n);

// (2n-1)!! for n>=0; double_factorial(-1) == 1 by the empty-product convention.
BigInt double_factorial(long k);

BigInt binomial(unsigned long n, unsigned long k);

inline double to_double(const BigInt& v) { return v.get_d(); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

BigInt bigint_from_string(const std::string& s);

}  // namespace dumont
