#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace relstate {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// n!, memoized. The table grows on demand under a lock; reads of
/// already-computed entries are lock-free, so concurrent use is safe
/// once warm_up_factorials() has covered the range a thread needs.
const BigInt& factorial(unsigned n);

/// Eagerly populate the factorial table up to n inclusive.
void warm_up_factorials(unsigned n);

BigInt binomial(unsigned n, unsigned k);

BigRational pow_rational(const BigRational& base, unsigned exp);

double to_double(const BigRational& r);

/// Renders "p/q" in lowest terms ("p" when q == 1).
std::string to_fraction_string(const BigRational& r);

inline BigRational make_rational(std::int64_t num, std::int64_t den) {
    return BigRational(BigInt(num), BigInt(den));
}

}  // namespace relstate
