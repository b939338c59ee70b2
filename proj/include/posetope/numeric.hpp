#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace posetope {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
/// Rows may have any common length; an empty matrix has rank 0.
std::size_t matrix_rank(const IntMatrix& rows);

/// Exact determinant by Bareiss elimination. Throws NotSquare.
Integer bareiss_determinant(const IntMatrix& matrix);

/// "p/q" for proper fractions, "p" for integers.
std::string to_string(const Rational& value);

Integer factorial(unsigned n);

std::int64_t gcd_of(const IntVector& values, std::int64_t extra = 0);

}  // namespace posetope
