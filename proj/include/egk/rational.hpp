#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace egk {

/// Exact rational scalar. Always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using RationalRowVector = RowVector<Rational>;

/// Parses "n", "-n", "p/q" or "-p/q". Rejects a zero denominator and any
/// non-numeric text with InputError.
Rational parse_rational(std::string_view text);

/// Renders "n" for integers and "p/q" otherwise.
std::string to_string(const Rational& q);

inline Rational rational(long num, long den = 1) { return Rational(num, den); }

}  // namespace egk
