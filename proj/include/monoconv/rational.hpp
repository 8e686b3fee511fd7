#pragma once

#include <cstdint>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace monoconv {

/// Exact rational scalar. Always normalized (lowest terms, positive denominator).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = VectorX<Rational>;
using RationalMatrix = MatrixX<Rational>;

/// Exponent vector of a monomial, a point of N^n.
using Exponent = VectorX<std::int64_t>;

template <typename Scalar, typename Derived>
VectorX<Scalar> cast_to(const Eigen::MatrixBase<Derived>& v) {
  VectorX<Scalar> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Scalar(v(i));
  return out;
}

}  // namespace monoconv
