// Arbitrary-precision integer scalar usable inside Eigen dense and sparse types.
#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace boost::multiprecision::detail {
// Eigen's scalar-promotion SFINAE probes is_convertible<Matrix, Scalar>, which
// trips cpp_int's byte-container constructor. Matrices are never byte containers.
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace topmin {

/// Exact integer. Expression templates are off so Eigen sees a plain value type.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = DenseMatrix<BigInt>;
using SparseIntegerMatrix = Eigen::SparseMatrix<BigInt>;

}  // namespace topmin
