#pragma once

#include <random>

#include "spinlattice/tensor.hpp"

namespace spinlattice {

using Rng = std::mt19937_64;

/// Gaussian matrix, independent N(0,1) real and imaginary parts per entry.
inline MatrixC random_gaussian(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> nd;
  MatrixC m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = cx(nd(rng), nd(rng));
  return m;
}

inline MatrixC random_hermitian(Eigen::Index n, Rng& rng) {
  MatrixC g = random_gaussian(n, rng);
  return (g + g.adjoint()) / 2;
}

/// Hermitian Gaussian matrix shifted by its norm and trace-normalized.
inline MatrixC random_density(Eigen::Index n, Rng& rng) {
  MatrixC h = random_hermitian(n, rng);
  h += operator_norm(h) * MatrixC::Identity(n, n);
  return h / h.trace().real();
}

/// Rank-1 projector onto a Gaussian random vector.
inline MatrixC random_pure_density(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> nd;
  VectorC v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = cx(nd(rng), nd(rng));
  v.normalize();
  return v * v.adjoint();
}

/// exp(i K) for a Hermitian Gaussian K.
inline MatrixC random_unitary(Eigen::Index n, Rng& rng) {
  HermitianEigen eig = hermitian_eig(random_hermitian(n, rng));
  VectorC phases(n);
  for (Eigen::Index i = 0; i < n; ++i) phases(i) = std::exp(cx(0, eig.values(i)));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace spinlattice
