#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "spinlattice/lattice.hpp"

namespace spinlattice {

using cx = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;

enum class PauliAxis { X, Y, Z };

/// A matrix together with the ordered set of sites it acts on. Tensor legs
/// follow the canonical Region order, first site = most significant digit
/// (row-major Kronecker convention, pinned by tests). Scalars carry an
/// empty support and a 1x1 matrix.
struct LocalOperator {
  Region support;
  MatrixC matrix;
  int site_dim = 2;

  LocalOperator() : matrix(MatrixC::Zero(1, 1)) {}
  LocalOperator(Region sup, MatrixC m, int d = 2);

  std::int64_t dim() const { return matrix.rows(); }
};

std::int64_t dim_of(int site_dim, std::size_t nsites);

MatrixC pauli(PauliAxis axis);
MatrixC pauli_id();

LocalOperator scalar_operator(cx value);
LocalOperator identity_on(const Region& region, int site_dim = 2);
LocalOperator site_operator(const Site& site, const MatrixC& m);
LocalOperator pauli_at(const Site& site, PauliAxis axis);

/// Kronecker product, row-major convention: (A ox B)(i*rb+k, j*cb+l) = A(i,j) B(k,l).
MatrixC kron(const MatrixC& a, const MatrixC& b);

/// Insert identity legs so that A acts on `target`; supp(A) must be contained
/// in target. Norm preserving.
LocalOperator embed(const LocalOperator& a, const Region& target);

/// Largest singular value. (Anti-)Hermitian inputs are detected and routed
/// through a Hermitian eigensolve; the general path is an SVD.
double operator_norm(const MatrixC& a);
double operator_norm(const LocalOperator& a);

cx trace(const LocalOperator& a);
LocalOperator adjoint(const LocalOperator& a);

/// Algebra on local operators: both sides are embedded into the union of the
/// supports first.
LocalOperator operator+(const LocalOperator& a, const LocalOperator& b);
LocalOperator operator-(const LocalOperator& a, const LocalOperator& b);
LocalOperator operator*(const LocalOperator& a, const LocalOperator& b);
LocalOperator operator*(cx scale, const LocalOperator& a);

/// AB - BA on the union of the supports.
LocalOperator commutator(const LocalOperator& a, const LocalOperator& b);

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  MatrixC vectors;         // unitary, columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix; rejects inputs with
/// ||A - A*|| > 1e-10 max(1, ||A||) (Frobenius norms).
HermitianEigen hermitian_eig(const MatrixC& a);

/// e^{izH} A e^{-izH} through the eigenbasis of H. Real z is a unitary
/// conjugation; complex z is the analytic continuation used by the KMS
/// checks. Guard: |Im z| * spread(spec H) <= 700.
LocalOperator evolve_operator(const LocalOperator& h, const LocalOperator& a, cx z);
/// Same kernel with a precomputed eigendecomposition; `a` must already live
/// on the eigendecomposition's space.
MatrixC evolve_matrix(const HermitianEigen& eig, const MatrixC& a, cx z);

/// Trace over the legs not in `keep`; keep must be a subset of the support.
LocalOperator partial_trace(const LocalOperator& a, const Region& keep);

/// Haar twirl over the complement of `onto`: partial trace divided by the
/// complement dimension, identity on the rest. Idempotent; the result is
/// supported in `onto`.
LocalOperator conditional_expectation(const LocalOperator& a, const Region& onto);

/// "re+imj" fixed-precision text, 17 significant digits.
std::string format_complex(cx v);
std::string format_real(double v);

}  // namespace spinlattice
