#include "spinlattice/tensor.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "spinlattice/errors.hpp"

namespace spinlattice {

namespace {

// Leg positions of `sub` inside `super` (both in canonical order).
std::vector<std::size_t> leg_positions(const Region& sub, const Region& super) {
  std::vector<std::size_t> pos;
  pos.reserve(sub.size());
  for (const Site& s : sub.sites()) {
    auto idx = super.index_of(s);
    if (!idx) throw std::invalid_argument("leg_positions: site not contained in target region");
    pos.push_back(*idx);
  }
  return pos;
}

// Strides for row-major digits: leg 0 is the most significant.
std::vector<std::int64_t> leg_strides(std::size_t nlegs, int d) {
  std::vector<std::int64_t> strides(nlegs);
  std::int64_t s = 1;
  for (std::size_t i = nlegs; i-- > 0;) {
    strides[i] = s;
    s *= d;
  }
  return strides;
}

// All index offsets generated by the given strides (one digit in [0,d) per stride).
std::vector<std::int64_t> digit_offsets(const std::vector<std::int64_t>& strides, int d) {
  std::vector<std::int64_t> offsets{0};
  for (std::int64_t stride : strides) {
    std::vector<std::int64_t> next;
    next.reserve(offsets.size() * d);
    for (std::int64_t base : offsets)
      for (int k = 0; k < d; ++k) next.push_back(base + k * stride);
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

std::int64_t dim_of(int site_dim, std::size_t nsites) {
  if (site_dim < 2) throw std::invalid_argument("site_dim must be at least 2");
  std::int64_t dim = 1;
  for (std::size_t i = 0; i < nsites; ++i) {
    if (dim > (std::int64_t{1} << 40) / site_dim)
      throw guard_error("dim_of: tensor dimension overflow");
    dim *= site_dim;
  }
  return dim;
}

LocalOperator::LocalOperator(Region sup, MatrixC m, int d) : support(std::move(sup)), matrix(std::move(m)), site_dim(d) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("LocalOperator: matrix not square");
  if (matrix.rows() != dim_of(site_dim, support.size()))
    throw std::invalid_argument("LocalOperator: matrix dimension does not match support");
  if (!matrix.allFinite()) throw std::invalid_argument("LocalOperator: non-finite entries");
}

MatrixC pauli(PauliAxis axis) {
  MatrixC m(2, 2);
  switch (axis) {
    case PauliAxis::X: m << 0, 1, 1, 0; break;
    case PauliAxis::Y: m << 0, cx(0, -1), cx(0, 1), 0; break;
    case PauliAxis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

MatrixC pauli_id() { return MatrixC::Identity(2, 2); }

LocalOperator scalar_operator(cx value) {
  MatrixC m(1, 1);
  m(0, 0) = value;
  return LocalOperator(Region(), m);
}

LocalOperator identity_on(const Region& region, int site_dim) {
  std::int64_t dim = dim_of(site_dim, region.size());
  return LocalOperator(region, MatrixC::Identity(dim, dim), site_dim);
}

LocalOperator site_operator(const Site& site, const MatrixC& m) {
  return LocalOperator(Region::open({site}), m, static_cast<int>(m.rows()));
}

LocalOperator pauli_at(const Site& site, PauliAxis axis) { return site_operator(site, pauli(axis)); }

MatrixC kron(const MatrixC& a, const MatrixC& b) {
  MatrixC c(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return c;
}

LocalOperator embed(const LocalOperator& a, const Region& target) {
  if (!target.contains(a.support)) throw std::invalid_argument("embed: support not contained in target");
  if (a.support == target) return a;
  const int d = a.site_dim;
  auto pos = leg_positions(a.support, target);
  auto strides = leg_strides(target.size(), d);

  std::vector<std::int64_t> sup_strides, env_strides;
  std::size_t k = 0;
  for (std::size_t l = 0; l < target.size(); ++l) {
    if (k < pos.size() && pos[k] == l) {
      sup_strides.push_back(strides[l]);
      ++k;
    } else {
      env_strides.push_back(strides[l]);
    }
  }
  auto sup_off = digit_offsets(sup_strides, d);
  auto env_off = digit_offsets(env_strides, d);

  MatrixC out = MatrixC::Zero(dim_of(d, target.size()), dim_of(d, target.size()));
  for (std::int64_t r = 0; r < a.dim(); ++r)
    for (std::int64_t c = 0; c < a.dim(); ++c) {
      cx v = a.matrix(r, c);
      if (v == cx(0, 0)) continue;
      for (std::int64_t e : env_off) out(sup_off[r] + e, sup_off[c] + e) = v;
    }
  return LocalOperator(target, std::move(out), d);
}

namespace {
bool nearly_hermitian(const MatrixC& a, double scale) { return (a - a.adjoint()).norm() <= 1e-12 * scale; }
}  // namespace

double operator_norm(const MatrixC& a) {
  if (!a.allFinite()) throw std::invalid_argument("operator_norm: non-finite entries");
  if (a.rows() == 1 && a.cols() == 1) return std::abs(a(0, 0));
  const double scale = std::max(1.0, a.norm());
  if (nearly_hermitian(a, scale)) {
    Eigen::SelfAdjointEigenSolver<MatrixC> es;
    es.compute(a, Eigen::EigenvaluesOnly);
    return std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(a.rows() - 1)));
  }
  if (nearly_hermitian(cx(0, 1) * a, scale)) {
    Eigen::SelfAdjointEigenSolver<MatrixC> es;
    es.compute(cx(0, 1) * a, Eigen::EigenvaluesOnly);
    return std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(a.rows() - 1)));
  }
  Eigen::JacobiSVD<MatrixC> svd(a);
  return svd.singularValues()(0);
}

double operator_norm(const LocalOperator& a) { return operator_norm(a.matrix); }

cx trace(const LocalOperator& a) { return a.matrix.trace(); }

LocalOperator adjoint(const LocalOperator& a) {
  return LocalOperator(a.support, a.matrix.adjoint(), a.site_dim);
}

namespace {
std::pair<MatrixC, MatrixC> on_common_region(const LocalOperator& a, const LocalOperator& b, Region& out) {
  if (a.site_dim != b.site_dim) throw std::invalid_argument("local operators have different site dimensions");
  out = region_union(a.support, b.support);
  return {embed(a, out).matrix, embed(b, out).matrix};
}
}  // namespace

LocalOperator operator+(const LocalOperator& a, const LocalOperator& b) {
  Region u;
  auto [ma, mb] = on_common_region(a, b, u);
  return LocalOperator(u, ma + mb, a.site_dim);
}

LocalOperator operator-(const LocalOperator& a, const LocalOperator& b) {
  Region u;
  auto [ma, mb] = on_common_region(a, b, u);
  return LocalOperator(u, ma - mb, a.site_dim);
}

LocalOperator operator*(const LocalOperator& a, const LocalOperator& b) {
  Region u;
  auto [ma, mb] = on_common_region(a, b, u);
  return LocalOperator(u, ma * mb, a.site_dim);
}

LocalOperator operator*(cx scale, const LocalOperator& a) {
  return LocalOperator(a.support, scale * a.matrix, a.site_dim);
}

LocalOperator commutator(const LocalOperator& a, const LocalOperator& b) {
  Region u;
  auto [ma, mb] = on_common_region(a, b, u);
  return LocalOperator(u, ma * mb - mb * ma, a.site_dim);
}

HermitianEigen hermitian_eig(const MatrixC& a) {
  const double defect = (a - a.adjoint()).norm();
  if (defect > 1e-10 * std::max(1.0, a.norm()))
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<MatrixC> es(a);
  if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: eigensolver failed");
  return HermitianEigen{es.eigenvalues(), es.eigenvectors()};
}

MatrixC evolve_matrix(const HermitianEigen& eig, const MatrixC& a, cx z) {
  const Eigen::Index n = eig.values.size();
  const double spread = eig.values(n - 1) - eig.values(0);
  if (std::abs(z.imag()) * spread > 700.0)
    throw guard_error("evolve_matrix: |Im z| * spectral spread exceeds overflow guard (700)");
  MatrixC in_basis = eig.vectors.adjoint() * a * eig.vectors;
  for (Eigen::Index m = 0; m < n; ++m)
    for (Eigen::Index k = 0; k < n; ++k)
      in_basis(m, k) *= std::exp(cx(0, 1) * z * cx(eig.values(m) - eig.values(k), 0));
  return eig.vectors * in_basis * eig.vectors.adjoint();
}

LocalOperator evolve_operator(const LocalOperator& h, const LocalOperator& a, cx z) {
  Region u;
  auto [mh, ma] = on_common_region(h, a, u);
  return LocalOperator(u, evolve_matrix(hermitian_eig(mh), ma, z), a.site_dim);
}

LocalOperator partial_trace(const LocalOperator& a, const Region& keep) {
  if (!a.support.contains(keep)) throw std::invalid_argument("partial_trace: keep is not a subset of the support");
  if (keep == a.support) return a;
  const int d = a.site_dim;
  auto strides = leg_strides(a.support.size(), d);
  auto pos = leg_positions(keep, a.support);

  std::vector<std::int64_t> keep_strides, env_strides;
  std::size_t k = 0;
  for (std::size_t l = 0; l < a.support.size(); ++l) {
    if (k < pos.size() && pos[k] == l) {
      keep_strides.push_back(strides[l]);
      ++k;
    } else {
      env_strides.push_back(strides[l]);
    }
  }
  auto keep_off = digit_offsets(keep_strides, d);
  auto env_off = digit_offsets(env_strides, d);

  const std::int64_t dim = dim_of(d, keep.size());
  MatrixC out = MatrixC::Zero(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r)
    for (std::int64_t c = 0; c < dim; ++c) {
      cx sum = 0;
      for (std::int64_t e : env_off) sum += a.matrix(keep_off[r] + e, keep_off[c] + e);
      out(r, c) = sum;
    }
  return LocalOperator(keep, std::move(out), d);
}

LocalOperator conditional_expectation(const LocalOperator& a, const Region& onto) {
  if (!a.support.contains(onto)) throw std::invalid_argument("conditional_expectation: onto is not a subset of the support");
  const Region complement = region_difference(a.support, onto);
  if (complement.empty()) return a;
  LocalOperator traced = partial_trace(a, onto);
  const double env_dim = static_cast<double>(dim_of(a.site_dim, complement.size()));
  return LocalOperator(onto, traced.matrix / env_dim, a.site_dim);
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string format_complex(cx v) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.16e%+.16ej", v.real(), v.imag());
  return buf;
}

}  // namespace spinlattice
