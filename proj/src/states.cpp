#include "spinlattice/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spinlattice/errors.hpp"

namespace spinlattice {

namespace {
constexpr double kEntropyClamp = 1e-14;
constexpr double kSupportThreshold = 1e-12;

double xlogxy(double x, double y) {
  if (x <= 0) return 0;
  if (y <= 0) return std::numeric_limits<double>::infinity();
  return x * std::log(x / y);
}
}  // namespace

DensityState::DensityState(Region region, MatrixC rho, int site_dim)
    : region_(std::move(region)), rho_(std::move(rho)), site_dim_(site_dim) {
  if (rho_.rows() != rho_.cols() || rho_.rows() != dim_of(site_dim_, region_.size()))
    throw std::invalid_argument("DensityState: matrix dimension does not match region");
  if ((rho_ - rho_.adjoint()).norm() > 1e-10 * std::max(1.0, rho_.norm()))
    throw std::invalid_argument("DensityState: matrix is not Hermitian");
  if (std::abs(rho_.trace() - cx(1, 0)) > 1e-12)
    throw std::invalid_argument("DensityState: trace is not one");
  Eigen::SelfAdjointEigenSolver<MatrixC> es;
  es.compute(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -1e-10)
    throw std::invalid_argument("DensityState: matrix is not positive semidefinite");
}

DensityState::DensityState(Trusted, Region region, MatrixC rho, int site_dim)
    : region_(std::move(region)), rho_(std::move(rho)), site_dim_(site_dim) {}

DensityState DensityState::maximally_mixed(const Region& region, int site_dim) {
  const std::int64_t d = dim_of(site_dim, region.size());
  return DensityState(Trusted{}, region, MatrixC::Identity(d, d) / static_cast<double>(d), site_dim);
}

DensityState DensityState::pure(const Region& region, const VectorC& psi, int site_dim) {
  if (psi.size() != dim_of(site_dim, region.size()))
    throw std::invalid_argument("DensityState::pure: vector dimension does not match region");
  VectorC v = psi.normalized();
  return DensityState(Trusted{}, region, v * v.adjoint(), site_dim);
}

DensityState DensityState::product(const Region& region, const MatrixC& single_site) {
  const int d = static_cast<int>(single_site.rows());
  MatrixC rho(1, 1);
  rho(0, 0) = 1;
  for (std::size_t i = 0; i < region.size(); ++i) rho = kron(rho, single_site);
  return DensityState(region, rho, d);
}

DensityState DensityState::all_up(const Region& region) {
  MatrixC up = MatrixC::Zero(2, 2);
  up(0, 0) = 1;
  return product(region, up);
}

DensityState DensityState::all_down(const Region& region) {
  MatrixC down = MatrixC::Zero(2, 2);
  down(1, 1) = 1;
  return product(region, down);
}

cx expectation(const DensityState& omega, const LocalOperator& a) {
  if (!omega.region().contains(a.support))
    throw std::invalid_argument("expectation: operator support exceeds the state's region");
  if (a.site_dim != omega.site_dim())
    throw std::invalid_argument("expectation: site dimension mismatch");
  return (omega.rho() * embed(a, omega.region()).matrix).trace();
}

namespace {
// Boltzmann weights e^{-beta (lambda - lambda_min)} over the eigenbasis.
struct GibbsWeights {
  HermitianEigen eig;
  Eigen::VectorXd weights;
  double z = 0;
};

GibbsWeights gibbs_weights(const MatrixC& h, double beta) {
  if (beta <= 0) throw std::invalid_argument("gibbs: beta must be positive");
  GibbsWeights g{hermitian_eig(h), {}, 0};
  const Eigen::Index n = g.eig.values.size();
  const double spread = g.eig.values(n - 1) - g.eig.values(0);
  if (beta * spread > 1400.0)
    throw guard_error("gibbs: beta * spectral spread exceeds overflow guard (1400)");
  g.weights.resize(n);
  for (Eigen::Index i = 0; i < n; ++i)
    g.weights(i) = std::exp(-beta * (g.eig.values(i) - g.eig.values(0)));
  g.z = g.weights.sum();
  return g;
}
}  // namespace

DensityState gibbs_state(const LocalOperator& h, double beta) {
  GibbsWeights g = gibbs_weights(h.matrix, beta);
  MatrixC rho = g.eig.vectors * (g.weights / g.z).cast<cx>().asDiagonal() * g.eig.vectors.adjoint();
  rho = (rho + rho.adjoint()) / 2;
  return DensityState(DensityState::Trusted{}, h.support, std::move(rho), h.site_dim);
}

double kms_residual(const LocalOperator& h, double beta, const LocalOperator& a,
                    const LocalOperator& b, double t) {
  Region u = region_union(h.support, region_union(a.support, b.support));
  MatrixC mh = embed(h, u).matrix;
  MatrixC ma = embed(a, u).matrix;
  MatrixC mb = embed(b, u).matrix;
  GibbsWeights g = gibbs_weights(mh, beta);
  MatrixC delta = g.eig.vectors * g.weights.cast<cx>().asDiagonal() * g.eig.vectors.adjoint();
  // omega(A alpha_{t+i beta}(B)) = Tr(A U_t e^{-beta(H-E0)} B U_t*) / Z by
  // cyclicity of the trace; with the weight attached every factor is bounded.
  cx term1 = (ma * evolve_matrix(g.eig, MatrixC(delta * mb), t)).trace() / g.z;
  cx term2 = (delta * evolve_matrix(g.eig, mb, t) * ma).trace() / g.z;
  return std::abs(term1 - term2);
}

double kms_residual_state(const DensityState& omega, const LocalOperator& h, double beta,
                          const LocalOperator& a, const LocalOperator& b, double t) {
  const Region& u = omega.region();
  MatrixC mh = embed(h, u).matrix;
  MatrixC ma = embed(a, u).matrix;
  MatrixC mb = embed(b, u).matrix;
  HermitianEigen eig = hermitian_eig(mh);
  cx term1 = (omega.rho() * ma * evolve_matrix(eig, mb, cx(t, beta))).trace();
  cx term2 = (omega.rho() * evolve_matrix(eig, mb, t) * ma).trace();
  return std::abs(term1 - term2);
}

namespace {
// -i omega(A* delta(A)); real for equilibrium data, the imaginary part is a
// consistency check.
cx minus_i_a_star_delta_a(const DensityState& omega, const Interaction& phi,
                          const LocalOperator& a) {
  LocalOperator q = adjoint(a) * derivation_apply(phi, a);
  return cx(0, -1) * expectation(omega, q);
}

void check_real(cx v, const char* what) {
  if (!(std::abs(v.imag()) < 1e-9))
    throw invariant_error(std::string(what) + ": expected a real value, imaginary part " +
                          std::to_string(v.imag()));
}
}  // namespace

AutocorrelationBound autocorrelation_lower_bound_check(const DensityState& omega,
                                                       const Interaction& phi, double beta,
                                                       const LocalOperator& a) {
  cx core = minus_i_a_star_delta_a(omega, phi, a);
  check_real(core, "autocorrelation_lower_bound_check");
  const double x = std::max(0.0, expectation(omega, adjoint(a) * a).real());
  const double y = std::max(0.0, expectation(omega, a * adjoint(a)).real());
  return AutocorrelationBound{beta * core.real(), xlogxy(x, y)};
}

double ground_state_residual(const DensityState& omega, const Interaction& phi,
                             const std::vector<LocalOperator>& samples) {
  if (samples.empty()) throw std::invalid_argument("ground_state_residual: no samples");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : samples) {
    cx v = minus_i_a_star_delta_a(omega, phi, a);
    check_real(v, "ground_state_residual");
    best = std::min(best, v.real());
  }
  return best;
}

double passivity_check(const DensityState& omega, const Interaction& phi,
                       const std::vector<LocalOperator>& unitaries) {
  if (unitaries.empty()) throw std::invalid_argument("passivity_check: no unitaries");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& u : unitaries) {
    MatrixC defect = u.matrix.adjoint() * u.matrix - MatrixC::Identity(u.dim(), u.dim());
    if (defect.norm() > 1e-10 * std::max(1.0, u.matrix.norm()))
      throw std::invalid_argument("passivity_check: sample is not unitary");
    cx v = minus_i_a_star_delta_a(omega, phi, u);
    check_real(v, "passivity_check");
    best = std::min(best, v.real());
  }
  return best;
}

double von_neumann_entropy(const DensityState& omega) {
  Eigen::SelfAdjointEigenSolver<MatrixC> es;
  es.compute(omega.rho(), Eigen::EigenvaluesOnly);
  double s = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > kEntropyClamp) s -= p * std::log(p);
  }
  return s;
}

double relative_entropy(const DensityState& sigma, const DensityState& rho) {
  if (sigma.region() != rho.region())
    throw std::invalid_argument("relative_entropy: states live on different regions");
  HermitianEigen er = hermitian_eig(rho.rho());
  HermitianEigen es = hermitian_eig(sigma.rho());

  double tr_rho_log_rho = 0;
  for (Eigen::Index i = 0; i < er.values.size(); ++i) {
    const double p = er.values(i);
    if (p > kEntropyClamp) tr_rho_log_rho += p * std::log(p);
  }
  double tr_rho_log_sigma = 0;
  for (Eigen::Index j = 0; j < es.values.size(); ++j) {
    const double q = es.values(j);
    const double mass =
        std::max(0.0, (es.vectors.col(j).adjoint() * rho.rho() * es.vectors.col(j))(0).real());
    if (q <= kSupportThreshold) {
      if (mass > kSupportThreshold) return std::numeric_limits<double>::infinity();
      continue;
    }
    tr_rho_log_sigma += mass * std::log(q);
  }
  return tr_rho_log_rho - tr_rho_log_sigma;
}

double free_energy(const DensityState& omega, const LocalOperator& h, double beta) {
  if (beta <= 0) throw std::invalid_argument("free_energy: beta must be positive");
  return expectation(omega, h).real() - von_neumann_entropy(omega) / beta;
}

double equilibrium_free_energy(const LocalOperator& h, double beta) {
  GibbsWeights g = gibbs_weights(h.matrix, beta);
  return g.eig.values(0) - std::log(g.z) / beta;
}

std::vector<double> entropy_density_sequence(
    const std::function<DensityState(const Region&)>& state_rule,
    const std::vector<Region>& volumes) {
  std::vector<double> out;
  out.reserve(volumes.size());
  for (const Region& v : volumes) {
    if (v.empty()) throw std::invalid_argument("entropy_density_sequence: empty volume");
    out.push_back(von_neumann_entropy(state_rule(v)) / static_cast<double>(v.size()));
  }
  return out;
}

double mean_energy_density(const Interaction& phi, const DensityState& omega) {
  LocalOperator e = mean_energy_operator(phi);
  if (!e.support.empty() && !omega.region().contains(e.support))
    throw std::invalid_argument("mean_energy_density: window too small for the mean-energy observable");
  return e.support.empty() ? 0.0 : expectation(omega, e).real();
}

BlochVector bloch_vector(const DensityState& omega) {
  if (omega.region().size() != 1 || omega.site_dim() != 2)
    throw std::invalid_argument("bloch_vector: state is not a single qubit");
  auto comp = [&](PauliAxis ax) {
    return expectation(omega, LocalOperator(omega.region(), pauli(ax), 2)).real();
  };
  return BlochVector{comp(PauliAxis::X), comp(PauliAxis::Y), comp(PauliAxis::Z)};
}

DensityState bloch_state(const BlochVector& v, const Region& single_site_region) {
  if (single_site_region.size() != 1)
    throw std::invalid_argument("bloch_state: region must hold exactly one site");
  if (v.x * v.x + v.y * v.y + v.z * v.z > 1 + 1e-10)
    throw std::invalid_argument("bloch_state: vector lies outside the Bloch ball");
  MatrixC rho = 0.5 * (pauli_id() + v.x * pauli(PauliAxis::X) + v.y * pauli(PauliAxis::Y) +
                       v.z * pauli(PauliAxis::Z));
  return DensityState(single_site_region, rho, 2);
}

double transition_probability(const DensityState& omega1, const DensityState& omega2) {
  if (omega1.region() != omega2.region())
    throw std::invalid_argument("transition_probability: states live on different regions");
  Eigen::SelfAdjointEigenSolver<MatrixC> es;
  es.compute(MatrixC(omega1.rho() - omega2.rho()), Eigen::EigenvaluesOnly);
  const double trace_norm = es.eigenvalues().cwiseAbs().sum();
  return std::clamp(1.0 - 0.25 * trace_norm * trace_norm, 0.0, 1.0);
}

double polarization(const DensityState& omega) {
  const Region& chain = omega.region();
  if (chain.empty()) throw std::invalid_argument("polarization: empty chain");
  double sum = 0;
  for (const Site& s : chain.sites()) {
    LocalOperator z = embed(LocalOperator(Region::open({s}), pauli(PauliAxis::Z)), chain);
    sum += (omega.rho() * z.matrix).trace().real();
  }
  return sum / static_cast<double>(chain.size());
}

PolarizationGap polarization_gap(int length) {
  if (length < 1 || length % 2 == 0)
    throw std::invalid_argument("polarization_gap: chain length must be odd");
  Region chain = Region::line(0, length - 1);
  return PolarizationGap{polarization(DensityState::all_up(chain)),
                         polarization(DensityState::all_down(chain))};
}

}  // namespace spinlattice
