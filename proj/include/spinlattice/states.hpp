#pragma once

#include <functional>
#include <vector>

#include "spinlattice/models.hpp"

namespace spinlattice {

/// A positive semidefinite unit-trace matrix on a region, used as the state
/// functional A -> Tr(rho A).
class DensityState {
 public:
  /// Validates Hermiticity (1e-10), positivity (eigenvalues >= -1e-10) and
  /// unit trace (1e-12).
  DensityState(Region region, MatrixC rho, int site_dim = 2);

  static DensityState maximally_mixed(const Region& region, int site_dim = 2);
  static DensityState pure(const Region& region, const VectorC& psi, int site_dim = 2);
  /// Product state with the same single-site density matrix on every site.
  static DensityState product(const Region& region, const MatrixC& single_site);
  static DensityState all_up(const Region& region);
  static DensityState all_down(const Region& region);

  const Region& region() const { return region_; }
  const MatrixC& rho() const { return rho_; }
  int site_dim() const { return site_dim_; }
  std::int64_t dim() const { return rho_.rows(); }

 private:
  struct Trusted {};
  DensityState(Trusted, Region region, MatrixC rho, int site_dim);
  Region region_;
  MatrixC rho_;
  int site_dim_;
  friend DensityState gibbs_state(const LocalOperator&, double);
};

struct BlochVector {
  double x = 0, y = 0, z = 0;
};

/// Tr(rho embed(A)); supp(A) must be contained in the state's region.
cx expectation(const DensityState& omega, const LocalOperator& a);

/// exp(-beta (H - E_min)) normalized. Guard: beta * spectral spread <= 1400.
DensityState gibbs_state(const LocalOperator& h, double beta);

/// |omega(A alpha_{t+i beta}(B)) - omega(alpha_t(B) A)| for the Gibbs state
/// of H. Evaluated with the Gibbs weight kept attached to the evolved factor
/// so every exponential stays bounded by one.
double kms_residual(const LocalOperator& h, double beta, const LocalOperator& a,
                    const LocalOperator& b, double t);
/// Same boundary mismatch for an arbitrary state; runs the literal
/// complex-time evolution (overflow guard applies).
double kms_residual_state(const DensityState& omega, const LocalOperator& h, double beta,
                          const LocalOperator& a, const LocalOperator& b, double t);

struct AutocorrelationBound {
  double lhs = 0;  // -i beta omega(A* delta(A))
  double rhs = 0;  // omega(A*A) log(omega(A*A)/omega(AA*)), may be +inf
};
/// Roepstorff-Araki-Sewell two-sided data; KMS states satisfy lhs >= rhs.
AutocorrelationBound autocorrelation_lower_bound_check(const DensityState& omega,
                                                       const Interaction& phi, double beta,
                                                       const LocalOperator& a);

/// min over samples of Re(-i omega(A* delta(A))); nonnegative iff no sample
/// witnesses an energy decrease.
double ground_state_residual(const DensityState& omega, const Interaction& phi,
                             const std::vector<LocalOperator>& samples);

/// min over unitaries of Re(-i omega(U* delta(U))).
double passivity_check(const DensityState& omega, const Interaction& phi,
                       const std::vector<LocalOperator>& unitaries);

/// -Tr(rho log rho), natural log, eigenvalues below 1e-14 contribute zero.
double von_neumann_entropy(const DensityState& omega);

/// Tr(rho log rho - rho log sigma); +infinity when rho has weight outside
/// the support of sigma (eigenvalue threshold 1e-12).
double relative_entropy(const DensityState& sigma, const DensityState& rho);

/// F_beta(rho) = rho(H) - S(rho)/beta.
double free_energy(const DensityState& omega, const LocalOperator& h, double beta);
/// Phi(beta) = -log(Tr e^{-beta H})/beta, the free energy of the Gibbs state.
double equilibrium_free_energy(const LocalOperator& h, double beta);

/// S_Lambda / |Lambda| for each volume; no limit is claimed.
std::vector<double> entropy_density_sequence(
    const std::function<DensityState(const Region&)>& state_rule, const std::vector<Region>& volumes);

/// omega(E_Phi) for a translation-invariant interaction; the state's region
/// must contain the support of the mean-energy observable.
double mean_energy_density(const Interaction& phi, const DensityState& omega);

BlochVector bloch_vector(const DensityState& omega);
DensityState bloch_state(const BlochVector& v, const Region& single_site_region);

/// P = 1 - ||omega1 - omega2||^2 / 4 with the functional norm realized as
/// the trace norm of rho1 - rho2.
double transition_probability(const DensityState& omega1, const DensityState& omega2);

struct PolarizationGap {
  double plus = 0, minus = 0;
};
/// omega(m) for m = (1/L) sum sigma^z on the state's chain.
double polarization(const DensityState& omega);
/// Polarization of the all-up and all-down product chains of odd length L.
PolarizationGap polarization_gap(int length);

}  // namespace spinlattice
