#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "spinlattice/tensor.hpp"

namespace spinlattice {

/// A map from finite site-sets to Hermitian local operators. Either a finite
/// explicit term list, or a translation-invariant rule (base terms anchored
/// near the origin plus the shift law); the latter is materialized into
/// concrete windows on demand and the materialization is cached per window.
class Interaction {
 public:
  static Interaction from_terms(std::vector<LocalOperator> terms,
                                std::optional<std::int64_t> range_hint = std::nullopt);
  static Interaction translation_invariant(std::vector<LocalOperator> base_terms,
                                           std::optional<std::int64_t> range_hint = std::nullopt);

  bool is_translation_invariant() const { return translation_invariant_; }
  /// Finite range c_Phi: the declared hint, or the maximal term diameter.
  std::int64_t range() const { return range_; }
  /// N_Phi: terms on more than this many sites vanish.
  int max_term_sites() const { return max_term_sites_; }
  int site_dim() const { return site_dim_; }
  bool empty() const { return terms_.empty(); }

  /// Explicit terms of a finite interaction.
  const std::vector<LocalOperator>& terms() const;
  /// Stored terms: the finite list, or the base terms of a rule.
  const std::vector<LocalOperator>& base_terms() const { return terms_; }
  /// All terms with support contained in `window` (sum domain of H_window).
  std::vector<LocalOperator> terms_within(const Region& window) const;
  /// All terms whose support intersects `region` (sum domain of the derivation).
  std::vector<LocalOperator> terms_touching(const Region& region) const;

 private:
  Interaction() = default;
  std::vector<LocalOperator> shifted_terms(const Region& probe, bool require_inside) const;

  std::vector<LocalOperator> terms_;  // finite list, or the base terms of the rule
  bool translation_invariant_ = false;
  std::int64_t range_ = 0;
  int max_term_sites_ = 0;
  int site_dim_ = 2;

  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::vector<LocalOperator>> by_window;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// H_region = sum of all interaction terms contained in the region.
LocalOperator local_hamiltonian(const Interaction& phi, const Region& region);

/// sup_x sum_{L ni x} |L| ||Phi(L)|| N^{2|L|} e^{lambda diam(L)}; exact finite
/// sup-sum (for a translation-invariant rule the sup is the single-site sum).
double interaction_norm(const Interaction& phi, double lambda, int n_bound);
/// sup_x sum_{L ni x} ||Phi(L)||, the bounded-interaction norm.
double interaction_norm_bounded(const Interaction& phi);
/// sum_{L ni 0} e^{lambda |L|} ||Phi(L)||, the cardinality-weighted variant
/// used by the free-energy theorem (translation-invariant rules only).
double interaction_norm_exp_size(const Interaction& phi, double lambda);

struct InteractionNorms {
  double lambda = 0;
  double norm_lambda = 0;
  double norm_bounded = 0;
  int site_dim_bound = 2;
};
InteractionNorms compute_interaction_norms(const Interaction& phi, double lambda, int n_bound);

/// delta(A) = i sum_{X meeting supp A} [Phi(X), A]; the support grows by at
/// most the interaction range.
LocalOperator derivation_apply(const Interaction& phi, const LocalOperator& a);

/// E_Phi = sum_{L ni 0} Phi(L)/|L| (translation-invariant rules only).
LocalOperator mean_energy_operator(const Interaction& phi);

/// Field term -h sigma^z per site, exchange -J sigma^x sigma^x on
/// nearest-neighbour pairs of the chain.
Interaction ising_interaction(double h, double coupling);
/// Nearest-neighbour pair term -1/2 (Jx XX + Jy YY + Jz ZZ), field -h sigma^z.
Interaction heisenberg_xxz_interaction(double jx, double jy, double jz, double h);

}  // namespace spinlattice
