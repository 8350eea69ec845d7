#include "spinlattice/models.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace spinlattice {

namespace {

Site shifted(const Site& s, const std::vector<Coord>& v) {
  Site out = s;
  for (int i = 0; i < s.dim(); ++i) out.coords[i] += v[i];
  return out;
}

// Shifting every site by the same vector preserves the canonical order, so
// the matrix rides along unchanged.
LocalOperator shift_term(const LocalOperator& term, const std::vector<Coord>& v) {
  std::vector<Site> sites;
  sites.reserve(term.support.size());
  for (const Site& s : term.support.sites()) sites.push_back(shifted(s, v));
  return LocalOperator(Region::open(std::move(sites)), term.matrix, term.site_dim);
}

void bounding_box(const Region& r, std::vector<Coord>& lo, std::vector<Coord>& hi) {
  lo.assign(r.dim(), 0);
  hi.assign(r.dim(), 0);
  for (int i = 0; i < r.dim(); ++i) {
    lo[i] = hi[i] = r.sites().front().coords[i];
    for (const Site& s : r.sites()) {
      lo[i] = std::min(lo[i], s.coords[i]);
      hi[i] = std::max(hi[i], s.coords[i]);
    }
  }
}

void for_each_shift(const std::vector<Coord>& lo, const std::vector<Coord>& hi,
                    const std::function<void(const std::vector<Coord>&)>& fn) {
  std::vector<Coord> v(lo);
  while (true) {
    fn(v);
    int axis = static_cast<int>(v.size()) - 1;
    while (axis >= 0) {
      if (++v[axis] <= hi[axis]) break;
      v[axis] = lo[axis];
      --axis;
    }
    if (axis < 0) break;
  }
}

}  // namespace

Interaction Interaction::from_terms(std::vector<LocalOperator> terms,
                                    std::optional<std::int64_t> range_hint) {
  Interaction phi;
  for (auto& t : terms) {
    if (t.support.empty()) throw std::invalid_argument("Interaction: terms need nonempty support");
    if ((t.matrix - t.matrix.adjoint()).norm() > 1e-10 * std::max(1.0, t.matrix.norm()))
      throw std::invalid_argument("Interaction: term is not Hermitian");
    auto same = std::find_if(phi.terms_.begin(), phi.terms_.end(),
                             [&](const LocalOperator& u) { return u.support == t.support; });
    if (same != phi.terms_.end())
      same->matrix += t.matrix;
    else
      phi.terms_.push_back(std::move(t));
  }
  std::int64_t max_diam = 0;
  for (const auto& t : phi.terms_) {
    phi.site_dim_ = t.site_dim;
    phi.max_term_sites_ = std::max<int>(phi.max_term_sites_, static_cast<int>(t.support.size()));
    max_diam = std::max(max_diam, diameter(t.support.natural_metric(), t.support));
  }
  if (range_hint) {
    if (max_diam > *range_hint)
      throw std::invalid_argument("Interaction: term diameter exceeds the declared range");
    phi.range_ = *range_hint;
  } else {
    phi.range_ = max_diam;
  }
  for (const auto& t : phi.terms_)
    if (t.site_dim != phi.site_dim_)
      throw std::invalid_argument("Interaction: mixed site dimensions");
  return phi;
}

Interaction Interaction::translation_invariant(std::vector<LocalOperator> base_terms,
                                               std::optional<std::int64_t> range_hint) {
  for (const auto& t : base_terms)
    if (t.support.is_torus())
      throw std::invalid_argument("Interaction: translation rules are for open Z^d supports");
  Interaction phi = from_terms(std::move(base_terms), range_hint);
  phi.translation_invariant_ = true;
  return phi;
}

const std::vector<LocalOperator>& Interaction::terms() const {
  if (translation_invariant_)
    throw std::logic_error("Interaction::terms: translation-invariant rule has no finite term list");
  return terms_;
}

std::vector<LocalOperator> Interaction::shifted_terms(const Region& probe, bool require_inside) const {
  std::vector<LocalOperator> out;
  if (probe.empty()) return out;
  const int d = probe.dim();
  std::vector<Coord> plo, phi_box;
  bounding_box(probe, plo, phi_box);
  for (const auto& term : terms_) {
    if (term.support.dim() != d)
      throw std::invalid_argument("Interaction: window dimension does not match the rule");
    std::vector<Coord> tlo, thi;
    bounding_box(term.support, tlo, thi);
    // Shifts for which the term's bounding box meets (or fits inside) the probe's.
    std::vector<Coord> slo(d), shi(d);
    for (int i = 0; i < d; ++i) {
      slo[i] = plo[i] - (require_inside ? tlo[i] : thi[i]);
      shi[i] = phi_box[i] - (require_inside ? thi[i] : tlo[i]);
    }
    bool any = true;
    for (int i = 0; i < d; ++i)
      if (slo[i] > shi[i]) any = false;
    if (!any) continue;
    for_each_shift(slo, shi, [&](const std::vector<Coord>& v) {
      LocalOperator t = shift_term(term, v);
      if (require_inside ? probe.contains(t.support) : probe.intersects(t.support))
        out.push_back(std::move(t));
    });
  }
  return out;
}

std::vector<LocalOperator> Interaction::terms_within(const Region& window) const {
  if (!translation_invariant_) {
    std::vector<LocalOperator> out;
    for (const auto& t : terms_)
      if (window.contains(t.support)) out.push_back(t);
    return out;
  }
  const std::string key = window.to_json().dump();
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->by_window.find(key);
  if (it == cache_->by_window.end())
    it = cache_->by_window.emplace(key, shifted_terms(window, true)).first;
  return it->second;
}

std::vector<LocalOperator> Interaction::terms_touching(const Region& region) const {
  if (!translation_invariant_) {
    std::vector<LocalOperator> out;
    for (const auto& t : terms_)
      if (region.intersects(t.support)) out.push_back(t);
    return out;
  }
  return shifted_terms(region, false);
}

LocalOperator local_hamiltonian(const Interaction& phi, const Region& region) {
  LocalOperator h = region.empty() ? scalar_operator(0) : identity_on(region, phi.site_dim());
  h.matrix.setZero();
  for (const auto& term : phi.terms_within(region)) h.matrix += embed(term, region).matrix;
  return h;
}

namespace {
double term_weight(const LocalOperator& term, double lambda, int n_bound) {
  const double size = static_cast<double>(term.support.size());
  const double diam = static_cast<double>(diameter(term.support.natural_metric(), term.support));
  return size * operator_norm(term) * std::pow(double(n_bound), 2.0 * size) * std::exp(lambda * diam);
}

double sup_over_covered_sites(const Interaction& phi,
                              const std::function<double(const LocalOperator&)>& weight) {
  // sup_x sum_{terms containing x}; only sites covered by some term matter.
  Region covered;
  for (const auto& t : phi.base_terms()) covered = region_union(covered, t.support);
  double best = 0;
  for (const Site& x : covered.sites()) {
    double sum = 0;
    for (const auto& t : phi.base_terms())
      if (t.support.contains(x)) sum += weight(t);
    best = std::max(best, sum);
  }
  return best;
}
}  // namespace

double interaction_norm(const Interaction& phi, double lambda, int n_bound) {
  if (lambda < 0) throw std::invalid_argument("interaction_norm: lambda must be nonnegative");
  if (n_bound < 2) throw std::invalid_argument("interaction_norm: dimension bound N must be >= 2");
  if (phi.empty()) return 0;
  if (phi.is_translation_invariant()) {
    // Each base term covers a fixed site through |support| of its translates.
    double sum = 0;
    for (const auto& t : phi.base_terms())
      sum += static_cast<double>(t.support.size()) * term_weight(t, lambda, n_bound);
    return sum;
  }
  return sup_over_covered_sites(phi, [&](const LocalOperator& t) { return term_weight(t, lambda, n_bound); });
}

double interaction_norm_bounded(const Interaction& phi) {
  if (phi.empty()) return 0;
  if (phi.is_translation_invariant()) {
    double sum = 0;
    for (const auto& t : phi.base_terms())
      sum += static_cast<double>(t.support.size()) * operator_norm(t);
    return sum;
  }
  return sup_over_covered_sites(phi, [](const LocalOperator& t) { return operator_norm(t); });
}

double interaction_norm_exp_size(const Interaction& phi, double lambda) {
  if (phi.empty()) return 0;
  if (!phi.is_translation_invariant())
    throw std::invalid_argument("interaction_norm_exp_size: needs a translation-invariant rule");
  double sum = 0;
  for (const auto& t : phi.base_terms()) {
    const double size = static_cast<double>(t.support.size());
    sum += size * operator_norm(t) * std::exp(lambda * size);
  }
  return sum;
}

InteractionNorms compute_interaction_norms(const Interaction& phi, double lambda, int n_bound) {
  InteractionNorms norms;
  norms.lambda = lambda;
  norms.norm_lambda = interaction_norm(phi, lambda, n_bound);
  norms.norm_bounded = interaction_norm_bounded(phi);
  norms.site_dim_bound = n_bound;
  return norms;
}

LocalOperator derivation_apply(const Interaction& phi, const LocalOperator& a) {
  auto terms = phi.terms_touching(a.support);
  Region u = a.support;
  for (const auto& t : terms) u = region_union(u, t.support);
  MatrixC ma = embed(a, u).matrix;
  MatrixC acc = MatrixC::Zero(ma.rows(), ma.cols());
  for (const auto& t : terms) {
    MatrixC mt = embed(t, u).matrix;
    acc += cx(0, 1) * (mt * ma - ma * mt);
  }
  return LocalOperator(u, std::move(acc), a.site_dim);
}

LocalOperator mean_energy_operator(const Interaction& phi) {
  if (!phi.is_translation_invariant())
    throw std::invalid_argument("mean_energy_operator: needs a translation-invariant rule");
  if (phi.empty()) return scalar_operator(0);
  const int d = phi.base_terms().front().support.dim();
  const Site origin(std::vector<Coord>(d, 0));
  Region u;
  std::vector<LocalOperator> contributions;
  for (const auto& term : phi.base_terms()) {
    for (const Site& s : term.support.sites()) {
      std::vector<Coord> v(d);
      for (int i = 0; i < d; ++i) v[i] = origin.coords[i] - s.coords[i];
      LocalOperator t = shift_term(term, v);
      u = region_union(u, t.support);
      contributions.push_back(cx(1.0 / static_cast<double>(t.support.size()), 0) * t);
    }
  }
  LocalOperator e = identity_on(u, phi.site_dim());
  e.matrix.setZero();
  for (const auto& t : contributions) e.matrix += embed(t, u).matrix;
  return e;
}

Interaction ising_interaction(double h, double coupling) {
  std::vector<LocalOperator> base;
  if (h != 0) base.push_back(cx(-h, 0) * pauli_at(Site{0}, PauliAxis::Z));
  if (coupling != 0) {
    LocalOperator xx(Region::line(0, 1), kron(pauli(PauliAxis::X), pauli(PauliAxis::X)));
    base.push_back(cx(-coupling, 0) * xx);
  }
  return Interaction::translation_invariant(std::move(base), 1);
}

Interaction heisenberg_xxz_interaction(double jx, double jy, double jz, double h) {
  std::vector<LocalOperator> base;
  if (h != 0) base.push_back(cx(-h, 0) * pauli_at(Site{0}, PauliAxis::Z));
  if (jx != 0 || jy != 0 || jz != 0) {
    MatrixC pair = -0.5 * (jx * kron(pauli(PauliAxis::X), pauli(PauliAxis::X)) +
                           jy * kron(pauli(PauliAxis::Y), pauli(PauliAxis::Y)) +
                           jz * kron(pauli(PauliAxis::Z), pauli(PauliAxis::Z)));
    base.push_back(LocalOperator(Region::line(0, 1), std::move(pair)));
  }
  return Interaction::translation_invariant(std::move(base), 1);
}

}  // namespace spinlattice
