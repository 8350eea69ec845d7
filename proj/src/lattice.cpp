#include "spinlattice/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace spinlattice {

Metric Metric::torus(std::vector<Coord> lengths) {
  if (lengths.empty()) throw std::invalid_argument("torus metric needs at least one axis length");
  for (Coord l : lengths)
    if (l < 1) throw std::invalid_argument("torus axis lengths must be positive");
  return Metric(std::move(lengths));
}

std::int64_t Metric::distance(const Site& x, const Site& y) const {
  if (x.dim() != y.dim()) throw std::invalid_argument("distance: site dimensions differ");
  if (is_torus() && static_cast<int>(lengths_.size()) != x.dim())
    throw std::invalid_argument("distance: metric dimension does not match sites");
  std::int64_t d = 0;
  for (int i = 0; i < x.dim(); ++i) {
    std::int64_t delta = std::llabs(x.coords[i] - y.coords[i]);
    if (is_torus()) delta = std::min(delta, lengths_[i] - delta);
    d += delta;
  }
  return d;
}

Region::Region(std::vector<Site> sites, std::vector<Coord> lengths)
    : sites_(std::move(sites)), torus_lengths_(std::move(lengths)) {
  std::sort(sites_.begin(), sites_.end());
  sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
  if (sites_.empty()) return;
  const int d = sites_.front().dim();
  if (d < 1) throw std::invalid_argument("Region: sites must have dimension >= 1");
  for (const Site& s : sites_) {
    if (s.dim() != d) throw std::invalid_argument("Region: mixed site dimensions");
    if (!torus_lengths_.empty()) {
      if (static_cast<int>(torus_lengths_.size()) != d)
        throw std::invalid_argument("Region: torus lengths do not match site dimension");
      for (int i = 0; i < d; ++i)
        if (s.coords[i] < 0 || s.coords[i] >= torus_lengths_[i])
          throw std::invalid_argument("Region: torus coordinate out of [0, length)");
    }
  }
}

Region Region::open(std::vector<Site> sites) { return Region(std::move(sites), {}); }

Region Region::on_torus(std::vector<Site> sites, std::vector<Coord> lengths) {
  if (lengths.empty()) throw std::invalid_argument("on_torus: lengths required");
  return Region(std::move(sites), std::move(lengths));
}

Region Region::line(Coord first, Coord last) {
  std::vector<Site> sites;
  for (Coord n = first; n <= last; ++n) sites.push_back(Site{n});
  return open(std::move(sites));
}

Region Region::box(const std::vector<Coord>& lo, const std::vector<Coord>& hi) {
  if (lo.size() != hi.size() || lo.empty()) throw std::invalid_argument("box: corner dimensions differ");
  std::vector<Site> sites;
  std::vector<Coord> cur(lo);
  while (true) {
    sites.push_back(Site(cur));
    int axis = static_cast<int>(cur.size()) - 1;
    while (axis >= 0) {
      if (++cur[axis] <= hi[axis]) break;
      cur[axis] = lo[axis];
      --axis;
    }
    if (axis < 0) break;
  }
  return open(std::move(sites));
}

Metric Region::natural_metric() const {
  return is_torus() ? Metric::torus(torus_lengths_) : Metric::manhattan();
}

bool Region::contains(const Site& s) const {
  return std::binary_search(sites_.begin(), sites_.end(), s);
}

bool Region::contains(const Region& other) const {
  return std::includes(sites_.begin(), sites_.end(), other.sites_.begin(), other.sites_.end());
}

std::optional<std::size_t> Region::index_of(const Site& s) const {
  auto it = std::lower_bound(sites_.begin(), sites_.end(), s);
  if (it == sites_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - sites_.begin());
}

bool Region::intersects(const Region& other) const {
  auto a = sites_.begin();
  auto b = other.sites_.begin();
  while (a != sites_.end() && b != other.sites_.end()) {
    if (*a < *b)
      ++a;
    else if (*b < *a)
      ++b;
    else
      return true;
  }
  return false;
}

nlohmann::json Region::to_json() const {
  nlohmann::json j;
  j["geometry"] = is_torus() ? "torus" : "open";
  if (is_torus()) j["lengths"] = torus_lengths_;
  nlohmann::json sites = nlohmann::json::array();
  for (const Site& s : sites_) sites.push_back(s.coords);
  j["sites"] = sites;
  return j;
}

Region Region::from_json(const nlohmann::json& j) {
  std::vector<Site> sites;
  for (const auto& c : j.at("sites")) sites.push_back(Site(c.get<std::vector<Coord>>()));
  if (j.at("geometry") == "torus")
    return on_torus(std::move(sites), j.at("lengths").get<std::vector<Coord>>());
  if (j.at("geometry") != "open") throw std::invalid_argument("Region: unknown geometry tag");
  return open(std::move(sites));
}

namespace {
void check_same_geometry(const Region& a, const Region& b, const char* what) {
  if (a.empty() || b.empty()) return;
  if (a.torus_lengths() != b.torus_lengths())
    throw std::invalid_argument(std::string(what) + ": regions have different geometries");
}
}  // namespace

Region region_union(const Region& a, const Region& b) {
  check_same_geometry(a, b, "region_union");
  if (a.empty()) return b;
  std::vector<Site> sites(a.sites());
  sites.insert(sites.end(), b.sites().begin(), b.sites().end());
  return a.is_torus() ? Region::on_torus(std::move(sites), a.torus_lengths())
                      : Region::open(std::move(sites));
}

Region region_intersection(const Region& a, const Region& b) {
  check_same_geometry(a, b, "region_intersection");
  std::vector<Site> sites;
  std::set_intersection(a.sites().begin(), a.sites().end(), b.sites().begin(), b.sites().end(),
                        std::back_inserter(sites));
  if (a.is_torus() && !sites.empty())
    return Region::on_torus(std::move(sites), a.torus_lengths());
  return Region::open(std::move(sites));
}

Region region_difference(const Region& a, const Region& b) {
  check_same_geometry(a, b, "region_difference");
  std::vector<Site> sites;
  std::set_difference(a.sites().begin(), a.sites().end(), b.sites().begin(), b.sites().end(),
                      std::back_inserter(sites));
  if (a.is_torus() && !sites.empty())
    return Region::on_torus(std::move(sites), a.torus_lengths());
  return Region::open(std::move(sites));
}

std::int64_t distance(const Metric& m, const Site& x, const Site& y) { return m.distance(x, y); }

std::int64_t region_distance(const Metric& m, const Region& a, const Region& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("region_distance: empty region");
  std::int64_t best = -1;
  for (const Site& x : a.sites())
    for (const Site& y : b.sites()) {
      std::int64_t d = m.distance(x, y);
      if (best < 0 || d < best) best = d;
    }
  return best;
}

Region ball(const Metric& m, const Site& center, std::int64_t radius, const Region& within) {
  if (radius < 0) throw std::invalid_argument("ball: radius must be nonnegative");
  std::vector<Site> sites;
  for (const Site& s : within.sites())
    if (m.distance(center, s) <= radius) sites.push_back(s);
  if (within.is_torus() && !sites.empty())
    return Region::on_torus(std::move(sites), within.torus_lengths());
  return Region::open(std::move(sites));
}

std::int64_t diameter(const Metric& m, const Region& a) {
  if (a.empty()) throw std::invalid_argument("diameter: empty region");
  std::int64_t best = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      best = std::max(best, m.distance(a.sites()[i], a.sites()[j]));
  return best;
}

Region fattening(const Region& a, std::int64_t radius, const Region& within, const Metric& m) {
  if (radius < 0) throw std::invalid_argument("fattening: radius must be nonnegative");
  std::vector<Site> sites;
  for (const Site& s : within.sites()) {
    for (const Site& x : a.sites()) {
      if (m.distance(x, s) <= radius) {
        sites.push_back(s);
        break;
      }
    }
  }
  if (within.is_torus() && !sites.empty())
    return Region::on_torus(std::move(sites), within.torus_lengths());
  return Region::open(std::move(sites));
}

}  // namespace spinlattice
