#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace spinlattice {

using Coord = std::int64_t;

/// A point of Z^d. Comparison is lexicographic on coordinates; this order
/// fixes the tensor-leg order everywhere in the library.
struct Site {
  std::vector<Coord> coords;

  Site() = default;
  Site(std::initializer_list<Coord> c) : coords(c) {}
  explicit Site(std::vector<Coord> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  auto operator<=>(const Site&) const = default;
};

/// Taxicab metric on Z^d, optionally with per-axis wraparound.
class Metric {
 public:
  static Metric manhattan() { return Metric({}); }
  static Metric torus(std::vector<Coord> lengths);

  bool is_torus() const { return !lengths_.empty(); }
  const std::vector<Coord>& lengths() const { return lengths_; }

  std::int64_t distance(const Site& x, const Site& y) const;

 private:
  explicit Metric(std::vector<Coord> lengths) : lengths_(std::move(lengths)) {}
  std::vector<Coord> lengths_;  // empty = open Z^d
};

/// A finite sublattice: duplicate-free sites in canonical (lexicographic)
/// order, with an open or toroidal geometry tag.
class Region {
 public:
  Region() = default;  // the empty region

  static Region open(std::vector<Site> sites);
  static Region on_torus(std::vector<Site> sites, std::vector<Coord> lengths);
  /// 1-D sites first..last inclusive.
  static Region line(Coord first, Coord last);
  /// Axis-aligned box with inclusive corners.
  static Region box(const std::vector<Coord>& lo, const std::vector<Coord>& hi);

  const std::vector<Site>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }
  int dim() const { return sites_.empty() ? 0 : sites_.front().dim(); }

  bool is_torus() const { return !torus_lengths_.empty(); }
  const std::vector<Coord>& torus_lengths() const { return torus_lengths_; }

  /// The metric matching this region's geometry tag.
  Metric natural_metric() const;

  bool contains(const Site& s) const;
  bool contains(const Region& other) const;
  /// Position of `s` in the canonical order, if present.
  std::optional<std::size_t> index_of(const Site& s) const;
  bool intersects(const Region& other) const;

  bool operator==(const Region&) const = default;

  nlohmann::json to_json() const;
  static Region from_json(const nlohmann::json& j);

 private:
  Region(std::vector<Site> sites, std::vector<Coord> lengths);
  std::vector<Site> sites_;          // sorted, unique
  std::vector<Coord> torus_lengths_;  // empty = open
};

Region region_union(const Region& a, const Region& b);
Region region_intersection(const Region& a, const Region& b);
/// Sites of `a` not in `b`.
Region region_difference(const Region& a, const Region& b);

std::int64_t distance(const Metric& m, const Site& x, const Site& y);
std::int64_t region_distance(const Metric& m, const Region& a, const Region& b);
Region ball(const Metric& m, const Site& center, std::int64_t radius, const Region& within);
std::int64_t diameter(const Metric& m, const Region& a);
Region fattening(const Region& a, std::int64_t radius, const Region& within, const Metric& m);

}  // namespace spinlattice
