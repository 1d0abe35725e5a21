#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <string>
#include <utility>
#include <vector>

#include "irtopo/error.hpp"
#include "irtopo/point_set.hpp"

namespace irtopo {

/// A binary relation on {0..n-1}, one successor set per point.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : rows_(n) {}

  static Relation identity(std::size_t n) {
    Relation r(n);
    for (PointId x = 0; x < n; ++x) r.set(x, x);
    return r;
  }

  /// Builds the relation from explicit pairs and adds the diagonal.
  static Relation reflexive_from_pairs(std::size_t n, std::span<const std::pair<PointId, PointId>> pairs) {
    Relation r = identity(n);
    for (auto [x, y] : pairs) {
      if (x >= n || y >= n) {
        throw Error(Errc::InvalidPoint, "pair (" + std::to_string(x) + "," + std::to_string(y) +
                                            ") out of range for " + std::to_string(n) + " points");
      }
      r.set(x, y);
    }
    return r;
  }

  std::size_t size() const { return rows_.size(); }
  bool holds(PointId x, PointId y) const { return rows_[x].contains(y); }
  void set(PointId x, PointId y) { rows_[x].insert(y); }
  PointSet successors(PointId x) const { return rows_[x]; }

  std::optional<PointId> reflexivity_violation() const {
    for (PointId x = 0; x < size(); ++x) {
      if (!holds(x, x)) return x;
    }
    return std::nullopt;
  }

  /// A triple (x, y, z) with x~y, y~z but not x~z.
  std::optional<std::array<PointId, 3>> transitivity_violation() const {
    for (PointId x = 0; x < size(); ++x) {
      for (PointId y : rows_[x]) {
        PointSet missing = rows_[y] - rows_[x];
        if (!missing.empty()) return std::array<PointId, 3>{x, y, missing.first()};
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<PointId, PointId>> antisymmetry_violation() const {
    for (PointId x = 0; x < size(); ++x) {
      for (PointId y : rows_[x]) {
        if (y != x && holds(y, x)) return std::pair{x, y};
      }
    }
    return std::nullopt;
  }

  /// Off-diagonal pairs in lexicographic order.
  std::vector<std::pair<PointId, PointId>> strict_pairs() const {
    std::vector<std::pair<PointId, PointId>> out;
    for (PointId x = 0; x < size(); ++x) {
      for (PointId y : rows_[x]) {
        if (y != x) out.emplace_back(x, y);
      }
    }
    return out;
  }

  bool operator==(const Relation&) const = default;

 private:
  std::vector<PointSet> rows_;
};

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

/// A finite topological space, stored as its specialization preorder.
///
/// reach(x, y) holds iff y lies in the closure of {x}, which is exactly when an
/// ir-path runs from x to y. The open sets are the subsets closed downward
/// under reach: O is open iff min_open(y) is contained in O for every y in O,
/// where min_open(y) = { z : reach(z, y) } is the smallest open neighbourhood
/// of y. Instances are immutable once built.
///
/// Labels are metadata. Two spaces compare equal when their reach relations
/// coincide index by index.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  static FiniteSpace from_reach(std::vector<std::string> labels, const Relation& reach) {
    const std::size_t n = labels.size();
    if (reach.size() != n) {
      throw Error(Errc::InvalidPoint, "relation has " + std::to_string(reach.size()) + " points but " +
                                          std::to_string(n) + " labels were given");
    }
    check_labels(labels);
    if (auto x = reach.reflexivity_violation()) {
      throw Error(Errc::ReachNotPreorder, "not reflexive at point " + std::to_string(*x));
    }
    if (auto t = reach.transitivity_violation()) {
      throw Error(Errc::ReachNotPreorder, "not transitive: (" + std::to_string((*t)[0]) + "," +
                                              std::to_string((*t)[1]) + "), (" + std::to_string((*t)[1]) +
                                              "," + std::to_string((*t)[2]) + ") present but (" +
                                              std::to_string((*t)[0]) + "," + std::to_string((*t)[2]) +
                                              ") missing");
    }
    FiniteSpace s;
    s.labels_ = std::move(labels);
    s.up_.resize(n);
    s.down_.resize(n);
    for (PointId x = 0; x < n; ++x) {
      s.up_[x] = reach.successors(x);
      for (PointId y : s.up_[x]) s.down_[y].insert(x);
    }
    return s;
  }

  /// Rejects families that are not topologies; duplicates are dropped.
  static FiniteSpace from_open_sets(std::vector<std::string> labels, std::span<const PointSet> opens) {
    const std::size_t n = labels.size();
    check_labels(labels);
    const PointSet all = PointSet::full(n);
    std::vector<PointSet> family(opens.begin(), opens.end());
    for (PointSet o : family) {
      if (!o.is_subset_of(all)) {
        throw Error(Errc::InvalidPoint, "open set " + o.to_string() + " mentions a point outside 0.." +
                                            std::to_string(n == 0 ? 0 : n - 1));
      }
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    auto present = [&](PointSet o) { return std::binary_search(family.begin(), family.end(), o); };
    if (!present(PointSet{})) throw Error(Errc::NotATopology, "the empty set is not listed");
    if (!present(all)) throw Error(Errc::NotATopology, "the full set " + all.to_string() + " is not listed");
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (!present(family[i] | family[j])) {
          throw Error(Errc::NotATopology, "union of " + family[i].to_string() + " and " +
                                              family[j].to_string() + " is not open");
        }
        if (!present(family[i] & family[j])) {
          throw Error(Errc::NotATopology, "intersection of " + family[i].to_string() + " and " +
                                              family[j].to_string() + " is not open");
        }
      }
    }
    // y is in cl{x} iff no open set contains y while missing x.
    Relation reach(n);
    for (PointId x = 0; x < n; ++x) {
      PointSet separated;
      for (PointSet o : family) {
        if (!o.contains(x)) separated |= o;
      }
      for (PointId y : separated.complement(n)) reach.set(x, y);
    }
    return from_reach(std::move(labels), reach);
  }

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  PointSet points() const { return PointSet::full(size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(PointId x) const { return labels_.at(x); }
  std::optional<PointId> index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<PointId>(it - labels_.begin());
  }

  bool reach(PointId x, PointId y) const { return up_[x].contains(y); }
  /// cl{x} = { y : reach(x, y) }.
  PointSet closure_of_point(PointId x) const { return up_[x]; }
  /// The intersection of all open sets containing x.
  PointSet min_open(PointId x) const { return down_[x]; }

  Relation reach_relation() const {
    Relation r(size());
    for (PointId x = 0; x < size(); ++x) {
      for (PointId y : up_[x]) r.set(x, y);
    }
    return r;
  }

  bool is_open(PointSet a) const {
    for (PointId y : a) {
      if (!down_[y].is_subset_of(a)) return false;
    }
    return a.is_subset_of(points());
  }

  bool operator==(const FiniteSpace& other) const { return up_ == other.up_; }

 private:
  static void check_labels(const std::vector<std::string>& labels) {
    if (labels.size() > kMaxPoints) {
      throw Error(Errc::TooManyPoints,
                  std::to_string(labels.size()) + " points exceeds the limit of " + std::to_string(kMaxPoints));
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        if (labels[i] == labels[j]) throw Error(Errc::DuplicateLabel, "label \"" + labels[i] + "\" repeats");
      }
    }
  }

  std::vector<std::string> labels_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
};

/// Every open set, sorted by (cardinality, bitmask). Throws BudgetExceeded
/// once more than `max_count` sets have been produced.
inline std::vector<PointSet> open_sets(const FiniteSpace& space, std::size_t max_count = std::size_t{1} << 22) {
  std::vector<PointSet> out;
  // Decide the lowest undecided point: leaving it out removes everything it
  // specializes to, taking it in pulls in its minimal neighbourhood.
  auto visit = [&](auto&& self, PointSet undecided, PointSet chosen) -> void {
    if (undecided.empty()) {
      if (out.size() == max_count) {
        throw Error(Errc::BudgetExceeded, "more than " + std::to_string(max_count) + " open sets");
      }
      out.push_back(chosen);
      return;
    }
    const PointId p = undecided.first();
    self(self, undecided - space.closure_of_point(p), chosen);
    self(self, undecided - space.min_open(p), chosen | space.min_open(p));
  };
  visit(visit, space.points(), PointSet{});
  std::sort(out.begin(), out.end());
  return out;
}

inline PointSet closure(const FiniteSpace& space, PointSet a) {
  PointSet out;
  for (PointId x : a) out |= space.closure_of_point(x);
  return out;
}

inline PointSet interior(const FiniteSpace& space, PointSet a) {
  PointSet out;
  for (PointId y : a) {
    if (space.min_open(y).is_subset_of(a)) out.insert(y);
  }
  return out;
}

/// Points of `a` keep their relative order and labels.
inline FiniteSpace subspace(const FiniteSpace& space, PointSet a) {
  if (a.empty()) throw Error(Errc::EmptySubspace, "subspace on the empty set");
  if (!a.is_subset_of(space.points())) throw Error(Errc::InvalidPoint, "subset " + a.to_string() + " out of range");
  const std::vector<PointId> members = a.to_vector();
  std::vector<std::string> labels;
  Relation reach(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    labels.push_back(space.label(members[i]));
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (space.reach(members[i], members[j])) reach.set(i, j);
    }
  }
  return FiniteSpace::from_reach(std::move(labels), reach);
}

/// Point (x, y) gets index x * |Y| + y and label "(x,y)".
inline FiniteSpace product(const FiniteSpace& x_space, const FiniteSpace& y_space) {
  const std::size_t nx = x_space.size();
  const std::size_t ny = y_space.size();
  if (nx * ny > kMaxPoints) {
    throw Error(Errc::TooManyPoints, "product has " + std::to_string(nx * ny) + " points");
  }
  std::vector<std::string> labels;
  labels.reserve(nx * ny);
  Relation reach(nx * ny);
  for (PointId a = 0; a < nx; ++a) {
    for (PointId b = 0; b < ny; ++b) {
      labels.push_back("(" + x_space.label(a) + "," + y_space.label(b) + ")");
      for (PointId c : x_space.closure_of_point(a)) {
        for (PointId d : y_space.closure_of_point(b)) reach.set(a * ny + b, c * ny + d);
      }
    }
  }
  return FiniteSpace::from_reach(std::move(labels), reach);
}

inline bool is_T0(const FiniteSpace& space) { return !space.reach_relation().antisymmetry_violation(); }

inline bool is_T1(const FiniteSpace& space) {
  for (PointId x = 0; x < space.size(); ++x) {
    if (space.closure_of_point(x) != PointSet::single(x)) return false;
  }
  return true;
}

/// Two nonempty open sets meet iff some pair of their minimal neighbourhoods do.
inline bool is_hyperconnected(const FiniteSpace& space) {
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = x + 1; y < space.size(); ++y) {
      if (!space.min_open(x).intersects(space.min_open(y))) return false;
    }
  }
  return true;
}

}  // namespace irtopo
