#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "irtopo/homotopy.hpp"
#include "irtopo/space.hpp"

namespace irtopo {

/// How "U is ir-contractible in X" is read.
enum class CoverSense {
  /// The subspace U is itself ir-contractible: U ∩ ⋂_{u∈U} cl{u} is nonempty.
  subspace,
  /// The inclusion U -> X is ir-homotopic to a constant: ⋂_{u∈U} cl{u} is
  /// nonempty, witnesses may lie outside U.
  ambient,
};

constexpr std::string_view to_string(CoverSense sense) {
  return sense == CoverSense::subspace ? "subspace" : "ambient";
}

/// Points a set contracts to under the given reading; empty means U is not
/// ir-contractible in that sense.
inline PointSet contraction_witness(const FiniteSpace& space, PointSet u, CoverSense sense) {
  PointSet w = space.points();
  for (PointId p : u) w &= space.closure_of_point(p);
  return sense == CoverSense::subspace ? (w & u) : w;
}

struct ContractibleOpen {
  PointSet set;
  PointSet witness;
};

/// Nonempty open sets that are ir-contractible in the given sense, in
/// canonical open-set order.
inline std::vector<ContractibleOpen> ir_contractible_opens(const FiniteSpace& space,
                                                           CoverSense sense = CoverSense::subspace) {
  std::vector<ContractibleOpen> out;
  for (PointSet u : open_sets(space)) {
    if (u.empty()) continue;
    PointSet w = contraction_witness(space, u, sense);
    if (!w.empty()) out.push_back({u, w});
  }
  return out;
}

struct CoverReport {
  std::vector<PointSet> sets;
  std::vector<PointSet> witnesses;
  bool minimal = false;
  CoverSense sense = CoverSense::subspace;

  std::size_t size() const { return sets.size(); }
};

inline bool is_open_cover(const FiniteSpace& space, std::span<const PointSet> sets) {
  PointSet all;
  for (PointSet s : sets) {
    if (!space.is_open(s)) return false;
    all |= s;
  }
  return all == space.points();
}

namespace detail {

inline std::vector<std::size_t> greedy_cover(PointSet universe, std::span<const PointSet> candidates) {
  std::vector<std::size_t> chosen;
  PointSet left = universe;
  while (!left.empty()) {
    std::size_t best = candidates.size();
    std::size_t gain = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      std::size_t g = (candidates[i] & left).size();
      if (g > gain) {
        gain = g;
        best = i;
      }
    }
    if (best == candidates.size()) return {};
    chosen.push_back(best);
    left -= candidates[best];
  }
  return chosen;
}

/// Exact minimum set cover by branch and bound: branch on the candidates
/// containing the lowest uncovered point, prune on the incumbent size and on
/// |uncovered| / (largest candidate). The incumbent starts at `seed` when
/// given, else at the greedy cover; only strictly smaller covers replace it.
/// Returns sorted candidate indices, or nullopt if nothing covers `universe`.
inline std::optional<std::vector<std::size_t>> min_set_cover(PointSet universe, std::span<const PointSet> candidates,
                                                             std::optional<std::vector<std::size_t>> seed = {}) {
  if (universe.empty()) return std::vector<std::size_t>{};
  std::vector<std::size_t> best = seed && !seed->empty() ? *seed : greedy_cover(universe, candidates);
  if (best.empty()) return std::nullopt;
  std::size_t widest = 1;
  for (PointSet c : candidates) widest = std::max(widest, c.size());

  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, PointSet left) -> void {
    if (left.empty()) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    const std::size_t need = (left.size() + widest - 1) / widest;
    if (chosen.size() + need >= best.size()) return;
    const PointId p = left.first();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!candidates[i].contains(p)) continue;
      chosen.push_back(i);
      self(self, left - candidates[i]);
      chosen.pop_back();
    }
  };
  search(search, universe);
  std::sort(best.begin(), best.end());
  return best;
}

inline void require_categorical(const FiniteSpace& space, std::span<const PointSet> sets, std::size_t optimum) {
  if (!is_open_cover(space, sets)) throw Error(Errc::NotMinimalCover, "sets are not an open cover");
  for (PointSet s : sets) {
    if (contraction_witness(space, s, CoverSense::subspace).empty()) {
      throw Error(Errc::NotMinimalCover, s.to_string() + " is not ir-contractible");
    }
  }
  if (sets.size() != optimum) {
    throw Error(Errc::NotMinimalCover, "cover has " + std::to_string(sets.size()) + " members, the minimum is " +
                                           std::to_string(optimum));
  }
}

}  // namespace detail

/// Exact Lusternik-Schnirelmann ir-category with an optimal cover.
///
/// Any cover by ir-contractible opens stays one after enlarging each member to
/// an inclusion-maximal ir-contractible open, so the search runs over maximal
/// members only. The minimal neighbourhoods always qualify, so a cover exists.
inline CoverReport ir_cat(const FiniteSpace& space, CoverSense sense = CoverSense::subspace) {
  if (space.empty()) throw Error(Errc::EmptySpace, "ir_cat of the empty space");
  const auto contractible = ir_contractible_opens(space, sense);
  std::vector<PointSet> maximal;
  for (const auto& c : contractible) {
    bool dominated = false;
    for (const auto& d : contractible) {
      if (c.set != d.set && c.set.is_subset_of(d.set)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(c.set);
  }
  const auto picked = detail::min_set_cover(space.points(), maximal);
  if (!picked) throw std::logic_error("ir_cat: minimal neighbourhoods failed to cover");
  CoverReport report;
  report.minimal = true;
  report.sense = sense;
  for (std::size_t i : *picked) {
    report.sets.push_back(maximal[i]);
    report.witnesses.push_back(contraction_witness(space, maximal[i], sense));
  }
  return report;
}

/// Every cover of minimum size by ir-contractible opens (not only maximal
/// ones), each listed in canonical order. Stops after `limit` covers.
inline std::vector<std::vector<PointSet>> minimum_categorical_covers(const FiniteSpace& space,
                                                                    CoverSense sense = CoverSense::subspace,
                                                                    std::size_t limit = 100000) {
  const std::size_t optimum = ir_cat(space, sense).size();
  std::vector<PointSet> candidates;
  for (const auto& c : ir_contractible_opens(space, sense)) candidates.push_back(c.set);
  std::vector<std::vector<PointSet>> out;
  std::vector<PointSet> chosen;
  auto pick = [&](auto&& self, std::size_t from, PointSet covered) -> void {
    if (out.size() >= limit) return;
    if (chosen.size() == optimum) {
      if (covered == space.points()) out.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      self(self, i + 1, covered | candidates[i]);
      chosen.pop_back();
    }
  };
  pick(pick, 0, PointSet{});
  return out;
}

struct Prop3Result {
  bool holds = true;
  /// (i, j, point): the point lies in the witness set of member i and in member j.
  std::optional<std::tuple<std::size_t, std::size_t, PointId>> violation;
};

/// Witness points of one member of a minimum ir-categorical cover avoid every
/// other member.
inline Prop3Result check_prop3(const FiniteSpace& space, std::span<const PointSet> cover) {
  detail::require_categorical(space, cover, ir_cat(space).size());
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const PointSet w = contraction_witness(space, cover[i], CoverSense::subspace);
    for (std::size_t j = 0; j < cover.size(); ++j) {
      if (i == j) continue;
      const PointSet shared = w & cover[j];
      if (!shared.empty()) return {false, std::tuple{i, j, shared.first()}};
    }
  }
  return {};
}

inline Prop3Result check_prop3(const FiniteSpace& space, const CoverReport& cover) {
  return check_prop3(space, std::span<const PointSet>(cover.sets));
}

struct RefinementResult {
  bool refines = true;
  /// For each categorical member, the index of the first cover member containing it.
  std::vector<std::optional<std::size_t>> mapping;
};

/// Whether every member of the ir-categorical cover sits inside some member
/// of `arbitrary`.
inline RefinementResult check_refinement(const FiniteSpace& space, std::span<const PointSet> categorical,
                                         std::span<const PointSet> arbitrary) {
  if (!is_open_cover(space, arbitrary)) throw Error(Errc::NotACover, "second family is not an open cover");
  detail::require_categorical(space, categorical, ir_cat(space).size());
  RefinementResult out;
  for (PointSet w : categorical) {
    std::optional<std::size_t> home;
    for (std::size_t j = 0; j < arbitrary.size(); ++j) {
      if (w.is_subset_of(arbitrary[j])) {
        home = j;
        break;
      }
    }
    if (!home) out.refines = false;
    out.mapping.push_back(home);
  }
  return out;
}

/// A smallest subcover of an open cover, members in their original order.
/// Seeded with the members that contain the optimal categorical cover, so its
/// size is at most ir_cat whenever that containment mapping exists.
inline std::vector<PointSet> min_subcover(const FiniteSpace& space, std::span<const PointSet> cover) {
  if (!is_open_cover(space, cover)) throw Error(Errc::NotACover, "family is not an open cover");
  const CoverReport cat = ir_cat(space);
  std::optional<std::vector<std::size_t>> seed;
  const auto mapping = check_refinement(space, cat.sets, cover);
  if (mapping.refines) {
    std::vector<std::size_t> s;
    for (const auto& j : mapping.mapping) s.push_back(*j);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    seed = std::move(s);
  }
  const auto picked = detail::min_set_cover(space.points(), cover, seed);
  std::vector<PointSet> out;
  for (std::size_t i : *picked) out.push_back(cover[i]);
  return out;
}

inline constexpr std::size_t kDefaultDimensionOpenBudget = 24;

/// Covers with no removable member, each listed in canonical order. A member
/// that adds no new point to the ones before it can never be irredundant, and
/// an irredundant cover has at most |X| members; both cut the search.
inline std::vector<std::vector<PointSet>> irredundant_covers(const FiniteSpace& space,
                                                             std::size_t max_opens = kDefaultDimensionOpenBudget) {
  std::vector<PointSet> opens;
  for (PointSet o : open_sets(space)) {
    if (!o.empty()) opens.push_back(o);
  }
  if (opens.size() > max_opens) {
    throw Error(Errc::SearchBudgetExceeded, std::to_string(opens.size()) + " nonempty open sets exceeds the budget of " +
                                                std::to_string(max_opens));
  }
  std::vector<PointSet> suffix(opens.size() + 1);
  for (std::size_t i = opens.size(); i-- > 0;) suffix[i] = suffix[i + 1] | opens[i];

  std::vector<std::vector<PointSet>> out;
  std::vector<PointSet> chosen;
  auto irredundant = [&] {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      PointSet others;
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        if (j != i) others |= chosen[j];
      }
      if (chosen[i].is_subset_of(others)) return false;
    }
    return true;
  };
  auto walk = [&](auto&& self, std::size_t i, PointSet covered) -> void {
    if (covered == space.points()) {
      if (irredundant()) out.push_back(chosen);
      return;
    }
    if (i == opens.size() || chosen.size() == space.size()) return;
    if ((covered | suffix[i]) != space.points()) return;
    if (!opens[i].is_subset_of(covered)) {
      chosen.push_back(opens[i]);
      self(self, i + 1, covered | opens[i]);
      chosen.pop_back();
    }
    self(self, i + 1, covered);
  };
  if (!space.empty()) walk(walk, 0, PointSet{});
  return out;
}

/// Largest number of members sharing one point.
inline std::size_t cover_order(const FiniteSpace& space, std::span<const PointSet> family) {
  std::size_t order = 0;
  for (PointId p = 0; p < space.size(); ++p) {
    std::size_t k = 0;
    for (PointSet s : family) k += s.contains(p) ? 1 : 0;
    order = std::max(order, k);
  }
  return order;
}

struct RefinementOrder {
  std::size_t order = 0;
  std::vector<PointSet> refinement;
};

/// An open refinement of `cover` with the least possible order.
inline RefinementOrder min_refinement_order(const FiniteSpace& space, std::span<const PointSet> cover) {
  std::vector<PointSet> candidates;
  for (PointSet o : open_sets(space)) {
    if (o.empty()) continue;
    for (PointSet v : cover) {
      if (o.is_subset_of(v)) {
        candidates.push_back(o);
        break;
      }
    }
  }
  RefinementOrder best{cover_order(space, cover), {cover.begin(), cover.end()}};
  std::vector<std::size_t> counts(space.size(), 0);
  std::vector<PointSet> chosen;
  auto search = [&](auto&& self, PointSet left, std::size_t current) -> void {
    if (best.order <= 1) return;
    if (left.empty()) {
      best = {current, chosen};
      return;
    }
    const PointId p = left.first();
    for (PointSet c : candidates) {
      if (!c.contains(p)) continue;
      std::size_t next = current;
      for (PointId q : c) next = std::max(next, counts[q] + 1);
      if (next >= best.order) continue;
      for (PointId q : c) ++counts[q];
      chosen.push_back(c);
      self(self, left - c, next);
      chosen.pop_back();
      for (PointId q : c) --counts[q];
    }
  };
  search(search, space.points(), 0);
  return best;
}

struct DimensionReport {
  int dim = -1;
  /// The cover forcing the dimension and its best refinement.
  std::vector<PointSet> worst_cover;
  std::vector<PointSet> refinement;
  std::size_t covers_examined = 0;
};

/// Covering dimension: the least m such that every open cover has an open
/// refinement of order at most m + 1.
///
/// Only irredundant covers need checking. If V' is a subcover of V, every
/// refinement of V' also refines V, so V never needs a larger order than V';
/// the worst case is therefore attained on a cover with no removable member.
inline DimensionReport covering_dimension(const FiniteSpace& space,
                                          std::size_t max_opens = kDefaultDimensionOpenBudget) {
  DimensionReport report;
  if (space.empty()) return report;
  for (const auto& cover : irredundant_covers(space, max_opens)) {
    ++report.covers_examined;
    RefinementOrder r = min_refinement_order(space, cover);
    const int dim = static_cast<int>(r.order) - 1;
    if (dim > report.dim) {
      report.dim = dim;
      report.worst_cover = cover;
      report.refinement = std::move(r.refinement);
    }
  }
  return report;
}

struct Theorem13Report {
  bool holds = false;
  DimensionReport dimension;
  CoverReport category;
};

/// dim(X) + 1 <= ir_cat(X).
inline Theorem13Report check_theorem13(const FiniteSpace& space,
                                       std::size_t max_opens = kDefaultDimensionOpenBudget) {
  Theorem13Report r;
  r.dimension = covering_dimension(space, max_opens);
  r.category = ir_cat(space);
  r.holds = r.dimension.dim + 1 <= static_cast<int>(r.category.size());
  return r;
}

}  // namespace irtopo
