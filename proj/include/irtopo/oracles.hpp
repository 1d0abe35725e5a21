#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "irtopo/embeddings.hpp"
#include "irtopo/homotopy.hpp"
#include "irtopo/space.hpp"

// Independent decision procedures used to cross-check the order-theoretic
// shortcuts in the rest of the library. Nothing here reads reach directly
// where an open-set formulation exists.

namespace irtopo {

inline constexpr std::size_t kMaxEnumeratedPoints = 5;

/// Calls `visit` on every topology on n labelled points, once each. The
/// topologies are enumerated as preorders: bit k of the mask is the k-th
/// off-diagonal pair (x, y) in lexicographic order, masks ascending.
inline void for_each_space(std::size_t n, const std::function<void(const FiniteSpace&)>& visit) {
  if (n == 0 || n > kMaxEnumeratedPoints) {
    throw Error(Errc::BudgetExceeded, "enumeration supports 1.." + std::to_string(kMaxEnumeratedPoints) +
                                          " points, got " + std::to_string(n));
  }
  std::vector<std::pair<PointId, PointId>> slots;
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      if (x != y) slots.emplace_back(x, y);
    }
  }
  const auto labels = default_labels(n);
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Relation r = Relation::identity(n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1U) r.set(slots[k].first, slots[k].second);
    }
    if (r.transitivity_violation()) continue;
    visit(FiniteSpace::from_reach(labels, r));
  }
}

inline std::vector<FiniteSpace> enumerate_spaces(std::size_t n) {
  std::vector<FiniteSpace> out;
  for_each_space(n, [&](const FiniteSpace& s) { out.push_back(s); });
  return out;
}

/// Number of topologies on n labelled points, counted directly as families
/// of subsets containing ∅ and X and closed under pairwise union and
/// intersection. Feasible for n <= 4.
inline std::size_t count_topologies_by_open_families(std::size_t n) {
  if (n == 0 || n > 4) throw Error(Errc::BudgetExceeded, "open-family count supports 1..4 points");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> proper;  // nonempty proper subsets
  for (std::uint64_t s = 1; s < full; ++s) proper.push_back(s);
  std::size_t count = 0;
  const std::uint64_t families = std::uint64_t{1} << proper.size();
  std::vector<bool> member(full + 1);
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    std::fill(member.begin(), member.end(), false);
    member[0] = member[full] = true;
    std::vector<std::uint64_t> sets{0, full};
    for (std::size_t k = 0; k < proper.size(); ++k) {
      if ((fam >> k) & 1U) {
        member[proper[k]] = true;
        sets.push_back(proper[k]);
      }
    }
    bool closed = true;
    for (std::size_t i = 0; i < sets.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < sets.size() && closed; ++j) {
        closed = member[sets[i] | sets[j]] && member[sets[i] & sets[j]];
      }
    }
    if (closed) ++count;
  }
  return count;
}

/// Smallest closed superset of `a`: the complement of every open set missing `a`.
inline PointSet closure_via_open_sets(const FiniteSpace& space, PointSet a) {
  PointSet outside;
  for (PointSet o : open_sets(space)) {
    if (!o.intersects(a)) outside |= o;
  }
  return outside.complement(space.size());
}

/// Open sets of X × Y in the topology generated by the boxes O × P, indexed
/// like product(): (x, y) -> x * |Y| + y. Sorted canonically.
inline std::vector<PointSet> box_topology(const FiniteSpace& x_space, const FiniteSpace& y_space) {
  const std::size_t ny = y_space.size();
  std::set<std::uint64_t> opens{0};
  const auto ox = open_sets(x_space);
  const auto oy = open_sets(y_space);
  for (PointSet a : ox) {
    for (PointSet b : oy) {
      PointSet box;
      for (PointId x : a) {
        for (PointId y : b) box.insert(x * ny + y);
      }
      std::vector<std::uint64_t> grown;
      for (std::uint64_t s : opens) grown.push_back(s | box.bits());
      opens.insert(grown.begin(), grown.end());
    }
  }
  std::vector<PointSet> out;
  for (std::uint64_t s : opens) out.emplace_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

/// Calls `visit` with every map h: X × chain_space(2) -> Y that is continuous
/// for the box topology, tested by preimages of open sets. h is indexed by
/// 2 * x + t. All |Y|^(2|X|) assignments are tried.
inline void for_each_cylinder_homotopy(const FiniteSpace& x_space, const FiniteSpace& y_space,
                                       const std::function<void(const std::vector<PointId>&)>& visit,
                                       std::uint64_t budget = kDefaultMapBudget) {
  const std::size_t cells = 2 * x_space.size();
  const std::uint64_t total = saturating_power(y_space.size(), cells);
  if (total > budget) {
    throw Error(Errc::SearchBudgetExceeded, std::to_string(total) + " cylinder maps exceeds the budget of " +
                                                std::to_string(budget));
  }
  const auto cylinder_opens = box_topology(x_space, chain_space(2));
  const auto target_opens = open_sets(y_space);
  auto is_open = [&](PointSet s) { return std::binary_search(cylinder_opens.begin(), cylinder_opens.end(), s); };
  std::vector<PointId> h(cells, 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rest = index;
    for (std::size_t c = 0; c < cells; ++c) {
      h[c] = static_cast<PointId>(rest % y_space.size());
      rest /= y_space.size();
    }
    bool continuous = true;
    for (PointSet v : target_opens) {
      PointSet pre;
      for (std::size_t c = 0; c < cells; ++c) {
        if (v.contains(h[c])) pre.insert(c);
      }
      if (!is_open(pre)) {
        continuous = false;
        break;
      }
    }
    if (continuous) visit(h);
  }
}

/// Whether some continuous H: X × chain_space(2) -> Y has H(·,0) = f and
/// H(·,1) = g. Independent of the pointwise criterion in ir_homotopic.
inline bool chain_homotopy_oracle(const FiniteSpace& x_space, const FiniteSpace& y_space,
                                  const std::vector<PointId>& f, const std::vector<PointId>& g,
                                  std::uint64_t budget = kDefaultMapBudget) {
  bool found = false;
  for_each_cylinder_homotopy(
      x_space, y_space,
      [&](const std::vector<PointId>& h) {
        if (found) return;
        bool match = true;
        for (PointId x = 0; x < x_space.size() && match; ++x) match = h[2 * x] == f[x] && h[2 * x + 1] == g[x];
        found = match;
      },
      budget);
  return found;
}

/// Every (f, g) pair realized by some continuous cylinder map.
inline std::set<std::pair<std::vector<PointId>, std::vector<PointId>>> realizable_homotopy_pairs(
    const FiniteSpace& x_space, const FiniteSpace& y_space, std::uint64_t budget = kDefaultMapBudget) {
  std::set<std::pair<std::vector<PointId>, std::vector<PointId>>> out;
  for_each_cylinder_homotopy(
      x_space, y_space,
      [&](const std::vector<PointId>& h) {
        std::vector<PointId> f(x_space.size());
        std::vector<PointId> g(x_space.size());
        for (PointId x = 0; x < x_space.size(); ++x) {
          f[x] = h[2 * x];
          g[x] = h[2 * x + 1];
        }
        out.emplace(std::move(f), std::move(g));
      },
      budget);
  return out;
}

}  // namespace irtopo
