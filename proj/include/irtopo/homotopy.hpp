#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irtopo/embeddings.hpp"
#include "irtopo/parallel.hpp"
#include "irtopo/rational.hpp"
#include "irtopo/space.hpp"

namespace irtopo {

/// The two-piece path t -> source for 0 <= t < 1, target at t = 1. Every
/// ir-path between two points can be replaced by this one.
struct IrPath {
  PointId source = 0;
  PointId target = 0;

  PointId at(const QRational& t) const {
    if (t < QRational(0) || t > QRational(1)) throw Error(Errc::OutOfRange, "t = " + t.to_string());
    return t == QRational(1) ? target : source;
  }
  /// Image of the path as a point set.
  PointSet image() const { return PointSet{source, target}; }
  bool is_constant() const { return source == target; }
};

namespace detail {
inline void require_point(const FiniteSpace& space, PointId p) {
  if (p >= space.size()) {
    throw Error(Errc::InvalidPoint, "point " + std::to_string(p) + " not in a space of " +
                                        std::to_string(space.size()) + " points");
  }
}
}  // namespace detail

inline std::optional<IrPath> ir_path(const FiniteSpace& space, PointId x, PointId y) {
  detail::require_point(space, x);
  detail::require_point(space, y);
  if (!space.reach(x, y)) return std::nullopt;
  return IrPath{x, y};
}

/// Whether the ir-path x -> y can be traversed backwards.
inline bool reverse_exists(const FiniteSpace& space, PointId x, PointId y) {
  if (!ir_path(space, x, y)) {
    throw Error(Errc::NoForwardPath, "no ir-path from " + space.label(x) + " to " + space.label(y));
  }
  return space.reach(y, x);
}

/// Points lying in the closure of every point. Computed both as the
/// intersection of singleton closures and as the points whose only open
/// neighbourhood is the whole space; the two must agree.
inline PointSet ir_co(const FiniteSpace& space) {
  PointSet by_closures = space.points();
  for (PointId x = 0; x < space.size(); ++x) by_closures &= space.closure_of_point(x);
  PointSet by_neighbourhoods;
  for (PointId y = 0; y < space.size(); ++y) {
    if (space.min_open(y) == space.points()) by_neighbourhoods.insert(y);
  }
  if (by_closures != by_neighbourhoods) {
    throw std::logic_error("ir_co: closure and neighbourhood characterizations disagree");
  }
  return by_closures;
}

/// The points the space contracts to, or nullopt when it is not ir-contractible.
inline std::optional<PointSet> is_ir_contractible(const FiniteSpace& space) {
  PointSet co = ir_co(space);
  if (co.empty()) return std::nullopt;
  return co;
}

inline bool is_ir_path_connected(const FiniteSpace& space) {
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = x + 1; y < space.size(); ++y) {
      if (!space.reach(x, y) && !space.reach(y, x)) return false;
    }
  }
  return true;
}

inline Relation quasiorder(const FiniteSpace& space) { return space.reach_relation(); }

inline bool is_partial_order(const FiniteSpace& space) { return !quasiorder(space).antisymmetry_violation(); }

/// Some open set of `codomain` whose preimage under `assignment` is not open,
/// or nullopt when the map is continuous. Uses the order characterization:
/// a map is continuous iff it preserves reach.
inline std::optional<PointSet> discontinuity_witness(const FiniteSpace& domain, const FiniteSpace& codomain,
                                                     const std::vector<PointId>& assignment) {
  for (PointId x = 0; x < domain.size(); ++x) {
    for (PointId x2 : domain.closure_of_point(x)) {
      if (!codomain.reach(assignment[x], assignment[x2])) return codomain.min_open(assignment[x2]);
    }
  }
  return std::nullopt;
}

/// Continuity straight from the definition: every open preimage is open.
inline bool preimages_are_open(const FiniteSpace& domain, const FiniteSpace& codomain,
                               const std::vector<PointId>& assignment) {
  for (PointSet target : open_sets(codomain)) {
    PointSet pre;
    for (PointId x = 0; x < domain.size(); ++x) {
      if (target.contains(assignment[x])) pre.insert(x);
    }
    if (!domain.is_open(pre)) return false;
  }
  return true;
}

/// A continuous map between two finite spaces. Holds references to both
/// spaces, which must outlive the map.
class ContinuousMap {
 public:
  ContinuousMap(const FiniteSpace& domain, const FiniteSpace& codomain, std::vector<PointId> assignment)
      : domain_(&domain), codomain_(&codomain), assignment_(std::move(assignment)) {
    if (assignment_.size() != domain.size()) {
      throw Error(Errc::MapMismatch, "assignment has " + std::to_string(assignment_.size()) +
                                         " entries for a domain of " + std::to_string(domain.size()) + " points");
    }
    for (PointId y : assignment_) detail::require_point(codomain, y);
    if (auto bad = discontinuity_witness(domain, codomain, assignment_)) {
      throw Error(Errc::NotContinuous, "preimage of open set " + bad->to_string() + " is not open");
    }
  }

  static ContinuousMap identity(const FiniteSpace& space) {
    std::vector<PointId> a(space.size());
    for (PointId x = 0; x < a.size(); ++x) a[x] = x;
    return {space, space, std::move(a)};
  }

  static ContinuousMap constant(const FiniteSpace& domain, const FiniteSpace& codomain, PointId value) {
    return {domain, codomain, std::vector<PointId>(domain.size(), value)};
  }

  const FiniteSpace& domain() const { return *domain_; }
  const FiniteSpace& codomain() const { return *codomain_; }
  const std::vector<PointId>& assignment() const { return assignment_; }
  PointId operator()(PointId x) const { return assignment_[x]; }

  /// Same assignment; the spaces are not compared.
  bool operator==(const ContinuousMap& other) const { return assignment_ == other.assignment_; }

 private:
  const FiniteSpace* domain_;
  const FiniteSpace* codomain_;
  std::vector<PointId> assignment_;
};

/// after ∘ before.
inline ContinuousMap compose(const ContinuousMap& after, const ContinuousMap& before) {
  if (!(before.codomain() == after.domain()) || before.codomain().size() != after.domain().size()) {
    throw Error(Errc::MapMismatch, "composition of maps with incompatible spaces");
  }
  std::vector<PointId> a(before.domain().size());
  for (PointId x = 0; x < a.size(); ++x) a[x] = after(before(x));
  return {before.domain(), after.codomain(), std::move(a)};
}

/// Proof that f ir-≅ g: g(x) lies in the closure of f(x) for every x, which is
/// what makes the two-piece homotopy F(x,t) = f(x) for t < 1, g(x) at t = 1
/// continuous.
struct IrHomotopyCertificate {
  ContinuousMap from;
  ContinuousMap to;

  PointId at(PointId x, const QRational& t) const { return IrPath{from(x), to(x)}.at(t); }

  /// Re-checks the certificate by testing the two-piece homotopy for continuity
  /// on X x chain_space(2), the finite model of X x ir-I.
  bool two_piece_is_continuous() const {
    const FiniteSpace& x_space = from.domain();
    const FiniteSpace cylinder = product(x_space, chain_space(2));
    std::vector<PointId> h(cylinder.size());
    for (PointId x = 0; x < x_space.size(); ++x) {
      h[2 * x] = from(x);
      h[2 * x + 1] = to(x);
    }
    return !discontinuity_witness(cylinder, from.codomain(), h);
  }
};

inline std::optional<IrHomotopyCertificate> ir_homotopic(const ContinuousMap& f, const ContinuousMap& g) {
  if (!(f.domain() == g.domain()) || f.domain().size() != g.domain().size() || !(f.codomain() == g.codomain()) ||
      f.codomain().size() != g.codomain().size()) {
    throw Error(Errc::MapMismatch, "ir_homotopic needs maps with identical domain and codomain");
  }
  for (PointId x = 0; x < f.domain().size(); ++x) {
    if (!f.codomain().reach(f(x), g(x))) return std::nullopt;
  }
  return IrHomotopyCertificate{f, g};
}

/// |base|^exponent, saturating at the maximum of uint64_t.
inline std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

inline constexpr std::uint64_t kDefaultMapBudget = 10'000'000;

/// All continuous assignments domain -> codomain in lexicographic order.
/// Throws SearchBudgetExceeded when |codomain|^|domain| exceeds the budget.
inline std::vector<std::vector<PointId>> continuous_assignments(const FiniteSpace& domain,
                                                                const FiniteSpace& codomain,
                                                                std::uint64_t budget = kDefaultMapBudget) {
  const std::uint64_t candidates = saturating_power(codomain.size(), domain.size());
  if (candidates > budget) {
    throw Error(Errc::SearchBudgetExceeded, std::to_string(codomain.size()) + "^" + std::to_string(domain.size()) +
                                                " candidate maps exceeds the budget of " + std::to_string(budget));
  }
  std::vector<std::vector<PointId>> out;
  std::vector<PointId> current(domain.size());
  auto extend = [&](auto&& self, PointId x) -> void {
    if (x == domain.size()) {
      out.push_back(current);
      return;
    }
    for (PointId y = 0; y < codomain.size(); ++y) {
      bool ok = true;
      for (PointId earlier = 0; earlier < x && ok; ++earlier) {
        if (domain.reach(earlier, x) && !codomain.reach(current[earlier], y)) ok = false;
        if (domain.reach(x, earlier) && !codomain.reach(y, current[earlier])) ok = false;
      }
      if (!ok) continue;
      current[x] = y;
      self(self, x + 1);
    }
  };
  extend(extend, 0);
  return out;
}

/// Which way the identity/composite homotopies run in an equivalence.
enum class EquivalenceOrientation {
  /// 1_X ir-≅ g∘f and 1_Y ir-≅ f∘g: every x specializes to g(f(x)).
  identity_to_composite,
  /// g∘f ir-≅ 1_X and f∘g ir-≅ 1_Y: g(f(x)) specializes to x.
  composite_to_identity,
};

inline bool is_equivalence_pair(const FiniteSpace& x_space, const FiniteSpace& y_space,
                                const std::vector<PointId>& f, const std::vector<PointId>& g,
                                EquivalenceOrientation orientation) {
  const bool forward = orientation == EquivalenceOrientation::identity_to_composite;
  for (PointId x = 0; x < x_space.size(); ++x) {
    const PointId back = g[f[x]];
    if (!(forward ? x_space.reach(x, back) : x_space.reach(back, x))) return false;
  }
  for (PointId y = 0; y < y_space.size(); ++y) {
    const PointId back = f[g[y]];
    if (!(forward ? y_space.reach(y, back) : y_space.reach(back, y))) return false;
  }
  return true;
}

struct EquivalencePair {
  ContinuousMap f;  // X -> Y
  ContinuousMap g;  // Y -> X
};

/// Exhaustive search for an ir-homotopy equivalence. nullopt proves that none
/// exists. The pair returned is the lexicographically first (f, then g).
inline std::optional<EquivalencePair> ir_homotopy_equivalent(
    const FiniteSpace& x_space, const FiniteSpace& y_space,
    EquivalenceOrientation orientation = EquivalenceOrientation::identity_to_composite,
    std::uint64_t budget = kDefaultMapBudget, std::size_t jobs = 1) {
  const auto forward = continuous_assignments(x_space, y_space, budget);
  const auto backward = continuous_assignments(y_space, x_space, budget);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const auto partner = parallel_map(forward.size(), jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < backward.size(); ++j) {
      if (is_equivalence_pair(x_space, y_space, forward[i], backward[j], orientation)) return j;
    }
    return kNone;
  });
  for (std::size_t i = 0; i < forward.size(); ++i) {
    if (partner[i] != kNone) {
      return EquivalencePair{ContinuousMap(x_space, y_space, forward[i]),
                             ContinuousMap(y_space, x_space, backward[partner[i]])};
    }
  }
  return std::nullopt;
}

}  // namespace irtopo
