#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "irtopo/rational.hpp"
#include "irtopo/space.hpp"

namespace irtopo {

namespace detail {
inline void require_unit_interval(const QRational& v, const char* what) {
  if (v < QRational(0) || v > QRational(1)) {
    throw Error(Errc::OutOfRange, std::string(what) + " = " + v.to_string() + " is outside [0,1]");
  }
}
}  // namespace detail

/// The asymmetric distance max(y - x, 0) on [0,1].
inline QRational d_ir(const QRational& x, const QRational& y) {
  detail::require_unit_interval(x, "x");
  detail::require_unit_interval(y, "y");
  return y > x ? y - x : QRational(0);
}

/// An interval of [0,1] whose lower end is always the closed endpoint 0.
struct LeftInterval {
  QRational upper;
  bool upper_closed = false;  // true only for the whole of [0,1]
  bool clipped = false;       // the ball ran past 1 and was cut back to [0,1]

  bool contains(const QRational& y) const {
    return y >= QRational(0) && (upper_closed ? y <= upper : y < upper);
  }
  std::string to_string() const {
    return "[0/1, " + upper.to_string() + (upper_closed ? "]" : ")");
  }
};

/// Open ball { y in [0,1] : d_ir(x, y) < eps } = [0, min(x + eps, 1)), or all of
/// [0,1] once x + eps exceeds 1.
inline LeftInterval ball(const QRational& x, const QRational& eps) {
  detail::require_unit_interval(x, "x");
  if (eps <= QRational(0)) throw Error(Errc::OutOfRange, "radius " + eps.to_string() + " is not positive");
  QRational reach_to = x + eps;
  if (reach_to > QRational(1)) return {QRational(1), true, true};
  return {reach_to, false, false};
}

/// k points 0 < 1 < ... < k-1 whose open sets are the initial segments; the
/// finite model of the unit interval with the left order topology. k = 2 is
/// the Sierpinski space.
inline FiniteSpace chain_space(std::size_t k) {
  if (k == 0) throw Error(Errc::OutOfRange, "chain_space needs at least one point");
  Relation reach(k);
  for (PointId i = 0; i < k; ++i) {
    for (PointId j = i; j < k; ++j) reach.set(i, j);
  }
  return FiniteSpace::from_reach(default_labels(k), reach);
}

/// A subset of the real line with no finite description by its elements,
/// e.g. [0,1). Finite subsets are passed as value lists instead.
struct IntervalDescriptor {
  QRational lower;
  QRational upper;
  bool lower_closed = true;
  bool upper_closed = false;

  std::string to_string() const {
    return std::string(lower_closed ? "[" : "(") + lower.to_string() + ", " + upper.to_string() +
           (upper_closed ? "]" : ")");
  }
};

using RealSubset = std::variant<std::vector<QRational>, IntervalDescriptor>;

struct CompactnessReport {
  bool compact = false;
  std::optional<QRational> biggest;
  /// Set when not compact: the rays (-inf, a), a ranging over the subset, cover
  /// it with no finite subcover.
  std::optional<std::string> cover_witness;
};

/// Compactness of a subset of the real line under the left order topology:
/// compact exactly when it has a biggest element.
inline CompactnessReport finite_subset_compactness(const RealSubset& subset) {
  if (const auto* values = std::get_if<std::vector<QRational>>(&subset)) {
    if (values->empty()) throw Error(Errc::EmptySet, "no values given");
    QRational best = values->front();
    for (const QRational& v : *values) {
      if (v > best) best = v;
    }
    return {true, best, std::nullopt};
  }
  const auto& interval = std::get<IntervalDescriptor>(subset);
  const bool nonempty = interval.lower < interval.upper ||
                        (interval.lower == interval.upper && interval.lower_closed && interval.upper_closed);
  if (!nonempty) throw Error(Errc::EmptySet, "interval " + interval.to_string() + " is empty");
  if (interval.upper_closed) return {true, interval.upper, std::nullopt};
  return {false, std::nullopt,
          "{(-inf, a) : a in " + interval.to_string() + "} has no finite subcover"};
}

struct GridPoint {
  std::vector<QRational> coords;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i != 0) out += ',';
      out += coords[i].to_string();
    }
    return out + ")";
  }
  bool operator==(const GridPoint&) const = default;
};

/// reach(p, q) iff p <= q in every coordinate: the closure of {p} in the
/// n-fold product of left order lines is the product of rays [p_i, inf).
inline FiniteSpace grid_subspace(const std::vector<GridPoint>& points) {
  if (points.empty()) throw Error(Errc::EmptySet, "no grid points given");
  const std::size_t arity = points.front().coords.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].coords.size() != arity) {
      throw Error(Errc::ArityMismatch, "point " + std::to_string(i) + " has " +
                                           std::to_string(points[i].coords.size()) + " coordinates, expected " +
                                           std::to_string(arity));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[j] == points[i]) throw Error(Errc::DuplicatePoint, points[i].to_string() + " repeats");
    }
    labels.push_back(points[i].to_string());
  }
  if (points.size() > kMaxPoints) throw Error(Errc::TooManyPoints, std::to_string(points.size()) + " grid points");
  Relation reach(points.size());
  for (PointId p = 0; p < points.size(); ++p) {
    for (PointId q = 0; q < points.size(); ++q) {
      bool below = true;
      for (std::size_t i = 0; i < arity && below; ++i) below = points[p].coords[i] <= points[q].coords[i];
      if (below) reach.set(p, q);
    }
  }
  return FiniteSpace::from_reach(std::move(labels), reach);
}

/// Index of the point dominating every other point coordinatewise, if any.
inline std::optional<PointId> greatest_grid_point(const std::vector<GridPoint>& points) {
  const FiniteSpace space = grid_subspace(points);
  for (PointId top = 0; top < space.size(); ++top) {
    bool dominates = true;
    for (PointId p = 0; p < space.size() && dominates; ++p) dominates = space.reach(p, top);
    if (dominates) return top;
  }
  return std::nullopt;
}

struct Theorem10Report {
  bool holds = false;
  PointId greatest = 0;
  PointSet co;
};

/// Checks that the contraction points of a grid subspace with a greatest
/// element are exactly that element.
inline Theorem10Report check_theorem10(const std::vector<GridPoint>& points) {
  const auto top = greatest_grid_point(points);
  if (!top) throw Error(Errc::HypothesisFails, "no point dominates all others coordinatewise");
  const FiniteSpace space = grid_subspace(points);
  PointSet co = space.points();
  for (PointId x = 0; x < space.size(); ++x) co &= space.closure_of_point(x);
  return {co == PointSet::single(*top), *top, co};
}

}  // namespace irtopo
