#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irtopo/category.hpp"
#include "irtopo/homotopy.hpp"
#include "irtopo/space.hpp"

namespace irtopo {

/// A finite spectrum: the points are prime ideals, the maximal ideals are the
/// closed points, and cl{P} = V(P) is the set of primes containing P.
struct SpecSpace {
  FiniteSpace space;
  PointSet maximal;
};

inline constexpr std::uint64_t kDefaultFactorCap = 1'000'000'000'000ULL;

/// Distinct prime divisors in increasing order, by trial division.
inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n, std::uint64_t cap = kDefaultFactorCap) {
  if (n < 2) throw Error(Errc::InvalidModulus, "modulus " + std::to_string(n) + " is below 2");
  if (n > cap) throw Error(Errc::InvalidModulus, "modulus " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

/// Spec(Z/n): one maximal ideal (p) per distinct prime p | n, discrete.
inline SpecSpace spec_zn(std::uint64_t n, std::uint64_t cap = kDefaultFactorCap) {
  const auto primes = distinct_prime_factors(n, cap);
  std::vector<std::string> labels;
  for (auto p : primes) labels.push_back("(" + std::to_string(p) + ")");
  const std::size_t k = labels.size();
  return {FiniteSpace::from_reach(std::move(labels), Relation::identity(k)), PointSet::full(k)};
}

/// Spectrum of a ring whose primes form the given finite poset under
/// inclusion: `leq(P, Q)` means P ⊆ Q. Opens are the down-sets.
inline SpecSpace spec_from_poset(std::vector<std::string> labels, const Relation& leq) {
  if (leq.size() != labels.size()) throw Error(Errc::NotAPartialOrder, "relation size does not match the labels");
  if (auto x = leq.reflexivity_violation()) {
    throw Error(Errc::NotAPartialOrder, "not reflexive at " + std::to_string(*x));
  }
  if (auto t = leq.transitivity_violation()) {
    throw Error(Errc::NotAPartialOrder, "not transitive through (" + std::to_string((*t)[0]) + "," +
                                            std::to_string((*t)[1]) + "," + std::to_string((*t)[2]) + ")");
  }
  if (auto p = leq.antisymmetry_violation()) {
    throw Error(Errc::NotAPartialOrder,
                "not antisymmetric: " + std::to_string(p->first) + " and " + std::to_string(p->second));
  }
  SpecSpace out{FiniteSpace::from_reach(std::move(labels), leq), {}};
  for (PointId m = 0; m < out.space.size(); ++m) {
    if (out.space.closure_of_point(m) == PointSet::single(m)) out.maximal.insert(m);
  }
  return out;
}

struct Theorem8Report {
  bool holds = false;
  std::size_t maximal_count = 0;
  CoverReport category;
  /// The cover {Spec ∖ (Max ∖ {M_i})}_i built from the maximal ideals.
  std::vector<PointSet> complement_cover;
  /// Whether that cover is ir-categorical (all members ir-contractible).
  bool complement_cover_categorical = false;
};

/// ir_cat of a finite spectrum equals its number of maximal ideals.
inline Theorem8Report check_theorem8(const SpecSpace& spec) {
  Theorem8Report r;
  r.maximal_count = spec.maximal.size();
  r.category = ir_cat(spec.space);
  r.holds = r.category.size() == r.maximal_count;
  r.complement_cover_categorical = true;
  for (PointId m : spec.maximal) {
    const PointSet w = spec.space.points() - (spec.maximal - PointSet::single(m));
    r.complement_cover.push_back(w);
    if (!spec.space.is_open(w) || contraction_witness(spec.space, w, CoverSense::subspace).empty()) {
      r.complement_cover_categorical = false;
    }
  }
  return r;
}

}  // namespace irtopo
