#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "irtopo/category.hpp"
#include "irtopo/embeddings.hpp"
#include "irtopo/homotopy.hpp"
#include "irtopo/json_io.hpp"
#include "irtopo/oracles.hpp"
#include "irtopo/parallel.hpp"
#include "irtopo/space.hpp"
#include "irtopo/spectra.hpp"

namespace irtopo::verify {

enum class ClaimId {
  T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11, T12, T13, T14, T15,
  P1, P2, P3, P4,
  L1, L2_literal, L2_subcover,
  C1, C2, C3, C4, C5, C6, C7, C8, C9,
  D3_oracle, D5_sense_compare, D8_orientation_compare,
  T9_product, T14_def8, T15_def8,
};

enum class Classification {
  claim,         // expected to hold; a counterexample makes the suite fail
  known_false,   // the literal statement is false; failing is the expected verdict
  experimental,  // measured and reported, never gates the exit status
  out_of_scope,  // not representable with finite spaces; listed, not run
};

constexpr std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::claim: return "claim";
    case Classification::known_false: return "known_false";
    case Classification::experimental: return "experimental";
    case Classification::out_of_scope: return "out_of_scope";
  }
  return "?";
}

struct ClaimInfo {
  ClaimId id;
  std::string_view name;
  Classification classification;
  std::string_view statement;
};

/// Suite order.
inline constexpr std::array kClaims = {
    ClaimInfo{ClaimId::T1, "T1", Classification::claim, "a subset of the left order line is compact iff it has a biggest element"},
    ClaimInfo{ClaimId::T2, "T2", Classification::claim, "an ir-path x -> y exists iff y is in the closure of {x}"},
    ClaimInfo{ClaimId::T3, "T3", Classification::claim, "an ir-path starting at x stays inside the closure of {x}"},
    ClaimInfo{ClaimId::T4, "T4", Classification::claim, "in a T1 space every ir-path is constant"},
    ClaimInfo{ClaimId::T5, "T5", Classification::claim, "maps into a T1 space that are ir-homotopic are equal"},
    ClaimInfo{ClaimId::T6, "T6", Classification::claim, "X is ir-contractible in x0 iff x0 is in ir-Co(X)"},
    ClaimInfo{ClaimId::T7, "T7", Classification::claim, "ir-Co(X x Y) = ir-Co(X) x ir-Co(Y)"},
    ClaimInfo{ClaimId::T8, "T8", Classification::claim, "ir-cat(Spec R) equals the number of maximal ideals"},
    ClaimInfo{ClaimId::T9, "T9", Classification::experimental, "ir-cat(X x Y) = ir-cat(X) * ir-cat(Y) (subspace sense)"},
    ClaimInfo{ClaimId::T10, "T10", Classification::claim, "a grid subspace with a greatest point contracts exactly to it"},
    ClaimInfo{ClaimId::T11, "T11", Classification::claim, "in a T0 space no nonconstant ir-path has a reverse"},
    ClaimInfo{ClaimId::T12, "T12", Classification::claim, "a T0 ir-contractible space has exactly one contraction point"},
    ClaimInfo{ClaimId::T13, "T13", Classification::claim, "dim(X) + 1 <= ir-cat(X)"},
    ClaimInfo{ClaimId::T14, "T14", Classification::claim, "ir-homotopy equivalence preserves ir-contractibility"},
    ClaimInfo{ClaimId::T15, "T15", Classification::claim, "ir-homotopy equivalence preserves ir-cat"},
    ClaimInfo{ClaimId::P1, "P1", Classification::claim, "d_ir is a quasi-metric whose balls are the sets [0, x + eps)"},
    ClaimInfo{ClaimId::P2, "P2", Classification::claim, "subspaces of the left order line are hyperconnected"},
    ClaimInfo{ClaimId::P3, "P3", Classification::claim, "in a minimal ir-categorical cover, ir-Co(W_i) misses every other W_j"},
    ClaimInfo{ClaimId::P4, "P4", Classification::claim, "the ir-path relation is a quasiorder"},
    ClaimInfo{ClaimId::L1, "L1", Classification::claim, "a minimal ir-categorical cover refines every open cover"},
    ClaimInfo{ClaimId::L2_literal, "L2_literal", Classification::known_false, "no open cover has more than ir-cat(X) members"},
    ClaimInfo{ClaimId::L2_subcover, "L2_subcover", Classification::claim, "every open cover has a subcover of at most ir-cat(X) members"},
    ClaimInfo{ClaimId::C1, "C1", Classification::out_of_scope, "the left order line is not compact, its unit interval is"},
    ClaimInfo{ClaimId::C2, "C2", Classification::claim, "the Sierpinski space is ir-contractible; T1 spaces with two or more points are not"},
    ClaimInfo{ClaimId::C3, "C3", Classification::claim, "the finite left order chains contract exactly to their top"},
    ClaimInfo{ClaimId::C4, "C4", Classification::claim, "a T1 ir-contractible space is a single point"},
    ClaimInfo{ClaimId::C5, "C5", Classification::out_of_scope, "ir-contractible spaces are compact (vacuous for finite spaces)"},
    ClaimInfo{ClaimId::C6, "C6", Classification::claim, "the spectrum of a local ring has ir-cat 1 and contracts to its maximal ideal"},
    ClaimInfo{ClaimId::C7, "C7", Classification::claim, "the spectrum of a field is ir-contractible"},
    ClaimInfo{ClaimId::C8, "C8", Classification::claim, "a minimal ir-categorical cover is refined by no other minimal ir-categorical cover"},
    ClaimInfo{ClaimId::C9, "C9", Classification::claim, "the ir-path relation of a T0 space is a partial order"},
    ClaimInfo{ClaimId::D3_oracle, "D3_oracle", Classification::claim, "pointwise specialization criterion agrees with the cylinder homotopy search"},
    ClaimInfo{ClaimId::D5_sense_compare, "D5_sense_compare", Classification::experimental, "subspace and ambient readings of ir-cat agree"},
    ClaimInfo{ClaimId::D8_orientation_compare, "D8_orientation_compare", Classification::experimental, "both homotopy orientations give the same equivalent pairs"},
    ClaimInfo{ClaimId::T9_product, "T9_product", Classification::experimental, "ir-cat(X x Y) = ir-cat(X) * ir-cat(Y) under both cover senses"},
    ClaimInfo{ClaimId::T14_def8, "T14_def8", Classification::experimental, "T14 with the composite-to-identity orientation"},
    ClaimInfo{ClaimId::T15_def8, "T15_def8", Classification::experimental, "T15 with the composite-to-identity orientation"},
};

inline const ClaimInfo& info(ClaimId id) {
  for (const auto& c : kClaims) {
    if (c.id == id) return c;
  }
  throw Error(Errc::UnknownClaim, "unregistered claim id");
}

inline ClaimId parse_claim(std::string_view name) {
  for (const auto& c : kClaims) {
    if (c.name == name) return c.id;
  }
  throw Error(Errc::UnknownClaim, "\"" + std::string(name) + "\"");
}

struct VerifyConfig {
  std::size_t max_points = 4;
  /// Size cap for claims quantified over pairs of spaces.
  std::size_t pair_max_points = 3;
  /// Size cap for the exhaustive cylinder-homotopy search.
  std::size_t oracle_max_points = 3;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::uint64_t map_budget = kDefaultMapBudget;
  std::size_t counterexample_limit = 5;
  std::uint64_t zn_max = 100000;
  std::size_t random_trials = 10000;
};

struct Counterexample {
  std::vector<FiniteSpace> spaces;
  std::string detail;
};

struct ClaimReport {
  ClaimId claim{};
  Classification classification{};
  std::string scope;
  std::size_t instances_tested = 0;
  /// Instances per space size ("3"), or per pair of sizes ("2x3").
  std::map<std::string, std::size_t> instances_by_size;
  bool passed = true;
  std::size_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;  // the first few, in instance order
  std::vector<std::string> notes;
  std::chrono::duration<double> elapsed{};
};

namespace detail {

using Finding = std::optional<Counterexample>;
using Key = std::function<std::string(std::size_t)>;

inline Counterexample found(std::vector<FiniteSpace> spaces, std::string detail) {
  return {std::move(spaces), std::move(detail)};
}

/// Shared enumeration state for one run.
class Context {
 public:
  explicit Context(const VerifyConfig& config) : config_(config) {
    if (config.max_points == 0 || config.max_points > kMaxEnumeratedPoints) {
      throw Error(Errc::BudgetExceeded, "max_points must be in 1.." + std::to_string(kMaxEnumeratedPoints));
    }
    if (config.pair_max_points == 0 || config.oracle_max_points == 0) {
      throw Error(Errc::BudgetExceeded, "pair_max_points and oracle_max_points must be positive");
    }
    for (std::size_t n = 1; n <= config.max_points; ++n) {
      for (auto& s : enumerate_spaces(n)) spaces_.push_back(std::move(s));
    }
    const std::size_t cap = pair_cap();
    for (std::size_t i = 0; i < spaces_.size(); ++i) {
      if (spaces_[i].size() <= cap) small_.push_back(i);
      if (spaces_[i].size() <= oracle_cap()) ++oracle_count_;
    }
  }

  const VerifyConfig& config() const { return config_; }
  std::size_t pair_cap() const { return std::min(config_.max_points, config_.pair_max_points); }
  std::size_t oracle_cap() const { return std::min(config_.max_points, config_.oracle_max_points); }

  const std::vector<FiniteSpace>& spaces() const { return spaces_; }
  std::size_t small_count() const { return small_.size(); }
  const FiniteSpace& small(std::size_t i) const { return spaces_[small_[i]]; }
  std::size_t pair_count() const { return small_.size() * small_.size(); }
  std::pair<const FiniteSpace*, const FiniteSpace*> pair(std::size_t k) const {
    return {&small(k / small_.size()), &small(k % small_.size())};
  }

  // Spaces come in ascending size, so those within the oracle cap are a prefix.
  std::size_t oracle_count() const { return oracle_count_; }
  std::size_t oracle_pair_count() const { return oracle_count_ * oracle_count_; }
  std::pair<const FiniteSpace*, const FiniteSpace*> oracle_pair(std::size_t k) const {
    return {&spaces_[k / oracle_count_], &spaces_[k % oracle_count_]};
  }
  std::string oracle_scope() const { return "spaces on 1.." + std::to_string(oracle_cap()) + " points"; }

  Key unary_key() const {
    return [this](std::size_t i) { return std::to_string(spaces_[i].size()); };
  }
  Key pair_key() const {
    return [this](std::size_t k) {
      auto [x, y] = pair(k);
      return std::to_string(x->size()) + "x" + std::to_string(y->size());
    };
  }
  Key oracle_pair_key() const {
    return [this](std::size_t k) {
      auto [x, y] = oracle_pair(k);
      return std::to_string(x->size()) + "x" + std::to_string(y->size());
    };
  }

  std::string unary_scope() const { return "spaces on 1.." + std::to_string(config_.max_points) + " points"; }
  std::string pair_scope() const {
    return "ordered pairs of spaces on 1.." + std::to_string(pair_cap()) + " points";
  }

  std::mt19937_64 rng(ClaimId id) const {
    return std::mt19937_64(config_.seed * 1000003ULL + static_cast<std::uint64_t>(id));
  }

 private:
  VerifyConfig config_;
  std::vector<FiniteSpace> spaces_;
  std::vector<std::size_t> small_;
  std::size_t oracle_count_ = 0;
};

/// Runs `check` over instances 0..count-1 in parallel and folds the findings
/// in instance order.
template <class Check>
void sweep(const Context& ctx, ClaimReport& report, std::size_t count, const Key& key, Check&& check) {
  auto findings = parallel_map(count, ctx.config().jobs, check);
  report.instances_tested += count;
  for (std::size_t i = 0; i < count; ++i) ++report.instances_by_size[key(i)];
  for (auto& f : findings) {
    if (!f) continue;
    ++report.counterexample_count;
    if (report.counterexamples.size() < ctx.config().counterexample_limit) report.counterexamples.push_back(std::move(*f));
  }
}

inline void record(const Context& ctx, ClaimReport& report, Finding f) {
  ++report.instances_tested;
  if (!f) return;
  ++report.counterexample_count;
  if (report.counterexamples.size() < ctx.config().counterexample_limit) report.counterexamples.push_back(std::move(*f));
}

inline QRational random_unit_rational(std::mt19937_64& rng, std::uint64_t max_den) {
  const auto den = static_cast<long long>(1 + rng() % max_den);
  const auto num = static_cast<long long>(rng() % static_cast<std::uint64_t>(den + 1));
  return QRational(num, den);
}

inline std::string set_labels(const FiniteSpace& s, PointSet p) { return json_io::labelled_set_json(s, p).dump(); }

inline std::string cover_labels(const FiniteSpace& s, const std::vector<PointSet>& sets) {
  return json_io::cover_to_json(s, sets).dump();
}

inline std::vector<std::vector<PointId>> maps_between(const Context& ctx, const FiniteSpace& a, const FiniteSpace& b) {
  return continuous_assignments(a, b, ctx.config().map_budget);
}

inline std::string orientation_name(EquivalenceOrientation o) {
  return o == EquivalenceOrientation::identity_to_composite ? "identity-to-composite" : "composite-to-identity";
}

// ---- per-claim checks -------------------------------------------------------

inline void claim_t1(const Context& ctx, ClaimReport& r) {
  auto rng = ctx.rng(ClaimId::T1);
  const std::size_t trials = std::max<std::size_t>(1, ctx.config().random_trials / 50);
  r.scope = std::to_string(trials) + " random finite rational sets and " + std::to_string(trials) + " intervals";
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<QRational> values;
    const std::size_t want = 1 + rng() % 8;
    while (values.size() < want) {
      QRational v = random_unit_rational(rng, 12);
      if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
    std::vector<QRational> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const auto report = finite_subset_compactness(values);
    std::vector<GridPoint> line;
    for (const auto& v : values) line.push_back({{v}});
    const FiniteSpace s = grid_subspace(line);
    const PointId top = static_cast<PointId>(std::find(values.begin(), values.end(), sorted.back()) - values.begin());
    Finding f;
    if (!report.compact || !report.biggest || *report.biggest != sorted.back()) {
      f = found({s}, "biggest element not reported as " + sorted.back().to_string());
    } else if (s.min_open(top) != s.points()) {
      f = found({s}, "an open set contains the biggest element but not the whole subset");
    }
    record(ctx, r, std::move(f));
  }
  for (std::size_t t = 0; t < trials; ++t) {
    QRational a = random_unit_rational(rng, 12);
    QRational b = random_unit_rational(rng, 12);
    if (a == b) b = a + QRational(1, 13);
    if (b < a) std::swap(a, b);
    const bool closed = rng() % 2 == 0;
    IntervalDescriptor interval{a, b, true, closed};
    const auto report = finite_subset_compactness(interval);
    Finding f;
    if (report.compact != closed) {
      f = found({}, "interval " + interval.to_string() + " reported compact = " + (report.compact ? "true" : "false"));
    } else if (!closed && !report.cover_witness) {
      f = found({}, "interval " + interval.to_string() + " has no cover witness");
    }
    record(ctx, r, std::move(f));
  }
}

inline void claim_t2(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope() + ", all point pairs";
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    for (PointId x = 0; x < s.size(); ++x) {
      const PointSet cl = closure_via_open_sets(s, PointSet::single(x));
      for (PointId y = 0; y < s.size(); ++y) {
        if (ir_path(s, x, y).has_value() != cl.contains(y)) {
          return found({s}, "path " + s.label(x) + " -> " + s.label(y) + " disagrees with closure membership");
        }
      }
    }
    return std::nullopt;
  });
}

inline void claim_t3(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope() + ", every ir-path";
  const std::array<QRational, 4> times{QRational(0), QRational(1, 3), QRational(99, 100), QRational(1)};
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    for (PointId x = 0; x < s.size(); ++x) {
      const PointSet cl = closure_via_open_sets(s, PointSet::single(x));
      for (PointId y = 0; y < s.size(); ++y) {
        auto path = ir_path(s, x, y);
        if (!path) continue;
        for (const auto& t : times) {
          if (!cl.contains(path->at(t))) {
            return found({s}, "path " + s.label(x) + " -> " + s.label(y) + " leaves cl{" + s.label(x) + "}");
          }
        }
      }
    }
    return std::nullopt;
  });
}

inline void claim_t4(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope();
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    if (!is_T1(s)) return std::nullopt;
    for (PointId x = 0; x < s.size(); ++x) {
      for (PointId y = 0; y < s.size(); ++y) {
        auto p = ir_path(s, x, y);
        if (p && !p->is_constant()) return found({s}, "nonconstant path " + s.label(x) + " -> " + s.label(y));
      }
    }
    return std::nullopt;
  });
}

inline void claim_t5(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.pair_scope() + ", all continuous map pairs";
  sweep(ctx, r, ctx.pair_count(), ctx.pair_key(), [&](std::size_t k) -> Finding {
    auto [x, y] = ctx.pair(k);
    if (!is_T1(*y)) return std::nullopt;
    const auto maps = maps_between(ctx, *x, *y);
    for (const auto& a : maps) {
      for (const auto& b : maps) {
        ContinuousMap f(*x, *y, a), g(*x, *y, b);
        if (ir_homotopic(f, g) && !(f == g)) return found({*x, *y}, "distinct ir-homotopic maps into a T1 space");
      }
    }
    return std::nullopt;
  });
}

inline void claim_t6(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.oracle_scope() + ", identity vs every constant, cylinder search";
  sweep(ctx, r, ctx.oracle_count(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    const PointSet co = ir_co(s);
    if (is_ir_contractible(s).has_value() == co.empty()) return found({s}, "contractibility disagrees with ir_co");
    const auto id = ContinuousMap::identity(s).assignment();
    for (PointId x0 = 0; x0 < s.size(); ++x0) {
      const std::vector<PointId> constant(s.size(), x0);
      if (chain_homotopy_oracle(s, s, id, constant, ctx.config().map_budget) != co.contains(x0)) {
        return found({s}, "cylinder search disagrees at contraction point " + s.label(x0));
      }
    }
    return std::nullopt;
  });
}

inline void claim_t7(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.pair_scope();
  sweep(ctx, r, ctx.pair_count(), ctx.pair_key(), [&](std::size_t k) -> Finding {
    auto [x, y] = ctx.pair(k);
    const FiniteSpace xy = product(*x, *y);
    PointSet expected;
    for (PointId a : ir_co(*x)) {
      for (PointId b : ir_co(*y)) expected.insert(a * y->size() + b);
    }
    const PointSet actual = ir_co(xy);
    if (actual != expected) {
      return found({*x, *y}, "ir_co of the product is " + set_labels(xy, actual) + ", expected " +
                                  set_labels(xy, expected));
    }
    return std::nullopt;
  });
}

inline void claim_t8(const Context& ctx, ClaimReport& r) {
  std::vector<const FiniteSpace*> posets;
  for (const auto& s : ctx.spaces()) {
    if (is_T0(s)) posets.push_back(&s);
  }
  r.scope = std::to_string(posets.size()) + " partial orders on 1.." + std::to_string(ctx.config().max_points) +
            " elements and Z/n for n in [2, " + std::to_string(ctx.config().zn_max) + "]";
  struct PosetOutcome {
    Finding finding;
    bool complement_cover_ok = true;
  };
  auto outcomes = parallel_map(posets.size(), ctx.config().jobs, [&](std::size_t i) {
    const FiniteSpace& s = *posets[i];
    const SpecSpace spec = spec_from_poset(s.labels(), s.reach_relation());
    const auto rep = check_theorem8(spec);
    PosetOutcome out;
    out.complement_cover_ok = rep.complement_cover_categorical;
    if (!rep.holds) {
      out.finding = found({s}, "ir_cat = " + std::to_string(rep.category.size()) + " but " +
                                   std::to_string(rep.maximal_count) + " maximal ideals");
    }
    return out;
  });
  std::size_t complement_failures = 0;
  std::optional<std::size_t> first_failure;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].complement_cover_ok) {
      ++complement_failures;
      if (!first_failure) first_failure = i;
    }
    ++r.instances_by_size[std::to_string(posets[i]->size())];
    record(ctx, r, std::move(outcomes[i].finding));
  }
  if (complement_failures > 0) {
    const FiniteSpace& s = *posets[*first_failure];
    r.notes.push_back(std::to_string(complement_failures) +
                      " posets where the cover {Spec minus the other maximal ideals} is not ir-categorical; first: " +
                      json_io::space_to_json(s).dump() + " (the cover by minimal neighbourhoods of the maximal ideals always is)");
  }
  const std::uint64_t zn_count = ctx.config().zn_max >= 2 ? ctx.config().zn_max - 1 : 0;
  auto zn = parallel_map(zn_count, ctx.config().jobs, [&](std::size_t i) -> Finding {
    const std::uint64_t n = i + 2;
    const SpecSpace spec = spec_zn(n);
    const auto rep = check_theorem8(spec);
    if (!rep.holds) return found({spec.space}, "Spec(Z/" + std::to_string(n) + ") has ir_cat " + std::to_string(rep.category.size()));
    return std::nullopt;
  });
  for (auto& f : zn) record(ctx, r, std::move(f));
  if (zn_count > 0) r.instances_by_size["Z/n"] = zn_count;
}

inline void claim_t9(const Context& ctx, ClaimReport& r, std::vector<CoverSense> senses) {
  r.scope = ctx.pair_scope() + (senses.size() == 2 ? ", subspace and ambient senses" : ", subspace sense");
  std::vector<std::size_t> cat_cache(ctx.small_count() * 2);
  for (std::size_t i = 0; i < ctx.small_count(); ++i) {
    cat_cache[2 * i] = ir_cat(ctx.small(i), CoverSense::subspace).size();
    cat_cache[2 * i + 1] = ir_cat(ctx.small(i), CoverSense::ambient).size();
  }
  sweep(ctx, r, ctx.pair_count(), ctx.pair_key(), [&](std::size_t k) -> Finding {
    auto [x, y] = ctx.pair(k);
    const std::size_t ix = k / ctx.small_count();
    const std::size_t iy = k % ctx.small_count();
    const FiniteSpace xy = product(*x, *y);
    std::string detail;
    for (CoverSense sense : senses) {
      const std::size_t off = sense == CoverSense::subspace ? 0 : 1;
      const std::size_t lhs = ir_cat(xy, sense).size();
      const std::size_t rhs = cat_cache[2 * ix + off] * cat_cache[2 * iy + off];
      if (lhs != rhs) {
        if (!detail.empty()) detail += "; ";
        detail += std::string(to_string(sense)) + ": ir_cat(XxY) = " + std::to_string(lhs) + ", ir_cat(X)*ir_cat(Y) = " +
                  std::to_string(cat_cache[2 * ix + off]) + "*" + std::to_string(cat_cache[2 * iy + off]);
      }
    }
    if (!detail.empty()) return found({*x, *y}, detail);
    return std::nullopt;
  });
}

inline void claim_t10(const Context& ctx, ClaimReport& r) {
  auto rng = ctx.rng(ClaimId::T10);
  const std::size_t trials = std::max<std::size_t>(1, ctx.config().random_trials / 50);
  r.scope = std::to_string(trials) + " random 10-point grid sets in dimensions 1..3 with a greatest point appended";
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t dim = 1 + rng() % 3;
    std::vector<GridPoint> pts;
    while (pts.size() < 10) {
      GridPoint p;
      for (std::size_t d = 0; d < dim; ++d) p.coords.push_back(random_unit_rational(rng, 6));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    GridPoint top;
    for (std::size_t d = 0; d < dim; ++d) {
      QRational m = pts.front().coords[d];
      for (const auto& p : pts) m = std::max(m, p.coords[d]);
      top.coords.push_back(m);
    }
    if (std::find(pts.begin(), pts.end(), top) == pts.end()) pts.push_back(top);
    const auto rep = check_theorem10(pts);
    Finding f;
    if (!rep.holds) f = found({grid_subspace(pts)}, "ir_co is not the greatest point " + top.to_string());
    record(ctx, r, std::move(f));
  }
}

inline void claim_t11(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope();
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    if (!is_T0(s)) return std::nullopt;
    for (PointId x = 0; x < s.size(); ++x) {
      for (PointId y : s.closure_of_point(x)) {
        if (x != y && reverse_exists(s, x, y)) return found({s}, "reverse path " + s.label(y) + " -> " + s.label(x));
      }
    }
    return std::nullopt;
  });
}

inline void claim_t12(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope();
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    auto co = is_ir_contractible(s);
    if (is_T0(s) && co && co->size() != 1) return found({s}, "ir_co = " + set_labels(s, *co));
    return std::nullopt;
  });
}

inline void claim_t13(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope() + ", irredundant covers";
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    const auto rep = check_theorem13(s, 40);
    if (!rep.holds) {
      return found({s}, "dim = " + std::to_string(rep.dimension.dim) + ", ir_cat = " + std::to_string(rep.category.size()) +
                            ", worst cover " + cover_labels(s, rep.dimension.worst_cover));
    }
    return std::nullopt;
  });
}

inline void claim_t14_t15(const Context& ctx, ClaimReport& r, EquivalenceOrientation orientation, bool category) {
  r.scope = ctx.pair_scope() + ", " + orientation_name(orientation) + " orientation";
  std::vector<std::size_t> cats(ctx.small_count());
  for (std::size_t i = 0; i < ctx.small_count(); ++i) cats[i] = ir_cat(ctx.small(i)).size();
  struct Outcome {
    Finding finding;
    int equivalent = 0;
  };
  auto outcomes = parallel_map(ctx.pair_count(), ctx.config().jobs, [&](std::size_t k) {
    auto [x, y] = ctx.pair(k);
    Outcome out;
    auto eq = ir_homotopy_equivalent(*x, *y, orientation, ctx.config().map_budget);
    if (!eq) return out;
    out.equivalent = 1;
    std::string maps = " via f = " + nlohmann::json(eq->f.assignment()).dump() + ", g = " +
                       nlohmann::json(eq->g.assignment()).dump();
    if (!category) {
      if (is_ir_contractible(*x) && !is_ir_contractible(*y)) {
        out.finding = found({*x, *y}, "X is ir-contractible, Y is not" + maps);
      }
    } else {
      const std::size_t cx = cats[k / ctx.small_count()];
      const std::size_t cy = cats[k % ctx.small_count()];
      if (cx != cy) {
        out.finding = found({*x, *y}, "ir_cat(X) = " + std::to_string(cx) + ", ir_cat(Y) = " + std::to_string(cy) + maps);
      }
    }
    return out;
  });
  std::size_t equivalent = 0;
  const Key key = ctx.pair_key();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    auto& o = outcomes[k];
    ++r.instances_by_size[key(k)];
    equivalent += static_cast<std::size_t>(o.equivalent);
    record(ctx, r, std::move(o.finding));
  }
  r.notes.push_back(std::to_string(equivalent) + " of " + std::to_string(outcomes.size()) + " pairs are equivalent");
}

inline void claim_p1(const Context& ctx, ClaimReport& r) {
  auto rng = ctx.rng(ClaimId::P1);
  const std::size_t trials = ctx.config().random_trials;
  r.scope = std::to_string(trials) + " random rational triples with denominators up to 20";
  for (std::size_t t = 0; t < trials; ++t) {
    const QRational x = random_unit_rational(rng, 20);
    const QRational y = random_unit_rational(rng, 20);
    const QRational z = random_unit_rational(rng, 20);
    QRational eps = random_unit_rational(rng, 20);
    if (eps == QRational(0)) eps = QRational(1, 21);
    std::string problem;
    const QRational zero(0);
    if (d_ir(x, x) != zero) problem = "d(x,x) != 0";
    if (d_ir(x, y) < zero) problem = "negative distance";
    if (d_ir(x, z) > d_ir(x, y) + d_ir(y, z)) problem = "triangle inequality fails";
    if (d_ir(x, y) == zero && d_ir(y, x) == zero && x != y) problem = "distinct points at distance zero both ways";
    const LeftInterval b = ball(x, eps);
    const QRational end = x + eps;
    if (end <= QRational(1)) {
      if (b.upper.to_string() != end.to_string() || b.upper_closed) problem = "ball endpoint " + b.to_string();
    } else if (!b.upper_closed || b.upper != QRational(1)) {
      problem = "clipped ball " + b.to_string();
    }
    for (const QRational& probe : {y, z}) {
      if (b.contains(probe) != (d_ir(x, probe) < eps)) problem = "ball membership of " + probe.to_string();
    }
    Finding f;
    if (!problem.empty()) {
      f = found({}, problem + " at x = " + x.to_string() + ", y = " + y.to_string() + ", z = " + z.to_string() +
                        ", eps = " + eps.to_string());
    }
    record(ctx, r, std::move(f));
  }
}

inline void claim_p2(const Context& ctx, ClaimReport& r) {
  auto rng = ctx.rng(ClaimId::P2);
  const std::size_t trials = std::max<std::size_t>(1, ctx.config().random_trials / 50);
  r.scope = std::to_string(trials) + " random finite subsets of the line and chains of length 1..16";
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<GridPoint> line;
    const std::size_t want = 1 + rng() % 12;
    while (line.size() < want) {
      GridPoint p{{random_unit_rational(rng, 30)}};
      if (std::find(line.begin(), line.end(), p) == line.end()) line.push_back(std::move(p));
    }
    const FiniteSpace s = grid_subspace(line);
    record(ctx, r, is_hyperconnected(s) ? Finding{} : found({s}, "not hyperconnected"));
  }
  for (std::size_t k = 1; k <= 16; ++k) {
    const FiniteSpace s = chain_space(k);
    record(ctx, r, is_hyperconnected(s) ? Finding{} : found({s}, "chain not hyperconnected"));
  }
}

inline void claim_p3(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope() + ", every minimum ir-categorical cover";
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    for (const auto& cover : minimum_categorical_covers(s)) {
      const auto res = check_prop3(s, cover);
      if (!res.holds) {
        auto [a, b, p] = *res.violation;
        return found({s}, "cover " + cover_labels(s, cover) + ": point " + s.label(p) + " of ir-Co(W" +
                              std::to_string(a) + ") lies in W" + std::to_string(b));
      }
    }
    return std::nullopt;
  });
}

inline void claim_p4(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope();
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    const auto opens = open_sets(s);
    const FiniteSpace rebuilt = FiniteSpace::from_open_sets(s.labels(), opens);
    const Relation rel = quasiorder(rebuilt);
    if (!(rebuilt == s)) return found({s}, "open sets do not reproduce the ir-path relation");
    if (rel.reflexivity_violation() || rel.transitivity_violation()) return found({s}, "ir-path relation not a quasiorder");
    return std::nullopt;
  });
}

inline void claim_l1(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope() + ", minimum ir-categorical covers against every irredundant open cover";
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    const auto covers = irredundant_covers(s, 40);
    for (const auto& w : minimum_categorical_covers(s)) {
      for (const auto& v : covers) {
        if (!check_refinement(s, w, v).refines) {
          return found({s}, "categorical cover " + cover_labels(s, w) + " does not refine " + cover_labels(s, v));
        }
      }
    }
    return std::nullopt;
  });
}

inline std::optional<std::vector<PointSet>> padded_cover(const FiniteSpace& s) {
  const auto cat = ir_cat(s);
  for (PointSet o : open_sets(s)) {
    if (o.empty() || std::find(cat.sets.begin(), cat.sets.end(), o) != cat.sets.end()) continue;
    auto padded = cat.sets;
    padded.push_back(o);
    return padded;
  }
  return std::nullopt;
}

inline void claim_l2_literal(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope() + ", optimal cover padded with one more open set";
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    if (auto padded = padded_cover(s)) {
      return found({s}, "open cover " + cover_labels(s, *padded) + " has " + std::to_string(padded->size()) +
                            " members but ir_cat = " + std::to_string(padded->size() - 1));
    }
    return std::nullopt;
  });
}

inline void claim_l2_subcover(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope() + ", every irredundant cover, the padded cover and the cover by all open sets";
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    const std::size_t cat = ir_cat(s).size();
    auto covers = irredundant_covers(s, 40);
    if (auto padded = padded_cover(s)) covers.push_back(*padded);
    std::vector<PointSet> everything;
    for (PointSet o : open_sets(s)) {
      if (!o.empty()) everything.push_back(o);
    }
    covers.push_back(everything);
    for (const auto& v : covers) {
      const auto sub = min_subcover(s, v);
      if (sub.size() > cat) {
        return found({s}, "cover " + cover_labels(s, v) + " has no subcover of size <= " + std::to_string(cat));
      }
    }
    return std::nullopt;
  });
}

inline void claim_c2(const Context& ctx, ClaimReport& r) {
  r.scope = "the Sierpinski space and discrete spaces on 2..8 points";
  const FiniteSpace sierpinski = chain_space(2);
  record(ctx, r, ir_co(sierpinski) == PointSet{1} ? Finding{} : found({sierpinski}, "ir_co(S) != {1}"));
  for (std::size_t n = 2; n <= 8; ++n) {
    const FiniteSpace d = FiniteSpace::from_reach(default_labels(n), Relation::identity(n));
    record(ctx, r, is_ir_contractible(d) ? found({d}, "discrete space is ir-contractible") : Finding{});
  }
}

inline void claim_c3(const Context& ctx, ClaimReport& r) {
  auto rng = ctx.rng(ClaimId::C3);
  const std::size_t samples = std::max<std::size_t>(1, ctx.config().random_trials / 10);
  r.scope = "chains of length 1..32 and " + std::to_string(samples) + " rational samples of G(s,t) = (1-t)s + t";
  for (std::size_t k = 1; k <= 32; ++k) {
    const FiniteSpace c = chain_space(k);
    record(ctx, r, ir_co(c) == PointSet::single(k - 1) ? Finding{} : found({c}, "ir_co is not the top"));
  }
  const QRational one(1);
  for (std::size_t t = 0; t < samples; ++t) {
    const QRational s = random_unit_rational(rng, 16);
    const QRational time = random_unit_rational(rng, 16);
    auto g = [&](const QRational& tt) { return (one - tt) * s + tt; };
    Finding f;
    if (g(QRational(0)) != s || g(one) != one || g(time) < s || g(time) > one) {
      f = found({}, "G(" + s.to_string() + ", " + time.to_string() + ") = " + g(time).to_string() + " leaves [s, 1]");
    }
    record(ctx, r, std::move(f));
  }
}

inline void claim_c4(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope();
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    if (is_T1(s) && is_ir_contractible(s) && s.size() != 1) return found({s}, "T1, ir-contractible, not a point");
    return std::nullopt;
  });
}

inline void claim_c6(const Context& ctx, ClaimReport& r) {
  std::vector<const FiniteSpace*> local;
  for (const auto& s : ctx.spaces()) {
    if (!is_T0(s)) continue;
    std::size_t maximal = 0;
    for (PointId p = 0; p < s.size(); ++p) maximal += s.closure_of_point(p) == PointSet::single(p) ? 1 : 0;
    if (maximal == 1) local.push_back(&s);
  }
  r.scope = std::to_string(local.size()) + " posets with a unique maximal element on 1.." +
            std::to_string(ctx.config().max_points) + " elements";
  sweep(ctx, r, local.size(), [&](std::size_t i) { return std::to_string(local[i]->size()); }, [&](std::size_t i) -> Finding {
    const FiniteSpace& s = *local[i];
    const SpecSpace spec = spec_from_poset(s.labels(), s.reach_relation());
    const std::size_t cat = ir_cat(spec.space).size();
    if (cat != 1 || ir_co(spec.space) != spec.maximal) {
      return found({s}, "ir_cat = " + std::to_string(cat) + ", ir_co = " + set_labels(s, ir_co(spec.space)));
    }
    return std::nullopt;
  });
}

inline void claim_c7(const Context& ctx, ClaimReport& r) {
  const std::uint64_t limit = std::min<std::uint64_t>(ctx.config().zn_max, 10000);
  std::size_t primes = 0;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (distinct_prime_factors(p) != std::vector<std::uint64_t>{p}) continue;
    ++primes;
    const SpecSpace spec = spec_zn(p);
    Finding f;
    if (spec.space.size() != 1 || ir_co(spec.space) != PointSet{0}) {
      f = found({spec.space}, "Spec(Z/" + std::to_string(p) + ") is not a contractible point");
    }
    record(ctx, r, std::move(f));
  }
  r.scope = "Z/p for the " + std::to_string(primes) + " primes p <= " + std::to_string(limit);
}

inline void claim_c8(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope() + ", all pairs of minimum ir-categorical covers";
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    const auto covers = minimum_categorical_covers(s);
    for (const auto& w : covers) {
      for (const auto& w2 : covers) {
        bool refines = true;
        for (PointSet a : w2) {
          bool inside = false;
          for (PointSet b : w) inside = inside || a.is_subset_of(b);
          refines = refines && inside;
        }
        if (refines && w2 != w) {
          return found({s}, "cover " + cover_labels(s, w2) + " refines the different cover " + cover_labels(s, w));
        }
      }
    }
    return std::nullopt;
  });
}

inline void claim_c9(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope();
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    if (is_T0(s) && !is_partial_order(s)) return found({s}, "T0 but not a partial order");
    if (!is_T0(s) && is_partial_order(s)) return found({s}, "partial order but not T0");
    return std::nullopt;
  });
}

inline void claim_d3(const Context& ctx, ClaimReport& r) {
  r.scope = "ordered pairs of " + ctx.oracle_scope() + ", all continuous map pairs";
  sweep(ctx, r, ctx.oracle_pair_count(), ctx.oracle_pair_key(), [&](std::size_t k) -> Finding {
    auto [x, y] = ctx.oracle_pair(k);
    const auto realized = realizable_homotopy_pairs(*x, *y, ctx.config().map_budget);
    const auto maps = maps_between(ctx, *x, *y);
    for (const auto& a : maps) {
      for (const auto& b : maps) {
        ContinuousMap f(*x, *y, a), g(*x, *y, b);
        const auto cert = ir_homotopic(f, g);
        const bool searched = realized.count({a, b}) > 0;
        if (cert.has_value() != searched || (cert && !cert->two_piece_is_continuous())) {
          return found({*x, *y}, "criterion and cylinder search disagree on f = " + nlohmann::json(a).dump() +
                                     ", g = " + nlohmann::json(b).dump());
        }
      }
    }
    return std::nullopt;
  });
}

inline void claim_d5(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.unary_scope();
  sweep(ctx, r, ctx.spaces().size(), ctx.unary_key(), [&](std::size_t i) -> Finding {
    const FiniteSpace& s = ctx.spaces()[i];
    const auto sub = ir_cat(s, CoverSense::subspace);
    const auto amb = ir_cat(s, CoverSense::ambient);
    if (sub.size() != amb.size()) {
      return found({s}, "subspace ir_cat " + std::to_string(sub.size()) + " via " + cover_labels(s, sub.sets) +
                            ", ambient ir_cat " + std::to_string(amb.size()) + " via " + cover_labels(s, amb.sets));
    }
    return std::nullopt;
  });
}

inline void claim_d8(const Context& ctx, ClaimReport& r) {
  r.scope = ctx.pair_scope();
  struct Outcome {
    Finding finding;
    int forward = 0;
    int backward = 0;
  };
  auto outcomes = parallel_map(ctx.pair_count(), ctx.config().jobs, [&](std::size_t k) {
    auto [x, y] = ctx.pair(k);
    Outcome out;
    out.forward = ir_homotopy_equivalent(*x, *y, EquivalenceOrientation::identity_to_composite, ctx.config().map_budget) ? 1 : 0;
    out.backward = ir_homotopy_equivalent(*x, *y, EquivalenceOrientation::composite_to_identity, ctx.config().map_budget) ? 1 : 0;
    if (out.forward != out.backward) {
      out.finding = found({*x, *y}, std::string("equivalent only with the ") +
                                        (out.forward ? "identity-to-composite" : "composite-to-identity") + " orientation");
    }
    return out;
  });
  std::size_t forward = 0, backward = 0;
  const Key key = ctx.pair_key();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    auto& o = outcomes[k];
    ++r.instances_by_size[key(k)];
    forward += static_cast<std::size_t>(o.forward);
    backward += static_cast<std::size_t>(o.backward);
    record(ctx, r, std::move(o.finding));
  }
  r.notes.push_back("identity-to-composite: " + std::to_string(forward) + " equivalent pairs; composite-to-identity: " +
                    std::to_string(backward));
}

inline void dispatch(const Context& ctx, ClaimReport& r) {
  switch (r.claim) {
    case ClaimId::T1: return claim_t1(ctx, r);
    case ClaimId::T2: return claim_t2(ctx, r);
    case ClaimId::T3: return claim_t3(ctx, r);
    case ClaimId::T4: return claim_t4(ctx, r);
    case ClaimId::T5: return claim_t5(ctx, r);
    case ClaimId::T6: return claim_t6(ctx, r);
    case ClaimId::T7: return claim_t7(ctx, r);
    case ClaimId::T8: return claim_t8(ctx, r);
    case ClaimId::T9: return claim_t9(ctx, r, {CoverSense::subspace});
    case ClaimId::T10: return claim_t10(ctx, r);
    case ClaimId::T11: return claim_t11(ctx, r);
    case ClaimId::T12: return claim_t12(ctx, r);
    case ClaimId::T13: return claim_t13(ctx, r);
    case ClaimId::T14: return claim_t14_t15(ctx, r, EquivalenceOrientation::identity_to_composite, false);
    case ClaimId::T15: return claim_t14_t15(ctx, r, EquivalenceOrientation::identity_to_composite, true);
    case ClaimId::P1: return claim_p1(ctx, r);
    case ClaimId::P2: return claim_p2(ctx, r);
    case ClaimId::P3: return claim_p3(ctx, r);
    case ClaimId::P4: return claim_p4(ctx, r);
    case ClaimId::L1: return claim_l1(ctx, r);
    case ClaimId::L2_literal: return claim_l2_literal(ctx, r);
    case ClaimId::L2_subcover: return claim_l2_subcover(ctx, r);
    case ClaimId::C1:
      r.scope = "none";
      r.notes.push_back("concerns the whole real line; only finite subspaces are modelled here (see T1)");
      return;
    case ClaimId::C2: return claim_c2(ctx, r);
    case ClaimId::C3: return claim_c3(ctx, r);
    case ClaimId::C4: return claim_c4(ctx, r);
    case ClaimId::C5:
      r.scope = "none";
      r.notes.push_back("every finite space is compact, so the statement carries no content at this scale");
      return;
    case ClaimId::C6: return claim_c6(ctx, r);
    case ClaimId::C7: return claim_c7(ctx, r);
    case ClaimId::C8: return claim_c8(ctx, r);
    case ClaimId::C9: return claim_c9(ctx, r);
    case ClaimId::D3_oracle: return claim_d3(ctx, r);
    case ClaimId::D5_sense_compare: return claim_d5(ctx, r);
    case ClaimId::D8_orientation_compare: return claim_d8(ctx, r);
    case ClaimId::T9_product: return claim_t9(ctx, r, {CoverSense::subspace, CoverSense::ambient});
    case ClaimId::T14_def8: return claim_t14_t15(ctx, r, EquivalenceOrientation::composite_to_identity, false);
    case ClaimId::T15_def8: return claim_t14_t15(ctx, r, EquivalenceOrientation::composite_to_identity, true);
  }
}

inline ClaimReport run_in(const Context& ctx, ClaimId id) {
  const auto start = std::chrono::steady_clock::now();
  ClaimReport r;
  r.claim = id;
  r.classification = info(id).classification;
  dispatch(ctx, r);
  r.passed = r.counterexample_count == 0;
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace detail

inline ClaimReport run_claim(ClaimId id, const VerifyConfig& config) {
  const detail::Context ctx(config);
  return detail::run_in(ctx, id);
}

inline std::vector<ClaimId> all_claims() {
  std::vector<ClaimId> out;
  for (const auto& c : kClaims) out.push_back(c.id);
  return out;
}

/// Runs `claims` (default: all) in suite order.
inline std::vector<ClaimReport> run_suite(const VerifyConfig& config, std::vector<ClaimId> claims = all_claims()) {
  const detail::Context ctx(config);
  std::vector<ClaimReport> out;
  for (const auto& c : kClaims) {
    if (std::find(claims.begin(), claims.end(), c.id) != claims.end()) out.push_back(detail::run_in(ctx, c.id));
  }
  return out;
}

/// Claims that failed although they are expected to hold.
inline std::vector<const ClaimReport*> unexpected_failures(const std::vector<ClaimReport>& reports) {
  std::vector<const ClaimReport*> out;
  for (const auto& r : reports) {
    if (r.classification == Classification::claim && !r.passed) out.push_back(&r);
  }
  return out;
}

inline std::string verdict(const ClaimReport& r) {
  switch (r.classification) {
    case Classification::out_of_scope: return "not-run";
    case Classification::known_false: return r.passed ? "pass (expected fail)" : "fail (expected)";
    case Classification::experimental: return r.passed ? "pass" : "counterexample";
    case Classification::claim: return r.passed ? "pass" : "FAIL";
  }
  return "?";
}

inline nlohmann::json report_json(const std::vector<ClaimReport>& reports, const VerifyConfig& config,
                                  bool timings = false) {
  using nlohmann::json;
  json claims = json::array();
  for (const auto& r : reports) {
    json ces = json::array();
    for (const auto& c : r.counterexamples) {
      json spaces = json::array();
      for (const auto& s : c.spaces) spaces.push_back(json_io::space_to_json(s));
      ces.push_back({{"detail", c.detail}, {"spaces", spaces}});
    }
    json entry = {{"claim", std::string(info(r.claim).name)},
                  {"statement", std::string(info(r.claim).statement)},
                  {"classification", std::string(to_string(r.classification))},
                  {"scope", r.scope},
                  {"instances_tested", r.instances_tested},
                  {"instances_by_size", r.instances_by_size},
                  {"passed", r.passed},
                  {"verdict", verdict(r)},
                  {"counterexample_count", r.counterexample_count},
                  {"counterexamples", ces},
                  {"notes", r.notes}};
    if (timings) entry["elapsed_seconds"] = r.elapsed.count();
    claims.push_back(std::move(entry));
  }
  const auto failures = unexpected_failures(reports);
  json failed = json::array();
  for (const auto* r : failures) failed.push_back(std::string(info(r->claim).name));
  return {{"config",
           {{"max_points", config.max_points},
            {"pair_max_points", config.pair_max_points},
            {"oracle_max_points", config.oracle_max_points},
            {"seed", config.seed},
            {"map_budget", config.map_budget},
            {"zn_max", config.zn_max},
            {"random_trials", config.random_trials}}},
          {"claims", claims},
          {"unexpected_failures", failed}};
}

inline std::string report_table(const std::vector<ClaimReport>& reports) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %-13s %10s %8s  %-22s %s\n", "claim", "class", "instances", "cex", "verdict",
                "seconds");
  out << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-24s %-13s %10zu %8zu  %-22s %.3f\n", std::string(info(r.claim).name).c_str(),
                  std::string(to_string(r.classification)).c_str(), r.instances_tested, r.counterexample_count,
                  verdict(r).c_str(), r.elapsed.count());
    out << line;
    for (const auto& c : r.counterexamples) out << "    counterexample: " << c.detail << "\n";
    for (const auto& n : r.notes) out << "    note: " << n << "\n";
  }
  return out.str();
}

}  // namespace irtopo::verify
