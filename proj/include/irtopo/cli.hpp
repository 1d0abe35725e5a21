#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "irtopo/category.hpp"
#include "irtopo/embeddings.hpp"
#include "irtopo/homotopy.hpp"
#include "irtopo/json_io.hpp"
#include "irtopo/spectra.hpp"
#include "irtopo/verifier.hpp"

namespace irtopo::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

namespace detail {

inline json load(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return json_io::parse_text(text);
  }
  return json_io::read_file(path);
}

inline std::uint64_t map_budget() {
  const char* env = std::getenv("IRTOPO_BUDGET_MAPS");
  if (env == nullptr || *env == '\0') return kDefaultMapBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw Error(Errc::ParseError, "IRTOPO_BUDGET_MAPS must be a positive integer");
  return v;
}

inline PointId point_by_label(const FiniteSpace& s, const std::string& label) {
  if (auto i = s.index_of(label)) return *i;
  throw Error(Errc::InvalidPoint, "no point labelled \"" + label + "\"");
}

inline std::string labels_text(const FiniteSpace& s, PointSet p) {
  std::string out = "{";
  bool first = true;
  for (PointId x : p) {
    if (!first) out += ", ";
    out += s.label(x);
    first = false;
  }
  return out + "}";
}

inline std::string cover_text(const FiniteSpace& s, const std::vector<PointSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? " " : "") + labels_text(s, sets[i]);
  return out;
}

/// Prints `doc` as JSON, or as "key: value" lines for table output.
inline void emit(std::ostream& out, const json& doc, bool as_json) {
  if (as_json) {
    out << doc.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

inline CoverSense parse_sense(const std::string& s) {
  return s == "ambient" ? CoverSense::ambient : CoverSense::subspace;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace detail

/// Entry point of the irtopo tool. Returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Finite topological spaces: ir-paths, ir-homotopy, ir-Co, ir-category"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

  std::string file, file2, from, to, sense = "subspace", x_text, y_text, eps_text, values_text, out_path;
  std::size_t jobs = 1, max_opens = kDefaultDimensionOpenBudget;
  bool def8 = false, all_covers = false;

  auto* analyze = app.add_subcommand("analyze", "Summary of a space file");
  analyze->add_option("space", file, "Space JSON file, - for stdin")->required();
  analyze->add_option("--sense", sense)->check(CLI::IsMember({"subspace", "ambient"}));

  auto* path = app.add_subcommand("path", "ir-path between two points");
  path->add_option("space", file)->required();
  path->add_option("--from", from, "Source label")->required();
  path->add_option("--to", to, "Target label")->required();

  auto* co = app.add_subcommand("co", "ir-Co, the points every point specializes to");
  co->add_option("space", file)->required();

  auto* contractible = app.add_subcommand("contractible", "Whether the space is ir-contractible");
  contractible->add_option("space", file)->required();

  auto* equiv = app.add_subcommand("equiv", "Search for an ir-homotopy equivalence X -> Y");
  equiv->add_option("x", file)->required();
  equiv->add_option("y", file2)->required();
  equiv->add_flag("--def8-orientation", def8, "Require g.f ir-homotopic to the identity instead of the converse");
  equiv->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* cat = app.add_subcommand("cat", "ir-category and an optimal cover");
  cat->add_option("space", file)->required();
  cat->add_option("--sense", sense)->check(CLI::IsMember({"subspace", "ambient"}));
  cat->add_flag("--all", all_covers, "List every minimum cover");

  auto* dim = app.add_subcommand("dim", "Covering dimension");
  dim->add_option("space", file)->required();
  dim->add_option("--max-opens", max_opens, "Refuse spaces with more nonempty open sets");

  auto* spec = app.add_subcommand("spec", "Finite spectra");
  spec->require_subcommand(1);
  std::uint64_t modulus = 0;
  auto* zn = spec->add_subcommand("zn", "Spec(Z/n)");
  zn->add_option("--n", modulus)->required();
  zn->add_option("-o,--output", out_path, "Also write the space file here");
  auto* poset = spec->add_subcommand("poset", "Spectrum given by a poset of primes");
  poset->add_option("poset", file, "Poset JSON {labels, leq}")->required();
  poset->add_option("-o,--output", out_path);

  auto* interval = app.add_subcommand("interval", "The left order topology on [0,1]");
  interval->require_subcommand(1);
  auto* dist = interval->add_subcommand("dist", "Quasi-metric d(x, y) = max(y - x, 0)");
  dist->add_option("--x", x_text)->required();
  dist->add_option("--y", y_text)->required();
  auto* ball_cmd = interval->add_subcommand("ball", "Open ball B(x, eps)");
  ball_cmd->add_option("--x", x_text)->required();
  ball_cmd->add_option("--eps", eps_text)->required();
  auto* compact = interval->add_subcommand("compact", "Compactness of a finite subset");
  compact->add_option("--values", values_text, "Comma separated rationals")->required();

  auto* grid = app.add_subcommand("grid", "Grid subspace of the product order");
  grid->add_option("points", file, "Grid JSON {points}")->required();

  verify::VerifyConfig vc;
  std::string claims_text;
  bool timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check the catalogued claims on all small spaces");
  verify_cmd->add_option("--max-points", vc.max_points)->check(CLI::Range(1, static_cast<int>(kMaxEnumeratedPoints)));
  verify_cmd->add_option("--pair-max-points", vc.pair_max_points)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--oracle-max-points", vc.oracle_max_points)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--claims", claims_text, "Comma separated claim names, or all");
  verify_cmd->add_option("--jobs", vc.jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vc.seed);
  verify_cmd->add_option("--zn-max", vc.zn_max);
  verify_cmd->add_option("--trials", vc.random_trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out_path, "Also write the JSON report here");
  verify_cmd->add_flag("--timings", timings, "Include elapsed times in the JSON report");

  if (argc <= 1) {
    err << app.help();
    return kUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const bool as_json = format == "json";
  try {
    if (*analyze) {
      const FiniteSpace s = json_io::space_from_json(load(file));
      const auto cov = ir_cat(s, parse_sense(sense));
      const PointSet c = ir_co(s);
      json doc = {{"points", s.size()},
                  {"open_sets", open_sets(s).size()},
                  {"T0", is_T0(s)},
                  {"T1", is_T1(s)},
                  {"ir_co", json_io::labelled_set_json(s, c)},
                  {"ir_contractible", !c.empty()},
                  {"ir_path_connected", is_ir_path_connected(s)},
                  {"hyperconnected", is_hyperconnected(s)},
                  {"ir_cat", cov.size()},
                  {"sense", std::string(to_string(cov.sense))}};
      json cover = json::array();
      for (PointSet u : cov.sets) cover.push_back(json_io::labelled_set_json(s, u));
      try {
        doc["dim"] = covering_dimension(s).dim;
      } catch (const Error& e) {
        if (e.code() != Errc::SearchBudgetExceeded) throw;
        doc["dim"] = nullptr;
      }
      // row x, column y: 1 iff y is in the closure of {x}
      std::vector<std::string> rows;
      for (PointId x = 0; x < s.size(); ++x) {
        std::string row;
        for (PointId y = 0; y < s.size(); ++y) row += s.reach(x, y) ? '1' : '0';
        rows.push_back(row);
      }
      if (as_json) {
        doc["cover"] = cover;
        json reach = json::object();
        for (PointId x = 0; x < s.size(); ++x) reach[s.label(x)] = rows[x];
        doc["reach"] = reach;
        emit(out, doc, true);
        return kOk;
      }
      doc["cover"] = cover_text(s, cov.sets);
      emit(out, doc, false);
      out << "reach:\n";
      for (PointId x = 0; x < s.size(); ++x) out << "  " << s.label(x) << "  " << rows[x] << "\n";
      return kOk;
    }
    if (*path) {
      const FiniteSpace s = json_io::space_from_json(load(file));
      const PointId a = point_by_label(s, from);
      const PointId b = point_by_label(s, to);
      const auto p = ir_path(s, a, b);
      json doc = {{"from", from}, {"to", to}, {"exists", p.has_value()}};
      if (p) {
        doc["image"] = json_io::labelled_set_json(s, p->image());
        doc["path"] = "t in [0,1) -> " + from + ", t = 1 -> " + to;
      } else {
        doc["reason"] = to + " is not in the closure of {" + from + "}";
      }
      emit(out, doc, as_json);
      return kOk;
    }
    if (*co || *contractible) {
      const FiniteSpace s = json_io::space_from_json(load(file));
      const PointSet c = ir_co(s);
      json doc = {{"ir_co", json_io::labelled_set_json(s, c)}, {"ir_contractible", !c.empty()}};
      if (*contractible && !c.empty()) {
        doc["contraction"] = "H(x, t) = x for t < 1, H(x, 1) = " + s.label(c.first());
      }
      emit(out, doc, as_json);
      return kOk;
    }
    if (*equiv) {
      const FiniteSpace xs = json_io::space_from_json(load(file));
      const FiniteSpace ys = json_io::space_from_json(load(file2));
      const auto orientation =
          def8 ? EquivalenceOrientation::composite_to_identity : EquivalenceOrientation::identity_to_composite;
      const auto pair = ir_homotopy_equivalent(xs, ys, orientation, map_budget(), jobs);
      json doc = {{"equivalent", pair.has_value()},
                  {"orientation", def8 ? "composite-to-identity" : "identity-to-composite"}};
      if (pair) {
        json f = json::object(), g = json::object();
        for (PointId x = 0; x < xs.size(); ++x) f[xs.label(x)] = ys.label(pair->f(x));
        for (PointId y = 0; y < ys.size(); ++y) g[ys.label(y)] = xs.label(pair->g(y));
        doc["f"] = f;
        doc["g"] = g;
      }
      emit(out, doc, as_json);
      return kOk;
    }
    if (*cat) {
      const FiniteSpace s = json_io::space_from_json(load(file));
      const auto report = ir_cat(s, parse_sense(sense));
      json doc = json_io::cover_report_json(s, report);
      if (all_covers) {
        json covers = json::array();
        for (const auto& c : minimum_categorical_covers(s, report.sense)) covers.push_back(json_io::cover_to_json(s, c));
        doc["all_minimum_covers"] = covers;
      }
      if (!as_json) {
        out << "ir_cat: " << report.size() << "\nsense: " << to_string(report.sense) << "\ncover: "
            << cover_text(s, report.sets) << "\nwitnesses: " << cover_text(s, report.witnesses) << "\n";
        if (all_covers) {
          for (const auto& c : minimum_categorical_covers(s, report.sense)) out << "minimum cover: " << cover_text(s, c) << "\n";
        }
        return kOk;
      }
      emit(out, doc, true);
      return kOk;
    }
    if (*dim) {
      const FiniteSpace s = json_io::space_from_json(load(file));
      const auto d = covering_dimension(s, max_opens);
      json doc = {{"dim", d.dim},
                  {"covers_examined", d.covers_examined},
                  {"worst_cover", json_io::cover_to_json(s, d.worst_cover)},
                  {"refinement", json_io::cover_to_json(s, d.refinement)}};
      emit(out, doc, as_json);
      return kOk;
    }
    if (*spec) {
      const SpecSpace sp = *zn ? spec_zn(modulus) : json_io::spec_from_json(load(file));
      const auto rep = check_theorem8(sp);
      json doc = {{"primes", sp.space.labels()},
                  {"maximal", json_io::labelled_set_json(sp.space, sp.maximal)},
                  {"ir_cat", rep.category.size()},
                  {"matches_maximal_count", rep.holds},
                  {"cover", json_io::cover_to_json(sp.space, rep.category.sets)}};
      if (!out_path.empty()) {
        std::ofstream file_out(out_path);
        if (!file_out) throw Error(Errc::ParseError, "cannot write " + out_path);
        file_out << json_io::space_to_json(sp.space).dump(2) << "\n";
      }
      emit(out, doc, as_json);
      return kOk;
    }
    if (*interval) {
      json doc;
      if (*dist) {
        const QRational x = QRational::parse(x_text), y = QRational::parse(y_text);
        doc = {{"x", x.to_string()}, {"y", y.to_string()}, {"d", d_ir(x, y).to_string()}};
      } else if (*ball_cmd) {
        const auto b = ball(QRational::parse(x_text), QRational::parse(eps_text));
        doc = {{"ball", b.to_string()}, {"upper", b.upper.to_string()}, {"upper_closed", b.upper_closed},
               {"clipped", b.clipped}};
      } else {
        std::vector<QRational> values;
        for (const auto& v : split(values_text, ',')) values.push_back(QRational::parse(v));
        const auto rep = finite_subset_compactness(values);
        doc = {{"compact", rep.compact}, {"biggest", rep.biggest ? json(rep.biggest->to_string()) : json(nullptr)}};
      }
      emit(out, doc, as_json);
      return kOk;
    }
    if (*grid) {
      const auto pts = json_io::grid_from_json(load(file));
      const FiniteSpace s = grid_subspace(pts);
      const PointSet c = ir_co(s);
      json co_points = json::array();
      for (PointId p : c) co_points.push_back(pts[p].to_string());
      const auto top = greatest_grid_point(pts);
      json doc = {{"points", pts.size()},
                  {"greatest", top ? json(pts[*top].to_string()) : json(nullptr)},
                  {"ir_co", co_points},
                  {"ir_contractible", !c.empty()}};
      emit(out, doc, as_json);
      return kOk;
    }
    if (*verify_cmd) {
      vc.map_budget = map_budget();
      std::vector<verify::ClaimId> claims;
      for (const auto& name : split(claims_text, ',')) {
        if (name != "all") claims.push_back(verify::parse_claim(name));
      }
      if (claims.empty()) claims = verify::all_claims();
      const auto reports = verify::run_suite(vc, claims);
      const json doc = verify::report_json(reports, vc, timings);
      if (!out_path.empty()) {
        std::ofstream file_out(out_path);
        if (!file_out) throw Error(Errc::ParseError, "cannot write " + out_path);
        file_out << doc.dump(2) << "\n";
      }
      if (as_json) {
        out << doc.dump(2) << "\n";
      } else {
        out << verify::report_table(reports);
      }
      return verify::unexpected_failures(reports).empty() ? kOk : kNegative;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace irtopo::cli
