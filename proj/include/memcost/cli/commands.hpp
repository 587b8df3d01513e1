#pragma once

// Command-line front end. run() parses argv, dispatches to one command and
// returns the process exit status: 0 success, 1 domain or validation error
// (or a failed verification), 2 usage error.

#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "memcost/cli/cost_spec.hpp"
#include "memcost/cli/output_record.hpp"
#include "memcost/constituent_calculus.hpp"
#include "memcost/cost_core.hpp"
#include "memcost/mla_oracle.hpp"
#include "memcost/permutation_space.hpp"
#include "memcost/stats.hpp"

namespace memcost::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Space-separated positions, e.g. "2 3".
inline std::string format_positions(const PositionSet& positions) {
  std::string out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(positions[i]);
  }
  return out;
}

inline Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw UsageError("unknown format '" + text + "' (expected csv or json)");
}

inline WordOrder parse_order_arg(const std::string& text) {
  const auto order = parse_word_order(text);
  if (!order) throw UsageError("unknown word order '" + text + "'");
  return *order;
}

inline Side parse_side_arg(const std::string& text) {
  if (text == "left") return Side::Left;
  if (text == "right") return Side::Right;
  throw UsageError("unknown side '" + text + "' (expected left or right)");
}

template <class T>
T require_option(const std::optional<T>& value, std::string_view flag, std::string_view command) {
  if (!value) throw UsageError(std::string(command) + " requires " + std::string(flag));
  return *value;
}

/// "3" (point mass) or "len:p,len:p,...".
inline LengthDistribution parse_distribution(const std::string& text) {
  if (text.find(':') == std::string::npos) {
    const double v = parse_real(text, "distribution '" + text + "'");
    if (v != static_cast<int>(v)) throw UsageError("distribution length '" + text + "' is not an integer");
    return LengthDistribution::point(static_cast<int>(v));
  }
  std::vector<std::pair<int, double>> support;
  for (auto item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2)
      throw UsageError("distribution entry '" + std::string(item) + "' is not len:p");
    const double len = parse_real(parts[0], "distribution '" + text + "'");
    if (len != static_cast<int>(len))
      throw UsageError("distribution length '" + std::string(parts[0]) + "' is not an integer");
    support.emplace_back(static_cast<int>(len), parse_real(parts[1], "distribution '" + text + "'"));
  }
  return LengthDistribution(std::move(support));
}

inline InternalCosts parse_internal(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3)
    throw UsageError("internal costs '" + text + "' must be three comma-separated values");
  const std::string ctx = "internal costs '" + text + "'";
  return InternalCosts(parse_real(parts[0], ctx), parse_real(parts[1], ctx), parse_real(parts[2], ctx));
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

inline OutputRecord cmd_landscape(int n, const CostFunction& g) {
  const Landscape land = landscape(n, g);
  OutputRecord rec({"l", "cost", "is_minimum", "is_maximum"});
  for (int l = 1; l <= n + 1; ++l) {
    const bool is_min = std::find(land.minima.begin(), land.minima.end(), l) != land.minima.end();
    const bool is_max = std::find(land.maxima.begin(), land.maxima.end(), l) != land.maxima.end();
    rec.add_row({std::int64_t{l}, land.cost_at(l), is_min, is_max});
  }
  return rec;
}

inline constexpr int kMaxVerifyDependents = 8;

struct VerifyReport {
  OutputRecord record{{"n", "analytic_minima", "oracle_minima", "analytic_maxima",
                       "oracle_maxima", "analytic_min_cost", "oracle_min_cost",
                       "analytic_max_cost", "oracle_max_cost", "status"}};
  int mismatches = 0;
};

/// Analytic extrema against full enumeration of star(n) for 2 <= n <= n_max.
inline VerifyReport cmd_verify(int n_max, const CostFunction& g) {
  if (n_max < 2 || n_max > kMaxVerifyDependents)
    throw std::domain_error("verify needs 2 <= n-max <= " + std::to_string(kMaxVerifyDependents) +
                            ", got " + std::to_string(n_max));
  VerifyReport report;
  for (int n = 2; n <= n_max; ++n) {
    const Landscape land = landscape(n, g);
    const ExtremesResult oracle = enumerate_extremes(TreeInstance::star(n), g);
    const bool ok = land.minima == oracle.root_positions_at_min &&
                    land.maxima == oracle.root_positions_at_max &&
                    std::abs(land.min_cost() - oracle.min_cost) <= kCostTolerance &&
                    std::abs(land.max_cost() - oracle.max_cost) <= kCostTolerance;
    if (!ok) ++report.mismatches;
    report.record.add_row({std::int64_t{n}, format_positions(land.minima),
                           format_positions(oracle.root_positions_at_min),
                           format_positions(land.maxima),
                           format_positions(oracle.root_positions_at_max), land.min_cost(),
                           oracle.min_cost, land.max_cost(), oracle.max_cost,
                           std::string(ok ? "pass" : "FAIL")});
  }
  return report;
}

inline OutputRecord cmd_ring() {
  OutputRecord rec({"edge", "source", "target", "source_clockwise_distance",
                    "source_ring_distance"});
  std::int64_t index = 1;
  for (const auto& [a, b] : ring_edges()) {
    rec.add_row({index++, std::string(to_string(a)), std::string(to_string(b)),
                 std::int64_t{clockwise_distance_from_sov(a)},
                 std::int64_t{ring_distance(WordOrder::SOV, a)}});
  }
  return rec;
}

/// Counts ordered by clockwise distance from SOV, with the correlation
/// statistics repeated on each row.
inline OutputRecord cmd_correlate(const FrequencyTable& table) {
  table.require_complete();
  std::vector<double> xs;
  std::vector<double> ys;
  for (WordOrder w : clockwise_chain()) {
    xs.push_back(clockwise_distance_from_sov(w));
    ys.push_back(static_cast<double>(table.count(w)));
  }
  const PairedSample sample(xs, ys);
  const auto rho = spearman_rho(sample);
  Cell exact_p;
  if (!has_ties(ys)) exact_p = spearman_exact_pvalue(sample);
  Cell r, t, p;
  if (const auto pr = pearson_r(sample)) {
    const PearsonTest test = pearson_test(sample);
    r = test.r;
    p = test.p_value;
    if (!test.limiting) t = test.t;
  }

  OutputRecord rec({"order", "clockwise_distance", "ring_distance", "count", "spearman_rho",
                    "spearman_exact_p", "pearson_r", "pearson_t", "pearson_p"});
  for (WordOrder w : clockwise_chain()) {
    rec.add_row({std::string(to_string(w)), std::int64_t{clockwise_distance_from_sov(w)},
                 std::int64_t{ring_distance(WordOrder::SOV, w)},
                 static_cast<std::int64_t>(table.count(w)), rho ? Cell{*rho} : Cell{},
                 exact_p, r, t, p});
  }
  return rec;
}

inline OutputRecord cmd_summary(const FrequencyTable& table) {
  const VerbPlacementSummary summary = verb_placement_summary(table);
  OutputRecord rec({"placement", "count", "percentage"});
  for (const auto& row : summary.rows)
    rec.add_row({std::int64_t{row.placement}, static_cast<std::int64_t>(row.count),
                 row.percentage ? Cell{format_percentage(*row.percentage)}
                                : Cell{std::string("no data")}});
  rec.add_row({std::string("total"), static_cast<std::int64_t>(summary.total), Cell{}});
  return rec;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Head placement cost landscapes, word-order ring statistics and "
               "constituent dependency lengths"};
  app.name("memcost");
  app.require_subcommand(1);

  std::string format_text = "csv";
  std::string cost_text = "identity";

  auto* landscape_cmd = app.add_subcommand("landscape", "Total cost D_l for every head position");
  std::optional<int> land_n;
  landscape_cmd->add_option("--n", land_n, "Number of dependents (>= 2)");
  landscape_cmd->add_option("--cost", cost_text, "Cost spec");
  landscape_cmd->add_option("--format", format_text, "csv or json");

  auto* verify_cmd = app.add_subcommand("verify", "Check analytic extrema against enumeration");
  std::optional<int> verify_n_max;
  verify_cmd->add_option("--n-max", verify_n_max, "Largest number of dependents (2..8)");
  verify_cmd->add_option("--cost", cost_text, "Cost spec");
  verify_cmd->add_option("--format", format_text, "csv or json");

  auto* ring_cmd = app.add_subcommand("ring", "Edges of the adjacent-swap ring of S/V/O orders");
  ring_cmd->add_option("--format", format_text, "csv or json");

  std::optional<std::string> data_path;
  auto* correlate_cmd =
      app.add_subcommand("correlate", "Language counts against clockwise distance from SOV");
  correlate_cmd->add_option("--data", data_path, "Frequency dataset (ORDER<TAB>COUNT)");
  correlate_cmd->add_option("--format", format_text, "csv or json");

  auto* summary_cmd = app.add_subcommand("summary", "Verb placement frequencies");
  summary_cmd->add_option("--data", data_path, "Frequency dataset (ORDER<TAB>COUNT)");
  summary_cmd->add_option("--format", format_text, "csv or json");

  auto* appendix_cmd = app.add_subcommand("appendix", "Constituent dependency-length calculus");
  appendix_cmd->require_subcommand(1);
  std::optional<std::string> order_text, side_text, internal_left_text, internal_right_text;
  std::optional<std::string> dist_s_text, dist_o_text, dist_v_text;
  std::optional<int> s_len, v_len, o_len, lv, ro, lo, rs;

  auto* delta_cmd = appendix_cmd->add_subcommand("delta", "Top-level dependency length");
  delta_cmd->add_option("--order", order_text, "SOV or SVO");
  delta_cmd->add_option("--side", side_text, "left or right; omit for explicit head splits");
  delta_cmd->add_option("--s", s_len, "|S|");
  delta_cmd->add_option("--v", v_len, "|V|");
  delta_cmd->add_option("--o", o_len, "|O|");
  delta_cmd->add_option("--lv", lv, "L_V");
  delta_cmd->add_option("--ro", ro, "R_O");
  delta_cmd->add_option("--lo", lo, "L_O");
  delta_cmd->add_option("--rs", rs, "R_S");
  delta_cmd->add_option("--format", format_text, "csv or json");

  auto* prefer_cmd = appendix_cmd->add_subcommand("prefer", "Preferred side of nominal dependents");
  prefer_cmd->add_option("--order", order_text, "SOV or SVO");
  prefer_cmd->add_option("--s", s_len, "|S|");
  prefer_cmd->add_option("--v", v_len, "|V| (default 1)");
  prefer_cmd->add_option("--o", o_len, "|O|");
  prefer_cmd->add_option("--format", format_text, "csv or json");

  auto* regress_cmd = appendix_cmd->add_subcommand("regress", "Cost of regressing from SVO to SOV");
  regress_cmd->add_option("--s", s_len, "|S|");
  regress_cmd->add_option("--v", v_len, "|V| (default 1)");
  regress_cmd->add_option("--o", o_len, "|O|");
  regress_cmd->add_option("--lv", lv, "L_V shared by both variants");
  regress_cmd->add_option("--internal-left", internal_left_text, "omega_S,omega_V,omega_O (left)");
  regress_cmd->add_option("--internal-right", internal_right_text,
                          "omega_S,omega_V,omega_O (right)");
  regress_cmd->add_option("--format", format_text, "csv or json");

  auto* expect_cmd = appendix_cmd->add_subcommand("expect", "Expected SVO delta per side");
  expect_cmd->add_option("--dist-s", dist_s_text, "|S| distribution: N or len:p,...");
  expect_cmd->add_option("--dist-o", dist_o_text, "|O| distribution");
  expect_cmd->add_option("--dist-v", dist_v_text, "|V| distribution");
  expect_cmd->add_option("--format", format_text, "csv or json");

  std::vector<std::string> argv_tail(args.rbegin(), args.rend());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Format format = parse_format(format_text);
    if (landscape_cmd->parsed()) {
      const int n = require_option(land_n, "--n", "landscape");
      cmd_landscape(n, parse_cost_spec(cost_text)).write(out, format);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const int n_max = require_option(verify_n_max, "--n-max", "verify");
      const VerifyReport report = cmd_verify(n_max, parse_cost_spec(cost_text));
      report.record.write(out, format);
      if (report.mismatches > 0) {
        err << "verify: " << report.mismatches << " mismatch(es)\n";
        return kExitDomain;
      }
      return kExitOk;
    }
    if (ring_cmd->parsed()) {
      cmd_ring().write(out, format);
      return kExitOk;
    }
    if (correlate_cmd->parsed()) {
      const auto path = require_option(data_path, "--data", "correlate");
      cmd_correlate(load_frequency_table(path)).write(out, format);
      return kExitOk;
    }
    if (summary_cmd->parsed()) {
      const auto path = require_option(data_path, "--data", "summary");
      cmd_summary(load_frequency_table(path)).write(out, format);
      return kExitOk;
    }
    if (delta_cmd->parsed()) {
      const WordOrder order = parse_order_arg(require_option(order_text, "--order", "delta"));
      if (order != WordOrder::SOV && order != WordOrder::SVO)
        throw UsageError("delta supports --order SOV or SVO");
      OutputRecord rec({"order", "side", "delta"});
      std::int64_t delta = 0;
      std::string side_label = "explicit";
      if (side_text) {
        const Side side = parse_side_arg(*side_text);
        side_label = std::string(to_string(side));
        if (order == WordOrder::SOV) {
          const int l_v = lv.value_or(0);
          const int o = require_option(o_len, "--o", "delta");
          delta = side == Side::Left
                      ? delta_sov_left(l_v, o)
                      : delta_sov_right(l_v, o, require_option(s_len, "--s", "delta"));
        } else {
          const int v = require_option(v_len, "--v", "delta");
          delta = side == Side::Left ? delta_svo_left(v, require_option(o_len, "--o", "delta"))
                                     : delta_svo_right(v, require_option(s_len, "--s", "delta"));
        }
      } else if (order == WordOrder::SOV) {
        delta = delta_sov(require_option(lv, "--lv", "delta"), require_option(ro, "--ro", "delta"),
                          require_option(lo, "--lo", "delta"), require_option(rs, "--rs", "delta"));
      } else {
        delta = delta_svo(require_option(rs, "--rs", "delta"), require_option(v_len, "--v", "delta"),
                          require_option(lo, "--lo", "delta"));
      }
      rec.add_row({std::string(to_string(order)), side_label, delta});
      rec.write(out, format);
      return kExitOk;
    }
    if (prefer_cmd->parsed()) {
      const WordOrder order = parse_order_arg(require_option(order_text, "--order", "prefer"));
      if (order != WordOrder::SOV && order != WordOrder::SVO)
        throw UsageError("prefer supports --order SOV or SVO");
      const ConstituentLengths len(require_option(s_len, "--s", "prefer"), v_len.value_or(1),
                                   require_option(o_len, "--o", "prefer"));
      OutputRecord rec({"order", "s", "v", "o", "preferred"});
      rec.add_row({std::string(to_string(order)), std::int64_t{len.s}, std::int64_t{len.v},
                   std::int64_t{len.o}, std::string(to_string(preferred_side(order, len)))});
      rec.write(out, format);
      return kExitOk;
    }
    if (regress_cmd->parsed()) {
      const ConstituentLengths len(require_option(s_len, "--s", "regress"), v_len.value_or(1),
                                   require_option(o_len, "--o", "regress"));
      const InternalCosts left = internal_left_text ? parse_internal(*internal_left_text) : InternalCosts{};
      const InternalCosts right =
          internal_right_text ? parse_internal(*internal_right_text) : left;
      const RegressionComparison cmp =
          regression_comparison(left, right, len, require_option(lv, "--lv", "regress"));
      if (cmp.warning) err << "warning: " << *cmp.warning << '\n';
      OutputRecord rec({"omega_sov_from_left", "omega_sov_from_right", "gap", "omega_gap",
                        "harder_from", "conservation"});
      rec.add_row({cmp.omega_sov_from_left, cmp.omega_sov_from_right, cmp.delta_gap,
                   cmp.omega_sov_from_right - cmp.omega_sov_from_left,
                   std::string(to_string(cmp.harder_from)), cmp.conservation_holds});
      rec.write(out, format);
      return kExitOk;
    }
    if (expect_cmd->parsed()) {
      const auto ds = parse_distribution(require_option(dist_s_text, "--dist-s", "expect"));
      const auto dO = parse_distribution(require_option(dist_o_text, "--dist-o", "expect"));
      const auto dv = parse_distribution(require_option(dist_v_text, "--dist-v", "expect"));
      OutputRecord rec({"side", "expected_delta"});
      rec.add_row({std::string("left"), expected_delta_svo(ds, dO, dv, Side::Left)});
      rec.add_row({std::string("right"), expected_delta_svo(ds, dO, dv, Side::Right)});
      rec.write(out, format);
      return kExitOk;
    }
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace memcost::cli
