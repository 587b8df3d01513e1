#pragma once

/// \file permutation_space.hpp
/// \brief The six orderings of subject, verb and object, the ring formed by
///        adjacent swaps, distances on it, and per-order language counts.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace memcost {

/// Declared in clockwise order starting from SOV.
enum class WordOrder { SOV, SVO, VSO, VOS, OVS, OSV };

inline constexpr std::array<WordOrder, 6> kAllWordOrders = {
    WordOrder::SOV, WordOrder::SVO, WordOrder::VSO,
    WordOrder::VOS, WordOrder::OVS, WordOrder::OSV};

inline std::string_view to_string(WordOrder w) {
  switch (w) {
    case WordOrder::SOV: return "SOV";
    case WordOrder::SVO: return "SVO";
    case WordOrder::VSO: return "VSO";
    case WordOrder::VOS: return "VOS";
    case WordOrder::OVS: return "OVS";
    case WordOrder::OSV: return "OSV";
  }
  return "?";
}

inline std::optional<WordOrder> parse_word_order(std::string_view text) {
  for (WordOrder w : kAllWordOrders)
    if (to_string(w) == text) return w;
  return std::nullopt;
}

/// The two orders reachable by swapping one pair of adjacent constituents,
/// in ascending clockwise index.
inline std::array<WordOrder, 2> swap_neighbors(WordOrder w) {
  const std::string_view base = to_string(w);
  std::array<WordOrder, 2> out{};
  for (std::size_t i = 0; i < 2; ++i) {
    std::string s(base);
    std::swap(s[i], s[i + 1]);
    out[i] = *parse_word_order(s);
  }
  if (static_cast<int>(out[1]) < static_cast<int>(out[0])) std::swap(out[0], out[1]);
  return out;
}

/// Shortest number of adjacent swaps between two orders (0 ... 3).
inline int ring_distance(WordOrder from, WordOrder to) {
  std::array<int, 6> dist;
  dist.fill(-1);
  std::queue<WordOrder> frontier;
  dist[static_cast<std::size_t>(from)] = 0;
  frontier.push(from);
  while (!frontier.empty()) {
    const WordOrder w = frontier.front();
    frontier.pop();
    for (WordOrder next : swap_neighbors(w)) {
      auto& d = dist[static_cast<std::size_t>(next)];
      if (d < 0) {
        d = dist[static_cast<std::size_t>(w)] + 1;
        frontier.push(next);
      }
    }
  }
  return dist[static_cast<std::size_t>(to)];
}

/// Index along the chain SOV, SVO, VSO, VOS, OVS, OSV (0 ... 5), i.e. the
/// ring traversed from SOV with SOV -> SVO as the first step.
inline int clockwise_distance_from_sov(WordOrder w) { return static_cast<int>(w); }

/// The clockwise chain rebuilt by walking the ring: start at SOV, step to
/// SVO, then always to the neighbor not just visited.
inline std::array<WordOrder, 6> clockwise_chain() {
  std::array<WordOrder, 6> chain{};
  chain[0] = WordOrder::SOV;
  chain[1] = WordOrder::SVO;
  for (std::size_t i = 2; i < chain.size(); ++i) {
    const auto nb = swap_neighbors(chain[i - 1]);
    chain[i] = nb[0] == chain[i - 2] ? nb[1] : nb[0];
  }
  return chain;
}

/// Undirected edges of the ring listed clockwise from SOV-SVO.
inline std::array<std::pair<WordOrder, WordOrder>, 6> ring_edges() {
  const auto chain = clockwise_chain();
  std::array<std::pair<WordOrder, WordOrder>, 6> edges{};
  for (std::size_t i = 0; i < chain.size(); ++i)
    edges[i] = {chain[i], chain[(i + 1) % chain.size()]};
  return edges;
}

/// Malformed frequency data; carries the 1-based line number when known.
class DatasetError : public std::runtime_error {
 public:
  DatasetError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Number of languages per dominant word order. Orders may be absent.
class FrequencyTable {
 public:
  FrequencyTable() = default;
  explicit FrequencyTable(std::map<WordOrder, std::uint64_t> counts) : counts_(std::move(counts)) {}

  void set(WordOrder w, std::uint64_t count) { counts_[w] = count; }
  bool has(WordOrder w) const { return counts_.count(w) != 0; }
  std::size_t size() const noexcept { return counts_.size(); }

  std::uint64_t count(WordOrder w) const {
    const auto it = counts_.find(w);
    if (it == counts_.end())
      throw DatasetError("no count for word order " + std::string(to_string(w)), 0);
    return it->second;
  }

  /// Throws DatasetError naming the first missing order.
  void require_complete() const {
    for (WordOrder w : kAllWordOrders)
      if (!has(w)) throw DatasetError("missing word order " + std::string(to_string(w)), 0);
  }

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (const auto& [w, c] : counts_) sum += c;
    return sum;
  }

  const std::map<WordOrder, std::uint64_t>& counts() const noexcept { return counts_; }

 private:
  std::map<WordOrder, std::uint64_t> counts_;
};

/// Reads `ORDER<TAB>COUNT` records. Blank lines and lines starting with '#'
/// are skipped. Duplicate orders, unknown orders and bad counts are errors.
inline FrequencyTable parse_frequency_table(std::istream& in) {
  FrequencyTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw DatasetError("expected ORDER<TAB>COUNT", lineno);
    const std::string order_text = line.substr(0, tab);
    const std::string count_text = line.substr(tab + 1);
    const auto order = parse_word_order(order_text);
    if (!order) throw DatasetError("unknown word order '" + order_text + "'", lineno);
    if (table.has(*order)) throw DatasetError("duplicate word order " + order_text, lineno);
    if (count_text.empty() ||
        !std::all_of(count_text.begin(), count_text.end(),
                     [](unsigned char c) { return c >= '0' && c <= '9'; }))
      throw DatasetError("count '" + count_text + "' is not a non-negative integer", lineno);
    std::uint64_t count = 0;
    try {
      count = std::stoull(count_text);
    } catch (const std::out_of_range&) {
      throw DatasetError("count '" + count_text + "' is out of range", lineno);
    }
    table.set(*order, count);
  }
  return table;
}

inline FrequencyTable load_frequency_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open dataset file '" + path + "'", 0);
  return parse_frequency_table(in);
}

/// Verb placement classes: 1 verb-initial (VSO, VOS), 2 verb-central
/// (SVO, OVS), 3 verb-final (SOV, OSV).
struct VerbPlacementRow {
  int placement = 0;
  std::uint64_t count = 0;
  std::optional<double> percentage;  // empty when the table total is zero
};

struct VerbPlacementSummary {
  std::array<VerbPlacementRow, 3> rows;
  std::uint64_t total = 0;
};

inline VerbPlacementSummary verb_placement_summary(const FrequencyTable& f) {
  f.require_complete();
  VerbPlacementSummary out;
  out.rows[0] = {1, f.count(WordOrder::VSO) + f.count(WordOrder::VOS), std::nullopt};
  out.rows[1] = {2, f.count(WordOrder::SVO) + f.count(WordOrder::OVS), std::nullopt};
  out.rows[2] = {3, f.count(WordOrder::SOV) + f.count(WordOrder::OSV), std::nullopt};
  out.total = out.rows[0].count + out.rows[1].count + out.rows[2].count;
  if (out.total > 0)
    for (auto& row : out.rows)
      row.percentage = 100.0 * static_cast<double>(row.count) / static_cast<double>(out.total);
  return out;
}

/// One decimal, halves rounded away from zero ("10.1", "42.0").
inline std::string format_percentage(double value) {
  const double rounded = std::round(value * 10.0) / 10.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", rounded);
  return buf;
}

}  // namespace memcost
