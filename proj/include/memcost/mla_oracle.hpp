#pragma once

/// \file mla_oracle.hpp
/// \brief Exhaustive linear arrangements of small trees. Used to check the
///        analytic head-placement results by brute force.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "memcost/cost_core.hpp"
#include "memcost/cost_function.hpp"

namespace memcost {

using Edge = std::pair<int, int>;

/// Undirected tree on vertices 0 ... N-1.
class TreeInstance {
 public:
  TreeInstance(int vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    validate();
  }

  /// Hub 0 joined to leaves 1 ... n.
  static TreeInstance star(int dependents) {
    if (dependents < 1)
      throw std::domain_error("star needs at least one leaf, got " + std::to_string(dependents));
    std::vector<Edge> edges;
    for (int v = 1; v <= dependents; ++v) edges.emplace_back(0, v);
    return TreeInstance(dependents + 1, std::move(edges));
  }

  /// 0 - 1 - ... - (N-1).
  static TreeInstance path(int vertex_count) {
    std::vector<Edge> edges;
    for (int v = 1; v < vertex_count; ++v) edges.emplace_back(v - 1, v);
    return TreeInstance(vertex_count, std::move(edges));
  }

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

 private:
  void validate() const {
    if (vertex_count_ < 2)
      throw std::invalid_argument("tree needs at least 2 vertices, got " +
                                  std::to_string(vertex_count_));
    if (edges_.size() != static_cast<std::size_t>(vertex_count_ - 1))
      throw std::invalid_argument("tree on " + std::to_string(vertex_count_) +
                                  " vertices needs " + std::to_string(vertex_count_ - 1) +
                                  " edges, got " + std::to_string(edges_.size()));
    // union-find: N-1 edges and no cycle means connected
    std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
      }
      return v;
    };
    for (const auto& [u, v] : edges_) {
      if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
        throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") references a vertex outside [0, " +
                                    std::to_string(vertex_count_ - 1) + "]");
      const int ru = find(u);
      const int rv = find(v);
      if (ru == rv)
        throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") closes a cycle or is a self-loop");
      parent[static_cast<std::size_t>(ru)] = rv;
    }
  }

  int vertex_count_;
  std::vector<Edge> edges_;
};

/// Bijection vertex -> position in [1, N].
class Arrangement {
 public:
  explicit Arrangement(std::vector<int> positions) : positions_(std::move(positions)) {
    const int n = static_cast<int>(positions_.size());
    std::vector<bool> seen(positions_.size(), false);
    for (int p : positions_) {
      if (p < 1 || p > n || seen[static_cast<std::size_t>(p - 1)])
        throw std::invalid_argument("arrangement is not a bijection onto [1, " +
                                    std::to_string(n) + "]");
      seen[static_cast<std::size_t>(p - 1)] = true;
    }
  }

  /// Vertices listed left to right; order[i] is placed at position i + 1.
  static Arrangement from_order(const std::vector<int>& order) {
    std::vector<int> positions(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int v = order[i];
      if (v < 0 || static_cast<std::size_t>(v) >= order.size())
        throw std::invalid_argument("order lists vertex " + std::to_string(v) +
                                    " outside the vertex range");
      positions[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
    }
    return Arrangement(std::move(positions));
  }

  int size() const noexcept { return static_cast<int>(positions_.size()); }
  int position(int vertex) const { return positions_.at(static_cast<std::size_t>(vertex)); }
  const std::vector<int>& positions() const noexcept { return positions_; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::vector<int> positions_;
};

/// Sum over edges of g(|pos(u) - pos(v)|).
template <CostLike G>
double arrangement_cost(const TreeInstance& t, const Arrangement& a, const G& g) {
  if (a.size() != t.vertex_count())
    throw std::invalid_argument("arrangement has " + std::to_string(a.size()) +
                                " positions for a tree of " +
                                std::to_string(t.vertex_count()) + " vertices");
  if (g.max_length() < t.vertex_count() - 1)
    throw std::domain_error("cost function defined up to d = " +
                            std::to_string(g.max_length()) + ", arrangement needs d up to " +
                            std::to_string(t.vertex_count() - 1));
  double sum = 0.0;
  for (const auto& [u, v] : t.edges()) sum += static_cast<double>(g(std::abs(a.position(u) - a.position(v))));
  return sum;
}

/// Edge pairs whose position intervals strictly interleave. Pairs sharing
/// an endpoint never count.
inline std::int64_t crossing_count(const TreeInstance& t, const Arrangement& a) {
  if (a.size() != t.vertex_count())
    throw std::invalid_argument("arrangement size does not match the tree");
  std::vector<std::pair<int, int>> spans;
  spans.reserve(t.edges().size());
  for (const auto& [u, v] : t.edges()) {
    const int pu = a.position(u);
    const int pv = a.position(v);
    spans.emplace_back(std::min(pu, pv), std::max(pu, pv));
  }
  std::int64_t crossings = 0;
  for (std::size_t i = 0; i < spans.size(); ++i)
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      const auto [a1, b1] = spans[i];
      const auto [a2, b2] = spans[j];
      if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1)) ++crossings;
    }
  return crossings;
}

inline constexpr int kMaxEnumerationVertices = 9;
inline constexpr std::size_t kMaxStoredArrangements = 10000;

struct ExtremesResult {
  double min_cost = 0.0;
  std::vector<Arrangement> minimizers;
  bool minimizers_truncated = false;
  double max_cost = 0.0;
  std::vector<Arrangement> maximizers;
  bool maximizers_truncated = false;
  // Positions taken by vertex 0 (the hub of TreeInstance::star) across all
  // minimizing / maximizing arrangements; never truncated.
  PositionSet root_positions_at_min;
  PositionSet root_positions_at_max;
  std::uint64_t arrangements_visited = 0;
};

namespace detail {

struct ExtremeTracker {
  double best = 0.0;
  bool has = false;
  std::vector<Arrangement> kept;
  bool truncated = false;
  std::vector<bool> root_positions;

  // sign = +1 tracks the minimum, -1 the maximum.
  void offer(double cost, int sign, const std::vector<int>& positions) {
    const double key = sign * cost;
    const double ref = sign * best;
    if (!has || key < ref - kCostTolerance) {
      has = true;
      best = cost;
      kept.clear();
      truncated = false;
      std::fill(root_positions.begin(), root_positions.end(), false);
    } else if (key > ref + kCostTolerance) {
      return;
    }
    root_positions[static_cast<std::size_t>(positions[0] - 1)] = true;
    if (kept.size() < kMaxStoredArrangements) {
      kept.emplace_back(positions);
    } else {
      truncated = true;
    }
  }

  PositionSet positions_set() const {
    PositionSet out;
    for (std::size_t i = 0; i < root_positions.size(); ++i)
      if (root_positions[i]) out.push_back(static_cast<int>(i) + 1);
    return out;
  }
};

}  // namespace detail

/// Exact minimum and maximum of arrangement_cost over all N! arrangements.
/// Refuses trees with more than kMaxEnumerationVertices vertices.
template <CostLike G>
ExtremesResult enumerate_extremes(const TreeInstance& t, const G& g) {
  const int n = t.vertex_count();
  if (n > kMaxEnumerationVertices)
    throw std::domain_error("exhaustive enumeration refused for N = " + std::to_string(n) +
                            " > " + std::to_string(kMaxEnumerationVertices) + " vertices");
  if (g.max_length() < n - 1)
    throw std::domain_error("cost function domain too small for this tree");

  detail::ExtremeTracker lo;
  detail::ExtremeTracker hi;
  lo.root_positions.assign(static_cast<std::size_t>(n), false);
  hi.root_positions.assign(static_cast<std::size_t>(n), false);

  std::vector<int> positions(static_cast<std::size_t>(n));
  std::iota(positions.begin(), positions.end(), 1);
  std::uint64_t visited = 0;
  do {
    double cost = 0.0;
    for (const auto& [u, v] : t.edges())
      cost += static_cast<double>(g(std::abs(positions[static_cast<std::size_t>(u)] -
                                             positions[static_cast<std::size_t>(v)])));
    lo.offer(cost, +1, positions);
    hi.offer(cost, -1, positions);
    ++visited;
  } while (std::next_permutation(positions.begin(), positions.end()));

  ExtremesResult out;
  out.min_cost = lo.best;
  out.minimizers = std::move(lo.kept);
  out.minimizers_truncated = lo.truncated;
  out.root_positions_at_min = lo.positions_set();
  out.max_cost = hi.best;
  out.maximizers = std::move(hi.kept);
  out.maximizers_truncated = hi.truncated;
  out.root_positions_at_max = hi.positions_set();
  out.arrangements_visited = visited;
  return out;
}

/// Star-only shortcut: a star's cost depends only on where the hub sits, so
/// one arrangement per hub position (leaves filling the rest in order)
/// covers every cost value. Works beyond the N! cap.
struct HubScan {
  std::vector<double> costs;  // costs[p - 1]: hub at position p
  double min_cost = 0.0;
  double max_cost = 0.0;
  PositionSet hub_positions_at_min;
  PositionSet hub_positions_at_max;
};

template <CostLike G>
HubScan enumerate_hub_positions(int dependents, const G& g) {
  const TreeInstance star = TreeInstance::star(dependents);
  const int n = star.vertex_count();
  HubScan out;
  for (int hub = 1; hub <= n; ++hub) {
    std::vector<int> positions(static_cast<std::size_t>(n));
    positions[0] = hub;
    int next = 1;
    for (int leaf = 1; leaf < n; ++leaf) {
      if (next == hub) ++next;
      positions[static_cast<std::size_t>(leaf)] = next++;
    }
    out.costs.push_back(arrangement_cost(star, Arrangement(std::move(positions)), g));
  }
  out.hub_positions_at_min = argmin_positions(out.costs);
  out.hub_positions_at_max = argmax_positions(out.costs);
  out.min_cost = out.costs[static_cast<std::size_t>(out.hub_positions_at_min.front() - 1)];
  out.max_cost = out.costs[static_cast<std::size_t>(out.hub_positions_at_max.front() - 1)];
  return out;
}

}  // namespace memcost
