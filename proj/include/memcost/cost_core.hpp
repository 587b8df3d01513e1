#pragma once

/// \file cost_core.hpp
/// \brief Total online-memory cost of a head placed among its n dependents
///        (a star tree laid out on a line) and the shape of that cost as a
///        function of the head position.
///
/// Positions are 1-based: a sequence of n + 1 elements has positions
/// 1 ... n + 1 and the head sits at position l. Every dependent at
/// distance d from the head contributes g(d), so
///
///   D_l = sum_{d=1}^{l-1} g(d) + sum_{d=1}^{n+1-l} g(d).
///
/// For any strictly increasing g and n >= 2 the minima sit at the center
/// and the two maxima at the ends; the landscape is quasi-convex.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "memcost/cost_function.hpp"

namespace memcost {

/// Sorted set of 1-based head positions.
using PositionSet = std::vector<int>;

/// n dependents and a head at position l in [1, n + 1].
class StarInstance {
 public:
  StarInstance(int dependents, int head_position)
      : n_(dependents), l_(head_position) {
    if (n_ < 1)
      throw std::domain_error("a star needs at least one dependent, got n = " +
                              std::to_string(n_));
    if (l_ < 1 || l_ > n_ + 1)
      throw std::domain_error("head position " + std::to_string(l_) +
                              " outside [1, " + std::to_string(n_ + 1) + "]");
  }

  int dependents() const noexcept { return n_; }
  int head_position() const noexcept { return l_; }

 private:
  int n_;
  int l_;
};

namespace detail {

inline void require_placement_size(int n) {
  if (n < 2)
    throw std::domain_error("head placement analysis needs n >= 2 dependents, got n = " +
                            std::to_string(n));
}

template <CostLike G>
void require_cost_domain(const G& g, int n) {
  if (g.max_length() < n)
    throw std::domain_error("cost function defined up to d = " +
                            std::to_string(g.max_length()) + " but n = " +
                            std::to_string(n) + " dependents need d up to " +
                            std::to_string(n));
}

// sum_{d=1}^{k} g(d); empty for k = 0, so g(0) is never touched.
template <CostLike G>
double cumulative_cost(const G& g, int k) {
  double sum = 0.0;
  for (int d = 1; d <= k; ++d) sum += static_cast<double>(g(d));
  return sum;
}

}  // namespace detail

/// D_l for a head at position l among n dependents.
template <CostLike G>
double total_cost(int n, int l, const G& g) {
  const StarInstance star(n, l);
  detail::require_cost_domain(g, n);
  return detail::cumulative_cost(g, star.head_position() - 1) +
         detail::cumulative_cost(g, n + 1 - star.head_position());
}

/// Closed form of D_l for g(d) = d: l^2 - (n + 2) l + (n + 1)(n + 2) / 2.
inline std::int64_t total_cost_identity(int n, int l) {
  const StarInstance star(n, l);
  const std::int64_t nn = n;
  const std::int64_t ll = star.head_position();
  return ll * ll - (nn + 2) * ll + (nn + 1) * (nn + 2) / 2;
}

/// Delta_l = D_{l+1} - D_l = g(l) - g(n + 1 - l), for l in [1, n].
template <CostLike G>
double discrete_derivative(int n, int l, const G& g) {
  if (n < 1)
    throw std::domain_error("discrete derivative needs n >= 1, got n = " +
                            std::to_string(n));
  if (l < 1 || l > n)
    throw std::domain_error("discrete derivative defined for l in [1, " +
                            std::to_string(n) + "], got l = " + std::to_string(l));
  detail::require_cost_domain(g, n);
  return static_cast<double>(g(l)) - static_cast<double>(g(n + 1 - l));
}

/// (D_1, ..., D_{n+1}) without any validation of g beyond its domain.
/// Index i holds the cost of head position i + 1.
template <CostLike G>
std::vector<double> cost_vector(int n, const G& g) {
  if (n < 1)
    throw std::domain_error("cost vector needs n >= 1, got n = " + std::to_string(n));
  detail::require_cost_domain(g, n);
  std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 0.0);
  for (int d = 1; d <= n; ++d)
    prefix[static_cast<std::size_t>(d)] =
        prefix[static_cast<std::size_t>(d - 1)] + static_cast<double>(g(d));
  std::vector<double> costs(static_cast<std::size_t>(n) + 1);
  for (int l = 1; l <= n + 1; ++l)
    costs[static_cast<std::size_t>(l - 1)] =
        prefix[static_cast<std::size_t>(l - 1)] + prefix[static_cast<std::size_t>(n + 1 - l)];
  return costs;
}

/// Positions l* (n even) or {l*, l* + 1} (n odd), l* = ceil((n + 1) / 2).
/// The same for every strictly increasing g.
inline PositionSet optimal_placements(int n) {
  detail::require_placement_size(n);
  const int center = (n + 2) / 2;  // ceil((n + 1) / 2)
  if (n % 2 == 0) return {center};
  return {center, center + 1};
}

inline PositionSet worst_placements(int n) {
  detail::require_placement_size(n);
  return {1, n + 1};
}

template <CostLike G>
PositionSet optimal_placements(int n, const G& g) {
  detail::require_cost_domain(g, n);
  return optimal_placements(n);
}

template <CostLike G>
PositionSet worst_placements(int n, const G& g) {
  detail::require_cost_domain(g, n);
  return worst_placements(n);
}

/// 1-based positions whose cost is within kCostTolerance of the minimum.
inline PositionSet argmin_positions(const std::vector<double>& costs) {
  PositionSet out;
  if (costs.empty()) return out;
  const double best = *std::min_element(costs.begin(), costs.end());
  for (std::size_t i = 0; i < costs.size(); ++i)
    if (costs[i] <= best + kCostTolerance) out.push_back(static_cast<int>(i) + 1);
  return out;
}

inline PositionSet argmax_positions(const std::vector<double>& costs) {
  PositionSet out;
  if (costs.empty()) return out;
  const double worst = *std::max_element(costs.begin(), costs.end());
  for (std::size_t i = 0; i < costs.size(); ++i)
    if (costs[i] >= worst - kCostTolerance) out.push_back(static_cast<int>(i) + 1);
  return out;
}

/// Head-placement cost landscape for n dependents.
struct Landscape {
  int n = 0;
  std::vector<double> costs;  // costs[l - 1] = D_l
  PositionSet minima;
  PositionSet maxima;

  double cost_at(int l) const {
    if (l < 1 || l > n + 1)
      throw std::domain_error("landscape position " + std::to_string(l) +
                              " outside [1, " + std::to_string(n + 1) + "]");
    return costs[static_cast<std::size_t>(l - 1)];
  }
  double min_cost() const { return cost_at(minima.front()); }
  double max_cost() const { return cost_at(maxima.front()); }
};

/// Builds D_1..D_{n+1} and the analytic extrema. Throws std::logic_error if
/// the numeric extrema of the cost vector disagree with the analytic sets,
/// which cannot happen for a validated CostFunction.
inline Landscape landscape(int n, const CostFunction& g) {
  detail::require_placement_size(n);
  Landscape out;
  out.n = n;
  out.costs = cost_vector(n, g);
  out.minima = optimal_placements(n);
  out.maxima = worst_placements(n);
  if (argmin_positions(out.costs) != out.minima ||
      argmax_positions(out.costs) != out.maxima)
    throw std::logic_error("landscape extrema for " + g.describe() + " at n = " +
                           std::to_string(n) + " disagree with the center/end rule");
  return out;
}

/// Extremes of D_l for g(d) = d over a star of N = n + 1 vertices:
/// max N(N-1)/2 with the hub at an end, min (N-1)(N+1)/4 for odd N and
/// N^2/4 for even N with the hub at the center.
struct StarExtremes {
  std::int64_t max;
  std::int64_t min;
  friend bool operator==(const StarExtremes&, const StarExtremes&) = default;
};

inline StarExtremes star_extremes_identity(int vertices) {
  if (vertices < 3)
    throw std::domain_error("star extremes need N >= 3 vertices, got N = " +
                            std::to_string(vertices));
  const std::int64_t N = vertices;
  const std::int64_t max = N * (N - 1) / 2;
  const std::int64_t min = (N % 2 == 1) ? (N - 1) * (N + 1) / 4 : N * N / 4;
  return {max, min};
}

/// True iff costs[l2] <= max(costs[l1], costs[l3]) for every l1 <= l2 <= l3.
/// Exhaustive O(n^3) check.
inline bool check_quasiconvex(const std::vector<double>& costs) {
  const std::size_t m = costs.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b)
      for (std::size_t c = b; c < m; ++c)
        if (costs[b] > std::max(costs[a], costs[c]) + kCostTolerance) return false;
  return true;
}

/// Linear-time equivalent of check_quasiconvex: the sequence never rises
/// and then falls again.
inline bool check_quasiconvex_valley(const std::vector<double>& costs) {
  bool rising = false;
  for (std::size_t i = 1; i < costs.size(); ++i) {
    if (costs[i] > costs[i - 1] + kCostTolerance) {
      rising = true;
    } else if (rising && costs[i] < costs[i - 1] - kCostTolerance) {
      return false;
    }
  }
  return true;
}

}  // namespace memcost
