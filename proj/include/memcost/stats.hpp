#pragma once

/// \file stats.hpp
/// \brief Spearman and Pearson correlation with two-sided significance:
///        an exact permutation test for Spearman and the t test for Pearson.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace memcost {

/// Paired observations (xs[i], ys[i]).
class PairedSample {
 public:
  PairedSample(std::vector<double> xs, std::vector<double> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size())
      throw std::invalid_argument("paired sample has " + std::to_string(xs_.size()) +
                                  " xs but " + std::to_string(ys_.size()) + " ys");
  }

  std::size_t size() const noexcept { return xs_.size(); }
  const std::vector<double>& xs() const noexcept { return xs_; }
  const std::vector<double>& ys() const noexcept { return ys_; }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// 1-based ranks; tied values share the average of their ranks.
inline std::vector<double> average_ranks(const std::vector<double>& values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && values[idx[j + 1]] == values[idx[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

inline bool has_ties(const std::vector<double>& values) {
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

namespace detail {

inline std::optional<double> product_moment(const std::vector<double>& xs,
                                            const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

inline void require_pairs(const PairedSample& s, std::size_t minimum) {
  if (s.size() < minimum)
    throw std::domain_error("need at least " + std::to_string(minimum) +
                            " pairs, got " + std::to_string(s.size()));
}

}  // namespace detail

/// Pearson correlation of the rank vectors. Empty when either coordinate
/// has no rank variance.
inline std::optional<double> spearman_rho(const PairedSample& s) {
  detail::require_pairs(s, 2);
  return detail::product_moment(average_ranks(s.xs()), average_ranks(s.ys()));
}

/// Product-moment correlation. Empty when either coordinate is constant.
inline std::optional<double> pearson_r(const PairedSample& s) {
  detail::require_pairs(s, 2);
  return detail::product_moment(s.xs(), s.ys());
}

inline constexpr std::size_t kMaxExactPermutationSize = 8;

struct ExactPValue {
  std::uint64_t extreme_count = 0;  // permutations with |rho| >= |rho observed|
  std::uint64_t permutations = 0;   // n!
  double value() const {
    return static_cast<double>(extreme_count) / static_cast<double>(permutations);
  }
};

/// Two-sided exact permutation test for Spearman's rho. Every one of the
/// n! reorderings of ys is enumerated; without ties
/// rho = 1 - 6 sum d^2 / (n (n^2 - 1)), so |rho| comparisons are done on the
/// integer |n (n^2 - 1) - 6 sum d^2| and are exact.
inline ExactPValue spearman_exact_test(const PairedSample& s) {
  detail::require_pairs(s, 2);
  if (s.size() > kMaxExactPermutationSize)
    throw std::domain_error("exact Spearman test refused for n = " + std::to_string(s.size()) +
                            " > " + std::to_string(kMaxExactPermutationSize));
  if (has_ties(s.xs()) || has_ties(s.ys()))
    throw std::invalid_argument("exact Spearman test does not support tied values");

  const auto n = static_cast<std::int64_t>(s.size());
  std::vector<std::int64_t> rx(s.size());
  std::vector<std::int64_t> ry(s.size());
  {
    const auto ax = average_ranks(s.xs());
    const auto ay = average_ranks(s.ys());
    for (std::size_t i = 0; i < s.size(); ++i) {
      rx[i] = static_cast<std::int64_t>(ax[i]);
      ry[i] = static_cast<std::int64_t>(ay[i]);
    }
  }
  const std::int64_t scale = n * (n * n - 1);
  auto statistic = [&](const std::vector<std::int64_t>& y) {
    std::int64_t d2 = 0;
    for (std::size_t i = 0; i < y.size(); ++i) d2 += (rx[i] - y[i]) * (rx[i] - y[i]);
    const std::int64_t v = scale - 6 * d2;  // rho * scale
    return v < 0 ? -v : v;
  };

  const std::int64_t observed = statistic(ry);
  std::vector<std::int64_t> perm = ry;
  std::sort(perm.begin(), perm.end());
  ExactPValue out;
  do {
    ++out.permutations;
    if (statistic(perm) >= observed) ++out.extreme_count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline double spearman_exact_pvalue(const PairedSample& s) {
  return spearman_exact_test(s).value();
}

struct PearsonTest {
  double r = 0.0;
  double t = 0.0;         // r sqrt((n - 2) / (1 - r^2)); infinite when |r| = 1
  int degrees_of_freedom = 0;
  double p_value = 1.0;   // two-sided
  bool limiting = false;  // |r| = 1: p is the limiting value 0
};

/// Two-sided test of zero correlation via Student's t with n - 2 degrees of
/// freedom. Throws std::domain_error when r is undefined.
inline PearsonTest pearson_test(const PairedSample& s) {
  detail::require_pairs(s, 3);
  const auto r = pearson_r(s);
  if (!r) throw std::domain_error("Pearson correlation undefined: zero variance");
  PearsonTest out;
  out.r = *r;
  out.degrees_of_freedom = static_cast<int>(s.size()) - 2;
  if (std::abs(out.r) >= 1.0) {
    out.t = std::copysign(INFINITY, out.r);
    out.p_value = 0.0;
    out.limiting = true;
    return out;
  }
  out.t = out.r * std::sqrt(out.degrees_of_freedom / (1.0 - out.r * out.r));
  const boost::math::students_t dist(out.degrees_of_freedom);
  out.p_value = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(out.t))));
  return out;
}

inline double pearson_pvalue(const PairedSample& s) { return pearson_test(s).p_value; }

}  // namespace memcost
