#pragma once

/// \file constituent_calculus.hpp
/// \brief Head-to-head dependency lengths between contiguous S, V and O
///        constituents that carry internal structure, with g(d) = d.
///
/// A constituent x of |x| words has its head word preceded by L_x words
/// and followed by R_x words, so |x| = L_x + 1 + R_x. "Left" means every
/// dependent of a nominal head precedes it, "right" that every one
/// follows it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "memcost/permutation_space.hpp"

namespace memcost {

/// Word counts |S|, |V|, |O|; all at least one.
struct ConstituentLengths {
  int s = 1;
  int v = 1;
  int o = 1;

  ConstituentLengths(int subject, int verb, int object) : s(subject), v(verb), o(object) {
    if (s < 1 || v < 1 || o < 1)
      throw std::domain_error("constituent lengths must be >= 1, got |S| = " +
                              std::to_string(s) + ", |V| = " + std::to_string(v) +
                              ", |O| = " + std::to_string(o));
  }
};

/// Position of a constituent's head word: `left` words before it and
/// `right` words after it.
struct HeadSplit {
  int left = 0;
  int right = 0;

  HeadSplit(int words_before, int words_after) : left(words_before), right(words_after) {
    if (left < 0 || right < 0)
      throw std::domain_error("head split counts must be non-negative");
  }
  int total() const noexcept { return left + 1 + right; }

  static HeadSplit head_first(int length) { return {0, checked(length) - 1}; }
  static HeadSplit head_last(int length) { return {checked(length) - 1, 0}; }

 private:
  static int checked(int length) {
    if (length < 1) throw std::domain_error("constituent length must be >= 1");
    return length;
  }
};

/// Sums of internal dependency lengths, one per constituent.
struct InternalCosts {
  double omega_s = 0.0;
  double omega_v = 0.0;
  double omega_o = 0.0;

  InternalCosts() = default;
  InternalCosts(double s, double v, double o) : omega_s(s), omega_v(v), omega_o(o) {
    if (!(s >= 0.0) || !(v >= 0.0) || !(o >= 0.0))
      throw std::domain_error("internal dependency costs must be non-negative");
  }
  double sum() const noexcept { return omega_s + omega_v + omega_o; }
};

enum class Side { Left, Right, Tie };

inline std::string_view to_string(Side side) {
  switch (side) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Tie: return "tie";
  }
  return "?";
}

namespace detail {

inline void require_non_negative(int value, const char* name) {
  if (value < 0)
    throw std::domain_error(std::string(name) + " must be non-negative, got " +
                            std::to_string(value));
}

inline void require_length(int value, const char* name) {
  if (value < 1)
    throw std::domain_error(std::string(name) + " must be >= 1, got " + std::to_string(value));
}

}  // namespace detail

/// delta^SOV = 2 L_V + 2 R_O + L_O + R_S + 3.
inline std::int64_t delta_sov(int l_v, int r_o, int l_o, int r_s) {
  detail::require_non_negative(l_v, "L_V");
  detail::require_non_negative(r_o, "R_O");
  detail::require_non_negative(l_o, "L_O");
  detail::require_non_negative(r_s, "R_S");
  return 2LL * l_v + 2LL * r_o + l_o + r_s + 3;
}

/// delta^SVO = R_S + |V| + L_O + 1. Independent of where V's head sits.
inline std::int64_t delta_svo(int r_s, int v_len, int l_o) {
  detail::require_non_negative(r_s, "R_S");
  detail::require_length(v_len, "|V|");
  detail::require_non_negative(l_o, "L_O");
  return static_cast<std::int64_t>(r_s) + v_len + l_o + 1;
}

/// SOV with nominal dependents before their heads: 2 L_V + |O| + 2.
inline std::int64_t delta_sov_left(int l_v, int o_len) {
  detail::require_non_negative(l_v, "L_V");
  detail::require_length(o_len, "|O|");
  return 2LL * l_v + o_len + 2;
}

/// SOV with nominal dependents after their heads: 2 L_V + 2 |O| + |S|.
inline std::int64_t delta_sov_right(int l_v, int o_len, int s_len) {
  detail::require_non_negative(l_v, "L_V");
  detail::require_length(o_len, "|O|");
  detail::require_length(s_len, "|S|");
  return 2LL * l_v + 2LL * o_len + s_len;
}

inline std::int64_t delta_svo_left(int v_len, int o_len) {
  detail::require_length(v_len, "|V|");
  detail::require_length(o_len, "|O|");
  return static_cast<std::int64_t>(v_len) + o_len;
}

inline std::int64_t delta_svo_right(int v_len, int s_len) {
  detail::require_length(v_len, "|V|");
  detail::require_length(s_len, "|S|");
  return static_cast<std::int64_t>(v_len) + s_len;
}

/// Which placement of nominal dependents gives the shorter top-level
/// dependencies. Only SOV and SVO are defined.
inline Side preferred_side(WordOrder order, const ConstituentLengths& len) {
  switch (order) {
    case WordOrder::SOV:
      return (len.s == 1 && len.o == 1) ? Side::Tie : Side::Left;
    case WordOrder::SVO:
      if (len.o < len.s) return Side::Left;
      if (len.o > len.s) return Side::Right;
      return Side::Tie;
    default:
      throw std::invalid_argument("preferred side is defined for SOV and SVO only, got " +
                                  std::string(to_string(order)));
  }
}

/// Omega = omega_S + omega_V + omega_O + delta.
inline double omega_total(const InternalCosts& internal, double delta) {
  if (!(delta >= 0.0)) throw std::domain_error("delta must be non-negative");
  return internal.sum() + delta;
}

struct RegressionComparison {
  double omega_sov_from_left = 0.0;   // SVO with dependents before heads, reordered to SOV
  double omega_sov_from_right = 0.0;  // SVO with dependents after heads, reordered to SOV
  std::int64_t delta_gap = 0;         // delta^{SOV,right} - delta^{SOV,left} = |S| + |O| - 2
  Side harder_from = Side::Tie;       // which SVO variant regresses to the costlier SOV
  bool conservation_holds = true;
  std::optional<std::string> warning;
};

/// Reorders SVO into SOV keeping each constituent's internal organisation,
/// once from the left-placing and once from the right-placing variant.
/// Unequal internal sums do not abort the comparison; they clear
/// conservation_holds and set a warning. harder_from follows the
/// top-level delta difference.
inline RegressionComparison regression_comparison(const InternalCosts& internal_left,
                                                  const InternalCosts& internal_right,
                                                  const ConstituentLengths& len, int l_v) {
  const std::int64_t left = delta_sov_left(l_v, len.o);
  const std::int64_t right = delta_sov_right(l_v, len.o, len.s);
  RegressionComparison out;
  out.omega_sov_from_left = omega_total(internal_left, static_cast<double>(left));
  out.omega_sov_from_right = omega_total(internal_right, static_cast<double>(right));
  out.delta_gap = right - left;
  out.harder_from = out.delta_gap > 0 ? Side::Right : (out.delta_gap < 0 ? Side::Left : Side::Tie);
  const double a = internal_left.sum();
  const double b = internal_right.sum();
  if (std::abs(a - b) > 1e-9 * std::max({1.0, std::abs(a), std::abs(b)})) {
    out.conservation_holds = false;
    out.warning = "internal cost sums differ (" + std::to_string(a) + " vs " +
                  std::to_string(b) + "); total-cost difference is not the delta difference";
  }
  return out;
}

/// Finite distribution over constituent lengths.
class LengthDistribution {
 public:
  explicit LengthDistribution(std::vector<std::pair<int, double>> support)
      : support_(std::move(support)) {
    if (support_.empty()) throw std::invalid_argument("length distribution has empty support");
    double total = 0.0;
    for (const auto& [length, p] : support_) {
      if (length < 1)
        throw std::invalid_argument("length distribution support must be >= 1, got " +
                                    std::to_string(length));
      if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument("length distribution probabilities must be positive");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw std::invalid_argument("length distribution probabilities sum to " +
                                  std::to_string(total) + ", not 1");
  }

  static LengthDistribution point(int length) { return LengthDistribution({{length, 1.0}}); }

  double mean() const {
    double m = 0.0;
    for (const auto& [length, p] : support_) m += static_cast<double>(length) * p;
    return m;
  }

  const std::vector<std::pair<int, double>>& support() const noexcept { return support_; }

 private:
  std::vector<std::pair<int, double>> support_;
};

/// E[delta^SVO] for one placement: E|V| + E|O| (left) or E|V| + E|S| (right).
inline double expected_delta_svo(const LengthDistribution& dist_s,
                                 const LengthDistribution& dist_o,
                                 const LengthDistribution& dist_v, Side side) {
  switch (side) {
    case Side::Left: return dist_v.mean() + dist_o.mean();
    case Side::Right: return dist_v.mean() + dist_s.mean();
    default: throw std::invalid_argument("expected delta needs side left or right");
  }
}

}  // namespace memcost
