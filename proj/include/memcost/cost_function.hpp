#pragma once

/// \file cost_function.hpp
/// \brief Strictly increasing online-memory cost functions g(d) over
///        dependency lengths d >= 1.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace memcost {

/// Raised when a cost function cannot be built from its parameters.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Anything that maps a dependency length to a cost and knows the largest
/// length it is defined on. CostFunction models it; tests also plug in
/// unvalidated functions to probe the landscape checks.
template <class G>
concept CostLike = requires(const G& g, int d) {
  { g(d) } -> std::convertible_to<double>;
  { g.max_length() } -> std::convertible_to<int>;
};

/// Absolute tolerance used whenever two real-valued costs are compared.
inline constexpr double kCostTolerance = 1e-9;

/// g(d), a strictly monotonically increasing positive cost of keeping a
/// dependency of length d open. Closed families are defined for every
/// d >= 1; tables carry an explicit maximum length.
class CostFunction {
 public:
  struct Identity {};
  struct Power {
    double exponent;
  };
  struct Exponential {
    double base;
  };
  struct Affine {
    double slope;
    double intercept;
  };
  struct Table {
    std::vector<double> values;  // values[d - 1] = g(d)
  };
  using Kind = std::variant<Identity, Power, Exponential, Affine, Table>;

  static CostFunction identity() { return CostFunction(Identity{}); }

  static CostFunction power(double exponent) {
    if (!(exponent > 0.0) || !std::isfinite(exponent))
      throw ValidationError("power cost needs a positive finite exponent, got " +
                            std::to_string(exponent));
    return CostFunction(Power{exponent});
  }

  static CostFunction exponential(double base) {
    if (!(base > 1.0) || !std::isfinite(base))
      throw ValidationError("exponential cost needs a base > 1, got " +
                            std::to_string(base));
    return CostFunction(Exponential{base});
  }

  static CostFunction affine(double slope, double intercept) {
    if (!(slope > 0.0) || !std::isfinite(slope))
      throw ValidationError("affine cost needs a positive slope, got " +
                            std::to_string(slope));
    if (!(intercept >= 0.0) || !std::isfinite(intercept))
      throw ValidationError("affine cost needs a non-negative intercept, got " +
                            std::to_string(intercept));
    return CostFunction(Affine{slope, intercept});
  }

  /// values[i] is g(i + 1). Rejects empty, non-positive or non-strictly
  /// increasing tables.
  static CostFunction table(std::vector<double> values) {
    if (values.empty()) throw ValidationError("cost table is empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!std::isfinite(values[i]) || !(values[i] > 0.0))
        throw ValidationError("cost table entry g(" + std::to_string(i + 1) +
                              ") must be positive and finite");
      if (i > 0 && !(values[i] > values[i - 1]))
        throw ValidationError("cost table is not strictly increasing at d = " +
                              std::to_string(i + 1));
    }
    return CostFunction(Table{std::move(values)});
  }

  const Kind& kind() const noexcept { return kind_; }

  /// Largest d for which g(d) is defined.
  int max_length() const noexcept {
    if (const auto* t = std::get_if<Table>(&kind_))
      return static_cast<int>(t->values.size());
    return std::numeric_limits<int>::max();
  }

  /// g(d). Throws std::domain_error outside [1, max_length()].
  double operator()(int d) const {
    if (d < 1 || d > max_length())
      throw std::domain_error("cost function evaluated at d = " + std::to_string(d) +
                              ", outside [1, " + std::to_string(max_length()) + "]");
    const double x = static_cast<double>(d);
    return std::visit(
        [&](const auto& k) -> double {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, Identity>) {
            return x;
          } else if constexpr (std::is_same_v<K, Power>) {
            return std::pow(x, k.exponent);
          } else if constexpr (std::is_same_v<K, Exponential>) {
            return std::pow(k.base, x);
          } else if constexpr (std::is_same_v<K, Affine>) {
            return k.slope * x + k.intercept;
          } else {
            return k.values[static_cast<std::size_t>(d - 1)];
          }
        },
        kind_);
  }

  /// Short textual form, the same grammar the CLI parses.
  std::string describe() const;

 private:
  explicit CostFunction(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

/// Free-function spelling of g(d).
inline double eval_cost(const CostFunction& g, int d) { return g(d); }

}  // namespace memcost

#include "memcost/detail/number_format.hpp"

namespace memcost {

inline std::string CostFunction::describe() const {
  using detail::format_number;
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Identity>) {
          return "identity";
        } else if constexpr (std::is_same_v<K, Power>) {
          return "pow:" + format_number(k.exponent);
        } else if constexpr (std::is_same_v<K, Exponential>) {
          return "exp:" + format_number(k.base);
        } else if constexpr (std::is_same_v<K, Affine>) {
          return "affine:" + format_number(k.slope) + "," + format_number(k.intercept);
        } else {
          std::string out = "table:";
          for (std::size_t i = 0; i < k.values.size(); ++i) {
            if (i) out += ',';
            out += format_number(k.values[i]);
          }
          return out;
        }
      },
      kind_);
}

}  // namespace memcost
