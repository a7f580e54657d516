#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace umlmeter {

// A metric result. Unavailable is a distinct state, not zero: it signals the
// model lacks the behavioral evidence the metric needs (reports render it as
// "n/a"). Arithmetic propagates unavailability.
class MetricValue {
 public:
  MetricValue() = default;  // unavailable
  MetricValue(double v) : value_(v) {}
  MetricValue(int v) : value_(static_cast<double>(v)) {}
  MetricValue(std::size_t v) : value_(static_cast<double>(v)) {}

  static MetricValue unavailable() { return MetricValue(); }

  bool available() const { return value_.has_value(); }
  double get() const;  // throws NoData when unavailable

  // "n/a" or the shortest round-trip decimal; integral values print without
  // a fractional part.
  std::string str() const;

  // Inverse of str(). Throws ConfigError on malformed input.
  static MetricValue parse(std::string_view text);

  friend MetricValue operator+(MetricValue a, MetricValue b);
  friend MetricValue operator-(MetricValue a, MetricValue b);
  friend MetricValue operator*(MetricValue a, MetricValue b);
  // Division by zero yields unavailable.
  friend MetricValue operator/(MetricValue a, MetricValue b);

  friend bool operator==(const MetricValue& a, const MetricValue& b) = default;

 private:
  std::optional<double> value_;
};

}  // namespace umlmeter
