#include "umlmeter/metric_value.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>

#include "umlmeter/errors.hpp"

namespace umlmeter {

double MetricValue::get() const {
  if (!value_) throw NoData("metric value is unavailable");
  return *value_;
}

std::string MetricValue::str() const {
  if (!value_) return "n/a";
  double v = *value_;
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 9.0e15) {
    return std::to_string(static_cast<std::int64_t>(v));
  }
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

MetricValue MetricValue::parse(std::string_view text) {
  if (text == "n/a") return unavailable();
  double v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ConfigError("malformed metric value: '" + std::string(text) + "'");
  }
  return MetricValue(v);
}

MetricValue operator+(MetricValue a, MetricValue b) {
  if (!a.value_ || !b.value_) return MetricValue::unavailable();
  return MetricValue(*a.value_ + *b.value_);
}

MetricValue operator-(MetricValue a, MetricValue b) {
  if (!a.value_ || !b.value_) return MetricValue::unavailable();
  return MetricValue(*a.value_ - *b.value_);
}

MetricValue operator*(MetricValue a, MetricValue b) {
  if (!a.value_ || !b.value_) return MetricValue::unavailable();
  return MetricValue(*a.value_ * *b.value_);
}

MetricValue operator/(MetricValue a, MetricValue b) {
  if (!a.value_ || !b.value_ || *b.value_ == 0.0) {
    return MetricValue::unavailable();
  }
  return MetricValue(*a.value_ / *b.value_);
}

}  // namespace umlmeter
