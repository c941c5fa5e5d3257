#pragma once

#include <cstdint>
#include <string>

namespace spca {

/// Learning-rate schedule eta_t = c, c/t or c/sqrt(t); t counts blocks,
/// 1-based. The scale c must be positive and finite.
class Schedule {
public:
  enum class Kind { Constant, InverseT, InverseSqrtT };

  Schedule(Kind kind, double c);

  static Schedule constant(double c) { return {Kind::Constant, c}; }
  static Schedule inverse_t(double c) { return {Kind::InverseT, c}; }
  static Schedule inverse_sqrt_t(double c) { return {Kind::InverseSqrtT, c}; }

  Kind kind() const { return kind_; }
  double scale() const { return c_; }
  double eta(std::int64_t t) const;

  std::string kind_name() const { return kind_name(kind_); }
  static std::string kind_name(Kind kind);
  static Kind parse_kind(const std::string& name);

private:
  Kind kind_;
  double c_;
};

}  // namespace spca
