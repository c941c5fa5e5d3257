#include "spca/schedule.hpp"

#include <cmath>

#include "spca/errors.hpp"

namespace spca {

Schedule::Schedule(Kind kind, double c) : kind_(kind), c_(c) {
  if (!std::isfinite(c) || !(c > 0.0))
    throw ContractViolation("schedule: scale c must be positive and finite, got " +
                            std::to_string(c));
}

double Schedule::eta(std::int64_t t) const {
  switch (kind_) {
    case Kind::Constant:
      return c_;
    case Kind::InverseT:
      return c_ / static_cast<double>(t);
    case Kind::InverseSqrtT:
      return c_ / std::sqrt(static_cast<double>(t));
  }
  throw ContractViolation("schedule: unknown kind");
}

std::string Schedule::kind_name(Kind kind) {
  switch (kind) {
    case Kind::Constant:
      return "constant";
    case Kind::InverseT:
      return "inverse-t";
    case Kind::InverseSqrtT:
      return "inverse-sqrt-t";
  }
  throw ContractViolation("schedule: unknown kind");
}

Schedule::Kind Schedule::parse_kind(const std::string& name) {
  if (name == "constant") return Kind::Constant;
  if (name == "inverse-t") return Kind::InverseT;
  if (name == "inverse-sqrt-t") return Kind::InverseSqrtT;
  throw ContractViolation("schedule: unknown kind '" + name + "'");
}

}  // namespace spca
