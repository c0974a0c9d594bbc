#include "mink/lorentz.hpp"

#include <sstream>

namespace mink {

const char* to_string(Causal c) {
  switch (c) {
    case Causal::Timelike: return "timelike";
    case Causal::Spacelike: return "spacelike";
    case Causal::Null: return "null";
  }
  return "unknown";
}

CausalCharacter causal_character(const LorentzVec& v, double tol) {
  if (v.isZero(0.0)) return {Causal::Spacelike, false};
  const double g = metric(v, v);
  if (std::abs(g) <= tol) return {Causal::Null, false};
  if (g < 0.0) return {Causal::Timelike, v(0) > 0.0};
  return {Causal::Spacelike, false};
}

Normalized normalize(const LorentzVec& v, double tol) {
  const double g = metric(v, v);
  if (std::abs(g) <= tol) {
    std::ostringstream os;
    os << "cannot normalize (" << v(0) << ", " << v(1) << ", " << v(2) << "), g(v,v) = " << g;
    throw Error(ErrorCode::NullVector, os.str());
  }
  const double n = std::sqrt(std::abs(g));
  return {v / n, n};
}

HyperbolicAngle solve_hyperbolic_angle(double sinh_val) {
  return {std::asinh(sinh_val), std::sqrt(1.0 + sinh_val * sinh_val)};
}

void require_finite(const LorentzVec& v, const char* where) {
  if (!all_finite(v)) throw Error(ErrorCode::NonFinite, std::string("non-finite vector in ") + where);
}

}  // namespace mink
