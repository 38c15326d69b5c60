#pragma once

#include <stdexcept>
#include <string>

namespace spg {

enum class Errc {
  InvalidUniverse,
  InvalidFamily,
  InvalidIncidence,
  InvalidEdit,
  Connectivity,
  DiameterUndefined,
  Domain,
  TooFewLayers,
  SeparationInfeasible,
  BudgetExceeded,
  DegenerateLayer,
  ConstructionFailure,
  Io,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidUniverse: return "invalid-universe";
    case Errc::InvalidFamily: return "invalid-family";
    case Errc::InvalidIncidence: return "invalid-incidence";
    case Errc::InvalidEdit: return "invalid-edit";
    case Errc::Connectivity: return "connectivity";
    case Errc::DiameterUndefined: return "diameter-undefined";
    case Errc::Domain: return "domain";
    case Errc::TooFewLayers: return "too-few-layers";
    case Errc::SeparationInfeasible: return "separation-infeasible";
    case Errc::BudgetExceeded: return "budget-exceeded";
    case Errc::DegenerateLayer: return "degenerate-layer";
    case Errc::ConstructionFailure: return "construction-failure";
    case Errc::Io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace spg
