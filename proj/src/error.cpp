#include "tensalg/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace tensalg {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::MissingJoin: return "MissingJoin";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotJoinDistributive: return "NotJoinDistributive";
    case ErrorKind::UnitLawFails: return "UnitLawFails";
    case ErrorKind::ActionNotJoinPreserving: return "ActionNotJoinPreserving";
    case ErrorKind::ActionNotAssociative: return "ActionNotAssociative";
    case ErrorKind::UnitActionFails: return "UnitActionFails";
    case ErrorKind::SourceTargetQuantaleMismatch: return "SourceTargetQuantaleMismatch";
    case ErrorKind::QuantaleMismatch: return "QuantaleMismatch";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::BadElementIndex: return "BadElementIndex";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::FNotModuleHom: return "FNotModuleHom";
    case ErrorKind::NonCommutativeBase: return "NonCommutativeBase";
    case ErrorKind::NotANucleus: return "NotANucleus";
    case ErrorKind::NotAPrenucleus: return "NotAPrenucleus";
    case ErrorKind::GDoesNotRespectX: return "GDoesNotRespectX";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

AlgebraError::AlgebraError(ErrorKind kind, const std::string& witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + witness),
      kind_(kind),
      witness_(witness) {}

void fail(ErrorKind kind, const std::string& witness) { throw AlgebraError(kind, witness); }

namespace {

std::size_t env_carrier_cap() {
  if (const char* s = std::getenv("TENSALG_MAX_CARRIER")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (end != s && v > 0) return v;
  }
  return 32;
}

std::atomic<std::size_t> g_max_carrier{env_carrier_cap()};
std::atomic<std::size_t> g_max_materialized{100000};
thread_local std::size_t t_cap = 0;  // 0: no thread override

std::size_t materialized_cap() {
  const std::size_t g = g_max_materialized.load();
  return t_cap == 0 ? g : std::min(g, t_cap);
}

}  // namespace

Limits limits() { return Limits{g_max_carrier.load(), g_max_materialized.load()}; }

void set_limits(const Limits& l) {
  g_max_carrier = l.max_carrier;
  g_max_materialized = l.max_materialized;
}

void check_carrier_size(std::size_t n, const std::string& what) {
  if (n > g_max_carrier.load())
    fail(ErrorKind::SizeLimitExceeded,
         what + " has " + std::to_string(n) + " elements, cap is " + std::to_string(g_max_carrier.load()));
}

void check_materialized_size(std::size_t n, const std::string& what) {
  const std::size_t cap = materialized_cap();
  if (n > cap)
    fail(ErrorKind::SizeLimitExceeded, what + " needs " + std::to_string(n) + " elements, cap is " + std::to_string(cap));
}

ScopedMaterializedCap::ScopedMaterializedCap(std::size_t cap) : saved_(t_cap) {
  if (cap != 0 && (t_cap == 0 || cap < t_cap)) t_cap = cap;
}

ScopedMaterializedCap::~ScopedMaterializedCap() { t_cap = saved_; }

}  // namespace tensalg
