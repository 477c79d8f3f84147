#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tensalg {

enum class ErrorKind {
  NotAPartialOrder,
  MissingJoin,
  NotAssociative,
  NotJoinDistributive,
  UnitLawFails,
  ActionNotJoinPreserving,
  ActionNotAssociative,
  UnitActionFails,
  SourceTargetQuantaleMismatch,
  QuantaleMismatch,
  SizeLimitExceeded,
  BadElementIndex,
  CompositionMismatch,
  FNotModuleHom,
  NonCommutativeBase,
  NotANucleus,
  NotAPrenucleus,
  GDoesNotRespectX,
  NotACongruence,
  ParseError,
  UnknownReference,
  ValidationError,
};

const char* to_string(ErrorKind k);

// Every failure carries the kind plus a human-readable witness.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& witness);
  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& witness);

// Size caps. Base carriers (user tables) and materialized constructions are
// capped separately; TENSALG_MAX_CARRIER overrides the base cap.
struct Limits {
  std::size_t max_carrier = 32;
  std::size_t max_materialized = 100000;
};

Limits limits();
void set_limits(const Limits& l);
void check_carrier_size(std::size_t n, const std::string& what);
void check_materialized_size(std::size_t n, const std::string& what);

// Lowers the materialization cap for the current thread while alive.
// Nested scopes keep the smaller value.
class ScopedMaterializedCap {
 public:
  explicit ScopedMaterializedCap(std::size_t cap);
  ~ScopedMaterializedCap();
  ScopedMaterializedCap(const ScopedMaterializedCap&) = delete;
  ScopedMaterializedCap& operator=(const ScopedMaterializedCap&) = delete;

 private:
  std::size_t saved_;
};

}  // namespace tensalg
