#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "quadrica/config.hpp"
#include "quadrica/verdict.hpp"

namespace quadrica {

enum class ErrorKind {
  not_a_group,
  not_a_ring,
  cap_exceeded,
  axiom_violation,
  not_normal,
  not_an_algebra,
  invalid_epsilon,
  non_commutative_ring,
  precondition_unmet,
  search_space_too_large,
  not_composable,
  certificate_invalid,
  hom_not_closed,
  parse_error,
  dimension_mismatch,
  internal_inconsistency,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every library error. Carries an optional witness tuple.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<Elem> witness = {})
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<Elem> witness_;
};

/// Raised by certify(): the structure failed its verifier.
class AxiomViolation : public Error {
 public:
  AxiomViolation(const std::string& what, Verdict verdict);
  const Verdict& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

}  // namespace quadrica
