#include "quadrica/verdict.hpp"

#include <sstream>

#include "quadrica/errors.hpp"

namespace quadrica {

bool Verdict::failed(std::string_view law) const noexcept {
  return first_failure(law) != nullptr;
}

const Witness* Verdict::first_failure(std::string_view law) const noexcept {
  for (const auto& w : failures_)
    if (w.law == law) return &w;
  return nullptr;
}

const std::string* Verdict::statement(std::string_view law) const noexcept {
  for (const auto& c : checked_)
    if (c.id == law) return &c.statement;
  return nullptr;
}

void Verdict::note_checked(std::string id, std::string statement) {
  checked_.push_back({std::move(id), std::move(statement)});
}

void Verdict::add_failure(Witness w) { failures_.push_back(std::move(w)); }

void Verdict::merge(const Verdict& other) {
  checked_.insert(checked_.end(), other.checked_.begin(), other.checked_.end());
  failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
}

std::string Verdict::summary() const {
  if (passed()) return "passed (" + std::to_string(checked_.size()) + " laws)";
  std::ostringstream out;
  out << "failed:";
  bool first = true;
  for (const auto& w : failures_) {
    out << (first ? " " : "; ") << w.law << " [";
    for (std::size_t i = 0; i < w.tuple.size(); ++i) out << (i ? "," : "") << w.tuple[i];
    out << "]";
    first = false;
  }
  return out.str();
}

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::not_a_group: return "NotAGroup";
    case ErrorKind::not_a_ring: return "NotARing";
    case ErrorKind::cap_exceeded: return "CapExceeded";
    case ErrorKind::axiom_violation: return "AxiomViolation";
    case ErrorKind::not_normal: return "NotNormal";
    case ErrorKind::not_an_algebra: return "NotAnAlgebra";
    case ErrorKind::invalid_epsilon: return "InvalidEpsilon";
    case ErrorKind::non_commutative_ring: return "NonCommutativeRing";
    case ErrorKind::precondition_unmet: return "PreconditionUnmet";
    case ErrorKind::search_space_too_large: return "SearchSpaceTooLarge";
    case ErrorKind::not_composable: return "NotComposable";
    case ErrorKind::certificate_invalid: return "CertificateInvalid";
    case ErrorKind::hom_not_closed: return "HomNotClosed";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::internal_inconsistency: return "InternalInconsistency";
  }
  return "Error";
}

AxiomViolation::AxiomViolation(const std::string& what, Verdict verdict)
    : Error(ErrorKind::axiom_violation, what + ": " + verdict.summary(),
            verdict.failures().empty() ? std::vector<Elem>{}
                                       : verdict.failures().front().tuple),
      verdict_(std::move(verdict)) {}

}  // namespace quadrica
