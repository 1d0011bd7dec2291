#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quadrica/config.hpp"

namespace quadrica {

/// One counterexample: the law it breaks and the tuple that breaks it.
struct Witness {
  std::string law;
  std::vector<Elem> tuple;

  bool operator==(const Witness&) const = default;
};

/// A law that was evaluated, with its human-readable statement.
struct CheckedLaw {
  std::string id;
  std::string statement;
};

/// Outcome of running a family of laws.
class Verdict {
 public:
  bool passed() const noexcept { return failures_.empty(); }
  explicit operator bool() const noexcept { return passed(); }

  std::span<const Witness> failures() const noexcept { return failures_; }
  std::span<const CheckedLaw> checked() const noexcept { return checked_; }

  bool failed(std::string_view law) const noexcept;
  const Witness* first_failure(std::string_view law) const noexcept;
  const std::string* statement(std::string_view law) const noexcept;

  void note_checked(std::string id, std::string statement);
  void add_failure(Witness w);
  /// Appends another verdict's checks and failures, keeping order.
  void merge(const Verdict& other);

  /// Single-line summary such as "failed: AC7 [1,2,3]; MC2 [0,1,1]".
  std::string summary() const;

 private:
  std::vector<CheckedLaw> checked_;
  std::vector<Witness> failures_;
};

}  // namespace quadrica
