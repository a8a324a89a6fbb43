#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qmat {

/// One violated law together with a printable witness.
struct Violation {
  std::string law;
  std::string witness;
};

/// Outcome of a structure verifier. No violations means the laws hold.
struct LawReport {
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }

  /// Keeps only the first witness per law, so reports stay short.
  void record(const std::string& law, const std::string& witness) {
    for (const auto& v : violations)
      if (v.law == law) return;
    violations.push_back({law, witness});
  }

  std::string to_string() const {
    if (pass()) return "PASS";
    std::ostringstream os;
    os << "FAIL";
    for (const auto& v : violations) os << "\n  " << v.law << ": " << v.witness;
    return os.str();
  }
};

/// A verified structure paired with the report that justified (or refused) it.
template <typename T>
struct Checked {
  std::optional<T> value;
  LawReport report;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

/// Outcome of an exhaustive adjunction check. Failures carry a serialized
/// counterexample, sorted so reports are reproducible byte for byte.
struct AdjunctionReport {
  std::string which;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }

  std::string to_string() const {
    std::ostringstream os;
    os << "adjunction " << which << ": " << cases << " cases, "
       << (pass() ? "PASS" : "FAIL");
    for (const auto& f : failures) os << "\n  " << f;
    return os.str();
  }
};

/// Outcome of a named law suite. Wall time is measured but deliberately
/// excluded from serialize(): identical inputs must serialize identically.
struct SuiteResult {
  std::string suite;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;
  double wall_ms = 0.0;

  bool pass() const { return failures.empty(); }

  std::string serialize() const {
    std::ostringstream os;
    os << "suite " << suite << "\ncases " << cases << "\nresult "
       << (pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& f : failures) os << "failure " << f << "\n";
    return os.str();
  }
};

/// Trace of an operator built from extremal fixpoints: how many strictly
/// changing steps each index needed, plus a slot for a harness summary.
struct MeasuringReport {
  std::string op;
  std::vector<std::string> index_labels;
  std::vector<std::size_t> steps;
  std::string adjunction_summary;

  std::size_t max_steps() const {
    std::size_t m = 0;
    for (auto s : steps) m = std::max(m, s);
    return m;
  }
};

}  // namespace qmat
