#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fatcat {

/// Input tables are malformed (dangling ids, non-total maps, wrong shape).
/// Distinct from a law violation, which is reported, not thrown.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumeration would exceed the configured cell cap (FATCAT_MAX_CELLS).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A JSON document does not match the expected schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One violated law. `witness` names the offending cells/morphisms by their
/// canonical identifiers.
struct Violation {
  std::string law;
  std::vector<std::string> witness;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

/// Exhaustive list of violations; empty means every checked law holds.
using Report = std::vector<Violation>;

inline void append(Report& into, const Report& from) {
  into.insert(into.end(), from.begin(), from.end());
}

}  // namespace fatcat
