#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace strictcat {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dangling ids, wrong table sizes, level mismatches.
/// Distinct from a violated axiom, which is reported, not thrown.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Two cells were composed along a level at which their faces do not match.
class ComposabilityError : public Error {
 public:
  using Error::Error;
};

/// The joining relation used by a truncation is not an equivalence
/// relation, or the induced composition is not well defined.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input outside its domain
/// (non-groupoid where a groupoid is needed, wrong shape, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

struct Violation {
  std::string axiom;
  int level = 0;
  std::vector<std::string> cells;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  void add(std::string axiom, int level, std::vector<std::string> cells) {
    violations.push_back({std::move(axiom), level, std::move(cells)});
  }

  void append(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
};

}  // namespace strictcat
