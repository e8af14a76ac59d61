#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mwss {

/// Malformed input: bad vertex index, self-loop, parse failure, overlap.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request outside what a routine supports (pattern too large, hole length).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural property that holds for every graph of the target class
/// failed at runtime. The witness lists the offending vertices (host indices
/// of the graph the caller passed in).
class NotInClassError : public std::runtime_error {
 public:
  NotInClassError(std::string claim, std::vector<int> witness)
      : std::runtime_error("input not in class: " + claim),
        claim_(std::move(claim)),
        witness_(std::move(witness)) {}

  const std::string& claim() const { return claim_; }
  const std::vector<int>& witness() const { return witness_; }
  std::vector<int>& witness() { return witness_; }

 private:
  std::string claim_;
  std::vector<int> witness_;
};

/// Random generation could not reach an in-class graph within its budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mwss
