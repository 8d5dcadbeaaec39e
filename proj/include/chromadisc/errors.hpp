#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromadisc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  kEmptyRecord,
  kMalformedHeader,
  kCharacterOutOfRange,
  kLengthMismatch,
  kTrailingBitsNonzero,
  kTooManyVertices,
  kBadEdgeList,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

// A precondition on the input was violated (empty graph where one is
// required, vertex out of range, p outside [chi, n], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine refused to run because the input exceeds its cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// A constructive procedure could not complete one of its steps. Every such
// step is backed by a proven statement, so this always means a bug.
class CertificateFailure : public Error {
 public:
  using Error::Error;
};

// The graph is not locally s-colourable for the s the caller asserted.
class LocalityViolation : public Error {
 public:
  using Error::Error;
};

// The graph contains the forbidden cycle; the witness is a vertex sequence.
class CycleRefusal : public Error {
 public:
  CycleRefusal(const std::string& what, std::vector<int> cycle)
      : Error(what), cycle_(std::move(cycle)) {}
  const std::vector<int>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<int> cycle_;
};

}  // namespace chromadisc
