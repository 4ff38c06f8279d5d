#pragma once

#include <stdexcept>
#include <string>

namespace hlkit {

/// Raised when an exact division leaves a nonzero remainder. Every division
/// performed by the library is expected to be exact, so this always signals
/// a bug or a misuse of the API.
class NotDivisible : public std::domain_error {
 public:
  explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

/// Charge is only defined on words whose content is a partition.
class NonDominantWeight : public std::invalid_argument {
 public:
  explicit NonDominantWeight(const std::string& what) : std::invalid_argument(what) {}
};

class NotAPartition : public std::invalid_argument {
 public:
  explicit NotAPartition(const std::string& what) : std::invalid_argument(what) {}
};

class LengthMismatch : public std::invalid_argument {
 public:
  explicit LengthMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class IndexOutOfRange : public std::out_of_range {
 public:
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

class PreconditionViolation : public std::invalid_argument {
 public:
  explicit PreconditionViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// A power series in the variables cannot be truncated by degree because
/// one of its geometric factors has degree zero.
class NonTerminating : public std::invalid_argument {
 public:
  explicit NonTerminating(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hlkit
