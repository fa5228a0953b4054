#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmaps {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string join_witness(const std::vector<std::string>& witness) {
  std::string out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i != 0) out += ", ";
    out += witness[i];
  }
  return out;
}
}  // namespace detail

/// A quantale law failed; `witness` names the offending elements.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<std::string> witness)
      : Error("axiom violated: " + axiom + " (witness: " + detail::join_witness(witness) + ")"),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::string> witness_;
};

class TrivialQuantale : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class SetMismatch : public Error {
 public:
  using Error::Error;
};

class QuantaleMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by promote(); `witness` is the label of a source element x with k ≰ (ζ*∘ζ)(x,x).
class NotAMap : public Error {
 public:
  explicit NotAMap(std::string witness)
      : Error("relation is not a Q-map: adjunction fails at " + witness), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class NotGraph : public Error {
 public:
  using Error::Error;
};

class NotASubset : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotSurjective : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  InvalidPartition(std::string axiom, std::vector<std::string> witness)
      : Error("invalid Q-partition: " + axiom + " (witness: " + detail::join_witness(witness) + ")"),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::string> witness_;
};

/// An equation that must hold by construction did not; always an implementation bug.
class VerificationFailed : public Error {
 public:
  VerificationFailed(std::string equation, std::string witness)
      : Error("verification failed: " + equation + " at " + witness),
        equation_(std::move(equation)),
        witness_(std::move(witness)) {}

  const std::string& equation() const noexcept { return equation_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string equation_;
  std::string witness_;
};

}  // namespace qmaps
