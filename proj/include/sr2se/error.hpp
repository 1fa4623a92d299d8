#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace sr2se {

/// Base class for every fault raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on input that violates its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A decision procedure was asked to work above its configured size cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Raised by the extension algorithms when the residual lands in a case
/// whose existence question is still unresolved.
class OpenCaseError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  kEmpty,
  kBadLength,
  kTruncated,
  kTrailingBits,
  kNonPrintable,
  kBadHeader,
  kBadToken,
  kOutOfRange,
  kDuplicateEdge,
  kBadSign,
  kBadRowLength,
  kBadCharacter,
  kNotWeighing,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what, std::size_t line = 0)
      : Error(std::string(to_string(kind)) + ": " + what), kind_(kind), line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// A negative answer from a checking routine. Refusals are values, not faults.
struct Refusal {
  std::string reason;
};

/// Either an accepted value or a refusal carrying a reason.
template <typename T>
class Outcome {
 public:
  Outcome(T value) : v_(std::move(value)) {}
  Outcome(Refusal r) : v_(std::move(r)) {}

  bool accepted() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return accepted(); }

  const T& value() const {
    if (!accepted()) throw Error("outcome refused: " + std::get<Refusal>(v_).reason);
    return std::get<T>(v_);
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }

  const std::string& reason() const {
    static const std::string kEmpty;
    return accepted() ? kEmpty : std::get<Refusal>(v_).reason;
  }

 private:
  std::variant<T, Refusal> v_;
};

}  // namespace sr2se
