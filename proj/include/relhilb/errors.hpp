#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relhilb {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define RELHILB_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(what) {}        \
    const char* kind() const noexcept override { return #Name; }   \
  };

RELHILB_DEFINE_ERROR(UnknownVariable)
RELHILB_DEFINE_ERROR(ArityMismatch)
RELHILB_DEFINE_ERROR(ZeroPolynomial)
RELHILB_DEFINE_ERROR(ValidationError)
RELHILB_DEFINE_ERROR(DimensionMismatch)
RELHILB_DEFINE_ERROR(NonPolynomialWindow)
RELHILB_DEFINE_ERROR(NotAReduction)
RELHILB_DEFINE_ERROR(NotContained)
RELHILB_DEFINE_ERROR(E0Mismatch)
RELHILB_DEFINE_ERROR(ChainCapExceeded)
RELHILB_DEFINE_ERROR(PropertyViolation)
RELHILB_DEFINE_ERROR(FlagContradiction)
RELHILB_DEFINE_ERROR(SuperficialSearchFailed)
RELHILB_DEFINE_ERROR(ReductionCheckFailed)
RELHILB_DEFINE_ERROR(LinkPropertyFailed)
RELHILB_DEFINE_ERROR(HypothesisNotMet)
RELHILB_DEFINE_ERROR(ManifestMismatch)
RELHILB_DEFINE_ERROR(UsageError)

#undef RELHILB_DEFINE_ERROR

/// Parse failure with a position. `line` is 0 when the input is a single expression.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), message_(message), line_(line), column_(column) {}
  const char* kind() const noexcept override { return "SyntaxError"; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    std::string where = line > 0 ? std::to_string(line) + ":" + std::to_string(column)
                                 : "column " + std::to_string(column);
    return where + ": " + message;
  }
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Problem-file failure; the position is within the file.
class ParseError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
  const char* kind() const noexcept override { return "ParseError"; }
};

/// The m-adic truncation search ran past its cap; the ideal is likely not m-primary.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, unsigned last_truncation, std::size_t last_count)
      : Error(what), last_truncation_(last_truncation), last_count_(last_count) {}
  const char* kind() const noexcept override { return "CapExceeded"; }
  unsigned last_truncation() const noexcept { return last_truncation_; }
  std::size_t last_count() const noexcept { return last_count_; }

 private:
  unsigned last_truncation_;
  std::size_t last_count_;
};

}  // namespace relhilb
