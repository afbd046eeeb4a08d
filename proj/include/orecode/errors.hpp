#pragma once

#include <stdexcept>
#include <string>

namespace orecode {

/// Machine-readable failure categories surfaced by every module.
enum class ErrorCode {
    SpecMismatch,
    DivisionByZero,
    RingTagMismatch,
    ZeroDivisor,
    NotAFactor,
    NotACode,
    ZeroCode,
    BudgetExceeded,
    InvalidParameters,
    NotDualContaining,
    NotPrimitive,
    DimensionMismatch,
    SyntaxError,
    UnknownSymbol,
    ExponentOverflow,
    UnknownSubject,
};

const char* error_code_name(ErrorCode code);

/// Base of all typed errors. CLI surfaces catch this and report the code;
/// nothing in the library aborts the process.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

#define ORECODE_DEFINE_ERROR(NAME)                                              \
    class NAME : public Error {                                                 \
      public:                                                                   \
        explicit NAME(const std::string& msg) : Error(ErrorCode::NAME, msg) {}  \
    }

ORECODE_DEFINE_ERROR(SpecMismatch);
ORECODE_DEFINE_ERROR(DivisionByZero);
ORECODE_DEFINE_ERROR(RingTagMismatch);
ORECODE_DEFINE_ERROR(ZeroDivisor);
ORECODE_DEFINE_ERROR(NotAFactor);
ORECODE_DEFINE_ERROR(NotACode);
ORECODE_DEFINE_ERROR(ZeroCode);
ORECODE_DEFINE_ERROR(BudgetExceeded);
ORECODE_DEFINE_ERROR(InvalidParameters);
ORECODE_DEFINE_ERROR(NotDualContaining);
ORECODE_DEFINE_ERROR(NotPrimitive);
ORECODE_DEFINE_ERROR(DimensionMismatch);
ORECODE_DEFINE_ERROR(UnknownSymbol);
ORECODE_DEFINE_ERROR(ExponentOverflow);
ORECODE_DEFINE_ERROR(UnknownSubject);

#undef ORECODE_DEFINE_ERROR

/// Parse failure with source location. `line`/`column` are 1-based.
class SyntaxError : public Error {
  public:
    SyntaxError(const std::string& msg, int line, int column)
        : Error(ErrorCode::SyntaxError,
                msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

}  // namespace orecode
