#pragma once

#include <stdexcept>
#include <string>

namespace agr {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ZeroDenominator,
  InvalidAutomorphism,
  TwistMismatch,
  MissingUnit,
  UnknownGenerator,
  SyntaxError,
  DuplicateGenerator,
  EmptyGeneratorList,
  RelatorNotKilled,
  ComplexNotChain,
  NotAChainMap,
  NotSquare,
  NotAcyclic,
  UnbasedComplex,
  UnsupportedField,
  BasisIncompatible,
  EmptyInput,
  RankTooLargeForFaces,
  LatticeMismatch,
  NotAVertex,
  ZeroElement,
  ZeroCharacter,
  WrongDeficiency,
  SingularMinor,
  NoAdmissibleGenerator,
  PolytopeMismatch,
  OperationCancelled,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::TwistMismatch: return "TwistMismatch";
    case ErrorCode::MissingUnit: return "MissingUnit";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorCode::EmptyGeneratorList: return "EmptyGeneratorList";
    case ErrorCode::RelatorNotKilled: return "RelatorNotKilled";
    case ErrorCode::ComplexNotChain: return "ComplexNotChain";
    case ErrorCode::NotAChainMap: return "NotAChainMap";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::UnbasedComplex: return "UnbasedComplex";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::BasisIncompatible: return "BasisIncompatible";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::RankTooLargeForFaces: return "RankTooLargeForFaces";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ZeroCharacter: return "ZeroCharacter";
    case ErrorCode::WrongDeficiency: return "WrongDeficiency";
    case ErrorCode::SingularMinor: return "SingularMinor";
    case ErrorCode::NoAdmissibleGenerator: return "NoAdmissibleGenerator";
    case ErrorCode::PolytopeMismatch: return "PolytopeMismatch";
    case ErrorCode::OperationCancelled: return "OperationCancelled";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Syntax errors carry the 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorCode::SyntaxError,
              what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace agr
