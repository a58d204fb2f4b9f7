#pragma once

#include <stdexcept>
#include <string>

namespace reflex {

enum class ErrorKind {
  ZeroVector,
  NotSquare,
  Singular,
  DimensionMismatch,
  NotFullDimensional,
  EmptyInput,
  OriginNotInterior,
  NotIntegral,
  NotASimplex,
  NotUnimodular,
  NotReflexive,
  DimensionTooSmall,
  Parse,
  Unsupported,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace reflex
