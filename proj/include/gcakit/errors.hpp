#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcakit {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  NotAntisymmetric,
  BadModulus,
  BadOrder,
  DegenerateBlock,
  InconsistentOrders,
  InvalidFactorSet,
  IrrationalPhase,
  UnknownName,
  EvenGeneratorCount,
  ZeroVector,
  NotReal,
  NotHermitian,
  EvenDimension,
  BadDeterminant,
  UnsupportedTransform,
  IrrationalFlux,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gcakit
