#include "gcakit/errors.hpp"

namespace gcakit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::DegenerateBlock: return "DegenerateBlock";
    case ErrorCode::InconsistentOrders: return "InconsistentOrders";
    case ErrorCode::InvalidFactorSet: return "InvalidFactorSet";
    case ErrorCode::IrrationalPhase: return "IrrationalPhase";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::EvenGeneratorCount: return "EvenGeneratorCount";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotReal: return "NotReal";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::EvenDimension: return "EvenDimension";
    case ErrorCode::BadDeterminant: return "BadDeterminant";
    case ErrorCode::UnsupportedTransform: return "UnsupportedTransform";
    case ErrorCode::IrrationalFlux: return "IrrationalFlux";
  }
  return "Unknown";
}

}  // namespace gcakit
