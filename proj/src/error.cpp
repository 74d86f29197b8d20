#include "clifford3/error.hpp"

namespace clifford3 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::RankUnsupported: return "RankUnsupported";
    case ErrorCode::CongruenceViolation: return "CongruenceViolation";
    case ErrorCode::NotHyperelliptic: return "NotHyperelliptic";
    case ErrorCode::OutOfModeledRange: return "OutOfModeledRange";
    case ErrorCode::IndexNegative: return "IndexNegative";
    case ErrorCode::KrawtchoukDomain: return "KrawtchoukDomain";
    case ErrorCode::OracleRangeExceeded: return "OracleRangeExceeded";
    case ErrorCode::NotSemistable: return "NotSemistable";
    case ErrorCode::NotUnstable: return "NotUnstable";
    case ErrorCode::MissingS1F: return "MissingS1F";
    case ErrorCode::InvalidQuery: return "InvalidQuery";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::RangeUncovered: return "RangeUncovered";
    case ErrorCode::SlopeOutOfRange: return "SlopeOutOfRange";
    case ErrorCode::HypothesisUnverifiable: return "HypothesisUnverifiable";
    case ErrorCode::ParamsOutOfRange: return "ParamsOutOfRange";
    case ErrorCode::UnrealizableF: return "UnrealizableF";
  }
  return "Unknown";
}

}  // namespace clifford3
