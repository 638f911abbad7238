#include "kforce/error.hpp"

namespace kforce {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::BadCharacter: return "BadCharacter";
    case ErrorKind::TrailingData: return "TrailingData";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::NotAFixedPoint: return "NotAFixedPoint";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace kforce
