#include "tourn/error.hpp"

namespace tourn {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotATournament: return "NotATournament";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::SameVertex: return "SameVertex";
        case ErrorKind::EmptyVertexSet: return "EmptyVertexSet";
        case ErrorKind::InfeasibleBudget: return "InfeasibleBudget";
        case ErrorKind::OrderTooLarge: return "OrderTooLarge";
        case ErrorKind::NotStrong: return "NotStrong";
        case ErrorKind::NotInsertable: return "NotInsertable";
        case ErrorKind::NoSuchArc: return "NoSuchArc";
        case ErrorKind::IrregularityExceeded: return "IrregularityExceeded";
        case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace tourn
