#ifndef TOURNEY_ERROR_HPP
#define TOURNEY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tourney
{

enum class ErrorCode
{
    NegativeEntry,
    NonIntegerPairSum,
    DiagonalNonZero,
    FewerThanTwoObjects,
    UnknownLabel,
    LabelMismatch,
    DimensionMismatch,
    SingularMatrix,
    RankTooLow,
    FullRank,
    UndefinedForSmallN,
    NoComparisons,
    NonPositiveEpsilon,
    DisconnectedProblem,
    ReducibleProblem,
    PreconditionUnmet,
    MatchesMismatch,
    NotFlat,
    NotSingleDifference,
    MatchesChanged,
    WitnessMismatch,
    ParseError,
    UnknownExample,
};

constexpr std::string_view to_string(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NonIntegerPairSum: return "NonIntegerPairSum";
    case ErrorCode::DiagonalNonZero: return "DiagonalNonZero";
    case ErrorCode::FewerThanTwoObjects: return "FewerThanTwoObjects";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::RankTooLow: return "RankTooLow";
    case ErrorCode::FullRank: return "FullRank";
    case ErrorCode::UndefinedForSmallN: return "UndefinedForSmallN";
    case ErrorCode::NoComparisons: return "NoComparisons";
    case ErrorCode::NonPositiveEpsilon: return "NonPositiveEpsilon";
    case ErrorCode::DisconnectedProblem: return "DisconnectedProblem";
    case ErrorCode::ReducibleProblem: return "ReducibleProblem";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::MatchesMismatch: return "MatchesMismatch";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::NotSingleDifference: return "NotSingleDifference";
    case ErrorCode::MatchesChanged: return "MatchesChanged";
    case ErrorCode::WitnessMismatch: return "WitnessMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownExample: return "UnknownExample";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this type; `code()` is stable,
/// `what()` is for humans.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when a rating method cannot produce a unique rating for some problem a check needs.
/// Carries the method-level cause (DisconnectedProblem, ReducibleProblem, ...).
class PreconditionError : public Error
{
public:
    PreconditionError(ErrorCode cause, const std::string& message)
        : Error(ErrorCode::PreconditionUnmet, std::string(to_string(cause)) + ": " + message), cause_(cause)
    {}

    [[nodiscard]] ErrorCode cause() const noexcept { return cause_; }

private:
    ErrorCode cause_;
};

} // namespace tourney

#endif // TOURNEY_ERROR_HPP
