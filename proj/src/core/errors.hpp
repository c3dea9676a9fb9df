#pragma once

#include <stdexcept>
#include <string>

namespace ug {

// Error codes shared with the C API (see include/unigraph.h).
enum class ErrorCode {
    InvalidArgument = 1,
    ParseError = 2,
    BudgetExhausted = 3,
    Infeasible = 4,
    TooLarge = 5,
    NoEmbedding = 6,
    Io = 7,
    Internal = 8,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& w) : Error(ErrorCode::InvalidArgument, w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorCode::ParseError, w) {}
};

struct IoError : Error {
    explicit IoError(const std::string& w) : Error(ErrorCode::Io, w) {}
};

// Enumeration or exact-check work would exceed its configured cap.
struct EnumerationTooLarge : Error {
    explicit EnumerationTooLarge(const std::string& w) : Error(ErrorCode::TooLarge, w) {}
};

struct ExactCheckInfeasible : Error {
    explicit ExactCheckInfeasible(const std::string& w) : Error(ErrorCode::TooLarge, w) {}
};

struct PatternTooLarge : Error {
    explicit PatternTooLarge(const std::string& w) : Error(ErrorCode::InvalidArgument, w) {}
};

struct ShrunkBelowTarget : Error {
    explicit ShrunkBelowTarget(const std::string& w) : Error(ErrorCode::Infeasible, w) {}
};

struct RegimeInfeasible : Error {
    explicit RegimeInfeasible(const std::string& w) : Error(ErrorCode::Infeasible, w) {}
};

struct RecursionDepthExceeded : Error {
    explicit RecursionDepthExceeded(const std::string& w) : Error(ErrorCode::Infeasible, w) {}
};

// The constructive embedding step found no dominating pair; the host's
// domination property did not suffice at this scale.
struct NoDominatingPair : Error {
    explicit NoDominatingPair(const std::string& w) : Error(ErrorCode::NoEmbedding, w) {}
};

struct InnerEmbeddingFailed : Error {
    explicit InnerEmbeddingFailed(const std::string& w) : Error(ErrorCode::NoEmbedding, w) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& w) : Error(ErrorCode::InvalidArgument, w) {}
};

struct NoEmbedding : Error {
    explicit NoEmbedding(const std::string& w) : Error(ErrorCode::NoEmbedding, w) {}
};

}  // namespace ug
