#pragma once

#include <stdexcept>
#include <string>

namespace ssyt {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shape validation failure. `row`/`col` are 1-based and name the offending cell.
class ValidationError : public Error {
public:
    enum class Kind { NonPositiveEntry, RowNotDecreasing, ColumnNotDecreasing, EmptyRow };

    ValidationError(Kind kind, int row, int col, const std::string& msg)
        : Error(msg), kind(kind), row(row), col(col) {}

    Kind kind;
    int row;
    int col;
};

/// Malformed shape/family/partition text.
class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& msg) : Error(msg), pos(pos) {}
    std::size_t pos;
};

/// A family whose instantiation can never be valid for all large n
/// (constant-above-parameter cells, increasing constants, ragged rows).
class FamilyError : public Error {
public:
    using Error::Error;
};

class NotACorner : public Error {
public:
    using Error::Error;
};

class BelowMinParameter : public Error {
public:
    BelowMinParameter(long n, long n_min)
        : Error("parameter " + std::to_string(n) + " is below the family minimum " +
                std::to_string(n_min)),
          n(n), n_min(n_min) {}
    long n;
    long n_min;
};

class OracleLimitExceeded : public Error {
public:
    OracleLimitExceeded(long boxes, long limit)
        : Error("shape has " + std::to_string(boxes) + " boxes, oracle limit is " +
                std::to_string(limit)),
          boxes(boxes), limit(limit) {}
    long boxes;
    long limit;
};

/// Sequence file (plain or b-file) could not be parsed.
class SequenceFormatError : public Error {
public:
    using Error::Error;
};

class InsufficientTerms : public Error {
public:
    using Error::Error;
};

class LeadingPolyZero : public Error {
public:
    explicit LeadingPolyZero(long n)
        : Error("leading polynomial vanishes at n = " + std::to_string(n)), n(n) {}
    long n;
};

class NonIntegerExtension : public Error {
public:
    explicit NonIntegerExtension(long n)
        : Error("recurrence does not extend integrally at n = " + std::to_string(n)), n(n) {}
    long n;
};

/// Persistent cache file rejected (bad magic, version, or flags).
class CacheFormatError : public Error {
public:
    using Error::Error;
};

} // namespace ssyt
