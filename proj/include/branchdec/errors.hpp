#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace branchdec {

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " +
                                std::to_string(rhs)) {}
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unknown family or id, malformed or inconsistent catalog data.
class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A pair or algebra id that neither the catalog nor the built-in families know.
class UnknownIdError : public CatalogError {
public:
    using CatalogError::CatalogError;
};

/// The question is outside what the weight-level model can answer.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RankBoundExceeded : public UnsupportedError {
public:
    RankBoundExceeded(std::size_t rank, std::size_t bound)
        : UnsupportedError("rank " + std::to_string(rank) + " exceeds the enumeration bound " +
                           std::to_string(bound)) {}
};

/// A check was asked for before the check it depends on succeeded.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class PointednessError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace branchdec
