#pragma once

#include <stdexcept>
#include <string>

namespace skewlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Density-operator validation failures.
class NotHermitian : public Error { using Error::Error; };
class NotPositive : public Error { using Error::Error; };
class BadTrace : public Error { using Error::Error; };
class DimensionTooSmall : public Error { using Error::Error; };

class DimensionMismatch : public Error { using Error::Error; };
class InvalidParams : public Error { using Error::Error; };
class ParamOutOfRange : public Error { using Error::Error; };
class BadRank : public Error { using Error::Error; };

class ParamsOutsideLemmaDomain : public Error { using Error::Error; };
class ParamsOutsideTheoremDomain : public Error { using Error::Error; };

/// Two routes to the same value disagreed beyond tolerance, or a provably
/// nonnegative quantity came out negative beyond round-off.
class NumericalInconsistency : public Error { using Error::Error; };

/// Malformed matrix JSON, ragged arrays, unreadable files.
class ParseError : public Error { using Error::Error; };

} // namespace skewlab
