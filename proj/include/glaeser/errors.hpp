#pragma once

#include <stdexcept>
#include <string>

namespace glaeser {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing regions/points of different fiber dimensions.
struct DimMismatch : Error {
    explicit DimMismatch(const std::string& what) : Error(what) {}
};

/// An operation that needs a nonempty region was given an empty one.
struct EmptyRegion : Error {
    explicit EmptyRegion(const std::string& what) : Error(what) {}
};

/// A halfplane with a (near-)zero normal was requested.
struct DegenerateNormal : Error {
    explicit DegenerateNormal(const std::string& what) : Error(what) {}
};

/// A scenario/grid combination that cannot be discretized faithfully.
struct BadScenario : Error {
    explicit BadScenario(const std::string& what) : Error(what) {}
};

/// An analytic formula evaluated outside its domain of validity.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Brute-force oracle asked to handle a grid above its size cap.
struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

/// Selection construction hit an empty fiber.
struct EmptyFiber : Error {
    explicit EmptyFiber(const std::string& what) : Error(what) {}
};

/// Malformed or unknown configuration input.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace glaeser
