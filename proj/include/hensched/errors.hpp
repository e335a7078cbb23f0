#ifndef HENSCHED_ERRORS_HPP
#define HENSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hensched {

// Infeasible operating point: a log-mean temperature difference was
// requested with a non-positive end difference.
class TemperatureCross : public std::runtime_error {
public:
    explicit TemperatureCross(const std::string& what) : std::runtime_error(what) {}
};

// Network fixed-point iteration failed to reach tolerance within the sweep cap.
class NoConvergence : public std::runtime_error {
public:
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Scenario document is syntactically broken.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Scenario document violates an invariant; message names the field path.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Savings fraction denominator is non-positive.
class DegenerateReference : public std::runtime_error {
public:
    explicit DegenerateReference(const std::string& what) : std::runtime_error(what) {}
};

// Report command could not find a required artifact file.
class MissingArtifact : public std::runtime_error {
public:
    explicit MissingArtifact(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hensched

#endif
