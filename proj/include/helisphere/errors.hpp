#pragma once
#include <stdexcept>
#include <string>

namespace helisphere {

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};
struct SingularityError : std::runtime_error {
  explicit SingularityError(const std::string& m) : std::runtime_error(m) {}
};
struct ToleranceError : std::runtime_error {
  explicit ToleranceError(const std::string& m) : std::runtime_error(m) {}
};
struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& m) : std::runtime_error(m) {}
};
struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& m) : std::runtime_error(m) {}
};
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& m) : std::runtime_error(m) {}
};
struct PitchError : std::runtime_error {
  explicit PitchError(const std::string& m) : std::runtime_error(m) {}
};
struct PitchMismatchError : std::runtime_error {
  explicit PitchMismatchError(const std::string& m) : std::runtime_error(m) {}
};
struct EmptyValidityError : std::runtime_error {
  explicit EmptyValidityError(const std::string& m) : std::runtime_error(m) {}
};
struct NegativeRadicandError : std::runtime_error {
  explicit NegativeRadicandError(const std::string& m) : std::runtime_error(m) {}
};
struct DegenerateError : std::runtime_error {
  explicit DegenerateError(const std::string& m) : std::runtime_error(m) {}
};
struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace helisphere
