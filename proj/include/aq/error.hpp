#pragma once

#include <stdexcept>
#include <string>

namespace aq {

/// Raised when an argument lies outside the domain of an operation
/// (negative ratio, focus without bipolar chart, non-unitary gate, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

namespace tolerance {
// Absolute tolerances used by predicates and self-checks.
inline constexpr double kGeometry = 1e-10;
inline constexpr double kState = 1e-12;
// Input states whose norm deviates more than this are rejected.
inline constexpr double kNormalization = 1e-6;
// Amplitude differences at or below this trigger the parameter-at-infinity branch.
inline constexpr double kDegenerate = 1e-14;
}  // namespace tolerance

}  // namespace aq
