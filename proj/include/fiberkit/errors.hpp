#pragma once

#include <stdexcept>
#include <string>

namespace fiberkit {

/// Sampling is too coarse to resolve a lift through the double cover, or a
/// fiber curve, at the requested resolution.
class InsufficientResolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampled map S^2 -> S^1 has a winding obstruction at grid scale.
class NonLiftable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator family member landed in the wrong component.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fiberkit
