#pragma once

#include <stdexcept>

namespace gmid {

/// A well-formed request that the library deliberately does not provide
/// (e.g. a latent sampler for the Base kind).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gmid
