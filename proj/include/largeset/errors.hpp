#ifndef LARGESET_ERRORS_HPP
#define LARGESET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace largeset {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An element or window was used with the wrong group family.
struct family_error : error {
  using error::error;
};

// A stated precondition was violated (duplicate letters, unreduced word,
// bad sequence, length constraint, ...).
struct precondition_error : error {
  using error::error;
};

// A window or search exceeded its configured size cap.
struct resource_error : error {
  using error::error;
};

// Malformed CLI/experiment configuration.
struct config_error : error {
  using error::error;
};

}  // namespace largeset

#endif
