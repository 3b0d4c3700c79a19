#pragma once

#include <stdexcept>
#include <string>

namespace coal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed; the message names the line or byte offset.
struct ParseError : Error {
  using Error::Error;
};

// A size cap was exceeded; callers may retry with a larger explicit cap.
struct CapError : Error {
  using Error::Error;
};

}  // namespace coal
