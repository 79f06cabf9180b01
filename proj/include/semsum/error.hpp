#pragma once

#include <stdexcept>
#include <string>

namespace semsum {

// Raised for malformed input files, bad arguments and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace semsum
