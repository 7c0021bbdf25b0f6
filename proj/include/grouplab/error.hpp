#pragma once

#include <stdexcept>
#include <string>

namespace grouplab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace grouplab
