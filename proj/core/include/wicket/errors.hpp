#pragma once

#include <stdexcept>

namespace wicket {

// An exact routine was asked to run outside the domain where its arithmetic
// or search is guaranteed; callers see the bound in the message.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wicket
