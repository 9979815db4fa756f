#pragma once

#include <stdexcept>
#include <string>

namespace akb {

struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// an encoded table did not cover a case it should have
struct DataError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace akb
