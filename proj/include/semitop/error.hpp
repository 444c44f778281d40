#pragma once

#include <stdexcept>
#include <string>

namespace semitop {

// All validation and precondition failures throw Error. The message
// starts with a stable code word (e.g. "NotAssociative", "NotCryptogroup")
// followed by a witness where one exists.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace semitop
