#pragma once

#include <stdexcept>
#include <string>

namespace signlap {

/// Bad user input: malformed documents, violated preconditions.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result that contradicts an identity the library relies on. Seeing one
/// of these means there is a bug in the library, not in the input.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace signlap
