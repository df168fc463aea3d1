#ifndef FOLIACOH_ERRORS_HPP
#define FOLIACOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace foliacoh {

// Malformed or inconsistent user input (model files, flags, domain violations).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural identity that must hold by construction did not (d∘d, chain
// conditions, exactness). Seeing one of these means a bug or a corrupted model.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace foliacoh

#endif  // FOLIACOH_ERRORS_HPP
