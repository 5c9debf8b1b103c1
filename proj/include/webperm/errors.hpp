#pragma once

#include <stdexcept>
#include <string>

namespace webperm {

// Caller passed arguments outside an operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested size exceeds the configured enumeration cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A structural invariant the algorithm relies on was violated. Seeing one of
// these means a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

inline void check_cap(int size, int cap, const char* what) {
  if (size > cap) {
    throw CapExceeded(std::string(what) + ": size " + std::to_string(size) +
                      " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace webperm
