#pragma once

#include <stdexcept>
#include <string>

namespace qst {

// Root of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation received a four-vector with the wrong index position.
class IndexPositionError : public Error {
 public:
  using Error::Error;
};

// Total momentum of a state is null, so no position can be extracted.
class MasslessState : public Error {
 public:
  using Error::Error;
};

}  // namespace qst
