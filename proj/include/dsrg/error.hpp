#pragma once

#include <stdexcept>
#include <string>

namespace dsrg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad file contents, out-of-range points, ragged matrices.
class InputError : public Error {
 public:
  using Error::Error;
};

// A structural axiom or invariant does not hold for the supplied object.
class AxiomError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (group order, rank, orbit size, graph order) was hit.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsrg
