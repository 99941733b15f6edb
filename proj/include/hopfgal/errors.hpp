#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfgal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input does not parse or violates a shape contract.
class FormatError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDomain : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix(std::size_t rank, std::size_t size)
      : Error("singular matrix: rank " + std::to_string(rank) + " < " +
              std::to_string(size)),
        rank_(rank) {}
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

// A theorem hypothesis or operation precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Data that passed validation produced an impossible result.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfgal
