#pragma once

#include <stdexcept>
#include <string>

namespace harmonic2v {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// An Euler-rational scale evaluated to a pole on the bidegree reached.
class ZeroDenominator : public Error {
 public:
  ZeroDenominator(int k, int l)
      : Error("Euler-rational pole at bidegree (" + std::to_string(k) + "," +
              std::to_string(l) + ")"),
        k_(k),
        l_(l) {}
  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }

 private:
  int k_;
  int l_;
};

class NotDoubleHarmonic : public Error {
 public:
  using Error::Error;
};

class NonTerminating : public Error {
 public:
  using Error::Error;
};

class LowerParameterPole : public Error {
 public:
  using Error::Error;
};

class GammaPole : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class VariableOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace harmonic2v
