#pragma once

#include <stdexcept>
#include <string>

namespace isomf {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Mixed scalar variants or mismatched moduli.
class DomainMismatch : public Error {
public:
  using Error::Error;
};

// Division by zero or inexact division in BigInt/PolyP.
class DivisionError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

// Companion matrix not invertible (t_k = 0 or not a unit).
class SingularMatrix : public Error {
public:
  using Error::Error;
};

class HorizonError : public Error {
public:
  using Error::Error;
};

}  // namespace isomf
