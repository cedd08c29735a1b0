#pragma once

#include <stdexcept>
#include <string>

namespace khr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficient arithmetic left the range of the coefficient type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// gcd(m, n) > 1: the closure is a torus link, which this library does not handle.
class LinksUnsupported : public Error {
 public:
  LinksUnsupported(int m, int n, int g)
      : Error("(" + std::to_string(m) + "," + std::to_string(n) + ") has gcd " +
              std::to_string(g) +
              " and closes up to a torus link; only torus knots (coprime m, n) are supported"),
        m_(m),
        n_(n) {}

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }

 private:
  int m_;
  int n_;
};

// Two intervals meeting the sweep line at the same lattice point.
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant. Seeing one means a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

#define KHR_ASSERT(cond, msg)                                                            \
  do {                                                                                   \
    if (!(cond)) throw ::khr::InternalError(std::string(msg) + " [" #cond "]");          \
  } while (0)

}  // namespace khr
