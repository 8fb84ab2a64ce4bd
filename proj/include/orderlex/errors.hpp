#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orderlex {

/// Malformed textual input (words, polynomials, permutations, manifests).
/// Line and column are 1-based; zero means "not applicable".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An automorphism, homomorphism or representation failed its consistency check.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A homomorphism/representation selector did not resolve.
class SelectorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orderlex
