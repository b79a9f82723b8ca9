#pragma once

#include <stdexcept>
#include <string>

namespace milnorhp {

// Invalid argument outside an operation's documented domain.
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A division that was required to be exact left a remainder. Signals a
// formula or implementation bug upstream, never bad user input.
class inexact_division_error : public std::runtime_error {
public:
  explicit inexact_division_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A triple (a,b,d) that none (or more than one) of the known subcases covers.
class classification_gap_error : public std::runtime_error {
public:
  classification_gap_error(long a, long b, long d)
      : std::runtime_error("no unique subcase covers (a,b,d) = (" +
                           std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(d) + ")"),
        a(a), b(b), d(d) {}
  long a, b, d;
};

// A series truncation window too short to certify stabilization, or a
// series difference that provably never stabilizes.
class truncation_error : public std::runtime_error {
public:
  explicit truncation_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace milnorhp
