#pragma once

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace allsat {

// Variables are 1-based, matching DIMACS numbering. Variable 0 is reserved
// so that a default-constructed Lit is recognizably invalid.
using Var = int;

// A literal packs a variable and a sign into one word: var << 1 | sign.
// code() doubles as a dense index for per-literal tables (watch lists).
class Lit {
 public:
  Lit() = default;

  static Lit positive(Var v) {
    assert(v > 0);
    return Lit(static_cast<uint32_t>(v) << 1);
  }

  static Lit negative(Var v) {
    assert(v > 0);
    return Lit((static_cast<uint32_t>(v) << 1) | 1u);
  }

  static Lit from_dimacs(int n) {
    assert(n != 0);
    return n > 0 ? positive(n) : negative(-n);
  }

  Var var() const { return static_cast<Var>(code_ >> 1); }
  bool is_negative() const { return (code_ & 1u) != 0; }
  bool valid() const { return code_ >= 2; }

  Lit operator~() const { return Lit(code_ ^ 1u); }

  int to_dimacs() const { return is_negative() ? -var() : var(); }
  uint32_t code() const { return code_; }

  friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend bool operator!=(Lit a, Lit b) { return a.code_ != b.code_; }
  friend bool operator<(Lit a, Lit b) { return a.code_ < b.code_; }

 private:
  explicit Lit(uint32_t code) : code_(code) {}
  uint32_t code_ = 0;
};

inline std::string to_string(Lit l) {
  return l.valid() ? std::to_string(l.to_dimacs()) : std::string("<nolit>");
}

// Truth value of a variable (or literal) under the current assignment.
enum class Value : uint8_t { False = 0, True = 1, Unassigned = 2 };

inline Value value_of(bool b) { return b ? Value::True : Value::False; }

}  // namespace allsat

template <>
struct std::hash<allsat::Lit> {
  size_t operator()(allsat::Lit l) const noexcept {
    return std::hash<uint32_t>()(l.code());
  }
};
