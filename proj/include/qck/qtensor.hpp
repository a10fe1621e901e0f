#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qck/qc_core.hpp"

namespace qck {

// An element of Z_0 = <-, + | +- = 0>: zero, or -^minus +^plus.
struct Sig {
  bool zero = false;
  int minus = 0;
  int plus = 0;

  static constexpr Sig Zero() { return {true, 0, 0}; }
  static constexpr Sig Pair(int a, int b) { return {false, a, b}; }

  ExtInt eps() const { return zero ? ExtInt::pos_inf() : ExtInt(minus); }
  ExtInt phi() const { return zero ? ExtInt::pos_inf() : ExtInt(plus); }

  friend bool operator==(const Sig& a, const Sig& b) {
    return a.zero == b.zero && (a.zero || (a.minus == b.minus && a.plus == b.plus));
  }
};

Sig sig_mul(const Sig& s, const Sig& t);
std::string to_string(const Sig& s);

// throws NotSeminormal; sig_of_unchecked skips the table-wide check
Sig sig_of(const QuasiCrystalTable& t, int x, int i);
Sig sig_of_unchecked(const QuasiCrystalTable& t, int x, int i);

// Element (x,y) sits at position x * t2.size() + y with id "(x,y)".
QuasiCrystalTable qtensor(const QuasiCrystalTable& t1, const QuasiCrystalTable& t2);

// The m-fold closed form on a sequence of letter signatures: which factor
// e_i and f_i act on (0-based), or nothing.
struct MFold {
  Sig sig;
  std::optional<std::size_t> e_pos, f_pos;
};
MFold mfold(const std::vector<Sig>& letters);

}  // namespace qck
