#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qck/rootsys.hpp"

namespace qck {

class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : v_(v) {}  // NOLINT: integers convert implicitly
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  constexpr Kind kind() const { return k_; }
  constexpr bool finite() const { return k_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return k_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return k_ == Kind::NegInf; }
  std::int64_t value() const;  // throws on infinities

  friend ExtInt operator+(ExtInt a, ExtInt b);
  friend ExtInt operator-(ExtInt a, std::int64_t b) { return a + ExtInt(-b); }
  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.k_ == b.k_ && (a.k_ != Kind::Finite || a.v_ == b.v_);
  }
  friend constexpr auto operator<=>(ExtInt a, ExtInt b) {
    if (a.k_ != b.k_) return a.k_ <=> b.k_;
    if (a.k_ != Kind::Finite) return std::strong_ordering::equal;
    return a.v_ <=> b.v_;
  }

 private:
  constexpr explicit ExtInt(Kind k) : k_(k) {}
  Kind k_ = Kind::Finite;
  std::int64_t v_ = 0;
};

ExtInt max(ExtInt a, ExtInt b);
std::string to_string(ExtInt x);
nlohmann::json to_json(ExtInt x);
ExtInt extint_from_json(const nlohmann::json& j);

inline constexpr int kUndef = -1;

// A finite quasi-crystal given by explicit tables. Element ids are opaque
// strings; everything else is indexed by element position. Per-index
// vectors are 0-based internally; accessors take the 1-based index i.
struct QuasiCrystalTable {
  RootData root;
  std::vector<std::string> elements;
  std::vector<Weight> wt;
  std::vector<std::vector<ExtInt>> eps, phi;
  std::vector<std::vector<int>> e, f;  // kUndef where undefined

  QuasiCrystalTable() : root(RootData::type_A(2)) {}
  explicit QuasiCrystalTable(RootData rd) : root(std::move(rd)) {}

  int size() const { return static_cast<int>(elements.size()); }
  int index_count() const { return root.index_count(); }
  int index_of(const std::string& id) const;  // throws UnknownElement
  int add(const std::string& id, Weight w);    // undefined operators, zero eps/phi

  ExtInt eps_at(int x, int i) const { return eps[x][i - 1]; }
  ExtInt phi_at(int x, int i) const { return phi[x][i - 1]; }
  int e_at(int x, int i) const { return e[x][i - 1]; }
  int f_at(int x, int i) const { return f[x][i - 1]; }

  // structural sanity: table shapes and target ranges (not the axioms)
  void check_shape() const;
};

struct QcViolation {
  int clause;  // 1..6
  std::string element;
  int index;
  std::string detail;
};

struct QcReport {
  std::vector<QcViolation> violations;
  bool ok() const { return violations.empty(); }
  bool has_clause(int c) const;
  bool has(int c, const std::string& element, int index) const;
};

QcReport validate_quasicrystal(const QuasiCrystalTable& t);
bool is_seminormal(const QuasiCrystalTable& t);

QuasiCrystalTable standard_A(int n);
QuasiCrystalTable standard_C(int n);
QuasiCrystalTable fixture_A3_squared();
QuasiCrystalTable fixture_Q2();

// ids of the standard letters: "k" for k and "-k" for the barred letter
std::string letter_id(int letter);

struct ElementClass {
  bool highest_weight = false;
  bool lowest_weight = false;
  bool isolated = false;
};

ElementClass element_class(const QuasiCrystalTable& t, int x);
ElementClass element_class(const QuasiCrystalTable& t, const std::string& x);

struct HomCheck {
  bool is_hom = false;
  bool is_iso = false;
  std::string reason;  // first failure, empty when is_iso
};

// map[x] is the image of src element x, or kUndef
HomCheck check_homomorphism(const QuasiCrystalTable& src, const QuasiCrystalTable& dst,
                            const std::vector<int>& map);
HomCheck check_homomorphism(const QuasiCrystalTable& src, const QuasiCrystalTable& dst,
                            const std::map<std::string, std::string>& map);

nlohmann::json to_json(const QuasiCrystalTable& t);
QuasiCrystalTable table_from_json(const nlohmann::json& j);

}  // namespace qck
