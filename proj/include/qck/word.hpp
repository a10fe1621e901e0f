#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qck/qc_core.hpp"
#include "qck/qtensor.hpp"

namespace qck {

// Letters of the standard alphabets are signed integers (k, and -k for the
// barred letter in type C). Letters of an explicit table are element
// positions 0..N-1.
using Word = std::vector<int>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

class Alphabet {
 public:
  enum class Kind { A, C, Explicit };

  static Alphabet A(int n);
  static Alphabet C(int n);
  static Alphabet of(RootKind kind, int n);
  // throws NotSeminormal
  static Alphabet from_table(QuasiCrystalTable t);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  bool standard() const { return kind_ != Kind::Explicit; }
  int index_count() const { return table_->index_count(); }
  const RootData& root() const { return table_->root; }
  const QuasiCrystalTable& table() const { return *table_; }

  const std::vector<int>& letters() const { return letters_; }  // in alphabet order
  bool contains(int letter) const;
  int position(int letter) const;  // row of the letter in table()
  int letter_at(int position) const { return letters_[position]; }
  const Weight& letter_wt(int letter) const { return table_->wt[position(letter)]; }

  bool operator==(const Alphabet& o) const { return kind_ == o.kind_ && n_ == o.n_ && table_ == o.table_; }

 private:
  Kind kind_ = Kind::A;
  int n_ = 0;
  std::shared_ptr<const QuasiCrystalTable> table_;
  std::vector<int> letters_;
};

std::string kind_name(const Alphabet& a);  // "A", "C" or "explicit"

// What index i does to a word: its signature and the letter positions that
// e_i and f_i would rewrite.
struct Action {
  Sig sig;
  std::optional<std::size_t> e_pos, f_pos;
};

Action word_action(const Alphabet& a, const Word& w, int i);
// the signature fold over the alphabet table, valid for any seminormal alphabet
Action word_action_generic(const Alphabet& a, const Word& w, int i);

Weight word_wt(const Alphabet& a, const Word& w);
bool has_inversion(const Alphabet& a, const Word& w, int i);  // standard alphabets only
Sig word_sig(const Alphabet& a, const Word& w, int i);
ExtInt word_eps(const Alphabet& a, const Word& w, int i);
ExtInt word_phi(const Alphabet& a, const Word& w, int i);
std::optional<Word> word_e(const Alphabet& a, const Word& w, int i);
std::optional<Word> word_f(const Alphabet& a, const Word& w, int i);
std::optional<Word> word_e_generic(const Alphabet& a, const Word& w, int i);
std::optional<Word> word_f_generic(const Alphabet& a, const Word& w, int i);

// apply a computed action; nullopt when the operator is undefined
std::optional<Word> apply_e(const Alphabet& a, const Word& w, int i, const Action& act);
std::optional<Word> apply_f(const Alphabet& a, const Word& w, int i, const Action& act);

Word bar(const Alphabet& a, const Word& w);

struct WordClass {
  bool highest_weight = false;
  bool lowest_weight = false;
  bool isolated = false;
};
WordClass word_class(const Alphabet& a, const Word& w);

// "2 -1 1" or "2,-1,1"; empty string is the empty word
Word parse_word(const Alphabet& a, std::string_view text);
std::string format_word(const Word& w);               // "2 -1 1"
std::string pretty_word(const Alphabet& a, const Word& w);  // overbars for type C

// every word of length exactly len over the alphabet, in lexicographic
// alphabet order
std::vector<Word> all_words(const Alphabet& a, int len);
std::vector<Word> all_words_upto(const Alphabet& a, int max_len);

}  // namespace qck
