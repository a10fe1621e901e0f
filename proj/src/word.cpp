#include "qck/word.hpp"

#include <algorithm>
#include <charconv>

#include "qck/errors.hpp"

namespace qck {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size() * 0x9e3779b97f4a7c15ULL;
  for (int x : w) h = (h ^ static_cast<std::size_t>(x + 64)) * 0x100000001b3ULL;
  return h;
}

Alphabet Alphabet::A(int n) {
  Alphabet a;
  a.kind_ = Kind::A;
  a.n_ = n;
  a.table_ = std::make_shared<const QuasiCrystalTable>(standard_A(n));
  for (int k = 1; k <= n; ++k) a.letters_.push_back(k);
  return a;
}

Alphabet Alphabet::C(int n) {
  Alphabet a;
  a.kind_ = Kind::C;
  a.n_ = n;
  a.table_ = std::make_shared<const QuasiCrystalTable>(standard_C(n));
  for (int k = 1; k <= n; ++k) a.letters_.push_back(k);
  for (int k = n; k >= 1; --k) a.letters_.push_back(-k);
  return a;
}

Alphabet Alphabet::of(RootKind kind, int n) {
  if (kind == RootKind::A) return A(n);
  if (kind == RootKind::C) return C(n);
  throw UnsupportedAlphabet("explicit alphabets come from a table");
}

Alphabet Alphabet::from_table(QuasiCrystalTable t) {
  if (!validate_quasicrystal(t).ok()) throw InvalidData("alphabet table is not a quasi-crystal");
  if (!is_seminormal(t)) throw NotSeminormal("alphabet table is not seminormal");
  Alphabet a;
  a.kind_ = Kind::Explicit;
  a.n_ = t.size();
  for (int k = 0; k < t.size(); ++k) a.letters_.push_back(k);
  a.table_ = std::make_shared<const QuasiCrystalTable>(std::move(t));
  return a;
}

bool Alphabet::contains(int letter) const {
  switch (kind_) {
    case Kind::A: return letter >= 1 && letter <= n_;
    case Kind::C: return letter != 0 && letter >= -n_ && letter <= n_;
    default: return letter >= 0 && letter < n_;
  }
}

int Alphabet::position(int letter) const {
  if (!contains(letter)) throw ParseError("letter " + std::to_string(letter) + " is not in the alphabet");
  switch (kind_) {
    case Kind::A: return letter - 1;
    case Kind::C: return letter > 0 ? letter - 1 : 2 * n_ + letter;
    default: return letter;
  }
}

std::string kind_name(const Alphabet& a) {
  switch (a.kind()) {
    case Alphabet::Kind::A: return "A";
    case Alphabet::Kind::C: return "C";
    default: return "explicit";
  }
}

namespace {

void check_index(const Alphabet& a, int i) {
  if (i < 1 || i > a.index_count()) throw IndexOutOfRange("index " + std::to_string(i));
}

// One left-to-right pass. x-letters contribute +, y-letters contribute -;
// an x before a y is an inversion and kills the signature.
Action scan(const Alphabet& a, const Word& w, int i) {
  int x1, x2 = 0, y1, y2 = 0;  // 0 never occurs as a letter
  if (a.kind() == Alphabet::Kind::A) {
    x1 = i;
    y1 = i + 1;
  } else {
    x1 = i;
    y2 = -i;
    if (i < a.n()) {
      x2 = -(i + 1);
      y1 = i + 1;
    } else {
      y1 = 0;
    }
  }
  Action act;
  int nx = 0, ny = 0;
  bool seen_x = false, inversion = false;
  for (std::size_t p = 0; p < w.size(); ++p) {
    const int c = w[p];
    if (c != 0 && (c == y1 || c == y2)) {
      if (seen_x) inversion = true;
      ++ny;
      act.e_pos = p;
    } else if (c != 0 && (c == x1 || c == x2)) {
      if (!seen_x) act.f_pos = p;
      seen_x = true;
      ++nx;
    }
  }
  if (inversion) return {Sig::Zero(), std::nullopt, std::nullopt};
  act.sig = Sig::Pair(ny, nx);
  return act;
}

}  // namespace

Action word_action_generic(const Alphabet& a, const Word& w, int i) {
  check_index(a, i);
  std::vector<Sig> sigs;
  sigs.reserve(w.size());
  for (int c : w) sigs.push_back(sig_of_unchecked(a.table(), a.position(c), i));
  MFold m = mfold(sigs);
  return {m.sig, m.e_pos, m.f_pos};
}

Action word_action(const Alphabet& a, const Word& w, int i) {
  if (!a.standard()) return word_action_generic(a, w, i);
  check_index(a, i);
  return scan(a, w, i);
}

Weight word_wt(const Alphabet& a, const Word& w) {
  Weight s = a.root().zero();
  for (int c : w) {
    const Weight& lw = a.letter_wt(c);
    for (std::size_t k = 0; k < s.size(); ++k) s[k] += lw[k];
  }
  return s;
}

bool has_inversion(const Alphabet& a, const Word& w, int i) {
  if (!a.standard()) throw UnsupportedAlphabet("inversions are defined for the standard alphabets only");
  check_index(a, i);
  return scan(a, w, i).sig.zero;
}

Sig word_sig(const Alphabet& a, const Word& w, int i) { return word_action(a, w, i).sig; }
ExtInt word_eps(const Alphabet& a, const Word& w, int i) { return word_sig(a, w, i).eps(); }
ExtInt word_phi(const Alphabet& a, const Word& w, int i) { return word_sig(a, w, i).phi(); }

std::optional<Word> apply_e(const Alphabet& a, const Word& w, int i, const Action& act) {
  if (act.sig.zero || !act.e_pos) return std::nullopt;
  Word r(w);
  int& c = r[*act.e_pos];
  c = a.letter_at(a.table().e_at(a.position(c), i));
  return r;
}

std::optional<Word> apply_f(const Alphabet& a, const Word& w, int i, const Action& act) {
  if (act.sig.zero || !act.f_pos) return std::nullopt;
  Word r(w);
  int& c = r[*act.f_pos];
  c = a.letter_at(a.table().f_at(a.position(c), i));
  return r;
}

std::optional<Word> word_e(const Alphabet& a, const Word& w, int i) {
  return apply_e(a, w, i, word_action(a, w, i));
}
std::optional<Word> word_f(const Alphabet& a, const Word& w, int i) {
  return apply_f(a, w, i, word_action(a, w, i));
}
std::optional<Word> word_e_generic(const Alphabet& a, const Word& w, int i) {
  return apply_e(a, w, i, word_action_generic(a, w, i));
}
std::optional<Word> word_f_generic(const Alphabet& a, const Word& w, int i) {
  return apply_f(a, w, i, word_action_generic(a, w, i));
}

Word bar(const Alphabet& a, const Word& w) {
  if (a.kind() != Alphabet::Kind::C) throw UnsupportedAlphabet("bar needs a type C alphabet");
  Word r(w.rbegin(), w.rend());
  for (int& c : r) c = -c;
  return r;
}

WordClass word_class(const Alphabet& a, const Word& w) {
  WordClass c{true, true, false};
  for (int i = 1; i <= a.index_count(); ++i) {
    Action act = word_action(a, w, i);
    if (!act.sig.zero) {
      if (act.e_pos) c.highest_weight = false;
      if (act.f_pos) c.lowest_weight = false;
    }
  }
  c.isolated = c.highest_weight && c.lowest_weight;
  return c;
}

Word parse_word(const Alphabet& a, std::string_view text) {
  Word w;
  std::size_t p = 0;
  while (p < text.size()) {
    char ch = text[p];
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n') {
      ++p;
      continue;
    }
    std::size_t q = p;
    if (text[q] == '-' || text[q] == '+') ++q;
    while (q < text.size() && text[q] >= '0' && text[q] <= '9') ++q;
    int v = 0;
    auto start = text.data() + p + (text[p] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(start, text.data() + q, v);
    if (ec != std::errc() || ptr != text.data() + q || q == p)
      throw ParseError("cannot parse word '" + std::string(text) + "'");
    if (!a.contains(v))
      throw ParseError("letter " + std::to_string(v) + " is not in the " + kind_name(a) + " alphabet");
    w.push_back(v);
    p = q;
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(w[k]);
  }
  return s;
}

std::string pretty_word(const Alphabet& a, const Word& w) {
  if (w.empty()) return "ε";
  std::string s;
  const bool spaced = a.n() >= 10 || !a.standard();
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (spaced && k) s += ' ';
    if (!a.standard()) {
      s += a.table().elements[w[k]];
    } else if (w[k] < 0) {
      s += std::to_string(-w[k]) + "̅";
    } else {
      s += std::to_string(w[k]);
    }
  }
  return s;
}

std::vector<Word> all_words(const Alphabet& a, int len) {
  const auto& L = a.letters();
  std::vector<Word> out;
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    Word w(len);
    for (int k = 0; k < len; ++k) w[k] = L[idx[k]];
    out.push_back(std::move(w));
    int k = len - 1;
    while (k >= 0 && ++idx[k] == L.size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

std::vector<Word> all_words_upto(const Alphabet& a, int max_len) {
  std::vector<Word> out;
  for (int len = 0; len <= max_len; ++len) {
    auto ws = all_words(a, len);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

}  // namespace qck
