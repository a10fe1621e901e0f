#include "qck/hypoplactic.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <limits>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "qck/errors.hpp"

namespace qck {

std::vector<std::pair<Word, Word>> classical_relations(int n) {
  std::vector<std::pair<Word, Word>> rel;
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y) {
      rel.push_back({{x, y, x}, {x, x, y}});
      rel.push_back({{x, y, y}, {y, x, y}});
      for (int z = y + 1; z <= n; ++z) {
        rel.push_back({{y, z, x}, {y, x, z}});
        rel.push_back({{x, z, y}, {z, x, y}});
      }
    }
  for (int t = 1; t <= n; ++t)
    for (int x = t; x <= n; ++x)
      for (int y = x + 1; y <= n; ++y)
        for (int z = y; z <= n; ++z) rel.push_back({{x, z, t, y}, {z, x, y, t}});
  for (int t = 1; t <= n; ++t)
    for (int x = t + 1; x <= n; ++x)
      for (int y = x; y <= n; ++y)
        for (int z = y + 1; z <= n; ++z) rel.push_back({{y, t, z, x}, {t, y, x, z}});
  return rel;
}

bool classical_congruent_A(int n, const Word& u, const Word& v) {
  if (u == v) return true;
  if (u.size() != v.size()) return false;
  Word su(u), sv(v);
  std::sort(su.begin(), su.end());
  std::sort(sv.begin(), sv.end());
  if (su != sv) return false;

  // every relation is applied in both directions
  std::unordered_map<Word, std::vector<Word>, WordHash> step;
  for (auto& [l, r] : classical_relations(n)) {
    step[l].push_back(r);
    step[r].push_back(l);
  }
  // the relations keep length and content, so this search stays among
  // the anagrams of u and terminates
  std::unordered_set<Word, WordHash> seen{u};
  std::deque<Word> queue{u};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t len : {3u, 4u}) {
      for (std::size_t p = 0; p + len <= w.size(); ++p) {
        Word window(w.begin() + p, w.begin() + p + len);
        auto it = step.find(window);
        if (it == step.end()) continue;
        for (const Word& rep : it->second) {
          Word nw(w);
          std::copy(rep.begin(), rep.end(), nw.begin() + p);
          if (nw == v) return true;
          if (seen.insert(nw).second) queue.push_back(std::move(nw));
        }
      }
    }
  }
  return false;
}

bool is_commutative(const Alphabet& a, const Word& w) { return word_class(a, w).isolated; }

bool is_idempotent(const Alphabet& a, const Word& w) {
  if (!word_class(a, w).isolated) return false;
  Weight z = word_wt(a, w);
  return std::all_of(z.begin(), z.end(), [](int x) { return x == 0; });
}

InvSignature inv_signature(const Alphabet& a, const Word& w) {
  InvSignature d;
  for (int i = 1; i <= a.index_count(); ++i) d.push_back(has_inversion(a, w, i) ? 1 : 0);
  return d;
}

bool valid_commutative_pair(int n, const Weight& lambda, const InvSignature& delta) {
  if (static_cast<int>(lambda.size()) != n || static_cast<int>(delta.size()) != n) return false;
  for (int d : delta)
    if (d != 0 && d != 1) return false;
  auto D = [&](int i) { return delta[i - 1] == 1; };
  for (int i = 1; i <= n; ++i) {
    if (lambda[i - 1] != 0 && (!D(i) || (i >= 2 && !D(i - 1)))) return false;
    if (i >= 2 && D(i) && !D(i - 1) && !(i <= n - 1 && D(i + 1))) return false;
  }
  return true;
}

Word commutative_witness(int n, const Weight& lambda, const InvSignature& delta) {
  if (n < 2) throw RankTooSmall("type C needs n >= 2");
  if (!valid_commutative_pair(n, lambda, delta))
    throw InvalidPair("(" + to_string(lambda) + ", " + to_string(Weight(delta)) + ") is not a commutative pair");
  Word w;
  if (delta[0] == 1) w.insert(w.end(), {1, -1});
  for (int i = 2; i <= n; ++i)
    if (delta[i - 2] == 1 && delta[i - 1] == 1) w.insert(w.end(), {i, -i, i, -i});
  for (int i = 1; i <= n; ++i) w.insert(w.end(), std::max(lambda[i - 1], 0), i);
  for (int i = n; i >= 1; --i) w.insert(w.end(), std::max(-lambda[i - 1], 0), -i);
  return w;
}

Word highest_weight_witness(int n, const Weight& lambda) {
  Word w;
  for (int i = 1; i <= n; ++i) w.insert(w.end(), lambda[i - 1] >= 0 ? lambda[i - 1] + 1 : 1, i);
  for (int i = n; i >= 1; --i) w.insert(w.end(), lambda[i - 1] >= 0 ? 1 : 1 - lambda[i - 1], -i);
  return w;
}

std::string to_string(C2Family f) {
  switch (f) {
    case C2Family::Power1: return "Power1";
    case C2Family::Family2121: return "Family2121";
    case C2Family::Family12bar1: return "Family12bar1";
    default: return "Family12bar2bar1";
  }
}

std::string short_name(C2Family f) {
  switch (f) {
    case C2Family::Power1: return "1";
    case C2Family::Family2121: return "2121";
    case C2Family::Family12bar1: return "12bar1";
    default: return "12bar2bar1";
  }
}

Word c2_representative(C2Family f, const std::vector<int>& m) {
  Word w;
  auto put = [&](int count, int letter) { w.insert(w.end(), count, letter); };
  switch (f) {
    case C2Family::Power1:
      put(m.at(0), 1);
      break;
    case C2Family::Family2121:
      put(m.at(0), 2), put(m.at(1) + 1, 1), put(m.at(2) + 1, 2), put(m.at(3), 1);
      break;
    case C2Family::Family12bar1:
      put(m.at(0) + 1, 1), put(m.at(1), 2), put(m.at(2) + 1, -1);
      break;
    case C2Family::Family12bar2bar1:
      put(m.at(0) + 1, 1), put(m.at(1) + 1, 2), put(m.at(2) + 1, -2), put(m.at(3) + 1, -1);
      break;
  }
  return w;
}

bool c2_params_valid(C2Family f, const std::vector<int>& m) {
  static const std::size_t arity[] = {1, 4, 3, 4};
  if (m.size() != arity[static_cast<int>(f)]) return false;
  if (std::any_of(m.begin(), m.end(), [](int x) { return x < 0; })) return false;
  if (f == C2Family::Family12bar1) return m[0] == 0 || m[2] == 0;
  if (f == C2Family::Family12bar2bar1) return (m[0] == 0 || m[3] == 0) && (m[1] == 0 || m[2] == 0);
  return true;
}

std::vector<int> collapse_12(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  while (lo < hi && w[lo] == 2) ++lo;
  while (hi > lo && w[hi - 1] == 1) --hi;
  int ones = 0, twos = 0;
  for (std::size_t p = lo; p < hi; ++p) (w[p] == 1 ? ones : twos)++;
  return {static_cast<int>(lo), ones, twos, static_cast<int>(w.size() - hi)};
}

namespace {

int count(const Word& w, int letter) { return static_cast<int>(std::count(w.begin(), w.end(), letter)); }

// exponents of a family-(iii)/(iv) block from the letter and its bar
std::pair<int, int> split(int plain, int barred) {
  return plain >= barred ? std::pair{plain - barred, 0} : std::pair{0, barred - plain};
}

// is there a subsequence matching the pattern?
bool has_subsequence(const Word& w, const Word& pattern) {
  std::size_t k = 0;
  for (int c : w)
    if (k < pattern.size() && c == pattern[k]) ++k;
  return k == pattern.size();
}

std::optional<std::pair<C2Family, std::vector<int>>> family_of_highest(const Word& h) {
  if (count(h, -2) > 0) {
    auto [m1, m4] = split(count(h, 1), count(h, -1));
    auto [m2, m3] = split(count(h, 2), count(h, -2));
    return std::pair{C2Family::Family12bar2bar1, std::vector<int>{m1, m2, m3, m4}};
  }
  if (count(h, -1) > 0) {
    if (has_subsequence(h, {1, -1}) || has_subsequence(h, {2, -1, 1, 2})) {
      auto [m1, m3] = split(count(h, 1), count(h, -1));
      return std::pair{C2Family::Family12bar1, std::vector<int>{m1, count(h, 2), m3}};
    }
    std::size_t p = 0;
    while (p < h.size() && h[p] == -1) ++p;
    Word u(h.begin() + p, h.end());
    if (count(u, -1) > 0) return std::nullopt;
    auto q = collapse_12(u);
    if (q[1] == 0 || q[2] == 0) return std::nullopt;
    return std::pair{C2Family::Family2121, std::vector<int>{static_cast<int>(p) + q[0], q[1] - 1, q[2] - 1, q[3]}};
  }
  if (count(h, 2) > 0) {
    auto q = collapse_12(h);
    if (q[1] == 0 || q[2] == 0) return std::nullopt;
    return std::pair{C2Family::Family2121, std::vector<int>{q[0], q[1] - 1, q[2] - 1, q[3]}};
  }
  return std::pair{C2Family::Power1, std::vector<int>{static_cast<int>(h.size())}};
}

// the vertex of the representative's component that is congruent to w
std::optional<Word> pinned_vertex(const Alphabet& a, const Word& w, const Word& rep) {
  const Weight target = word_wt(a, w);
  Component c = explore(a, rep);
  for (int k = 0; k < c.size(); ++k)
    if (c.weights[k] == target && congruent(a, w, c.vertices[k])) return c.vertices[k];
  return std::nullopt;
}

}  // namespace

std::vector<C2NormalForm> c2_candidates_matching(const Word& w) {
  const Alphabet a = Alphabet::C(2);
  Component cw = explore(a, w);
  std::vector<Weight> hw;
  for (const auto& h : hw_words(cw)) hw.push_back(word_wt(a, h));
  auto wanted = [&](const Word& rep) { return std::find(hw.begin(), hw.end(), word_wt(a, rep)) != hw.end(); };

  std::vector<C2NormalForm> out;
  auto consider = [&](C2Family f, std::vector<int> m) {
    if (!c2_params_valid(f, m)) return;
    Word rep = c2_representative(f, m);
    if (!wanted(rep)) return;
    if (auto r = pinned_vertex(a, w, rep)) out.push_back({f, std::move(m), rep, *r});
  };
  const int L = static_cast<int>(w.size());
  for (int m = 0; m <= L; ++m) consider(C2Family::Power1, {m});
  for (int m1 = 0; m1 <= L; ++m1)
    for (int m2 = 0; m2 <= L; ++m2)
      for (int m3 = 0; m3 <= L; ++m3) {
        consider(C2Family::Family12bar1, {m1, m2, m3});
        for (int m4 = 0; m4 <= L; ++m4) {
          consider(C2Family::Family2121, {m1, m2, m3, m4});
          consider(C2Family::Family12bar2bar1, {m1, m2, m3, m4});
        }
      }
  return out;
}

std::optional<C2NormalForm> normal_form_C2_by_cases(const Word& w) {
  const Alphabet a = Alphabet::C(2);
  Word h = w;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= 2 && !moved; ++i)
      if (auto up = word_e(a, h, i)) {
        h = std::move(*up);
        moved = true;
      }
  }
  auto fam = family_of_highest(h);
  if (!fam || !c2_params_valid(fam->first, fam->second)) return std::nullopt;
  Word rep = c2_representative(fam->first, fam->second);
  auto r = pinned_vertex(a, w, rep);
  if (!r) return std::nullopt;
  return C2NormalForm{fam->first, fam->second, rep, *r};
}

C2NormalForm normal_form_C2(const Word& w) {
  for (int c : w)
    if (c == 0 || c < -2 || c > 2) throw ParseError("letter " + std::to_string(c) + " is not in C_2");
  if (auto nf = normal_form_C2_by_cases(w)) return *nf;
  // the case analysis did not place w; search the candidate families
  auto found = c2_candidates_matching(w);
  if (found.empty()) throw Error("no C2 normal form found for " + format_word(w));
  return found.front();
}

nlohmann::json to_json(const C2NormalForm& nf) {
  return {{"family", to_string(nf.family)}, {"params", nf.params}, {"representative", nf.representative},
          {"word", nf.word}};
}

Word substitute(const std::string& pattern, const Substitution& s) {
  Word w;
  for (char c : pattern) {
    const Word& part = s.at(c);
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

std::optional<Substitution> check_identity(const std::string& lhs, const std::string& rhs,
                                           const Alphabet& a, int max_len, int jobs,
                                           std::size_t budget) {
  std::string vars;
  for (char c : lhs + rhs)
    if (vars.find(c) == std::string::npos) vars += c;
  const std::vector<Word> pool = all_words_upto(a, max_len);
  const std::size_t k = vars.size();
  std::size_t total = 1;
  for (std::size_t v = 0; v < k; ++v) {
    if (total > std::numeric_limits<std::size_t>::max() / pool.size()) throw BudgetExceeded("too many substitutions");
    total *= pool.size();
  }
  auto decode = [&](std::size_t t) {
    Substitution s;
    for (std::size_t v = k; v-- > 0;) {
      s[vars[v]] = pool[t % pool.size()];
      t /= pool.size();
    }
    return s;
  };
  auto fails = [&](std::size_t t) {
    Substitution s = decode(t);
    Word l = substitute(lhs, s), r = substitute(rhs, s);
    return l != r && !congruent(a, l, r, budget);
  };

  jobs = std::max(1, jobs);
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{none};
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](int id) {
    try {
      // strided so every worker sees early indices; stops past the best hit
      for (std::size_t t = id; t < total && t < best.load(); t += jobs) {
        if (fails(t)) {
          std::size_t cur = best.load();
          while (t < cur && !best.compare_exchange_weak(cur, t)) {
          }
          return;
        }
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool_threads;
    for (int id = 0; id < jobs; ++id) pool_threads.emplace_back(worker, id);
    for (auto& th : pool_threads) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  if (best.load() == none) return std::nullopt;
  return decode(best.load());
}

Word embed_A_to_C(const Word& w, int n) {
  if (n < 3) throw RankTooSmall("the A to C embedding needs n >= 3");
  for (int c : w)
    if (c < 1 || c > n - 1) throw InvalidData("letter " + std::to_string(c) + " is not in A_" + std::to_string(n - 1));
  if (w.empty()) return {};
  Word r(w);
  r.insert(r.end(), {n, -n, n, -n});
  return r;
}

Word embed_C_to_C(const Word& w, int n) {
  if (n < 3) throw RankTooSmall("the C to C embedding needs n >= 3");
  Word r;
  for (int c : w) {
    if (c == 0 || c < -(n - 1) || c > n - 1)
      throw InvalidData("letter " + std::to_string(c) + " is not in C_" + std::to_string(n - 1));
    r.push_back(c > 0 ? c + 1 : c - 1);
    r.insert(r.end(), {1, -1});
  }
  return r;
}

}  // namespace qck
