#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qck/qgraph.hpp"
#include "qck/word.hpp"

namespace qck::testing {

inline Word W(const Alphabet& a, const std::string& s) { return parse_word(a, s); }

inline std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* s = std::getenv("QCK_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

inline Word random_word(const Alphabet& a, int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, a.letters().size() - 1);
  Word w(len);
  for (int& c : w) c = a.letters()[pick(rng)];
  return w;
}

// Rooted isomorphism of two explored components by plain backtracking over
// vertex assignments. Knows nothing about words or operators; only the
// labelled graphs, weights, loops and signatures.
inline bool brute_force_isomorphic(const Component& A, const Component& B) {
  const int n = A.size();
  if (n != B.size() || A.edges.size() != B.edges.size() || A.loops.size() != B.loops.size()) return false;
  auto profiles = [](const Component& c) {
    std::vector<std::vector<int>> p(c.size());
    for (const auto& e : c.edges) {
      p[e.from].push_back(100 + e.label);
      p[e.to].push_back(200 + e.label);
    }
    for (const auto& l : c.loops) p[l.vertex].push_back(300 + l.label);
    for (auto& v : p) std::sort(v.begin(), v.end());
    return p;
  };
  const auto pa = profiles(A), pb = profiles(B);
  auto same_vertex = [&](int a, int b) {
    if (A.weights[a] != B.weights[b] || pa[a] != pb[b]) return false;
    for (std::size_t i = 0; i < A.sigs[a].size(); ++i)
      if (!(A.sigs[a][i] == B.sigs[b][i])) return false;
    return true;
  };
  std::map<Weight, std::vector<int>> by_weight;
  for (int b = 0; b < n; ++b) by_weight[B.weights[b]].push_back(b);
  std::vector<std::vector<Edge>> incident(n);
  for (const auto& e : A.edges) {
    incident[e.from].push_back(e);
    if (e.to != e.from) incident[e.to].push_back(e);
  }
  std::set<std::tuple<int, int, int>> eb;
  for (const auto& e : B.edges) eb.insert({e.from, e.to, e.label});

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int k) -> bool {
    if (k == n) return true;
    auto it = by_weight.find(A.weights[k]);
    if (it == by_weight.end()) return false;
    for (int b : it->second) {
      // vertex 0 is the root of each component
      if (used[b] || (k == 0 && b != 0) || !same_vertex(k, b)) continue;
      image[k] = b;
      bool ok = true;
      for (const auto& e : incident[k]) {
        if (e.from > k || e.to > k) continue;
        if (!eb.count({image[e.from], image[e.to], e.label})) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[b] = true;
        if (place(k + 1)) return true;
        used[b] = false;
      }
      image[k] = -1;
    }
    return false;
  };
  return place(0);
}

// A component as an explicit table; ids are prefix + the word.
inline QuasiCrystalTable component_table(const Component& c, const std::string& prefix = "") {
  QuasiCrystalTable t(c.alphabet.root());
  for (int k = 0; k < c.size(); ++k) {
    t.add(prefix + format_word(c.vertices[k]), c.weights[k]);
    for (int i = 1; i <= t.index_count(); ++i) {
      t.eps[k][i - 1] = c.sigs[k][i - 1].eps();
      t.phi[k][i - 1] = c.sigs[k][i - 1].phi();
    }
  }
  for (const auto& e : c.edges) {
    t.f[e.from][e.label - 1] = e.to;
    t.e[e.to][e.label - 1] = e.from;
  }
  return t;
}

inline QuasiCrystalTable disjoint_union(const QuasiCrystalTable& a, const QuasiCrystalTable& b) {
  QuasiCrystalTable t = a;
  const int off = a.size();
  for (int x = 0; x < b.size(); ++x) {
    t.add("#" + std::to_string(off + x) + ":" + b.elements[x], b.wt[x]);
    t.eps[off + x] = b.eps[x];
    t.phi[off + x] = b.phi[x];
    for (int i = 0; i < b.index_count(); ++i) {
      t.e[off + x][i] = b.e[x][i] == kUndef ? kUndef : b.e[x][i] + off;
      t.f[off + x][i] = b.f[x][i] == kUndef ? kUndef : b.f[x][i] + off;
    }
  }
  return t;
}

// union of the components of a few short random words: a seminormal
// quasi-crystal with both finite chains and +inf sites
inline QuasiCrystalTable random_seminormal_table(const Alphabet& a, std::mt19937_64& rng, int parts, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  QuasiCrystalTable t = component_table(explore(a, random_word(a, len(rng), rng)));
  for (int k = 1; k < parts; ++k) t = disjoint_union(t, component_table(explore(a, random_word(a, len(rng), rng))));
  return t;
}

}  // namespace qck::testing
