#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "qck/word.hpp"

namespace qck {

inline constexpr std::size_t kDefaultBudget = 1000000;

// kDefaultBudget unless QCK_BUDGET holds a positive integer
std::size_t default_budget();

struct Edge {
  int from, to, label;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Loop {
  int vertex, label;
  friend bool operator==(const Loop&, const Loop&) = default;
  friend auto operator<=>(const Loop&, const Loop&) = default;
};

// Connected component of a word in the quasi-crystal graph: f-edges,
// loops where eps = +inf, vertices in breadth-first order from the root.
struct Component {
  Alphabet alphabet;
  Word root;
  std::vector<Word> vertices;
  std::vector<Weight> weights;
  std::vector<std::vector<Sig>> sigs;  // [vertex][i-1]
  std::vector<Edge> edges;             // sorted
  std::vector<Loop> loops;             // sorted

  int size() const { return static_cast<int>(vertices.size()); }
  int index_of(const Word& w) const;  // -1 if absent
};

Component explore(const Alphabet& a, const Word& w, std::size_t budget = default_budget());

// rooted isomorphism of components sending u to v, by paired search
bool congruent(const Alphabet& a, const Word& u, const Word& v, std::size_t budget = default_budget());

std::vector<Word> hw_words(const Component& c);
std::vector<Word> lw_words(const Component& c);

enum class Format { Dot, Json };
nlohmann::json component_json(const Component& c);
std::string export_component(const Component& c, Format fmt);

}  // namespace qck
