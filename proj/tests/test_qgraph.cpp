#include "catch_amalgamated.hpp"

#include <set>

#include "qck/errors.hpp"
#include "qck/qgraph.hpp"
#include "support.hpp"

using namespace qck;
using qck::testing::W;

namespace {

std::set<Word> vertex_set(const Component& c) { return {c.vertices.begin(), c.vertices.end()}; }

std::set<std::tuple<Word, Word, int>> edge_set(const Component& c) {
  std::set<std::tuple<Word, Word, int>> s;
  for (const auto& e : c.edges) s.insert({c.vertices[e.from], c.vertices[e.to], e.label});
  return s;
}

std::set<std::pair<Word, int>> loop_set(const Component& c) {
  std::set<std::pair<Word, int>> s;
  for (const auto& l : c.loops) s.insert({c.vertices[l.vertex], l.label});
  return s;
}

}  // namespace

TEST_CASE("component of 121 in C_2") {
  auto a = Alphabet::C(2);
  auto c = explore(a, W(a, "1 2 1"));
  std::set<Word> want;
  for (auto s : {"1 2 1", "1 -2 1", "2 -2 1", "2 -1 1", "-2 -1 1", "2 -1 2", "-2 -1 2", "-2 -1 -2"})
    want.insert(W(a, s));
  CHECK(vertex_set(c) == want);
  CHECK(loop_set(c).count({W(a, "1 2 1"), 1}));
  CHECK(loop_set(c).count({W(a, "2 -2 1"), 2}));
  CHECK(hw_words(c) == std::vector<Word>{W(a, "1 2 1")});
}

TEST_CASE("highest-weight words of 212") {
  auto a = Alphabet::C(2);
  auto hw = hw_words(explore(a, W(a, "2 1 2")));
  CHECK(std::set<Word>(hw.begin(), hw.end()) == std::set<Word>{W(a, "2 1 2"), W(a, "-1 1 2")});
}

TEST_CASE("small components") {
  auto c2 = Alphabet::C(2);
  auto e = explore(c2, {});
  CHECK(e.size() == 1);
  CHECK(e.loops.empty());
  auto iso = explore(c2, W(c2, "1 -1"));
  CHECK(iso.size() == 1);
  CHECK(loop_set(iso) == std::set<std::pair<Word, int>>{{W(c2, "1 -1"), 1}});
  auto a3 = Alphabet::A(3);
  CHECK(hw_words(explore(a3, {1, 1})) == std::vector<Word>{{1, 1}});
}

TEST_CASE("edges are exactly the f operators") {
  auto a = Alphabet::C(3);
  auto c = explore(a, W(a, "2 -3 1"));
  for (int k = 0; k < c.size(); ++k)
    for (int i = 1; i <= 3; ++i) {
      auto f = word_f(a, c.vertices[k], i);
      bool has = false;
      for (const auto& e : c.edges)
        if (e.from == k && e.label == i) {
          has = true;
          REQUIRE(f);
          CHECK(c.vertices[e.to] == *f);
        }
      CHECK(has == f.has_value());
    }
}

TEST_CASE("congruence oracles") {
  auto c2 = Alphabet::C(2);
  CHECK(congruent(c2, W(c2, "1 2 1 1 2"), W(c2, "1 1 1 2 2")));
  CHECK(congruent(c2, W(c2, "1 -1 1 -1"), W(c2, "1 -1")));
  CHECK_FALSE(congruent(c2, W(c2, "1 -1"), {}));
  CHECK_FALSE(congruent(Alphabet::C(3), W(Alphabet::C(3), "1 -1"), {}));
  CHECK_FALSE(congruent(c2, W(c2, "1 2"), W(c2, "2 1")));
  CHECK(congruent(c2, W(c2, "2 1 2"), W(c2, "2 1 2")));
}

TEST_CASE("paired search agrees with brute-force isomorphism") {
  auto a = Alphabet::C(2);
  std::vector<Word> words = all_words_upto(a, 3);
  std::vector<Component> comps;
  for (const auto& w : words) comps.push_back(explore(a, w));
  for (std::size_t u = 0; u < words.size(); ++u)
    for (std::size_t v = 0; v < words.size(); ++v) {
      INFO(format_word(words[u]) << " | " << format_word(words[v]));
      REQUIRE(congruent(a, words[u], words[v]) == qck::testing::brute_force_isomorphic(comps[u], comps[v]));
    }
}

TEST_CASE("budget") {
  auto a = Alphabet::C(2);
  CHECK_THROWS_AS(explore(a, W(a, "1 2 1"), 3), BudgetExceeded);
  CHECK_THROWS_AS(congruent(a, W(a, "1 2 1"), W(a, "1 2 1"), 3), BudgetExceeded);
  CHECK_NOTHROW(explore(a, W(a, "1 2 1"), 8));
}

TEST_CASE("exports") {
  auto a = Alphabet::C(2);
  auto j = component_json(explore(a, {}));
  CHECK(j["vertices"].size() == 1);
  CHECK(j["vertices"][0]["word"] == nlohmann::json::array());
  CHECK(j["vertices"][0]["weight"] == nlohmann::json::array({0, 0}));
  CHECK(j["edges"].empty());
  CHECK(j["loops"].empty());

  auto letter = explore(a, {2});
  auto dot = export_component(letter, Format::Dot);
  CHECK(dot.find("digraph") == 0);
  int from = letter.index_of({2}), to = letter.index_of({-2});
  CHECK(dot.find("v" + std::to_string(from) + " -> v" + std::to_string(to) + " [label=\"2\"]") != std::string::npos);
  auto js = nlohmann::json::parse(export_component(letter, Format::Json));
  CHECK(js["vertices"].size() == 4);
  CHECK(js["edges"].size() == 3);
}
