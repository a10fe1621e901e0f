#include "qck/qgraph.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "qck/errors.hpp"

namespace qck {

std::size_t default_budget() {
  if (const char* s = std::getenv("QCK_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

int Component::index_of(const Word& w) const {
  auto it = std::find(vertices.begin(), vertices.end(), w);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

Component explore(const Alphabet& a, const Word& w, std::size_t budget) {
  for (int c : w)
    if (!a.contains(c)) throw ParseError("letter " + std::to_string(c) + " is not in the alphabet");
  Component comp{a, w, {}, {}, {}, {}, {}};
  std::unordered_map<Word, int, WordHash> id;
  auto visit = [&](const Word& v) {
    auto [it, fresh] = id.emplace(v, comp.size());
    if (fresh) {
      if (comp.vertices.size() >= budget)
        throw BudgetExceeded("component exceeds " + std::to_string(budget) + " vertices");
      comp.vertices.push_back(v);
    }
    return it->second;
  };
  visit(w);
  const int I = a.index_count();
  for (int k = 0; k < comp.size(); ++k) {
    const Word cur = comp.vertices[k];
    std::vector<Sig> sig(I);
    for (int i = 1; i <= I; ++i) {
      Action act = word_action(a, cur, i);
      sig[i - 1] = act.sig;
      if (act.sig.zero) {
        comp.loops.push_back({k, i});
        continue;
      }
      if (auto up = apply_e(a, cur, i, act)) visit(*up);
      if (auto down = apply_f(a, cur, i, act)) comp.edges.push_back({k, visit(*down), i});
    }
    comp.sigs.push_back(std::move(sig));
  }
  for (const auto& v : comp.vertices) comp.weights.push_back(word_wt(a, v));
  std::sort(comp.edges.begin(), comp.edges.end());
  std::sort(comp.loops.begin(), comp.loops.end());
  return comp;
}

bool congruent(const Alphabet& a, const Word& u, const Word& v, std::size_t budget) {
  for (const Word* w : {&u, &v})
    for (int c : *w)
      if (!a.contains(c)) throw ParseError("letter " + std::to_string(c) + " is not in the alphabet");
  if (word_wt(a, u) != word_wt(a, v)) return false;
  std::unordered_map<Word, Word, WordHash> fwd, bwd;
  std::deque<std::pair<Word, Word>> queue;
  // false on a conflict with the maps built so far
  auto link = [&](const Word& x, const Word& y) {
    auto fx = fwd.find(x);
    if (fx != fwd.end()) return fx->second == y;
    if (bwd.count(y)) return false;
    if (fwd.size() >= budget) throw BudgetExceeded("paired search exceeds " + std::to_string(budget) + " vertices");
    fwd.emplace(x, y);
    bwd.emplace(y, x);
    queue.emplace_back(x, y);
    return true;
  };
  link(u, v);
  const int I = a.index_count();
  while (!queue.empty()) {
    auto [x, y] = std::move(queue.front());
    queue.pop_front();
    assert(word_wt(a, x) == word_wt(a, y));
    for (int i = 1; i <= I; ++i) {
      Action ax = word_action(a, x, i), ay = word_action(a, y, i);
      if (!(ax.sig == ay.sig)) return false;
      if (ax.sig.zero) continue;
      auto ex = apply_e(a, x, i, ax), ey = apply_e(a, y, i, ay);
      if (ex.has_value() != ey.has_value()) return false;
      if (ex && !link(*ex, *ey)) return false;
      auto fx = apply_f(a, x, i, ax), fy = apply_f(a, y, i, ay);
      if (fx.has_value() != fy.has_value()) return false;
      if (fx && !link(*fx, *fy)) return false;
    }
  }
  return true;
}

std::vector<Word> hw_words(const Component& c) {
  std::vector<bool> has_in(c.size(), false);
  for (const auto& e : c.edges) has_in[e.to] = true;
  std::vector<Word> out;
  for (int k = 0; k < c.size(); ++k)
    if (!has_in[k]) out.push_back(c.vertices[k]);
  return out;
}

std::vector<Word> lw_words(const Component& c) {
  std::vector<bool> has_out(c.size(), false);
  for (const auto& e : c.edges) has_out[e.from] = true;
  std::vector<Word> out;
  for (int k = 0; k < c.size(); ++k)
    if (!has_out[k]) out.push_back(c.vertices[k]);
  return out;
}

nlohmann::json component_json(const Component& c) {
  using nlohmann::json;
  json j;
  j["alphabet"] = {{"kind", kind_name(c.alphabet)}, {"n", c.alphabet.n()}};
  j["root"] = c.root;
  json vs = json::array();
  for (int k = 0; k < c.size(); ++k) {
    json eps = json::array(), phi = json::array();
    for (const Sig& s : c.sigs[k]) {
      eps.push_back(to_json(s.eps()));
      phi.push_back(to_json(s.phi()));
    }
    vs.push_back({{"id", k}, {"word", c.vertices[k]}, {"weight", c.weights[k]}, {"eps", eps}, {"phi", phi}});
  }
  j["vertices"] = vs;
  json es = json::array();
  for (const auto& e : c.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  j["edges"] = es;
  json ls = json::array();
  for (const auto& l : c.loops) ls.push_back({{"vertex", l.vertex}, {"label", l.label}});
  j["loops"] = ls;
  return j;
}

std::string export_component(const Component& c, Format fmt) {
  if (fmt == Format::Json) return component_json(c).dump(2) + "\n";
  std::ostringstream os;
  os << "digraph component {\n";
  for (int k = 0; k < c.size(); ++k)
    os << "  v" << k << " [label=\"" << format_word(c.vertices[k]) << "\\n" << to_string(c.weights[k]) << "\"];\n";
  for (const auto& e : c.edges) os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
  for (const auto& l : c.loops) os << "  v" << l.vertex << " -> v" << l.vertex << " [label=\"" << l.label << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qck
