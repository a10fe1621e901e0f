// qck: command-line front end for the quasi-crystal library.
//
// Exit codes: 0 ok (or congruent, or identity holds up to the bound),
// 1 not congruent / counterexample found, 2 usage or parse error,
// 3 vertex budget exceeded, 4 invalid data, 5 anything else.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qck/errors.hpp"
#include "qck/hypoplactic.hpp"
#include "qck/mutate.hpp"
#include "qck/qgraph.hpp"
#include "qck/rootsys.hpp"

using nlohmann::json;
using namespace qck;

namespace {

struct Options {
  bool as_json = false;
  std::size_t budget = 0;
  std::string type = "C";
  int rank = 2;
};

Alphabet alphabet_of(const Options& o) {
  if (o.rank < 2) throw RankTooSmall("rank must be at least 2");
  if (o.type == "A") return Alphabet::A(o.rank);
  if (o.type == "C") return Alphabet::C(o.rank);
  throw ParseError("unknown type '" + o.type + "', expected A or C");
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string bits(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

int explore_cmd(const Options& o, const std::string& word, const std::string& format, const std::string& out) {
  Alphabet a = alphabet_of(o);
  Component c = explore(a, parse_word(a, word), o.budget);
  std::string text = export_component(c, format == "json" ? Format::Json : Format::Dot);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw ParseError("cannot write " + out);
    f << text;
  }
  return 0;
}

int congruent_cmd(const Options& o, const std::string& left, const std::string& right, bool classical) {
  Alphabet a = alphabet_of(o);
  Word u = parse_word(a, left), v = parse_word(a, right);
  bool same;
  if (classical) {
    if (a.kind() != Alphabet::Kind::A) throw UnsupportedAlphabet("--classical needs --type A");
    same = classical_congruent_A(a.n(), u, v);
  } else {
    same = congruent(a, u, v, o.budget);
  }
  if (o.as_json)
    std::cout << json{{"left", u}, {"right", v}, {"congruent", same}, {"method", classical ? "classical" : "paired-bfs"}}
                     .dump()
              << "\n";
  else
    std::cout << (same ? "congruent" : "not congruent") << "\n";
  return same ? 0 : 1;
}

int classify_cmd(const Options& o, const std::string& word) {
  Alphabet a = alphabet_of(o);
  Word w = parse_word(a, word);
  WordClass c = word_class(a, w);
  InvSignature inv = inv_signature(a, w);
  Weight wt = word_wt(a, w);
  bool comm = is_commutative(a, w), idem = is_idempotent(a, w);
  if (o.as_json) {
    std::cout << json{{"word", w},
                      {"weight", wt},
                      {"highest_weight", c.highest_weight},
                      {"lowest_weight", c.lowest_weight},
                      {"isolated", c.isolated},
                      {"commutative", comm},
                      {"idempotent", idem},
                      {"inv", inv}}
                     .dump()
              << "\n";
  } else {
    std::cout << "word " << pretty_word(a, w) << "\n"
              << "weight " << to_string(wt) << "\n"
              << "highest_weight=" << yes(c.highest_weight) << "\n"
              << "lowest_weight=" << yes(c.lowest_weight) << "\n"
              << "isolated=" << yes(c.isolated) << "\n"
              << "commutative=" << yes(comm) << "\n"
              << "idempotent=" << yes(idem) << "\n"
              << "inv=" << bits(inv) << "\n";
  }
  return 0;
}

int normalize_cmd(const Options& o, const std::string& word) {
  if (o.type != "C" || o.rank != 2) throw UnsupportedAlphabet("normal forms exist for C_2 only");
  Alphabet a = Alphabet::C(2);
  C2NormalForm nf = normal_form_C2(parse_word(a, word));
  if (o.as_json) {
    std::cout << to_json(nf).dump() << "\n";
  } else {
    std::cout << "family " << short_name(nf.family) << "\n"
              << "params " << bits(nf.params) << "\n"
              << "representative " << format_word(nf.representative) << "\n"
              << "word " << format_word(nf.word) << "\n";
  }
  return 0;
}

int identity_cmd(const Options& o, const std::string& lhs, const std::string& rhs, int max_len, int jobs) {
  Alphabet a = alphabet_of(o);
  for (char c : lhs + rhs)
    if (!std::isalpha(static_cast<unsigned char>(c))) throw ParseError("identity variables are single letters");
  if (max_len < 0) throw ParseError("--max-len must be non-negative");
  auto cex = check_identity(lhs, rhs, a, max_len, jobs, o.budget);
  if (o.as_json) {
    json j{{"lhs", lhs}, {"rhs", rhs}, {"max_len", max_len}, {"holds_up_to_bound", !cex}};
    if (cex) {
      json s = json::object();
      for (auto& [var, w] : *cex) s[std::string(1, var)] = w;
      j["counterexample"] = s;
    } else {
      j["counterexample"] = nullptr;
    }
    std::cout << j.dump() << "\n";
  } else if (cex) {
    std::cout << "counterexample";
    for (auto& [var, w] : *cex) std::cout << " " << var << "=" << (w.empty() ? "ε" : format_word(w));
    std::cout << "\n";
  } else {
    std::cout << "holds up to bound " << max_len << "\n";
  }
  return cex ? 1 : 0;
}

int validate_cmd(const Options& o, const std::string& table_file, const std::string& root_file, bool standard,
                 int mutations, std::uint64_t seed) {
  json out = json::object();
  bool ok = true;
  std::ostringstream text;

  auto check_root = [&](const RootData& rd, std::vector<Weight> roots) {
    RootReport r = validate_root_axioms(rd, roots);
    json v = json::array();
    for (auto& x : r.violations) {
      v.push_back({{"axiom", x.axiom}, {"detail", x.detail}});
      text << "root axiom " << x.axiom << " fails: " << x.detail << "\n";
    }
    out["root_axioms"] = {{"ok", r.ok()}, {"roots", roots.size()}, {"violations", v}};
    if (r.ok()) text << "root axioms hold (" << roots.size() << " roots)\n";
    ok = ok && r.ok();
  };

  auto check_table = [&](const QuasiCrystalTable& t) {
    QcReport r = validate_quasicrystal(t);
    bool semi = r.ok() && is_seminormal(t);
    json v = json::array();
    for (auto& x : r.violations) {
      v.push_back({{"clause", x.clause}, {"element", x.element}, {"index", x.index}, {"detail", x.detail}});
      text << "clause " << x.clause << " fails at " << x.element << ", i=" << x.index << ": " << x.detail << "\n";
    }
    out["quasi_crystal"] = {{"ok", r.ok()}, {"elements", t.size()}, {"seminormal", semi}, {"violations", v}};
    if (r.ok()) text << "quasi-crystal axioms hold (" << t.size() << " elements), seminormal=" << yes(semi) << "\n";
    ok = ok && r.ok();
    if (mutations > 0 && r.ok()) {
      std::mt19937_64 rng(seed);
      int flagged = 0;
      for (int k = 0; k < mutations; ++k)
        if (!validate_quasicrystal(mutate(t, rng).table).ok()) ++flagged;
      out["mutations"] = {{"trials", mutations}, {"flagged", flagged}, {"seed", seed}};
      text << "mutations flagged " << flagged << "/" << mutations << " (seed " << seed << ")\n";
      ok = ok && flagged == mutations;
    }
  };

  if (!root_file.empty()) {
    json j = read_json_file(root_file);
    RootData rd = root_data_from_json(j);
    std::vector<Weight> roots;
    if (j.contains("roots"))
      roots = j["roots"].get<std::vector<Weight>>();
    else if (rd.kind() != RootKind::Explicit)
      roots = generate_roots(rd);
    else
      throw InvalidData("explicit root data needs a \"roots\" list");
    check_root(rd, roots);
  }
  if (!table_file.empty()) check_table(table_from_json(read_json_file(table_file)));
  if (standard) {
    Alphabet a = alphabet_of(o);
    check_root(a.root(), generate_roots(a.root()));
    check_table(a.table());
  }
  if (root_file.empty() && table_file.empty() && !standard)
    throw ParseError("validate needs --table, --root, or --type with --rank");

  out["ok"] = ok;
  if (o.as_json)
    std::cout << out.dump() << "\n";
  else
    std::cout << text.str();
  return ok ? 0 : 4;
}

int embed_cmd(const Options& o, const std::string& from, const std::string& word) {
  if (o.rank < 3) throw RankTooSmall("embeddings need a target rank of at least 3");
  Alphabet src = from == "A" ? Alphabet::A(o.rank - 1) : Alphabet::C(o.rank - 1);
  if (from != "A" && from != "C") throw ParseError("--from must be A or C");
  Word w = parse_word(src, word);
  Word img = from == "A" ? embed_A_to_C(w, o.rank) : embed_C_to_C(w, o.rank);
  if (o.as_json)
    std::cout << json{{"from", from}, {"rank", o.rank}, {"word", w}, {"image", img}}.dump() << "\n";
  else
    std::cout << format_word(img) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-crystal and hypoplactic monoid toolkit"};
  app.require_subcommand(1);
  Options o;
  o.budget = default_budget();
  app.add_flag("--json", o.as_json, "machine-readable output");
  app.add_option("--budget", o.budget, "vertex budget for component searches")->check(CLI::PositiveNumber);

  auto typed = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "A or C")->check(CLI::IsMember({"A", "C"}));
    sub->add_option("--rank", o.rank, "alphabet size n");
  };

  std::string word, left, right, format = "dot", out, lhs, rhs, table_file, root_file, from = "A";
  bool classical = false, standard = false;
  int max_len = 2, jobs = 1, mutations = 0;
  std::uint64_t seed = 1;

  auto* ex = app.add_subcommand("explore", "component of a word, as DOT or JSON");
  typed(ex);
  ex->add_option("--word", word, "signed-integer letters");
  ex->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  ex->add_option("--out", out, "write here instead of stdout");

  auto* co = app.add_subcommand("congruent", "hypoplactic congruence of two words");
  typed(co);
  co->add_option("--left", left)->required();
  co->add_option("--right", right)->required();
  co->add_flag("--classical", classical, "type A only: rewriting with the classical relations");

  auto* cl = app.add_subcommand("classify", "isolation, commutativity, idempotence, inversions");
  typed(cl);
  cl->add_option("--word", word);

  auto* no = app.add_subcommand("normalize", "C_2 normal form");
  typed(no);
  no->add_option("--word", word);

  auto* id = app.add_subcommand("identity", "check an identity by exhaustive substitution");
  typed(id);
  id->add_option("--lhs", lhs)->required();
  id->add_option("--rhs", rhs)->required();
  id->add_option("--max-len", max_len, "longest word substituted for a variable");
  id->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* va = app.add_subcommand("validate", "axiom checks on root data and quasi-crystal tables");
  va->add_option("--type", o.type)->check(CLI::IsMember({"A", "C"}));
  va->add_option("--rank", o.rank);
  va->add_option("--table", table_file, "quasi-crystal table JSON");
  va->add_option("--root", root_file, "root data JSON");
  va->add_option("--mutations", mutations, "seeded corruptions the validator must flag");
  va->add_option("--seed", seed);

  auto* em = app.add_subcommand("embed", "embedding into C_n (n = --rank)");
  em->add_option("--from", from, "source type A (A_{n-1}) or C (C_{n-1})")->check(CLI::IsMember({"A", "C"}));
  em->add_option("--rank", o.rank)->required();
  em->add_option("--word", word);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ex) return explore_cmd(o, word, format, out);
    if (*co) return congruent_cmd(o, left, right, classical);
    if (*cl) return classify_cmd(o, word);
    if (*no) return normalize_cmd(o, word);
    if (*id) return identity_cmd(o, lhs, rhs, max_len, jobs);
    if (*va) {
      standard = va->count("--type") > 0 || va->count("--rank") > 0;
      return validate_cmd(o, table_file, root_file, standard, mutations, seed);
    }
    if (*em) return embed_cmd(o, from, word);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidData& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
