#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qck/qgraph.hpp"
#include "qck/word.hpp"

namespace qck {

// congruence generated by the Knuth and quartic relations on A_n words
bool classical_congruent_A(int n, const Word& u, const Word& v);
// the relation pairs themselves, as (lhs, rhs) over the alphabet 1..n
std::vector<std::pair<Word, Word>> classical_relations(int n);

bool is_commutative(const Alphabet& a, const Word& w);
bool is_idempotent(const Alphabet& a, const Word& w);

using InvSignature = std::vector<int>;  // delta_i in {0,1}, length n
InvSignature inv_signature(const Alphabet& a, const Word& w);

// whether (lambda, delta) is the (wt, inv) pair of some isolated C_n word
bool valid_commutative_pair(int n, const Weight& lambda, const InvSignature& delta);
// throws InvalidPair
Word commutative_witness(int n, const Weight& lambda, const InvSignature& delta);

// highest-weight word of weight lambda: 1^a1..n^an nbar^bn..1bar^b1
Word highest_weight_witness(int n, const Weight& lambda);

enum class C2Family { Power1, Family2121, Family12bar1, Family12bar2bar1 };
std::string to_string(C2Family f);  // the enumerator name
std::string short_name(C2Family f);  // 1, 2121, 12bar1, 12bar2bar1

struct C2NormalForm {
  C2Family family;
  std::vector<int> params;  // m, or m_1.. in the family's order
  Word representative;      // root of the family's component
  Word word;                // the vertex of that component congruent to the input
};

Word c2_representative(C2Family f, const std::vector<int>& params);
bool c2_params_valid(C2Family f, const std::vector<int>& params);
// {1,2}-word to 2^m1 1^m2 2^m3 1^m4
std::vector<int> collapse_12(const Word& w);
C2NormalForm normal_form_C2(const Word& w);
// the highest-weight case analysis alone; nullopt where it does not decide
std::optional<C2NormalForm> normal_form_C2_by_cases(const Word& w);
// every (family, params) with params <= |w| whose component holds a vertex
// congruent to w; the classification says there is exactly one
std::vector<C2NormalForm> c2_candidates_matching(const Word& w);
nlohmann::json to_json(const C2NormalForm& nf);

// Variables are single characters. Substitutions run over all words of
// length <= max_len, the last variable varying fastest, each in
// length-lexicographic order; the first failing one is returned.
using Substitution = std::map<char, Word>;
std::optional<Substitution> check_identity(const std::string& lhs, const std::string& rhs,
                                           const Alphabet& a, int max_len, int jobs = 1,
                                           std::size_t budget = default_budget());
Word substitute(const std::string& pattern, const Substitution& s);

Word embed_A_to_C(const Word& w, int n);
Word embed_C_to_C(const Word& w, int n);

}  // namespace qck
