#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"

namespace qck {

using Weight = std::vector<int>;
using Rational = boost::rational<std::int64_t>;

enum class RootKind { A, C, Explicit };

// Simple-root data on the lattice Z^dim with the standard inner product.
// Indices are 1-based throughout the public interface.
class RootData {
 public:
  // n is the alphabet size: A has n-1 simple roots, C has n
  static RootData type_A(int n);
  static RootData type_C(int n);
  static RootData explicit_data(std::vector<Weight> simple_roots,
                                std::vector<Rational> coroot_norms);

  RootKind kind() const { return kind_; }
  int n() const { return n_; }
  int dim() const { return dim_; }
  int index_count() const { return static_cast<int>(roots_.size()); }
  const Weight& alpha(int i) const;
  const Rational& norm(int i) const;
  const std::vector<Weight>& simple_roots() const { return roots_; }

  // <lambda, alpha_i^vee>
  int pairing(const Weight& lambda, int i) const;

  Weight zero() const { return Weight(dim_, 0); }
  Weight basis(int k) const;  // e_k, 1-based

  bool operator==(const RootData& o) const;

 private:
  RootKind kind_ = RootKind::Explicit;
  int n_ = 0;
  int dim_ = 0;
  std::vector<Weight> roots_;
  std::vector<Rational> norms_;
};

std::string to_string(RootKind k);
std::string to_string(const Weight& w);

Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& b);
std::int64_t dot(const Weight& a, const Weight& b);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight scale(const Weight& a, int k);

// exact solve of sum_i k_i cols[i] = rhs; nullopt if rhs is outside the span.
// cols must be linearly independent for the answer to be unique.
std::optional<std::vector<Rational>> solve_exact(const std::vector<Weight>& cols,
                                                 const Weight& rhs);
int rank_exact(const std::vector<Weight>& vectors);

// mu <= lambda in the dominance order
// lambda - mu is a non-negative combination of simple roots
bool weight_leq(const RootData& rd, const Weight& mu, const Weight& lambda);

// r_alpha(v) = v - <v, alpha^vee> alpha, exact over Q
std::vector<Rational> reflect(const std::vector<Rational>& v, const Weight& alpha);
Weight reflect_simple(const RootData& rd, const Weight& v, int i);

// Phi for the named types; throws UnsupportedAlphabet for explicit data
std::vector<Weight> generate_roots(const RootData& rd);

struct AxiomViolation {
  std::string axiom;  // "RS1" .. "WL3"
  std::vector<Weight> witness;
  std::string detail;
};

struct RootReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& axiom) const;
};

RootReport validate_root_axioms(const RootData& rd, const std::vector<Weight>& roots);

// {"kind":"A","n":3} or {"dim":..,"simple_roots":[[..]],"coroot_norms":["p/q",..]}
RootData root_data_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RootData& rd);

Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& r);

}  // namespace qck
