#include "qck/rootsys.hpp"

#include <algorithm>
#include <sstream>

#include "qck/errors.hpp"

namespace qck {

RootData RootData::type_A(int n) {
  if (n < 2) throw RankTooSmall("type A needs alphabet size >= 2");
  RootData rd;
  rd.kind_ = RootKind::A;
  rd.n_ = n;
  rd.dim_ = n;
  for (int i = 1; i < n; ++i) {
    Weight a(n, 0);
    a[i - 1] = 1;
    a[i] = -1;
    rd.roots_.push_back(a);
    rd.norms_.emplace_back(2);
  }
  return rd;
}

RootData RootData::type_C(int n) {
  if (n < 2) throw RankTooSmall("type C needs alphabet size >= 2");
  RootData rd;
  rd.kind_ = RootKind::C;
  rd.n_ = n;
  rd.dim_ = n;
  for (int i = 1; i < n; ++i) {
    Weight a(n, 0);
    a[i - 1] = 1;
    a[i] = -1;
    rd.roots_.push_back(a);
    rd.norms_.emplace_back(2);
  }
  Weight last(n, 0);
  last[n - 1] = 2;
  rd.roots_.push_back(last);
  rd.norms_.emplace_back(4);
  return rd;
}

RootData RootData::explicit_data(std::vector<Weight> simple_roots,
                                 std::vector<Rational> coroot_norms) {
  if (simple_roots.empty()) throw InvalidData("explicit root data needs at least one simple root");
  if (simple_roots.size() != coroot_norms.size())
    throw InvalidData("simple_roots and coroot_norms differ in length");
  RootData rd;
  rd.kind_ = RootKind::Explicit;
  rd.dim_ = static_cast<int>(simple_roots[0].size());
  if (rd.dim_ == 0) throw InvalidData("dimension must be positive");
  for (std::size_t i = 0; i < simple_roots.size(); ++i) {
    if (static_cast<int>(simple_roots[i].size()) != rd.dim_)
      throw InvalidData("simple roots of unequal length");
    if (coroot_norms[i] <= 0) throw InvalidData("coroot norms must be positive");
    // the norm is <alpha_i, alpha_i>; a mismatch would make the pairing meaningless
    if (Rational(dot(simple_roots[i], simple_roots[i])) != coroot_norms[i])
      throw InvalidData("coroot norm " + std::to_string(i + 1) + " differs from <alpha,alpha>");
  }
  rd.roots_ = std::move(simple_roots);
  rd.norms_ = std::move(coroot_norms);
  return rd;
}

const Weight& RootData::alpha(int i) const {
  if (i < 1 || i > index_count()) throw IndexOutOfRange("index " + std::to_string(i));
  return roots_[i - 1];
}

const Rational& RootData::norm(int i) const {
  if (i < 1 || i > index_count()) throw IndexOutOfRange("index " + std::to_string(i));
  return norms_[i - 1];
}

int RootData::pairing(const Weight& lambda, int i) const {
  const Weight& a = alpha(i);
  if (static_cast<int>(lambda.size()) != dim_) throw InvalidData("weight has wrong length");
  Rational r = Rational(2 * dot(lambda, a)) / norms_[i - 1];
  if (r.denominator() != 1)
    throw NonIntegralPairing("<" + to_string(lambda) + ", alpha_" + std::to_string(i) +
                             "^vee> = " + format_rational(r));
  return static_cast<int>(r.numerator());
}

Weight RootData::basis(int k) const {
  Weight w(dim_, 0);
  w.at(k - 1) = 1;
  return w;
}

bool RootData::operator==(const RootData& o) const {
  return kind_ == o.kind_ && n_ == o.n_ && dim_ == o.dim_ && roots_ == o.roots_ &&
         norms_ == o.norms_;
}

std::string to_string(RootKind k) {
  switch (k) {
    case RootKind::A: return "A";
    case RootKind::C: return "C";
    default: return "explicit";
  }
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
  os << ')';
  return os.str();
}

std::int64_t dot(const Weight& a, const Weight& b) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k)
    s += static_cast<std::int64_t>(a[k]) * b[k];
  return s;
}

Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

Weight operator-(const Weight& a) {
  Weight r(a);
  for (auto& x : r) x = -x;
  return r;
}

Weight scale(const Weight& a, int k) {
  Weight r(a);
  for (auto& x : r) x *= k;
  return r;
}

namespace {

// row reduction on an augmented matrix; returns pivot columns
std::vector<int> reduce(std::vector<std::vector<Rational>>& m, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  const int nrows = static_cast<int>(m.size());
  for (int c = 0; c < ncols && row < nrows; ++c) {
    int p = row;
    while (p < nrows && m[p][c] == Rational(0)) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[row]);
    Rational piv = m[row][c];
    for (auto& x : m[row]) x /= piv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || m[r][c] == Rational(0)) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve_exact(const std::vector<Weight>& cols,
                                                 const Weight& rhs) {
  const int ncols = static_cast<int>(cols.size());
  const int nrows = static_cast<int>(rhs.size());
  std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(ncols + 1));
  for (int r = 0; r < nrows; ++r) {
    for (int c = 0; c < ncols; ++c) m[r][c] = cols[c].at(r);
    m[r][ncols] = rhs[r];
  }
  auto pivots = reduce(m, ncols);
  // inconsistent row: zero coefficients with a nonzero right-hand side
  for (int r = static_cast<int>(pivots.size()); r < nrows; ++r)
    if (m[r][ncols] != Rational(0)) return std::nullopt;
  std::vector<Rational> k(ncols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = m[r][ncols];
  return k;
}

int rank_exact(const std::vector<Weight>& vectors) {
  if (vectors.empty()) return 0;
  const int nrows = static_cast<int>(vectors.size());
  const int ncols = static_cast<int>(vectors[0].size());
  std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(ncols));
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) m[r][c] = vectors[r][c];
  return static_cast<int>(reduce(m, ncols).size());
}

bool weight_leq(const RootData& rd, const Weight& mu, const Weight& lambda) {
  if (static_cast<int>(mu.size()) != rd.dim() || static_cast<int>(lambda.size()) != rd.dim())
    throw InvalidData("weight has wrong length");
  auto k = solve_exact(rd.simple_roots(), lambda - mu);
  if (!k) return false;
  return std::all_of(k->begin(), k->end(), [](const Rational& x) { return x >= Rational(0); });
}

std::vector<Rational> reflect(const std::vector<Rational>& v, const Weight& alpha) {
  std::vector<Rational> a(alpha.begin(), alpha.end());
  Rational c = 2 * inner(v, a) / inner(a, a);
  std::vector<Rational> r(v);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= c * a[k];
  return r;
}

Weight reflect_simple(const RootData& rd, const Weight& v, int i) {
  return v - scale(rd.alpha(i), rd.pairing(v, i));
}

std::vector<Weight> generate_roots(const RootData& rd) {
  const int n = rd.dim();
  std::vector<Weight> out;
  if (rd.kind() == RootKind::A) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) out.push_back(rd.basis(i) - rd.basis(j));
  } else if (rd.kind() == RootKind::C) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int s : {1, -1})
          for (int t : {1, -1})
            out.push_back(scale(rd.basis(i), s) + scale(rd.basis(j), t));
    for (int i = 1; i <= n; ++i) {
      out.push_back(scale(rd.basis(i), 2));
      out.push_back(scale(rd.basis(i), -2));
    }
  } else {
    throw InvalidData("no root generator for explicit data");
  }
  return out;
}

bool RootReport::has(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

RootReport validate_root_axioms(const RootData& rd, const std::vector<Weight>& roots) {
  RootReport rep;
  auto flag = [&](const std::string& ax, std::vector<Weight> wit, std::string detail) {
    if (!rep.has(ax)) rep.violations.push_back({ax, std::move(wit), std::move(detail)});
  };
  const int d = rd.dim();
  auto in_phi = [&](const Weight& w) { return std::find(roots.begin(), roots.end(), w) != roots.end(); };

  // WL2: a root outside Z^d cannot even be stored, so only the shape is checked
  for (const auto& a : roots)
    if (static_cast<int>(a.size()) != d) flag("WL2", {a}, "root of wrong dimension");
  if (rep.has("WL2")) return rep;

  if (roots.empty()) flag("RS1", {}, "empty root set");
  for (const auto& a : roots)
    if (std::all_of(a.begin(), a.end(), [](int x) { return x == 0; })) flag("RS1", {a}, "zero vector");
  if (rep.has("RS1")) return rep;

  for (const auto& a : roots) {
    for (const auto& b : roots) {
      std::vector<Rational> bq(b.begin(), b.end());
      auto r = reflect(bq, a);
      bool integral = std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.denominator() == 1; });
      Weight ri;
      if (integral)
        for (auto& x : r) ri.push_back(static_cast<int>(x.numerator()));
      if (!integral || !in_phi(ri)) flag("RS2", {a, b}, "r_alpha(beta) not a root");

      Rational c = Rational(2 * dot(a, b)) / dot(b, b);
      if (c.denominator() != 1) flag("RS3", {a, b}, "<alpha, beta^vee> = " + format_rational(c));

      std::int64_t ab = dot(a, b);
      if (ab * ab == dot(a, a) * dot(b, b)) {
        Rational k = Rational(ab) / dot(a, a);
        if (k != Rational(1) && k != Rational(-1)) flag("RS4", {a, b}, "multiple k = " + format_rational(k));
      }
    }
  }

  const auto& simple = rd.simple_roots();
  for (const auto& a : simple)
    if (!in_phi(a)) flag("SR1", {a}, "simple root not in the root set");
  if (rank_exact(simple) != static_cast<int>(simple.size()))
    flag("SR1", simple, "simple roots are linearly dependent");
  if (!rep.has("SR1")) {
    for (const auto& b : roots) {
      auto k = solve_exact(simple, b);
      if (!k) {
        flag("SR2", {b}, "root outside the span of the simple roots");
        continue;
      }
      bool integral = std::all_of(k->begin(), k->end(), [](const Rational& x) { return x.denominator() == 1; });
      bool nonneg = std::all_of(k->begin(), k->end(), [](const Rational& x) { return x >= Rational(0); });
      bool nonpos = std::all_of(k->begin(), k->end(), [](const Rational& x) { return x <= Rational(0); });
      if (!integral || !(nonneg || nonpos)) flag("SR2", {b}, "coefficients not integers of one sign");
    }
  }

  // WL1: Z^d spans R^d whenever d >= 1
  if (d < 1) flag("WL1", {}, "empty lattice");
  // WL3 on the lattice basis suffices by linearity
  for (const auto& a : roots) {
    for (int k = 1; k <= d; ++k) {
      Rational c = Rational(2 * a[k - 1]) / dot(a, a);
      if (c.denominator() != 1) flag("WL3", {rd.basis(k), a}, "<e_k, alpha^vee> = " + format_rational(c));
    }
  }
  return rep;
}

Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    std::int64_t den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(std::stoll(s.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

RootData root_data_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("kind")) {
      std::string k = j.at("kind").get<std::string>();
      if (k == "A") return RootData::type_A(j.at("n").get<int>());
      if (k == "C") return RootData::type_C(j.at("n").get<int>());
      if (k != "explicit") throw ParseError("unknown root kind '" + k + "'");
    }
    auto roots = j.at("simple_roots").get<std::vector<Weight>>();
    std::vector<Rational> norms;
    for (const auto& s : j.at("coroot_norms")) {
      if (s.is_number_integer()) norms.emplace_back(s.get<std::int64_t>());
      else norms.push_back(parse_rational(s.get<std::string>()));
    }
    if (j.contains("dim") && !roots.empty() &&
        j.at("dim").get<int>() != static_cast<int>(roots[0].size()))
      throw InvalidData("dim does not match the simple roots");
    return RootData::explicit_data(std::move(roots), std::move(norms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("root data: ") + e.what());
  }
}

nlohmann::json to_json(const RootData& rd) {
  if (rd.kind() != RootKind::Explicit) return {{"kind", to_string(rd.kind())}, {"n", rd.n()}};
  nlohmann::json norms = nlohmann::json::array();
  for (int i = 1; i <= rd.index_count(); ++i) norms.push_back(format_rational(rd.norm(i)));
  return {{"kind", "explicit"}, {"dim", rd.dim()}, {"simple_roots", rd.simple_roots()},
          {"coroot_norms", norms}};
}

}  // namespace qck
