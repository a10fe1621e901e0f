#include "qck/qc_core.hpp"

#include <algorithm>
#include <set>

#include "qck/errors.hpp"

namespace qck {

std::int64_t ExtInt::value() const {
  if (k_ != Kind::Finite) throw Error("value() of an infinite ExtInt");
  return v_;
}

ExtInt operator+(ExtInt a, ExtInt b) {
  using K = ExtInt::Kind;
  if ((a.k_ == K::PosInf && b.k_ == K::NegInf) || (a.k_ == K::NegInf && b.k_ == K::PosInf))
    throw Error("+inf + -inf is undefined");
  if (a.k_ != K::Finite) return a;
  if (b.k_ != K::Finite) return b;
  return ExtInt(a.v_ + b.v_);
}

ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

std::string to_string(ExtInt x) {
  if (x.is_pos_inf()) return "+inf";
  if (x.is_neg_inf()) return "-inf";
  return std::to_string(x.value());
}

nlohmann::json to_json(ExtInt x) {
  if (x.finite()) return x.value();
  return to_string(x);
}

ExtInt extint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return ExtInt(j.get<std::int64_t>());
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "+inf" || s == "inf") return ExtInt::pos_inf();
    if (s == "-inf") return ExtInt::neg_inf();
  }
  throw ParseError("bad extended integer " + j.dump());
}

int QuasiCrystalTable::index_of(const std::string& id) const {
  auto it = std::find(elements.begin(), elements.end(), id);
  if (it == elements.end()) throw UnknownElement("unknown element '" + id + "'");
  return static_cast<int>(it - elements.begin());
}

int QuasiCrystalTable::add(const std::string& id, Weight w) {
  const int m = index_count();
  elements.push_back(id);
  wt.push_back(std::move(w));
  eps.emplace_back(m, ExtInt(0));
  phi.emplace_back(m, ExtInt(0));
  e.emplace_back(m, kUndef);
  f.emplace_back(m, kUndef);
  return size() - 1;
}

void QuasiCrystalTable::check_shape() const {
  const auto N = elements.size();
  const auto m = static_cast<std::size_t>(index_count());
  if (wt.size() != N || eps.size() != N || phi.size() != N || e.size() != N || f.size() != N)
    throw InvalidData("table maps are not total on the element list");
  std::set<std::string> seen(elements.begin(), elements.end());
  if (seen.size() != N) throw InvalidData("duplicate element ids");
  for (std::size_t x = 0; x < N; ++x) {
    if (static_cast<int>(wt[x].size()) != root.dim()) throw InvalidData("weight of wrong length at " + elements[x]);
    if (eps[x].size() != m || phi[x].size() != m || e[x].size() != m || f[x].size() != m)
      throw InvalidData("per-index maps of wrong length at " + elements[x]);
    for (std::size_t i = 0; i < m; ++i)
      for (int y : {e[x][i], f[x][i]})
        if (y != kUndef && (y < 0 || y >= static_cast<int>(N))) throw InvalidData("operator target out of range");
  }
}

bool QcReport::has_clause(int c) const {
  return std::any_of(violations.begin(), violations.end(), [c](const QcViolation& v) { return v.clause == c; });
}

bool QcReport::has(int c, const std::string& element, int index) const {
  return std::any_of(violations.begin(), violations.end(), [&](const QcViolation& v) {
    return v.clause == c && v.element == element && v.index == index;
  });
}

QcReport validate_quasicrystal(const QuasiCrystalTable& t) {
  t.check_shape();
  QcReport rep;
  const int N = t.size();
  auto flag = [&](int clause, int x, int i, std::string d) {
    rep.violations.push_back({clause, t.elements[x], i, std::move(d)});
  };
  for (int x = 0; x < N; ++x) {
    for (int i = 1; i <= t.index_count(); ++i) {
      const ExtInt ex = t.eps_at(x, i), px = t.phi_at(x, i);
      const int pair = t.root.pairing(t.wt[x], i);
      if (ex + ExtInt(pair) != px)
        flag(1, x, i, "phi = " + to_string(px) + " but eps + <wt,alpha^vee> = " + to_string(ex + ExtInt(pair)));

      const Weight& a = t.root.alpha(i);
      if (int y = t.e_at(x, i); y != kUndef) {
        if (t.wt[y] != t.wt[x] + a) flag(2, x, i, "wt(e(x)) != wt(x) + alpha");
        if (ex.finite() && t.eps_at(y, i) != ex - 1) flag(2, x, i, "eps(e(x)) != eps(x) - 1");
        if (px.finite() && t.phi_at(y, i) != px + ExtInt(1)) flag(2, x, i, "phi(e(x)) != phi(x) + 1");
        if (t.f_at(y, i) != x) flag(4, x, i, "e(x) = " + t.elements[y] + " but f(" + t.elements[y] + ") != x");
      }
      if (int y = t.f_at(x, i); y != kUndef) {
        if (t.wt[y] != t.wt[x] - a) flag(3, x, i, "wt(f(x)) != wt(x) - alpha");
        if (ex.finite() && t.eps_at(y, i) != ex + ExtInt(1)) flag(3, x, i, "eps(f(x)) != eps(x) + 1");
        if (px.finite() && t.phi_at(y, i) != px - 1) flag(3, x, i, "phi(f(x)) != phi(x) - 1");
        if (t.e_at(y, i) != x) flag(4, x, i, "f(x) = " + t.elements[y] + " but e(" + t.elements[y] + ") != x");
      }
      bool moves = t.e_at(x, i) != kUndef || t.f_at(x, i) != kUndef;
      if (ex.is_neg_inf() && moves) flag(5, x, i, "eps = -inf but an operator is defined");
      if (ex.is_pos_inf() && moves) flag(6, x, i, "eps = +inf but an operator is defined");
    }
  }
  return rep;
}

bool is_seminormal(const QuasiCrystalTable& t) {
  t.check_shape();
  const int N = t.size();
  auto run = [&](const std::vector<std::vector<int>>& op, int x, int i) -> std::int64_t {
    std::int64_t k = 0;
    for (int y = op[x][i - 1]; y != kUndef; y = op[y][i - 1]) {
      if (++k > N) return -1;  // a cycle; cannot happen in a valid table
    }
    return k;
  };
  for (int x = 0; x < N; ++x) {
    for (int i = 1; i <= t.index_count(); ++i) {
      if (t.eps_at(x, i).is_pos_inf()) continue;
      std::int64_t a = run(t.e, x, i), b = run(t.f, x, i);
      if (a < 0 || b < 0) return false;
      if (t.eps_at(x, i) != ExtInt(a) || t.phi_at(x, i) != ExtInt(b)) return false;
    }
  }
  return true;
}

std::string letter_id(int letter) { return std::to_string(letter); }

QuasiCrystalTable standard_A(int n) {
  QuasiCrystalTable t(RootData::type_A(n));
  for (int x = 1; x <= n; ++x) t.add(letter_id(x), t.root.basis(x));
  for (int i = 1; i < n; ++i) {
    int lo = i - 1, hi = i;  // element positions of i and i+1
    t.e[hi][i - 1] = lo;
    t.f[lo][i - 1] = hi;
    t.eps[hi][i - 1] = 1;
    t.phi[lo][i - 1] = 1;
  }
  return t;
}

QuasiCrystalTable standard_C(int n) {
  QuasiCrystalTable t(RootData::type_C(n));
  // chain order 1 < ... < n < -n < ... < -1
  for (int x = 1; x <= n; ++x) t.add(letter_id(x), t.root.basis(x));
  for (int x = n; x >= 1; --x) t.add(letter_id(-x), -t.root.basis(x));
  auto pos = [n](int letter) { return letter > 0 ? letter - 1 : 2 * n + letter; };
  auto link = [&](int from, int to, int i) {  // f_i(from) = to
    int a = pos(from), b = pos(to);
    t.f[a][i - 1] = b;
    t.e[b][i - 1] = a;
    t.phi[a][i - 1] = 1;
    t.eps[b][i - 1] = 1;
  };
  for (int i = 1; i < n; ++i) {
    link(i, i + 1, i);
    link(-(i + 1), -i, i);
  }
  link(n, -n, n);
  return t;
}

QuasiCrystalTable fixture_A3_squared() {
  QuasiCrystalTable t(RootData::type_A(3));
  const ExtInt inf = ExtInt::pos_inf();
  struct Row {
    const char* id;
    Weight wt;
    const char *e1, *e2, *f1, *f2;
    ExtInt eps1, eps2, phi1, phi2;
  };
  const Row rows[] = {
      {"(1,1)", {2, 0, 0}, nullptr, nullptr, "(2,1)", nullptr, 0, 0, 2, 0},
      {"(1,2)", {1, 1, 0}, nullptr, nullptr, nullptr, "(1,3)", inf, 0, inf, 1},
      {"(1,3)", {1, 0, 1}, nullptr, "(1,2)", "(2,3)", nullptr, 0, 1, 1, 0},
      {"(2,1)", {1, 1, 0}, "(1,1)", nullptr, "(2,2)", "(3,1)", 1, 0, 1, 1},
      {"(2,2)", {0, 2, 0}, "(2,1)", nullptr, nullptr, "(3,2)", 2, 0, 0, 2},
      {"(2,3)", {0, 1, 1}, "(1,3)", nullptr, nullptr, nullptr, 1, inf, 0, inf},
      {"(3,1)", {1, 0, 1}, nullptr, "(2,1)", "(3,2)", nullptr, 0, 1, 1, 0},
      {"(3,2)", {0, 1, 1}, "(3,1)", "(2,2)", nullptr, "(3,3)", 1, 1, 0, 1},
      {"(3,3)", {0, 0, 2}, nullptr, "(3,2)", nullptr, nullptr, 0, 2, 0, 0},
  };
  for (const auto& r : rows) t.add(r.id, r.wt);
  auto idx = [&](const char* id) { return id ? t.index_of(id) : kUndef; };
  for (const auto& r : rows) {
    int x = t.index_of(r.id);
    t.e[x] = {idx(r.e1), idx(r.e2)};
    t.f[x] = {idx(r.f1), idx(r.f2)};
    t.eps[x] = {r.eps1, r.eps2};
    t.phi[x] = {r.phi1, r.phi2};
  }
  return t;
}

QuasiCrystalTable fixture_Q2() {
  QuasiCrystalTable t(RootData::type_A(2));
  int a = t.add("a", {1, 0});
  int b = t.add("b", {0, 1});
  t.eps[a][0] = 0;
  t.phi[a][0] = 1;
  t.eps[b][0] = 1;
  t.phi[b][0] = 0;
  return t;
}

ElementClass element_class(const QuasiCrystalTable& t, int x) {
  if (x < 0 || x >= t.size()) throw UnknownElement("element index " + std::to_string(x));
  ElementClass c{true, true, false};
  for (int i = 1; i <= t.index_count(); ++i) {
    if (t.e_at(x, i) != kUndef) c.highest_weight = false;
    if (t.f_at(x, i) != kUndef) c.lowest_weight = false;
  }
  c.isolated = c.highest_weight && c.lowest_weight;
  return c;
}

ElementClass element_class(const QuasiCrystalTable& t, const std::string& x) {
  return element_class(t, t.index_of(x));
}

namespace {

// conditions (2)-(4) of a homomorphism; returns the first failure
std::string hom_failure(const QuasiCrystalTable& src, const QuasiCrystalTable& dst,
                        const std::vector<int>& map) {
  for (int x = 0; x < src.size(); ++x) {
    int y = map[x];
    if (y == kUndef) continue;
    if (src.wt[x] != dst.wt[y]) return "weight differs at " + src.elements[x];
    for (int i = 1; i <= src.index_count(); ++i) {
      if (src.eps_at(x, i) != dst.eps_at(y, i) || src.phi_at(x, i) != dst.phi_at(y, i))
        return "eps/phi differ at " + src.elements[x] + ", i=" + std::to_string(i);
      for (int which = 0; which < 2; ++which) {
        int gx = which ? src.f_at(x, i) : src.e_at(x, i);
        if (gx == kUndef || map[gx] == kUndef) continue;
        int gy = which ? dst.f_at(y, i) : dst.e_at(y, i);
        if (map[gx] != gy)
          return std::string(which ? "f" : "e") + "_" + std::to_string(i) + " does not commute at " +
                 src.elements[x];
      }
    }
  }
  return {};
}

}  // namespace

HomCheck check_homomorphism(const QuasiCrystalTable& src, const QuasiCrystalTable& dst,
                            const std::vector<int>& map) {
  if (!(src.root == dst.root)) throw MismatchedType("quasi-crystals of different types");
  if (static_cast<int>(map.size()) != src.size()) throw InvalidData("map is not defined on every element");
  for (int y : map)
    if (y != kUndef && (y < 0 || y >= dst.size())) throw UnknownElement("map target out of range");
  HomCheck res;
  res.reason = hom_failure(src, dst, map);
  res.is_hom = res.reason.empty();
  if (!res.is_hom) return res;

  std::vector<int> inv(dst.size(), kUndef);
  bool bijective = src.size() == dst.size();
  for (int x = 0; bijective && x < src.size(); ++x) {
    if (map[x] == kUndef || inv[map[x]] != kUndef) bijective = false;
    else inv[map[x]] = x;
  }
  if (!bijective) {
    res.reason = "not bijective";
    return res;
  }
  std::string back = hom_failure(dst, src, inv);
  res.is_iso = back.empty();
  if (!res.is_iso) res.reason = "inverse: " + back;
  return res;
}

HomCheck check_homomorphism(const QuasiCrystalTable& src, const QuasiCrystalTable& dst,
                            const std::map<std::string, std::string>& map) {
  std::vector<int> m(src.size(), kUndef);
  for (const auto& [a, b] : map) m[src.index_of(a)] = dst.index_of(b);
  return check_homomorphism(src, dst, m);
}

nlohmann::json to_json(const QuasiCrystalTable& t) {
  using nlohmann::json;
  json j;
  j["root"] = to_json(t.root);
  j["elements"] = t.elements;
  json wt = json::object(), eps = json::object(), phi = json::object(), e = json::object(), f = json::object();
  for (int x = 0; x < t.size(); ++x) {
    const auto& id = t.elements[x];
    wt[id] = t.wt[x];
    json ex = json::array(), px = json::array(), ee = json::array(), ff = json::array();
    for (int i = 1; i <= t.index_count(); ++i) {
      ex.push_back(to_json(t.eps_at(x, i)));
      px.push_back(to_json(t.phi_at(x, i)));
      ee.push_back(t.e_at(x, i) == kUndef ? json(nullptr) : json(t.elements[t.e_at(x, i)]));
      ff.push_back(t.f_at(x, i) == kUndef ? json(nullptr) : json(t.elements[t.f_at(x, i)]));
    }
    eps[id] = ex;
    phi[id] = px;
    e[id] = ee;
    f[id] = ff;
  }
  j["wt"] = wt;
  j["eps"] = eps;
  j["phi"] = phi;
  j["e"] = e;
  j["f"] = f;
  return j;
}

QuasiCrystalTable table_from_json(const nlohmann::json& j) {
  try {
    QuasiCrystalTable t(root_data_from_json(j.at("root")));
    for (const auto& id : j.at("elements")) t.add(id.get<std::string>(), j.at("wt").at(id.get<std::string>()).get<Weight>());
    const int m = t.index_count();
    for (int x = 0; x < t.size(); ++x) {
      const auto& id = t.elements[x];
      const auto &ex = j.at("eps").at(id), &px = j.at("phi").at(id);
      const auto &ee = j.at("e").at(id), &ff = j.at("f").at(id);
      if (static_cast<int>(ex.size()) != m || static_cast<int>(px.size()) != m ||
          static_cast<int>(ee.size()) != m || static_cast<int>(ff.size()) != m)
        throw InvalidData("per-index lists of wrong length at " + id);
      for (int i = 0; i < m; ++i) {
        t.eps[x][i] = extint_from_json(ex[i]);
        t.phi[x][i] = extint_from_json(px[i]);
        t.e[x][i] = ee[i].is_null() ? kUndef : t.index_of(ee[i].get<std::string>());
        t.f[x][i] = ff[i].is_null() ? kUndef : t.index_of(ff[i].get<std::string>());
      }
    }
    t.check_shape();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("quasi-crystal table: ") + e.what());
  }
}

}  // namespace qck
