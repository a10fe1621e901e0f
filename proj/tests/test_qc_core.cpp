#include "catch_amalgamated.hpp"

#include "qck/errors.hpp"
#include "qck/qc_core.hpp"

using namespace qck;

TEST_CASE("extended integers") {
  const ExtInt ninf = ExtInt::neg_inf(), pinf = ExtInt::pos_inf();
  CHECK(ninf < ExtInt(-1000000));
  CHECK(ExtInt(1000000) < pinf);
  CHECK(ExtInt(2) + ExtInt(3) == ExtInt(5));
  CHECK(pinf + ExtInt(-7) == pinf);
  CHECK(ninf + ExtInt(7) == ninf);
  CHECK_THROWS(pinf + ninf);
  CHECK(max(ninf, ExtInt(0)) == ExtInt(0));
  CHECK(to_string(pinf) == "+inf");
  CHECK(to_string(ninf) == "-inf");
  CHECK(extint_from_json(to_json(pinf)) == pinf);
  CHECK(extint_from_json(to_json(ExtInt(-3))) == ExtInt(-3));
}

TEST_CASE("fixtures are quasi-crystals") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(validate_quasicrystal(standard_A(n)).ok());
    CHECK(validate_quasicrystal(standard_C(n)).ok());
  }
  CHECK(validate_quasicrystal(fixture_A3_squared()).ok());
  CHECK(validate_quasicrystal(fixture_Q2()).ok());
}

TEST_CASE("phi of a in Q2 set to 0 breaks clause 1 at (a,1)") {
  auto q = fixture_Q2();
  q.phi[q.index_of("a")][0] = 0;
  auto r = validate_quasicrystal(q);
  CHECK(r.has(1, "a", 1));
}

TEST_CASE("clause-by-clause violations") {
  auto t = standard_A(3);
  SECTION("e without matching f") {
    t.f[0][0] = kUndef;  // f_1(1) removed, e_1(2) = 1 remains
    auto r = validate_quasicrystal(t);
    CHECK(r.has_clause(4));
  }
  SECTION("weight of the image") {
    t.wt[1] = {0, 1, 1};
    CHECK_FALSE(validate_quasicrystal(t).ok());
  }
  SECTION("+inf with an operator") {
    t.eps[0][0] = t.phi[0][0] = ExtInt::pos_inf();
    CHECK(validate_quasicrystal(t).has(6, "1", 1));
  }
  SECTION("-inf with an operator") {
    t.eps[0][0] = t.phi[0][0] = ExtInt::neg_inf();
    CHECK(validate_quasicrystal(t).has(5, "1", 1));
  }
  SECTION("-inf on an isolated site is allowed") {
    // element 3 has no 1-operators; eps = phi = -inf keeps clause 1
    t.eps[2][0] = t.phi[2][0] = ExtInt::neg_inf();
    CHECK(validate_quasicrystal(t).ok());
    CHECK_FALSE(is_seminormal(t));
  }
}

TEST_CASE("seminormality") {
  CHECK(is_seminormal(standard_A(3)));
  CHECK(is_seminormal(standard_C(3)));
  CHECK(is_seminormal(fixture_A3_squared()));
  CHECK_FALSE(is_seminormal(fixture_Q2()));
}

TEST_CASE("standard graphs are the expected chains") {
  auto c = standard_C(3);
  // 1 -1-> 2 -2-> 3 -3-> -3 -2-> -2 -1-> -1
  const std::vector<std::pair<std::string, int>> chain = {{"1", 1}, {"2", 2}, {"3", 3}, {"-3", 2}, {"-2", 1}};
  std::string cur = "1";
  for (auto& [id, label] : chain) {
    REQUIRE(cur == id);
    int x = c.index_of(id);
    int y = c.f_at(x, label);
    REQUIRE(y != kUndef);
    cur = c.elements[y];
  }
  CHECK(cur == "-1");
  CHECK(standard_A(4).f_at(standard_A(4).index_of("2"), 2) == standard_A(4).index_of("3"));
}

TEST_CASE("element classes") {
  auto a3 = standard_A(3);
  auto c1 = element_class(a3, "1");
  CHECK(c1.highest_weight);
  CHECK_FALSE(c1.lowest_weight);
  auto sq = fixture_A3_squared();
  CHECK(element_class(sq, "(1,1)").highest_weight);
  CHECK(element_class(sq, "(1,2)").highest_weight);
  auto z = element_class(sq, "(2,1)");
  CHECK_FALSE(z.highest_weight);
  CHECK_FALSE(z.lowest_weight);
  CHECK_THROWS_AS(element_class(sq, "(4,4)"), UnknownElement);
}

TEST_CASE("homomorphisms") {
  auto h = check_homomorphism(fixture_Q2(), standard_A(2), std::map<std::string, std::string>{{"a", "1"}, {"b", "2"}});
  CHECK(h.is_hom);
  CHECK_FALSE(h.is_iso);

  auto c2 = standard_C(2);
  std::vector<int> id(c2.size());
  for (int k = 0; k < c2.size(); ++k) id[k] = k;
  auto hi = check_homomorphism(c2, c2, id);
  CHECK(hi.is_hom);
  CHECK(hi.is_iso);

  auto swap = check_homomorphism(standard_A(2), standard_A(2), std::map<std::string, std::string>{{"1", "2"}, {"2", "1"}});
  CHECK_FALSE(swap.is_hom);

  CHECK_THROWS_AS(check_homomorphism(standard_A(2), standard_C(2), std::vector<int>{0, 1}), MismatchedType);
}

TEST_CASE("table json round trip") {
  for (const auto& t : {standard_C(2), fixture_A3_squared(), fixture_Q2()}) {
    auto u = table_from_json(to_json(t));
    CHECK(u.elements == t.elements);
    CHECK(u.wt == t.wt);
    CHECK(u.eps == t.eps);
    CHECK(u.phi == t.phi);
    CHECK(u.e == t.e);
    CHECK(u.f == t.f);
    CHECK(u.root == t.root);
  }
}
