#include <set>

#include "doctest.h"
#include "weylcs/sheafres.hpp"

using namespace weylcs;

TEST_CASE("weyl stabilizer basics") {
  auto rs = build_root_system("G2");
  auto identity = weyl_stabilizer(rs, TorsionPoint::identity(2));
  CHECK(to_i64(identity.w_L.order) == 12);
  CHECK(identity.component == "1");
  auto t = isolated_point_with_centralizer(rs, 2, "A1+Ã1");
  auto ks = weyl_stabilizer(rs, t);
  CHECK(to_i64(ks.w_L.order) == 4);
  CHECK(ks.component == "1");
}

TEST_CASE("center component orders") {
  auto e8 = build_root_system("E8");
  for (auto& el : isolated_elements(e8, 2)) {
    if (el.centralizer.type_str() == "D8") CHECK(center_component_order(el.centralizer) == 2);
    if (el.centralizer.type_str() == "E7+A1")
      CHECK(center_component_order(el.centralizer) == 2);
  }
  for (auto& el : isolated_elements(e8, 3))
    if (el.centralizer.type_str() == "E6+A2") CHECK(center_component_order(el.centralizer) == 3);
}

TEST_CASE("the G2 example of the paper") {
  // W_L of type A1+~A1; one coset contributes through the sign of the C2
  // component, the other through the full intersection
  auto rs = build_root_system("G2");
  auto t = isolated_point_with_centralizer(rs, 2, "A1+Ã1");
  KummerShadow L = weyl_stabilizer(rs, t);
  auto report = restriction_multiplicities(rs, "2,2", L, t);
  REQUIRE(report.per_coset.size() == 2);
  std::multiset<i64> orders;
  std::multiset<std::string> comps;
  for (auto& c : report.per_coset) {
    orders.insert(to_i64(c.intersection_order));
    comps.insert(c.component);
  }
  CHECK(orders == std::multiset<i64>{2, 4});
  CHECK(comps == std::multiset<std::string>{"1", "C2"});
  // for E = triv x triv the surviving E' are exactly (1,1) on the full coset
  // and the two mixed-sign characters on the sign-twisted coset
  std::map<std::string, i64> total;
  for (auto& c : report.per_coset)
    for (auto& [label, m] : c.multiplicities) total[label] += m;
  CHECK(total == std::map<std::string, i64>{{"2,2", 1}, {"2,11", 1}, {"11,2", 1}});
  // restriction to the subregular mixed class: nonzero for E = (1,1)
  CHECK(restrict_to_mixed_class(report, "2,2") == "nonzero:1");
  // and zero for E = (-1,-1) = sign x sign
  auto report2 = restriction_multiplicities(rs, "11,11", L, t);
  CHECK(restrict_to_mixed_class(report2, "2,2") == "zero");
}

TEST_CASE("degenerate configuration s = identity") {
  auto rs = build_root_system("G2");
  auto t = isolated_point_with_centralizer(rs, 2, "A1+Ã1");
  KummerShadow L = weyl_stabilizer(rs, t);
  auto report = restriction_multiplicities(rs, "2,2", L, TorsionPoint::identity(rs->rank));
  CHECK(report.h_type == "G2");
  CHECK(report.per_coset.size() == 1);
  // single coset: multiplicities are plain restrictions over W_L
  CHECK(report.mackey_checked);
  // the regular class of H supports the trivial system for E = trivial
  CHECK(restrict_to_mixed_class(report, "G2") == "nonzero:1");
}

TEST_CASE("stabilizers exceeding the integrality group are rejected") {
  // in B3 the short-root reflections fix this point without pairing
  // integrally with it; the labels of Irr(W_L) are then not defined by the
  // integrality subsystem and the computation refuses rather than guesses
  auto rs = build_root_system("B3");
  auto t = isolated_point_with_centralizer(rs, 2, "A3");
  KummerShadow L = weyl_stabilizer(rs, t);
  CHECK(L.w_L.order > type_weyl_order(L.integrality.type_decomposition));
  CHECK_THROWS_WITH_AS(
      restriction_multiplicities(rs, "4", L, TorsionPoint::identity(rs->rank)),
      doctest::Contains("not reflection-generated"), std::runtime_error);
}

TEST_CASE("verdict invariant under conjugating s") {
  auto rs = build_root_system("G2");
  auto t = isolated_point_with_centralizer(rs, 2, "A1+Ã1");
  KummerShadow L = weyl_stabilizer(rs, t);
  auto base = restriction_multiplicities(rs, "11,11", L, t);
  std::string verdict = restrict_to_mixed_class(base, "2,2");
  auto W = weyl_group(rs);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3; ++i) {
    Perm w = W.random_element(rng);
    TorsionPoint ts = apply_perm_point(*rs, w, t);
    auto rep = restriction_multiplicities(rs, "11,11", L, ts);
    CHECK(restrict_to_mixed_class(rep, "2,2") == verdict);
  }
}

TEST_CASE("translate label") {
  CharacterTable s2 = table_for_type("A1");
  std::vector<i64> sign_values;
  int sgn = s2.char_index("11");
  for (int c = 0; c < s2.nclasses(); ++c) sign_values.push_back(s2.chars[sgn].values[c]);
  CHECK(translate_label(s2, "2", sign_values) == "11");
  CHECK(translate_label(s2, "11", sign_values) == "2");
  // chi trivial fixes everything; twice the sign is the identity
  CharacterTable g2 = table_for_type("G2");
  std::vector<i64> triv(g2.nclasses(), 1);
  for (auto& ch : g2.chars) CHECK(translate_label(g2, ch.label, triv) == ch.label);
}

TEST_CASE("chi undetermined outside the supported components") {
  auto rs = build_root_system("G2");
  auto W = weyl_group(rs);
  Perm rot = pmul(W.generators[0], W.generators[1]);
  auto C6 = make_group(rs, {rot}, 6);
  auto [c0, comp] = reflection_closure(W, C6);
  Subsystem dummy = make_subsystem(rs, {rs->simple_refs[0]});
  CHECK_THROWS_WITH_AS(chi_character(C6, c0, comp.label, dummy),
                       doctest::Contains("undetermined"), std::runtime_error);
}
