#include <set>

#include "doctest.h"
#include "weylcs/springer.hpp"

using namespace weylcs;

TEST_CASE("type A springer data") {
  auto st = springer_for_type("A2");
  // chi_lambda maps to the class lambda; all classes special with trivial A(u)
  for (auto& c : st.classes) {
    CHECK(c.special);
    CHECK(c.a_group == "1");
    CHECK(*st.springer_char(c.name) == c.name);
  }
}

TEST_CASE("so and sp combinatorics") {
  // dimensions against the closed formulas checked by hand
  CHECK(so_class_dim(parse_partition("311"), 5) == 6);
  CHECK(so_class_dim(parse_partition("221"), 5) == 4);
  CHECK(so_class_dim(parse_partition("5"), 5) == 8);
  CHECK(sp_class_dim(parse_partition("22"), 4) == 6);
  CHECK(sp_class_dim(parse_partition("4"), 4) == 8);
  CHECK(so_a_group(parse_partition("6631")) == std::string("C2"));
  // springer bipartitions: B2 cases computed by hand
  auto [a1, b1] = springer_bipartition('B', 2, parse_partition("311"));
  CHECK(partition_label(a1) == "1");
  CHECK(partition_label(b1) == "1");
  auto [a2, b2] = springer_bipartition('B', 2, parse_partition("11111"));
  CHECK(partition_label(a2) == "-");
  CHECK(partition_label(b2) == "11");
}

TEST_CASE("classical springer tables validate") {
  for (auto label : {"B2", "B3", "C3", "D4", "D5"}) {
    auto st = springer_for_type(label);
    validate_springer_table(st);
    // every class has its trivial local system exactly once (validated inside)
    CHECK(st.classes.size() == st.pairs.size());
  }
}

TEST_CASE("D8 springer data for the paper classes") {
  auto st = springer_for_type("D8");
  auto& c6631 = st.class_ref("6631");
  CHECK(c6631.dim == 98);
  auto chr = st.springer_char("6631");
  REQUIRE(chr.has_value());
  // b = (120 - 8 - 98)/2 = 7
  CharacterTable t = table_for_type("D8");
  CHECK(t.chars[t.char_index(*chr)].b == 7);
  CHECK(st.find_class("7522") != nullptr);
  CHECK(st.springer_char("7522").has_value());
}

TEST_CASE("very even classes split") {
  auto st = springer_for_type("D4");
  CHECK(st.find_class("44+") != nullptr);
  CHECK(st.find_class("44-") != nullptr);
  CHECK(st.class_ref("44+").dim == st.class_ref("44-").dim);
  CHECK(*st.springer_char("44+") != *st.springer_char("44-"));
}

TEST_CASE("exceptional springer tables load and validate") {
  for (auto label : {"G2", "F4", "E6", "E7", "E8"}) {
    auto st = springer_for_type(label);
    validate_springer_table(st);
    CharacterTable t = table_for_type(label);
    CHECK((int)st.pairs.size() == t.nchars());
  }
  auto e8 = springer_for_type("E8");
  CHECK(e8.classes.size() == 70);
  // paper anchors
  auto& c = e8.class_ref("E6(a3)+A1");
  CHECK(c.a_group == "S2");
  CHECK(c.omega_ell.at(3) == "S2");
  CHECK(e8.class_ref("E7(a5)").a_group == "S3");
  CHECK(e8.class_ref("E7(a5)").omega_ell.at(2) == "S3");
  CHECK(e8.class_ref("E8(b6)").a_group == "S3");
  CHECK(e8.class_ref("E8(b6)").omega == "S2");
  // sign character maps to the trivial class, trivial char to the regular one
  CHECK(*e8.springer_char("1") == "phi1,120");
  CHECK(*e8.springer_char("E8") == "phi1,0");
}

TEST_CASE("bala carter class counts") {
  CHECK(bala_carter_classes(build_root_system("G2")).size() == 5);
  CHECK(bala_carter_classes(build_root_system("F4")).size() == 16);
  CHECK(bala_carter_classes(build_root_system("E6")).size() == 21);
}

TEST_CASE("products compose") {
  auto st = springer_for_type("E6+A2");
  CHECK(st.find_class("A2,111") != nullptr);
  auto chr = st.springer_char("A2,111");
  REQUIRE(chr.has_value());
  CHECK(*chr == "phi30,15,111");
  CHECK(st.class_ref("A2,111").special);
}

TEST_CASE("fusion facts") {
  auto& facts = bundled_fusion_facts();
  auto f = fused_class(facts, "D8", "6631", "E8");
  REQUIRE(f.has_value());
  CHECK(f->ambient_class == "E6(a3)+A1");
  CHECK(f->unique);
  auto f2 = fused_class(facts, "D8", "7522", "E8");
  REQUIRE(f2.has_value());
  CHECK(f2->ambient_class == "E7(a5)");
  auto f3 = fused_class(facts, "A8", "63", "E8");
  REQUIRE(f3.has_value());
  CHECK(f3->ambient_class == "E7(a5)");
  CHECK_FALSE(fused_class(facts, "D8", "88", "E8").has_value());
}

TEST_CASE("classical a-invariants") {
  // B2 values derived by hand from the symbol formula
  CHECK(classical_a_invariant('B', 2, {2}, {}) == 0);
  CHECK(classical_a_invariant('B', 2, {1}, {1}) == 1);
  CHECK(classical_a_invariant('B', 2, {1, 1}, {}) == 1);
  CHECK(classical_a_invariant('B', 2, {}, {2}) == 1);
  CHECK(classical_a_invariant('B', 2, {}, {1, 1}) == 4);
  // a <= b for every character of D8 and B4
  for (auto spec : {std::make_pair('D', 8), std::make_pair('B', 4)}) {
    CharacterTable t = classical_table(spec.first, spec.second);
    attach_classical_a_invariants(t, spec.first);
    for (auto& ch : t.chars) {
      CHECK(ch.a >= 0);
      CHECK(ch.a <= ch.b);
    }
  }
}

TEST_CASE("special characters by closure are special") {
  // the closure is a lower bound for the special set {a = b}
  CharacterTable g2 = table_for_type("G2");
  auto specials = special_characters(g2);
  std::set<std::string> sp(specials.begin(), specials.end());
  CHECK(sp.size() == 3);  // phi1,0, phi2,1, phi1,6
  for (auto& s : special_characters_by_closure("G2")) CHECK(sp.count(s));
}
