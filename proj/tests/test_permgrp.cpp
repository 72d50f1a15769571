#include <map>
#include <set>

#include "doctest.h"
#include "weylcs/permgrp.hpp"

using namespace weylcs;

namespace {

Subsystem subsystem_of_type(std::shared_ptr<const RootSystem> rs, const std::string& label) {
  for (auto& sub : pseudo_levis_impl(rs, true))
    if (sub.type_str() == label) return sub;
  throw std::runtime_error("no subsystem of type " + label);
}

std::vector<Perm> all_elements(const GroupCtx& G) {
  std::set<Perm> seen;
  std::vector<Perm> work{Perm(G.degree())};
  seen.insert(work[0]);
  while (!work.empty()) {
    Perm w = work.back();
    work.pop_back();
    for (auto& g : G.generators) {
      Perm c = pmul(w, g);
      if (seen.insert(c).second) work.push_back(c);
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

}  // namespace

TEST_CASE("reflection basics") {
  auto a1 = build_root_system("A1");
  Perm s = reflection(*a1, 0);
  CHECK(s.img[0] == 1);
  CHECK(s.img[1] == 0);
  auto g2 = build_root_system("G2");
  for (int r = 0; r < g2->nroots(); ++r) {
    Perm ref = reflection(*g2, r);
    CHECK(pmul(ref, ref).is_identity());
    CHECK(ref.img[r] == g2->negate(r));
  }
  // long simple root of G2 moves exactly 2 short-root pairs
  std::vector<int> e{1, 0};
  int lng = g2->root_index.at(e);
  REQUIRE(g2->root_norm(lng) == 6);
  Perm ref = reflection(*g2, lng);
  int moved_short = 0;
  for (int r = 0; r < g2->nroots(); ++r)
    if (g2->root_norm(r) == 2 && ref.img[r] != r) ++moved_short;
  CHECK(moved_short == 4);  // 2 pairs
  CHECK_THROWS(reflection(*g2, 12));
}

TEST_CASE("weyl group orders") {
  CHECK(to_i64(weyl_group(build_root_system("G2")).order) == 12);
  CHECK(to_i64(weyl_group(build_root_system("F4")).order) == 1152);
  CHECK(to_i64(weyl_group(build_root_system("A1")).order) == 2);
  auto rs = build_root_system("E8");
  auto W = weyl_group(rs);
  CHECK(to_i64(W.order) == 696729600);
  i128 from_chain = 1;
  for (auto& lvl : W.chain) from_chain *= (i128)lvl.orbit.size();
  CHECK(from_chain == W.order);
}

TEST_CASE("subsystem groups inside E8") {
  auto rs = build_root_system("E8");
  auto d8 = group_from_subsystem(subsystem_of_type(rs, "D8"));
  CHECK(to_i64(d8.order) == 5160960);
  auto e6a2 = group_from_subsystem(subsystem_of_type(rs, "E6+A2"));
  CHECK(to_i64(e6a2.order) == 311040);
}

TEST_CASE("coset and double coset counts in E8") {
  auto rs = build_root_system("E8");
  auto W = weyl_group(rs);
  auto H = group_from_subsystem(subsystem_of_type(rs, "D8"));
  auto L = group_from_subsystem(subsystem_of_type(rs, "E6+A2"));
  auto reps_h = coset_reps(W, H);
  CHECK(reps_h.size() == 135);
  auto dc = double_cosets(W, H, L);
  CHECK(dc.reps.size() == 2);
  CHECK(dc.reps[0].is_identity());
  i128 total = 0;
  for (auto s : dc.sizes) total += s;
  CHECK(total == W.order);
  auto self_dc = double_cosets(W, W, W);
  CHECK(self_dc.reps.size() == 1);
  auto reps_l = coset_reps(W, L);
  CHECK(reps_l.size() == 2240);
}

TEST_CASE("double cosets match brute force in G2") {
  auto rs = build_root_system("G2");
  auto W = weyl_group(rs);
  auto A2 = group_from_subsystem(subsystem_of_type(rs, "A2"));
  auto A1A1 = group_from_subsystem(subsystem_of_type(rs, "A1+Ã1"));
  auto dc = double_cosets(W, A2, A1A1);
  // brute force over all 12 elements
  auto elements = all_elements(W);
  REQUIRE(elements.size() == 12);
  std::set<std::set<std::vector<uint16_t>>> classes;
  auto a2_el = all_elements(A2);
  auto a11_el = all_elements(A1A1);
  for (auto& w : elements) {
    std::set<std::vector<uint16_t>> dcl;
    for (auto& h : a2_el)
      for (auto& k : a11_el) dcl.insert(pmul(pmul(h, w), k).img);
    classes.insert(dcl);
  }
  CHECK(dc.reps.size() == classes.size());
  i128 total = 0;
  for (auto s : dc.sizes) total += s;
  CHECK(total == 12);
}

TEST_CASE("fingerprints") {
  auto rs = build_root_system("E8");
  auto W = weyl_group(rs);
  Perm id(rs->nroots());
  auto f = fingerprint(*rs, id);
  // (x-1)^8: leading 1, constant 1, alternating binomials
  CHECK(f.charpoly == std::vector<i128>{1, -8, 28, -56, 70, -56, 28, -8, 1});
  CHECK(f.cycles == std::vector<std::pair<int, int>>{{1, 240}});
  Perm s = reflection(*rs, 0);
  auto fs = fingerprint(*rs, s);
  // (x+1)(x-1)^7 has constant term -1
  CHECK(fs.charpoly[0] == -1);
  CHECK(fs.charpoly[8] == 1);
  // Coxeter element has order 30 = Coxeter number of E8
  Perm cox = id;
  for (int i = 0; i < 8; ++i) {
    std::vector<int> e(8, 0);
    e[i] = 1;
    cox = pmul(cox, reflection(*rs, rs->root_index.at(e)));
  }
  CHECK(perm_order(cox) == 30);
}

TEST_CASE("conjugacy tests") {
  auto rs = build_root_system("A2");
  auto W = weyl_group(rs);
  Perm s0 = reflection(*rs, 0), s1 = reflection(*rs, 1);
  CHECK(are_conjugate(W, s0, s0));
  auto w = conjugacy_witness(W, s0, s1);
  REQUIRE(w.has_value());
  CHECK(conj(s0, *w) == s1);

  auto g2 = build_root_system("G2");
  auto Wg = weyl_group(g2);
  std::vector<int> e0{1, 0}, e1{0, 1};
  Perm lng = reflection(*g2, g2->root_index.at(e0));
  Perm sht = reflection(*g2, g2->root_index.at(e1));
  CHECK_FALSE(are_conjugate(Wg, lng, sht));

  auto e8 = build_root_system("E8");
  auto W8 = weyl_group(e8);
  std::mt19937_64 rng(7);
  Perm x = W8.random_element(rng);
  Perm g = W8.random_element(rng);
  Perm h = conj(g, x);
  auto v = conjugacy_witness(W8, g, h);
  REQUIRE(v.has_value());
  CHECK(conj(g, *v) == h);
}

TEST_CASE("centralizer sizes certify class sizes in G2 and F4") {
  for (auto label : {"G2", "F4"}) {
    auto rs = build_root_system(label);
    auto W = weyl_group(rs);
    auto elements = all_elements(W);
    std::map<std::vector<uint16_t>, int> brute;  // element -> class size via orbit
    std::mt19937_64 rng(11);
    for (auto& g : elements) {
      // brute-force centralizer
      int c = 0;
      for (auto& x : elements)
        if (pmul(x, g) == pmul(g, x)) ++c;
      auto C = centralizer(W, g, rng, 12);
      CHECK(to_i64(C.order) == c);
    }
  }
}

TEST_CASE("reflection closure of reflection subgroup is itself") {
  auto rs = build_root_system("G2");
  auto W = weyl_group(rs);
  auto A2 = group_from_subsystem(subsystem_of_type(rs, "A2"));
  auto [S0, comp] = reflection_closure(W, A2);
  CHECK(S0.order == A2.order);
  CHECK(comp.label == "1");
}

TEST_CASE("reflection closure part is normal in the subgroup") {
  auto rs = build_root_system("B3");
  auto W = weyl_group(rs);
  // a stabilizer subgroup exceeding its reflection part (see the sheafres test)
  auto t = TorsionPoint::fundamental_coweight_over(2, 2, 3);
  auto S = stabilizer_of(W, [&](const Perm& w) { return apply_perm_point(*rs, w, t).str(); });
  auto [S0, comp] = reflection_closure(W, S);
  CHECK(S.order == S0.order * (i128)comp.coset_reps.size());
  CHECK(S.order % S0.order == 0);
  for (auto& g : S.generators)
    for (auto& lvl : S0.chain)
      for (auto& h : lvl.gens) CHECK(S0.contains(conj(h, g)));
}

TEST_CASE("reflection closure detects cyclic component") {
  // <rotation by 60 degrees> in W(G2): no reflections, component C6
  auto rs = build_root_system("G2");
  auto W = weyl_group(rs);
  Perm cox = pmul(W.generators[0], W.generators[1]);
  REQUIRE(perm_order(cox) == 6);
  auto C = make_group(rs, {cox}, 6);
  auto [S0, comp] = reflection_closure(W, C);
  CHECK(to_i64(S0.order) == 1);
  CHECK(comp.label == "C6");
}

TEST_CASE("stabilizer of torsion point") {
  auto rs = build_root_system("E8");
  auto W = weyl_group(rs);
  for (auto& el : isolated_elements(rs, 3)) {
    if (el.centralizer.type_str() != "E6+A2") continue;
    auto pt = el.point;
    auto stab = stabilizer_of(W, [&](const Perm& w) { return apply_perm_point(*rs, w, pt).str(); });
    CHECK(to_i64(stab.order) == 311040);
  }
}

TEST_CASE("words round trip") {
  auto rs = build_root_system("F4");
  auto W = weyl_group(rs);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Perm g = W.random_element(rng);
    CHECK(perm_from_word(*rs, word_for(*rs, g)) == g);
  }
}
