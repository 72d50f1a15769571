#include <algorithm>
#include <set>

#include "doctest.h"
#include "weylcs/rootdata.hpp"

using namespace weylcs;

namespace {

// Independent closure oracle: reflect integer vectors through the Cartan
// matrix directly, no RootSystem machinery.
int brute_force_root_count(const std::string& label) {
  auto rs = build_root_system(label);
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> work;
  for (int i = 0; i < rs->rank; ++i) {
    std::vector<int> e(rs->rank, 0);
    e[i] = 1;
    all.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    auto r = work.back();
    work.pop_back();
    for (int i = 0; i < rs->rank; ++i) {
      int c = 0;
      for (int j = 0; j < rs->rank; ++j) c += rs->cartan[i][j] * r[j];
      auto v = r;
      v[i] -= c;
      if (all.insert(v).second) work.push_back(v);
    }
    auto neg = r;
    for (auto& x : neg) x = -x;
    if (all.insert(neg).second) work.push_back(neg);
  }
  return (int)all.size();
}

bool has_type(const std::vector<Subsystem>& subs, const std::string& label) {
  return std::any_of(subs.begin(), subs.end(),
                     [&](const Subsystem& s) { return s.type_str() == label; });
}

}  // namespace

TEST_CASE("rank one") {
  auto rs = build_root_system("A1");
  CHECK(rs->nroots() == 2);
  CHECK(rs->degrees == std::vector<int>{2});
  CHECK(to_i64(rs->weyl_order()) == 2);
}

TEST_CASE("E8 basic data") {
  auto rs = build_root_system("E8");
  CHECK(rs->nroots() == 240);
  CHECK(rs->positive_count == 120);
  CHECK(rs->degrees == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
  i128 o = 1;
  for (int d : rs->degrees) o *= d;
  CHECK(to_i64(o) == 696729600);
}

TEST_CASE("G2 brute force closure") {
  auto rs = build_root_system("G2");
  CHECK(rs->nroots() == 12);
  CHECK(brute_force_root_count("G2") == 12);
  CHECK(rs->extended_marks == std::vector<int>{1, 2, 3});
}

TEST_CASE("closure oracle agrees on more types") {
  for (auto label : {"A3", "B3", "C3", "D4", "F4"}) {
    auto rs = build_root_system(label);
    CHECK(rs->nroots() == brute_force_root_count(label));
  }
  CHECK(build_root_system("B3")->nroots() == 18);
  CHECK(build_root_system("D4")->nroots() == 24);
  CHECK(build_root_system("F4")->nroots() == 48);
}

TEST_CASE("roots closed under negation and sign split") {
  auto rs = build_root_system("E6+A2");
  CHECK(rs->rank == 8);
  int nonneg = 0;
  for (int i = 0; i < rs->nroots(); ++i) {
    bool ok = true;
    for (int x : rs->roots[i])
      if (x < 0) ok = false;
    if (ok) ++nonneg;
    CHECK(rs->roots[rs->negate(i)] == [&] {
      auto v = rs->roots[i];
      for (auto& x : v) x = -x;
      return v;
    }());
  }
  CHECK(nonneg == rs->positive_count);
}

TEST_CASE("extended diagram relation") {
  for (auto label : {"G2", "F4", "E6", "D5", "B4", "C3", "A4"}) {
    auto rs = build_root_system(label);
    // affine root is minus the highest root; marks give sum_i c_i a_i = 0
    auto aff = rs->affine_roots[0];
    std::vector<int> sum = aff;
    for (int i = 0; i < rs->rank; ++i) sum[i] += rs->extended_marks[i + 1];
    for (int x : sum) CHECK(x == 0);
  }
}

TEST_CASE("cartan pairing consistency") {
  auto rs = build_root_system("F4");
  for (int i = 0; i < rs->rank; ++i)
    for (int j = 0; j < rs->rank; ++j) {
      std::vector<int> ei(rs->rank, 0), ej(rs->rank, 0);
      ei[i] = 1;
      ej[j] = 1;
      CHECK(rs->pair_coroot(ej, ei) == rs->cartan[i][j]);
    }
}

TEST_CASE("unknown labels rejected") {
  CHECK_THROWS(build_root_system("H4"));
  CHECK_THROWS(build_root_system("E9"));
  CHECK_THROWS(build_root_system(""));
  CHECK_THROWS(build_root_system("D3"));
}

TEST_CASE("pseudo levis of G2") {
  auto rs = build_root_system("G2");
  auto subs = pseudo_levis(rs);
  CHECK(has_type(subs, "G2"));
  CHECK(has_type(subs, "A2"));
  CHECK(has_type(subs, "A1+Ã1"));
  CHECK(has_type(subs, "0"));
}

TEST_CASE("pseudo levis of A1") {
  auto rs = build_root_system("A1");
  auto subs = pseudo_levis(rs);
  CHECK(subs.size() == 2);
  CHECK(has_type(subs, "A1"));
  CHECK(has_type(subs, "0"));
}

TEST_CASE("full rank subsystems of E8 contain the quasi-isolated centralizers") {
  auto rs = build_root_system("E8");
  auto subs = pseudo_levis_impl(rs, true);
  for (auto want : {"D8", "E7+A1", "E6+A2", "A8", "D5+A3", "A4+A4"})
    CHECK_MESSAGE(has_type(subs, want), want);
}

TEST_CASE("isolated elements of E8") {
  auto rs = build_root_system("E8");
  auto at2 = isolated_elements(rs, 2);
  bool d8 = false, e7a1 = false;
  for (auto& el : at2) {
    if (el.centralizer.type_str() == "D8") {
      d8 = true;
      CHECK(el.point.order == 2);
    }
    if (el.centralizer.type_str() == "E7+A1") {
      e7a1 = true;
      CHECK(el.point.order == 2);
    }
    CHECK(el.centralizer.rank() == 8);
  }
  CHECK(d8);
  CHECK(e7a1);
  auto at3 = isolated_elements(rs, 3);
  bool e6a2 = false;
  for (auto& el : at3)
    if (el.centralizer.type_str() == "E6+A2") {
      e6a2 = true;
      CHECK(el.point.order == 3);
    }
  CHECK(e6a2);
}

TEST_CASE("isolated element orders are powers of ell with full-rank centralizers") {
  for (auto& [label, ell] : std::vector<std::pair<std::string, i64>>{
           {"E8", 2}, {"E8", 3}, {"E8", 5}, {"F4", 2}, {"F4", 3}, {"E7", 2}, {"E7", 3}}) {
    auto rs = build_root_system(label);
    for (auto& el : isolated_elements(rs, ell)) {
      i64 o = el.point.order;
      while (o % ell == 0) o /= ell;
      CHECK(o == 1);
      CHECK(el.centralizer.rank() == rs->rank);
    }
  }
}

TEST_CASE("isolated elements of G2 at 5") {
  auto rs = build_root_system("G2");
  auto els = isolated_elements(rs, 5);
  REQUIRE(els.size() == 1);
  CHECK(els[0].point.order == 1);
  CHECK(els[0].centralizer.type_str() == "G2");
}

TEST_CASE("pairing evaluation") {
  auto rs = build_root_system("E8");
  auto id = TorsionPoint::identity(8);
  for (int r : {0, 7, 100, 239}) CHECK(eval_pairing(*rs, r, id).is_zero());
  auto s = TorsionPoint::fundamental_coweight_over(0, 2, 8);
  // highest root has coefficient 2 at the first node
  int theta = -1;
  for (int i = 0; i < rs->positive_count; ++i) {
    int h = 0;
    for (int x : rs->roots[i]) h += x;
    if (theta < 0 || h > 28) theta = (h > 28) ? i : theta;
  }
  // height of E8 highest root is 29
  theta = -1;
  for (int i = 0; i < rs->positive_count; ++i) {
    int h = 0;
    for (int x : rs->roots[i]) h += x;
    if (h == 29) theta = i;
  }
  REQUIRE(theta >= 0);
  CHECK(rs->roots[theta][0] == 2);
  CHECK(eval_pairing(*rs, theta, s).is_zero());
  std::vector<int> e(8, 0);
  e[0] = 1;
  CHECK(eval_pairing(*rs, rs->root_index.at(e), s) == Rat(1, 2));
  CHECK_THROWS(eval_pairing(*rs, 240, s));
}

TEST_CASE("centralizer subsystem matches integrality set") {
  auto rs = build_root_system("E8");
  for (auto& el : isolated_elements(rs, 2)) {
    auto set = integrality_subsystem(*rs, el.point);
    CHECK(set == el.centralizer.root_set);
  }
}

TEST_CASE("type label round trips") {
  CHECK(type_label_str(parse_type_label("E6+A2")) == "E6+A2");
  CHECK(type_label_str(parse_type_label("A2+E6")) == "E6+A2");
  CHECK(type_label_str(parse_type_label("2A2+A1")) == "A2+A2+A1");
  CHECK(type_label_class_str(parse_type_label("2A2+A1")) == "2A2+A1");
  CHECK(type_label_str(parse_type_label("~A1+A1")) == "A1+Ã1");
  CHECK(to_i64(type_weyl_order(parse_type_label("E6+A2"))) == 311040);
  CHECK(to_i64(type_weyl_order(parse_type_label("D8"))) == 5160960);
}
