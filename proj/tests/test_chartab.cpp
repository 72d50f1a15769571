#include <set>
#include <sstream>

#include "doctest.h"
#include "weylcs/chartab.hpp"

using namespace weylcs;

namespace {

Subsystem subsystem_of_type(std::shared_ptr<const RootSystem> rs, const std::string& label) {
  for (auto& sub : pseudo_levis(rs))
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

TEST_CASE("symmetric group tables") {
  auto s3 = symmetric_table(3);
  CHECK(s3.nclasses() == 3);
  int sgn = s3.char_index("111");
  for (int c = 0; c < 3; ++c) CHECK(std::abs(s3.chars[sgn].values[c]) == 1);
  int std2 = s3.char_index("21");
  // classes ordered identity first: (111), (21), (3)
  CHECK(s3.classes[0].label == "111");
  CHECK(s3.chars[std2].values[s3.class_index("111")] == 2);
  CHECK(s3.chars[std2].values[s3.class_index("21")] == 0);
  CHECK(s3.chars[std2].values[s3.class_index("3")] == -1);

  auto s1 = symmetric_table(1);
  CHECK(s1.nclasses() == 1);
  CHECK(s1.nchars() == 1);

  // a = b = n(lambda) is asserted inside the constructor for every n
  for (int n = 2; n <= 8; ++n) CHECK(symmetric_table(n).nchars() > 0);
  CHECK_THROWS(symmetric_table(0));
  CHECK_THROWS(symmetric_table(17));
}

TEST_CASE("B2 table against brute force") {
  auto b2 = classical_table('B', 2);
  CHECK(b2.nclasses() == 5);
  CHECK(b2.nchars() == 5);
  i128 degsq = 0;
  for (auto& ch : b2.chars) degsq += (i128)ch.values[0] * ch.values[0];
  CHECK(to_i64(degsq) == 8);
  // brute force: class sizes of the 8 signed permutations
  auto rs = build_root_system("B2");
  auto W = weyl_group(rs);
  auto elements = all_elements(W);
  REQUIRE(elements.size() == 8);
  std::multiset<int> brute_sizes;
  std::set<Perm> done;
  for (auto& g : elements) {
    if (done.count(g)) continue;
    std::set<Perm> cls;
    for (auto& x : elements) cls.insert(conj(g, x));
    for (auto& c : cls) done.insert(c);
    brute_sizes.insert((int)cls.size());
  }
  std::multiset<int> table_sizes;
  for (auto& c : b2.classes) table_sizes.insert((int)to_i64(c.size));
  CHECK(brute_sizes == table_sizes);
  validate_tensor_integrality(b2);
}

TEST_CASE("D4 and D6 tables") {
  auto d4 = classical_table('D', 4);
  CHECK(d4.nclasses() == 13);
  CHECK(d4.nchars() == 13);
  CHECK(to_i64(d4.order) == 192);
  validate_tensor_integrality(d4);
  auto d6 = classical_table('D', 6);
  CHECK(to_i64(d6.order) == 23040);
  validate_tensor_integrality(d6);
}

TEST_CASE("D8 table") {
  auto d8 = classical_table('D', 8);
  CHECK(to_i64(d8.order) == 5160960);
  CHECK(d8.nclasses() == 100);
  i128 degsq = 0;
  for (auto& ch : d8.chars) degsq += (i128)ch.values[0] * ch.values[0];
  CHECK(degsq == d8.order);
}

TEST_CASE("product tables") {
  auto s3 = symmetric_table(3);
  auto s2 = symmetric_table(2);
  auto p = product_table(s3, s2);
  CHECK(p.nclasses() == 6);
  CHECK(to_i64(p.order) == 12);
  validate_table(p);
  // trivial x trivial is trivial
  int triv = p.char_index("3,2");
  for (auto v : p.chars[triv].values) CHECK(v == 1);
}

TEST_CASE("fake degrees and b invariants") {
  auto b3 = classical_table('B', 3);
  // sign character: fake degree q^9 (9 positive roots)
  int sgn = -1;
  for (int i = 0; i < b3.nchars(); ++i) {
    bool all_pm1 = true;
    for (auto v : b3.chars[i].values)
      if (v != 1 && v != -1) all_pm1 = false;
    if (all_pm1 && b3.chars[i].values[0] == 1 && b3.chars[i].b == 9) sgn = i;
  }
  CHECK(sgn >= 0);
  auto fd = fake_degree(b3, sgn);
  CHECK(fd.coefficients.back() == 1);
  for (size_t i = 0; i + 1 < fd.coefficients.size(); ++i) CHECK(fd.coefficients[i] == 0);
  // trivial character: fake degree 1
  int triv = -1;
  for (int i = 0; i < b3.nchars(); ++i) {
    bool all1 = true;
    for (auto v : b3.chars[i].values)
      if (v != 1) all1 = false;
    if (all1) triv = i;
  }
  REQUIRE(triv >= 0);
  CHECK(b3.chars[triv].b == 0);
  // reflection character of S_n has b = 1
  for (int n = 3; n <= 6; ++n) {
    auto sn = symmetric_table(n);
    Partition refl{n - 1, 1};
    CHECK(sn.chars[sn.char_index(partition_label(refl))].b == 1);
  }
}

TEST_CASE("fusion, induction, restriction in B3") {
  auto rs = build_root_system("B3");
  auto W = weyl_group(rs);
  auto b3 = classical_table('B', 3);
  Subsystem whole = subsystem_of_type(rs, "B3");
  auto parent = realize_table(b3, whole);

  Subsystem sub = subsystem_of_type(rs, "A1+A1+\u00c31");
  auto sub_t = table_for_type(sub.type_decomposition);
  auto realized_sub = realize_table(sub_t, sub);
  REQUIRE(is_subgroup(parent.group, realized_sub.group));
  auto fus = fusion(realized_sub, parent);
  validate_fusion(fus);

  // identity class fuses to identity
  CHECK(fus.map[0] == 0);

  // Frobenius reciprocity for all pairs
  for (int i = 0; i < sub_t.nchars(); ++i)
    for (int j = 0; j < b3.nchars(); ++j) {
      Rat lhs = inner_product(b3, induce(fus, char_values(sub_t, i)), char_values(b3, j));
      Rat rhs = inner_product(sub_t, char_values(sub_t, i), restrict_char(fus, char_values(b3, j)));
      CHECK(lhs == rhs);
    }

  // induced degree: |W : W'| times degree
  auto ind = induce(fus, char_values(sub_t, 0));
  CHECK(ind[0] == (b3.order / sub_t.order) * sub_t.chars[0].values[0]);
}

TEST_CASE("Mackey formula on W(B3) against brute force") {
  auto rs = build_root_system("B3");
  auto W = weyl_group(rs);
  auto b3 = classical_table('B', 3);
  auto parent = realize_table(b3, subsystem_of_type(rs, "B3"));
  auto subH = subsystem_of_type(rs, "A3");
  auto subK = subsystem_of_type(rs, "B2");
  auto tH = table_for_type(subH.type_decomposition);
  auto tK = table_for_type(subK.type_decomposition);
  auto rH = realize_table(tH, subH);
  auto rK = realize_table(tK, subK);
  auto fH = fusion(rH, parent);
  auto fK = fusion(rK, parent);

  // brute-force double cosets and intersections over all 48 elements
  auto elements = all_elements(W);
  REQUIRE(elements.size() == 48);
  auto hEls = all_elements(rH.group);
  auto kEls = all_elements(rK.group);

  for (int ih = 0; ih < tH.nchars(); ++ih)
    for (int ik = 0; ik < tK.nchars(); ++ik) {
      Rat lhs = inner_product(b3, induce(fH, char_values(tH, ih)), induce(fK, char_values(tK, ik)));
      // sum over double cosets of <phi^w, psi> on H^w cap K via explicit sums
      std::set<std::vector<uint16_t>> seen_in_dc;
      Rat rhs(0);
      for (auto& w : elements) {
        if (seen_in_dc.count(w.img)) continue;
        std::set<std::vector<uint16_t>> dc;
        for (auto& h : hEls)
          for (auto& k : kEls) dc.insert(pmul(pmul(h, w), k).img);
        for (auto& x : dc) seen_in_dc.insert(x);
        // I = w^-1 H w cap K; <phi(w x w^-1) psi(x)>_I
        std::vector<Perm> inter;
        Perm wi = pinv(w);
        for (auto& x : kEls)
          if (rH.group.contains(pmul(pmul(w, x), wi))) inter.push_back(x);
        Rat sum(0);
        for (auto& x : inter) {
          Perm hx = pmul(pmul(w, x), wi);
          // evaluate characters by locating classes
          i64 phv = 0, psv = 0;
          for (int c = 0; c < tH.nclasses(); ++c)
            if (are_conjugate(rH.group, hx, rH.class_reps[c])) {
              phv = tH.chars[ih].values[c];
              break;
            }
          for (int c = 0; c < tK.nclasses(); ++c)
            if (are_conjugate(rK.group, x, rK.class_reps[c])) {
              psv = tK.chars[ik].values[c];
              break;
            }
          sum = sum + Rat(phv * psv);
        }
        rhs = rhs + sum / Rat((i64)inter.size());
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("j induction") {
  auto s4 = symmetric_table(4);
  auto idf = identity_fusion(s4);
  for (int i = 0; i < s4.nchars(); ++i) CHECK(j_induction(s4, idf, i) == i);
  // j of trivial from any subgroup is trivial
  auto rs = build_root_system("B3");
  auto b3 = classical_table('B', 3);
  auto parent = realize_table(b3, subsystem_of_type(rs, "B3"));
  auto sub = subsystem_of_type(rs, "A2");
  auto tsub = table_for_type(sub.type_decomposition);
  auto rsub = realize_table(tsub, sub);
  auto fus = fusion(rsub, parent);
  int triv_sub = -1;
  for (int i = 0; i < tsub.nchars(); ++i) {
    bool all1 = true;
    for (auto v : tsub.chars[i].values)
      if (v != 1) all1 = false;
    if (all1) triv_sub = i;
  }
  int j = j_induction(b3, fus, triv_sub);
  for (auto v : b3.chars[j].values) CHECK(v == 1);
}

TEST_CASE("table file round trip and corruption") {
  auto b2 = classical_table('B', 2);
  std::ostringstream out;
  save_table(b2, out, "test");
  std::istringstream in(out.str());
  auto t2 = load_table(in);
  CHECK(t2.nclasses() == b2.nclasses());
  CHECK(t2.order == b2.order);
  // corrupt a size
  std::string text = out.str();
  auto pos = text.find("size=4");
  if (pos == std::string::npos) pos = text.find("size=2");
  REQUIRE(pos != std::string::npos);
  text[pos + 5] = '9';
  std::istringstream bad(text);
  auto t3 = load_table(bad);
  CHECK_THROWS_WITH_AS(validate_table(t3), doctest::Contains("class sizes do not sum"),
                       std::runtime_error);
}

TEST_CASE("inner products") {
  auto s5 = symmetric_table(5);
  for (int i = 0; i < s5.nchars(); ++i)
    for (int j = 0; j < s5.nchars(); ++j)
      CHECK(inner_product(s5, char_values(s5, i), char_values(s5, j)) ==
            (i == j ? Rat(1) : Rat(0)));
}

TEST_CASE("bundled exceptional tables load with full validation") {
  auto e8 = table_for_type("E8");
  CHECK(e8.nclasses() == 112);
  CHECK(to_i64(e8.order) == 696729600);
  auto g2 = table_for_type("G2");
  CHECK(g2.nclasses() == 6);
  // product with the paper's labels: Irr(W(E6)) x Irr(S3)
  auto prod = table_for_type("E6+A2");
  CHECK(prod.nclasses() == 75);
  int idx = prod.char_index("phi30,15,111");
  CHECK(prod.chars[idx].values[0] == 30);
}
