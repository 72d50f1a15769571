#include <set>

#include "doctest.h"
#include "weylcs/fourier.hpp"

using namespace weylcs;

TEST_CASE("cyclotomic arithmetic") {
  Cyc z3 = Cyc::root_of_unity(3, 1);
  Cyc one = Cyc::from_rat(Rat(1), 1);
  // 1 + z + z^2 = 0
  CHECK((one + z3 + z3 * z3).is_zero());
  CHECK(cyc_conj(z3) == z3 * z3);
  Cyc i4 = Cyc::root_of_unity(4, 1);
  CHECK(i4 * i4 == Cyc::from_rat(Rat(-1), 1));
  // mixed conductors promote
  CHECK((z3 * i4) * (z3 * z3) == i4);
  Cyc z5 = Cyc::root_of_unity(5, 2);
  CHECK(z5 * Cyc::root_of_unity(5, 3) == Cyc::from_rat(Rat(1), 1));
}

TEST_CASE("S2 pairing matrix is the brute-force matrix and an involution") {
  auto& s2 = small_group("S2");
  auto m = mset(s2);
  REQUIRE(m.pairs.size() == 4);
  // {[1,1],[1,1]} = 1/2
  int p11 = -1;
  for (size_t p = 0; p < m.pairs.size(); ++p)
    if (m.pairs[p].a == 0 && m.pairs[p].phi_label == "chi0") p11 = (int)p;
  REQUIRE(p11 >= 0);
  CHECK(pairing(s2, m, p11, p11).rational_part() == Rat(1, 2));
  auto f = fourier_matrix(s2);
  for (auto& row : f)
    for (auto& v : row) CHECK((v.rational_part() == Rat(1, 2) || v.rational_part() == Rat(-1, 2)));
  int k = (int)f.size();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Cyc s = Cyc::zero(1);
      for (int l = 0; l < k; ++l) s = s + f[i][l] * f[l][j];
      CHECK(s == Cyc::from_rat(i == j ? Rat(1) : Rat(0), 1));
    }
}

TEST_CASE("S3 fourier matrix squares to the inversion permutation") {
  auto& s3 = small_group("S3");
  auto m = mset(s3);
  CHECK(m.pairs.size() == 8);
  auto f = fourier_matrix(s3);
  int k = 8;
  // F^2 is a permutation matrix (identity up to [a,phi] -> [a^-1, conj phi])
  for (int i = 0; i < k; ++i) {
    int ones = 0;
    for (int j = 0; j < k; ++j) {
      Cyc s = Cyc::zero(1);
      for (int l = 0; l < k; ++l) s = s + f[i][l] * f[l][j];
      if (s == Cyc::from_rat(Rat(1), 1))
        ++ones;
      else
        CHECK(s.is_zero());
    }
    CHECK(ones == 1);
  }
}

TEST_CASE("pairing with the unit pair") {
  // {[a,phi],[1,1]} = phi(1)/|C_A(a)| for every group in scope
  for (auto label : {"S2", "S3", "S4", "C4", "C6", "D8", "C2xC2"}) {
    auto& g = small_group(label);
    auto m = mset(g);
    int unit = -1;
    for (size_t p = 0; p < m.pairs.size(); ++p) {
      if (m.pairs[p].a != 0) continue;
      const SmallGroup& cen = m.centralizers[m.pair_centralizer[p]];
      bool trivial = true;
      for (size_t c = 0; c < cen.class_rep.size(); ++c)
        if (!(cen.value(m.pair_char[p], (int)c) == Cyc::from_rat(Rat(1), 1))) trivial = false;
      if (trivial) {
        unit = (int)p;
        break;
      }
    }
    REQUIRE(unit >= 0);
    for (size_t p = 0; p < m.pairs.size(); ++p) {
      const SmallGroup& cen = m.centralizers[m.pair_centralizer[p]];
      Rat deg = cen.value(m.pair_char[p], 0).rational_part();
      CHECK(pairing(g, m, (int)p, unit).rational_part() == deg / Rat(cen.order));
    }
  }
}

TEST_CASE("gggc decomposition") {
  auto& s2 = small_group("S2");
  auto m2 = mset(s2);
  auto g1 = gggc_decomposition(s2, m2, 0);
  CHECK(g1.size() == 2);
  for (auto& [p, c] : g1) CHECK(c == 1);
  auto& s3 = small_group("S3");
  auto m3 = mset(s3);
  auto g3 = gggc_decomposition(s3, m3, 0);
  std::multiset<i64> coeffs;
  for (auto& [p, c] : g3) coeffs.insert(c);
  CHECK(coeffs == std::multiset<i64>{1, 1, 2});
  // abelian centralizer: all coefficients 1
  auto& c4 = small_group("C4");
  auto m4 = mset(c4);
  auto g4 = gggc_decomposition(c4, m4, 1);
  CHECK(g4.size() == 4);
  for (auto& [p, c] : g4) CHECK(c == 1);
}

TEST_CASE("ell kawanaka expansion") {
  auto& s3 = small_group("S3");
  auto m = mset(s3);
  // ell coprime: identity expansion
  auto e = ell_kawanaka_expand(s3, m, 0, 5, 0);
  CHECK(e.size() == 1);
  CHECK(e.begin()->second == 1);
  // C_A(a) = S3 at ell = 3: the column covering the trivial character
  auto d = decomposition_matrix("S3", 3);
  auto w = unitriangular_check(d);
  REQUIRE(w.has_value());
  auto e3 = ell_kawanaka_expand(s3, m, 0, 3, 0);
  // column 0 covers triv and the 2-dim with the bundled matrix
  i64 total = 0;
  for (auto& [p, c] : e3) total += c;
  CHECK(total == 2);
  // cyclic 2-group at 2: single column of ones
  auto& c4 = small_group("C4");
  auto m4 = mset(c4);
  auto e4 = ell_kawanaka_expand(c4, m4, 1, 2, 0);
  CHECK(e4.size() == 4);
}

TEST_CASE("unitriangularity, including the negative test") {
  for (auto& [l, e] : std::vector<std::pair<std::string, i64>>{
           {"S2", 2}, {"S3", 2}, {"S3", 3}, {"S4", 2}, {"S4", 3}, {"S5", 2},
           {"S5", 3}, {"S5", 5}, {"C3", 3}, {"C4", 2}, {"C5", 5}, {"C2xC2", 2},
           {"D8", 2}, {"D12", 2}, {"D12", 3}, {"C6", 2}, {"C6", 3}}) {
    auto d = decomposition_matrix(l, e);
    CHECK_MESSAGE(unitriangular_check(d).has_value(), (l + "@" + std::to_string(e)));
  }
  DecompositionMatrix corrupt;
  corrupt.group_label = "S3";
  corrupt.ell = 3;
  corrupt.rows = {"3", "21", "111"};
  corrupt.entries = {{1, 1}, {1, 1}, {1, 1}};
  CHECK_FALSE(unitriangular_check(corrupt).has_value());
}

TEST_CASE("fourier coefficient report") {
  auto rep = fourier_coefficient_check("S3");
  CHECK(rep.degrees_match);
  bool found6 = false, found3 = false;
  for (auto& e : rep.entries) {
    if (e.centralizer_order == 6) {
      CHECK(e.sum_phi_sq == 6);
      found6 = true;
    }
    if (e.centralizer_order == 3) {
      CHECK(e.sum_phi_sq == 3);
      found3 = true;
    }
  }
  CHECK(found6);
  CHECK(found3);
}

TEST_CASE("mset ell counts") {
  CHECK(mset_ell_count("S3", 3) == 5);  // the alpha^3 count for E8(b6)
  CHECK(mset_ell_count("S2", 2) == 2);
  CHECK(mset_ell_count("S2", 3) == 4);
}

TEST_CASE("centralizer detection") {
  auto& s4 = small_group("S4");
  // centralizer of a transposition in S4 is C2 x C2; of a 4-cycle is C4
  for (int e = 1; e < s4.order; ++e) {
    SmallGroup c = centralizer_group(s4, e);
    CHECK((int)c.parent_elements.size() == c.order);
  }
  auto& s5 = small_group("S5");
  std::set<std::string> seen;
  for (size_t c = 0; c < s5.class_rep.size(); ++c)
    seen.insert(centralizer_group(s5, s5.class_rep[c]).label);
  CHECK(seen.count("S5"));
  CHECK(seen.count("D12"));  // centralizer of a transposition
  CHECK(seen.count("D8"));   // centralizer of a double transposition
  CHECK(seen.count("C5"));
  CHECK(seen.count("C6"));
}
