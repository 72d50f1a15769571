#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylcs/numeric.hpp"

namespace weylcs {

/// Exact cyclotomic number: rational combination of n-th roots of unity,
/// reduced against the n-th cyclotomic polynomial.
struct Cyc {
  int n = 1;                 // conductor of the ambient ring Q(zeta_n)
  std::vector<Rat> coeffs;   // length phi(n), coefficients of zeta^0..zeta^{phi(n)-1}

  static Cyc zero(int n);
  static Cyc from_rat(const Rat& r, int n);
  static Cyc root_of_unity(int n, int power);
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_part() const;  // throws if not rational
  std::string str() const;

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend bool operator==(const Cyc& a, const Cyc& b);
};

Cyc cyc_conj(const Cyc& a);  // complex conjugation (zeta -> zeta^{-1})

/// Finite group given by an explicit multiplication table, with its exact
/// character table over cyclotomics.
struct SmallGroup {
  std::string label;
  int order = 1;
  int conductor = 1;
  std::vector<std::vector<int>> mult;   // mult[a][b]
  std::vector<int> inverse;
  std::vector<int> class_of;            // element -> class index
  std::vector<int> class_rep;
  std::vector<i64> class_size;
  std::vector<std::string> char_labels;
  std::vector<std::vector<Cyc>> chars;  // chars[i][class]
  std::vector<int> parent_elements;     // set for centralizer subgroups

  int identity() const { return 0; }
  Cyc value(int chi, int element) const { return chars[chi][class_of[element]]; }
};

/// Small groups by label: 1, S2/C2, C3, C4, C5, C6, C2xC2, S3, S4, S5, D8, D12.
const SmallGroup& small_group(const std::string& label);

/// Centralizer of an element, as a SmallGroup on the centralizing elements.
SmallGroup centralizer_group(const SmallGroup& g, int element);

struct MPair {
  int a;                    // class representative in A
  std::string phi_label;    // character of C_A(a)
};

struct MSet {
  const SmallGroup* group;
  std::vector<MPair> pairs;
  std::vector<SmallGroup> centralizers;  // aligned with class reps of A
  std::vector<int> pair_centralizer;     // pair -> centralizer index
  std::vector<int> pair_char;            // pair -> character index in the centralizer
};

MSet mset(const SmallGroup& g);

/// Lusztig's pairing {[a,phi],[b,psi]} by direct summation over the group.
Cyc pairing(const SmallGroup& g, const MSet& m, int x, int y);

std::vector<std::vector<Cyc>> fourier_matrix(const SmallGroup& g);

/// Formal integer combination of Kawanaka symbols K_{[a,phi]}, indexed by MSet.
using FormalSum = std::map<int, i64>;

/// gamma_{u_a} = sum_phi phi(1) K_{[a,phi]}.
FormalSum gggc_decomposition(const SmallGroup& g, const MSet& m, int class_rep_element);

struct DecompositionMatrix {
  std::string group_label;
  i64 ell = 0;
  std::vector<std::string> rows;         // ordinary character labels
  std::vector<std::vector<i64>> entries; // rows x columns
  int ncols() const { return entries.empty() ? 0 : (int)entries[0].size(); }
};

DecompositionMatrix load_decomposition_matrix(std::istream& in);
/// Bundled matrix for (group, ell); identity when ell does not divide |A|.
DecompositionMatrix decomposition_matrix(const std::string& group_label, i64 ell);
/// Projective columns vanish on ell-singular classes; verified on load.
void validate_decomposition_matrix(const DecompositionMatrix& d);

/// K_{(a, Psi)} = sum_psi d_{psi,Psi} K_{(a,psi)} for a projective column.
FormalSum ell_kawanaka_expand(const SmallGroup& g, const MSet& m, int class_rep_element,
                              i64 ell, int column);

/// Lower-unitriangularity up to row/column permutation, with the witness
/// ordering of rows when it exists.
std::optional<std::vector<int>> unitriangular_check(const DecompositionMatrix& d);

struct FourierCoefficientReport {
  struct Entry {
    int a_class;
    i64 sum_phi_sq;       // sum of phi(1)^2 over Irr(C_A(a))
    i64 centralizer_order;
    std::vector<std::pair<int, std::string>> coefficients;  // pair -> {.,[1,1]} value
  };
  std::vector<Entry> entries;
  bool degrees_match = true;
};

/// Verifies sum phi(1)^2 = |C_A(a)| and reports {[a,phi],[1,1]} per pair.
FourierCoefficientReport fourier_coefficient_check(const std::string& group_label);

/// Number of pairs [a, Psi] with Psi an ell-modular irreducible of C_A(a).
i64 mset_ell_count(const std::string& group_label, i64 ell);

void write_decomposition_matrix_files(const std::string& dir);

}  // namespace weylcs
