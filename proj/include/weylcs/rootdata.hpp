#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylcs/numeric.hpp"

namespace weylcs {

/// One simple factor of a Cartan type. `tilde` marks a factor made of short
/// roots of a non-simply-laced ambient system (printed with a combining
/// tilde, e.g. "Ã1").
struct SimpleType {
  char family = 'A';
  int rank = 0;
  bool tilde = false;

  friend bool operator==(const SimpleType& a, const SimpleType& b) {
    return a.family == b.family && a.rank == b.rank && a.tilde == b.tilde;
  }
  friend bool operator<(const SimpleType& a, const SimpleType& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    if (a.family != b.family) return a.family < b.family;
    return a.tilde < b.tilde;
  }
  std::string str() const;
  i128 weyl_order() const;
  std::vector<int> degrees() const;
};

using TypeLabel = std::vector<SimpleType>;

std::string type_label_str(const TypeLabel& t);
/// Multiplicity-compressed form used in unipotent class names ("2A2+A1").
std::string type_label_class_str(const TypeLabel& t);
TypeLabel parse_type_label(const std::string& s);
i128 type_weyl_order(const TypeLabel& t);

struct RootSystem {
  std::string type_label;
  TypeLabel type;
  int rank = 0;
  std::vector<std::vector<int>> cartan;       // cartan[i][j] = <a_j, a_i^vee>
  std::vector<std::vector<int>> roots;        // coordinates in the simple-root basis
  int positive_count = 0;
  std::vector<int> degrees;                   // fundamental degrees, all factors merged
  std::vector<int> extended_marks;            // per factor, flattened: affine node first
  std::vector<int> sym;                       // d_i: (a_i,a_i)/2, factor-wise normalized
  std::vector<std::vector<int>> factor_nodes; // simple-root indices per factor
  std::vector<std::vector<int>> affine_roots; // -theta per factor, simple-root coords

  // derived tables
  std::vector<std::vector<int>> gram;          // (a,b) for all root pairs
  std::map<std::vector<int>, int> root_index;  // coords -> index
  std::vector<std::vector<uint16_t>> refl;     // refl[s][r] = s_s(r), all roots
  std::vector<int> simple_refs;                // root indices of the simple roots

  int nroots() const { return (int)roots.size(); }
  int negate(int i) const { return i < positive_count ? i + positive_count : i - positive_count; }
  bool is_simple_type() const { return type.size() == 1; }

  /// (alpha, beta) under the W-invariant form.
  int form(const std::vector<int>& a, const std::vector<int>& b) const;
  /// <alpha, beta^vee> = 2(alpha,beta)/(beta,beta).
  int pair_coroot(const std::vector<int>& a, const std::vector<int>& b) const;
  int root_norm(int idx) const { return gram[idx][idx]; }

  /// Image of root `r` under the reflection in root `s`, as an index.
  int reflect_root(int s, int r) const;

  i128 weyl_order() const;
};

std::shared_ptr<const RootSystem> build_root_system(const std::string& type_label);

struct Subsystem {
  std::shared_ptr<const RootSystem> parent;
  std::vector<int> simple_indices;  // indices into parent.roots, canonically ordered
  TypeLabel type_decomposition;
  std::vector<int> root_set;        // all roots of the subsystem, sorted indices
  std::vector<std::vector<int>> factor_simples;  // per factor, Bourbaki-ordered

  std::string type_str() const { return type_label_str(type_decomposition); }
  int rank() const { return (int)simple_indices.size(); }
};

/// Closes a linearly independent simple set into a Subsystem (identifies the
/// type, canonically orders the simples of each factor).
Subsystem make_subsystem(std::shared_ptr<const RootSystem> rs, std::vector<int> simple_indices);

/// Simple system of a reflection-closed root subset: positive members not
/// expressible as a sum of two positive members.
std::vector<int> simple_system_of(const RootSystem& rs, const std::vector<int>& root_set);

/// All subsystems reachable by iterated node deletion from extended Dynkin
/// diagrams, deduplicated up to W-conjugacy. Includes the full system and the
/// empty subsystem.
std::vector<Subsystem> pseudo_levis(std::shared_ptr<const RootSystem> rs);

/// keep_rank=true restricts to extended-diagram deletions only (full-rank
/// subsystems); used by the conjugacy-class machinery.
std::vector<Subsystem> pseudo_levis_impl(std::shared_ptr<const RootSystem> rs, bool keep_rank);

/// Exact W-conjugacy test of root subsets (orbit search on sets).
bool subsystems_conjugate(const RootSystem& rs, const std::vector<int>& a,
                          const std::vector<int>& b);

struct TorsionPoint {
  std::vector<Rat> coords;  // fundamental-coweight basis, each reduced mod 1
  i64 order = 1;

  static TorsionPoint identity(int rank);
  static TorsionPoint fundamental_coweight_over(int node, i64 n, int rank);
  void normalize();
  bool operator==(const TorsionPoint& o) const { return coords == o.coords; }
  bool operator<(const TorsionPoint& o) const;
  std::string str() const;
};

/// <alpha, t> as an exact rational mod 1.
Rat eval_pairing(const RootSystem& rs, int root_index, const TorsionPoint& t);

/// Action of the reflection in simple root i on coweight coordinates.
TorsionPoint simple_reflect_point(const RootSystem& rs, int i, const TorsionPoint& t);

/// Roots alpha with <alpha, t> integral; always reflection-closed.
std::vector<int> integrality_subsystem(const RootSystem& rs, const TorsionPoint& t);

struct IsolatedElement {
  TorsionPoint point;
  Subsystem centralizer;
};

/// Torsion points of ell-power order with full-rank centralizer subsystem, up
/// to W-conjugacy, generated from extended-diagram node deletions. Includes
/// the identity. Requires rs simple.
std::vector<IsolatedElement> isolated_elements(std::shared_ptr<const RootSystem> rs, i64 ell);

}  // namespace weylcs
