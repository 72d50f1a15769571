#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylcs/chartab.hpp"
#include "weylcs/classical.hpp"

namespace weylcs {

struct UnipotentClass {
  std::string ambient_type;
  std::string name;
  i64 dim = 0;
  std::string a_group = "1";              // A_G(u)
  bool special = false;
  std::string omega;                      // Lusztig's canonical quotient; "" = absent
  std::map<i64, std::string> omega_ell;   // Chaneb's ell-canonical quotient per bad prime
  std::vector<int> weighted_diagram;      // values on simple roots (exceptional types)
  std::string piece;                      // special class whose special piece contains this
};

struct SpringerPair {
  std::string char_label;    // Irr(W) label in the type's character table
  std::string class_name;
  std::string local_system;  // character of A_G(u); "1" = trivial
};

struct SpringerTable {
  std::string ambient_type;
  std::vector<UnipotentClass> classes;
  std::vector<SpringerPair> pairs;

  const UnipotentClass* find_class(const std::string& name) const;
  const UnipotentClass& class_ref(const std::string& name) const;
  /// Character attached to (class, local system); absent if not in the image.
  std::optional<std::string> springer_char(const std::string& class_name,
                                           const std::string& local_system = "1") const;
  const SpringerPair* pair_for_char(const std::string& char_label) const;
  std::vector<std::string> special_class_names() const;
};

/// Springer data of an arbitrary type. Type A and the classical families are
/// computed (partition and symbol combinatorics); exceptional types load the
/// bundled files; products are composed factor-wise.
SpringerTable springer_for_type(const TypeLabel& type);
SpringerTable springer_for_type(const std::string& label);

/// a-invariant of a classical-group character through its symbol.
i64 classical_a_invariant(char family, int rank, const Partition& alpha, const Partition& beta);
/// Fills CharRecord::a for a B/C/D table from the symbol combinatorics.
void attach_classical_a_invariants(CharacterTable& t, char family);
/// Fills CharRecord::a for a generated exceptional table from the curated
/// class data (a = d of the containing special piece).
void attach_exceptional_a_invariants(CharacterTable& t);

/// Special characters computed by closing truncated induction from parabolic
/// subsystems (j-induction of special characters stays special).
std::vector<std::string> special_characters_by_closure(const std::string& type_label);

// --- Bala–Carter enumeration (exceptional types) --------------------------

struct BCClass {
  std::string name;
  std::vector<int> wdd;   // dominant weighted Dynkin diagram
  i64 dim = 0;
  std::string levi_type;  // class-style label of the Bala–Carter Levi
};

std::vector<BCClass> bala_carter_classes(std::shared_ptr<const RootSystem> rs);

// --- classical unipotent combinatorics -------------------------------------

/// Partitions of N with even parts of even multiplicity (orthogonal) or odd
/// parts of even multiplicity (symplectic).
std::vector<Partition> orthogonal_partitions(int N);
std::vector<Partition> symplectic_partitions(int N);
bool partition_very_even(const Partition& p);
i64 so_class_dim(const Partition& p, int N);
i64 sp_class_dim(const Partition& p, int N);
std::string so_a_group(const Partition& p);
std::string sp_a_group(const Partition& p);
/// (class, trivial) under the Springer correspondence, as a bipartition.
std::pair<Partition, Partition> springer_bipartition(char family, int rank, const Partition& p);

// --- fusion facts -----------------------------------------------------------

struct FusionFact {
  std::string sub_type, sub_class, ambient_type, ambient_class;
  bool unique = true;
};

std::vector<FusionFact> load_fusion_facts(const std::string& path);
const std::vector<FusionFact>& bundled_fusion_facts();
std::optional<FusionFact> fused_class(const std::vector<FusionFact>& facts,
                                      const std::string& sub_type, const std::string& sub_class,
                                      const std::string& ambient_type);

// --- data file generation ---------------------------------------------------

void write_exceptional_springer_file(const std::string& label, const std::string& dir);
void write_classical_springer_file(char type, int n, const std::string& dir);
void write_fusion_facts_file(const std::string& dir);
void write_decomposition_matrices(const std::string& dir);

SpringerTable load_springer_file(const std::string& path);
void validate_springer_table(const SpringerTable& st);

/// Assembles the Springer table of an exceptional type from the computed
/// Bala-Carter classes, the computed special characters, and the curated
/// component-group data.
SpringerTable build_exceptional_springer(const std::string& label);

}  // namespace weylcs
