#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylcs/classical.hpp"
#include "weylcs/numeric.hpp"
#include "weylcs/permgrp.hpp"

namespace weylcs {

struct ClassRecord {
  std::string label;
  std::vector<int> rep_word;   // over the table's simple reflections
  i128 size = 1;
  i64 order = 1;
  std::vector<i64> det_poly;   // det(1 - q w) on the reflection representation
  std::string fp_hash;         // stored fingerprint hash, verified on load
};

struct CharRecord {
  std::string label;
  std::vector<i64> values;
  i64 a = -1;  // curated / computed a-invariant; -1 when absent
  i64 b = -1;  // lowest fake-degree exponent, computed
};

struct CharacterTable {
  std::string name;
  i128 order = 1;
  int rank = 0;
  std::vector<int> degrees;
  std::vector<ClassRecord> classes;  // classes[0] is the identity
  std::vector<CharRecord> chars;

  int nclasses() const { return (int)classes.size(); }
  int nchars() const { return (int)chars.size(); }
  int npos() const {
    int s = 0;
    for (int d : degrees) s += d - 1;
    return s;
  }
  i64 char_degree(int i) const { return chars[i].values[0]; }
  int char_index(const std::string& label) const;
  int class_index(const std::string& label) const;
};

/// Structural verification: class sizes, orthogonality, degrees. Throws with
/// the violated invariant on failure.
void validate_table(const CharacterTable& t);

/// Additionally checks that all pairwise tensor products decompose with
/// non-negative integral multiplicities (catches wrong split-class signs).
void validate_tensor_integrality(const CharacterTable& t);

CharacterTable symmetric_table(int n);
CharacterTable classical_table(char type, int n);  // 'B' or 'D'
CharacterTable product_table(const CharacterTable& t1, const CharacterTable& t2);

/// In-memory table registry consulted by table_for_type before file loads
/// (used while generating data bottom-up).
void register_table(const std::string& name, CharacterTable t);
const CharacterTable* registered_table(const std::string& name);

/// Table of an arbitrary Cartan type; exceptional factors come from the
/// registry or the data directory.
CharacterTable table_for_type(const TypeLabel& type);
CharacterTable table_for_type(const std::string& label);

CharacterTable load_table(std::istream& in);
CharacterTable load_table_file(const std::string& path);
void save_table(const CharacterTable& t, std::ostream& out, const std::string& provenance);

/// Exact inner product of two class functions.
Rat inner_product(const CharacterTable& t, const std::vector<i128>& f, const std::vector<i128>& g);
std::vector<i128> char_values(const CharacterTable& t, int chi);

struct ClassFusion {
  const CharacterTable* sub = nullptr;
  const CharacterTable* parent = nullptr;
  std::vector<int> map;  // sub class index -> parent class index
};

/// A character table together with a permutation realization inside an
/// ambient root system.
struct RealizedTable {
  CharacterTable table;
  std::shared_ptr<const RootSystem> ambient;
  std::vector<Perm> simple_reflections;  // generator i realizes table generator i
  GroupCtx group;
  std::vector<Perm> class_reps;          // rep_word evaluated in the ambient group

  Perm eval_word(const std::vector<int>& word) const;
};

RealizedTable realize_table(CharacterTable t, const Subsystem& sub);

/// Identifies each sub class inside the parent by fingerprint, falling back to
/// exact conjugacy search on collisions.
ClassFusion fusion(const RealizedTable& sub, const RealizedTable& parent);
/// Identity fusion of a table into itself.
ClassFusion identity_fusion(const CharacterTable& t);

/// Checks that every parent irreducible pulls back to a genuine character.
void validate_fusion(const ClassFusion& f);
std::string class_fingerprint_hash(const RootSystem& rs, const Perm& p);

std::vector<i128> induce(const ClassFusion& fus, const std::vector<i128>& chi_sub);
std::vector<i128> restrict_char(const ClassFusion& fus, const std::vector<i128>& chi_parent);

/// Decomposition of a class function into irreducibles; throws if any
/// multiplicity is not a non-negative integer.
std::vector<i64> decompose(const CharacterTable& t, const std::vector<i128>& f);

struct FakeDegree {
  std::string char_label;
  std::vector<i64> coefficients;
};

FakeDegree fake_degree(const CharacterTable& t, int chi);
i64 b_invariant(const CharacterTable& t, int chi);
/// Computes b for every character and stores it in the records.
void compute_b_invariants(CharacterTable& t);

std::vector<std::string> special_characters(const CharacterTable& t);

/// Index of the unique constituent of Ind(chi') with multiplicity one and the
/// same b-invariant (j-induction); throws when existence/uniqueness fails.
int j_induction(const CharacterTable& parent, const ClassFusion& fus, int chi_sub);

}  // namespace weylcs
