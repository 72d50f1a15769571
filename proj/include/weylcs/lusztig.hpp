#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylcs/springer.hpp"

namespace weylcs {

struct PhiInput {
  std::shared_ptr<const RootSystem> ambient;
  TorsionPoint point;
  Subsystem centralizer;       // root-integrality subsystem of point
  std::string sub_class;       // special class of the centralizer type
};

struct PhiResult {
  std::string class_name;      // ambient unipotent class
  std::string local_system;    // A(u)-character component of i_G(psi)
  std::string w_char;          // the j-induced Irr(W) label
};

/// Lusztig's map: Springer char of (sub_class, triv) in the centralizer type,
/// j-induction to W, Springer correspondence in the ambient type.
PhiResult phi(const PhiInput& input);

struct PhiWitness {
  TorsionPoint point;
  std::string centralizer_type;
  std::string sub_class;
  std::string w_char;
  std::string local_system;
};

struct EllSpecialRecord {
  std::string class_name;
  bool special = false;
  std::string a_group;
  std::string omega_ell;  // "" when no data
  std::vector<PhiWitness> witnesses;
  bool p_special = false;
  std::optional<PhiWitness> p_witness;
};

/// All ell-special classes of a simple exceptional type: union of Phi over
/// isolated ell-elements and special classes of their centralizers.
std::vector<EllSpecialRecord> ell_special_classes(const std::string& type, i64 ell);

/// Property (P): a witness with |Omega_{centralizer,v}| = |A_G(u)| among the
/// isolated ell-elements. Requires the class to be ell-special.
std::pair<bool, std::optional<PhiWitness>> check_property_P(const std::string& type, i64 ell,
                                                            const std::string& class_name);

struct TableRow {
  std::string class_name;
  std::string a_group;
  std::string omega_ell;
};

/// The ell-special-but-not-special classes, sorted by decreasing dimension.
std::vector<TableRow> emit_table(const std::string& type, i64 ell);

bool is_bad_prime(const std::string& type, i64 ell);
std::vector<i64> bad_primes(const std::string& type);

/// Order of a small-group label such as "S3", "C2xC2", "1".
i64 group_label_order(const std::string& label);

}  // namespace weylcs
