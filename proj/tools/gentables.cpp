// Regenerates the bundled data files: exact character tables of the
// exceptional Weyl groups, Springer correspondence tables, unipotent class
// fusion facts, and small-group decomposition matrices.
//
// The character tables are built from scratch (class enumeration certified by
// total order, irreducibles from exterior powers, subsystem induction and
// tensor reduction, certified by the squared-degree sum and orthogonality).

#include <filesystem>
#include <fstream>
#include <cstdlib>
#include <iostream>

#include "weylcs/classenum.hpp"
#include "weylcs/data.hpp"
#include "weylcs/springer.hpp"

using namespace weylcs;

int main(int argc, char** argv) {
  std::string out_dir = argc > 1 ? argv[1] : data_dir();
  std::filesystem::create_directories(out_dir);
  bool reuse = std::getenv("WEYLCS_REUSE_TABLES") != nullptr;
  for (std::string label : {"G2", "F4", "E6", "E7", "E8"}) {
    std::cerr << "generating table " << label << "...\n";
    auto rs = build_root_system(label);
    std::string key0 = (char)tolower(label[0]) + label.substr(1);
    CharacterTable t;
    if (reuse) {
      t = load_table_file(out_dir + "/w" + key0 + ".ct");
    } else {
      t = generate_table(rs);
    }
    attach_exceptional_a_invariants(t);
    register_table(label, t);
    std::string key = (char)tolower(label[0]) + label.substr(1);
    std::ofstream out(out_dir + "/w" + key + ".ct");
    save_table(t, out,
               "generated by tools/gentables: class enumeration and character "
               "construction are certified by exact order and orthogonality checks; "
               "a-invariants attached from the curated family data in src/springer_data.cpp");
    std::cerr << "  " << t.nchars() << " characters\n";
  }
  if (std::getenv("WEYLCS_TABLES_ONLY") == nullptr) {
    for (std::string label : {"G2", "F4", "E6", "E7", "E8"}) {
      std::cerr << "generating springer data " << label << "...\n";
      write_exceptional_springer_file(label, out_dir);
    }
    for (char type : {'B', 'D'}) {
      for (int n = (type == 'B' ? 2 : 4); n <= 8; ++n) {
        std::string label = std::string(1, type) + std::to_string(n);
        std::cerr << "generating springer data " << label << "...\n";
        write_classical_springer_file(type, n, out_dir);
      }
    }
    write_fusion_facts_file(out_dir);
    write_decomposition_matrices(out_dir);
  }
  std::cerr << "done\n";
  return 0;
}
