#pragma once

#include <string>

namespace weylcs {

/// Directory holding the bundled data files. Resolution order: explicit
/// set_data_dir, WEYLCS_DATA_DIR environment variable, "./data".
std::string data_dir();
void set_data_dir(const std::string& dir);

}  // namespace weylcs
