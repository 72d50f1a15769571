#include "weylcs/parallel.hpp"

namespace weylcs {

namespace {
bool g_parallel = true;
}

bool parallel_enabled() { return g_parallel; }
void set_parallel_enabled(bool on) { g_parallel = on; }

}  // namespace weylcs
