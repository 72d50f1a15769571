#pragma once

#include <string>
#include <vector>

#include "weylcs/chartab.hpp"
#include "weylcs/permgrp.hpp"

namespace weylcs {

struct ConjClass {
  Perm rep;
  i128 size = 0;
  i64 order = 1;
};

/// All conjugacy classes of the Weyl group, with exact sizes. Small groups are
/// enumerated outright; E7/E8 combine subsystem class lists with a random
/// search for the remaining elliptic classes, certified by
/// sum of sizes = |W| and the known class count.
std::vector<ConjClass> enumerate_classes(std::shared_ptr<const RootSystem> rs, const GroupCtx& W);

/// Number of conjugacy classes per simple type (certificate input).
int expected_class_count(const SimpleType& t);

/// Builds the full exact character table of the Weyl group of rs (intended
/// for the exceptional types; classical types go through the combinatorial
/// constructions). Labels are phi{degree},{b} with primes on collisions.
CharacterTable generate_table(std::shared_ptr<const RootSystem> rs);

}  // namespace weylcs
