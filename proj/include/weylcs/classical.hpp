#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylcs/numeric.hpp"
#include "weylcs/permgrp.hpp"

namespace weylcs {

using Partition = std::vector<int>;  // weakly decreasing positive parts

std::vector<Partition> partitions(int n);
std::string partition_label(const Partition& p);
Partition parse_partition(const std::string& s, int expected_sum = -1);
i128 partition_zorder(const Partition& p);  // centralizer order in S_n
int partition_n_invariant(const Partition& p);  // sum (i-1) p_i
Partition conjugate_partition(const Partition& p);

/// chi_lambda(mu) for the symmetric group, Murnaghan–Nakayama.
i64 symmetric_char_value(const Partition& lambda, const Partition& mu);

/// Signed permutation on {1..n}: img[i] = +-(j+1) means e_{i+1} -> +-e_{j+1}.
struct SignedPerm {
  std::vector<int> img;
  int n() const { return (int)img.size(); }
};

struct BClassData {
  Partition pos, neg;   // positive / negative cycle types
  i128 size = 0;        // class size in W(B_n)
  i64 order = 1;
  SignedPerm rep;
};

/// Conjugacy classes of W(B_n) = signed permutations, indexed by bipartitions.
std::vector<BClassData> b_classes(int n);

/// Character value of chi_{(alpha,beta)} at class (lambda, mu).
i64 b_char_value(const Partition& alpha, const Partition& beta, const Partition& lambda,
                 const Partition& mu);

/// det(1 - q w) on the n-dimensional representation for class (lambda, mu).
std::vector<i64> bd_det_poly(int n, const Partition& lambda, const Partition& mu);
std::vector<i64> a_det_poly(int n, const Partition& lambda);  // reflection rep of S_n

/// Root-system realization of a signed permutation (B_n or D_n root system).
Perm signed_perm_to_root_perm(const RootSystem& rs, const SignedPerm& sp);
/// Plain permutation (cycle type lambda, built on consecutive points) in A_{n-1}.
Perm cycle_type_to_root_perm(const RootSystem& rs, const Partition& lambda);

}  // namespace weylcs
