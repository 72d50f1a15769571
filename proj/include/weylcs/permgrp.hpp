#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <unordered_map>
#include <string>
#include <vector>

#include "weylcs/rootdata.hpp"

namespace weylcs {

/// Permutation of the ambient root set.
struct Perm {
  std::vector<uint16_t> img;

  Perm() = default;
  explicit Perm(int n) : img(n) {
    for (int i = 0; i < n; ++i) img[i] = (uint16_t)i;
  }
  int degree() const { return (int)img.size(); }
  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img[i] != i) return false;
    return true;
  }
  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

Perm pmul(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm pinv(const Perm& a);
Perm conj(const Perm& g, const Perm& x);  // x g x^-1
i64 perm_order(const Perm& g);

/// Reflection in the given root, as a permutation of all roots.
Perm reflection(const RootSystem& rs, int root_index);

struct ChainLevel {
  int base_point = -1;
  std::vector<Perm> gens;              // strong generators fixing earlier base points
  std::vector<int> orbit;              // orbit of base_point
  std::vector<int> orbit_pos;          // point -> index in orbit, -1 outside
  std::vector<Perm> transversal;       // transversal[i] maps base_point -> orbit[i]
};

/// Permutation group with a stabilizer chain. Immutable once built.
struct GroupCtx {
  std::shared_ptr<const RootSystem> ambient;
  std::vector<Perm> generators;
  std::vector<ChainLevel> chain;
  i128 order = 1;

  bool contains(const Perm& g) const;
  /// Sifts g through the chain; identity residue means membership.
  Perm sift(const Perm& g) const;
  Perm random_element(std::mt19937_64& rng) const;
  int degree() const { return chain.empty() ? 0 : (int)chain[0].orbit_pos.size(); }
};

/// Builds a stabilizer chain (deterministic Schreier–Sims; base points chosen
/// greedily from simple-root indices). If expected_order is nonzero the
/// construction is checked against it.
GroupCtx make_group(std::shared_ptr<const RootSystem> ambient, std::vector<Perm> gens,
                    i128 expected_order = 0);

/// Reflection subgroup of a subsystem; order checked against its type.
GroupCtx group_from_subsystem(const Subsystem& sub);

/// Full Weyl group of the root system.
GroupCtx weyl_group(std::shared_ptr<const RootSystem> rs);

bool is_subgroup(const GroupCtx& G, const GroupCtx& H);

/// Enumerated right-coset space H\G with O(1) coset identification.
struct CosetSpace {
  const GroupCtx* G = nullptr;
  const GroupCtx* H = nullptr;
  std::vector<Perm> reps;  // reps[0] = identity
  /// Index of the coset H*x.
  int index_of(const Perm& x) const;

  // internals for identification
  std::vector<int> h_orbit_id;  // point -> H-orbit id
  std::unordered_map<std::string, std::vector<int>> buckets;
  std::string invariant(const Perm& x) const;
};

CosetSpace coset_space(const GroupCtx& G, const GroupCtx& H);
std::vector<Perm> coset_reps(const GroupCtx& G, const GroupCtx& H);

struct DoubleCosets {
  std::vector<Perm> reps;    // reps[0] = identity
  std::vector<i128> sizes;   // |H x K|
};

/// H\G/K via K-orbits on the right-coset transversal of H.
DoubleCosets double_cosets(const GroupCtx& G, const GroupCtx& H, const GroupCtx& K);

struct Fingerprint {
  std::vector<i128> charpoly;      // on the reflection representation
  std::vector<std::pair<int, int>> cycles;  // (length, count) on roots

  std::string str() const;
  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.charpoly == b.charpoly && a.cycles == b.cycles;
  }
};

/// Integer matrix of g on the simple-root basis.
std::vector<std::vector<i64>> reflection_matrix(const RootSystem& rs, const Perm& g);
std::vector<i128> charpoly(const std::vector<std::vector<i64>>& m);
Fingerprint fingerprint(const RootSystem& rs, const Perm& g);

/// Exact conjugacy with witness: returns v with v g v^-1 = h if one exists in G.
std::optional<Perm> conjugacy_witness(const GroupCtx& G, const Perm& g, const Perm& h);
bool are_conjugate(const GroupCtx& G, const Perm& g, const Perm& h);

/// Centralizer order |C_G(g)| (randomized generation, certified by caller via
/// class-size bookkeeping; the returned group is always a subgroup).
GroupCtx centralizer(const GroupCtx& G, const Perm& g, std::mt19937_64& rng,
                     int patience = 24);

struct ComponentGroup {
  std::string label;             // "1", "C2", "C3", "S3", ...
  std::vector<Perm> coset_reps;  // identity first
};

/// Subgroup generated by all reflections of G contained in S, plus S/S°.
std::pair<GroupCtx, ComponentGroup> reflection_closure(const GroupCtx& G, const GroupCtx& S);

/// Stabilizer of the identity's label under the action g . label_of(id):
/// label_of(g) must equal label_of(g') whenever g, g' act alike; computed via
/// orbit BFS with Schreier generators, order certified as |G| / |orbit|.
GroupCtx stabilizer_of(const GroupCtx& G, const std::function<std::string(const Perm&)>& label_of,
                       std::vector<Perm>* transversal_out = nullptr,
                       std::vector<std::string>* orbit_out = nullptr);

/// w . t on torsion points: <a_j, w.t> = <w^-1 a_j, t>.
TorsionPoint apply_perm_point(const RootSystem& rs, const Perm& w, const TorsionPoint& t);

/// Word for g over the simple reflections of the ambient system.
std::vector<int> word_for(const RootSystem& rs, const Perm& g);
Perm perm_from_word(const RootSystem& rs, const std::vector<int>& word);

}  // namespace weylcs
