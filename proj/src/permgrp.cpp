#include "weylcs/permgrp.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace weylcs {

Perm pmul(const Perm& a, const Perm& b) {
  Perm r;
  r.img.resize(a.img.size());
  for (size_t i = 0; i < b.img.size(); ++i) r.img[i] = a.img[b.img[i]];
  return r;
}

Perm pinv(const Perm& a) {
  Perm r;
  r.img.resize(a.img.size());
  for (size_t i = 0; i < a.img.size(); ++i) r.img[a.img[i]] = (uint16_t)i;
  return r;
}

Perm conj(const Perm& g, const Perm& x) { return pmul(pmul(x, g), pinv(x)); }

i64 perm_order(const Perm& g) {
  i64 ord = 1;
  std::vector<char> seen(g.degree(), 0);
  for (int i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    i64 len = 0;
    int j = i;
    do {
      seen[j] = 1;
      j = g.img[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm reflection(const RootSystem& rs, int root_index) {
  if (root_index < 0 || root_index >= rs.nroots())
    throw std::out_of_range("reflection: root index out of range");
  Perm p((int)rs.nroots());
  for (int r = 0; r < rs.nroots(); ++r) p.img[r] = (uint16_t)rs.reflect_root(root_index, r);
  return p;
}

namespace {

struct ChainBuilder {
  std::shared_ptr<const RootSystem> ambient;
  int degree;
  std::vector<int> base;
  std::vector<std::vector<Perm>> level_gens;  // gens whose first moved base point is this level
  std::vector<std::vector<int>> orbits;
  std::vector<std::vector<int>> orbit_pos;
  std::vector<std::vector<Perm>> transversals;
  std::vector<int> base_preference;

  explicit ChainBuilder(std::shared_ptr<const RootSystem> amb, int deg)
      : ambient(std::move(amb)), degree(deg) {
    // prefer simple-root indices as base points
    for (int i = 0; i < ambient->rank; ++i) {
      std::vector<int> e(ambient->rank, 0);
      e[i] = 1;
      base_preference.push_back(ambient->root_index.at(e));
    }
    for (int i = 0; i < degree; ++i) base_preference.push_back(i);
  }

  void add_level(int point) {
    base.push_back(point);
    level_gens.emplace_back();
    orbits.push_back({point});
    orbit_pos.emplace_back(degree, -1);
    orbit_pos.back()[point] = 0;
    transversals.push_back({Perm(degree)});
  }

  int first_moved_level(const Perm& g) {
    for (size_t l = 0; l < base.size(); ++l)
      if (g.img[base[l]] != base[l]) return (int)l;
    return -1;
  }

  void extend_orbit(int l) {
    auto gens_at = [&](int lv) {
      std::vector<const Perm*> out;
      for (size_t m = lv; m < level_gens.size(); ++m)
        for (auto& g : level_gens[m]) out.push_back(&g);
      return out;
    };
    auto gens = gens_at(l);
    size_t head = 0;
    while (head < orbits[l].size()) {
      int p = orbits[l][head];
      for (auto* g : gens) {
        int q = g->img[p];
        if (orbit_pos[l][q] < 0) {
          orbit_pos[l][q] = (int)orbits[l].size();
          orbits[l].push_back(q);
          transversals[l].push_back(pmul(*g, transversals[l][orbit_pos[l][p]]));
        }
      }
      ++head;
    }
  }

  Perm sift_from(Perm g, int l) const {
    for (size_t lv = l; lv < base.size(); ++lv) {
      int p = g.img[base[lv]];
      int pos = orbit_pos[lv][p];
      if (pos < 0) return g;
      g = pmul(pinv(transversals[lv][pos]), g);
    }
    return g;
  }

  i128 order() const {
    i128 o = 1;
    for (auto& orb : orbits) o = mul_checked(o, (i128)orb.size());
    return o;
  }

  // Adds g (must be a group element) as a strong generator; returns the level
  // it lands at, or -1 if already in the chain group.
  int add_generator(const Perm& g0) {
    Perm g = sift_from(g0, 0);
    if (g.is_identity()) return -1;
    int l = first_moved_level(g);
    if (l < 0) {
      for (int cand : base_preference)
        if (g.img[cand] != cand) {
          add_level(cand);
          break;
        }
      l = (int)base.size() - 1;
    }
    level_gens[l].push_back(g);
    for (int m = l; m >= 0; --m) extend_orbit(m);
    return l;
  }

  // Deterministic completion: verify all Schreier generators sift to identity.
  void complete() {
    int l = (int)base.size() - 1;
    while (l >= 0) {
      bool clean = true;
      for (size_t oi = 0; oi < orbits[l].size() && clean; ++oi) {
        int gamma = orbits[l][oi];
        const Perm& tg = transversals[l][orbit_pos[l][gamma]];
        for (size_t m = l; m < level_gens.size() && clean; ++m)
          for (auto& s : level_gens[m]) {
            int img = s.img[gamma];
            Perm schreier = pmul(pinv(transversals[l][orbit_pos[l][img]]), pmul(s, tg));
            Perm res = sift_from(schreier, l + 1);
            if (!res.is_identity()) {
              int at = add_generator(res);
              (void)at;
              l = (int)base.size() - 1;
              clean = false;
              break;
            }
          }
      }
      if (clean) --l;
    }
  }
};

}  // namespace

bool GroupCtx::contains(const Perm& g) const { return sift(g).is_identity(); }

Perm GroupCtx::sift(const Perm& g) const {
  Perm cur = g;
  for (auto& lvl : chain) {
    int p = cur.img[lvl.base_point];
    int pos = lvl.orbit_pos[p];
    if (pos < 0) return cur;
    cur = pmul(pinv(lvl.transversal[pos]), cur);
  }
  return cur;
}

Perm GroupCtx::random_element(std::mt19937_64& rng) const {
  if (chain.empty()) return Perm(generators.empty() ? 0 : generators[0].degree());
  Perm g((int)chain[0].orbit_pos.size());
  for (auto& lvl : chain) {
    size_t i = rng() % lvl.orbit.size();
    g = pmul(g, lvl.transversal[i]);
  }
  return g;
}

GroupCtx make_group(std::shared_ptr<const RootSystem> ambient, std::vector<Perm> gens,
                    i128 expected_order) {
  int degree = ambient ? ambient->nroots() : (gens.empty() ? 0 : gens[0].degree());
  ChainBuilder b(ambient, degree);
  for (auto& g : gens) b.add_generator(g);
  if (expected_order > 0 && b.order() < expected_order) {
    // randomized boost before the deterministic completion
    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<Perm> pool = gens;
    if (!pool.empty()) {
      Perm acc = pool[0];
      int stall = 0;
      while (b.order() < expected_order && stall < 4000) {
        acc = pmul(acc, pool[rng() % pool.size()]);
        if (rng() % 3 == 0) acc = pmul(pool[rng() % pool.size()], acc);
        if (b.add_generator(acc) >= 0)
          stall = 0;
        else
          ++stall;
      }
    }
  }
  b.complete();
  if (expected_order > 0 && b.order() != expected_order)
    throw std::runtime_error("stabilizer chain order mismatch: got " + i128_to_string(b.order()) +
                             " expected " + i128_to_string(expected_order));
  GroupCtx g;
  g.ambient = ambient;
  g.generators = std::move(gens);
  g.order = b.order();
  for (size_t l = 0; l < b.base.size(); ++l) {
    ChainLevel lvl;
    lvl.base_point = b.base[l];
    lvl.orbit = b.orbits[l];
    lvl.orbit_pos = b.orbit_pos[l];
    lvl.transversal = b.transversals[l];
    for (size_t m = l; m < b.level_gens.size(); ++m)
      for (auto& s : b.level_gens[m]) lvl.gens.push_back(s);
    g.chain.push_back(std::move(lvl));
  }
  if (g.chain.empty()) {
    // trivial group: keep a degenerate level so degree() works
    ChainLevel lvl;
    lvl.base_point = 0;
    lvl.orbit = {0};
    lvl.orbit_pos.assign(degree, -1);
    if (degree > 0) lvl.orbit_pos[0] = 0;
    lvl.transversal = {Perm(degree)};
    g.chain.push_back(std::move(lvl));
  }
  return g;
}

GroupCtx group_from_subsystem(const Subsystem& sub) {
  auto rs = sub.parent;
  std::vector<Perm> gens;
  for (int s : sub.simple_indices) gens.push_back(reflection(*rs, s));
  if (gens.empty()) gens.push_back(Perm(rs->nroots()));
  return make_group(rs, gens, type_weyl_order(sub.type_decomposition));
}

GroupCtx weyl_group(std::shared_ptr<const RootSystem> rs) {
  std::vector<Perm> gens;
  for (int i = 0; i < rs->rank; ++i) {
    std::vector<int> e(rs->rank, 0);
    e[i] = 1;
    gens.push_back(reflection(*rs, rs->root_index.at(e)));
  }
  return make_group(rs, gens, rs->weyl_order());
}

bool is_subgroup(const GroupCtx& G, const GroupCtx& H) {
  for (auto& g : H.generators)
    if (!G.contains(g)) return false;
  return true;
}

std::string CosetSpace::invariant(const Perm& x) const {
  std::string s(x.degree(), 0);
  for (int p = 0; p < x.degree(); ++p) s[p] = (char)(unsigned char)h_orbit_id[x.img[p]];
  return s;
}

int CosetSpace::index_of(const Perm& x) const {
  auto it = buckets.find(invariant(x));
  if (it == buckets.end()) return -1;
  for (int idx : it->second) {
    // Hx == H reps[idx]  iff  x * reps[idx]^-1 in H
    if (H->contains(pmul(x, pinv(reps[idx])))) return idx;
  }
  return -1;
}

CosetSpace coset_space(const GroupCtx& G, const GroupCtx& H) {
  if (!is_subgroup(G, H)) throw std::invalid_argument("coset_space: H is not a subgroup of G");
  CosetSpace cs;
  cs.G = &G;
  cs.H = &H;
  int n = G.degree();
  // H-orbits on points
  cs.h_orbit_id.assign(n, -1);
  int oid = 0;
  for (int p = 0; p < n; ++p) {
    if (cs.h_orbit_id[p] >= 0) continue;
    std::deque<int> q{p};
    cs.h_orbit_id[p] = oid;
    while (!q.empty()) {
      int c = q.front();
      q.pop_front();
      for (auto& g : H.generators)
        if (cs.h_orbit_id[g.img[c]] < 0) {
          cs.h_orbit_id[g.img[c]] = oid;
          q.push_back(g.img[c]);
        }
    }
    ++oid;
  }
  Perm id(n);
  cs.reps.push_back(id);
  cs.buckets[cs.invariant(id)].push_back(0);
  std::deque<int> work{0};
  while (!work.empty()) {
    int idx = work.front();
    work.pop_front();
    for (auto& g : G.generators) {
      Perm cand = pmul(cs.reps[idx], g);
      if (cs.index_of(cand) >= 0) continue;
      int ni = (int)cs.reps.size();
      cs.buckets[cs.invariant(cand)].push_back(ni);
      cs.reps.push_back(std::move(cand));
      work.push_back(ni);
    }
  }
  i128 expect = G.order / H.order;
  if ((i128)cs.reps.size() != expect)
    throw std::runtime_error("coset enumeration mismatch: " + std::to_string(cs.reps.size()) +
                             " vs " + i128_to_string(expect));
  return cs;
}

std::vector<Perm> coset_reps(const GroupCtx& G, const GroupCtx& H) {
  return coset_space(G, H).reps;
}

DoubleCosets double_cosets(const GroupCtx& G, const GroupCtx& H, const GroupCtx& K) {
  CosetSpace cs = coset_space(G, H);
  int n = (int)cs.reps.size();
  std::vector<int> seen(n, 0);
  DoubleCosets dc;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::deque<int> q{start};
    seen[start] = 1;
    i128 count = 0;
    while (!q.empty()) {
      int idx = q.front();
      q.pop_front();
      ++count;
      for (auto& k : K.generators) {
        int ni = cs.index_of(pmul(cs.reps[idx], k));
        if (!seen[ni]) {
          seen[ni] = 1;
          q.push_back(ni);
        }
      }
    }
    dc.reps.push_back(cs.reps[start]);
    dc.sizes.push_back(mul_checked(H.order, count));
  }
  return dc;
}

std::vector<std::vector<i64>> reflection_matrix(const RootSystem& rs, const Perm& g) {
  int n = rs.rank;
  std::vector<std::vector<i64>> m(n, std::vector<i64>(n, 0));
  for (int j = 0; j < n; ++j) {
    std::vector<int> e(n, 0);
    e[j] = 1;
    int img = g.img[rs.root_index.at(e)];
    for (int i = 0; i < n; ++i) m[i][j] = rs.roots[img][i];
  }
  return m;
}

std::vector<i128> charpoly(const std::vector<std::vector<i64>>& m) {
  // Faddeev–LeVerrier; integer inputs give integer steps.
  int n = (int)m.size();
  std::vector<std::vector<i128>> M(n, std::vector<i128>(n, 0));
  std::vector<std::vector<i128>> A(n, std::vector<i128>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = m[i][j];
  std::vector<i128> c(n + 1, 0);
  c[n] = 1;
  for (int i = 0; i < n; ++i) M[i][i] = 1;
  for (int k = 1; k <= n; ++k) {
    // M = A*M + c_{n-k+1} I (previous step already applied); here compute AM
    std::vector<std::vector<i128>> AM(n, std::vector<i128>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (A[i][l] == 0) continue;
        for (int j = 0; j < n; ++j) AM[i][j] = add_checked(AM[i][j], mul_checked(A[i][l], M[l][j]));
      }
    i128 tr = 0;
    for (int i = 0; i < n; ++i) tr = add_checked(tr, AM[i][i]);
    assert(tr % k == 0);
    c[n - k] = -tr / k;
    M = AM;
    for (int i = 0; i < n; ++i) M[i][i] = add_checked(M[i][i], c[n - k]);
  }
  return c;  // c[0] + c[1] x + ... + c[n] x^n
}

Fingerprint fingerprint(const RootSystem& rs, const Perm& g) {
  Fingerprint f;
  f.charpoly = charpoly(reflection_matrix(rs, g));
  std::vector<char> seen(g.degree(), 0);
  std::map<int, int> cyc;
  for (int i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    do {
      seen[j] = 1;
      j = g.img[j];
      ++len;
    } while (j != i);
    cyc[len]++;
  }
  for (auto& [len, cnt] : cyc) f.cycles.push_back({len, cnt});
  return f;
}

std::string Fingerprint::str() const {
  std::string s = "cp:";
  for (auto& c : charpoly) s += i128_to_string(c) + ",";
  s += "|cy:";
  for (auto& [l, c] : cycles) s += std::to_string(l) + "^" + std::to_string(c) + ",";
  return s;
}

namespace {

// Backtrack over the stabilizer chain for v with v g v^-1 = h.
struct ConjSearch {
  const GroupCtx& G;
  const RootSystem& rs;
  const Perm& g;
  const Perm& h;
  int n;
  std::vector<int> val;       // partial images, -1 unassigned
  std::vector<int> assigned;  // assigned points, in order

  ConjSearch(const GroupCtx& G_, const Perm& g_, const Perm& h_)
      : G(G_), rs(*G_.ambient), g(g_), h(h_), n(g_.degree()) {
    val.assign(n, -1);
  }

  bool assign(int p, int q, size_t& mark) {
    // close under: v(g(p)) = h(v(p)), v(-p) = -v(p); check isometry
    std::vector<std::pair<int, int>> todo{{p, q}};
    while (!todo.empty()) {
      auto [a, b] = todo.back();
      todo.pop_back();
      if (val[a] == b) continue;
      if (val[a] != -1) return false;
      if (rs.gram[a][a] != rs.gram[b][b]) return false;
      for (int x : assigned)
        if (rs.gram[a][x] != rs.gram[b][val[x]]) return false;
      val[a] = b;
      assigned.push_back(a);
      todo.push_back({g.img[a], h.img[b]});
      todo.push_back({rs.negate(a), rs.negate(b)});
    }
    (void)mark;
    return true;
  }

  void rollback(size_t mark) {
    while (assigned.size() > mark) {
      val[assigned.back()] = -1;
      assigned.pop_back();
    }
  }

  std::optional<Perm> search(size_t level, const Perm& prefix) {
    if (level == G.chain.size()) {
      Perm v = prefix;
      // fully determined by the chain; verify
      if (pmul(pmul(v, g), pinv(v)) == h) return v;
      return std::nullopt;
    }
    const ChainLevel& lvl = G.chain[level];
    int b = lvl.base_point;
    for (int gamma : lvl.orbit) {
      Perm next = pmul(prefix, lvl.transversal[lvl.orbit_pos[gamma]]);
      int c = next.img[b];
      if (val[b] != -1 && val[b] != c) continue;
      size_t mark = assigned.size();
      if (assign(b, c, mark)) {
        auto r = search(level + 1, next);
        if (r) return r;
      }
      rollback(mark);
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Perm> conjugacy_witness(const GroupCtx& G, const Perm& g, const Perm& h) {
  if (g == h) return Perm(g.degree());
  if (!(fingerprint(*G.ambient, g) == fingerprint(*G.ambient, h))) return std::nullopt;
  ConjSearch cs(G, g, h);
  return cs.search(0, Perm(g.degree()));
}

bool are_conjugate(const GroupCtx& G, const Perm& g, const Perm& h) {
  return conjugacy_witness(G, g, h).has_value();
}

GroupCtx centralizer(const GroupCtx& G, const Perm& g, std::mt19937_64& rng, int patience) {
  ChainBuilder b(G.ambient, g.degree());
  std::vector<Perm> gens{g};
  b.add_generator(g);
  bool completed = false;
  int stall = 0;
  while (true) {
    if (stall >= patience) {
      if (!completed) {
        b.complete();
        completed = true;
        stall = 0;
        continue;
      }
      break;
    }
    Perm x = G.random_element(rng);
    Perm z = conj(g, x);
    auto v = conjugacy_witness(G, g, z);
    if (!v) throw std::runtime_error("centralizer: conjugate not found (internal)");
    Perm c = pmul(pinv(x), *v);
    if (b.sift_from(c, 0).is_identity()) {
      ++stall;
    } else {
      stall = 0;
      completed = false;
      gens.push_back(c);
      b.add_generator(c);
    }
  }
  return make_group(G.ambient, gens, b.order());
}

std::pair<GroupCtx, ComponentGroup> reflection_closure(const GroupCtx& G, const GroupCtx& S) {
  auto rs = G.ambient;
  std::vector<int> refl_roots;
  for (int r = 0; r < rs->positive_count; ++r)
    if (S.contains(reflection(*rs, r))) refl_roots.push_back(r);
  GroupCtx S0;
  if (refl_roots.empty()) {
    S0 = make_group(rs, {Perm(rs->nroots())}, 1);
  } else {
    std::vector<int> full = refl_roots;
    for (int r : refl_roots) full.push_back(rs->negate(r));
    std::sort(full.begin(), full.end());
    auto sub = make_subsystem(rs, simple_system_of(*rs, full));
    S0 = group_from_subsystem(sub);
  }
  ComponentGroup comp;
  // enumerate S/S0 by BFS over coset reps
  std::vector<Perm> reps{Perm(rs->nroots())};
  std::deque<int> work{0};
  while (!work.empty()) {
    int idx = work.front();
    work.pop_front();
    for (auto& s : S.generators) {
      Perm cand = pmul(reps[idx], s);
      bool known = false;
      for (auto& r : reps)
        if (S0.contains(pmul(pinv(r), cand))) {
          known = true;
          break;
        }
      if (!known) {
        reps.push_back(cand);
        work.push_back((int)reps.size() - 1);
      }
    }
  }
  comp.coset_reps = reps;
  size_t m = reps.size();
  if (S.order != mul_checked(S0.order, (i128)m))
    throw std::runtime_error("reflection_closure: component enumeration mismatch");
  if (m == 1)
    comp.label = "1";
  else if (m == 2)
    comp.label = "C2";
  else if (m == 3)
    comp.label = "C3";
  else if (m == 4) {
    bool c4 = false;
    for (auto& r : reps)
      if (!S0.contains(pmul(r, r))) c4 = true;
    comp.label = c4 ? "C4" : "C2xC2";
  } else if (m == 6) {
    bool abelian = true;
    for (size_t i = 0; i < m && abelian; ++i)
      for (size_t j = i + 1; j < m && abelian; ++j)
        if (!S0.contains(pmul(pmul(reps[i], reps[j]), pinv(pmul(reps[j], reps[i])))))
          abelian = false;
    comp.label = abelian ? "C6" : "S3";
  } else {
    comp.label = "G" + std::to_string(m);
  }
  return {std::move(S0), std::move(comp)};
}

GroupCtx stabilizer_of(const GroupCtx& G, const std::function<std::string(const Perm&)>& label_of,
                       std::vector<Perm>* transversal_out, std::vector<std::string>* orbit_out) {
  Perm id(G.chain[0].orbit_pos.size());
  std::unordered_map<std::string, int> index;
  std::vector<std::string> orbit{label_of(id)};
  std::vector<Perm> trans{id};
  index[orbit[0]] = 0;
  std::deque<int> work{0};
  std::vector<Perm> stab_gens;
  while (!work.empty()) {
    int idx = work.front();
    work.pop_front();
    for (auto& g : G.generators) {
      Perm cand = pmul(g, trans[idx]);
      std::string lbl = label_of(cand);
      auto it = index.find(lbl);
      if (it == index.end()) {
        index[lbl] = (int)orbit.size();
        orbit.push_back(lbl);
        trans.push_back(cand);
        work.push_back((int)orbit.size() - 1);
      } else {
        // Schreier generator
        stab_gens.push_back(pmul(pinv(trans[it->second]), cand));
      }
    }
  }
  if (G.order % (i128)orbit.size() != 0)
    throw std::runtime_error("orbit size does not divide group order");
  i128 expected = G.order / (i128)orbit.size();
  if (stab_gens.empty()) stab_gens.push_back(id);
  GroupCtx S = make_group(G.ambient, stab_gens, expected);
  if (transversal_out) *transversal_out = trans;
  if (orbit_out) *orbit_out = orbit;
  return S;
}

TorsionPoint apply_perm_point(const RootSystem& rs, const Perm& w, const TorsionPoint& t) {
  Perm wi = pinv(w);
  TorsionPoint out;
  out.coords.resize(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    std::vector<int> e(rs.rank, 0);
    e[j] = 1;
    int pre = wi.img[rs.root_index.at(e)];
    Rat v(0);
    for (int k = 0; k < rs.rank; ++k)
      if (rs.roots[pre][k] != 0) v = v + Rat(rs.roots[pre][k]) * t.coords[k];
    out.coords[j] = v.mod1();
  }
  out.normalize();
  return out;
}

std::vector<int> word_for(const RootSystem& rs, const Perm& g) {
  std::vector<int> sref;
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<int> e(rs.rank, 0);
    e[i] = 1;
    sref.push_back(rs.root_index.at(e));
  }
  std::vector<int> collected;
  Perm w = g;
  while (!w.is_identity()) {
    bool moved = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (w.img[sref[i]] >= rs.positive_count) {
        w = pmul(w, reflection(rs, sref[i]));
        collected.push_back(i);
        moved = true;
        break;
      }
    }
    if (!moved) throw std::runtime_error("word_for: element does not descend (not in W?)");
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

Perm perm_from_word(const RootSystem& rs, const std::vector<int>& word) {
  Perm w(rs.nroots());
  for (int i : word) {
    std::vector<int> e(rs.rank, 0);
    e[i] = 1;
    w = pmul(w, reflection(rs, rs.root_index.at(e)));
  }
  return w;
}

}  // namespace weylcs
