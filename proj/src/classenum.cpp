#include "weylcs/classenum.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <unordered_map>
#include <functional>
#include <unordered_set>

#include <cstdlib>
#include <iostream>

#include "weylcs/parallel.hpp"

namespace weylcs {

int expected_class_count(const SimpleType& t) {
  switch (t.family) {
    case 'A': {
      return (int)partitions(t.rank + 1).size();
    }
    case 'B':
    case 'C': {
      int n = t.rank, c = 0;
      for (int a = 0; a <= n; ++a)
        c += (int)partitions(a).size() * (int)partitions(n - a).size();
      return c;
    }
    case 'D': {
      int n = t.rank, c = 0;
      for (int a = 0; a <= n; ++a)
        for (auto& lam : partitions(a))
          for (auto& mu : partitions(n - a)) {
            if (mu.size() % 2 != 0) continue;
            bool split = mu.empty() && !lam.empty();
            for (int x : lam)
              if (x % 2 != 0) split = false;
            c += split ? 2 : 1;
          }
      return c;
    }
    case 'E':
      if (t.rank == 6) return 25;
      if (t.rank == 7) return 60;
      return 112;
    case 'F':
      return 25;
    case 'G':
      return 6;
  }
  throw std::invalid_argument("expected_class_count: unknown family");
}

namespace {

struct ClassWord {
  std::vector<int> word;
  i128 size = 0;
  i64 order = 1;
};

std::map<std::string, std::vector<ClassWord>>& word_cache() {
  static std::map<std::string, std::vector<ClassWord>> cache;
  return cache;
}

std::vector<ClassWord> classes_for_type(const TypeLabel& type);

std::vector<ClassWord> classes_for_simple(const SimpleType& st) {
  std::string label = st.str();
  if (st.family == 'A' || st.family == 'B' || st.family == 'C' || st.family == 'D') {
    CharacterTable t = table_for_type(TypeLabel{st});
    std::vector<ClassWord> out;
    for (auto& c : t.classes) out.push_back({c.rep_word, c.size, c.order});
    return out;
  }
  auto rs = build_root_system(label);
  auto W = weyl_group(rs);
  auto classes = enumerate_classes(rs, W);
  std::vector<ClassWord> out;
  for (auto& c : classes) out.push_back({word_for(*rs, c.rep), c.size, c.order});
  return out;
}

std::vector<ClassWord> classes_for_type(const TypeLabel& type) {
  std::string key = type_label_str(type);
  auto it = word_cache().find(key);
  if (it != word_cache().end()) return it->second;
  std::vector<ClassWord> result{{{}, 1, 1}};
  int offset = 0;
  for (auto& st : type) {
    auto factor = classes_for_simple(st);
    std::vector<ClassWord> next;
    for (auto& base : result)
      for (auto& f : factor) {
        ClassWord cw;
        cw.word = base.word;
        for (int x : f.word) cw.word.push_back(x + offset);
        cw.size = mul_checked(base.size, f.size);
        cw.order = std::lcm(base.order, f.order);
        next.push_back(std::move(cw));
      }
    result = std::move(next);
    offset += st.rank;
  }
  word_cache()[key] = result;
  return result;
}

std::string encode_perm(const Perm& p) {
  std::string s;
  s.reserve(p.degree());
  for (int i = 0; i < p.degree(); ++i) s.push_back((char)(unsigned char)p.img[i]);
  return s;
}

std::vector<ConjClass> enumerate_by_force(std::shared_ptr<const RootSystem> rs,
                                          const GroupCtx& W) {
  std::unordered_set<std::string> all;
  std::deque<Perm> work{Perm(rs->nroots())};
  all.insert(encode_perm(work[0]));
  std::vector<Perm> elements{work[0]};
  while (!work.empty()) {
    Perm w = work.front();
    work.pop_front();
    for (auto& g : W.generators) {
      Perm c = pmul(w, g);
      if (all.insert(encode_perm(c)).second) {
        elements.push_back(c);
        work.push_back(c);
      }
    }
  }
  if ((i128)elements.size() != W.order) throw std::runtime_error("enumeration mismatch");
  std::unordered_set<std::string> visited;
  std::vector<ConjClass> out;
  for (auto& g : elements) {
    if (visited.count(encode_perm(g))) continue;
    std::deque<Perm> q{g};
    visited.insert(encode_perm(g));
    i128 size = 0;
    while (!q.empty()) {
      Perm c = q.front();
      q.pop_front();
      ++size;
      for (auto& s : W.generators) {
        Perm cc = pmul(pmul(s, c), s);  // generators are involutions
        if (visited.insert(encode_perm(cc)).second) q.push_back(cc);
      }
    }
    out.push_back({g, size, perm_order(g)});
  }
  return out;
}

}  // namespace

std::vector<ConjClass> enumerate_classes(std::shared_ptr<const RootSystem> rs,
                                         const GroupCtx& W) {
  if (W.order <= 200000) return enumerate_by_force(rs, W);
  if (!rs->is_simple_type())
    throw std::invalid_argument("enumerate_classes: large products unsupported directly");
  int expected = expected_class_count(rs->type[0]);

  std::unordered_map<std::string, std::vector<int>> buckets;
  std::vector<ConjClass> found;
  auto try_candidate = [&](const Perm& p) -> bool {
    auto fps = fingerprint(*rs, p).str();
    auto& b = buckets[fps];
    for (int i : b)
      if (conjugacy_witness(W, p, found[i].rep)) return false;
    b.push_back((int)found.size());
    found.push_back({p, 0, perm_order(p)});
    return true;
  };

  try_candidate(Perm(rs->nroots()));
  // subsystem candidates
  for (auto& sub : pseudo_levis(rs)) {
    if ((int)sub.root_set.size() == rs->nroots()) continue;  // the full system
    if (sub.rank() == 0) continue;
    std::vector<Perm> gens;
    for (int s : sub.simple_indices) gens.push_back(reflection(*rs, s));
    for (auto& cw : classes_for_type(sub.type_decomposition)) {
      Perm p(rs->nroots());
      for (int i : cw.word) p = pmul(p, gens.at(i));
      try_candidate(p);
      if ((int)found.size() == expected) break;
    }
    if ((int)found.size() == expected) break;
  }
  // random elliptic search for diagram-spanning classes
  std::mt19937_64 rng(0xe11177ULL);
  long guard = 0;
  while ((int)found.size() < expected) {
    if (++guard > 2000000) throw std::runtime_error("class search did not converge");
    Perm p(rs->nroots());
    for (int k = 0; k < rs->rank; ++k)
      p = pmul(p, reflection(*rs, (int)(rng() % rs->positive_count)));
    auto cp = charpoly(reflection_matrix(*rs, p));
    i128 at1 = 0;
    for (auto c : cp) at1 += c;
    if (at1 == 0) continue;  // not elliptic
    try_candidate(p);
  }

  // exact sizes via randomized centralizers, certified by the total
  int patience = 24;
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::mt19937_64 crng(0xc347 + attempt * 977);
    i128 total = 0;
    for (auto& c : found) {
      auto C = centralizer(W, c.rep, crng, patience);
      c.size = W.order / C.order;
      total = add_checked(total, c.size);
    }
    if (total == W.order) {
      std::sort(found.begin(), found.end(), [&](const ConjClass& a, const ConjClass& b) {
        if (a.order != b.order) return a.order < b.order;
        if (a.size != b.size) return a.size < b.size;
        return fingerprint(*rs, a.rep).str() < fingerprint(*rs, b.rep).str();
      });
      return found;
    }
    patience *= 2;
  }
  throw std::runtime_error("class sizes failed certification");
}

CharacterTable generate_table(std::shared_ptr<const RootSystem> rs) {
  auto W = weyl_group(rs);
  auto classes = enumerate_classes(rs, W);
  int ncl = (int)classes.size();

  CharacterTable t;
  t.name = rs->type_label;
  t.order = W.order;
  t.rank = rs->rank;
  t.degrees = rs->degrees;
  for (int i = 0; i < ncl; ++i) {
    ClassRecord c;
    c.label = "c" + std::to_string(i) + "o" + std::to_string(classes[i].order);
    c.rep_word = word_for(*rs, classes[i].rep);
    c.size = classes[i].size;
    c.order = classes[i].order;
    auto cp = charpoly(reflection_matrix(*rs, classes[i].rep));
    c.det_poly.assign(t.rank + 1, 0);
    for (int k = 0; k <= t.rank; ++k) c.det_poly[t.rank - k] = to_i64(cp[k]);
    t.classes.push_back(std::move(c));
  }
  bool trace = std::getenv("WEYLCS_TRACE") != nullptr;

  // inner product over W of two class-function vectors, exact
  auto pair_of = [&](const std::vector<i128>& f, const std::vector<i128>& g) {
    i128 num = 0;
    for (int c = 0; c < ncl; ++c)
      num = add_checked(num, mul_checked(t.classes[c].size, mul_checked(f[c], g[c])));
    assert(num % t.order == 0);
    return num / t.order;
  };

  std::vector<std::vector<i64>> knowns;
  std::set<std::vector<i64>> known_set;
  i128 degsq = 0;
  std::vector<std::vector<i128>> pool;

  std::function<bool(std::vector<i64>)> add_known = [&](std::vector<i64> v) {
    if (v[0] < 0)
      for (auto& x : v) x = -x;
    if (known_set.count(v)) return false;
    known_set.insert(v);
    degsq = add_checked(degsq, mul_checked((i128)v[0], (i128)v[0]));
    knowns.push_back(v);
    return true;
  };

  // reduce f against the knowns
  auto reduce_known = [&](std::vector<i128>& f) {
    for (auto& chi : knowns) {
      std::vector<i128> cv(chi.begin(), chi.end());
      i128 m = pair_of(f, cv);
      if (m == 0) continue;
      for (int c = 0; c < ncl; ++c) f[c] = f[c] - m * cv[c];
    }
  };

  // exterior powers of the reflection representation are irreducible
  for (int k = 0; k <= t.rank; ++k) {
    std::vector<i64> v(ncl);
    for (int c = 0; c < ncl; ++c) {
      auto cp = charpoly(reflection_matrix(*rs, classes[c].rep));
      i128 ek = cp[t.rank - k];
      if (k % 2) ek = -ek;
      v[c] = to_i64(ek);
    }
    add_known(v);
  }
  std::vector<i64> sign_char = knowns.back();  // top exterior power

  std::function<void(std::vector<i128>)> feed = [&](std::vector<i128> f) {
    reduce_known(f);
    i128 n = pair_of(f, f);
    if (n == 0) return;
    if (n == 1) {
      std::vector<i64> v(ncl);
      for (int c = 0; c < ncl; ++c) v[c] = to_i64(f[c]);
      if (add_known(v)) {
        // close under tensoring with the sign character
        std::vector<i128> tw(ncl);
        for (int c = 0; c < ncl; ++c) tw[c] = (i128)v[c] * sign_char[c];
        feed(std::move(tw));
      }
      return;
    }
    pool.push_back(std::move(f));
  };

  // size-reduction rounds over the pool; promotes norm-1 vectors
  auto reduce_pool = [&]() {
    bool progress = true;
    while (progress && degsq < t.order) {
      progress = false;
      for (auto& f : pool) reduce_known(f);
      pool.erase(std::remove_if(pool.begin(), pool.end(),
                                [&](const std::vector<i128>& f) { return pair_of(f, f) == 0; }),
                 pool.end());
      std::sort(pool.begin(), pool.end(), [&](const auto& a, const auto& b) {
        return pair_of(a, a) < pair_of(b, b);
      });
      for (size_t i = 0; i < pool.size(); ++i) {
        i128 nii = pair_of(pool[i], pool[i]);
        if (nii == 1) {
          auto f = pool[i];
          pool.erase(pool.begin() + i);
          feed(std::move(f));
          progress = true;
          break;
        }
        for (size_t j = i + 1; j < pool.size(); ++j) {
          i128 nij = pair_of(pool[i], pool[j]);
          if (nij == 0) continue;
          // round(nij / nii), exact arithmetic
          i128 q = (2 * nij + (nij > 0 ? nii : -nii)) / (2 * nii);
          if (q == 0) continue;
          i128 njj = pair_of(pool[j], pool[j]);
          std::vector<i128> g(ncl);
          for (int c = 0; c < ncl; ++c) g[c] = pool[j][c] - q * pool[i][c];
          i128 ng = pair_of(g, g);
          if (ng < njj) {
            pool[j] = std::move(g);
            progress = true;
          }
        }
      }
    }
  };

  auto say = [&](const std::string& what) {
    if (trace)
      std::cerr << "[gen " << t.name << "] " << what << ": knowns=" << knowns.size()
                << " pool=" << pool.size() << " degsq=" << i128_to_string(degsq) << "/"
                << i128_to_string(t.order) << std::endl;
  };
  say("exterior powers");

  // class identification map for fusions
  RealizedTable parent_realized;
  {
    std::vector<int> all_simples;
    for (int i = 0; i < rs->rank; ++i) {
      std::vector<int> e(rs->rank, 0);
      e[i] = 1;
      all_simples.push_back(rs->root_index.at(e));
    }
    Subsystem whole = make_subsystem(rs, all_simples);
    CharacterTable shell = t;
    parent_realized = realize_table(shell, whole);
  }
  std::unordered_map<std::string, std::vector<int>> by_fp;
  for (int i = 0; i < ncl; ++i)
    by_fp[fingerprint(*rs, parent_realized.class_reps[i]).str()].push_back(i);

  auto subs = pseudo_levis(rs);
  std::sort(subs.begin(), subs.end(), [](const Subsystem& a, const Subsystem& b) {
    return a.root_set.size() > b.root_set.size();
  });
  for (auto& sub : subs) {
    if (degsq == t.order) break;
    if ((int)sub.root_set.size() == rs->nroots() || sub.rank() == 0) continue;
    CharacterTable sub_t = table_for_type(sub.type_decomposition);
    RealizedTable rsub = realize_table(sub_t, sub);
    ClassFusion fus;
    fus.sub = &rsub.table;
    fus.parent = &t;
    for (int i = 0; i < rsub.table.nclasses(); ++i) {
      int target = -1;
      for (int cand : by_fp[fingerprint(*rs, rsub.class_reps[i]).str()])
        if (conjugacy_witness(W, rsub.class_reps[i], parent_realized.class_reps[cand])) {
          target = cand;
          break;
        }
      if (target < 0) throw std::runtime_error("generate_table: subsystem class fusion failed");
      fus.map.push_back(target);
    }
    for (int i = 0; i < rsub.table.nchars() && degsq < t.order; ++i)
      feed(induce(fus, char_values(rsub.table, i)));
    reduce_pool();
    say("after Ind from " + sub.type_str());
  }

  // power map for symmetric / alternating squares
  std::vector<int> square_class(ncl, -1);
  for (int i = 0; i < ncl && degsq < t.order; ++i) {
    Perm sq = pmul(classes[i].rep, classes[i].rep);
    for (int cand : by_fp[fingerprint(*rs, sq).str()])
      if (conjugacy_witness(W, sq, classes[cand].rep)) {
        square_class[i] = cand;
        break;
      }
    if (square_class[i] < 0) throw std::runtime_error("power map failed");
  }

  size_t squared_up_to = 0, tensor_i = 0, tensor_j = 0;
  long guard = 0;
  while (degsq < t.order) {
    if (++guard > 4000000) throw std::runtime_error("character generation did not converge");
    if (squared_up_to < knowns.size()) {
      const auto chi = knowns[squared_up_to++];
      std::vector<i128> sym(ncl), alt(ncl);
      for (int c = 0; c < ncl; ++c) {
        i128 sqv = mul_checked((i128)chi[c], (i128)chi[c]);
        i128 pw = chi[square_class[c]];
        assert((sqv + pw) % 2 == 0);
        sym[c] = (sqv + pw) / 2;
        alt[c] = (sqv - pw) / 2;
      }
      feed(std::move(sym));
      if (degsq < t.order) feed(std::move(alt));
      reduce_pool();
      if (squared_up_to % 8 == 0) say("squares");
      continue;
    }
    if (tensor_j >= knowns.size()) {
      ++tensor_i;
      tensor_j = 0;
    }
    if (tensor_i >= knowns.size()) {
      say("EXHAUSTED");
      if (trace)
        for (auto& sv : pool)
          std::cerr << "  pool norm " << i128_to_string(pair_of(sv, sv)) << " deg "
                    << i128_to_string(sv[0]) << std::endl;
      throw std::runtime_error("character generation exhausted tensor closure");
    }
    std::vector<i128> prod(ncl);
    for (int c = 0; c < ncl; ++c)
      prod[c] = mul_checked((i128)knowns[tensor_i][c], (i128)knowns[tensor_j][c]);
    ++tensor_j;
    feed(std::move(prod));
    reduce_pool();
  }
  if ((int)knowns.size() != ncl)
    throw std::runtime_error("character count mismatch after generation");
  say("complete");

  for (auto& v : knowns) {
    CharRecord ch;
    ch.values = v;
    t.chars.push_back(std::move(ch));
  }
  validate_table(t);
  compute_b_invariants(t);
  std::vector<int> idx(ncl);
  for (int i = 0; i < ncl; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (t.chars[a].values[0] != t.chars[b].values[0])
      return t.chars[a].values[0] < t.chars[b].values[0];
    if (t.chars[a].b != t.chars[b].b) return t.chars[a].b < t.chars[b].b;
    return t.chars[a].values < t.chars[b].values;
  });
  std::vector<CharRecord> sorted_chars;
  for (int i : idx) sorted_chars.push_back(t.chars[i]);
  std::map<std::pair<i64, i64>, int> totals, running;
  for (auto& ch : sorted_chars) totals[{ch.values[0], ch.b}]++;
  for (auto& ch : sorted_chars) {
    auto key = std::make_pair(ch.values[0], ch.b);
    ch.label = "phi" + std::to_string(ch.values[0]) + "," + std::to_string(ch.b);
    if (totals[key] > 1) {
      int n = running[key]++;
      for (int k = 0; k <= n; ++k) ch.label += "'";
    }
  }
  t.chars = std::move(sorted_chars);
  validate_table(t);
  return t;
}

}  // namespace weylcs
