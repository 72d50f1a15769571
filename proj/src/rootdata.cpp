#include "weylcs/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace weylcs {

namespace {

constexpr const char* kTildeA = "Ã";  // "Ã"

std::vector<int> degrees_for(char family, int rank) {
  std::vector<int> d;
  switch (family) {
    case 'A':
      for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i + 1 <= rank; ++i) d.push_back(2 * i);
      d.push_back(rank);
      break;
    case 'E':
      if (rank == 6) d = {2, 5, 6, 8, 9, 12};
      if (rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (rank == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

// cartan[i][j] = <a_j, a_i^vee>, with the symmetrizer d (half-norms).
void simple_cartan(char family, int rank, std::vector<std::vector<int>>& cartan,
                   std::vector<int>& d) {
  int n = rank;
  cartan.assign(n, std::vector<int>(n, 0));
  d.assign(n, 1);
  for (int i = 0; i < n; ++i) cartan[i][i] = 2;
  auto edge = [&](int a, int b) { cartan[a][b] = cartan[b][a] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':  // a_n short
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      d[n - 1] = 1;
      cartan[n - 2][n - 1] = -1;
      cartan[n - 1][n - 2] = -2;
      break;
    case 'C':  // a_n long
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      d[n - 1] = 2;
      cartan[n - 2][n - 1] = -2;
      cartan[n - 1][n - 2] = -1;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
      edge(0, 2);
      edge(2, 3);
      edge(1, 3);
      for (int i = 3; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'F':  // a1,a2 long; a3,a4 short
      d = {2, 2, 1, 1};
      edge(0, 1);
      edge(2, 3);
      cartan[1][2] = -1;
      cartan[2][1] = -2;
      break;
    case 'G':  // a1 long, a2 short; highest root 2a1+3a2
      d = {3, 1};
      cartan[0][1] = -1;
      cartan[1][0] = -3;
      break;
  }
}

int vec_height(const std::vector<int>& v) {
  int h = 0;
  for (int x : v) h += x;
  return h;
}

std::string simple_type_str(const SimpleType& t) {
  std::string s;
  if (t.tilde && t.family == 'A')
    s += kTildeA;
  else if (t.tilde)
    s += std::string("~") + t.family;
  else
    s += t.family;
  s += std::to_string(t.rank);
  return s;
}

}  // namespace

std::string SimpleType::str() const { return simple_type_str(*this); }

i128 SimpleType::weyl_order() const {
  i128 o = 1;
  for (int deg : degrees_for(family, rank)) o = mul_checked(o, deg);
  return o;
}

std::vector<int> SimpleType::degrees() const { return degrees_for(family, rank); }

std::string type_label_str(const TypeLabel& t) {
  if (t.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += "+";
    s += simple_type_str(t[i]);
  }
  return s;
}

std::string type_label_class_str(const TypeLabel& t) {
  if (t.empty()) return "0";
  std::string s;
  size_t i = 0;
  while (i < t.size()) {
    size_t j = i;
    while (j < t.size() && t[j] == t[i]) ++j;
    if (!s.empty()) s += "+";
    if (j - i > 1) s += std::to_string(j - i);
    s += simple_type_str(t[i]);
    i = j;
  }
  return s;
}

TypeLabel parse_type_label(const std::string& s) {
  TypeLabel out;
  if (s.empty() || s == "0") return out;
  std::string token;
  std::vector<std::string> parts;
  for (char c : s) {
    if (c == '+') {
      parts.push_back(token);
      token.clear();
    } else if (!isspace((unsigned char)c)) {
      token += c;
    }
  }
  parts.push_back(token);
  for (auto& p : parts) {
    if (p.empty()) throw std::invalid_argument("empty factor in type label: " + s);
    SimpleType t;
    size_t k = 0;
    size_t mult = 1;
    while (k < p.size() && isdigit((unsigned char)p[k])) ++k;
    if (k > 0 && k < p.size()) {
      mult = std::stoul(p.substr(0, k));
      p = p.substr(k);
    }
    size_t pos = 0;
    if (p.size() >= 2 && (unsigned char)p[0] == 0xc3 && (unsigned char)p[1] == 0x83) {
      t.tilde = true;
      t.family = 'A';
      pos = 2;
      if (pos < p.size() && isalpha((unsigned char)p[pos]))
        t.family = (char)toupper((unsigned char)p[pos++]);
    } else if (p[0] == '~') {
      t.tilde = true;
      pos = 1;
      if (pos >= p.size() || !isalpha((unsigned char)p[pos]))
        throw std::invalid_argument("bad tilde type: " + p);
      t.family = (char)toupper((unsigned char)p[pos++]);
    } else if (isalpha((unsigned char)p[0])) {
      t.family = (char)toupper((unsigned char)p[0]);
      pos = 1;
    } else {
      throw std::invalid_argument("bad type token: " + p);
    }
    if (pos >= p.size()) throw std::invalid_argument("missing rank in type label: " + s);
    t.rank = std::stoi(p.substr(pos));
    if (t.family < 'A' || t.family > 'G' || t.rank < 1)
      throw std::invalid_argument("unknown type: " + p);
    if ((t.family == 'B' || t.family == 'C') && t.rank < 2)
      throw std::invalid_argument("rank too small for " + p);
    if (t.family == 'D' && t.rank < 4) throw std::invalid_argument("rank too small for " + p);
    if (t.family == 'E' && (t.rank < 6 || t.rank > 8))
      throw std::invalid_argument("bad E rank: " + p);
    if (t.family == 'F' && t.rank != 4) throw std::invalid_argument("bad F rank: " + p);
    if (t.family == 'G' && t.rank != 2) throw std::invalid_argument("bad G rank: " + p);
    for (size_t m = 0; m < mult; ++m) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

i128 type_weyl_order(const TypeLabel& t) {
  i128 o = 1;
  for (auto& f : t) o = mul_checked(o, f.weyl_order());
  return o;
}

int RootSystem::form(const std::vector<int>& a, const std::vector<int>& b) const {
  long long s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (b[j] == 0 || cartan[i][j] == 0) continue;
      s += (long long)a[i] * sym[i] * cartan[i][j] * b[j];
    }
  }
  return (int)s;
}

int RootSystem::pair_coroot(const std::vector<int>& a, const std::vector<int>& b) const {
  int bb = form(b, b);
  int ab = form(a, b);
  assert((2 * ab) % bb == 0);
  return 2 * ab / bb;
}

int RootSystem::reflect_root(int s, int r) const {
  if (!refl.empty()) return refl[s][r];
  int c = 2 * gram[r][s];
  if (c == 0) return r;
  assert(c % gram[s][s] == 0);
  c /= gram[s][s];
  std::vector<int> v = roots[r];
  for (int i = 0; i < rank; ++i) v[i] -= c * roots[s][i];
  auto it = root_index.find(v);
  assert(it != root_index.end());
  return it->second;
}

i128 RootSystem::weyl_order() const { return type_weyl_order(type); }

std::shared_ptr<const RootSystem> build_root_system(const std::string& label) {
  TypeLabel type = parse_type_label(label);
  if (type.empty()) throw std::invalid_argument("rank 0 root system: " + label);
  static std::map<std::string, std::shared_ptr<const RootSystem>> cache;
  {
    auto it = cache.find(type_label_str(type));
    if (it != cache.end()) return it->second;
  }
  auto rs = std::make_shared<RootSystem>();
  rs->type = type;
  rs->type_label = type_label_str(type);
  int n = 0;
  for (auto& f : type) n += f.rank;
  rs->rank = n;
  rs->cartan.assign(n, std::vector<int>(n, 0));
  rs->sym.assign(n, 1);
  int off = 0;
  for (auto& f : type) {
    std::vector<std::vector<int>> c;
    std::vector<int> d;
    simple_cartan(f.family, f.rank, c, d);
    std::vector<int> nodes;
    for (int i = 0; i < f.rank; ++i) {
      nodes.push_back(off + i);
      rs->sym[off + i] = d[i];
      for (int j = 0; j < f.rank; ++j) rs->cartan[off + i][off + j] = c[i][j];
    }
    rs->factor_nodes.push_back(nodes);
    for (int deg : f.degrees()) rs->degrees.push_back(deg);
    off += f.rank;
  }
  std::sort(rs->degrees.begin(), rs->degrees.end());

  std::set<std::vector<int>> pos;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    pos.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int c = 0;
      for (int j = 0; j < n; ++j) c += rs->cartan[i][j] * r[j];
      if (c >= 0) continue;
      auto v = r;
      v[i] -= c;
      if (pos.insert(v).second) queue.push_back(v);
    }
  }
  std::vector<std::vector<int>> plist(pos.begin(), pos.end());
  std::sort(plist.begin(), plist.end(), [](const auto& a, const auto& b) {
    int ha = vec_height(a), hb = vec_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs->positive_count = (int)plist.size();
  rs->roots = plist;
  for (auto v : plist) {
    for (auto& x : v) x = -x;
    rs->roots.push_back(v);
  }
  for (int i = 0; i < rs->nroots(); ++i) rs->root_index[rs->roots[i]] = i;

  rs->gram.assign(rs->nroots(), std::vector<int>(rs->nroots(), 0));
  for (int i = 0; i < rs->nroots(); ++i)
    for (int j = i; j < rs->nroots(); ++j)
      rs->gram[i][j] = rs->gram[j][i] = rs->form(rs->roots[i], rs->roots[j]);

  rs->refl.assign(rs->nroots(), std::vector<uint16_t>(rs->nroots()));
  for (int s = 0; s < rs->nroots(); ++s)
    for (int r = 0; r < rs->nroots(); ++r) {
      int c = 2 * rs->gram[r][s];
      if (c == 0) {
        rs->refl[s][r] = (uint16_t)r;
        continue;
      }
      c /= rs->gram[s][s];
      std::vector<int> v = rs->roots[r];
      for (int i = 0; i < n; ++i) v[i] -= c * rs->roots[s][i];
      rs->refl[s][r] = (uint16_t)rs->root_index.at(v);
    }
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    rs->simple_refs.push_back(rs->root_index.at(e));
  }

  for (size_t f = 0; f < rs->factor_nodes.size(); ++f) {
    auto& nodes = rs->factor_nodes[f];
    std::vector<int> theta;
    int best = -1;
    for (int i = 0; i < rs->positive_count; ++i) {
      bool in_factor = true;
      for (int j = 0; j < n && in_factor; ++j)
        if (rs->roots[i][j] != 0 && std::find(nodes.begin(), nodes.end(), j) == nodes.end())
          in_factor = false;
      if (!in_factor) continue;
      int h = vec_height(rs->roots[i]);
      if (h > best) {
        best = h;
        theta = rs->roots[i];
      }
    }
    rs->extended_marks.push_back(1);
    for (int node : nodes) rs->extended_marks.push_back(theta[node]);
    auto aff = theta;
    for (auto& x : aff) x = -x;
    rs->affine_roots.push_back(aff);
  }
  cache[rs->type_label] = rs;
  return rs;
}

std::vector<int> simple_system_of(const RootSystem& rs, const std::vector<int>& root_set) {
  std::vector<int> positives;
  std::unordered_set<int> member(root_set.begin(), root_set.end());
  for (int r : root_set)
    if (r < rs.positive_count) positives.push_back(r);
  std::vector<int> simples;
  for (int p : positives) {
    bool decomposable = false;
    for (int q : positives) {
      if (q == p) continue;
      std::vector<int> diff = rs.roots[p];
      for (int i = 0; i < rs.rank; ++i) diff[i] -= rs.roots[q][i];
      auto it = rs.root_index.find(diff);
      if (it != rs.root_index.end() && it->second < rs.positive_count &&
          member.count(it->second)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(p);
  }
  std::sort(simples.begin(), simples.end());
  return simples;
}

namespace {

std::vector<int> reflection_closure_set(const RootSystem& rs, const std::vector<int>& gens) {
  std::set<int> set;
  for (int s : gens) {
    set.insert(s);
    set.insert(rs.negate(s));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cur(set.begin(), set.end());
    for (int a : cur)
      for (int b : cur) {
        int im = rs.reflect_root(a, b);
        if (set.insert(im).second) changed = true;
      }
  }
  return std::vector<int>(set.begin(), set.end());
}

struct ComponentInfo {
  SimpleType type;
  std::vector<int> ordered;
};

ComponentInfo identify_component(const RootSystem& rs, std::vector<int> nodes, bool two_lengths) {
  int k = (int)nodes.size();
  ComponentInfo out;
  auto pairing = [&](int a, int b) { return 2 * rs.gram[a][b] / rs.gram[b][b]; };
  auto mult = [&](int a, int b) { return pairing(a, b) * pairing(b, a); };
  auto norm = [&](int a) { return rs.gram[a][a]; };
  int maxnorm = 0, minnorm = 1 << 30;
  for (int a : nodes) {
    maxnorm = std::max(maxnorm, norm(a));
    minnorm = std::min(minnorm, norm(a));
  }
  bool all_short_in_parent = false;
  if (two_lengths) {
    int parent_max = 0;
    for (int i = 0; i < rs.rank; ++i) {
      std::vector<int> e(rs.rank, 0);
      e[i] = 1;
      parent_max = std::max(parent_max, rs.form(e, e));
    }
    all_short_in_parent = maxnorm < parent_max;
  }

  std::vector<std::vector<int>> adj(k);
  int max_mult = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (rs.gram[nodes[i]][nodes[j]] != 0) {
        adj[i].push_back(j);
        max_mult = std::max(max_mult, mult(nodes[i], nodes[j]));
      }
    }

  auto path_from = [&](int start) {
    std::vector<int> order{start};
    std::vector<char> used(k, 0);
    used[start] = 1;
    int cur = start;
    while ((int)order.size() < k) {
      bool found = false;
      for (int nb : adj[cur])
        if (!used[nb]) {
          order.push_back(nb);
          used[nb] = 1;
          cur = nb;
          found = true;
          break;
        }
      if (!found) break;
    }
    return order;
  };

  if (k == 1) {
    out.type = {'A', 1, all_short_in_parent};
    out.ordered = {nodes[0]};
    return out;
  }

  if (max_mult == 3) {
    out.type = {'G', 2, false};
    int lng = norm(nodes[0]) > norm(nodes[1]) ? 0 : 1;
    out.ordered = {nodes[lng], nodes[1 - lng]};
    return out;
  }

  if (max_mult == 2) {
    std::vector<int> ends;
    for (int i = 0; i < k; ++i)
      if (adj[i].size() == 1) ends.push_back(i);
    assert(ends.size() == 2);
    auto p0 = path_from(nodes[ends[0]] < nodes[ends[1]] ? ends[0] : ends[1]);
    int dpos = -1;
    for (int i = 0; i + 1 < k; ++i)
      if (mult(nodes[p0[i]], nodes[p0[i + 1]]) == 2) dpos = i;
    assert(dpos >= 0);
    if (k == 4 && dpos == 1 && norm(nodes[p0[0]]) != norm(nodes[p0[3]])) {
      out.type = {'F', 4, false};
      std::vector<int> order = p0;
      if (norm(nodes[order[0]]) < norm(nodes[order[3]])) std::reverse(order.begin(), order.end());
      for (int i : order) out.ordered.push_back(nodes[i]);
      return out;
    }
    std::vector<int> order = p0;
    int short_count = 0;
    for (int i = 0; i < k; ++i)
      if (norm(nodes[i]) == minnorm) ++short_count;
    char fam = (k == 2 || short_count == 1) ? 'B' : 'C';
    if (fam == 'B') {
      if (norm(nodes[order.front()]) == minnorm) std::reverse(order.begin(), order.end());
    } else {
      if (norm(nodes[order.front()]) == maxnorm) std::reverse(order.begin(), order.end());
    }
    // tilde irrelevant for mixed-length factors
    out.type = {fam, k, false};
    for (int i : order) out.ordered.push_back(nodes[i]);
    return out;
  }

  int branch = -1;
  for (int i = 0; i < k; ++i)
    if (adj[i].size() >= 3) branch = i;
  if (branch < 0) {
    out.type = {'A', k, all_short_in_parent};
    std::vector<int> ends;
    for (int i = 0; i < k; ++i)
      if (adj[i].size() <= 1) ends.push_back(i);
    int start = nodes[ends[0]] < nodes[ends[1]] ? ends[0] : ends[1];
    for (int i : path_from(start)) out.ordered.push_back(nodes[i]);
    return out;
  }
  std::vector<std::vector<int>> branches;
  for (int nb : adj[branch]) {
    std::vector<int> br{nb};
    std::vector<char> used(k, 0);
    used[branch] = 1;
    used[nb] = 1;
    int cur = nb;
    bool grow = true;
    while (grow) {
      grow = false;
      for (int x : adj[cur])
        if (!used[x]) {
          br.push_back(x);
          used[x] = 1;
          cur = x;
          grow = true;
          break;
        }
    }
    branches.push_back(br);
  }
  std::sort(branches.begin(), branches.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return nodes[a.back()] < nodes[b.back()];
  });
  assert(branches.size() == 3);
  size_t b0 = branches[0].size(), b1 = branches[1].size();
  if (b0 == 1 && b1 == 1) {
    out.type = {'D', k, all_short_in_parent};
    std::vector<int> order;
    for (auto it = branches[2].rbegin(); it != branches[2].rend(); ++it)
      order.push_back(nodes[*it]);
    order.push_back(nodes[branch]);
    int f1 = nodes[branches[0][0]], f2 = nodes[branches[1][0]];
    order.push_back(std::min(f1, f2));
    order.push_back(std::max(f1, f2));
    out.ordered = order;
    return out;
  }
  assert(b0 == 1 && b1 == 2 && k >= 6 && k <= 8);
  out.type = {'E', k, false};
  std::vector<int> order(k);
  order[1] = nodes[branches[0][0]];
  order[0] = nodes[branches[1][1]];
  order[2] = nodes[branches[1][0]];
  order[3] = nodes[branch];
  for (size_t i = 0; i < branches[2].size(); ++i) order[4 + i] = nodes[branches[2][i]];
  out.ordered = order;
  return out;
}

}  // namespace

Subsystem make_subsystem(std::shared_ptr<const RootSystem> rs, std::vector<int> simple_indices) {
  Subsystem sub;
  sub.parent = rs;
  if (simple_indices.empty()) return sub;
  sub.root_set = reflection_closure_set(*rs, simple_indices);
  std::vector<int> simples = simple_system_of(*rs, sub.root_set);

  int parent_max = 0, parent_min = 1 << 30;
  for (int i = 0; i < rs->rank; ++i) {
    std::vector<int> e(rs->rank, 0);
    e[i] = 1;
    int nn = rs->form(e, e);
    parent_max = std::max(parent_max, nn);
    parent_min = std::min(parent_min, nn);
  }
  bool two_lengths = parent_max != parent_min;

  int k = (int)simples.size();
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (int i = 0; i < k; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<int> q{i};
    comp[i] = ncomp;
    while (!q.empty()) {
      int c = q.front();
      q.pop_front();
      for (int j = 0; j < k; ++j)
        if (comp[j] < 0 && rs->gram[simples[c]][simples[j]] != 0) {
          comp[j] = ncomp;
          q.push_back(j);
        }
    }
    ++ncomp;
  }
  std::vector<ComponentInfo> infos;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < k; ++i)
      if (comp[i] == c) nodes.push_back(simples[i]);
    infos.push_back(identify_component(*rs, nodes, two_lengths));
  }
  std::sort(infos.begin(), infos.end(), [](const ComponentInfo& a, const ComponentInfo& b) {
    if (!(a.type == b.type)) return a.type < b.type;
    return a.ordered < b.ordered;
  });
  for (auto& ci : infos) {
    sub.type_decomposition.push_back(ci.type);
    sub.factor_simples.push_back(ci.ordered);
    for (int r : ci.ordered) sub.simple_indices.push_back(r);
  }
  return sub;
}

namespace {

// Root subsets are tracked by their positive halves, encoded as byte strings.
std::string encode_positive(const RootSystem& rs, const std::vector<int>& root_set) {
  std::string s;
  for (int r : root_set)
    if (r < rs.positive_count) s.push_back((char)(unsigned char)r);
  std::sort(s.begin(), s.end(),
            [](char a, char b) { return (unsigned char)a < (unsigned char)b; });
  return s;
}

std::string reflect_encoded(const RootSystem& rs, const std::string& enc, int sref) {
  std::string s;
  s.reserve(enc.size());
  for (char c : enc) {
    int im = rs.reflect_root(sref, (unsigned char)c);
    if (im >= rs.positive_count) im = rs.negate(im);
    s.push_back((char)(unsigned char)im);
  }
  std::sort(s.begin(), s.end(),
            [](char a, char b) { return (unsigned char)a < (unsigned char)b; });
  return s;
}

// Minimum of the W-orbit of a root subset; exact conjugacy normal form.
std::string canonical_set_form(const RootSystem& rs, const std::string& enc,
                               const std::vector<int>& simple_refs) {
  std::unordered_set<std::string> seen{enc};
  std::deque<std::string> q{enc};
  std::string best = enc;
  const size_t cap = 8'000'000;
  while (!q.empty()) {
    auto cur = q.front();
    q.pop_front();
    for (int sref : simple_refs) {
      auto im = reflect_encoded(rs, cur, sref);
      if (seen.insert(im).second) {
        if (im < best) best = im;
        if (seen.size() > cap) throw std::runtime_error("subsystem orbit exceeds cap");
        q.push_back(im);
      }
    }
  }
  return best;
}

std::vector<int> simple_reflection_indices(const RootSystem& rs) {
  std::vector<int> refs;
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<int> e(rs.rank, 0);
    e[i] = 1;
    refs.push_back(rs.root_index.at(e));
  }
  return refs;
}

}  // namespace

bool subsystems_conjugate(const RootSystem& rs, const std::vector<int>& a,
                          const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  auto ea = encode_positive(rs, a);
  auto eb = encode_positive(rs, b);
  if (ea == eb) return true;
  auto refs = simple_reflection_indices(rs);
  std::unordered_set<std::string> seen{ea};
  std::deque<std::string> q{ea};
  const size_t cap = 8'000'000;
  while (!q.empty()) {
    auto cur = q.front();
    q.pop_front();
    for (int sref : refs) {
      auto im = reflect_encoded(rs, cur, sref);
      if (im == eb) return true;
      if (seen.insert(im).second) {
        if (seen.size() > cap) throw std::runtime_error("subsystem orbit exceeds cap");
        q.push_back(im);
      }
    }
  }
  return false;
}

std::vector<Subsystem> pseudo_levis_impl(std::shared_ptr<const RootSystem> rs, bool keep_rank) {
  static std::map<std::string, std::vector<Subsystem>> cache;
  std::string cache_key = rs->type_label + (keep_rank ? "|fr" : "|all");
  {
    auto it = cache.find(cache_key);
    if (it != cache.end() && !it->second.empty() && it->second[0].parent == rs) return it->second;
  }
  auto refs = simple_reflection_indices(*rs);
  std::unordered_set<std::string> seen_sets;     // raw candidate sets
  std::unordered_map<std::string, int> classes;  // canonical form -> result index
  std::vector<Subsystem> result;
  std::deque<int> work;

  auto try_add = [&](const std::vector<int>& gens) -> int {
    Subsystem sub = make_subsystem(rs, gens);
    auto enc = encode_positive(*rs, sub.root_set);
    if (!seen_sets.insert(enc).second) return -1;
    auto canon = canonical_set_form(*rs, enc, refs);
    auto it = classes.find(canon);
    if (it != classes.end()) return -1;
    classes[canon] = (int)result.size();
    result.push_back(std::move(sub));
    return (int)result.size() - 1;
  };

  std::vector<int> all_simples;
  for (int i = 0; i < rs->rank; ++i) {
    std::vector<int> e(rs->rank, 0);
    e[i] = 1;
    all_simples.push_back(rs->root_index.at(e));
  }
  int top = try_add(all_simples);
  work.push_back(top);
  if (!keep_rank) {
    Subsystem empty;
    empty.parent = rs;
    classes[""] = (int)result.size();
    result.push_back(empty);
  }

  while (!work.empty()) {
    Subsystem cur = result[work.front()];
    work.pop_front();
    if (cur.rank() == 0) continue;
    std::vector<std::vector<int>> node_choices;
    const std::vector<int>& base = cur.simple_indices;
    if (!keep_rank) {
      for (size_t d = 0; d < base.size(); ++d) {
        std::vector<int> gen;
        for (size_t i = 0; i < base.size(); ++i)
          if (i != d) gen.push_back(base[i]);
        if (!gen.empty()) node_choices.push_back(gen);
      }
    }
    for (size_t f = 0; f < cur.factor_simples.size(); ++f) {
      const auto& fac = cur.factor_simples[f];
      int best_h = -1, theta = -1;
      for (int r : cur.root_set) {
        if (r >= rs->positive_count) continue;
        bool touches = false, foreign = false;
        for (int s : fac)
          if (rs->gram[r][s] != 0) touches = true;
        for (size_t g = 0; g < cur.factor_simples.size() && !foreign; ++g) {
          if (g == f) continue;
          for (int s : cur.factor_simples[g])
            if (rs->gram[r][s] != 0) foreign = true;
        }
        if (!touches || foreign) continue;
        int h = vec_height(rs->roots[r]);
        if (h > best_h) {
          best_h = h;
          theta = r;
        }
      }
      if (theta < 0) continue;
      int aff = rs->negate(theta);
      for (size_t d = 0; d < fac.size(); ++d) {
        std::vector<int> gen;
        for (size_t i = 0; i < base.size(); ++i)
          if (base[i] != fac[d]) gen.push_back(base[i]);
        gen.push_back(aff);
        node_choices.push_back(gen);
      }
    }
    for (auto& gen : node_choices) {
      int idx = try_add(gen);
      if (idx >= 0) work.push_back(idx);
    }
  }
  std::sort(result.begin(), result.end(), [](const Subsystem& a, const Subsystem& b) {
    if (a.rank() != b.rank()) return a.rank() > b.rank();
    if (a.root_set.size() != b.root_set.size()) return a.root_set.size() > b.root_set.size();
    std::string sa = a.type_str(), sb = b.type_str();
    if (sa != sb) return sa < sb;
    return a.root_set < b.root_set;
  });
  cache[cache_key] = result;
  return result;
}

std::vector<Subsystem> pseudo_levis(std::shared_ptr<const RootSystem> rs) {
  return pseudo_levis_impl(rs, false);
}

TorsionPoint TorsionPoint::identity(int rank) {
  TorsionPoint t;
  t.coords.assign(rank, Rat(0));
  t.order = 1;
  return t;
}

TorsionPoint TorsionPoint::fundamental_coweight_over(int node, i64 n, int rank) {
  TorsionPoint t;
  t.coords.assign(rank, Rat(0));
  t.coords[node] = Rat(1, n);
  t.normalize();
  return t;
}

void TorsionPoint::normalize() {
  i64 l = 1;
  for (auto& c : coords) {
    c = c.mod1();
    l = std::lcm(l, to_i64(c.den));
  }
  order = l;
}

bool TorsionPoint::operator<(const TorsionPoint& o) const {
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != o.coords[i]) return coords[i] < o.coords[i];
  return false;
}

std::string TorsionPoint::str() const {
  std::string s = "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += coords[i].str();
  }
  return s + ")";
}

Rat eval_pairing(const RootSystem& rs, int root_index, const TorsionPoint& t) {
  if (root_index < 0 || root_index >= rs.nroots())
    throw std::out_of_range("root index out of range");
  Rat v(0);
  for (int j = 0; j < rs.rank; ++j)
    if (rs.roots[root_index][j] != 0) v = v + Rat(rs.roots[root_index][j]) * t.coords[j];
  return v.mod1();
}

TorsionPoint simple_reflect_point(const RootSystem& rs, int i, const TorsionPoint& t) {
  TorsionPoint out = t;
  Rat ci = t.coords[i];
  if (ci.is_zero()) return out;
  for (int j = 0; j < rs.rank; ++j)
    if (rs.cartan[i][j] != 0) out.coords[j] = out.coords[j] - ci * Rat(rs.cartan[i][j]);
  out.normalize();
  return out;
}

std::vector<int> integrality_subsystem(const RootSystem& rs, const TorsionPoint& t) {
  std::vector<int> out;
  for (int r = 0; r < rs.nroots(); ++r)
    if (eval_pairing(rs, r, t).is_zero()) out.push_back(r);
  return out;
}

std::vector<IsolatedElement> isolated_elements(std::shared_ptr<const RootSystem> rs, i64 ell) {
  if (!rs->is_simple_type()) throw std::invalid_argument("isolated_elements: rs must be simple");
  if (ell < 2) throw std::invalid_argument("ell must be at least 2");
  std::vector<TorsionPoint> candidates{TorsionPoint::identity(rs->rank)};
  for (int node = 0; node < rs->rank; ++node) {
    int mark = rs->extended_marks[node + 1];
    for (i64 q = ell; q <= mark; q *= ell)
      if (mark % q == 0)
        candidates.push_back(TorsionPoint::fundamental_coweight_over(node, q, rs->rank));
  }
  std::vector<IsolatedElement> out;
  std::set<TorsionPoint> seen;
  for (auto& t : candidates) {
    if (seen.count(t)) continue;
    auto set = integrality_subsystem(*rs, t);
    auto simples = simple_system_of(*rs, set);
    if ((int)simples.size() != rs->rank) continue;
    std::set<TorsionPoint> orbit{t};
    std::deque<TorsionPoint> q{t};
    bool dup = false;
    while (!q.empty() && !dup) {
      auto cur = q.front();
      q.pop_front();
      for (int i = 0; i < rs->rank && !dup; ++i) {
        auto im = simple_reflect_point(*rs, i, cur);
        if (orbit.insert(im).second) {
          if (seen.count(im)) dup = true;
          q.push_back(im);
        }
      }
    }
    if (dup) continue;
    for (auto& p : orbit) seen.insert(p);
    IsolatedElement el;
    el.point = t;
    el.centralizer = make_subsystem(rs, simples);
    out.push_back(std::move(el));
  }
  std::sort(out.begin(), out.end(), [](const IsolatedElement& a, const IsolatedElement& b) {
    if (a.point.order != b.point.order) return a.point.order < b.point.order;
    return a.point < b.point;
  });
  return out;
}

}  // namespace weylcs
