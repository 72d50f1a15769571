#include "weylcs/chartab.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "weylcs/data.hpp"
#include "weylcs/parallel.hpp"

namespace weylcs {

std::string g_data_dir;

std::string data_dir() {
  if (!g_data_dir.empty()) return g_data_dir;
  if (const char* env = std::getenv("WEYLCS_DATA_DIR")) return env;
  return "data";
}

void set_data_dir(const std::string& dir) { g_data_dir = dir; }

int CharacterTable::char_index(const std::string& label) const {
  for (int i = 0; i < nchars(); ++i)
    if (chars[i].label == label) return i;
  throw std::invalid_argument("no character named " + label + " in " + name);
}

int CharacterTable::class_index(const std::string& label) const {
  for (int i = 0; i < nclasses(); ++i)
    if (classes[i].label == label) return i;
  throw std::invalid_argument("no class named " + label + " in " + name);
}

void validate_table(const CharacterTable& t) {
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("table " + t.name + ": " + why);
  };
  if (t.nchars() != t.nclasses()) fail("character and class counts differ");
  if (t.classes.empty()) fail("empty table");
  if (t.classes[0].size != 1 || t.classes[0].order != 1)
    fail("first class is not the identity");
  i128 total = 0;
  for (auto& c : t.classes) total = add_checked(total, c.size);
  if (total != t.order) fail("class sizes do not sum to group order");
  i128 degsq = 0;
  for (auto& ch : t.chars) {
    if ((int)ch.values.size() != t.nclasses()) fail("value row length mismatch");
    if (ch.values[0] <= 0) fail("nonpositive degree for " + ch.label);
    degsq = add_checked(degsq, mul_checked((i128)ch.values[0], (i128)ch.values[0]));
  }
  if (degsq != t.order) fail("sum of squared degrees does not equal group order");
  {
    std::vector<int> bad(t.nchars(), -1);
    parallel_for((size_t)t.nchars(), [&](size_t i) {
      for (int j = (int)i; j < t.nchars(); ++j) {
        i128 s = 0;
        for (int c = 0; c < t.nclasses(); ++c)
          s = add_checked(s, mul_checked(t.classes[c].size,
                                         mul_checked((i128)t.chars[i].values[c],
                                                     (i128)t.chars[j].values[c])));
        if (s != ((int)i == j ? t.order : 0)) {
          bad[i] = j;
          return;
        }
      }
    });
    for (int i = 0; i < t.nchars(); ++i)
      if (bad[i] >= 0)
        fail("row orthogonality fails for " + t.chars[i].label + ", " + t.chars[bad[i]].label);
  }
  i128 deg_order = 1;
  for (int d : t.degrees) deg_order = mul_checked(deg_order, d);
  if (deg_order != t.order) fail("degrees do not multiply to the group order");
  for (auto& c : t.classes)
    if ((int)c.det_poly.size() != t.rank + 1 || c.det_poly[0] != 1)
      fail("bad det polynomial on class " + c.label);
}

std::vector<i128> char_values(const CharacterTable& t, int chi) {
  std::vector<i128> v(t.nclasses());
  for (int c = 0; c < t.nclasses(); ++c) v[c] = t.chars[chi].values[c];
  return v;
}

Rat inner_product(const CharacterTable& t, const std::vector<i128>& f,
                  const std::vector<i128>& g) {
  if ((int)f.size() != t.nclasses() || (int)g.size() != t.nclasses())
    throw std::invalid_argument("class function length mismatch");
  i128 s = 0;
  for (int c = 0; c < t.nclasses(); ++c)
    s = add_checked(s, mul_checked(t.classes[c].size, mul_checked(f[c], g[c])));
  return Rat(s, t.order);
}

std::vector<i64> decompose(const CharacterTable& t, const std::vector<i128>& f) {
  std::vector<i64> mult(t.nchars());
  for (int i = 0; i < t.nchars(); ++i) {
    Rat m = inner_product(t, f, char_values(t, i));
    if (!m.is_integer() || m.num < 0)
      throw std::runtime_error("class function is not a character: multiplicity " + m.str() +
                               " at " + t.chars[i].label);
    mult[i] = to_i64(m.num);
  }
  return mult;
}

void validate_tensor_integrality(const CharacterTable& t) {
  int n = t.nchars();
  std::vector<std::string> errors(n);
  parallel_for((size_t)n, [&](size_t i) {
    try {
      for (int j = (int)i; j < n; ++j) {
        std::vector<i128> prod(t.nclasses());
        for (int c = 0; c < t.nclasses(); ++c)
          prod[c] = mul_checked((i128)t.chars[i].values[c], (i128)t.chars[j].values[c]);
        decompose(t, prod);
      }
    } catch (std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
}

// ---------------------------------------------------------------------------
// symmetric groups

CharacterTable symmetric_table(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("symmetric_table: n out of range");
  CharacterTable t;
  t.name = "S" + std::to_string(n);
  t.rank = n - 1;
  for (int i = 2; i <= n; ++i) t.degrees.push_back(i);
  i128 fact = 1;
  for (int i = 2; i <= n; ++i) fact = mul_checked(fact, i);
  t.order = fact;

  auto parts = partitions(n);
  // identity (1^n) first, then by decreasing |parts| (increasing cycle sizes)
  std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::shared_ptr<const RootSystem> rs;
  if (n >= 2) rs = build_root_system("A" + std::to_string(n - 1));
  for (auto& lam : parts) {
    ClassRecord c;
    c.label = partition_label(lam);
    c.size = fact / partition_zorder(lam);
    c.order = 1;
    for (int x : lam) c.order = std::lcm(c.order, (i64)x);
    c.det_poly = a_det_poly(n, lam);
    if (rs) c.rep_word = word_for(*rs, cycle_type_to_root_perm(*rs, lam));
    t.classes.push_back(std::move(c));
  }
  for (auto& lam : partitions(n)) {
    CharRecord ch;
    ch.label = partition_label(lam);
    for (auto& mu : parts) ch.values.push_back(symmetric_char_value(lam, mu));
    ch.a = partition_n_invariant(lam);
    t.chars.push_back(std::move(ch));
  }
  validate_table(t);
  compute_b_invariants(t);
  for (auto& ch : t.chars)
    if (ch.a != ch.b)
      throw std::runtime_error("type A a-invariant mismatch for " + ch.label);
  return t;
}

// ---------------------------------------------------------------------------
// hyperoctahedral groups and their index-two subgroups

namespace {

std::string bipartition_label(const Partition& a, const Partition& b) {
  return "[" + partition_label(a) + "|" + partition_label(b) + "]";
}

std::string b_class_label(const Partition& l, const Partition& m) {
  return "(" + partition_label(l) + ";" + partition_label(m) + ")";
}

SignedPerm conjugate_by_first_flip(const SignedPerm& w) {
  // t w t with t = diag(-1, 1, ..., 1)
  SignedPerm out = w;
  for (int i = 0; i < w.n(); ++i) {
    int v = w.img[i];
    if (std::abs(v) == 1) v = -v;  // post-compose flip of coordinate 1
    out.img[i] = v;
  }
  // pre-compose: flips the sign of the image of coordinate 1
  out.img[0] = -out.img[0];
  return out;
}

}  // namespace

CharacterTable classical_table(char type, int n) {
  if (type == 'C') type = 'B';
  if (type != 'B' && type != 'D') throw std::invalid_argument("classical_table wants B or D");
  if (type == 'B' && n < 2) throw std::invalid_argument("B rank too small");
  if (type == 'D' && n < 4) throw std::invalid_argument("D rank too small");
  CharacterTable t;
  t.name = std::string(1, type) + std::to_string(n);
  t.rank = n;
  if (type == 'B')
    for (int i = 1; i <= n; ++i) t.degrees.push_back(2 * i);
  else {
    for (int i = 1; i < n; ++i) t.degrees.push_back(2 * i);
    t.degrees.push_back(n);
    std::sort(t.degrees.begin(), t.degrees.end());
  }
  i128 order = 1;
  for (int d : t.degrees) order = mul_checked(order, d);
  t.order = order;

  auto rs = build_root_system(t.name);
  auto bcls = b_classes(n);
  // order deterministically: identity first, then by (order, sizes, labels)
  std::stable_sort(bcls.begin(), bcls.end(), [](const BClassData& a, const BClassData& b) {
    if ((a.order == 1) != (b.order == 1)) return a.order == 1;
    if (a.order != b.order) return a.order < b.order;
    return b_class_label(a.pos, a.neg) < b_class_label(b.pos, b.neg);
  });

  struct DClass {
    Partition pos, neg;
    int split = 0;  // 0 none, +1 / -1 the two halves
  };
  std::vector<DClass> dcls;

  if (type == 'B') {
    for (auto& c : bcls) {
      ClassRecord cr;
      cr.label = b_class_label(c.pos, c.neg);
      cr.size = c.size;
      cr.order = c.order;
      cr.det_poly = bd_det_poly(n, c.pos, c.neg);
      cr.rep_word = word_for(*rs, signed_perm_to_root_perm(*rs, c.rep));
      t.classes.push_back(std::move(cr));
    }
    for (int a = n; a >= 0; --a)
      for (auto& alpha : partitions(a))
        for (auto& beta : partitions(n - a)) {
          CharRecord ch;
          ch.label = bipartition_label(alpha, beta);
          for (auto& c : bcls) ch.values.push_back(b_char_value(alpha, beta, c.pos, c.neg));
          t.chars.push_back(std::move(ch));
        }
  } else {
    for (auto& c : bcls) {
      if (c.neg.size() % 2 != 0) continue;
      bool split = c.neg.empty() && !c.pos.empty();
      for (int x : c.pos)
        if (x % 2 != 0) split = false;
      if (!split) {
        ClassRecord cr;
        cr.label = b_class_label(c.pos, c.neg);
        cr.size = c.size;
        cr.order = c.order;
        cr.det_poly = bd_det_poly(n, c.pos, c.neg);
        cr.rep_word = word_for(*rs, signed_perm_to_root_perm(*rs, c.rep));
        t.classes.push_back(std::move(cr));
        dcls.push_back({c.pos, c.neg, 0});
      } else {
        for (int side : {+1, -1}) {
          ClassRecord cr;
          cr.label = b_class_label(c.pos, c.neg) + (side > 0 ? "+" : "-");
          cr.size = c.size / 2;
          cr.order = c.order;
          cr.det_poly = bd_det_poly(n, c.pos, c.neg);
          SignedPerm rep = side > 0 ? c.rep : conjugate_by_first_flip(c.rep);
          cr.rep_word = word_for(*rs, signed_perm_to_root_perm(*rs, rep));
          t.classes.push_back(std::move(cr));
          dcls.push_back({c.pos, c.neg, side});
        }
      }
    }
    for (int a = n; a >= 0; --a)
      for (auto& alpha : partitions(a))
        for (auto& beta : partitions(n - a)) {
          if (std::make_pair(alpha, beta) < std::make_pair(beta, alpha)) continue;
          if (alpha != beta) {
            CharRecord ch;
            ch.label = bipartition_label(alpha, beta);
            for (auto& c : dcls) ch.values.push_back(b_char_value(alpha, beta, c.pos, c.neg));
            t.chars.push_back(std::move(ch));
          } else {
            for (int side : {+1, -1}) {
              CharRecord ch;
              ch.label = bipartition_label(alpha, beta) + (side > 0 ? "+" : "-");
              for (auto& c : dcls) {
                i64 base = b_char_value(alpha, beta, c.pos, c.neg);
                if (c.split == 0) {
                  assert(base % 2 == 0);
                  ch.values.push_back(base / 2);
                } else {
                  // chi_[a,a]+- on a split class (2g;-)^e: (chi_B +- delta)/2
                  // with delta = e * 2^{l(g)} chi_a(g) on the e-labelled half.
                  Partition gamma;
                  for (int x : c.pos) gamma.push_back(x / 2);
                  i64 delta = symmetric_char_value(alpha, gamma);
                  i64 weight = 1;
                  for (size_t i = 0; i < gamma.size(); ++i) weight *= 2;
                  assert(base % 2 == 0);
                  ch.values.push_back(base / 2 + (i64)(c.split * side) * (weight / 2) * delta);
                }
              }
              t.chars.push_back(std::move(ch));
            }
          }
        }
  }
  validate_table(t);
  compute_b_invariants(t);
  return t;
}

// ---------------------------------------------------------------------------
// products

CharacterTable product_table(const CharacterTable& t1, const CharacterTable& t2) {
  CharacterTable t;
  t.name = t1.name + "+" + t2.name;
  t.order = mul_checked(t1.order, t2.order);
  t.rank = t1.rank + t2.rank;
  t.degrees = t1.degrees;
  for (int d : t2.degrees) t.degrees.push_back(d);
  std::sort(t.degrees.begin(), t.degrees.end());
  for (auto& c1 : t1.classes)
    for (auto& c2 : t2.classes) {
      ClassRecord c;
      c.label = c1.label + "," + c2.label;
      c.size = mul_checked(c1.size, c2.size);
      c.order = std::lcm(c1.order, c2.order);
      c.det_poly.assign(t.rank + 1, 0);
      for (size_t i = 0; i < c1.det_poly.size(); ++i)
        for (size_t j = 0; j < c2.det_poly.size(); ++j)
          c.det_poly[i + j] += c1.det_poly[i] * c2.det_poly[j];
      c.rep_word = c1.rep_word;
      for (int w : c2.rep_word) c.rep_word.push_back(w + t1.rank);
      t.classes.push_back(std::move(c));
    }
  for (auto& x1 : t1.chars)
    for (auto& x2 : t2.chars) {
      CharRecord ch;
      ch.label = x1.label + "," + x2.label;
      for (auto& v1 : x1.values)
        for (auto& v2 : x2.values) ch.values.push_back(v1 * v2);
      if (x1.a >= 0 && x2.a >= 0) ch.a = x1.a + x2.a;
      if (x1.b >= 0 && x2.b >= 0) ch.b = x1.b + x2.b;
      t.chars.push_back(std::move(ch));
    }
  return t;
}

// ---------------------------------------------------------------------------
// fake degrees

namespace {

std::vector<i128> series_inverse(const std::vector<i64>& p, int N) {
  assert(!p.empty() && p[0] == 1);
  std::vector<i128> inv(N + 1, 0);
  inv[0] = 1;
  for (int k = 1; k <= N; ++k) {
    i128 s = 0;
    for (size_t j = 1; j < p.size() && (int)j <= k; ++j)
      s = add_checked(s, mul_checked((i128)p[j], inv[k - j]));
    inv[k] = -s;
  }
  return inv;
}

std::vector<i128> poincare_product(const std::vector<int>& degrees) {
  std::vector<i128> p{1};
  for (int d : degrees) {
    std::vector<i128> f(d + 1, 0);
    f[0] = 1;
    f[d] = -1;
    std::vector<i128> r(p.size() + d, 0);
    for (size_t i = 0; i < p.size(); ++i) {
      r[i] = add_checked(r[i], p[i]);
      r[i + d] = add_checked(r[i + d], -p[i]);
    }
    p = std::move(r);
  }
  return p;
}

}  // namespace

FakeDegree fake_degree(const CharacterTable& t, int chi) {
  int N = t.npos();
  int NN = 0;
  for (int d : t.degrees) NN += d;
  std::vector<i128> S(NN + 1, 0);
  for (int c = 0; c < t.nclasses(); ++c) {
    auto inv = series_inverse(t.classes[c].det_poly, NN);
    i128 w = mul_checked(t.classes[c].size, (i128)t.chars[chi].values[c]);
    if (w == 0) continue;
    for (int k = 0; k <= NN; ++k) S[k] = add_checked(S[k], mul_checked(w, inv[k]));
  }
  auto P = poincare_product(t.degrees);
  std::vector<i128> R(NN + 1, 0);
  for (size_t i = 0; i < P.size(); ++i) {
    if (P[i] == 0) continue;
    for (int j = 0; i + j <= (size_t)NN; ++j)
      R[i + j] = add_checked(R[i + j], mul_checked(P[i], S[j]));
  }
  FakeDegree fd;
  fd.char_label = t.chars[chi].label;
  fd.coefficients.assign(N + 1, 0);
  for (int k = 0; k <= NN; ++k) {
    if (R[k] % t.order != 0)
      throw std::runtime_error("fake degree of " + fd.char_label + " is not a polynomial");
    i128 coeff = R[k] / t.order;
    if (k > N) {
      if (coeff != 0)
        throw std::runtime_error("fake degree of " + fd.char_label + " exceeds top degree");
    } else {
      fd.coefficients[k] = to_i64(coeff);
    }
  }
  i64 at1 = 0;
  for (i64 c : fd.coefficients) at1 += c;
  if (at1 != t.chars[chi].values[0])
    throw std::runtime_error("fake degree of " + fd.char_label + " does not evaluate to degree");
  return fd;
}

i64 b_invariant(const CharacterTable& t, int chi) {
  auto fd = fake_degree(t, chi);
  for (size_t k = 0; k < fd.coefficients.size(); ++k)
    if (fd.coefficients[k] != 0) return (i64)k;
  throw std::runtime_error("zero fake degree for " + t.chars[chi].label);
}

void compute_b_invariants(CharacterTable& t) {
  std::vector<i64> b(t.nchars());
  std::vector<std::string> errors(t.nchars());
  parallel_for((size_t)t.nchars(), [&](size_t i) {
    try {
      b[i] = b_invariant(t, (int)i);
    } catch (std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
  for (int i = 0; i < t.nchars(); ++i) t.chars[i].b = b[i];
}

std::vector<std::string> special_characters(const CharacterTable& t) {
  std::vector<std::string> out;
  for (auto& ch : t.chars) {
    if (ch.a < 0) throw std::runtime_error("missing a-invariant for " + ch.label);
    if (ch.b < 0) throw std::runtime_error("b-invariant not computed for " + ch.label);
    if (ch.a == ch.b) out.push_back(ch.label);
  }
  return out;
}

// ---------------------------------------------------------------------------
// type dispatch, file io

namespace {

std::map<std::string, CharacterTable>& table_registry() {
  static std::map<std::string, CharacterTable> reg;
  return reg;
}

CharacterTable simple_type_table(const SimpleType& st) {
  if (st.family == 'A') return symmetric_table(st.rank + 1);
  if (st.family == 'B' || st.family == 'C') return classical_table('B', st.rank);
  if (st.family == 'D') return classical_table('D', st.rank);
  std::string name = std::string(1, st.family) + std::to_string(st.rank);
  if (const CharacterTable* reg = registered_table(name)) return *reg;
  std::string key = std::string(1, (char)tolower(st.family)) + std::to_string(st.rank);
  return load_table_file(data_dir() + "/w" + key + ".ct");
}

}  // namespace

void register_table(const std::string& name, CharacterTable t) {
  table_registry()[name] = std::move(t);
}

const CharacterTable* registered_table(const std::string& name) {
  auto it = table_registry().find(name);
  return it == table_registry().end() ? nullptr : &it->second;
}

CharacterTable table_for_type(const TypeLabel& type) {
  if (type.empty()) throw std::invalid_argument("empty type");
  CharacterTable t = simple_type_table(type[0]);
  for (size_t i = 1; i < type.size(); ++i) t = product_table(t, simple_type_table(type[i]));
  if (type.size() > 1) validate_table(t);
  return t;
}

CharacterTable table_for_type(const std::string& label) {
  return table_for_type(parse_type_label(label));
}

CharacterTable load_table(std::istream& in) {
  CharacterTable t;
  std::string line;
  bool started = false, ended = false;
  int nclasses = -1;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "@table") {
      ls >> t.name;
      started = true;
    } else if (!started) {
      throw std::runtime_error("content before @table");
    } else if (tok == "order") {
      std::string v;
      ls >> v;
      t.order = i128_from_string(v);
    } else if (tok == "rank") {
      ls >> t.rank;
    } else if (tok == "degrees") {
      int d;
      while (ls >> d) t.degrees.push_back(d);
    } else if (tok == "classes") {
      ls >> nclasses;
    } else if (tok == "class") {
      ClassRecord c;
      ls >> c.label;
      std::string kv;
      while (ls >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad class field: " + kv);
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "size")
          c.size = i128_from_string(val);
        else if (key == "order")
          c.order = std::stoll(val);
        else if (key == "rep") {
          // rep=1.2.3 dot-separated (space-separated form uses trailing tokens)
          if (!val.empty()) {
            std::istringstream ws(val);
            std::string w;
            while (std::getline(ws, w, '.'))
              if (!w.empty()) c.rep_word.push_back(std::stoi(w));
          }
        } else if (key == "fp") {
          c.fp_hash = val;
        } else
          throw std::runtime_error("unknown class field: " + key);
      }
      t.classes.push_back(std::move(c));
    } else if (tok == "char") {
      CharRecord ch;
      ls >> ch.label;
      std::string kv;
      ls >> kv;
      if (kv.rfind("a=", 0) != 0) throw std::runtime_error("char line missing a=");
      ch.a = std::stoll(kv.substr(2));
      ls >> kv;
      if (kv != "values=") throw std::runtime_error("char line missing values=");
      i64 v;
      while (ls >> v) ch.values.push_back(v);
      t.chars.push_back(std::move(ch));
    } else if (tok == "@end") {
      ended = true;
      break;
    } else {
      throw std::runtime_error("unknown directive: " + tok);
    }
  }
  if (!started || !ended) throw std::runtime_error("truncated table file");
  if (nclasses >= 0 && nclasses != t.nclasses())
    throw std::runtime_error("declared class count mismatch");
  return t;
}

CharacterTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file " + path);
  CharacterTable t = load_table(in);
  // det polynomials recomputed from representative words
  auto rs = build_root_system(t.name);
  for (auto& c : t.classes) {
    Perm p = perm_from_word(*rs, c.rep_word);
    if (!c.fp_hash.empty() && c.fp_hash != class_fingerprint_hash(*rs, p))
      throw std::runtime_error("stored fingerprint mismatch at class " + c.label);
    auto cp = charpoly(reflection_matrix(*rs, p));
    // det(1 - q w) = q^n charpoly(1/q) * (-1)^n ... compute directly instead
    c.det_poly.assign(t.rank + 1, 0);
    // det(1 - qA) coefficients: elementary symmetric functions with signs
    // charpoly(x) = det(xI - A) = sum c_k x^k; det(I - qA) = q^n det((1/q) I - A)
    for (int k = 0; k <= t.rank; ++k) c.det_poly[t.rank - k] = to_i64(cp[k]);
    if (c.det_poly[0] != 1) {
      // normalize sign: det(I - qA) has constant 1
      for (auto& x : c.det_poly) x = -x;
    }
    if (c.det_poly[0] != 1) throw std::runtime_error("class rep det normalization failed");
    if (perm_order(p) != c.order)
      throw std::runtime_error("stored class order mismatch at " + c.label);
  }
  validate_table(t);
  compute_b_invariants(t);
  return t;
}

void save_table(const CharacterTable& t, std::ostream& out, const std::string& provenance) {
  if (!provenance.empty()) out << "# " << provenance << "\n";
  out << "@table " << t.name << "\n";
  out << "order " << i128_to_string(t.order) << "\n";
  out << "rank " << t.rank << "\n";
  out << "degrees";
  for (int d : t.degrees) out << " " << d;
  out << "\n";
  out << "classes " << t.nclasses() << "\n";
  std::shared_ptr<const RootSystem> rs;
  try {
    rs = build_root_system(t.name);
  } catch (...) {
  }
  for (auto& c : t.classes) {
    out << "class " << c.label << " size=" << i128_to_string(c.size) << " order=" << c.order
        << " rep=";
    for (size_t i = 0; i < c.rep_word.size(); ++i) out << (i ? "." : "") << c.rep_word[i];
    if (rs) out << " fp=" << class_fingerprint_hash(*rs, perm_from_word(*rs, c.rep_word));
    out << "\n";
  }
  for (auto& ch : t.chars) {
    out << "char " << ch.label << " a=" << ch.a << " values=";
    for (size_t i = 0; i < ch.values.size(); ++i) out << (i ? " " : " ") << ch.values[i];
    out << "\n";
  }
  out << "@end\n";
}

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string class_fingerprint_hash(const RootSystem& rs, const Perm& p) {
  return std::to_string(fnv1a(fingerprint(rs, p).str()));
}

void validate_fusion(const ClassFusion& f) {
  // pullback of every parent irreducible must be a genuine sub character
  for (int i = 0; i < f.parent->nchars(); ++i)
    decompose(*f.sub, restrict_char(f, char_values(*f.parent, i)));
}

// ---------------------------------------------------------------------------
// realization and fusion

Perm RealizedTable::eval_word(const std::vector<int>& word) const {
  Perm p(ambient->nroots());
  for (int i : word) p = pmul(p, simple_reflections.at(i));
  return p;
}

RealizedTable realize_table(CharacterTable t, const Subsystem& sub) {
  RealizedTable r;
  r.ambient = sub.parent;
  for (int s : sub.simple_indices) r.simple_reflections.push_back(reflection(*sub.parent, s));
  std::vector<Perm> gens = r.simple_reflections;
  if (gens.empty()) gens.push_back(Perm(sub.parent->nroots()));
  r.group = make_group(sub.parent, gens, t.order);
  for (auto& c : t.classes) {
    Perm p(sub.parent->nroots());
    for (int i : c.rep_word) p = pmul(p, r.simple_reflections.at(i));
    r.class_reps.push_back(std::move(p));
  }
  r.table = std::move(t);
  return r;
}

ClassFusion fusion(const RealizedTable& sub, const RealizedTable& parent) {
  ClassFusion f;
  f.sub = &sub.table;
  f.parent = &parent.table;
  std::unordered_map<std::string, std::vector<int>> by_fp;
  for (int i = 0; i < parent.table.nclasses(); ++i)
    by_fp[fingerprint(*parent.ambient, parent.class_reps[i]).str()].push_back(i);
  for (int i = 0; i < sub.table.nclasses(); ++i) {
    const Perm& rep = sub.class_reps[i];
    auto it = by_fp.find(fingerprint(*parent.ambient, rep).str());
    if (it == by_fp.end())
      throw std::runtime_error("fusion: class " + sub.table.classes[i].label +
                               " matches no parent fingerprint");
    int target = -1;
    if (it->second.size() == 1) {
      target = it->second[0];
    } else {
      for (int cand : it->second)
        if (are_conjugate(parent.group, rep, parent.class_reps[cand])) {
          target = cand;
          break;
        }
      if (target < 0)
        throw std::runtime_error("fusion: class " + sub.table.classes[i].label +
                                 " unresolved among fingerprint collisions");
    }
    if (sub.table.classes[i].order != parent.table.classes[target].order)
      throw std::runtime_error("fusion: element order not preserved");
    f.map.push_back(target);
  }
  return f;
}

ClassFusion identity_fusion(const CharacterTable& t) {
  ClassFusion f;
  f.sub = &t;
  f.parent = &t;
  for (int i = 0; i < t.nclasses(); ++i) f.map.push_back(i);
  return f;
}

std::vector<i128> induce(const ClassFusion& fus, const std::vector<i128>& chi_sub) {
  const CharacterTable& S = *fus.sub;
  const CharacterTable& P = *fus.parent;
  if ((int)chi_sub.size() != S.nclasses()) throw std::invalid_argument("induce: length mismatch");
  std::vector<i128> out(P.nclasses(), 0);
  for (int c = 0; c < S.nclasses(); ++c) {
    int pc = fus.map[c];
    out[pc] = add_checked(out[pc], mul_checked(S.classes[c].size, chi_sub[c]));
  }
  // Ind chi(y) = (|P| / (|S| |class_P(y)|)) * sum_{c -> y} |class_S(c)| chi(c)
  for (int pc = 0; pc < P.nclasses(); ++pc) {
    if (out[pc] == 0) continue;
    i128 top = mul_checked(out[pc], P.order);
    i128 bot = mul_checked(S.order, P.classes[pc].size);
    if (top % bot != 0) throw std::runtime_error("induced character is not integral");
    out[pc] = top / bot;
  }
  return out;
}

std::vector<i128> restrict_char(const ClassFusion& fus, const std::vector<i128>& chi_parent) {
  const CharacterTable& S = *fus.sub;
  std::vector<i128> out(S.nclasses());
  for (int c = 0; c < S.nclasses(); ++c) out[c] = chi_parent[fus.map[c]];
  return out;
}

int j_induction(const CharacterTable& parent, const ClassFusion& fus, int chi_sub) {
  const CharacterTable& S = *fus.sub;
  i64 b_target = S.chars[chi_sub].b;
  if (b_target < 0) throw std::runtime_error("j_induction: sub b-invariant not computed");
  auto ind = induce(fus, char_values(S, chi_sub));
  int found = -1;
  for (int i = 0; i < parent.nchars(); ++i) {
    if (parent.chars[i].b != b_target) continue;
    Rat m = inner_product(parent, ind, char_values(parent, i));
    if (!m.is_integer() || m.num < 0) throw std::runtime_error("j_induction: bad multiplicity");
    if (m.num == 0) continue;
    if (m.num != 1)
      throw std::runtime_error("j_induction: b-matching constituent has multiplicity " +
                               m.str() + " (inconsistent data)");
    if (found >= 0)
      throw std::runtime_error("j_induction: multiple b-matching constituents");
    found = i;
  }
  if (found < 0) throw std::runtime_error("j_induction: no constituent with matching b");
  return found;
}

}  // namespace weylcs
