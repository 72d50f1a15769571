#include "weylcs/classical.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace weylcs {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_label(const Partition& p) {
  if (p.empty()) return "-";
  bool small = true;
  for (int x : p)
    if (x > 9) small = false;
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (!small && i) s += ".";
    s += std::to_string(p[i]);
  }
  return s;
}

Partition parse_partition(const std::string& s, int expected_sum) {
  Partition p;
  if (s != "-" && !s.empty()) {
    if (s.find('.') != std::string::npos) {
      std::string tok;
      for (char c : s + ".") {
        if (c == '.') {
          if (!tok.empty()) p.push_back(std::stoi(tok));
          tok.clear();
        } else
          tok += c;
      }
    } else {
      for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad partition: " + s);
        p.push_back(c - '0');
      }
    }
  }
  std::sort(p.rbegin(), p.rend());
  if (expected_sum >= 0) {
    int sum = 0;
    for (int x : p) sum += x;
    if (sum != expected_sum) throw std::invalid_argument("partition of wrong size: " + s);
  }
  return p;
}

i128 partition_zorder(const Partition& p) {
  std::map<int, int> mult;
  for (int x : p) mult[x]++;
  i128 z = 1;
  for (auto& [part, m] : mult) {
    for (int i = 0; i < m; ++i) z = mul_checked(z, part);
    for (int i = 2; i <= m; ++i) z = mul_checked(z, i);
  }
  return z;
}

int partition_n_invariant(const Partition& p) {
  int s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += (int)i * p[i];
  return s;
}

Partition conjugate_partition(const Partition& p) {
  Partition c;
  for (int i = 1; !p.empty() && i <= p[0]; ++i) {
    int cnt = 0;
    for (int x : p)
      if (x >= i) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

namespace {

// Hooks of size k: positions where a border strip of length k can be removed.
struct StripRemoval {
  Partition rest;
  int height;
};

std::vector<StripRemoval> remove_strips(const Partition& lambda, int k) {
  std::vector<StripRemoval> out;
  // beta-set method: first-column hook lengths
  int r = (int)lambda.size();
  std::vector<int> beta;
  for (int i = 0; i < r; ++i) beta.push_back(lambda[i] + (r - 1 - i));
  // removing a k-strip = beta_i -> beta_i - k staying distinct and nonneg
  for (int i = 0; i < r; ++i) {
    int nb = beta[i] - k;
    if (nb < 0) continue;
    bool clash = false;
    for (int j = 0; j < r; ++j)
      if (j != i && beta[j] == nb) clash = true;
    if (clash) continue;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    // height = number of beta entries jumped over
    int crossings = 0;
    for (int j = 0; j < r; ++j)
      if (j != i && beta[j] < beta[i] && beta[j] > nb) ++crossings;
    Partition rest;
    int rr = (int)nbeta.size();
    for (int j = 0; j < rr; ++j) {
      int part = nbeta[j] - (rr - 1 - j);
      if (part > 0) rest.push_back(part);
    }
    out.push_back({rest, crossings});
  }
  return out;
}

}  // namespace

i64 symmetric_char_value(const Partition& lambda, const Partition& mu) {
  if (mu.empty() && lambda.empty()) return 1;
  if (mu.empty() || lambda.empty()) return 0;
  static std::map<std::pair<Partition, Partition>, i64> memo;
  auto key = std::make_pair(lambda, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Partition rest_mu(mu.begin() + 1, mu.end());
  i64 total = 0;
  for (auto& sr : remove_strips(lambda, mu[0]))
    total += (sr.height % 2 ? -1 : 1) * symmetric_char_value(sr.rest, rest_mu);
  memo[key] = total;
  return total;
}

std::vector<BClassData> b_classes(int n) {
  std::vector<BClassData> out;
  for (int a = n; a >= 0; --a) {
    for (auto& lam : partitions(a)) {
      for (auto& mu : partitions(n - a)) {
        BClassData c;
        c.pos = lam;
        c.neg = mu;
        // centralizer order: prod over cycle lengths
        std::map<int, int> mp, mn;
        for (int x : lam) mp[x]++;
        for (int x : mu) mn[x]++;
        i128 cent = 1;
        for (auto& [len, m] : mp) {
          for (int i = 0; i < m; ++i) cent = mul_checked(cent, 2 * len);
          for (int i = 2; i <= m; ++i) cent = mul_checked(cent, i);
        }
        for (auto& [len, m] : mn) {
          for (int i = 0; i < m; ++i) cent = mul_checked(cent, 2 * len);
          for (int i = 2; i <= m; ++i) cent = mul_checked(cent, i);
        }
        i128 group = 1;
        for (int i = 1; i <= n; ++i) group = mul_checked(group, 2 * i);
        c.size = group / cent;
        i64 ord = 1;
        for (int x : lam) ord = std::lcm(ord, (i64)x);
        for (int x : mu) ord = std::lcm(ord, (i64)(2 * x));
        c.order = ord;
        // representative: consecutive cycles, negative cycles flip last entry
        c.rep.img.resize(n);
        int pos = 0;
        for (int x : lam) {
          for (int i = 0; i < x; ++i) c.rep.img[pos + i] = pos + (i + 1) % x + 1;
          pos += x;
        }
        for (int x : mu) {
          for (int i = 0; i < x; ++i) c.rep.img[pos + i] = pos + (i + 1) % x + 1;
          c.rep.img[pos + x - 1] = -c.rep.img[pos + x - 1];
          pos += x;
        }
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

i64 b_char_value(const Partition& alpha, const Partition& beta, const Partition& lambda,
                 const Partition& mu) {
  // iterated Murnaghan–Nakayama over the wreath product Z2 wr S_n
  static std::map<std::vector<Partition>, i64> memo;
  if (lambda.empty() && mu.empty()) return (alpha.empty() && beta.empty()) ? 1 : 0;
  std::vector<Partition> key{alpha, beta, lambda, mu};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  i64 total = 0;
  if (!lambda.empty()) {
    int k = lambda[0];
    Partition rest(lambda.begin() + 1, lambda.end());
    for (auto& sr : remove_strips(alpha, k))
      total += (sr.height % 2 ? -1 : 1) * b_char_value(sr.rest, beta, rest, mu);
    for (auto& sr : remove_strips(beta, k))
      total += (sr.height % 2 ? -1 : 1) * b_char_value(alpha, sr.rest, rest, mu);
  } else {
    int k = mu[0];
    Partition rest(mu.begin() + 1, mu.end());
    for (auto& sr : remove_strips(alpha, k))
      total += (sr.height % 2 ? -1 : 1) * b_char_value(sr.rest, beta, lambda, rest);
    for (auto& sr : remove_strips(beta, k))
      total -= (sr.height % 2 ? -1 : 1) * b_char_value(alpha, sr.rest, lambda, rest);
  }
  memo[key] = total;
  return total;
}

static std::vector<i64> poly_mul(const std::vector<i64>& a, const std::vector<i64>& b) {
  std::vector<i64> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<i64> bd_det_poly(int n, const Partition& lambda, const Partition& mu) {
  std::vector<i64> det{1};
  for (int x : lambda) {
    std::vector<i64> f(x + 1, 0);
    f[0] = 1;
    f[x] = -1;  // 1 - q^x
    det = poly_mul(det, f);
  }
  for (int x : mu) {
    std::vector<i64> f(x + 1, 0);
    f[0] = 1;
    f[x] = 1;  // 1 + q^x
    det = poly_mul(det, f);
  }
  det.resize(n + 1, 0);
  return det;
}

std::vector<i64> a_det_poly(int n, const Partition& lambda) {
  // reflection representation of S_n: permutation module minus trivial
  std::vector<i64> det{1};
  for (int x : lambda) {
    std::vector<i64> f(x + 1, 0);
    f[0] = 1;
    f[x] = -1;
    det = poly_mul(det, f);
  }
  // divide by (1 - q)
  std::vector<i64> q(det.size() - 1, 0);
  i64 carry = 0;
  for (size_t i = 0; i + 1 < det.size(); ++i) {
    q[i] = det[i] + carry;
    carry = q[i];
  }
  q.resize(n, 0);
  return q;
}

Perm signed_perm_to_root_perm(const RootSystem& rs, const SignedPerm& sp) {
  int n = sp.n();
  if (rs.rank != n) throw std::invalid_argument("signed perm rank mismatch");
  // e-coordinates of the simple roots per family
  char fam = rs.type[0].family;
  if (!rs.is_simple_type() || (fam != 'B' && fam != 'C' && fam != 'D'))
    throw std::invalid_argument("signed_perm_to_root_perm: need simple B/C/D system");
  // alpha_i = e_i - e_{i+1} (i<n); B: alpha_n = e_n; C: alpha_n = 2 e_n; D: alpha_n = e_{n-1}+e_n
  auto to_e = [&](const std::vector<int>& simple_coords) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < n; ++i) {
      int c = simple_coords[i];
      if (c == 0) continue;
      if (i < n - 1) {
        e[i] += c;
        e[i + 1] -= c;
      } else {
        if (fam == 'B') e[n - 1] += c;
        if (fam == 'C') e[n - 1] += 2 * c;
        if (fam == 'D') {
          e[n - 2] += c;
          e[n - 1] += c;
        }
      }
    }
    return e;
  };
  std::map<std::vector<int>, int> e_index;
  for (int r = 0; r < rs.nroots(); ++r) e_index[to_e(rs.roots[r])] = r;
  Perm p(rs.nroots());
  for (int r = 0; r < rs.nroots(); ++r) {
    auto e = to_e(rs.roots[r]);
    std::vector<int> im(n, 0);
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      int t = sp.img[i];
      int j = std::abs(t) - 1;
      im[j] += (t > 0 ? 1 : -1) * e[i];
    }
    auto it = e_index.find(im);
    if (it == e_index.end()) throw std::runtime_error("signed perm image not a root");
    p.img[r] = (uint16_t)it->second;
  }
  return p;
}

Perm cycle_type_to_root_perm(const RootSystem& rs, const Partition& lambda) {
  int n = rs.rank + 1;
  int sum = 0;
  for (int x : lambda) sum += x;
  if (sum != n) throw std::invalid_argument("cycle type size mismatch");
  // plain permutation of e_1..e_n; roots e_i - e_j encoded in simple coords
  std::vector<int> img(n);
  int pos = 0;
  for (int x : lambda) {
    for (int i = 0; i < x; ++i) img[pos + i] = pos + (i + 1) % x;
    pos += x;
  }
  auto to_e = [&](const std::vector<int>& simple_coords) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < n - 1; ++i) {
      int c = simple_coords[i];
      if (c == 0) continue;
      e[i] += c;
      e[i + 1] -= c;
    }
    return e;
  };
  std::map<std::vector<int>, int> e_index;
  for (int r = 0; r < rs.nroots(); ++r) e_index[to_e(rs.roots[r])] = r;
  Perm p(rs.nroots());
  for (int r = 0; r < rs.nroots(); ++r) {
    auto e = to_e(rs.roots[r]);
    std::vector<int> im(n, 0);
    for (int i = 0; i < n; ++i) im[img[i]] += e[i];
    p.img[r] = (uint16_t)e_index.at(im);
  }
  return p;
}

}  // namespace weylcs
