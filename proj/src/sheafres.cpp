#include "weylcs/sheafres.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>

#include "weylcs/data.hpp"
#include "weylcs/parallel.hpp"

namespace weylcs {

namespace {

struct AmbientCtx {
  std::shared_ptr<const RootSystem> rs;
  GroupCtx W;
  CharacterTable table;
  RealizedTable realized;
  SpringerTable springer;
};

AmbientCtx& ambient_ctx(std::shared_ptr<const RootSystem> rs) {
  static std::map<std::string, std::shared_ptr<AmbientCtx>> cache;
  auto it = cache.find(rs->type_label);
  if (it != cache.end()) return *it->second;
  auto ctx = std::make_shared<AmbientCtx>();
  ctx->rs = rs;
  ctx->W = weyl_group(rs);
  ctx->table = table_for_type(rs->type);
  Subsystem whole = make_subsystem(
      rs, std::vector<int>(rs->simple_refs.begin(), rs->simple_refs.end()));
  ctx->realized = realize_table(ctx->table, whole);
  ctx->springer = springer_for_type(rs->type);
  cache[rs->type_label] = ctx;
  return *cache[rs->type_label];
}

std::vector<Perm> enumerate_group(const GroupCtx& G, size_t cap = 2000000) {
  std::set<Perm> seen;
  std::deque<Perm> work{Perm(G.degree())};
  seen.insert(work.front());
  while (!work.empty()) {
    Perm w = work.front();
    work.pop_front();
    for (auto& lvl : G.chain)
      for (auto& g : lvl.gens) {
        Perm c = pmul(w, g);
        if (seen.insert(c).second) {
          if (seen.size() > cap) throw std::runtime_error("group enumeration exceeds cap");
          work.push_back(c);
        }
      }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

struct LocalClasses {
  std::vector<Perm> reps;
  std::vector<i64> sizes;
  std::vector<int> of_element;  // aligned with the element list
};

// conjugacy classes of a small fully-enumerated group
LocalClasses conj_classes(const GroupCtx& G, const std::vector<Perm>& elements) {
  std::map<Perm, int> index;
  for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = (int)i;
  std::vector<Perm> gens;
  for (auto& lvl : G.chain)
    for (auto& g : lvl.gens) gens.push_back(g);
  LocalClasses out;
  out.of_element.assign(elements.size(), -1);
  for (size_t i = 0; i < elements.size(); ++i) {
    if (out.of_element[i] >= 0) continue;
    int cls = (int)out.reps.size();
    std::deque<int> q{(int)i};
    out.of_element[i] = cls;
    i64 size = 0;
    while (!q.empty()) {
      int cur = q.front();
      q.pop_front();
      ++size;
      for (auto& g : gens) {
        Perm c = pmul(pmul(g, elements[cur]), pinv(g));
        int j = index.at(c);
        if (out.of_element[j] < 0) {
          out.of_element[j] = cls;
          q.push_back(j);
        }
      }
    }
    out.reps.push_back(elements[i]);
    out.sizes.push_back(size);
  }
  return out;
}

// identify the class of p inside a realized table's group
int identify_class(const RealizedTable& rt, const Perm& p,
                   std::map<std::string, std::vector<int>>& fp_cache) {
  if (fp_cache.empty())
    for (int i = 0; i < rt.table.nclasses(); ++i)
      fp_cache[fingerprint(*rt.ambient, rt.class_reps[i]).str()].push_back(i);
  auto it = fp_cache.find(fingerprint(*rt.ambient, p).str());
  if (it == fp_cache.end()) throw std::runtime_error("class identification failed (fingerprint)");
  if (it->second.size() == 1) return it->second[0];
  for (int cand : it->second)
    if (are_conjugate(rt.group, p, rt.class_reps[cand])) return cand;
  throw std::runtime_error("class identification failed (conjugacy)");
}

}  // namespace

KummerShadow weyl_stabilizer(std::shared_ptr<const RootSystem> rs, const TorsionPoint& t) {
  auto& ctx = ambient_ctx(rs);
  KummerShadow ks;
  ks.point = t;
  ks.point.normalize();
  auto set = integrality_subsystem(*rs, ks.point);
  ks.integrality = make_subsystem(rs, simple_system_of(*rs, set));
  ks.w_L = stabilizer_of(ctx.W,
                         [&](const Perm& w) { return apply_perm_point(*rs, w, ks.point).str(); });
  auto [s0, comp] = reflection_closure(ctx.W, ks.w_L);
  ks.w_L0 = std::move(s0);
  ks.component = comp.label;
  return ks;
}

i64 center_component_order(const Subsystem& sub) {
  // Smith normal form of the simple-root matrix: the product of elementary
  // divisors is the index of the root lattice in its saturation.
  int k = sub.rank();
  int n = sub.parent->rank;
  if (k == 0) return 1;
  std::vector<std::vector<i64>> m(k, std::vector<i64>(n));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = sub.parent->roots[sub.simple_indices[i]][j];
  i64 det_product = 1;
  int row = 0;
  for (int col = 0; col < n && row < k; ++col) {
    int piv = -1;
    for (int r = row; r < k; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    bool again = true;
    while (again) {
      again = false;
      for (int r = row + 1; r < k; ++r) {
        while (m[r][col] != 0) {
          i64 q = m[row][col] / m[r][col];
          for (int c = 0; c < n; ++c) m[row][c] -= q * m[r][c];
          std::swap(m[row], m[r]);
        }
      }
    }
    det_product *= std::abs(m[row][col]);
    // clear the column upward is unnecessary for the product of pivots over
    // a row-echelon form obtained by unimodular operations
    ++row;
  }
  return det_product == 0 ? 1 : std::abs(det_product);
}

ChiKind chi_character(const GroupCtx& intersection, const GroupCtx& intersection0,
                      const std::string& component, const Subsystem& h_w) {
  (void)intersection;
  (void)intersection0;
  if (component == "1") return ChiKind::Trivial;
  if (component == "C2") {
    if (center_component_order(h_w) % 2 == 0) return ChiKind::SignOnComponent;
    throw std::runtime_error("undetermined chi: C2 component without matching center");
  }
  throw std::runtime_error("undetermined chi: component " + component);
}

RestrictionReport restriction_multiplicities(std::shared_ptr<const RootSystem> rs,
                                             const std::string& e_label, const KummerShadow& L,
                                             const TorsionPoint& s,
                                             const RestrictionOptions& opts) {
  auto& ctx = ambient_ctx(rs);
  RestrictionReport report;
  report.ambient_type = rs->type_label;
  report.e_label = e_label;
  report.s_point = s;
  report.sign_twist = opts.sign_twist;

  // H = centralizer subsystem of s
  auto h_set = integrality_subsystem(*rs, s);
  Subsystem H = make_subsystem(rs, simple_system_of(*rs, h_set));
  report.h_type = H.type_str();
  report.shift_d = (int)(H.root_set.size() + rs->rank) - rs->rank;  // dim H - dim T

  CharacterTable h_table = table_for_type(H.type_decomposition);
  RealizedTable h_realized = realize_table(h_table, H);
  CharacterTable l_table = table_for_type(L.integrality.type_decomposition);
  RealizedTable l_realized = realize_table(l_table, L.integrality);
  if (l_realized.group.order != L.w_L.order)
    throw std::runtime_error(
        "restriction_multiplicities: W_L is not reflection-generated; labels undefined");
  int e_index = l_table.char_index(e_label);

  // double cosets W^H \ W / W_L via W_L-orbits on the H-coset space
  CosetSpace cosets = coset_space(ctx.W, h_realized.group);
  std::vector<int> orbit_of(cosets.reps.size(), -1);
  std::vector<int> orbit_rep;
  for (size_t start = 0; start < cosets.reps.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    int id = (int)orbit_rep.size();
    orbit_rep.push_back((int)start);
    std::deque<int> q{(int)start};
    orbit_of[start] = id;
    while (!q.empty()) {
      int cur = q.front();
      q.pop_front();
      for (auto& g : L.w_L.generators) {
        int ni = cosets.index_of(pmul(cosets.reps[cur], g));
        if (orbit_of[ni] < 0) {
          orbit_of[ni] = id;
          q.push_back(ni);
        }
      }
    }
  }

  std::map<std::string, std::vector<int>> h_fp_cache, l_fp_cache;

  for (int dc = 0; dc < (int)orbit_rep.size(); ++dc) {
    CosetContribution contrib;
    const Perm w = cosets.reps[orbit_rep[dc]];
    contrib.rep_word = word_for(*rs, w);
    // I = W_L cap w^-1 W^H w = stabilizer in W_L of the coset H w
    int base_label = orbit_rep[dc];
    // v . (Hw) := H w v^-1 is a left action; its stabilizer is W_L cap w^-1 W^H w
    GroupCtx I = stabilizer_of(L.w_L, [&](const Perm& v) {
      return std::to_string(cosets.index_of(pmul(w, pinv(v))));
    });
    (void)base_label;
    contrib.intersection_order = I.order;
    auto [I0, comp] = reflection_closure(ctx.W, I);
    contrib.component = comp.label;
    // reflection part as a subsystem type
    {
      std::vector<int> refl_roots;
      for (int r = 0; r < rs->positive_count; ++r)
        if (I.contains(reflection(*rs, r))) refl_roots.push_back(r);
      if (refl_roots.empty())
        contrib.intersection_type = "0";
      else {
        std::vector<int> full = refl_roots;
        for (int r : refl_roots) full.push_back(rs->negate(r));
        std::sort(full.begin(), full.end());
        contrib.intersection_type =
            make_subsystem(rs, simple_system_of(*rs, full)).type_str();
      }
    }
    // H^w for the chi determination: w^-1 H w
    Subsystem Hw;
    {
      Perm wi = pinv(w);
      std::vector<int> img;
      for (int r : H.root_set) img.push_back(wi.img[r]);
      std::sort(img.begin(), img.end());
      Hw = make_subsystem(rs, simple_system_of(*rs, img));
    }
    contrib.chi = opts.sign_twist ? chi_character(I, I0, comp.label, Hw) : ChiKind::Trivial;

    // enumerate I and its classes
    auto elements = enumerate_group(I);
    if ((i128)elements.size() != I.order)
      throw std::runtime_error("intersection enumeration mismatch");
    auto classes = conj_classes(I, elements);

    // per class: E(chi)-value (via W_L) and the W^H-class of w x w^-1
    int ncl = (int)classes.reps.size();
    std::vector<i64> e_vals(ncl);
    std::vector<int> h_class(ncl);
    std::vector<char> in_refl(ncl);
    for (int c = 0; c < ncl; ++c) {
      const Perm& x = classes.reps[c];
      int lc = identify_class(l_realized, x, l_fp_cache);
      e_vals[c] = l_table.chars[e_index].values[lc];
      if (contrib.chi == ChiKind::SignOnComponent && !I0.contains(x)) e_vals[c] = -e_vals[c];
      Perm y = pmul(pmul(w, x), pinv(w));
      h_class[c] = identify_class(h_realized, y, h_fp_cache);
      in_refl[c] = I0.contains(x);
    }
    for (int ep = 0; ep < h_table.nchars(); ++ep) {
      i128 num = 0;
      for (int c = 0; c < ncl; ++c)
        num = add_checked(num, mul_checked((i128)classes.sizes[c],
                                           mul_checked((i128)e_vals[c],
                                                       (i128)h_table.chars[ep].values[h_class[c]])));
      if (num % I.order != 0)
        throw std::runtime_error("restriction multiplicity is not integral");
      i128 m = num / I.order;
      if (m < 0) throw std::runtime_error("negative restriction multiplicity");
      if (m != 0) contrib.multiplicities[h_table.chars[ep].label] = to_i64(m);
    }
    report.per_coset.push_back(std::move(contrib));
  }

  report.mackey_applicable = true;
  for (auto& c : report.per_coset)
    if (c.chi != ChiKind::Trivial) report.mackey_applicable = false;
  if (report.mackey_applicable && opts.mackey_check) {
    // <Ind E, Ind E'>_W must equal the sum of the per-coset multiplicities
    ClassFusion fus_l = fusion(l_realized, ctx.realized);
    ClassFusion fus_h = fusion(h_realized, ctx.realized);
    auto ind_e = induce(fus_l, char_values(l_table, e_index));
    for (int ep = 0; ep < h_table.nchars(); ++ep) {
      auto ind_ep = induce(fus_h, char_values(h_table, ep));
      Rat lhs = inner_product(ctx.table, ind_e, ind_ep);
      i64 rhs = 0;
      for (auto& c : report.per_coset) {
        auto it = c.multiplicities.find(h_table.chars[ep].label);
        if (it != c.multiplicities.end()) rhs += it->second;
      }
      if (lhs != Rat(rhs))
        throw std::runtime_error("Mackey cross-check failed at " + h_table.chars[ep].label +
                                 ": " + lhs.str() + " vs " + std::to_string(rhs));
    }
    report.mackey_checked = true;
  }
  return report;
}

std::string restrict_to_mixed_class(const RestrictionReport& report,
                                    const std::string& h_class_name) {
  SpringerTable h_spr = springer_for_type(report.h_type);
  auto ep = h_spr.springer_char(h_class_name, "1");
  if (!ep)
    throw std::runtime_error("no Springer character for (" + h_class_name + ", triv) in " +
                             report.h_type);
  i64 total = 0;
  for (auto& c : report.per_coset) {
    auto it = c.multiplicities.find(*ep);
    if (it != c.multiplicities.end()) total += it->second;
  }
  return total == 0 ? "zero" : "nonzero:1";
}

std::string translate_label(const CharacterTable& t, const std::string& e_label,
                            const std::vector<i64>& linear_values) {
  int e = t.char_index(e_label);
  std::vector<i64> prod(t.nclasses());
  for (int c = 0; c < t.nclasses(); ++c) prod[c] = t.chars[e].values[c] * linear_values[c];
  for (auto& ch : t.chars)
    if (ch.values == prod) return ch.label;
  throw std::runtime_error("translate_label: product is not irreducible");
}

TorsionPoint isolated_point_with_centralizer(std::shared_ptr<const RootSystem> rs, i64 ell,
                                             const std::string& centralizer_type) {
  for (auto& el : isolated_elements(rs, ell))
    if (el.centralizer.type_str() == centralizer_type) return el.point;
  throw std::invalid_argument("no isolated " + std::to_string(ell) +
                              "-element with centralizer " + centralizer_type);
}

namespace {

void check(CaseReport& cr, bool ok, const std::string& what) {
  cr.checks.push_back((ok ? "ok: " : "FAIL: ") + what);
  if (!ok) cr.pass = false;
}

// the restriction of A_E to the ambient class itself: coefficients
// <E, Res_{W_L} chi_{(C,phi)}> per Springer pair of C
std::map<std::string, i64> class_coefficients(std::shared_ptr<const RootSystem> rs,
                                              const KummerShadow& L, const std::string& e_label,
                                              const std::string& class_name) {
  auto& ctx = ambient_ctx(rs);
  CharacterTable l_table = table_for_type(L.integrality.type_decomposition);
  RealizedTable l_realized = realize_table(l_table, L.integrality);
  ClassFusion fus = fusion(l_realized, ctx.realized);
  int e = l_table.char_index(e_label);
  std::map<std::string, i64> out;
  for (auto& pair : ctx.springer.pairs) {
    if (pair.class_name != class_name) continue;
    auto res = restrict_char(fus, char_values(ctx.table, ctx.table.char_index(pair.char_label)));
    Rat m = inner_product(l_table, char_values(l_table, e), res);
    if (!m.is_integer()) throw std::runtime_error("non-integral class coefficient");
    out[pair.local_system] = to_i64(m.num);
  }
  return out;
}

}  // namespace

CaseReport verify_case(const std::string& case_id, bool sign_twist) {
  CaseReport cr;
  cr.case_id = case_id;
  cr.pass = true;
  auto rs = build_root_system("E8");
  if (case_id == "E6a3A1_ell3") {
    TorsionPoint t = isolated_point_with_centralizer(rs, 3, "E6+A2");
    KummerShadow L = weyl_stabilizer(rs, t);
    check(cr, L.component == "1", "W_L reflection-generated (component 1)");
    check(cr, to_i64(L.w_L.order) == 311040, "|W_L| = 311040");
    TorsionPoint s = isolated_point_with_centralizer(rs, 2, "D8");
    auto report = restriction_multiplicities(rs, "phi30,15,111", L, s);
    check(cr, report.per_coset.size() == 2, "two double cosets in W^H \\ W / W_L");
    check(cr, report.mackey_applicable, "both chi characters trivial");
    check(cr, report.mackey_checked, "Mackey identity verified");
    check(cr, restrict_to_mixed_class(report, "6631") == "zero",
          "mixed-class restriction to 6631 vanishes");
    auto coeffs = class_coefficients(rs, L, "phi30,15,111", "E6(a3)+A1");
    check(cr, coeffs.count("1") && coeffs["1"] == 1,
          "restriction to the class itself is the trivial local system");
    bool others_zero = true;
    for (auto& [sys, m] : coeffs)
      if (sys != "1" && m != 0) others_zero = false;
    check(cr, others_zero, "no other local system survives on the class");
    cr.reports.push_back(std::move(report));
  } else if (case_id == "E7a5_ell2") {
    TorsionPoint t = isolated_point_with_centralizer(rs, 2, "E7+A1");
    KummerShadow L = weyl_stabilizer(rs, t);
    check(cr, L.component == "1", "W_L reflection-generated (component 1)");
    TorsionPoint s = isolated_point_with_centralizer(rs, 2, "D8");
    RestrictionOptions opts;
    opts.sign_twist = sign_twist;
    auto report = restriction_multiplicities(rs, "phi315,16,11", L, s, opts);
    check(cr, report.per_coset.size() == 2, "two double cosets in W^H \\ W / W_L");
    bool has_c2 = false;
    for (auto& c : report.per_coset)
      if (c.component == "C2") has_c2 = true;
    check(cr, has_c2, "one intersection has component group C2");
    std::string verdict = restrict_to_mixed_class(report, "7522");
    if (sign_twist)
      check(cr, verdict == "zero", "mixed-class restriction to 7522 vanishes");
    else
      check(cr, verdict != "zero", "without the sign twist the restriction survives");
    cr.reports.push_back(std::move(report));
    if (sign_twist) {
      // order-3 element branch: H' of type A8, class 63
      TorsionPoint s3 = isolated_point_with_centralizer(rs, 3, "A8");
      auto report3 = restriction_multiplicities(rs, "phi315,16,11", L, s3);
      check(cr, report3.mackey_applicable, "order-3 branch: chi characters trivial");
      check(cr, restrict_to_mixed_class(report3, "63") == "zero",
            "order-3 branch: restriction to 63 vanishes");
      auto coeffs = class_coefficients(rs, L, "phi315,16,11", "E7(a5)");
      check(cr, coeffs.count("1") && coeffs["1"] == 1,
            "restriction to the class itself is the trivial local system");
      bool others_zero = true;
      for (auto& [sys, m] : coeffs)
        if (sys != "1" && m != 0) others_zero = false;
      check(cr, others_zero, "no other local system survives on the class");
      cr.reports.push_back(std::move(report3));
    }
  } else {
    throw std::invalid_argument("unknown case " + case_id);
  }
  return cr;
}

}  // namespace weylcs
