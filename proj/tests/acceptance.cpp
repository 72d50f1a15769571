// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Expected values are frozen here; every check is exact.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "weylcs/fourier.hpp"
#include "weylcs/sheafres.hpp"

using namespace weylcs;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(const std::string& name, bool ok, double seconds, const std::string& detail = "") {
  std::cout << (ok ? "PASS " : "FAIL ") << name;
  char buf[64];
  snprintf(buf, sizeof buf, "  (%.1f s)", seconds);
  std::cout << buf;
  if (!detail.empty()) std::cout << "  " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

struct ExpectedRow {
  const char* cls;
  const char* a;
  const char* omega;
};

bool check_table(const std::string& type, i64 ell, const std::vector<ExpectedRow>& want,
                 std::string& detail) {
  auto rows = emit_table(type, ell);
  std::map<std::string, std::pair<std::string, std::string>> got;
  for (auto& r : rows) got[r.class_name] = {r.a_group, r.omega_ell};
  bool ok = rows.size() == want.size();
  for (auto& w : want) {
    auto it = got.find(w.cls);
    if (it == got.end()) {
      detail += std::string(" missing ") + w.cls;
      ok = false;
      continue;
    }
    if (it->second.first != w.a || it->second.second != w.omega) {
      detail += std::string(" wrong-columns ") + w.cls;
      ok = false;
    }
  }
  if (rows.size() != want.size()) detail += " row-count " + std::to_string(rows.size());
  return ok;
}

}  // namespace

int main() {
  std::cout << "acceptance criteria\n===================\n";

  // --- criterion 1: appendix tables, exact, with time budgets ---------------
  {
    Timer t;
    std::string d;
    bool ok = check_table("G2", 2, {{"Ã1", "1", "1"}}, d) &&
              check_table("G2", 3, {{"A1", "1", "1"}}, d);
    bool in_budget = t.seconds() < 1.0;
    report("1a. G2 tables (< 1 s)", ok && in_budget, t.seconds(), d);
  }
  {
    Timer t;
    std::string d;
    bool ok = check_table("F4", 2,
                          {{"A1", "1", "1"},
                           {"A2+Ã1", "1", "1"},
                           {"B2", "S2", "S2"},
                           {"C3(a1)", "S2", "S2"}},
                          d) &&
              check_table("F4", 3, {{"Ã2+A1", "1", "1"}}, d);
    report("1b. F4 tables (< 5 s)", ok && t.seconds() < 5.0, t.seconds(), d);
  }
  {
    Timer t;
    std::string d;
    bool ok = check_table("E6", 2, {{"A5", "1", "1"}, {"A3+A1", "1", "1"}, {"3A1", "1", "1"}},
                          d) &&
              check_table("E6", 3, {{"2A2+A1", "1", "1"}}, d);
    report("1c. E6 tables (< 30 s)", ok && t.seconds() < 30.0, t.seconds(), d);
  }
  {
    Timer t;
    std::string d;
    bool ok = check_table("E7", 2,
                          {{"D6", "1", "1"},
                           {"D6(a2)", "1", "1"},
                           {"A5'", "1", "1"},
                           {"D4+A1", "1", "1"},
                           {"A3+2A1", "1", "1"},
                           {"(A3+A1)'", "1", "1"},
                           {"4A1", "1", "1"},
                           {"3A1'", "1", "1"}},
                          d) &&
              check_table("E7", 3, {{"A5+A1", "1", "1"}, {"2A2+A1", "1", "1"}}, d);
    report("1d. E7 tables (< 2 min)", ok && t.seconds() < 120.0, t.seconds(), d);
  }
  {
    Timer t;
    std::string d;
    bool ok = check_table("E8", 2,
                          {{"E7", "1", "1"},
                           {"D7", "1", "1"},
                           {"E7(a2)", "1", "1"},
                           {"D6", "1", "1"},
                           {"A7", "1", "1"},
                           {"D5+A1", "1", "1"},
                           {"E7(a5)", "S3", "S3"},
                           {"D6(a2)", "S2", "S2"},
                           {"D5(a1)+A2", "1", "1"},
                           {"A5", "1", "1"},
                           {"D4+A1", "1", "1"},
                           {"2A3", "1", "1"},
                           {"A3+A2+A1", "1", "1"},
                           {"A3+2A1", "1", "1"},
                           {"A3+A1", "1", "1"},
                           {"A2+3A1", "1", "1"},
                           {"4A1", "1", "1"},
                           {"3A1", "1", "1"}},
                          d) &&
              check_table("E8", 3,
                          {{"E6+A1", "1", "1"},
                           {"E6(a3)+A1", "S2", "S2"},
                           {"2A2+2A1", "1", "1"},
                           {"2A2+A1", "1", "1"}},
                          d) &&
              check_table("E8", 5, {{"A4+A3", "1", "1"}}, d);
    report("1e. E8 tables (< 10 min)", ok && t.seconds() < 600.0, t.seconds(), d);
  }

  // --- criterion 2: the E6(a3)+A1 verification -------------------------------
  {
    Timer t;
    CaseReport cr = verify_case("E6a3A1_ell3");
    bool ok = cr.pass;
    // the headline pairing <Ind(phi30,15,111), Ind E'_{(6631,triv)}>_W = 0,
    // recomputed directly at the ambient level
    auto rs = build_root_system("E8");
    CharacterTable W = table_for_type("E8");
    Subsystem whole = make_subsystem(rs, std::vector<int>(rs->simple_refs.begin(),
                                                          rs->simple_refs.end()));
    RealizedTable ambient = realize_table(W, whole);
    TorsionPoint lt = isolated_point_with_centralizer(rs, 3, "E6+A2");
    KummerShadow L = weyl_stabilizer(rs, lt);
    CharacterTable lt_table = table_for_type(L.integrality.type_decomposition);
    RealizedTable l_real = realize_table(lt_table, L.integrality);
    TorsionPoint s = isolated_point_with_centralizer(rs, 2, "D8");
    auto h_set = integrality_subsystem(*rs, s);
    Subsystem H = make_subsystem(rs, simple_system_of(*rs, h_set));
    CharacterTable h_table = table_for_type(H.type_decomposition);
    RealizedTable h_real = realize_table(h_table, H);
    auto spr = springer_for_type("D8");
    std::string ep = *spr.springer_char("6631");
    auto fus_l = fusion(l_real, ambient);
    auto fus_h = fusion(h_real, ambient);
    Rat value = inner_product(
        W, induce(fus_l, char_values(lt_table, lt_table.char_index("phi30,15,111"))),
        induce(fus_h, char_values(h_table, h_table.char_index(ep))));
    ok = ok && value == Rat(0);
    std::string detail = "pairing=" + value.str();
    for (auto& c : cr.checks)
      if (c.rfind("FAIL", 0) == 0) detail += " | " + c;
    report("2. E6(a3)+A1 at ell = 3 (< 5 min)", ok && t.seconds() < 300.0, t.seconds(), detail);
  }

  // --- criterion 3: the E7(a5) verification ----------------------------------
  {
    Timer t;
    CaseReport with_twist = verify_case("E7a5_ell2", true);
    CaseReport without = verify_case("E7a5_ell2", false);
    bool ok = with_twist.pass && without.pass;
    std::string detail;
    for (auto& cr : {with_twist, without})
      for (auto& c : cr.checks)
        if (c.rfind("FAIL", 0) == 0) detail += " | " + c;
    report("3. E7(a5) at ell = 2 with sign twist and footnote (< 10 min)",
           ok && t.seconds() < 600.0, t.seconds(), detail);
  }

  // --- criterion 4: the ell-P-special lemma -----------------------------------
  {
    Timer t;
    bool ok = true;
    std::string detail;
    for (auto& [type, primes] : std::vector<std::pair<std::string, std::vector<i64>>>{
             {"G2", {2, 3}}, {"F4", {2, 3}}, {"E6", {2, 3}}, {"E7", {2, 3}},
             {"E8", {2, 3, 5}}}) {
      for (i64 ell : primes) {
        for (auto& rec : ell_special_classes(type, ell)) {
          if (!rec.special && !rec.p_special) {
            ok = false;
            detail += " not-P:" + type + "/" + rec.class_name;
          }
          if (!rec.omega_ell.empty() &&
              (group_label_order(rec.omega_ell) == group_label_order(rec.a_group)) !=
                  rec.p_special) {
            ok = false;
            detail += " iff:" + type + "/" + rec.class_name;
          }
        }
      }
    }
    report("4. ell-special-not-special is P-special; P-special iff Omega^l = A(u)", ok,
           t.seconds(), detail);
  }

  // --- criterion 5: property suites --------------------------------------------
  {
    Timer t;
    bool ok = true;
    std::string detail;
    try {
      // orthogonality of constructed and loaded tables
      for (auto label : {"A4", "B3", "D4", "G2", "F4", "E6", "E7", "E8"})
        validate_table(table_for_type(label));
      // b(sign) = number of positive roots per type
      for (auto& [label, npos] : std::vector<std::pair<std::string, i64>>{
               {"G2", 6}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"B4", 16}}) {
        CharacterTable tb = table_for_type(label);
        bool found = false;
        for (auto& ch : tb.chars) {
          if (ch.values[0] != 1) continue;
          bool pm = true;
          for (auto v : ch.values)
            if (v != 1 && v != -1) pm = false;
          bool nontrivial = false;
          for (auto v : ch.values)
            if (v == -1) nontrivial = true;
          if (pm && nontrivial && ch.b == npos) found = true;
        }
        if (!found) {
          ok = false;
          detail += " sign:" + label;
        }
      }
      // Mackey via brute force on W(G2) and W(B3)
      for (auto label : {"G2", "B3"}) {
        auto rs = build_root_system(label);
        auto W = weyl_group(rs);
        CharacterTable wt = table_for_type(label);
        Subsystem whole = make_subsystem(rs, std::vector<int>(rs->simple_refs.begin(),
                                                              rs->simple_refs.end()));
        RealizedTable parent = realize_table(wt, whole);
        std::vector<Subsystem> subs;
        for (auto& sub : pseudo_levis(rs))
          if (sub.rank() > 0 && (int)sub.root_set.size() < rs->nroots()) subs.push_back(sub);
        // brute force over all elements
        std::set<Perm> all;
        {
          std::vector<Perm> work{Perm(rs->nroots())};
          all.insert(work[0]);
          while (!work.empty()) {
            Perm w = work.back();
            work.pop_back();
            for (auto& g : W.generators) {
              Perm c = pmul(w, g);
              if (all.insert(c).second) work.push_back(c);
            }
          }
        }
        auto elements_of = [&](const GroupCtx& G) {
          std::set<Perm> out;
          std::vector<Perm> work{Perm(rs->nroots())};
          out.insert(work[0]);
          while (!work.empty()) {
            Perm w = work.back();
            work.pop_back();
            for (auto& g : G.generators) {
              Perm c = pmul(w, g);
              if (out.insert(c).second) work.push_back(c);
            }
          }
          return out;
        };
        const Subsystem& sh = subs[0];
        const Subsystem& sk = subs[subs.size() / 2];
        CharacterTable th = table_for_type(sh.type_decomposition);
        CharacterTable tk = table_for_type(sk.type_decomposition);
        RealizedTable rh = realize_table(th, sh);
        RealizedTable rk = realize_table(tk, sk);
        auto fh = fusion(rh, parent);
        auto fk = fusion(rk, parent);
        auto hset = elements_of(rh.group);
        auto kset = elements_of(rk.group);
        for (int ih = 0; ih < std::min(3, th.nchars()) && ok; ++ih)
          for (int ik = 0; ik < std::min(3, tk.nchars()) && ok; ++ik) {
            Rat lhs = inner_product(wt, induce(fh, char_values(th, ih)),
                                    induce(fk, char_values(tk, ik)));
            Rat rhs(0);
            std::set<std::vector<uint16_t>> seen;
            for (auto& w : all) {
              if (seen.count(w.img)) continue;
              std::set<std::vector<uint16_t>> dc;
              for (auto& h : hset)
                for (auto& k : kset) dc.insert(pmul(pmul(h, w), k).img);
              for (auto& x : dc) seen.insert(x);
              Perm wi = pinv(w);
              Rat sum(0);
              i64 count = 0;
              for (auto& x : kset) {
                Perm hx = pmul(pmul(w, x), wi);
                if (!rh.group.contains(hx)) continue;
                ++count;
                i64 a = 0, b = 0;
                for (int c = 0; c < th.nclasses(); ++c)
                  if (are_conjugate(rh.group, hx, rh.class_reps[c])) {
                    a = th.chars[ih].values[c];
                    break;
                  }
                for (int c = 0; c < tk.nclasses(); ++c)
                  if (are_conjugate(rk.group, x, rk.class_reps[c])) {
                    b = tk.chars[ik].values[c];
                    break;
                  }
                sum = sum + Rat(a * b);
              }
              rhs = rhs + sum / Rat(count);
            }
            if (lhs != rhs) {
              ok = false;
              detail += std::string(" mackey:") + label;
            }
          }
      }
      // tables at every bad prime run with j-induction uniqueness asserted
      for (auto& [type, primes] : std::vector<std::pair<std::string, std::vector<i64>>>{
               {"G2", {2, 3}}, {"F4", {2, 3}}, {"E6", {2, 3}}, {"E7", {2, 3}},
               {"E8", {2, 3, 5}}})
        for (i64 ell : primes) emit_table(type, ell);
      // Fourier matrix of S2 against brute force; involution
      auto& s2 = small_group("S2");
      auto f = fourier_matrix(s2);
      Rat half(1, 2), mhalf(-1, 2);
      std::vector<std::vector<Rat>> expect = {{half, half, half, half},
                                              {half, half, mhalf, mhalf},
                                              {half, mhalf, half, mhalf},
                                              {half, mhalf, mhalf, half}};
      // rows ordered [1,1],[1,sgn],[-1,1],[-1,sgn] by construction of mset
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (!(f[i][j] == Cyc::from_rat(expect[i][j], 1))) {
            ok = false;
            detail += " fourierS2";
          }
      for (int i = 0; i < 4 && ok; ++i)
        for (int j = 0; j < 4; ++j) {
          Cyc s = Cyc::zero(1);
          for (int l = 0; l < 4; ++l) s = s + f[i][l] * f[l][j];
          if (!(s == Cyc::from_rat(i == j ? Rat(1) : Rat(0), 1))) {
            ok = false;
            detail += " fourier-sq";
          }
        }
      // sum of phi(1)^2 = |C_A(a)|, all groups in scope
      for (auto label : {"1", "S2", "C3", "C4", "C5", "C6", "C2xC2", "S3", "S4", "S5", "D8",
                         "D12"})
        if (!fourier_coefficient_check(label).degrees_match) {
          ok = false;
          detail += std::string(" degsq:") + label;
        }
      // unitriangularity of every bundled decomposition matrix
      for (auto& [l, e] : std::vector<std::pair<std::string, i64>>{
               {"S2", 2}, {"C3", 3}, {"C4", 2}, {"C5", 5}, {"C2xC2", 2}, {"C6", 2},
               {"C6", 3}, {"S3", 2}, {"S3", 3}, {"S4", 2}, {"S4", 3}, {"S5", 2},
               {"S5", 3}, {"S5", 5}, {"D8", 2}, {"D12", 2}, {"D12", 3}})
        if (!unitriangular_check(decomposition_matrix(l, e))) {
          ok = false;
          detail += " unitri:" + l + "@" + std::to_string(e);
        }
    } catch (std::exception& e) {
      ok = false;
      detail += std::string(" exception: ") + e.what();
    }
    report("5. property suites (orthogonality, Mackey, fake degrees, Fourier, decmats)", ok,
           t.seconds(), detail);
  }

  // --- criterion 6: scope honesty ----------------------------------------------
  {
    report("6. headline unitriangularity of Irr(G^F) is out of desk scale; the"
           " paper-anchored checks above are the substitute",
           true, 0.0);
  }

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << std::endl;
  return g_failures == 0 ? 0 : 1;
}
