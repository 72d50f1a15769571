#include "weylcs/lusztig.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace weylcs {

namespace {

// Realized ambient table + per-centralizer-type fusion, cached: the table
// generation evaluates many witnesses against the same few subsystems.
struct PhiContext {
  std::shared_ptr<const RootSystem> rs;
  CharacterTable ambient_table;
  RealizedTable ambient_realized;
  SpringerTable ambient_springer;
  struct SubCtx {
    CharacterTable table;
    RealizedTable realized;
    ClassFusion fus;
    SpringerTable springer;
  };
  std::map<std::string, std::shared_ptr<SubCtx>> subs;  // keyed by root_set signature
};

std::map<std::string, std::shared_ptr<PhiContext>>& phi_contexts() {
  static std::map<std::string, std::shared_ptr<PhiContext>> m;
  return m;
}

std::shared_ptr<PhiContext> context_for(std::shared_ptr<const RootSystem> rs) {
  auto it = phi_contexts().find(rs->type_label);
  if (it != phi_contexts().end()) return it->second;
  auto ctx = std::make_shared<PhiContext>();
  ctx->rs = rs;
  ctx->ambient_table = table_for_type(rs->type);
  Subsystem whole = make_subsystem(
      rs, std::vector<int>(rs->simple_refs.begin(), rs->simple_refs.end()));
  ctx->ambient_realized = realize_table(ctx->ambient_table, whole);
  ctx->ambient_springer = springer_for_type(rs->type);
  phi_contexts()[rs->type_label] = ctx;
  return ctx;
}

std::string subsystem_signature(const Subsystem& sub) {
  std::ostringstream os;
  for (int r : sub.root_set) os << r << ",";
  return os.str();
}

std::shared_ptr<PhiContext::SubCtx> sub_context(PhiContext& ctx, const Subsystem& sub) {
  std::string key = subsystem_signature(sub);
  auto it = ctx.subs.find(key);
  if (it != ctx.subs.end()) return it->second;
  auto sc = std::make_shared<PhiContext::SubCtx>();
  sc->table = table_for_type(sub.type_decomposition);
  sc->realized = realize_table(sc->table, sub);
  sc->fus = fusion(sc->realized, ctx.ambient_realized);
  sc->fus.parent = &ctx.ambient_table;
  sc->fus.sub = &sc->table;
  sc->springer = springer_for_type(sub.type_decomposition);
  ctx.subs[key] = sc;
  return sc;
}

}  // namespace

PhiResult phi(const PhiInput& input) {
  auto ctx = context_for(input.ambient);
  auto sc = sub_context(*ctx, input.centralizer);
  const UnipotentClass& sub_class = sc->springer.class_ref(input.sub_class);
  if (!sub_class.special)
    throw std::invalid_argument("phi: class " + input.sub_class + " is not special in " +
                                type_label_str(input.centralizer.type_decomposition));
  auto psi0 = sc->springer.springer_char(input.sub_class, "1");
  if (!psi0)
    throw std::runtime_error("phi: no Springer character for (" + input.sub_class + ", triv)");
  int chi_sub = sc->table.char_index(*psi0);
  int j = j_induction(ctx->ambient_table, sc->fus, chi_sub);
  const std::string& label = ctx->ambient_table.chars[j].label;
  const SpringerPair* pair = ctx->ambient_springer.pair_for_char(label);
  if (!pair)
    throw std::runtime_error("phi: Springer pair missing for " + label + " in " +
                             input.ambient->type_label);
  return {pair->class_name, pair->local_system, label};
}

std::vector<i64> bad_primes(const std::string& type) {
  TypeLabel t = parse_type_label(type);
  std::vector<i64> out;
  auto add = [&](std::initializer_list<i64> ps) {
    for (i64 p : ps)
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  for (auto& st : t) {
    switch (st.family) {
      case 'A':
        break;
      case 'B':
      case 'C':
      case 'D':
        add({2});
        break;
      case 'G':
      case 'F':
        add({2, 3});
        break;
      case 'E':
        if (st.rank == 8)
          add({2, 3, 5});
        else
          add({2, 3});
        break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_bad_prime(const std::string& type, i64 ell) {
  auto b = bad_primes(type);
  return std::find(b.begin(), b.end(), ell) != b.end();
}

i64 group_label_order(const std::string& label) {
  if (label.empty()) throw std::invalid_argument("empty group label");
  i64 total = 1;
  std::istringstream ss(label);
  std::string tok;
  while (std::getline(ss, tok, 'x')) {
    if (tok == "1")
      total *= 1;
    else if (tok == "C2" || tok == "S2")
      total *= 2;
    else if (tok == "C3")
      total *= 3;
    else if (tok == "C4")
      total *= 4;
    else if (tok == "C5")
      total *= 5;
    else if (tok == "C6")
      total *= 6;
    else if (tok == "S3")
      total *= 6;
    else if (tok == "S4")
      total *= 24;
    else if (tok == "S5")
      total *= 120;
    else if (tok == "D8")
      total *= 8;
    else if (tok == "D12")
      total *= 12;
    else
      throw std::invalid_argument("unknown group label " + tok);
  }
  return total;
}

std::vector<EllSpecialRecord> ell_special_classes(const std::string& type, i64 ell) {
  auto rs = build_root_system(type);
  if (!rs->is_simple_type() || rs->type[0].family < 'E')
    throw std::invalid_argument("ell_special_classes: simple exceptional types only");
  auto ctx = context_for(rs);
  std::map<std::string, EllSpecialRecord> records;
  for (auto& iso : isolated_elements(rs, ell)) {
    auto sc = sub_context(*ctx, iso.centralizer);
    for (auto& cname : sc->springer.special_class_names()) {
      PhiInput in{rs, iso.point, iso.centralizer, cname};
      PhiResult r = phi(in);
      auto& rec = records[r.class_name];
      if (rec.class_name.empty()) {
        rec.class_name = r.class_name;
        const UnipotentClass& uc = ctx->ambient_springer.class_ref(r.class_name);
        rec.special = uc.special;
        rec.a_group = uc.a_group;
        auto oit = uc.omega_ell.find(ell);
        if (oit != uc.omega_ell.end()) rec.omega_ell = oit->second;
      }
      rec.witnesses.push_back(
          {iso.point, iso.centralizer.type_str(), cname, r.w_char, r.local_system});
    }
  }
  std::vector<EllSpecialRecord> out;
  for (auto& [name, rec] : records) out.push_back(rec);
  // property (P) annotation
  for (auto& rec : out) {
    i64 target = group_label_order(ctx->ambient_springer.class_ref(rec.class_name).a_group);
    for (auto& w : rec.witnesses) {
      const SpringerTable sub_spr = springer_for_type(w.centralizer_type);
      const UnipotentClass& v = sub_spr.class_ref(w.sub_class);
      if (!v.omega.empty() && group_label_order(v.omega) == target) {
        rec.p_special = true;
        rec.p_witness = w;
        break;
      }
    }
  }
  auto& spr = ctx->ambient_springer;
  std::sort(out.begin(), out.end(), [&](const EllSpecialRecord& a, const EllSpecialRecord& b) {
    i64 da = spr.class_ref(a.class_name).dim, db = spr.class_ref(b.class_name).dim;
    if (da != db) return da > db;
    return a.class_name < b.class_name;
  });
  return out;
}

std::pair<bool, std::optional<PhiWitness>> check_property_P(const std::string& type, i64 ell,
                                                            const std::string& class_name) {
  auto records = ell_special_classes(type, ell);
  for (auto& rec : records)
    if (rec.class_name == class_name) return {rec.p_special, rec.p_witness};
  throw std::invalid_argument("check_property_P: class " + class_name + " is not " +
                              std::to_string(ell) + "-special in " + type);
}

std::vector<TableRow> emit_table(const std::string& type, i64 ell) {
  if (!is_bad_prime(type, ell))
    throw std::invalid_argument(std::to_string(ell) + " is not bad for " + type);
  std::vector<TableRow> rows;
  for (auto& rec : ell_special_classes(type, ell)) {
    if (rec.special) continue;
    rows.push_back({rec.class_name, rec.a_group, rec.omega_ell});
  }
  return rows;
}

}  // namespace weylcs
