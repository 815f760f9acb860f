#include "daggerkit/dagger2.hpp"

#include <algorithm>
#include <set>

namespace daggerkit {

namespace {

TwoCatTable require_2table(const Fin2Category& b, const char* who) {
  auto t = TwoCatTable::build(b);
  if (!t) throw StructuralError(std::string(who) + ": tables do not resolve");
  return std::move(*t);
}

// Resolves a string map over all 2-cells (or 1-cells) to index form; reports
// missing/unresolved entries as structural violations.
bool resolve_two_map(const TwoCatTable& t,
                     const std::map<std::string, std::string>& m,
                     const char* tag, ValidationReport& rep,
                     std::vector<int>& out) {
  out.assign(t.n_two(), -1);
  bool ok = true;
  for (int c = 0; c < t.n_two(); ++c) {
    auto it = m.find(t.two_id(c));
    if (it == m.end()) {
      rep.add_structural(std::string(tag) + "-missing", t.two_id(c));
      ok = false;
      continue;
    }
    out[c] = t.two_index(it->second);
    if (out[c] < 0) {
      rep.add_structural(std::string(tag) + "-unresolved",
                         t.two_id(c) + " -> " + it->second);
      ok = false;
    }
  }
  return ok;
}

bool resolve_one_map(const TwoCatTable& t,
                     const std::map<std::string, std::string>& m,
                     const char* tag, ValidationReport& rep,
                     std::vector<int>& out) {
  out.assign(t.n_one(), -1);
  bool ok = true;
  for (int f = 0; f < t.n_one(); ++f) {
    auto it = m.find(t.one_id(f));
    if (it == m.end()) {
      rep.add_structural(std::string(tag) + "-missing", t.one_id(f));
      ok = false;
      continue;
    }
    out[f] = t.one_index(it->second);
    if (out[f] < 0) {
      rep.add_structural(std::string(tag) + "-unresolved",
                         t.one_id(f) + " -> " + it->second);
      ok = false;
    }
  }
  return ok;
}

// †2 axioms: identity on objects and 1-morphisms, contravariant for vertical
// composition, covariant for horizontal, strictly squares to the identity.
void check_dag2_axioms(const TwoCatTable& t, const std::vector<int>& d2,
                       ValidationReport& rep) {
  for (int c = 0; c < t.n_two(); ++c) {
    if (t.two_src(d2[c]) != t.two_tgt(c) || t.two_tgt(d2[c]) != t.two_src(c)) {
      rep.add_axiom("dag2-typing", t.two_id(c) + " -> " + t.two_id(d2[c]));
    }
  }
  if (!rep.ok()) return;
  for (int c = 0; c < t.n_two(); ++c) {
    if (d2[d2[c]] != c) rep.add_axiom("dag2-involution", t.two_id(c));
  }
  for (int f = 0; f < t.n_one(); ++f) {
    if (d2[t.two_identity(f)] != t.two_identity(f)) {
      rep.add_axiom("dag2-identity", t.one_id(f));
    }
  }
  for (int cc = 0; cc < t.n_two(); ++cc) {
    for (int a = 0; a < t.n_two(); ++a) {
      if (t.two_tgt(a) == t.two_src(cc) &&
          d2[t.vert(cc, a)] != t.vert(d2[a], d2[cc])) {
        rep.add_axiom("dag2-vertical-contravariance",
                      pair_witness(t.two_id(cc), t.two_id(a)));
      }
      if (t.cell_tgt_obj(a) == t.cell_src_obj(cc) &&
          d2[t.horiz(cc, a)] != t.horiz(d2[cc], d2[a])) {
        rep.add_axiom("dag2-horizontal-covariance",
                      pair_witness(t.two_id(cc), t.two_id(a)));
      }
    }
  }
}

// †1 axioms (without †2-unitarity of phi): identity on objects, contravariant
// for horizontal composition, functorial on 2-cells, phi a natural
// multiplicative trivialization of †1 squared with the cube coherence
// phi_{f^{†1}} = (phi_f)^{†1}.
void check_dag1_axioms(const TwoCatTable& t, const std::vector<int>& d1,
                       const std::vector<int>& d12, const std::vector<int>& ph,
                       ValidationReport& rep) {
  for (int f = 0; f < t.n_one(); ++f) {
    if (t.one_src(d1[f]) != t.one_tgt(f) || t.one_tgt(d1[f]) != t.one_src(f)) {
      rep.add_axiom("dag1-typing", t.one_id(f) + " -> " + t.one_id(d1[f]));
    }
  }
  if (!rep.ok()) return;
  for (int o = 0; o < t.n_objects(); ++o) {
    if (d1[t.one_identity(o)] != t.one_identity(o)) {
      rep.add_axiom("dag1-identity-1cell", t.obj_id(o));
    }
  }
  for (int g = 0; g < t.n_one(); ++g) {
    for (int f = 0; f < t.n_one(); ++f) {
      if (t.one_tgt(f) != t.one_src(g)) continue;
      if (d1[t.one_comp(g, f)] != t.one_comp(d1[f], d1[g])) {
        rep.add_axiom("dag1-horizontal-contravariance",
                      pair_witness(t.one_id(g), t.one_id(f)));
      }
    }
  }
  for (int c = 0; c < t.n_two(); ++c) {
    if (t.two_src(d12[c]) != d1[t.two_src(c)] ||
        t.two_tgt(d12[c]) != d1[t.two_tgt(c)]) {
      rep.add_axiom("dag1-2cell-typing", t.two_id(c));
    }
  }
  if (!rep.ok()) return;
  for (int f = 0; f < t.n_one(); ++f) {
    if (d12[t.two_identity(f)] != t.two_identity(d1[f])) {
      rep.add_axiom("dag1-identity-2cell", t.one_id(f));
    }
  }
  for (int cc = 0; cc < t.n_two(); ++cc) {
    for (int a = 0; a < t.n_two(); ++a) {
      if (t.two_tgt(a) == t.two_src(cc) &&
          d12[t.vert(cc, a)] != t.vert(d12[cc], d12[a])) {
        rep.add_axiom("dag1-vertical-covariance",
                      pair_witness(t.two_id(cc), t.two_id(a)));
      }
      if (t.cell_tgt_obj(a) == t.cell_src_obj(cc) &&
          d12[t.horiz(cc, a)] != t.horiz(d12[a], d12[cc])) {
        rep.add_axiom("dag1-horizontal-contravariance-2cell",
                      pair_witness(t.two_id(cc), t.two_id(a)));
      }
    }
  }
  if (!rep.ok()) return;

  // phi_f : f^{†1†1} => f
  for (int f = 0; f < t.n_one(); ++f) {
    if (t.two_src(ph[f]) != d1[d1[f]] || t.two_tgt(ph[f]) != f) {
      rep.add_axiom("phi-typing", t.one_id(f) + " -> " + t.two_id(ph[f]));
    }
  }
  if (!rep.ok()) return;
  for (int f = 0; f < t.n_one(); ++f) {
    if (t.vert_inverse(ph[f]) < 0) {
      rep.add_axiom("phi-invertible", t.one_id(f));
    }
  }
  for (int o = 0; o < t.n_objects(); ++o) {
    int idb = t.one_identity(o);
    if (ph[idb] != t.two_identity(idb)) {
      rep.add_axiom("phi-unit", t.obj_id(o));
    }
  }
  for (int g = 0; g < t.n_one(); ++g) {
    for (int f = 0; f < t.n_one(); ++f) {
      if (t.one_tgt(f) != t.one_src(g)) continue;
      if (ph[t.one_comp(g, f)] != t.horiz(ph[g], ph[f])) {
        rep.add_axiom("phi-multiplicative", pair_witness(t.one_id(g), t.one_id(f)));
      }
    }
  }
  // naturality: phi_g ∘ theta^{†1†1} = theta ∘ phi_f for theta : f => g
  for (int c = 0; c < t.n_two(); ++c) {
    int f = t.two_src(c);
    int g = t.two_tgt(c);
    int lhs = t.vert(ph[g], d12[d12[c]]);
    int rhs = t.vert(c, ph[f]);
    if (lhs != rhs || lhs < 0) {
      rep.add_axiom("phi-naturality", t.two_id(c));
    }
  }
  // cube coherence: phi_{f^{†1}} = (phi_f)^{†1}
  for (int f = 0; f < t.n_one(); ++f) {
    if (ph[d1[f]] != d12[ph[f]]) {
      rep.add_axiom("phi-cube", t.one_id(f));
    }
  }
}

}  // namespace

ValidationReport validate_bi_involutive(const BiInvolutive& v) {
  ValidationReport rep;
  if (!v.base) {
    rep.add_structural("missing-category", "bi-involutive with null base");
    return rep;
  }
  auto table = TwoCatTable::build(*v.base, &rep);
  if (!table) return rep;
  const TwoCatTable& t = *table;

  std::vector<int> d2, d1, d12;
  bool ok = resolve_two_map(t, v.dag2, "dag2", rep, d2);
  ok = resolve_one_map(t, v.dag1_on1, "dag1", rep, d1) && ok;
  ok = resolve_two_map(t, v.dag1_on2, "dag1-2cell", rep, d12) && ok;
  std::vector<int> ph(t.n_one(), -1);
  for (int f = 0; f < t.n_one(); ++f) {
    auto it = v.phi.find(t.one_id(f));
    if (it == v.phi.end()) {
      rep.add_structural("phi-missing", t.one_id(f));
      ok = false;
      continue;
    }
    ph[f] = t.two_index(it->second);
    if (ph[f] < 0) {
      rep.add_structural("phi-unresolved", t.one_id(f) + " -> " + it->second);
      ok = false;
    }
  }
  if (!ok) return rep;

  // The law groups are independent once the maps resolve; report them all.
  {
    ValidationReport sub;
    check_dag2_axioms(t, d2, sub);
    rep.merge(sub);
  }
  {
    ValidationReport sub;
    check_dag1_axioms(t, d1, d12, ph, sub);
    rep.merge(sub);
  }

  // The daggers strongly commute on every 2-cell.
  for (int c = 0; c < t.n_two(); ++c) {
    if (d12[d2[c]] != d2[d12[c]]) {
      rep.add_axiom("strong-commutation", t.two_id(c));
    }
  }
  // phi is unitary with respect to †2.
  for (int f = 0; f < t.n_one(); ++f) {
    if (t.vert_inverse(ph[f]) >= 0 && d2[ph[f]] != t.vert_inverse(ph[f])) {
      rep.add_axiom("phi-unitary", t.one_id(f));
    }
  }
  return rep;
}

ValidationReport validate_partial_dagger(const Fin2Category& b,
                                         PartialDaggerKind which,
                                         const PartialDaggerData& data) {
  ValidationReport rep;
  auto table = TwoCatTable::build(b, &rep);
  if (!table) return rep;
  const TwoCatTable& t = *table;

  if (which == PartialDaggerKind::Top) {
    std::vector<int> d2;
    if (!resolve_two_map(t, data.dag2, "dag2", rep, d2)) return rep;
    check_dag2_axioms(t, d2, rep);
    return rep;
  }

  std::vector<int> d1, d12;
  bool ok = resolve_one_map(t, data.dag1_on1, "dag1", rep, d1);
  ok = resolve_two_map(t, data.dag1_on2, "dag1-2cell", rep, d12) && ok;
  std::vector<int> ph(t.n_one(), -1);
  for (int f = 0; f < t.n_one(); ++f) {
    auto it = data.phi.find(t.one_id(f));
    if (it == data.phi.end()) {
      rep.add_structural("phi-missing", t.one_id(f));
      ok = false;
      continue;
    }
    ph[f] = t.two_index(it->second);
    if (ph[f] < 0) {
      rep.add_structural("phi-unresolved", t.one_id(f));
      ok = false;
    }
  }
  if (!ok) return rep;
  check_dag1_axioms(t, d1, d12, ph, rep);
  rep.add_note("first-dagger: phi unitarity needs a top dagger and is not checked here");
  return rep;
}

ValidationReport validate_coherent_input(const CoherentDagger2Input& c) {
  ValidationReport rep;
  if (!c.base) {
    rep.add_structural("missing-category", "coherent input with null base");
    return rep;
  }
  auto table = TwoCatTable::build(*c.base, &rep);
  if (!table) return rep;
  const TwoCatTable& t = *table;

  // Object maps.
  std::vector<int> p1o(t.n_objects(), -1), p2o(t.n_objects(), -1);
  bool ok = true;
  for (int o = 0; o < t.n_objects(); ++o) {
    auto i1 = c.psi1_on0.find(t.obj_id(o));
    auto i2 = c.psi2_on0.find(t.obj_id(o));
    if (i1 == c.psi1_on0.end() || i2 == c.psi2_on0.end()) {
      rep.add_structural("psi-object-missing", t.obj_id(o));
      ok = false;
      continue;
    }
    p1o[o] = t.obj_index(i1->second);
    p2o[o] = t.obj_index(i2->second);
    if (p1o[o] < 0 || p2o[o] < 0) {
      rep.add_structural("psi-object-unresolved", t.obj_id(o));
      ok = false;
    }
  }
  std::vector<int> p11, p12, p21, p22;
  ok = resolve_one_map(t, c.psi1_on1, "psi1", rep, p11) && ok;
  ok = resolve_two_map(t, c.psi1_on2, "psi1-2cell", rep, p12) && ok;
  ok = resolve_one_map(t, c.psi2_on1, "psi2", rep, p21) && ok;
  ok = resolve_two_map(t, c.psi2_on2, "psi2-2cell", rep, p22) && ok;
  if (!ok) return rep;

  // psi1: contravariant on 1-cells, covariant vertical / contravariant
  // horizontal on 2-cells.
  for (int f = 0; f < t.n_one(); ++f) {
    if (t.one_src(p11[f]) != p1o[t.one_tgt(f)] ||
        t.one_tgt(p11[f]) != p1o[t.one_src(f)]) {
      rep.add_axiom("psi1-typing", t.one_id(f));
    }
  }
  for (int o = 0; o < t.n_objects(); ++o) {
    if (p11[t.one_identity(o)] != t.one_identity(p1o[o])) {
      rep.add_axiom("psi1-identity", t.obj_id(o));
    }
  }
  for (int g = 0; g < t.n_one(); ++g) {
    for (int f = 0; f < t.n_one(); ++f) {
      if (t.one_tgt(f) != t.one_src(g)) continue;
      if (p11[t.one_comp(g, f)] != t.one_comp(p11[f], p11[g])) {
        rep.add_axiom("psi1-contravariance", pair_witness(t.one_id(g), t.one_id(f)));
      }
    }
  }
  for (int cc = 0; cc < t.n_two(); ++cc) {
    if (t.two_src(p12[cc]) != p11[t.two_src(cc)] ||
        t.two_tgt(p12[cc]) != p11[t.two_tgt(cc)]) {
      rep.add_axiom("psi1-2cell-typing", t.two_id(cc));
    }
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < t.n_one(); ++f) {
    if (p12[t.two_identity(f)] != t.two_identity(p11[f])) {
      rep.add_axiom("psi1-2cell-identity", t.one_id(f));
    }
  }
  for (int cc = 0; cc < t.n_two(); ++cc) {
    for (int a = 0; a < t.n_two(); ++a) {
      if (t.two_tgt(a) == t.two_src(cc) &&
          p12[t.vert(cc, a)] != t.vert(p12[cc], p12[a])) {
        rep.add_axiom("psi1-vertical", pair_witness(t.two_id(cc), t.two_id(a)));
      }
      if (t.cell_tgt_obj(a) == t.cell_src_obj(cc) &&
          p12[t.horiz(cc, a)] != t.horiz(p12[a], p12[cc])) {
        rep.add_axiom("psi1-horizontal", pair_witness(t.two_id(cc), t.two_id(a)));
      }
    }
  }

  // psi2: covariant on 1-cells, contravariant vertical / covariant horizontal
  // on 2-cells.
  for (int f = 0; f < t.n_one(); ++f) {
    if (t.one_src(p21[f]) != p2o[t.one_src(f)] ||
        t.one_tgt(p21[f]) != p2o[t.one_tgt(f)]) {
      rep.add_axiom("psi2-typing", t.one_id(f));
    }
  }
  for (int o = 0; o < t.n_objects(); ++o) {
    if (p21[t.one_identity(o)] != t.one_identity(p2o[o])) {
      rep.add_axiom("psi2-identity", t.obj_id(o));
    }
  }
  for (int g = 0; g < t.n_one(); ++g) {
    for (int f = 0; f < t.n_one(); ++f) {
      if (t.one_tgt(f) != t.one_src(g)) continue;
      if (p21[t.one_comp(g, f)] != t.one_comp(p21[g], p21[f])) {
        rep.add_axiom("psi2-covariance", pair_witness(t.one_id(g), t.one_id(f)));
      }
    }
  }
  for (int cc = 0; cc < t.n_two(); ++cc) {
    if (t.two_src(p22[cc]) != p21[t.two_tgt(cc)] ||
        t.two_tgt(p22[cc]) != p21[t.two_src(cc)]) {
      rep.add_axiom("psi2-2cell-typing", t.two_id(cc));
    }
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < t.n_one(); ++f) {
    if (p22[t.two_identity(f)] != t.two_identity(p21[f])) {
      rep.add_axiom("psi2-2cell-identity", t.one_id(f));
    }
  }
  for (int cc = 0; cc < t.n_two(); ++cc) {
    for (int a = 0; a < t.n_two(); ++a) {
      if (t.two_tgt(a) == t.two_src(cc) &&
          p22[t.vert(cc, a)] != t.vert(p22[a], p22[cc])) {
        rep.add_axiom("psi2-vertical", pair_witness(t.two_id(cc), t.two_id(a)));
      }
      if (t.cell_tgt_obj(a) == t.cell_src_obj(cc) &&
          p22[t.horiz(cc, a)] != t.horiz(p22[cc], p22[a])) {
        rep.add_axiom("psi2-horizontal", pair_witness(t.two_id(cc), t.two_id(a)));
      }
    }
  }
  if (!rep.ok()) return rep;

  // Strict involutivity on every level.
  for (int o = 0; o < t.n_objects(); ++o) {
    if (p1o[p1o[o]] != o) rep.add_axiom("psi1-involutive", t.obj_id(o));
    if (p2o[p2o[o]] != o) rep.add_axiom("psi2-involutive", t.obj_id(o));
  }
  for (int f = 0; f < t.n_one(); ++f) {
    if (p11[p11[f]] != f) rep.add_axiom("psi1-involutive", t.one_id(f));
    if (p21[p21[f]] != f) rep.add_axiom("psi2-involutive", t.one_id(f));
  }
  for (int cc = 0; cc < t.n_two(); ++cc) {
    if (p12[p12[cc]] != cc) rep.add_axiom("psi1-involutive", t.two_id(cc));
    if (p22[p22[cc]] != cc) rep.add_axiom("psi2-involutive", t.two_id(cc));
  }
  if (!rep.ok()) return rep;

  // h1/h2: invertible trivializations with the strict fixed-point coherences.
  std::vector<int> h1(t.n_objects(), -1), h2(t.n_objects(), -1);
  for (int o = 0; o < t.n_objects(); ++o) {
    auto i1 = c.h1.find(t.obj_id(o));
    auto i2 = c.h2.find(t.obj_id(o));
    if (i1 == c.h1.end() || i2 == c.h2.end()) {
      rep.add_structural("h-missing", t.obj_id(o));
      continue;
    }
    h1[o] = t.one_index(i1->second);
    h2[o] = t.one_index(i2->second);
    if (h1[o] < 0 || h2[o] < 0) {
      rep.add_structural("h-unresolved", t.obj_id(o));
    }
  }
  if (!rep.ok()) return rep;
  for (int o = 0; o < t.n_objects(); ++o) {
    if (t.one_src(h1[o]) != p1o[o] || t.one_tgt(h1[o]) != o ||
        t.one_inverse(h1[o]) < 0) {
      rep.add_axiom("h1-typing", t.obj_id(o));
    }
    if (t.one_src(h2[o]) != p2o[o] || t.one_tgt(h2[o]) != o ||
        t.one_inverse(h2[o]) < 0) {
      rep.add_axiom("h2-typing", t.obj_id(o));
    }
  }
  if (!rep.ok()) return rep;
  for (int o = 0; o < t.n_objects(); ++o) {
    if (p11[h1[o]] != h1[o]) {
      rep.add_axiom("h1-coherence", t.obj_id(o));
    }
    if (t.one_comp(h2[o], p21[h2[o]]) != t.one_identity(o)) {
      rep.add_axiom("h2-cocycle", t.obj_id(o));
    }
  }

  // hf squares: typed, invertible, identity on identities, closed under
  // composition.
  std::vector<int> hf(t.n_one(), -1);
  for (int f = 0; f < t.n_one(); ++f) {
    auto it = c.hf.find(t.one_id(f));
    if (it == c.hf.end()) {
      rep.add_structural("hf-missing", t.one_id(f));
      continue;
    }
    hf[f] = t.two_index(it->second);
    if (hf[f] < 0) rep.add_structural("hf-unresolved", t.one_id(f));
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < t.n_one(); ++f) {
    int want_src = t.one_comp(h2[t.one_tgt(f)], p21[f]);
    int want_tgt = t.one_comp(f, h2[t.one_src(f)]);
    if (t.two_src(hf[f]) != want_src || t.two_tgt(hf[f]) != want_tgt ||
        t.vert_inverse(hf[f]) < 0) {
      rep.add_axiom("hf-typing", t.one_id(f));
    }
  }
  if (!rep.ok()) return rep;
  for (int o = 0; o < t.n_objects(); ++o) {
    if (hf[t.one_identity(o)] != t.two_identity(h2[o])) {
      rep.add_axiom("hf-identity", t.obj_id(o));
    }
  }
  for (int g = 0; g < t.n_one(); ++g) {
    for (int f = 0; f < t.n_one(); ++f) {
      if (t.one_tgt(f) != t.one_src(g)) continue;
      int pasted = t.vert(t.whisker_left(g, hf[f]), t.whisker_right(hf[g], p21[f]));
      if (hf[t.one_comp(g, f)] != pasted) {
        rep.add_axiom("hf-composition", pair_witness(t.one_id(g), t.one_id(f)));
      }
    }
  }
  rep.add_note("hf fixed-point cocycle against psi2: unchecked-condition");
  return rep;
}

BiInvolutive strictify_bicategory(const CoherentDagger2Input& c,
                                  const FlagSelection& flags) {
  TwoCatTable t = require_2table(*c.base, "strictify_bicategory");

  // Flags must cover every object and every 1-morphism.
  if (!flags.objects.empty()) {
    std::set<std::string> flagged(flags.objects.begin(), flags.objects.end());
    for (const auto& o : c.base->objects) {
      if (!flagged.count(o)) {
        throw StructuralError("strictify_bicategory: missing flag on object " + o);
      }
    }
  }
  if (!flags.one_morphisms.empty()) {
    std::set<std::string> flagged(flags.one_morphisms.begin(),
                                  flags.one_morphisms.end());
    for (const auto& f : c.base->one_morphisms) {
      if (!flagged.count(f.id)) {
        throw StructuralError("strictify_bicategory: missing flag on 1-morphism " +
                              f.id);
      }
    }
  }
  {
    ValidationReport rep = validate_coherent_input(c);
    if (!rep.ok()) {
      throw StructuralError("strictify_bicategory: input fails its contract: " +
                            rep.summary());
    }
  }

  auto h1_at = [&](int o) { return t.one_index(c.h1.at(t.obj_id(o))); };
  auto h2_at = [&](int o) { return t.one_index(c.h2.at(t.obj_id(o))); };
  auto psi1_1 = [&](int f) { return t.one_index(c.psi1_on1.at(t.one_id(f))); };
  auto psi1_2 = [&](int x) { return t.two_index(c.psi1_on2.at(t.two_id(x))); };
  auto psi2_2 = [&](int x) { return t.two_index(c.psi2_on2.at(t.two_id(x))); };
  auto hf_at = [&](int f) { return t.two_index(c.hf.at(t.one_id(f))); };

  BiInvolutive out;
  out.base = c.base;

  // f^{†1} = h1_b ∘ psi1(f) ∘ (h1_{b'})^{-1}
  std::vector<int> d1(t.n_one(), -1);
  for (int f = 0; f < t.n_one(); ++f) {
    int b = t.one_src(f);
    int b2 = t.one_tgt(f);
    d1[f] = t.one_comp(h1_at(b), t.one_comp(psi1_1(f), t.one_inverse(h1_at(b2))));
    out.dag1_on1[t.one_id(f)] = t.one_id(d1[f]);
  }
  for (int x = 0; x < t.n_two(); ++x) {
    int b = t.cell_src_obj(x);
    int b2 = t.cell_tgt_obj(x);
    int cell = t.horiz(t.horiz(t.two_identity(h1_at(b)), psi1_2(x)),
                       t.two_identity(t.one_inverse(h1_at(b2))));
    out.dag1_on2[t.two_id(x)] = t.two_id(cell);
  }

  // theta : f => g goes to psi2(theta) conjugated by the hf data and
  // stripped of h2.
  for (int x = 0; x < t.n_two(); ++x) {
    int f = t.two_src(x);
    int g = t.two_tgt(x);
    int b = t.cell_src_obj(x);
    int b2 = t.cell_tgt_obj(x);
    int inner = t.whisker_left(h2_at(b2), psi2_2(x));  // h2 ∘ psi2(g) => h2 ∘ psi2(f)
    int conj = t.vert(hf_at(f), t.vert(inner, t.vert_inverse(hf_at(g))));
    int cell = t.whisker_right(conj, t.one_inverse(h2_at(b)));
    if (cell < 0) {
      throw StructuralError("strictify_bicategory: dag2 cell undefined at " +
                            t.two_id(x));
    }
    out.dag2[t.two_id(x)] = t.two_id(cell);
  }

  for (int f = 0; f < t.n_one(); ++f) {
    if (d1[d1[f]] != f) {
      throw StructuralError(
          "strictify_bicategory: psi1/h1 data not strictly coherent at " +
          t.one_id(f));
    }
    out.phi[t.one_id(f)] = t.two_id(t.two_identity(f));
  }
  return out;
}

CoherentDagger2Input auto_derive_hf(CoherentDagger2Input c) {
  TwoCatTable t = require_2table(*c.base, "auto_derive_hf");
  for (const auto& f : c.base->one_morphisms) {
    if (c.hf.count(f.id)) continue;
    int fi = t.one_index(f.id);
    int h2b = t.one_index(c.h2.at(f.src));
    int h2b2 = t.one_index(c.h2.at(f.tgt));
    int psi_f = t.one_index(c.psi2_on1.at(f.id));
    if (fi == t.one_identity(t.obj_index(f.src)) && f.src == f.tgt) {
      c.hf[f.id] = t.two_id(t.two_identity(h2b));
      continue;
    }
    int want_src = t.one_comp(h2b2, psi_f);
    int want_tgt = t.one_comp(fi, h2b);
    std::vector<int> fillers;
    for (int x = 0; x < t.n_two(); ++x) {
      if (t.two_src(x) == want_src && t.two_tgt(x) == want_tgt &&
          t.vert_inverse(x) >= 0) {
        fillers.push_back(x);
      }
    }
    if (fillers.size() != 1) {
      throw StructuralError("auto_derive_hf: " +
                            std::string(fillers.empty() ? "no" : "ambiguous") +
                            " invertible filler for " + f.id + " (" +
                            std::to_string(fillers.size()) + " candidates)");
    }
    c.hf[f.id] = t.two_id(fillers.front());
  }
  return c;
}

ValidationReport validate_pivotal(const Pivotal& p) {
  ValidationReport rep;
  if (!p.base) {
    rep.add_structural("missing-category", "pivotal with null base");
    return rep;
  }
  auto table = TwoCatTable::build(*p.base, &rep);
  if (!table) return rep;
  const TwoCatTable& t = *table;

  for (const auto& f : p.base->one_morphisms) {
    auto it = p.adjoint_choice.find(f.id);
    if (it == p.adjoint_choice.end()) {
      rep.add_structural("missing-adjoint", f.id);
      continue;
    }
    ValidationReport sub = check_adjunction(*p.base, it->second);
    rep.merge(sub, "adjunction(" + f.id + ")-");
  }
  if (!rep.ok()) return rep;

  auto rr = [&](const std::string& f) -> const std::string& {
    return p.adjoint_choice.at(p.adjoint_choice.at(f).fR).fR;
  };

  std::vector<int> th(t.n_objects(), -1);
  for (int o = 0; o < t.n_objects(); ++o) {
    auto it = p.theta.find(t.obj_id(o));
    if (it == p.theta.end()) {
      rep.add_structural("theta-missing", t.obj_id(o));
      continue;
    }
    th[o] = t.one_index(it->second);
    if (th[o] < 0) {
      rep.add_structural("theta-unresolved", t.obj_id(o));
      continue;
    }
    if (t.one_src(th[o]) != o || t.one_tgt(th[o]) != o || t.one_inverse(th[o]) < 0) {
      rep.add_axiom("theta-typing", t.obj_id(o) + " -> " + it->second);
    }
  }
  if (!rep.ok()) return rep;

  std::vector<int> ta(t.n_one(), -1);
  for (int f = 0; f < t.n_one(); ++f) {
    auto it = p.tau.find(t.one_id(f));
    if (it == p.tau.end()) {
      rep.add_structural("tau-missing", t.one_id(f));
      continue;
    }
    ta[f] = t.two_index(it->second);
    if (ta[f] < 0) {
      rep.add_structural("tau-unresolved", t.one_id(f));
      continue;
    }
    int frr = t.one_index(rr(t.one_id(f)));
    int want_src = t.one_comp(frr, th[t.one_src(f)]);
    int want_tgt = t.one_comp(th[t.one_tgt(f)], f);
    if (t.two_src(ta[f]) != want_src || t.two_tgt(ta[f]) != want_tgt ||
        t.vert_inverse(ta[f]) < 0) {
      rep.add_axiom("tau-typing", t.one_id(f) + " -> " + it->second);
    }
  }
  if (!rep.ok()) return rep;

  // Naturality in f against every 2-cell.
  for (int x = 0; x < t.n_two(); ++x) {
    int f = t.two_src(x);
    int g = t.two_tgt(x);
    const std::string mate1 = mate_right(*p.base, p.adjoint_choice.at(t.one_id(f)),
                                         p.adjoint_choice.at(t.one_id(g)),
                                         t.two_id(x));
    const std::string mate2 = mate_right(
        *p.base, p.adjoint_choice.at(p.adjoint_choice.at(t.one_id(g)).fR),
        p.adjoint_choice.at(p.adjoint_choice.at(t.one_id(f)).fR), mate1);
    int xrr = t.two_index(mate2);
    int lhs = t.vert(t.whisker_left(th[t.cell_tgt_obj(x)], x), ta[f]);
    int rhs = t.vert(ta[g], t.whisker_right(xrr, th[t.cell_src_obj(x)]));
    if (lhs != rhs || lhs < 0) {
      rep.add_axiom("tau-naturality", t.two_id(x));
    }
  }

  // In the strict model the unitor compatibility collapses to
  // tau_{id} = id on theta whenever (id)^{RR} is the identity again.
  for (int o = 0; o < t.n_objects(); ++o) {
    int idb = t.one_identity(o);
    if (t.one_index(rr(t.one_id(idb))) == idb) {
      if (ta[idb] != t.two_identity(th[o])) {
        rep.add_axiom("tau-unitor", t.obj_id(o));
      }
    } else {
      rep.add_note("tau-unitor at " + t.obj_id(o) +
                   ": (id)^{RR} is not the identity; compatibility not checked");
    }
  }

  rep.add_note("unchecked-condition: the quadratic constraint on theta is not checked");
  return rep;
}

StrictDagger hom_dagger(const BiInvolutive& v, const std::string& a,
                        const std::string& b2) {
  StrictDagger out;
  out.base = make_category(hom_category(*v.base, a, b2));
  for (const auto& m : out.base->morphisms) {
    out.dag[m.id] = v.dag2.at(m.id);
  }
  return out;
}

Adjunction transport_adjunction_dag1(const BiInvolutive& v,
                                     const Adjunction& adj) {
  Adjunction out;
  out.f = v.dag1_on1.at(adj.fR);
  out.fR = v.dag1_on1.at(adj.f);
  out.etaR = v.dag1_on2.at(adj.etaR);
  out.epsR = v.dag1_on2.at(adj.epsR);
  return out;
}

}  // namespace daggerkit
