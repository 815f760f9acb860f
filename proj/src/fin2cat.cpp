#include "daggerkit/fin2cat.hpp"

#include <algorithm>

namespace daggerkit {

TwoCatPtr make_2category(Fin2Category b) {
  return std::make_shared<const Fin2Category>(std::move(b));
}

int TwoCatTable::obj_index(const std::string& id) const {
  auto it = obj_index_.find(id);
  return it == obj_index_.end() ? -1 : it->second;
}
int TwoCatTable::one_index(const std::string& id) const {
  auto it = one_index_.find(id);
  return it == one_index_.end() ? -1 : it->second;
}
int TwoCatTable::two_index(const std::string& id) const {
  auto it = two_index_.find(id);
  return it == two_index_.end() ? -1 : it->second;
}

std::optional<TwoCatTable> TwoCatTable::build(const Fin2Category& b,
                                              ValidationReport* report) {
  TwoCatTable t;
  ValidationReport local;
  ValidationReport& rep = report ? *report : local;
  bool ok = true;

  for (const auto& o : b.objects) {
    if (t.obj_index_.count(o)) {
      rep.add_structural("duplicate-object", o);
      ok = false;
      continue;
    }
    t.obj_index_[o] = static_cast<int>(t.objs_.size());
    t.objs_.push_back(o);
  }
  for (const auto& m : b.one_morphisms) {
    if (t.one_index_.count(m.id)) {
      rep.add_structural("duplicate-one-morphism", m.id);
      ok = false;
      continue;
    }
    int s = t.obj_index(m.src);
    int g = t.obj_index(m.tgt);
    if (s < 0 || g < 0) {
      rep.add_structural("unresolved-object", m.id);
      ok = false;
      continue;
    }
    t.one_index_[m.id] = static_cast<int>(t.ones_.size());
    t.ones_.push_back(m.id);
    t.one_src_.push_back(s);
    t.one_tgt_.push_back(g);
  }
  for (const auto& c : b.two_morphisms) {
    if (t.two_index_.count(c.id)) {
      rep.add_structural("duplicate-two-morphism", c.id);
      ok = false;
      continue;
    }
    int s = t.one_index(c.src);
    int g = t.one_index(c.tgt);
    if (s < 0 || g < 0) {
      rep.add_structural("unresolved-one-morphism", c.id);
      ok = false;
      continue;
    }
    t.two_index_[c.id] = static_cast<int>(t.twos_.size());
    t.twos_.push_back(c.id);
    t.two_src_.push_back(s);
    t.two_tgt_.push_back(g);
  }
  if (!ok) return std::nullopt;

  const int n1 = t.n_one();
  const int n2 = t.n_two();
  t.one_identity_.assign(t.n_objects(), -1);
  for (const auto& [obj, mor] : b.one_identities) {
    int o = t.obj_index(obj);
    int m = t.one_index(mor);
    if (o < 0 || m < 0) {
      rep.add_structural("unresolved-one-identity", obj + " -> " + mor);
      ok = false;
      continue;
    }
    t.one_identity_[o] = m;
  }
  for (int o = 0; o < t.n_objects(); ++o) {
    if (t.one_identity_[o] < 0) {
      rep.add_structural("missing-one-identity", t.objs_[o]);
      ok = false;
    }
  }
  t.two_identity_.assign(n1, -1);
  for (const auto& [one, two] : b.two_identities) {
    int f = t.one_index(one);
    int c = t.two_index(two);
    if (f < 0 || c < 0) {
      rep.add_structural("unresolved-two-identity", one + " -> " + two);
      ok = false;
      continue;
    }
    t.two_identity_[f] = c;
  }
  for (int f = 0; f < n1; ++f) {
    if (t.two_identity_[f] < 0) {
      rep.add_structural("missing-two-identity", t.ones_[f]);
      ok = false;
    }
  }
  if (!ok) return std::nullopt;

  t.one_comp_.assign(static_cast<size_t>(n1) * n1, -1);
  for (const auto& [pair, val] : b.one_compose) {
    int g = t.one_index(pair.first);
    int f = t.one_index(pair.second);
    int v = t.one_index(val);
    if (g < 0 || f < 0 || v < 0) {
      rep.add_structural("unresolved-one-compose",
                         pair_witness(pair.first, pair.second));
      ok = false;
      continue;
    }
    t.one_comp_[static_cast<size_t>(g) * n1 + f] = v;
  }
  t.vert_.assign(static_cast<size_t>(n2) * n2, -1);
  for (const auto& [pair, val] : b.vertical) {
    int g = t.two_index(pair.first);
    int f = t.two_index(pair.second);
    int v = t.two_index(val);
    if (g < 0 || f < 0 || v < 0) {
      rep.add_structural("unresolved-vertical",
                         pair_witness(pair.first, pair.second));
      ok = false;
      continue;
    }
    t.vert_[static_cast<size_t>(g) * n2 + f] = v;
  }
  t.horiz_.assign(static_cast<size_t>(n2) * n2, -1);
  for (const auto& [pair, val] : b.horizontal) {
    int g = t.two_index(pair.first);
    int f = t.two_index(pair.second);
    int v = t.two_index(val);
    if (g < 0 || f < 0 || v < 0) {
      rep.add_structural("unresolved-horizontal",
                         pair_witness(pair.first, pair.second));
      ok = false;
      continue;
    }
    t.horiz_[static_cast<size_t>(g) * n2 + f] = v;
  }
  if (!ok) return std::nullopt;

  t.one_inverse_.assign(n1, -1);
  for (int f = 0; f < n1; ++f) {
    for (int g = 0; g < n1; ++g) {
      if (t.one_tgt_[g] != t.one_src_[f] || t.one_src_[g] != t.one_tgt_[f]) {
        continue;
      }
      if (t.one_comp(g, f) == t.one_identity_[t.one_src_[f]] &&
          t.one_comp(f, g) == t.one_identity_[t.one_tgt_[f]]) {
        t.one_inverse_[f] = g;
        break;
      }
    }
  }
  t.vert_inverse_.assign(n2, -1);
  for (int a = 0; a < n2; ++a) {
    for (int c = 0; c < n2; ++c) {
      if (t.two_src_[c] != t.two_tgt_[a] || t.two_tgt_[c] != t.two_src_[a]) {
        continue;
      }
      if (t.vert(c, a) == t.two_identity_[t.two_src_[a]] &&
          t.vert(a, c) == t.two_identity_[t.two_tgt_[a]]) {
        t.vert_inverse_[a] = c;
        break;
      }
    }
  }
  return t;
}

ValidationReport validate_2category(const Fin2Category& b) {
  ValidationReport rep;
  auto table = TwoCatTable::build(b, &rep);
  if (!table) return rep;
  const TwoCatTable& t = *table;
  const int n1 = t.n_one();
  const int n2 = t.n_two();

  // 1-skeleton is a valid category.
  {
    FinCategory one;
    one.objects = b.objects;
    for (const auto& m : b.one_morphisms) one.morphisms.push_back({m.id, m.src, m.tgt});
    one.identities = b.one_identities;
    one.compose = b.one_compose;
    ValidationReport sub = validate_category(one);
    rep.merge(sub, "one-");
  }
  if (!rep.ok()) return rep;

  // 2-cells connect parallel 1-cells; identity 2-cells are endo.
  for (int c = 0; c < n2; ++c) {
    int f = t.two_src(c);
    int g = t.two_tgt(c);
    if (t.one_src(f) != t.one_src(g) || t.one_tgt(f) != t.one_tgt(g)) {
      rep.add_axiom("two-cell-parallel", t.two_id(c));
    }
  }
  for (int f = 0; f < n1; ++f) {
    int c = t.two_identity(f);
    if (t.two_src(c) != f || t.two_tgt(c) != f) {
      rep.add_axiom("two-identity-typing", t.one_id(f));
    }
  }
  if (!rep.ok()) return rep;

  // Vertical composition: total exactly on composable pairs, well typed,
  // unital, associative.
  for (int c = 0; c < n2; ++c) {
    for (int a = 0; a < n2; ++a) {
      int v = t.vert(c, a);
      bool composable = t.two_tgt(a) == t.two_src(c);
      if (composable) {
        if (v < 0) {
          rep.add_axiom("vertical-missing", pair_witness(t.two_id(c), t.two_id(a)));
        } else if (t.two_src(v) != t.two_src(a) || t.two_tgt(v) != t.two_tgt(c)) {
          rep.add_axiom("vertical-typing", pair_witness(t.two_id(c), t.two_id(a)));
        }
      } else if (v >= 0) {
        rep.add_axiom("vertical-spurious", pair_witness(t.two_id(c), t.two_id(a)));
      }
    }
  }
  if (!rep.ok()) return rep;
  for (int a = 0; a < n2; ++a) {
    if (t.vert(a, t.two_identity(t.two_src(a))) != a ||
        t.vert(t.two_identity(t.two_tgt(a)), a) != a) {
      rep.add_axiom("vertical-unit", t.two_id(a));
    }
  }
  for (int c = 0; c < n2; ++c) {
    for (int bb = 0; bb < n2; ++bb) {
      if (t.two_tgt(bb) != t.two_src(c)) continue;
      for (int a = 0; a < n2; ++a) {
        if (t.two_tgt(a) != t.two_src(bb)) continue;
        if (t.vert(c, t.vert(bb, a)) != t.vert(t.vert(c, bb), a)) {
          rep.add_axiom("vertical-associativity",
                        "(" + t.two_id(c) + ", " + t.two_id(bb) + ", " + t.two_id(a) + ")");
        }
      }
    }
  }

  // Horizontal composition: totality, typing, associativity, units,
  // functoriality (identities and interchange).
  auto hcomposable = [&](int beta, int alpha) {
    return t.cell_tgt_obj(alpha) == t.cell_src_obj(beta);
  };
  for (int beta = 0; beta < n2; ++beta) {
    for (int alpha = 0; alpha < n2; ++alpha) {
      int v = t.horiz(beta, alpha);
      if (hcomposable(beta, alpha)) {
        if (v < 0) {
          rep.add_axiom("horizontal-missing",
                        pair_witness(t.two_id(beta), t.two_id(alpha)));
        } else if (t.two_src(v) != t.one_comp(t.two_src(beta), t.two_src(alpha)) ||
                   t.two_tgt(v) != t.one_comp(t.two_tgt(beta), t.two_tgt(alpha))) {
          rep.add_axiom("horizontal-typing",
                        pair_witness(t.two_id(beta), t.two_id(alpha)));
        }
      } else if (v >= 0) {
        rep.add_axiom("horizontal-spurious",
                      pair_witness(t.two_id(beta), t.two_id(alpha)));
      }
    }
  }
  if (!rep.ok()) return rep;
  for (int a = 0; a < n2; ++a) {
    int l = t.two_identity(t.one_identity(t.cell_tgt_obj(a)));
    int r = t.two_identity(t.one_identity(t.cell_src_obj(a)));
    if (t.horiz(l, a) != a || t.horiz(a, r) != a) {
      rep.add_axiom("horizontal-unit", t.two_id(a));
    }
  }
  for (int g = 0; g < n1; ++g) {
    for (int f = 0; f < n1; ++f) {
      if (t.one_tgt(f) != t.one_src(g)) continue;
      if (t.horiz(t.two_identity(g), t.two_identity(f)) !=
          t.two_identity(t.one_comp(g, f))) {
        rep.add_axiom("horizontal-identity", pair_witness(t.one_id(g), t.one_id(f)));
      }
    }
  }
  for (int c = 0; c < n2; ++c) {
    for (int bb = 0; bb < n2; ++bb) {
      if (!hcomposable(c, bb)) continue;
      int cb = t.horiz(c, bb);
      for (int a = 0; a < n2; ++a) {
        if (!hcomposable(bb, a)) continue;
        if (t.horiz(c, t.horiz(bb, a)) != t.horiz(cb, a)) {
          rep.add_axiom("horizontal-associativity",
                        "(" + t.two_id(c) + ", " + t.two_id(bb) + ", " + t.two_id(a) + ")");
        }
      }
    }
  }

  // Interchange: (beta' ∘ beta) * (alpha' ∘ alpha) =
  //              (beta' * alpha') ∘ (beta * alpha).
  for (int beta2 = 0; beta2 < n2; ++beta2) {
    for (int beta = 0; beta < n2; ++beta) {
      if (t.two_tgt(beta) != t.two_src(beta2)) continue;
      int bv = t.vert(beta2, beta);
      for (int alpha2 = 0; alpha2 < n2; ++alpha2) {
        if (!hcomposable(beta2, alpha2)) continue;
        for (int alpha = 0; alpha < n2; ++alpha) {
          if (t.two_tgt(alpha) != t.two_src(alpha2)) continue;
          int lhs = t.horiz(bv, t.vert(alpha2, alpha));
          int rhs = t.vert(t.horiz(beta2, alpha2), t.horiz(beta, alpha));
          if (lhs != rhs) {
            rep.add_axiom("interchange",
                          "(" + t.two_id(beta2) + ", " + t.two_id(beta) + ", " +
                              t.two_id(alpha2) + ", " + t.two_id(alpha) + ")");
          }
        }
      }
    }
  }
  return rep;
}

FinCategory hom_category(const Fin2Category& b, const std::string& a,
                         const std::string& b2) {
  auto table = TwoCatTable::build(b);
  if (!table) throw StructuralError("hom_category: tables do not resolve");
  const TwoCatTable& t = *table;
  int ai = t.obj_index(a);
  int bi = t.obj_index(b2);
  if (ai < 0 || bi < 0) {
    throw StructuralError("hom_category: unknown object " + (ai < 0 ? a : b2));
  }

  FinCategory out;
  std::vector<bool> keep(t.n_one(), false);
  for (int f = 0; f < t.n_one(); ++f) {
    if (t.one_src(f) == ai && t.one_tgt(f) == bi) {
      keep[f] = true;
      out.objects.push_back(t.one_id(f));
      out.identities[t.one_id(f)] = t.two_id(t.two_identity(f));
    }
  }
  std::vector<bool> keep2(t.n_two(), false);
  for (int c = 0; c < t.n_two(); ++c) {
    if (keep[t.two_src(c)] && keep[t.two_tgt(c)]) {
      keep2[c] = true;
      out.morphisms.push_back(
          {t.two_id(c), t.one_id(t.two_src(c)), t.one_id(t.two_tgt(c))});
    }
  }
  for (const auto& [pair, val] : b.vertical) {
    if (keep2[t.two_index(pair.first)] && keep2[t.two_index(pair.second)]) {
      out.compose[pair] = val;
    }
  }
  return out;
}

namespace {

TwoCatTable require_2table(const Fin2Category& b, const char* who) {
  auto t = TwoCatTable::build(b);
  if (!t) throw StructuralError(std::string(who) + ": tables do not resolve");
  return std::move(*t);
}

}  // namespace

ValidationReport check_adjunction(const Fin2Category& b, const Adjunction& adj) {
  ValidationReport rep;
  auto table = TwoCatTable::build(b, &rep);
  if (!table) return rep;
  const TwoCatTable& t = *table;

  int f = t.one_index(adj.f);
  int fr = t.one_index(adj.fR);
  int eta = t.two_index(adj.etaR);
  int eps = t.two_index(adj.epsR);
  if (f < 0 || fr < 0 || eta < 0 || eps < 0) {
    rep.add_structural("unresolved-adjunction-data",
                       adj.f + "/" + adj.fR + "/" + adj.etaR + "/" + adj.epsR);
    return rep;
  }
  int x = t.one_src(f);
  int y = t.one_tgt(f);
  if (t.one_src(fr) != y || t.one_tgt(fr) != x) {
    rep.add_axiom("adjoint-typing", adj.fR);
    return rep;
  }
  if (t.two_src(eta) != t.one_identity(x) || t.two_tgt(eta) != t.one_comp(fr, f)) {
    rep.add_axiom("unit-typing", adj.etaR);
    return rep;
  }
  if (t.two_src(eps) != t.one_comp(f, fr) || t.two_tgt(eps) != t.one_identity(y)) {
    rep.add_axiom("counit-typing", adj.epsR);
    return rep;
  }

  // (epsR * f) ∘ (f * etaR) = id_f
  int zig1 = t.vert(t.whisker_right(eps, f), t.whisker_left(f, eta));
  if (zig1 != t.two_identity(f)) {
    rep.add_axiom("zig-zag-1", adj.f + ": got " + (zig1 >= 0 ? t.two_id(zig1) : "undefined"));
  }
  // (fR * epsR) ∘ (etaR * fR) = id_fR
  int zig2 = t.vert(t.whisker_left(fr, eps), t.whisker_right(eta, fr));
  if (zig2 != t.two_identity(fr)) {
    rep.add_axiom("zig-zag-2", adj.fR + ": got " + (zig2 >= 0 ? t.two_id(zig2) : "undefined"));
  }
  return rep;
}

std::vector<Adjunction> find_right_adjoints(const Fin2Category& b,
                                            const std::string& f) {
  TwoCatTable t = require_2table(b, "find_right_adjoints");
  int fi = t.one_index(f);
  if (fi < 0) throw StructuralError("find_right_adjoints: unknown 1-morphism " + f);
  int x = t.one_src(fi);
  int y = t.one_tgt(fi);

  std::vector<Adjunction> out;
  for (int fr = 0; fr < t.n_one(); ++fr) {
    if (t.one_src(fr) != y || t.one_tgt(fr) != x) continue;
    int rf = t.one_comp(fr, fi);
    int fr2 = t.one_comp(fi, fr);
    for (int eta = 0; eta < t.n_two(); ++eta) {
      if (t.two_src(eta) != t.one_identity(x) || t.two_tgt(eta) != rf) continue;
      for (int eps = 0; eps < t.n_two(); ++eps) {
        if (t.two_src(eps) != fr2 || t.two_tgt(eps) != t.one_identity(y)) continue;
        int zig1 = t.vert(t.whisker_right(eps, fi), t.whisker_left(fi, eta));
        if (zig1 != t.two_identity(fi)) continue;
        int zig2 = t.vert(t.whisker_left(fr, eps), t.whisker_right(eta, fr));
        if (zig2 != t.two_identity(fr)) continue;
        out.push_back({f, t.one_id(fr), t.two_id(eta), t.two_id(eps)});
      }
    }
  }

  // Adjoints are unique up to isomorphism; two non-isomorphic hits would mean
  // the input 2-category is invalid.
  for (size_t i = 1; i < out.size(); ++i) {
    int r0 = t.one_index(out[0].fR);
    int ri = t.one_index(out[i].fR);
    bool iso = false;
    for (int c = 0; c < t.n_two() && !iso; ++c) {
      if (t.two_src(c) == r0 && t.two_tgt(c) == ri && t.vert_inverse(c) >= 0) {
        iso = true;
      }
    }
    if (!iso) {
      throw Error("find_right_adjoints: non-isomorphic right adjoints " +
                  out[0].fR + " and " + out[i].fR + " for " + f);
    }
  }
  return out;
}

std::optional<Adjunction> find_right_adjoint(const Fin2Category& b,
                                             const std::string& f) {
  auto all = find_right_adjoints(b, f);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<Adjunction> find_left_adjoints(const Fin2Category& b,
                                           const std::string& f) {
  TwoCatTable t = require_2table(b, "find_left_adjoints");
  int fi = t.one_index(f);
  if (fi < 0) throw StructuralError("find_left_adjoints: unknown 1-morphism " + f);
  int x = t.one_src(fi);
  int y = t.one_tgt(fi);

  std::vector<Adjunction> out;
  for (int fl = 0; fl < t.n_one(); ++fl) {
    if (t.one_src(fl) != y || t.one_tgt(fl) != x) continue;
    // fl ⊣ f: unit id_y => f ∘ fl, counit fl ∘ f => id_x.
    int ffl = t.one_comp(fi, fl);
    int flf = t.one_comp(fl, fi);
    for (int eta = 0; eta < t.n_two(); ++eta) {
      if (t.two_src(eta) != t.one_identity(y) || t.two_tgt(eta) != ffl) continue;
      for (int eps = 0; eps < t.n_two(); ++eps) {
        if (t.two_src(eps) != flf || t.two_tgt(eps) != t.one_identity(x)) continue;
        int zig1 = t.vert(t.whisker_right(eps, fl), t.whisker_left(fl, eta));
        if (zig1 != t.two_identity(fl)) continue;
        int zig2 = t.vert(t.whisker_left(fi, eps), t.whisker_right(eta, fi));
        if (zig2 != t.two_identity(fi)) continue;
        out.push_back({t.one_id(fl), f, t.two_id(eta), t.two_id(eps)});
      }
    }
  }
  for (size_t i = 1; i < out.size(); ++i) {
    int l0 = t.one_index(out[0].f);
    int li = t.one_index(out[i].f);
    bool iso = false;
    for (int c = 0; c < t.n_two() && !iso; ++c) {
      if (t.two_src(c) == l0 && t.two_tgt(c) == li && t.vert_inverse(c) >= 0) {
        iso = true;
      }
    }
    if (!iso) {
      throw Error("find_left_adjoints: non-isomorphic left adjoints " +
                  out[0].f + " and " + out[i].f + " for " + f);
    }
  }
  return out;
}

std::optional<Adjunction> find_left_adjoint(const Fin2Category& b,
                                            const std::string& f) {
  auto all = find_left_adjoints(b, f);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::string compare_right_adjoints(const Fin2Category& b, const Adjunction& a1,
                                   const Adjunction& a2) {
  TwoCatTable t = require_2table(b, "compare_right_adjoints");
  if (a1.f != a2.f) {
    throw StructuralError("compare_right_adjoints: adjunctions of different morphisms");
  }
  int r1 = t.one_index(a1.fR);
  int r2 = t.one_index(a2.fR);
  int eta2 = t.two_index(a2.etaR);
  int eps1 = t.two_index(a1.epsR);
  // (r2 * eps1) ∘ (eta2 * r1) : r1 => r2
  int step1 = t.whisker_right(eta2, r1);
  int step2 = t.whisker_left(r2, eps1);
  int out = t.vert(step2, step1);
  if (out < 0) throw Error("compare_right_adjoints: comparison undefined");
  return t.two_id(out);
}

Adjunction compose_adjunctions(const Fin2Category& b, const Adjunction& outer,
                               const Adjunction& inner) {
  TwoCatTable t = require_2table(b, "compose_adjunctions");
  int g = t.one_index(outer.f);
  int f = t.one_index(inner.f);
  if (t.one_src(g) != t.one_tgt(f)) {
    throw StructuralError("compose_adjunctions: factors not composable");
  }
  int gr = t.one_index(outer.fR);
  int fr = t.one_index(inner.fR);
  int eta_f = t.two_index(inner.etaR);
  int eta_g = t.two_index(outer.etaR);
  int eps_f = t.two_index(inner.epsR);
  int eps_g = t.two_index(outer.epsR);

  // unit: (fR * etaG * f) ∘ etaF
  int unit = t.vert(t.whisker_right(t.whisker_left(fr, eta_g), f), eta_f);
  // counit: epsG ∘ (g * epsF * gR)
  int counit = t.vert(eps_g, t.whisker_right(t.whisker_left(g, eps_f), gr));
  if (unit < 0 || counit < 0) {
    throw Error("compose_adjunctions: composite cells undefined");
  }
  Adjunction out;
  out.f = t.one_id(t.one_comp(g, f));
  out.fR = t.one_id(t.one_comp(fr, gr));
  out.etaR = t.two_id(unit);
  out.epsR = t.two_id(counit);
  return out;
}

std::string mate_right(const Fin2Category& b, const Adjunction& adj_f,
                       const Adjunction& adj_g, const std::string& theta) {
  TwoCatTable t = require_2table(b, "mate_right");
  int th = t.two_index(theta);
  int f = t.one_index(adj_f.f);
  int g = t.one_index(adj_g.f);
  if (th < 0 || t.two_src(th) != f || t.two_tgt(th) != g) {
    throw StructuralError("mate_right: theta must be a 2-cell adj_f.f => adj_g.f");
  }
  int fr = t.one_index(adj_f.fR);
  int gr = t.one_index(adj_g.fR);
  int eta_f = t.two_index(adj_f.etaR);
  int eps_g = t.two_index(adj_g.epsR);

  // gR => fR f gR => fR g gR => fR
  int step1 = t.whisker_right(eta_f, gr);
  int step2 = t.whisker_right(t.whisker_left(fr, th), gr);
  int step3 = t.whisker_left(fr, eps_g);
  int out = t.vert(step3, t.vert(step2, step1));
  if (out < 0) throw Error("mate_right: mate undefined");
  return t.two_id(out);
}

namespace {

// Transport an adjunction along an invertible 2-cell theta : l => l2 between
// left adjoints. The right adjoint and its witnesses follow theta.
Adjunction transport_left(const Fin2Category& b, const TwoCatTable& t,
                          const Adjunction& adj, const std::string& l2,
                          int theta) {
  int r = t.one_index(adj.fR);
  int eta = t.two_index(adj.etaR);
  int eps = t.two_index(adj.epsR);
  int theta_inv = t.vert_inverse(theta);
  if (theta_inv < 0) throw Error("transport_left: theta is not invertible");

  int unit = t.vert(t.whisker_left(r, theta), eta);
  int counit = t.vert(eps, t.whisker_right(theta_inv, r));
  if (unit < 0 || counit < 0) throw Error("transport_left: cells undefined");
  (void)b;
  return {l2, adj.fR, t.two_id(unit), t.two_id(counit)};
}

}  // namespace

DoubleRightDual double_right_dual(
    const Fin2Category& b, const std::map<std::string, Adjunction>& choice) {
  TwoCatTable t = require_2table(b, "double_right_dual");

  for (const auto& m : b.one_morphisms) {
    auto it = choice.find(m.id);
    if (it == choice.end()) {
      throw StructuralError("double_right_dual: no adjoint chosen for " + m.id);
    }
    if (!check_adjunction(b, it->second).ok()) {
      throw StructuralError("double_right_dual: chosen adjunction for " + m.id +
                            " fails the zig-zag identities");
    }
  }

  DoubleRightDual out;
  for (const auto& m : b.one_morphisms) {
    out.on_one[m.id] = choice.at(choice.at(m.id).fR).fR;
  }

  auto require_invertible = [&](const std::string& cell, const std::string& ctx) {
    if (t.vert_inverse(t.two_index(cell)) < 0) {
      throw Error("double_right_dual: comparison cell not invertible at " + ctx);
    }
    return cell;
  };

  // (id_b)^{RR} => id_b via the trivial adjunction of the identity.
  for (const auto& o : b.objects) {
    const std::string idb = b.one_identities.at(o);
    Adjunction trivial{idb, idb, b.two_identities.at(idb), b.two_identities.at(idb)};
    const Adjunction& a = choice.at(idb);
    std::string theta = compare_right_adjoints(b, a, trivial);  // a.fR => id_b
    Adjunction lifted = transport_left(b, t, choice.at(a.fR), idb,
                                       t.two_index(theta));
    out.identity_comparison[o] =
        require_invertible(compare_right_adjoints(b, lifted, trivial), o);
  }

  // (g∘f)^{RR} => g^{RR} ∘ f^{RR} through the composite adjunctions.
  for (const auto& gm : b.one_morphisms) {
    for (const auto& fm : b.one_morphisms) {
      if (fm.tgt != gm.src) continue;
      const Adjunction& af = choice.at(fm.id);
      const Adjunction& ag = choice.at(gm.id);
      const std::string gf = b.one_compose.at({gm.id, fm.id});
      const Adjunction& agf = choice.at(gf);

      Adjunction composite = compose_adjunctions(b, ag, af);
      // (gf)^R => fR ∘ gR
      std::string theta = compare_right_adjoints(b, agf, composite);
      Adjunction lifted = transport_left(b, t, choice.at(agf.fR), composite.fR,
                                         t.two_index(theta));
      Adjunction d = compose_adjunctions(b, choice.at(af.fR), choice.at(ag.fR));
      out.composition_comparison[{gm.id, fm.id}] = require_invertible(
          compare_right_adjoints(b, lifted, d), pair_witness(gm.id, fm.id));
    }
  }
  return out;
}

}  // namespace daggerkit
