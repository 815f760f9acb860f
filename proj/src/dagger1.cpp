#include "daggerkit/dagger1.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

namespace daggerkit {

namespace {

CatTable require_table(const FinCategory& c, const char* who) {
  auto t = CatTable::build(c);
  if (!t) throw StructuralError(std::string(who) + ": category tables do not resolve");
  return std::move(*t);
}

}  // namespace

AntiInvolutive make_anti_involutive(CatPtr base, FinFunctor D,
                                    std::map<std::string, std::string> eta) {
  AntiInvolutive a;
  a.base = base;
  a.D = std::move(D);
  NatTransform nt;
  nt.source_functor = compose_functors(a.D, a.D);
  nt.target_functor = identity_functor(base);
  nt.components = std::move(eta);
  a.eta = std::move(nt);
  return a;
}

AntiInvolutive anti_involutive_of(const StrictDagger& d) {
  FinFunctor D;
  D.source = d.base;
  D.target = d.base;
  D.contravariant = true;
  for (const auto& o : d.base->objects) D.obj_map[o] = o;
  D.mor_map = d.dag;
  std::map<std::string, std::string> eta;
  for (const auto& o : d.base->objects) eta[o] = d.base->identities.at(o);
  return make_anti_involutive(d.base, std::move(D), std::move(eta));
}

ValidationReport validate_strict_dagger(const StrictDagger& d) {
  ValidationReport rep;
  auto table = CatTable::build(*d.base, &rep);
  if (!table) return rep;
  const CatTable& t = *table;
  const int nm = t.n_morphisms();

  std::vector<int> dg(nm, -1);
  for (int m = 0; m < nm; ++m) {
    auto it = d.dag.find(t.mor_id(m));
    if (it == d.dag.end()) {
      rep.add_structural("dagger-missing", t.mor_id(m));
      continue;
    }
    dg[m] = t.mor_index(it->second);
    if (dg[m] < 0) {
      rep.add_structural("dagger-unresolved", t.mor_id(m) + " -> " + it->second);
    }
  }
  if (!rep.ok()) return rep;

  for (int m = 0; m < nm; ++m) {
    if (t.src(dg[m]) != t.tgt(m) || t.tgt(dg[m]) != t.src(m)) {
      rep.add_axiom("dagger-typing", t.mor_id(m) + " -> " + t.mor_id(dg[m]));
    }
  }
  if (!rep.ok()) return rep;

  for (int m = 0; m < nm; ++m) {
    if (dg[dg[m]] != m) {
      rep.add_axiom("dagger-involution", t.mor_id(m));
    }
  }
  for (int o = 0; o < t.n_objects(); ++o) {
    if (dg[t.identity(o)] != t.identity(o)) {
      rep.add_axiom("dagger-identity", t.obj_id(o));
    }
  }
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      if (!t.composable(g, f)) continue;
      if (dg[t.comp(g, f)] != t.comp(dg[f], dg[g])) {
        rep.add_axiom("dagger-contravariance",
                      pair_witness(t.mor_id(g), t.mor_id(f)));
      }
    }
  }
  return rep;
}

std::vector<std::string> unitaries(const StrictDagger& d) {
  CatTable t = require_table(*d.base, "unitaries");
  std::vector<std::string> out;
  for (int m = 0; m < t.n_morphisms(); ++m) {
    if (!t.is_iso(m)) continue;
    if (t.mor_index(d.dag.at(t.mor_id(m))) == t.inverse(m)) {
      out.push_back(t.mor_id(m));
    }
  }
  return out;
}

FlaggedDagger coherentify(const StrictDagger& d) {
  FlaggedDagger out;
  out.anti = anti_involutive_of(d);

  const auto us = unitaries(d);
  std::set<std::string> uset(us.begin(), us.end());

  FinCategory c0;
  c0.objects = d.base->objects;
  c0.identities = d.base->identities;
  for (const auto& m : d.base->morphisms) {
    if (uset.count(m.id)) c0.morphisms.push_back(m);
  }
  for (const auto& [pair, val] : d.base->compose) {
    if (uset.count(pair.first) && uset.count(pair.second)) {
      c0.compose[pair] = val;
    }
  }
  out.c0 = std::move(c0);
  for (const auto& o : d.base->objects) {
    out.flag_obj[o] = FixedPoint{o, d.base->identities.at(o)};
  }
  for (const auto& u : us) out.flag_mor[u] = u;
  return out;
}

ValidationReport validate_anti_involutive(const AntiInvolutive& a) {
  ValidationReport rep;
  if (!a.base || !a.D.source || !a.D.target) {
    rep.add_structural("missing-category", "anti-involutive with null category");
    return rep;
  }
  if (!same_category(*a.D.source, *a.base) || !same_category(*a.D.target, *a.base)) {
    rep.add_structural("not-endofunctor", "D must map base to base");
    return rep;
  }
  if (!a.D.contravariant) {
    rep.add_structural("variance", "D must be contravariant");
    return rep;
  }
  {
    ValidationReport sub = validate_functor(a.D);
    rep.merge(sub, "D-");
  }
  if (!rep.ok()) return rep;

  NatTransform nt;
  nt.source_functor = compose_functors(a.D, a.D);
  nt.target_functor = identity_functor(a.base);
  nt.components = a.eta.components;
  {
    ValidationReport sub = check_nat_transform(nt);
    rep.merge(sub, "eta-");
  }
  if (!rep.ok()) return rep;

  CatTable t = require_table(*a.base, "validate_anti_involutive");
  for (const auto& x : a.base->objects) {
    int e = t.mor_index(a.eta_at(x));
    if (!t.is_iso(e)) {
      rep.add_axiom("eta-invertible", x + " -> " + a.eta_at(x));
    }
  }
  if (!rep.ok()) return rep;

  // eta_{x^†}^{-1} = (eta_x)^†
  for (const auto& x : a.base->objects) {
    int lhs = t.inverse(t.mor_index(a.eta_at(a.d_obj(x))));
    int rhs = t.mor_index(a.d_mor(a.eta_at(x)));
    if (lhs != rhs) {
      rep.add_axiom("eta-coherence", x);
    }
  }
  return rep;
}

int FixedPointGroupoid::find_point(const FixedPoint& p) const {
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i] == p) return static_cast<int>(i);
  }
  return -1;
}

bool FixedPointGroupoid::has_morphism(int from, int to) const {
  for (const auto& m : morphisms) {
    if (m.from == from && m.to == to) return true;
  }
  return false;
}

std::string FixedPointGroupoid::morphism_id(const std::string& u,
                                            const FixedPoint& from,
                                            const FixedPoint& to) {
  return "(" + u + "|" + from.id() + "->" + to.id() + ")";
}

FinCategory FixedPointGroupoid::to_category() const {
  FinCategory out;
  CatTable t = require_table(*base, "FixedPointGroupoid::to_category");
  for (const auto& p : points) out.objects.push_back(p.id());
  for (const auto& m : morphisms) {
    out.morphisms.push_back(
        {morphism_id(m.u, points[m.from], points[m.to]), points[m.from].id(),
         points[m.to].id()});
  }
  for (const auto& p : points) {
    out.identities[p.id()] = morphism_id(base->identities.at(p.obj), p, p);
  }
  for (const auto& m2 : morphisms) {
    for (const auto& m1 : morphisms) {
      if (m1.to != m2.from) continue;
      int c = t.comp(t.mor_index(m2.u), t.mor_index(m1.u));
      out.compose[{morphism_id(m2.u, points[m2.from], points[m2.to]),
                   morphism_id(m1.u, points[m1.from], points[m1.to])}] =
          morphism_id(t.mor_id(c), points[m1.from], points[m2.to]);
    }
  }
  return out;
}

FixedPointGroupoid fixed_points(const AntiInvolutive& a) {
  CatTable t = require_table(*a.base, "fixed_points");
  FixedPointGroupoid out;
  out.base = a.base;

  // Points: isomorphisms h : x^† -> x with h = eta_x ∘ h^†.
  for (const auto& x : a.base->objects) {
    int xd = t.obj_index(a.d_obj(x));
    int xi = t.obj_index(x);
    int eta = t.mor_index(a.eta_at(x));
    for (int h = 0; h < t.n_morphisms(); ++h) {
      if (t.src(h) != xd || t.tgt(h) != xi || !t.is_iso(h)) continue;
      int hd = t.mor_index(a.d_mor(t.mor_id(h)));
      if (t.comp(eta, hd) == h) {
        out.points.push_back({x, t.mor_id(h)});
      }
    }
  }

  // Morphisms: isos u with u ∘ h_from = h_to ∘ (u^†)^{-1}.
  const int np = static_cast<int>(out.points.size());
  for (int p = 0; p < np; ++p) {
    for (int q = 0; q < np; ++q) {
      int ps = t.obj_index(out.points[p].obj);
      int qs = t.obj_index(out.points[q].obj);
      int hp = t.mor_index(out.points[p].h);
      int hq = t.mor_index(out.points[q].h);
      for (int u = 0; u < t.n_morphisms(); ++u) {
        if (t.src(u) != ps || t.tgt(u) != qs || !t.is_iso(u)) continue;
        int ud = t.mor_index(a.d_mor(t.mor_id(u)));
        if (t.comp(u, hp) == t.comp(hq, t.inverse(ud))) {
          out.morphisms.push_back({t.mor_id(u), p, q});
        }
      }
    }
  }
  return out;
}

ValidationReport validate_flagged_dagger(const FlaggedDagger& f) {
  ValidationReport rep;
  {
    ValidationReport sub = validate_anti_involutive(f.anti);
    rep.merge(sub, "anti-");
  }
  {
    ValidationReport sub = validate_category(f.c0);
    rep.merge(sub, "c0-");
  }
  if (!rep.ok()) return rep;

  if (!is_groupoid(f.c0)) {
    rep.add_axiom("c0-groupoid", "C0 has a non-invertible morphism");
    return rep;
  }

  CatTable base = require_table(*f.anti.base, "validate_flagged_dagger");
  CatTable c0 = require_table(f.c0, "validate_flagged_dagger");

  // Flagged points exist and satisfy the fixed-point coherence.
  for (const auto& c : f.c0.objects) {
    auto it = f.flag_obj.find(c);
    if (it == f.flag_obj.end()) {
      rep.add_structural("flag-missing-object", c);
      continue;
    }
    const FixedPoint& p = it->second;
    int xi = base.obj_index(p.obj);
    int h = base.mor_index(p.h);
    if (xi < 0 || h < 0) {
      rep.add_structural("flag-unresolved", c + " -> " + p.id());
      continue;
    }
    int xd = base.obj_index(f.anti.d_obj(p.obj));
    if (base.src(h) != xd || base.tgt(h) != xi || !base.is_iso(h)) {
      rep.add_axiom("flag-point-typing", c + " -> " + p.id());
      continue;
    }
    int eta = base.mor_index(f.anti.eta_at(p.obj));
    int hd = base.mor_index(f.anti.d_mor(p.h));
    if (base.comp(eta, hd) != h) {
      rep.add_axiom("flag-point-coherence", c + " -> " + p.id());
    }
  }
  if (!rep.ok()) return rep;

  // Flag is functorial and lands on equivariant morphisms.
  for (const auto& m : f.c0.morphisms) {
    auto it = f.flag_mor.find(m.id);
    if (it == f.flag_mor.end()) {
      rep.add_structural("flag-missing-morphism", m.id);
      continue;
    }
    int u = base.mor_index(it->second);
    if (u < 0) {
      rep.add_structural("flag-unresolved", m.id + " -> " + it->second);
      continue;
    }
    const FixedPoint& p = f.flag_obj.at(m.src);
    const FixedPoint& q = f.flag_obj.at(m.tgt);
    if (base.src(u) != base.obj_index(p.obj) ||
        base.tgt(u) != base.obj_index(q.obj) || !base.is_iso(u)) {
      rep.add_axiom("flag-morphism-typing", m.id + " -> " + it->second);
      continue;
    }
    int hp = base.mor_index(p.h);
    int hq = base.mor_index(q.h);
    int ud = base.mor_index(f.anti.d_mor(it->second));
    if (base.comp(u, hp) != base.comp(hq, base.inverse(ud))) {
      rep.add_axiom("flag-equivariance", m.id);
    }
  }
  for (const auto& c : f.c0.objects) {
    int idc = c0.identity(c0.obj_index(c));
    if (f.flag_mor.at(c0.mor_id(idc)) !=
        f.anti.base->identities.at(f.flag_obj.at(c).obj)) {
      rep.add_axiom("flag-identity", c);
    }
  }
  for (const auto& [pair, val] : f.c0.compose) {
    int lhs = base.mor_index(f.flag_mor.at(val));
    int rhs = base.comp(base.mor_index(f.flag_mor.at(pair.first)),
                        base.mor_index(f.flag_mor.at(pair.second)));
    if (lhs != rhs) {
      rep.add_axiom("flag-composition", pair_witness(pair.first, pair.second));
    }
  }
  if (!rep.ok()) return rep;

  // Essential surjectivity of C0 -> base.
  for (const auto& y : f.anti.base->objects) {
    bool hit = false;
    for (const auto& c : f.c0.objects) {
      const std::string& x = f.flag_obj.at(c).obj;
      if (x == y || iso_witness(*f.anti.base, x, y)) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      if (f.coflagged) {
        rep.add_note("coflagged: object " + y + " not in the essential image");
      } else {
        rep.add_axiom("essential-surjectivity", y);
      }
    }
  }
  return rep;
}

bool is_univalent(const FlaggedDagger& f) {
  if (!validate_flagged_dagger(f).ok()) return false;
  FixedPointGroupoid fp = fixed_points(f.anti);
  CatTable c0 = require_table(f.c0, "is_univalent");

  for (const auto& c : f.c0.objects) {
    for (const auto& c2 : f.c0.objects) {
      int i = fp.find_point(f.flag_obj.at(c));
      int j = fp.find_point(f.flag_obj.at(c2));
      if (i < 0 || j < 0) return false;
      // hom_{C0}(c, c2) must biject onto the fixed-point morphisms i -> j.
      std::set<std::string> images;
      int dom = 0;
      for (int m = 0; m < c0.n_morphisms(); ++m) {
        if (c0.src(m) != c0.obj_index(c) || c0.tgt(m) != c0.obj_index(c2)) {
          continue;
        }
        ++dom;
        images.insert(f.flag_mor.at(c0.mor_id(m)));
      }
      if (static_cast<int>(images.size()) != dom) return false;
      int cod = 0;
      for (const auto& m : fp.morphisms) {
        if (m.from == i && m.to == j) ++cod;
      }
      if (cod != dom) return false;
    }
  }
  return true;
}

namespace {

// Full subgroupoid of a fixed-point groupoid on a set of point indices,
// packaged as the C0 of a flagged dagger.
FlaggedDagger flag_by_points(const AntiInvolutive& a, const FixedPointGroupoid& fp,
                             const std::vector<int>& selected, bool coflagged) {
  std::vector<bool> keep(fp.points.size(), false);
  for (int i : selected) keep[i] = true;

  FlaggedDagger out;
  out.anti = a;
  out.coflagged = coflagged;

  FixedPointGroupoid sub;
  sub.base = fp.base;
  std::vector<int> reindex(fp.points.size(), -1);
  for (size_t i = 0; i < fp.points.size(); ++i) {
    if (!keep[i]) continue;
    reindex[i] = static_cast<int>(sub.points.size());
    sub.points.push_back(fp.points[i]);
  }
  for (const auto& m : fp.morphisms) {
    if (keep[m.from] && keep[m.to]) {
      sub.morphisms.push_back({m.u, reindex[m.from], reindex[m.to]});
    }
  }
  out.c0 = sub.to_category();
  for (const auto& p : sub.points) out.flag_obj[p.id()] = p;
  for (const auto& m : sub.morphisms) {
    out.flag_mor[FixedPointGroupoid::morphism_id(m.u, sub.points[m.from],
                                                 sub.points[m.to])] = m.u;
  }
  return out;
}

}  // namespace

FlaggedDagger univalentize(const FlaggedDagger& f) {
  FixedPointGroupoid fp = fixed_points(f.anti);

  std::set<int> image;
  for (const auto& [c, p] : f.flag_obj) {
    (void)c;
    int i = fp.find_point(p);
    if (i < 0) {
      throw StructuralError("univalentize: flagged point " + p.id() +
                            " is not a fixed point");
    }
    image.insert(i);
  }
  std::vector<int> selected;
  for (size_t j = 0; j < fp.points.size(); ++j) {
    bool in = false;
    for (int i : image) {
      if (static_cast<int>(j) == i || fp.has_morphism(i, static_cast<int>(j))) {
        in = true;
        break;
      }
    }
    if (in) selected.push_back(static_cast<int>(j));
  }
  return flag_by_points(f.anti, fp, selected, f.coflagged);
}

std::pair<std::map<std::string, std::string>, std::map<std::string, std::string>>
univalentize_unit(const FlaggedDagger& f) {
  std::map<std::string, std::string> on_obj, on_mor;
  for (const auto& [c, p] : f.flag_obj) on_obj[c] = p.id();
  for (const auto& m : f.c0.morphisms) {
    const FixedPoint& p = f.flag_obj.at(m.src);
    const FixedPoint& q = f.flag_obj.at(m.tgt);
    on_mor[m.id] =
        FixedPointGroupoid::morphism_id(f.flag_mor.at(m.id), p, q);
  }
  return {on_obj, on_mor};
}

FlaggedDagger coflag(const AntiInvolutive& a) {
  FixedPointGroupoid fp = fixed_points(a);
  std::vector<int> all(fp.points.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return flag_by_points(a, fp, all, /*coflagged=*/true);
}

FlaggedDagger hermitian_complete(const AntiInvolutive& a) {
  FixedPointGroupoid fp = fixed_points(a);

  std::set<std::string> kept;
  for (const auto& p : fp.points) kept.insert(p.obj);
  for (const auto& x : kept) {
    if (!kept.count(a.d_obj(x))) {
      throw StructuralError("hermitian_complete: subcategory not closed under D at " + x);
    }
  }

  FinCategory sub;
  std::set<std::string> kept_mor;
  for (const auto& o : a.base->objects) {
    if (kept.count(o)) {
      sub.objects.push_back(o);
      sub.identities[o] = a.base->identities.at(o);
    }
  }
  for (const auto& m : a.base->morphisms) {
    if (kept.count(m.src) && kept.count(m.tgt)) {
      sub.morphisms.push_back(m);
      kept_mor.insert(m.id);
    }
  }
  for (const auto& [pair, val] : a.base->compose) {
    if (kept_mor.count(pair.first) && kept_mor.count(pair.second)) {
      sub.compose[pair] = val;
    }
  }
  CatPtr base2 = make_category(std::move(sub));

  FinFunctor D2;
  D2.source = base2;
  D2.target = base2;
  D2.contravariant = true;
  for (const auto& o : base2->objects) D2.obj_map[o] = a.d_obj(o);
  for (const auto& m : base2->morphisms) D2.mor_map[m.id] = a.d_mor(m.id);
  std::map<std::string, std::string> eta2;
  for (const auto& o : base2->objects) eta2[o] = a.eta_at(o);
  AntiInvolutive a2 = make_anti_involutive(base2, std::move(D2), std::move(eta2));

  FixedPointGroupoid fp2 = fixed_points(a2);
  std::vector<int> all(fp2.points.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return flag_by_points(a2, fp2, all, /*coflagged=*/false);
}

std::string strictified_morphism_id(const std::string& p, const std::string& q,
                                    const std::string& m) {
  return p + ">" + q + ":" + m;
}

StrictDagger strictify(const FlaggedDagger& f) {
  CatTable base = require_table(*f.anti.base, "strictify");

  struct NewMor {
    std::string id;
    int p, q;  // C0 object indices
    int m;     // base morphism index
  };
  const auto& c0_objects = f.c0.objects;
  const int np = static_cast<int>(c0_objects.size());
  std::vector<int> flag_obj_ix(np), flag_h(np);
  for (int p = 0; p < np; ++p) {
    const FixedPoint& pt = f.flag_obj.at(c0_objects[p]);
    flag_obj_ix[p] = base.obj_index(pt.obj);
    flag_h[p] = base.mor_index(pt.h);
  }

  std::vector<NewMor> mors;
  // (p, q, m) -> new index
  std::map<std::array<int, 3>, int> lookup;
  for (int p = 0; p < np; ++p) {
    for (int q = 0; q < np; ++q) {
      for (int m = 0; m < base.n_morphisms(); ++m) {
        if (base.src(m) != flag_obj_ix[p] || base.tgt(m) != flag_obj_ix[q]) {
          continue;
        }
        lookup[{p, q, m}] = static_cast<int>(mors.size());
        mors.push_back({strictified_morphism_id(c0_objects[p], c0_objects[q],
                                                base.mor_id(m)),
                        p, q, m});
      }
    }
  }

  FinCategory cat;
  cat.objects = c0_objects;
  for (const auto& nm : mors) {
    cat.morphisms.push_back({nm.id, c0_objects[nm.p], c0_objects[nm.q]});
  }
  for (int p = 0; p < np; ++p) {
    cat.identities[c0_objects[p]] =
        mors[lookup.at({p, p, base.identity(flag_obj_ix[p])})].id;
  }
  for (const auto& b : mors) {
    for (const auto& a : mors) {
      if (a.q != b.p) continue;
      int c = base.comp(b.m, a.m);
      cat.compose[{b.id, a.id}] = mors[lookup.at({a.p, b.q, c})].id;
    }
  }

  StrictDagger out;
  out.base = make_category(std::move(cat));
  for (const auto& nm : mors) {
    // dag(f : x -> y) = h_x ∘ f^† ∘ h_y^{-1}
    int fd = base.mor_index(f.anti.d_mor(base.mor_id(nm.m)));
    int val = base.comp(flag_h[nm.p], base.comp(fd, base.inverse(flag_h[nm.q])));
    out.dag[nm.id] = mors[lookup.at({nm.q, nm.p, val})].id;
  }
  return out;
}

// ---- dagger functors and the equivalence search ----

namespace {

// Square-filler checks shared by validate_dagger_functor and the search:
// each sigma_x : F(D(x)) -> D'(F(x)) must be an isomorphism, natural in x,
// and compatible with the eta's.
bool check_square_filler(const AntiInvolutive& from, const AntiInvolutive& to,
                         const FinFunctor& F,
                         const std::map<std::string, std::string>& sigma,
                         ValidationReport* rep) {
  CatTable tt = require_table(*to.base, "square_filler");
  bool ok = true;
  auto fail = [&](const std::string& axiom, const std::string& witness) {
    ok = false;
    if (rep) rep->add_axiom(axiom, witness);
  };

  for (const auto& x : from.base->objects) {
    auto it = sigma.find(x);
    if (it == sigma.end()) {
      ok = false;
      if (rep) rep->add_structural("square-filler-missing", x);
      continue;
    }
    int s = tt.mor_index(it->second);
    if (s < 0) {
      ok = false;
      if (rep) rep->add_structural("square-filler-unresolved", x);
      continue;
    }
    int want_src = tt.obj_index(F.obj_map.at(from.d_obj(x)));
    int want_tgt = tt.obj_index(to.d_obj(F.obj_map.at(x)));
    if (tt.src(s) != want_src || tt.tgt(s) != want_tgt || !tt.is_iso(s)) {
      fail("square-filler-typing", x + " -> " + it->second);
    }
  }
  if (!ok) return false;

  auto sg = [&](const std::string& x) { return tt.mor_index(sigma.at(x)); };

  // Contravariant naturality: sigma_x ∘ F(D(m)) = D'(F(m)) ∘ sigma_y.
  for (const auto& m : from.base->morphisms) {
    int lhs = tt.comp(sg(m.src), tt.mor_index(F.mor_map.at(from.d_mor(m.id))));
    int rhs = tt.comp(tt.mor_index(to.d_mor(F.mor_map.at(m.id))), sg(m.tgt));
    if (lhs != rhs || lhs < 0) {
      fail("square-filler-naturality", m.id);
      if (!rep) return false;
    }
  }

  // F(eta_x) = eta'_{F(x)} ∘ D'(sigma_x^{-1}) ∘ sigma_{D(x)}.
  for (const auto& x : from.base->objects) {
    int lhs = tt.mor_index(F.mor_map.at(from.eta_at(x)));
    int sx_inv = tt.inverse(sg(x));
    int rhs = tt.comp(tt.mor_index(to.eta_at(F.obj_map.at(x))),
                      tt.comp(tt.mor_index(to.d_mor(tt.mor_id(sx_inv))),
                              sg(from.d_obj(x))));
    if (lhs != rhs) {
      fail("square-filler-eta", x);
      if (!rep) return false;
    }
  }
  return ok;
}

// The fixed point induced by (F, sigma): (x, h) -> (F(x), F(h) ∘ sigma_x^{-1}).
FixedPoint induced_point(const AntiInvolutive& to, const FinFunctor& F,
                         const std::map<std::string, std::string>& sigma,
                         const CatTable& tt, const FixedPoint& p) {
  int fh = tt.mor_index(F.mor_map.at(p.h));
  int sx_inv = tt.inverse(tt.mor_index(sigma.at(p.obj)));
  (void)to;
  return {F.obj_map.at(p.obj), tt.mor_id(tt.comp(fh, sx_inv))};
}

// Exhaustive enumeration of covariant functors between small categories with
// composition-constraint pruning. Calls on_candidate for each functor found;
// stops when it returns true. Throws SearchLimitError past the node budget.
class FunctorSearch {
 public:
  FunctorSearch(const CatTable& st, const CatTable& tt, long long budget)
      : st_(st), tt_(tt), budget_(budget) {
    const int nm = st_.n_morphisms();
    constraints_.resize(nm);
    for (int g = 0; g < nm; ++g) {
      for (int f = 0; f < nm; ++f) {
        if (!st_.composable(g, f)) continue;
        int k = st_.comp(g, f);
        constraints_[std::max({g, f, k})].push_back({g, f, k});
      }
    }
  }

  bool run(const std::function<bool(const std::vector<int>&,
                                    const std::vector<int>&)>& on_candidate) {
    on_candidate_ = &on_candidate;
    obj_assign_.assign(st_.n_objects(), -1);
    mor_assign_.assign(st_.n_morphisms(), -1);
    return assign_object(0);
  }

 private:
  bool assign_object(int o) {
    if (o == st_.n_objects()) return assign_morphism(0);
    for (int y = 0; y < tt_.n_objects(); ++y) {
      spend();
      obj_assign_[o] = y;
      if (assign_object(o + 1)) return true;
    }
    obj_assign_[o] = -1;
    return false;
  }

  bool assign_morphism(int m) {
    if (m == st_.n_morphisms()) {
      return (*on_candidate_)(obj_assign_, mor_assign_);
    }
    const int want_src = obj_assign_[st_.src(m)];
    const int want_tgt = obj_assign_[st_.tgt(m)];
    const bool is_identity = st_.identity(st_.src(m)) == m && st_.src(m) == st_.tgt(m);
    for (int v = 0; v < tt_.n_morphisms(); ++v) {
      if (tt_.src(v) != want_src || tt_.tgt(v) != want_tgt) continue;
      if (is_identity && v != tt_.identity(want_src)) continue;
      spend();
      mor_assign_[m] = v;
      if (consistent(m) && assign_morphism(m + 1)) return true;
    }
    mor_assign_[m] = -1;
    return false;
  }

  bool consistent(int m) const {
    for (const auto& c : constraints_[m]) {
      int g = mor_assign_[c[0]], f = mor_assign_[c[1]], k = mor_assign_[c[2]];
      if (tt_.comp(g, f) != k) return false;
    }
    return true;
  }

  void spend() {
    if (++visited_ > budget_) {
      throw SearchLimitError("functor search exceeded " +
                             std::to_string(budget_) + " candidates");
    }
  }

  const CatTable& st_;
  const CatTable& tt_;
  long long budget_;
  long long visited_ = 0;
  std::vector<int> obj_assign_;
  std::vector<int> mor_assign_;
  std::vector<std::vector<std::array<int, 3>>> constraints_;
  const std::function<bool(const std::vector<int>&, const std::vector<int>&)>*
      on_candidate_ = nullptr;
};

bool fully_faithful_assignment(const CatTable& st, const CatTable& tt,
                               const std::vector<int>& obj_assign,
                               const std::vector<int>& mor_assign) {
  for (int a = 0; a < st.n_objects(); ++a) {
    for (int b = 0; b < st.n_objects(); ++b) {
      std::set<int> images;
      int dom = 0;
      for (int m = 0; m < st.n_morphisms(); ++m) {
        if (st.src(m) != a || st.tgt(m) != b) continue;
        ++dom;
        images.insert(mor_assign[m]);
      }
      if (static_cast<int>(images.size()) != dom) return false;
      int cod = 0;
      for (int m = 0; m < tt.n_morphisms(); ++m) {
        if (tt.src(m) == obj_assign[a] && tt.tgt(m) == obj_assign[b]) ++cod;
      }
      if (cod != dom) return false;
    }
  }
  return true;
}

bool essentially_surjective_assignment(const CatTable& tt,
                                       const std::vector<int>& obj_assign) {
  // iso reachability in the target
  const int no = tt.n_objects();
  std::vector<std::vector<bool>> iso(no, std::vector<bool>(no, false));
  for (int o = 0; o < no; ++o) iso[o][o] = true;
  for (int m = 0; m < tt.n_morphisms(); ++m) {
    if (tt.is_iso(m)) iso[tt.src(m)][tt.tgt(m)] = true;
  }
  for (int y = 0; y < no; ++y) {
    bool hit = false;
    for (int x : obj_assign) {
      if (iso[x][y]) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_dagger_functor(const FlaggedDagger& from,
                                         const FlaggedDagger& to,
                                         const DaggerFunctor& df) {
  ValidationReport rep;
  if (!df.F.source || !df.F.target ||
      !same_category(*df.F.source, *from.anti.base) ||
      !same_category(*df.F.target, *to.anti.base)) {
    rep.add_structural("functor-endpoints",
                       "F must map the source base to the target base");
    return rep;
  }
  if (df.F.contravariant) {
    rep.add_structural("variance", "a dagger functor is covariant");
    return rep;
  }
  {
    ValidationReport sub = validate_functor(df.F);
    rep.merge(sub, "F-");
  }
  if (!rep.ok()) return rep;

  check_square_filler(from.anti, to.anti, df.F, df.square_filler, &rep);
  if (!rep.ok()) return rep;

  CatTable tt = require_table(*to.anti.base, "validate_dagger_functor");
  CatTable fc0 = require_table(from.c0, "validate_dagger_functor");
  CatTable tc0 = require_table(to.c0, "validate_dagger_functor");

  // flag_obj_map / flag_mor_map are functorial and commute with the flags.
  for (const auto& c : from.c0.objects) {
    auto it = df.flag_obj_map.find(c);
    if (it == df.flag_obj_map.end()) {
      rep.add_structural("flag-map-missing", c);
      continue;
    }
    if (tc0.obj_index(it->second) < 0) {
      rep.add_structural("flag-map-unresolved", c + " -> " + it->second);
      continue;
    }
    FixedPoint want = induced_point(to.anti, df.F, df.square_filler, tt,
                                    from.flag_obj.at(c));
    if (!(to.flag_obj.at(it->second) == want)) {
      rep.add_axiom("flag-map-commutes", c);
    }
  }
  if (!rep.ok()) return rep;

  for (const auto& m : from.c0.morphisms) {
    auto it = df.flag_mor_map.find(m.id);
    if (it == df.flag_mor_map.end()) {
      rep.add_structural("flag-map-missing-morphism", m.id);
      continue;
    }
    int tm = tc0.mor_index(it->second);
    if (tm < 0) {
      rep.add_structural("flag-map-unresolved", m.id + " -> " + it->second);
      continue;
    }
    if (tc0.src(tm) != tc0.obj_index(df.flag_obj_map.at(m.src)) ||
        tc0.tgt(tm) != tc0.obj_index(df.flag_obj_map.at(m.tgt))) {
      rep.add_axiom("flag-map-typing", m.id);
      continue;
    }
    if (to.flag_mor.at(it->second) != df.F.mor_map.at(from.flag_mor.at(m.id))) {
      rep.add_axiom("flag-map-commutes-morphism", m.id);
    }
  }
  if (!rep.ok()) return rep;

  for (const auto& c : from.c0.objects) {
    int idc = fc0.identity(fc0.obj_index(c));
    const std::string& image = df.flag_mor_map.at(fc0.mor_id(idc));
    if (image != to.c0.identities.at(df.flag_obj_map.at(c))) {
      rep.add_axiom("flag-map-identity", c);
    }
  }
  for (const auto& [pair, val] : from.c0.compose) {
    int lhs = tc0.mor_index(df.flag_mor_map.at(val));
    int rhs = tc0.comp(tc0.mor_index(df.flag_mor_map.at(pair.first)),
                       tc0.mor_index(df.flag_mor_map.at(pair.second)));
    if (lhs != rhs) {
      rep.add_axiom("flag-map-composition", pair_witness(pair.first, pair.second));
    }
  }
  return rep;
}

bool dagger_equivalent(const FlaggedDagger& f, const FlaggedDagger& g,
                       const SearchOptions& opts) {
  CatTable st = require_table(*f.anti.base, "dagger_equivalent");
  CatTable tt = require_table(*g.anti.base, "dagger_equivalent");

  if (tt.n_objects() > opts.max_objects ||
      tt.n_morphisms() > opts.max_morphisms) {
    throw SearchLimitError(
        "dagger_equivalent: target exceeds the search ceiling (" +
        std::to_string(tt.n_objects()) + " objects, " +
        std::to_string(tt.n_morphisms()) + " morphisms; ceiling " +
        std::to_string(opts.max_objects) + "/" +
        std::to_string(opts.max_morphisms) + ")");
  }

  const FixedPointGroupoid fpg = fixed_points(g.anti);
  std::set<int> flag_image_g;
  for (const auto& [c, p] : g.flag_obj) {
    (void)c;
    int i = fpg.find_point(p);
    if (i < 0) throw StructuralError("dagger_equivalent: invalid flag in target");
    flag_image_g.insert(i);
  }

  auto fp_iso = [&](int i, int j) {
    return i == j || fpg.has_morphism(i, j);
  };

  long long sigma_budget = opts.max_candidates;

  auto try_candidate = [&](const std::vector<int>& obj_assign,
                           const std::vector<int>& mor_assign) -> bool {
    if (!fully_faithful_assignment(st, tt, obj_assign, mor_assign)) return false;
    if (!essentially_surjective_assignment(tt, obj_assign)) return false;

    FinFunctor F;
    F.source = f.anti.base;
    F.target = g.anti.base;
    for (int o = 0; o < st.n_objects(); ++o) {
      F.obj_map[st.obj_id(o)] = tt.obj_id(obj_assign[o]);
    }
    for (int m = 0; m < st.n_morphisms(); ++m) {
      F.mor_map[st.mor_id(m)] = tt.mor_id(mor_assign[m]);
    }

    // Enumerate square fillers object by object.
    const int no = st.n_objects();
    std::vector<std::vector<int>> candidates(no);
    for (int o = 0; o < no; ++o) {
      int from_obj = tt.obj_index(F.obj_map.at(f.anti.d_obj(st.obj_id(o))));
      int to_obj = tt.obj_index(g.anti.d_obj(F.obj_map.at(st.obj_id(o))));
      for (int m = 0; m < tt.n_morphisms(); ++m) {
        if (tt.src(m) == from_obj && tt.tgt(m) == to_obj && tt.is_iso(m)) {
          candidates[o].push_back(m);
        }
      }
      if (candidates[o].empty()) return false;
    }

    std::vector<int> pick(no, 0);
    std::map<std::string, std::string> sigma;
    std::function<bool(int)> rec = [&](int o) -> bool {
      if (o == no) {
        if (!check_square_filler(f.anti, g.anti, F, sigma, nullptr)) return false;
        // Flag groupoids must match up to fixed-point isomorphism.
        std::set<int> induced;
        for (const auto& [c, p] : f.flag_obj) {
          (void)c;
          FixedPoint ip = induced_point(g.anti, F, sigma, tt, p);
          int idx = fpg.find_point(ip);
          if (idx < 0) return false;
          induced.insert(idx);
        }
        for (int a : induced) {
          bool hit = false;
          for (int b : flag_image_g) hit = hit || fp_iso(a, b);
          if (!hit) return false;
        }
        for (int b : flag_image_g) {
          bool hit = false;
          for (int a : induced) hit = hit || fp_iso(a, b);
          if (!hit) return false;
        }
        return true;
      }
      for (int m : candidates[o]) {
        if (--sigma_budget < 0) {
          throw SearchLimitError("dagger_equivalent: square-filler search exceeded budget");
        }
        sigma[st.obj_id(o)] = tt.mor_id(m);
        if (rec(o + 1)) return true;
      }
      sigma.erase(st.obj_id(o));
      return false;
    };
    return rec(0);
  };

  FunctorSearch search(st, tt, opts.max_candidates);
  return search.run(try_candidate);
}

}  // namespace daggerkit
