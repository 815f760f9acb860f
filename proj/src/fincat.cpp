#include "daggerkit/fincat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace daggerkit {

void ValidationReport::add_structural(std::string axiom, std::string witness) {
  violations.push_back(
      {ViolationKind::Structural, std::move(axiom), std::move(witness)});
}

void ValidationReport::add_axiom(std::string axiom, std::string witness) {
  violations.push_back(
      {ViolationKind::Axiom, std::move(axiom), std::move(witness)});
}

void ValidationReport::add_note(std::string note) {
  notes.push_back(std::move(note));
}

void ValidationReport::merge(const ValidationReport& other,
                             const std::string& prefix) {
  for (const auto& v : other.violations) {
    violations.push_back({v.kind, prefix + v.axiom, v.witness});
  }
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream out;
  out << violations.size() << " violation(s):";
  for (const auto& v : violations) {
    out << "\n  [" << (v.kind == ViolationKind::Structural ? "structural" : "axiom")
        << "] " << v.axiom << ": " << v.witness;
  }
  return out.str();
}

CatPtr make_category(FinCategory c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

int CatTable::obj_index(const std::string& id) const {
  auto it = obj_index_.find(id);
  return it == obj_index_.end() ? -1 : it->second;
}

int CatTable::mor_index(const std::string& id) const {
  auto it = mor_index_.find(id);
  return it == mor_index_.end() ? -1 : it->second;
}

std::optional<CatTable> CatTable::build(const FinCategory& c,
                                        ValidationReport* report) {
  CatTable t;
  ValidationReport local;
  ValidationReport& rep = report ? *report : local;
  bool ok = true;

  for (const auto& o : c.objects) {
    if (t.obj_index_.count(o)) {
      rep.add_structural("duplicate-object", o);
      ok = false;
      continue;
    }
    t.obj_index_[o] = static_cast<int>(t.obj_ids_.size());
    t.obj_ids_.push_back(o);
  }
  for (const auto& m : c.morphisms) {
    if (t.mor_index_.count(m.id)) {
      rep.add_structural("duplicate-morphism", m.id);
      ok = false;
      continue;
    }
    int s = t.obj_index(m.src);
    int g = t.obj_index(m.tgt);
    if (s < 0 || g < 0) {
      rep.add_structural("unresolved-object",
                         m.id + " has src/tgt " + m.src + " -> " + m.tgt);
      ok = false;
      continue;
    }
    t.mor_index_[m.id] = static_cast<int>(t.mor_ids_.size());
    t.mor_ids_.push_back(m.id);
    t.src_.push_back(s);
    t.tgt_.push_back(g);
  }
  if (!ok) return std::nullopt;

  const int no = t.n_objects();
  const int nm = t.n_morphisms();
  t.identity_.assign(no, -1);
  for (const auto& [obj, mor] : c.identities) {
    int o = t.obj_index(obj);
    int m = t.mor_index(mor);
    if (o < 0 || m < 0) {
      rep.add_structural("unresolved-identity", obj + " -> " + mor);
      ok = false;
      continue;
    }
    t.identity_[o] = m;
  }
  for (int o = 0; o < no; ++o) {
    if (t.identity_[o] < 0) {
      rep.add_structural("missing-identity", t.obj_ids_[o]);
      ok = false;
    }
  }
  if (!ok) return std::nullopt;

  t.comp_.assign(static_cast<size_t>(nm) * nm, -1);
  for (const auto& [pair, val] : c.compose) {
    int g = t.mor_index(pair.first);
    int f = t.mor_index(pair.second);
    int v = t.mor_index(val);
    if (g < 0 || f < 0 || v < 0) {
      rep.add_structural("unresolved-compose", pair_witness(pair.first, pair.second) +
                                                   " -> " + val);
      ok = false;
      continue;
    }
    t.comp_[static_cast<size_t>(g) * nm + f] = v;
  }
  if (!ok) return std::nullopt;

  // Inverses, precomputed. Uniqueness in a valid category is automatic; we
  // keep the first hit in table order.
  t.inverse_.assign(nm, -1);
  for (int f = 0; f < nm; ++f) {
    for (int g = 0; g < nm; ++g) {
      if (!t.composable(g, f) || !t.composable(f, g)) continue;
      if (t.comp(g, f) == t.identity(t.src_[f]) &&
          t.comp(f, g) == t.identity(t.tgt_[f])) {
        t.inverse_[f] = g;
        break;
      }
    }
  }
  return t;
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport rep;
  auto table = CatTable::build(c, &rep);
  if (!table) return rep;
  const CatTable& t = *table;
  const int nm = t.n_morphisms();

  // Identities well typed.
  for (int o = 0; o < t.n_objects(); ++o) {
    int i = t.identity(o);
    if (t.src(i) != o || t.tgt(i) != o) {
      rep.add_axiom("identity-endo", t.obj_id(o) + " -> " + t.mor_id(i));
    }
  }

  // Totality: defined for every composable pair and only those, with
  // correctly typed results.
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      int v = t.comp(g, f);
      if (t.composable(g, f)) {
        if (v < 0) {
          rep.add_axiom("totality-missing", pair_witness(t.mor_id(g), t.mor_id(f)));
        } else if (t.src(v) != t.src(f) || t.tgt(v) != t.tgt(g)) {
          rep.add_axiom("compose-typing", pair_witness(t.mor_id(g), t.mor_id(f)) +
                                              " -> " + t.mor_id(v));
        }
      } else if (v >= 0) {
        rep.add_axiom("totality-spurious", pair_witness(t.mor_id(g), t.mor_id(f)));
      }
    }
  }
  if (!rep.ok()) return rep;  // unit/associativity scans need a sane table

  // Unit laws.
  for (int f = 0; f < nm; ++f) {
    int ids = t.identity(t.src(f));
    int idt = t.identity(t.tgt(f));
    if (t.comp(f, ids) != f) {
      rep.add_axiom("unit-right", t.mor_id(f));
    }
    if (t.comp(idt, f) != f) {
      rep.add_axiom("unit-left", t.mor_id(f));
    }
  }

  // Associativity over all composable triples.
  for (int h = 0; h < nm; ++h) {
    for (int g = 0; g < nm; ++g) {
      if (!t.composable(h, g)) continue;
      const int hg = t.comp(h, g);
      for (int f = 0; f < nm; ++f) {
        if (!t.composable(g, f)) continue;
        if (t.comp(h, t.comp(g, f)) != t.comp(hg, f)) {
          rep.add_axiom("associativity", "(" + t.mor_id(h) + ", " + t.mor_id(g) +
                                             ", " + t.mor_id(f) + ")");
        }
      }
    }
  }
  return rep;
}

std::optional<std::string> inverse_of(const FinCategory& c,
                                      const std::string& f) {
  auto table = CatTable::build(c);
  if (!table) throw StructuralError("inverse_of: category tables do not resolve");
  int fi = table->mor_index(f);
  if (fi < 0) throw StructuralError("inverse_of: unknown morphism " + f);

  std::optional<int> found;
  for (int g = 0; g < table->n_morphisms(); ++g) {
    if (!table->composable(g, fi) || !table->composable(fi, g)) continue;
    if (table->comp(g, fi) == table->identity(table->src(fi)) &&
        table->comp(fi, g) == table->identity(table->tgt(fi))) {
      if (found && *found != g) {
        throw StructuralError("inverse_of: two distinct inverses for " + f +
                              " (category is not valid)");
      }
      found = g;
    }
  }
  if (!found) return std::nullopt;
  return table->mor_id(*found);
}

FinCategory core_groupoid(const FinCategory& c) {
  auto table = CatTable::build(c);
  if (!table) throw StructuralError("core_groupoid: category tables do not resolve");
  FinCategory out;
  out.objects = c.objects;
  out.identities = c.identities;
  std::set<std::string> kept;
  for (const auto& m : c.morphisms) {
    if (table->is_iso(table->mor_index(m.id))) {
      out.morphisms.push_back(m);
      kept.insert(m.id);
    }
  }
  for (const auto& [pair, val] : c.compose) {
    if (kept.count(pair.first) && kept.count(pair.second)) {
      out.compose[pair] = val;  // iso ∘ iso is iso, so val is kept
    }
  }
  return out;
}

FinCategory opposite(const FinCategory& c) {
  FinCategory out;
  out.objects = c.objects;
  out.identities = c.identities;
  out.morphisms.reserve(c.morphisms.size());
  for (const auto& m : c.morphisms) {
    out.morphisms.push_back({m.id, m.tgt, m.src});
  }
  for (const auto& [pair, val] : c.compose) {
    out.compose[{pair.second, pair.first}] = val;
  }
  return out;
}

FinFunctor identity_functor(const CatPtr& c) {
  FinFunctor f;
  f.source = c;
  f.target = c;
  for (const auto& o : c->objects) f.obj_map[o] = o;
  for (const auto& m : c->morphisms) f.mor_map[m.id] = m.id;
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (!f.target || !g.source || !same_category(*f.target, *g.source)) {
    throw StructuralError("compose_functors: middle categories differ");
  }
  FinFunctor out;
  out.source = f.source;
  out.target = g.target;
  out.contravariant = f.contravariant != g.contravariant;
  for (const auto& [x, fx] : f.obj_map) {
    auto it = g.obj_map.find(fx);
    if (it == g.obj_map.end()) {
      throw StructuralError("compose_functors: object " + fx +
                            " missing from outer functor");
    }
    out.obj_map[x] = it->second;
  }
  for (const auto& [m, fm] : f.mor_map) {
    auto it = g.mor_map.find(fm);
    if (it == g.mor_map.end()) {
      throw StructuralError("compose_functors: morphism " + fm +
                            " missing from outer functor");
    }
    out.mor_map[m] = it->second;
  }
  return out;
}

ValidationReport validate_functor(const FinFunctor& f) {
  ValidationReport rep;
  if (!f.source || !f.target) {
    rep.add_structural("missing-category", "functor has null source or target");
    return rep;
  }
  auto st = CatTable::build(*f.source, &rep);
  auto tt = CatTable::build(*f.target, &rep);
  if (!st || !tt) return rep;

  for (const auto& o : f.source->objects) {
    auto it = f.obj_map.find(o);
    if (it == f.obj_map.end()) {
      rep.add_structural("missing-object-image", o);
    } else if (tt->obj_index(it->second) < 0) {
      rep.add_structural("unresolved-object-image", o + " -> " + it->second);
    }
  }
  for (const auto& m : f.source->morphisms) {
    auto it = f.mor_map.find(m.id);
    if (it == f.mor_map.end()) {
      rep.add_structural("missing-morphism-image", m.id);
    } else if (tt->mor_index(it->second) < 0) {
      rep.add_structural("unresolved-morphism-image", m.id + " -> " + it->second);
    }
  }
  if (!rep.ok()) return rep;

  auto fo = [&](int o) { return tt->obj_index(f.obj_map.at(st->obj_id(o))); };
  auto fm = [&](int m) { return tt->mor_index(f.mor_map.at(st->mor_id(m))); };

  for (int m = 0; m < st->n_morphisms(); ++m) {
    int im = fm(m);
    int want_src = f.contravariant ? fo(st->tgt(m)) : fo(st->src(m));
    int want_tgt = f.contravariant ? fo(st->src(m)) : fo(st->tgt(m));
    if (tt->src(im) != want_src || tt->tgt(im) != want_tgt) {
      rep.add_axiom("functor-typing", st->mor_id(m) + " -> " + tt->mor_id(im));
    }
  }
  if (!rep.ok()) return rep;

  for (int o = 0; o < st->n_objects(); ++o) {
    if (fm(st->identity(o)) != tt->identity(fo(o))) {
      rep.add_axiom("functor-identity", st->obj_id(o));
    }
  }
  for (int g = 0; g < st->n_morphisms(); ++g) {
    for (int fmor = 0; fmor < st->n_morphisms(); ++fmor) {
      if (!st->composable(g, fmor)) continue;
      int lhs = fm(st->comp(g, fmor));
      int rhs = f.contravariant ? tt->comp(fm(fmor), fm(g))
                                : tt->comp(fm(g), fm(fmor));
      if (lhs != rhs) {
        rep.add_axiom("functor-composition",
                      pair_witness(st->mor_id(g), st->mor_id(fmor)));
      }
    }
  }
  return rep;
}

ValidationReport check_nat_transform(const NatTransform& a) {
  ValidationReport rep;
  const FinFunctor& F = a.source_functor;
  const FinFunctor& G = a.target_functor;
  if (!F.source || !G.source || !F.target || !G.target ||
      !same_category(*F.source, *G.source) ||
      !same_category(*F.target, *G.target)) {
    rep.add_structural("functor-mismatch",
                       "source/target functors live on different categories");
    return rep;
  }
  if (F.contravariant != G.contravariant) {
    rep.add_structural("variance-mismatch",
                       "source and target functors have different variance");
    return rep;
  }
  auto st = CatTable::build(*F.source, &rep);
  auto tt = CatTable::build(*F.target, &rep);
  if (!st || !tt) return rep;

  for (const auto& x : F.source->objects) {
    auto it = a.components.find(x);
    if (it == a.components.end()) {
      rep.add_structural("missing-component", x);
      continue;
    }
    int m = tt->mor_index(it->second);
    if (m < 0) {
      rep.add_structural("unresolved-component", x + " -> " + it->second);
      continue;
    }
    int fx = tt->obj_index(F.obj_map.at(x));
    int gx = tt->obj_index(G.obj_map.at(x));
    if (tt->src(m) != fx || tt->tgt(m) != gx) {
      rep.add_axiom("component-typing", x + " -> " + it->second);
    }
  }
  if (!rep.ok()) return rep;

  auto comp_at = [&](const std::string& x) {
    return tt->mor_index(a.components.at(x));
  };
  for (const auto& f : F.source->morphisms) {
    int Ff = tt->mor_index(F.mor_map.at(f.id));
    int Gf = tt->mor_index(G.mor_map.at(f.id));
    int lhs, rhs;
    if (!F.contravariant) {
      // G(f) ∘ α_x = α_y ∘ F(f)
      lhs = tt->comp(Gf, comp_at(f.src));
      rhs = tt->comp(comp_at(f.tgt), Ff);
    } else {
      // mirrored: G(f) ∘ α_y = α_x ∘ F(f)
      lhs = tt->comp(Gf, comp_at(f.tgt));
      rhs = tt->comp(comp_at(f.src), Ff);
    }
    if (lhs != rhs || lhs < 0) {
      rep.add_axiom("naturality", f.id);
    }
  }
  return rep;
}

bool is_nat_iso(const NatTransform& a) {
  if (!check_nat_transform(a).ok()) return false;
  auto tt = CatTable::build(*a.source_functor.target);
  for (const auto& [x, m] : a.components) {
    (void)x;
    if (!tt->is_iso(tt->mor_index(m))) return false;
  }
  return true;
}

EquivalenceReport equivalence_report(const FinFunctor& f) {
  if (f.contravariant) {
    throw StructuralError("equivalence_report: expects a covariant functor");
  }
  auto st = CatTable::build(*f.source);
  auto tt = CatTable::build(*f.target);
  if (!st || !tt) {
    throw StructuralError("equivalence_report: tables do not resolve");
  }

  EquivalenceReport out;

  // Essential image: target objects isomorphic to some F(x).
  std::vector<bool> hit(tt->n_objects(), false);
  for (const auto& [x, fx] : f.obj_map) {
    (void)x;
    hit[tt->obj_index(fx)] = true;
  }
  std::vector<bool> in_image(tt->n_objects(), false);
  for (int y = 0; y < tt->n_objects(); ++y) {
    for (int x = 0; x < tt->n_objects() && !in_image[y]; ++x) {
      if (!hit[x]) continue;
      if (x == y || iso_witness(*f.target, tt->obj_id(x), tt->obj_id(y))) {
        in_image[y] = true;
      }
    }
  }
  out.essentially_surjective = true;
  for (int y = 0; y < tt->n_objects(); ++y) {
    if (in_image[y]) {
      out.essential_image.push_back(tt->obj_id(y));
    } else {
      out.essentially_surjective = false;
    }
  }

  // Fully faithful: every hom map is a bijection.
  out.fully_faithful = true;
  for (int a = 0; a < st->n_objects() && out.fully_faithful; ++a) {
    for (int b = 0; b < st->n_objects() && out.fully_faithful; ++b) {
      int fa = tt->obj_index(f.obj_map.at(st->obj_id(a)));
      int fb = tt->obj_index(f.obj_map.at(st->obj_id(b)));
      std::set<int> images;
      int dom_size = 0;
      for (int m = 0; m < st->n_morphisms(); ++m) {
        if (st->src(m) != a || st->tgt(m) != b) continue;
        ++dom_size;
        images.insert(tt->mor_index(f.mor_map.at(st->mor_id(m))));
      }
      if (static_cast<int>(images.size()) != dom_size) {
        out.fully_faithful = false;  // not injective
        break;
      }
      int cod_size = 0;
      for (int m = 0; m < tt->n_morphisms(); ++m) {
        if (tt->src(m) == fa && tt->tgt(m) == fb) ++cod_size;
      }
      if (cod_size != dom_size) out.fully_faithful = false;
    }
  }
  return out;
}

bool same_category(const FinCategory& a, const FinCategory& b) {
  return &a == &b || a == b;
}

bool is_groupoid(const FinCategory& c) {
  auto table = CatTable::build(c);
  if (!table) return false;
  for (int m = 0; m < table->n_morphisms(); ++m) {
    if (!table->is_iso(m)) return false;
  }
  return true;
}

std::vector<std::string> hom_set(const FinCategory& c, const std::string& a,
                                 const std::string& b) {
  std::vector<std::string> out;
  for (const auto& m : c.morphisms) {
    if (m.src == a && m.tgt == b) out.push_back(m.id);
  }
  return out;
}

std::optional<std::string> iso_witness(const FinCategory& c,
                                       const std::string& x,
                                       const std::string& y) {
  auto table = CatTable::build(c);
  if (!table) return std::nullopt;
  int xi = table->obj_index(x);
  int yi = table->obj_index(y);
  for (int m = 0; m < table->n_morphisms(); ++m) {
    if (table->src(m) == xi && table->tgt(m) == yi && table->is_iso(m)) {
      return table->mor_id(m);
    }
  }
  return std::nullopt;
}

}  // namespace daggerkit
