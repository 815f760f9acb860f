#pragma once

#include <random>
#include <string>
#include <vector>

#include "daggerkit/dagger1.hpp"
#include "daggerkit/dagger2.hpp"
#include "daggerkit/examples.hpp"
#include "daggerkit/fin2cat.hpp"
#include "daggerkit/fincat.hpp"

namespace daggerkit::test {

// a --f--> b, plus identities.
inline FinCategory walking_arrow() {
  FinCategory c;
  c.objects = {"a", "b"};
  c.morphisms = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"f", "a", "b"}};
  c.identities = {{"a", "ida"}, {"b", "idb"}};
  c.compose = {
      {{"ida", "ida"}, "ida"}, {{"idb", "idb"}, "idb"},
      {{"f", "ida"}, "f"},     {{"idb", "f"}, "f"},
  };
  return c;
}

// a ≅ b with u and its inverse v.
inline FinCategory walking_iso() {
  FinCategory c;
  c.objects = {"a", "b"};
  c.morphisms = {
      {"ida", "a", "a"}, {"idb", "b", "b"}, {"u", "a", "b"}, {"v", "b", "a"}};
  c.identities = {{"a", "ida"}, {"b", "idb"}};
  c.compose = {
      {{"ida", "ida"}, "ida"}, {{"idb", "idb"}, "idb"}, {{"u", "ida"}, "u"},
      {{"idb", "u"}, "u"},     {{"v", "idb"}, "v"},     {{"ida", "v"}, "v"},
      {{"v", "u"}, "ida"},     {{"u", "v"}, "idb"},
  };
  return c;
}

// The anti-involutive structure on the walking isomorphism that swaps the
// two objects, with eta = id.
inline AntiInvolutive walking_iso_swap() {
  CatPtr base = make_category(walking_iso());
  FinFunctor D;
  D.source = base;
  D.target = base;
  D.contravariant = true;
  D.obj_map = {{"a", "b"}, {"b", "a"}};
  D.mor_map = {{"ida", "idb"}, {"idb", "ida"}, {"u", "u"}, {"v", "v"}};
  return make_anti_involutive(base, std::move(D),
                              {{"a", "ida"}, {"b", "idb"}});
}

// One object, one-object group as anti-involutive category with D = inverse
// and eta the given central element.
inline AntiInvolutive group_anti_involutive(const GroupTable& g,
                                            const std::string& eta_element) {
  StrictDagger d = build_inverse_dagger_groupoid(g);
  FinFunctor D;
  D.source = d.base;
  D.target = d.base;
  D.contravariant = true;
  D.obj_map = {{"*", "*"}};
  D.mor_map = d.dag;
  return make_anti_involutive(d.base, std::move(D), {{"*", eta_element}});
}

// Disjoint union of two categories; ids are prefixed "l." and "r.".
inline FinCategory disjoint_union(const FinCategory& l, const FinCategory& r) {
  FinCategory out;
  auto lp = [](const std::string& s) { return "l." + s; };
  auto rp = [](const std::string& s) { return "r." + s; };
  for (const auto& o : l.objects) out.objects.push_back(lp(o));
  for (const auto& o : r.objects) out.objects.push_back(rp(o));
  for (const auto& m : l.morphisms) out.morphisms.push_back({lp(m.id), lp(m.src), lp(m.tgt)});
  for (const auto& m : r.morphisms) out.morphisms.push_back({rp(m.id), rp(m.src), rp(m.tgt)});
  for (const auto& [o, i] : l.identities) out.identities[lp(o)] = lp(i);
  for (const auto& [o, i] : r.identities) out.identities[rp(o)] = rp(i);
  for (const auto& [p, v] : l.compose) out.compose[{lp(p.first), lp(p.second)}] = lp(v);
  for (const auto& [p, v] : r.compose) out.compose[{rp(p.first), rp(p.second)}] = rp(v);
  return out;
}

// Disjoint union of anti-involutive categories.
inline AntiInvolutive disjoint_union(const AntiInvolutive& l,
                                     const AntiInvolutive& r) {
  CatPtr base = make_category(disjoint_union(*l.base, *r.base));
  FinFunctor D;
  D.source = base;
  D.target = base;
  D.contravariant = true;
  std::map<std::string, std::string> eta;
  for (const auto& [x, y] : l.D.obj_map) D.obj_map["l." + x] = "l." + y;
  for (const auto& [x, y] : r.D.obj_map) D.obj_map["r." + x] = "r." + y;
  for (const auto& [x, y] : l.D.mor_map) D.mor_map["l." + x] = "l." + y;
  for (const auto& [x, y] : r.D.mor_map) D.mor_map["r." + x] = "r." + y;
  for (const auto& [x, y] : l.eta.components) eta["l." + x] = "l." + y;
  for (const auto& [x, y] : r.eta.components) eta["r." + x] = "r." + y;
  return make_anti_involutive(base, std::move(D), std::move(eta));
}

// Two objects a, b, one non-invertible 1-cell f : a -> b, identity 2-cells
// only.
inline Fin2Category walking_arrow_2cat() {
  Fin2Category b;
  b.objects = {"a", "b"};
  b.one_morphisms = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"f", "a", "b"}};
  b.one_identities = {{"a", "ida"}, {"b", "idb"}};
  b.one_compose = {
      {{"ida", "ida"}, "ida"}, {{"idb", "idb"}, "idb"},
      {{"f", "ida"}, "f"},     {{"idb", "f"}, "f"},
  };
  b.two_morphisms = {{"2ida", "ida", "ida"}, {"2idb", "idb", "idb"}, {"2f", "f", "f"}};
  b.two_identities = {{"ida", "2ida"}, {"idb", "2idb"}, {"f", "2f"}};
  b.vertical = {
      {{"2ida", "2ida"}, "2ida"}, {{"2idb", "2idb"}, "2idb"}, {{"2f", "2f"}, "2f"}};
  b.horizontal = {
      {{"2ida", "2ida"}, "2ida"}, {{"2idb", "2idb"}, "2idb"},
      {{"2f", "2ida"}, "2f"},     {{"2idb", "2f"}, "2f"},
  };
  return b;
}

// Strict daggers the round-trip suites run over.
inline std::vector<StrictDagger> small_dagger_corpus() {
  std::vector<StrictDagger> out;
  out.push_back(build_inverse_dagger_groupoid(cyclic_group(2)));
  out.push_back(build_inverse_dagger_groupoid(cyclic_group(4)));
  out.push_back(build_inverse_dagger_groupoid(symmetric_group_3()));
  out.push_back(build_mat_category(2, 1));
  return out;
}

// Verifies two strict daggers are table-isomorphic under explicit bijections.
inline bool tables_isomorphic(const StrictDagger& d1, const StrictDagger& d2,
                              const std::map<std::string, std::string>& obj_map,
                              const std::map<std::string, std::string>& mor_map) {
  const FinCategory& a = *d1.base;
  const FinCategory& b = *d2.base;
  if (a.objects.size() != b.objects.size() ||
      a.morphisms.size() != b.morphisms.size()) {
    return false;
  }
  for (const auto& m : a.morphisms) {
    auto it = mor_map.find(m.id);
    if (it == mor_map.end()) return false;
    bool found = false;
    for (const auto& n : b.morphisms) {
      if (n.id == it->second) {
        found = n.src == obj_map.at(m.src) && n.tgt == obj_map.at(m.tgt);
        break;
      }
    }
    if (!found) return false;
  }
  for (const auto& [o, i] : a.identities) {
    if (b.identities.at(obj_map.at(o)) != mor_map.at(i)) return false;
  }
  if (a.compose.size() != b.compose.size()) return false;
  for (const auto& [p, v] : a.compose) {
    auto it = b.compose.find({mor_map.at(p.first), mor_map.at(p.second)});
    if (it == b.compose.end() || it->second != mor_map.at(v)) return false;
  }
  for (const auto& [f, fd] : d1.dag) {
    if (d2.dag.at(mor_map.at(f)) != mor_map.at(fd)) return false;
  }
  return true;
}

// The canonical relabeling for strictify(coherentify(d)): object x stays x,
// morphism m : x -> y becomes "x>y:m".
inline bool round_trip_table_isomorphic(const StrictDagger& d) {
  StrictDagger rt = strictify(coherentify(d));
  std::map<std::string, std::string> obj_map, mor_map;
  for (const auto& o : d.base->objects) obj_map[o] = o;
  for (const auto& m : d.base->morphisms) {
    mor_map[m.id] = strictified_morphism_id(m.src, m.tgt, m.id);
  }
  return tables_isomorphic(d, rt, obj_map, mor_map);
}

// The single-fixed-point flagging of the walking isomorphism with swap.
inline FlaggedDagger walking_iso_flagged() {
  AntiInvolutive a = walking_iso_swap();
  FixedPoint point{"a", "v"};
  FlaggedDagger f;
  f.anti = a;
  const std::string idm = FixedPointGroupoid::morphism_id("ida", point, point);
  f.c0.objects = {point.id()};
  f.c0.morphisms = {{idm, point.id(), point.id()}};
  f.c0.identities = {{point.id(), idm}};
  f.c0.compose = {{{idm, idm}, idm}};
  f.flag_obj = {{point.id(), point}};
  f.flag_mor = {{idm, "ida"}};
  return f;
}

// Graded lines over S3 with psi1 twisted by conjugation with a transposition
// and h1 chosen to untwist it.
inline CoherentDagger2Input twisted_s3_input(int m) {
  BiInvolutive v = build_graded_lines_2cat(symmetric_group_3(), m);
  GroupTable s3 = symmetric_group_3();
  const int a = s3.index_of("102");  // a transposition, a = a^{-1}

  CoherentDagger2Input c = trivial_coherent_input(v);
  auto twist = [&](const std::string& x) {
    int xi = s3.index_of(x);
    return s3.elements[s3.mult[s3.mult[a][s3.inverse(xi)]][a]];  // a x^{-1} a^{-1}
  };
  for (const auto& f : v.base->one_morphisms) {
    c.psi1_on1[f.id] = twist(f.id);
  }
  for (const auto& cell : v.base->two_morphisms) {
    const std::string& x = cell.src;
    const std::string suffix = cell.id.substr(x.size());
    c.psi1_on2[cell.id] = twist(x) + suffix;
  }
  c.h1["*"] = "102";  // untwists: a ∘ (a x^{-1} a) ∘ a^{-1} = x^{-1}
  return c;
}

// A random small anti-involutive category: one-object groups with central
// eta components, the walking isomorphism with swap, Mat(F4, 1), and
// disjoint unions thereof.
inline AntiInvolutive random_anti_involutive(std::mt19937_64& rng) {
  auto coin = [&](int n) { return static_cast<int>(rng() % n); };
  auto one_object = [&]() {
    static const std::vector<GroupTable> groups = {
        cyclic_group(1), cyclic_group(2), cyclic_group(3),
        cyclic_group(4), klein_four(),    symmetric_group_3()};
    const GroupTable& g = groups[coin(static_cast<int>(groups.size()))];
    // any central element is a coherent eta
    std::vector<int> central;
    const int n = static_cast<int>(g.elements.size());
    for (int z = 0; z < n; ++z) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = g.mult[z][a] == g.mult[a][z];
      if (ok) central.push_back(z);
    }
    return group_anti_involutive(g, g.elements[central[coin(static_cast<int>(central.size()))]]);
  };

  switch (coin(5)) {
    case 0:
      return one_object();
    case 1:
      return disjoint_union(one_object(), one_object());
    case 2:
      return walking_iso_swap();
    case 3:
      return anti_involutive_of(build_mat_category(2, 1));
    default:
      return disjoint_union(one_object(),
                            disjoint_union(one_object(), one_object()));
  }
}

// A two-object bi-involutive 2-category: the walking isomorphism with the
// scalars mu_2 ∪ {0} on every 1-cell. †1 swaps u and v, †2 is scalar
// inversion (the identity on mu_2).
inline BiInvolutive scalar_walking_iso() {
  Fin2Category b;
  b.objects = {"a", "b"};
  b.one_morphisms = {
      {"ida", "a", "a"}, {"idb", "b", "b"}, {"u", "a", "b"}, {"v", "b", "a"}};
  b.one_identities = {{"a", "ida"}, {"b", "idb"}};
  b.one_compose = {
      {{"ida", "ida"}, "ida"}, {{"idb", "idb"}, "idb"}, {{"u", "ida"}, "u"},
      {{"idb", "u"}, "u"},     {{"v", "idb"}, "v"},     {{"ida", "v"}, "v"},
      {{"v", "u"}, "ida"},     {{"u", "v"}, "idb"},
  };
  const std::vector<std::string> cells = {"ida", "idb", "u", "v"};
  for (const auto& f : cells) {
    b.two_morphisms.push_back({f + ":z0", f, f});
    b.two_morphisms.push_back({f + ":z1", f, f});
    b.two_morphisms.push_back({f + ":zero", f, f});
    b.two_identities[f] = f + ":z0";
  }
  auto scalar = [](const std::string& f, int k, bool zero) {
    return zero ? f + ":zero" : f + ":z" + std::to_string(k % 2);
  };
  for (const auto& f : cells) {
    for (int k1 = 0; k1 <= 2; ++k1) {
      for (int k2 = 0; k2 <= 2; ++k2) {
        bool z = k1 == 2 || k2 == 2;
        b.vertical[{scalar(f, k1, k1 == 2), scalar(f, k2, k2 == 2)}] =
            scalar(f, k1 + k2, z);
      }
    }
  }
  for (const auto& g : cells) {
    for (const auto& f : cells) {
      auto it = b.one_compose.find({g, f});
      if (it == b.one_compose.end()) continue;
      for (int k1 = 0; k1 <= 2; ++k1) {
        for (int k2 = 0; k2 <= 2; ++k2) {
          bool z = k1 == 2 || k2 == 2;
          b.horizontal[{scalar(g, k1, k1 == 2), scalar(f, k2, k2 == 2)}] =
              scalar(it->second, k1 + k2, z);
        }
      }
    }
  }

  BiInvolutive out;
  out.base = make_2category(std::move(b));
  std::map<std::string, std::string> dual = {
      {"ida", "ida"}, {"idb", "idb"}, {"u", "v"}, {"v", "u"}};
  for (const auto& [f, fd] : dual) {
    out.dag1_on1[f] = fd;
    out.phi[f] = f + ":z0";
    for (const std::string suffix : {":z0", ":z1", ":zero"}) {
      out.dag1_on2[f + suffix] = fd + suffix;
      out.dag2[f + suffix] = f + suffix;  // mu_2 scalars are self-inverse
    }
  }
  return out;
}

// Strict monoidal data on the tensor-closed {dim 0, dim 1} fragment of Mat,
// with duality = entrywise conjugation.
inline MonoidalDagger mat_fragment_monoidal() {
  MonoidalDagger m;
  m.dagger = build_mat_category(2, 1);
  m.unit_object = "1";
  GaloisField F(2);
  for (const std::string& a : {"0", "1"}) {
    for (const std::string& b : {"0", "1"}) {
      m.tensor_obj[{a, b}] = a == "1" && b == "1" ? "1" : "0";
    }
  }
  for (const auto& f : m.dagger.base->morphisms) {
    for (const auto& g : m.dagger.base->morphisms) {
      Matrix a, b;
      a.rows = f.tgt == "1" ? 1 : 0;
      a.cols = f.src == "1" ? 1 : 0;
      if (a.rows * a.cols == 1) a.e = {f.id.back() - '0'};
      b.rows = g.tgt == "1" ? 1 : 0;
      b.cols = g.src == "1" ? 1 : 0;
      if (b.rows * b.cols == 1) b.e = {g.id.back() - '0'};
      Matrix out;
      out.rows = a.rows * b.rows;
      out.cols = a.cols * b.cols;
      if (out.rows * out.cols == 1) out.e = {F.mul(a.e[0], b.e[0])};
      m.tensor_mor[{f.id, g.id}] = mat_morphism_id(out);
    }
  }
  for (const std::string& a : {"0", "1"}) m.dual_obj[a] = a;
  for (const auto& f : m.dagger.base->morphisms) {
    if (f.src == "1" && f.tgt == "1") {
      Matrix mm;
      mm.rows = mm.cols = 1;
      mm.e = {F.conj(f.id.back() - '0')};
      m.dual_mor[f.id] = mat_morphism_id(mm);
    } else {
      m.dual_mor[f.id] = f.id;
    }
  }
  return m;
}

}  // namespace daggerkit::test
