#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daggerkit/fincat.hpp"

namespace daggerkit {

// Identity-on-objects contravariant involution, tabulated.
struct StrictDagger {
  CatPtr base;
  std::map<std::string, std::string> dag;

  const std::string& dagger(const std::string& m) const { return dag.at(m); }
};

// A category with a contravariant self-equivalence D and a coherence
// isomorphism eta : D∘D => id satisfying eta_{x^†}^{-1} = (eta_x)^†.
struct AntiInvolutive {
  CatPtr base;
  FinFunctor D;        // contravariant endofunctor on base
  NatTransform eta;    // components eta_x : D(D(x)) -> x

  const std::string& d_obj(const std::string& x) const { return D.obj_map.at(x); }
  const std::string& d_mor(const std::string& m) const { return D.mor_map.at(m); }
  const std::string& eta_at(const std::string& x) const {
    return eta.components.at(x);
  }
};

// Convenience: eta components may be given as a bare object -> morphism map;
// this wires up the D∘D => id functor pair around them.
AntiInvolutive make_anti_involutive(CatPtr base, FinFunctor D,
                                    std::map<std::string, std::string> eta);

// The anti-involutive structure induced by a strict dagger: D = dag with
// identity object map, eta = identity components.
AntiInvolutive anti_involutive_of(const StrictDagger& d);

// An object x together with an isomorphism h : x^† -> x satisfying the
// coherence h = eta_x ∘ h^†.
struct FixedPoint {
  std::string obj;
  std::string h;

  bool operator==(const FixedPoint&) const = default;
  bool operator<(const FixedPoint& o) const {
    return obj != o.obj ? obj < o.obj : h < o.h;
  }
  std::string id() const { return "(" + obj + "|" + h + ")"; }
};

struct FixedPointMorphism {
  std::string u;  // morphism of the base category
  int from = -1;  // indices into FixedPointGroupoid::points
  int to = -1;
};

// The groupoid of homotopy fixed points: pairs (x, h) with equivariant
// isomorphisms u satisfying u ∘ h_from = h_to ∘ (u^†)^{-1}.
struct FixedPointGroupoid {
  CatPtr base;  // the category the points live in
  std::vector<FixedPoint> points;
  std::vector<FixedPointMorphism> morphisms;

  int find_point(const FixedPoint& p) const;
  bool has_morphism(int from, int to) const;
  // Every fixed-point morphism id is "(u|from_id->to_id)".
  static std::string morphism_id(const std::string& u, const FixedPoint& from,
                                 const FixedPoint& to);
  FinCategory to_category() const;
};

// An anti-involutive category flagged by a groupoid C0 mapping into the
// fixed-point groupoid. `coflagged` downgrades the essential-surjectivity
// check to a warning so the non-surjective intermediate of the Hermitian
// completion can be represented.
struct FlaggedDagger {
  AntiInvolutive anti;
  FinCategory c0;
  std::map<std::string, FixedPoint> flag_obj;   // C0 object -> fixed point
  std::map<std::string, std::string> flag_mor;  // C0 morphism -> base morphism
  bool coflagged = false;
};

// A structure-respecting functor between flagged daggers: F on bases, a
// natural isomorphism square_filler witnessing F∘D ≅ D'∘F, and a functorial
// map on the flagging groupoids.
struct DaggerFunctor {
  FinFunctor F;  // covariant, base -> base'
  // components sigma_x : F(D(x)) -> D'(F(x)), natural and eta-compatible
  std::map<std::string, std::string> square_filler;
  std::map<std::string, std::string> flag_obj_map;  // C0 obj -> C0' obj
  std::map<std::string, std::string> flag_mor_map;  // C0 mor -> C0' mor
};

struct SearchOptions {
  // Ceilings for exhaustive functor search; exceeded -> SearchLimitError.
  int max_objects = 6;
  int max_morphisms = 64;
  long long max_candidates = 2'000'000;
};

ValidationReport validate_strict_dagger(const StrictDagger& d);

// Morphisms u with u^† = u^{-1}, in base table order.
std::vector<std::string> unitaries(const StrictDagger& d);

// Strictification inverse: keep the category and dagger as-is, flag by the
// groupoid of objects and unitaries with h = id.
FlaggedDagger coherentify(const StrictDagger& d);

ValidationReport validate_anti_involutive(const AntiInvolutive& a);

FixedPointGroupoid fixed_points(const AntiInvolutive& a);

ValidationReport validate_flagged_dagger(const FlaggedDagger& f);
bool is_univalent(const FlaggedDagger& f);

// Replaces C0 with the full subgroupoid of the fixed-point groupoid on the
// essential image of the flag. Idempotent up to table identity.
FlaggedDagger univalentize(const FlaggedDagger& f);

// The unit of the univalentization adjunction: the canonical functor from
// f.c0 into univalentize(f).c0, returned as (object map, morphism map).
std::pair<std::map<std::string, std::string>, std::map<std::string, std::string>>
univalentize_unit(const FlaggedDagger& f);

// Every anti-involutive category is coflagged by its full fixed-point
// groupoid; essential surjectivity may fail and is reported as a note.
FlaggedDagger coflag(const AntiInvolutive& a);

// Hermitian completion: restrict the base to objects admitting a fixed point
// and flag by all of them. The result is univalent; an empty fixed-point set
// yields the empty dagger category.
FlaggedDagger hermitian_complete(const AntiInvolutive& a);

// Strictification: objects of C0, hom sets pulled from the base, dagger
// dag(f : x -> y) = h_x ∘ f^† ∘ h_y^{-1}.
StrictDagger strictify(const FlaggedDagger& f);

// Names used by strictify so round-trip tests can build the canonical
// relabeling: object ids are the C0 object ids, morphism ids are
// "p>q:m" for m : obj(p) -> obj(q) in the base.
std::string strictified_morphism_id(const std::string& p, const std::string& q,
                                    const std::string& m);

ValidationReport validate_dagger_functor(const FlaggedDagger& from,
                                         const FlaggedDagger& to,
                                         const DaggerFunctor& df);

// Exhaustive search for an equivalence of flagged daggers within the
// configured ceiling. Throws SearchLimitError when the ceiling is passed.
bool dagger_equivalent(const FlaggedDagger& f, const FlaggedDagger& g,
                       const SearchOptions& opts = {});

}  // namespace daggerkit
