#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "daggerkit/fincat.hpp"

namespace daggerkit {

struct OneMorphism {
  std::string id;
  std::string src;  // object
  std::string tgt;  // object

  bool operator==(const OneMorphism&) const = default;
};

struct TwoMorphism {
  std::string id;
  std::string src;  // 1-morphism
  std::string tgt;  // parallel 1-morphism

  bool operator==(const TwoMorphism&) const = default;
};

// A strict finite 2-category: strictly associative and unital composition of
// 1-morphisms, vertical and horizontal composition of 2-morphisms subject to
// the interchange law.
struct Fin2Category {
  std::vector<std::string> objects;
  std::vector<OneMorphism> one_morphisms;
  std::map<std::string, std::string> one_identities;  // object -> 1-mor
  std::map<std::pair<std::string, std::string>, std::string> one_compose;
  std::vector<TwoMorphism> two_morphisms;
  std::map<std::string, std::string> two_identities;  // 1-mor -> 2-mor
  std::map<std::pair<std::string, std::string>, std::string> vertical;
  std::map<std::pair<std::string, std::string>, std::string> horizontal;

  bool operator==(const Fin2Category&) const = default;
};

using TwoCatPtr = std::shared_ptr<const Fin2Category>;

TwoCatPtr make_2category(Fin2Category b);

// Dense index over a Fin2Category. Building reports structural problems;
// everything else assumes a built table.
class TwoCatTable {
 public:
  static std::optional<TwoCatTable> build(const Fin2Category& b,
                                          ValidationReport* report = nullptr);

  int n_objects() const { return static_cast<int>(objs_.size()); }
  int n_one() const { return static_cast<int>(ones_.size()); }
  int n_two() const { return static_cast<int>(twos_.size()); }

  int obj_index(const std::string& id) const;
  int one_index(const std::string& id) const;
  int two_index(const std::string& id) const;
  const std::string& obj_id(int i) const { return objs_[i]; }
  const std::string& one_id(int i) const { return ones_[i]; }
  const std::string& two_id(int i) const { return twos_[i]; }

  int one_src(int f) const { return one_src_[f]; }
  int one_tgt(int f) const { return one_tgt_[f]; }
  int one_identity(int o) const { return one_identity_[o]; }
  int one_comp(int g, int f) const {
    return one_comp_[static_cast<size_t>(g) * ones_.size() + f];
  }
  int one_inverse(int f) const { return one_inverse_[f]; }

  int two_src(int t) const { return two_src_[t]; }
  int two_tgt(int t) const { return two_tgt_[t]; }
  int two_identity(int f) const { return two_identity_[f]; }
  int vert(int b, int a) const {
    return vert_[static_cast<size_t>(b) * twos_.size() + a];
  }
  int horiz(int b, int a) const {
    return horiz_[static_cast<size_t>(b) * twos_.size() + a];
  }
  int vert_inverse(int t) const { return vert_inverse_[t]; }

  // Source/target object of the 1-cells a 2-cell sits between.
  int cell_src_obj(int t) const { return one_src_[two_src_[t]]; }
  int cell_tgt_obj(int t) const { return one_tgt_[two_src_[t]]; }

  // Left/right whiskering: f * t and t * f with identity 2-cells.
  int whisker_left(int f, int t) const { return horiz(two_identity(f), t); }
  int whisker_right(int t, int f) const { return horiz(t, two_identity(f)); }

 private:
  TwoCatTable() = default;
  std::vector<std::string> objs_, ones_, twos_;
  std::map<std::string, int> obj_index_, one_index_, two_index_;
  std::vector<int> one_src_, one_tgt_, one_identity_, one_inverse_;
  std::vector<int32_t> one_comp_;
  std::vector<int> two_src_, two_tgt_, two_identity_, vert_inverse_;
  std::vector<int32_t> vert_, horiz_;
};

// A right-adjoint witness: etaR : id_src(f) => fR ∘ f and
// epsR : f ∘ fR => id_tgt(f), subject to the zig-zag identities.
struct Adjunction {
  std::string f;
  std::string fR;
  std::string etaR;
  std::string epsR;

  bool operator==(const Adjunction&) const = default;
};

// f -> f^{RR} together with the canonical comparison 2-cells that witness
// functoriality of the double dual up to isomorphism.
struct DoubleRightDual {
  std::map<std::string, std::string> on_one;  // f -> (f^R)^R
  // object b -> invertible 2-cell (id_b)^{RR} => id_b
  std::map<std::string, std::string> identity_comparison;
  // (g, f) composable -> invertible 2-cell (g∘f)^{RR} => g^{RR} ∘ f^{RR}
  std::map<std::pair<std::string, std::string>, std::string>
      composition_comparison;
};

ValidationReport validate_2category(const Fin2Category& b);

// The 1-category of 1-morphisms a -> b2 and 2-cells under vertical
// composition.
FinCategory hom_category(const Fin2Category& b, const std::string& a,
                         const std::string& b2);

ValidationReport check_adjunction(const Fin2Category& b, const Adjunction& adj);

// All verified (fR, etaR, epsR) for f, in table order. Any two results have
// isomorphic fR (checked; a failure means the 2-category is invalid).
std::vector<Adjunction> find_right_adjoints(const Fin2Category& b,
                                            const std::string& f);
std::optional<Adjunction> find_right_adjoint(const Fin2Category& b,
                                             const std::string& f);

// Left adjoints of f, returned as adjunctions in which f plays the role of
// the right adjoint: result.f is the left adjoint and result.fR == f.
std::vector<Adjunction> find_left_adjoints(const Fin2Category& b,
                                           const std::string& f);
std::optional<Adjunction> find_left_adjoint(const Fin2Category& b,
                                            const std::string& f);

// The canonical isomorphism a.fR => b.fR between two right adjoints of the
// same 1-morphism.
std::string compare_right_adjoints(const Fin2Category& b, const Adjunction& a1,
                                   const Adjunction& a2);

// Adjunction for outer∘inner built from adjunctions for the factors.
Adjunction compose_adjunctions(const Fin2Category& b, const Adjunction& outer,
                               const Adjunction& inner);

// The right mate g^R => f^R of a 2-cell theta : f => g.
std::string mate_right(const Fin2Category& b, const Adjunction& adj_f,
                       const Adjunction& adj_g, const std::string& theta);

// Requires a verified adjunction for every 1-morphism; throws
// StructuralError naming the first 1-morphism without one.
DoubleRightDual double_right_dual(
    const Fin2Category& b, const std::map<std::string, Adjunction>& choice);

}  // namespace daggerkit
