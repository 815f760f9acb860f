#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "daggerkit/errors.hpp"

namespace daggerkit {

enum class ViolationKind { Structural, Axiom };

struct Violation {
  ViolationKind kind = ViolationKind::Axiom;
  std::string axiom;    // short class tag, e.g. "associativity"
  std::string witness;  // first offending ids in table order
};

// Outcome of a validator. `violations` empty means the structure is valid;
// `notes` carries non-failing observations (warnings, unchecked conditions).
struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
  void add_structural(std::string axiom, std::string witness);
  void add_axiom(std::string axiom, std::string witness);
  void add_note(std::string note);
  void merge(const ValidationReport& other, const std::string& prefix = "");
  std::string summary() const;
};

struct Morphism {
  std::string id;
  std::string src;
  std::string tgt;

  bool operator==(const Morphism&) const = default;
};

// An explicitly tabulated finite category. Object and morphism ids are opaque
// strings; ordering is fixed by input order so reports are deterministic.
// The compose table holds (g, f) -> g∘f for exactly the composable pairs
// (tgt(f) == src(g)).
struct FinCategory {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::map<std::string, std::string> identities;
  std::map<std::pair<std::string, std::string>, std::string> compose;

  bool operator==(const FinCategory&) const = default;
};

using CatPtr = std::shared_ptr<const FinCategory>;

CatPtr make_category(FinCategory c);

// Index of a FinCategory resolved to dense integers, for table scans.
// Building one surfaces structural problems; axiom checks assume a built
// table.
class CatTable {
 public:
  // Returns nullopt and fills `report` when ids fail to resolve or tables
  // have missing/duplicate entries.
  static std::optional<CatTable> build(const FinCategory& c,
                                       ValidationReport* report = nullptr);

  int n_objects() const { return static_cast<int>(obj_ids_.size()); }
  int n_morphisms() const { return static_cast<int>(mor_ids_.size()); }

  int obj_index(const std::string& id) const;  // -1 when absent
  int mor_index(const std::string& id) const;
  const std::string& obj_id(int i) const { return obj_ids_[i]; }
  const std::string& mor_id(int i) const { return mor_ids_[i]; }

  int src(int m) const { return src_[m]; }
  int tgt(int m) const { return tgt_[m]; }
  int identity(int o) const { return identity_[o]; }
  // -1 when (g, f) is not in the compose table.
  int comp(int g, int f) const {
    return comp_[static_cast<size_t>(g) * mor_ids_.size() + f];
  }
  bool composable(int g, int f) const { return tgt_[f] == src_[g]; }

  // Inverse morphism index, or -1. Precomputed for the whole category.
  int inverse(int m) const { return inverse_[m]; }
  bool is_iso(int m) const { return inverse_[m] >= 0; }

 private:
  CatTable() = default;
  std::vector<std::string> obj_ids_;
  std::vector<std::string> mor_ids_;
  std::map<std::string, int> obj_index_;
  std::map<std::string, int> mor_index_;
  std::vector<int> src_, tgt_, identity_, inverse_;
  std::vector<int32_t> comp_;
};

// A functor between tabulated categories. `contravariant` encodes a functor
// into the opposite of `target` without materializing it: src/tgt and
// composition order are reversed on the target side.
struct FinFunctor {
  CatPtr source;
  CatPtr target;
  std::map<std::string, std::string> obj_map;
  std::map<std::string, std::string> mor_map;
  bool contravariant = false;
};

FinFunctor identity_functor(const CatPtr& c);
// Variance XORs; throws StructuralError when g.source and f.target differ.
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

// Components indexed by objects of the (common) source category. Source and
// target functors must share categories and variance.
struct NatTransform {
  FinFunctor source_functor;
  FinFunctor target_functor;
  std::map<std::string, std::string> components;
};

struct EquivalenceReport {
  bool essentially_surjective = false;
  bool fully_faithful = false;
  std::vector<std::string> essential_image;  // in target object order
};

ValidationReport validate_category(const FinCategory& c);

// g with g∘f = id_src(f) and f∘g = id_tgt(f), if one exists. Throws
// StructuralError when f does not resolve or two distinct inverses exist
// (which only happens on invalid input).
std::optional<std::string> inverse_of(const FinCategory& c,
                                      const std::string& f);

// Maximal subgroupoid: same objects, exactly the invertible morphisms.
FinCategory core_groupoid(const FinCategory& c);

FinCategory opposite(const FinCategory& c);

ValidationReport validate_functor(const FinFunctor& f);

ValidationReport check_nat_transform(const NatTransform& a);
bool is_nat_iso(const NatTransform& a);

// Essential image, essential surjectivity and full faithfulness of a
// covariant functor between valid categories.
EquivalenceReport equivalence_report(const FinFunctor& f);

// ---- small helpers shared across modules ----

bool same_category(const FinCategory& a, const FinCategory& b);
bool is_groupoid(const FinCategory& c);
std::vector<std::string> hom_set(const FinCategory& c, const std::string& a,
                                 const std::string& b);
// Some invertible u : x -> y, if the objects are isomorphic.
std::optional<std::string> iso_witness(const FinCategory& c,
                                       const std::string& x,
                                       const std::string& y);

inline std::string pair_witness(const std::string& a, const std::string& b) {
  return "(" + a + ", " + b + ")";
}

}  // namespace daggerkit
