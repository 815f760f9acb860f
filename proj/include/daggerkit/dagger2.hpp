#pragma once

#include <map>
#include <string>
#include <vector>

#include "daggerkit/dagger1.hpp"
#include "daggerkit/fin2cat.hpp"

namespace daggerkit {

// A 2-category with a strict top dagger †2 (on 2-cells, reverses vertical
// composition) and a weak dagger †1 (on 1-cells, reverses horizontal
// composition) that commute strictly, plus a †2-unitary trivialization phi of
// †1 squared.
struct BiInvolutive {
  TwoCatPtr base;
  std::map<std::string, std::string> dag2;      // 2-cell -> 2-cell
  std::map<std::string, std::string> dag1_on1;  // 1-cell -> 1-cell
  std::map<std::string, std::string> dag1_on2;  // 2-cell -> 2-cell
  std::map<std::string, std::string> phi;       // 1-cell f -> 2-iso f^{†1†1} => f
};

// Pre-unpacked coherent input for the bicategorical strictification: a pair
// of strictly involutive 2-functors psi1 (1-contravariant) and psi2
// (2-contravariant), object-level trivializations h1/h2, and per-1-morphism
// square fillers hf : h2_{b'} ∘ psi2(f) => f ∘ h2_b.
struct CoherentDagger2Input {
  TwoCatPtr base;
  std::map<std::string, std::string> psi1_on0, psi1_on1, psi1_on2;
  std::map<std::string, std::string> psi2_on0, psi2_on1, psi2_on2;
  std::map<std::string, std::string> h1;  // object -> invertible 1-cell psi1(b) -> b
  std::map<std::string, std::string> h2;  // object -> invertible 1-cell psi2(b) -> b
  std::map<std::string, std::string> hf;  // 1-cell -> invertible 2-cell
};

// Which objects / 1-morphisms carry flags. Empty lists mean "all".
struct FlagSelection {
  std::vector<std::string> objects;
  std::vector<std::string> one_morphisms;
};

enum class PartialDaggerKind { Top, First };

// Payload for the partial validators; only the maps the chosen kind needs
// are read.
struct PartialDaggerData {
  std::map<std::string, std::string> dag2;
  std::map<std::string, std::string> dag1_on1;
  std::map<std::string, std::string> dag1_on2;
  std::map<std::string, std::string> phi;
};

// A choice of right adjoints together with a trivialization theta of the
// double right dual, witnessed by 2-isos tau_f : f^{RR} ∘ theta_{b1} =>
// theta_{b2} ∘ f.
struct Pivotal {
  TwoCatPtr base;
  std::map<std::string, Adjunction> adjoint_choice;
  std::map<std::string, std::string> theta;  // object -> invertible 1-cell b -> b
  std::map<std::string, std::string> tau;    // 1-cell -> invertible 2-cell
};

ValidationReport validate_bi_involutive(const BiInvolutive& v);

// Checks the strictness contract of CoherentDagger2Input: psi functoriality
// with the right variances, strict involutivity, h-coherences, and the hf
// square typing, invertibility, identity and composition closure.
ValidationReport validate_coherent_input(const CoherentDagger2Input& c);

// Builds the strictified bi-involutive structure on the flagged cells:
// f^{†1} = h1_b ∘ psi1(f) ∘ (h1_{b'})^{-1}, †2 = psi2 conjugated by the hf
// data, phi = identities. Throws StructuralError when a flag is missing or
// the input fails its strictness contract.
BiInvolutive strictify_bicategory(const CoherentDagger2Input& c,
                                  const FlagSelection& flags = {});

// Fills missing hf entries when they are forced: identities get id(h2_b),
// other 1-morphisms get the unique invertible filler of their square when
// exactly one exists. Throws StructuralError naming the first 1-morphism
// whose filler is absent or ambiguous.
CoherentDagger2Input auto_derive_hf(CoherentDagger2Input c);

ValidationReport validate_partial_dagger(const Fin2Category& b,
                                         PartialDaggerKind which,
                                         const PartialDaggerData& data);

ValidationReport validate_pivotal(const Pivotal& p);

// Bridge into the 1-categorical theory: the hom-category hom(a, b2) with †2
// restricted is a strict dagger category.
StrictDagger hom_dagger(const BiInvolutive& v, const std::string& a,
                        const std::string& b2);

// †1 sends a right adjunction for f to a right adjunction for fR^{†1}
// (cells transported through dag1_on2).
Adjunction transport_adjunction_dag1(const BiInvolutive& v,
                                     const Adjunction& adj);

}  // namespace daggerkit
