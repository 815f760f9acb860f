#pragma once

#include <map>
#include <string>
#include <vector>

#include "daggerkit/dagger1.hpp"
#include "daggerkit/dagger2.hpp"
#include "daggerkit/fin2cat.hpp"
#include "daggerkit/fincat.hpp"

namespace daggerkit {

// The quadratic extension F_{q²} over F_q with Frobenius conjugation
// x -> x^q. Elements are encoded as a + q*b for a + b*t, with the fixed
// irreducible quadratics t²+t+1 (q=2) and t²+1 (q=3), so encodings are
// stable across runs. All arithmetic is table-driven and immutable after
// construction.
class GaloisField {
 public:
  explicit GaloisField(int q);  // q ∈ {2, 3}; SizeGuardError otherwise

  int q() const { return q_; }
  int size() const { return q_ * q_; }
  int zero() const { return 0; }
  int one() const { return 1; }

  int add(int x, int y) const { return add_[x * size() + y]; }
  int neg(int x) const { return neg_[x]; }
  int mul(int x, int y) const { return mul_[x * size() + y]; }
  int inv(int x) const;  // throws StructuralError on 0
  int conj(int x) const { return conj_[x]; }
  bool in_base_field(int x) const { return conj_[x] == x; }
  const std::string& name(int x) const { return names_[x]; }

 private:
  int q_;
  std::vector<int> add_, neg_, mul_, inv_, conj_;
  std::vector<std::string> names_;
};

// Row-major matrix of field element indices. src dimension = cols, tgt
// dimension = rows, so composition is the matrix product.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> e;

  int at(int i, int j) const { return e[i * cols + j]; }
  bool operator==(const Matrix&) const = default;
};

Matrix mat_identity(int n);
Matrix mat_mul(const GaloisField& F, const Matrix& a, const Matrix& b);
Matrix mat_conj_transpose(const GaloisField& F, const Matrix& a);
bool mat_invertible(const GaloisField& F, Matrix a);
// The morphism id this matrix carries inside build_mat_category.
std::string mat_morphism_id(const Matrix& m);

// A finite group as an explicit multiplication table.
struct GroupTable {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> mult;  // mult[a][b] = a·b

  ValidationReport validate() const;
  int identity() const;       // -1 when there is none
  int inverse(int a) const;   // -1 when there is none
  int index_of(const std::string& e) const;
};

GroupTable cyclic_group(int n);  // e, g, g2, ...
GroupTable symmetric_group_3();  // permutations in one-line notation
GroupTable klein_four();

// dims 0..dmax, all matrices over F_{q²}, dagger = conjugate transpose.
// Guards: q ∈ {2,3}, dmax ≤ 2 for q = 2, dmax ≤ 1 for q = 3.
StrictDagger build_mat_category(int q, int dmax);

// Sets of size 0..nmax, relations, dagger = converse. Guard: nmax ≤ 3.
StrictDagger build_rel_category(int nmax);

// One-object groupoid on a group with dagger = inverse.
StrictDagger build_inverse_dagger_groupoid(const GroupTable& g);

// One object, 1-cells the group, 2-cells on each 1-cell the cyclic scalars
// mu_m plus an absorbing zero; canonical †1 = group inverse, †2 = scalar
// inverse. Guards: |g| ≤ 6, 1 ≤ m ≤ 4.
BiInvolutive build_graded_lines_2cat(const GroupTable& g, int m);

// Strict monoidal data on a strict dagger category, plus the duality data
// feeding psi1 of the delooping.
struct MonoidalDagger {
  StrictDagger dagger;
  std::string unit_object;
  std::map<std::pair<std::string, std::string>, std::string> tensor_obj;
  std::map<std::pair<std::string, std::string>, std::string> tensor_mor;
  std::map<std::string, std::string> dual_obj;
  std::map<std::string, std::string> dual_mor;
};

// One object, 1-cells the objects of the dagger category under tensor,
// 2-cells its morphisms; psi2 from the dagger, psi1 from the duality data,
// h and hf identities. Throws StructuralError naming the pair when the
// tensor is not closed.
CoherentDagger2Input build_delooping(const MonoidalDagger& m);

// The trivial coherent input of a bi-involutive structure whose †1 is
// strictly involutive: psi's from the daggers, h and hf identities.
CoherentDagger2Input trivial_coherent_input(const BiInvolutive& v);

}  // namespace daggerkit
