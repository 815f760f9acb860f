#include "daggerkit/examples.hpp"

#include <algorithm>
#include <array>

namespace daggerkit {

GaloisField::GaloisField(int q) : q_(q) {
  if (q != 2 && q != 3) {
    throw SizeGuardError("GaloisField: q must be 2 or 3, got " + std::to_string(q));
  }
  const int n = size();
  auto enc = [&](int a, int b) { return (a % q_ + q_) % q_ + q_ * ((b % q_ + q_) % q_); };

  add_.assign(n * n, 0);
  neg_.assign(n, 0);
  mul_.assign(n * n, 0);
  inv_.assign(n, -1);
  conj_.assign(n, 0);
  names_.assign(n, "");

  for (int x = 0; x < n; ++x) {
    int a = x % q_, b = x / q_;
    for (int y = 0; y < n; ++y) {
      int c = y % q_, d = y / q_;
      add_[x * n + y] = enc(a + c, b + d);
      // (a+bt)(c+dt) = ac + (ad+bc)t + bd t², with t² reduced by the fixed
      // irreducible quadratic: t² = t+1 for q=2, t² = -1 for q=3.
      if (q_ == 2) {
        mul_[x * n + y] = enc(a * c + b * d, a * d + b * c + b * d);
      } else {
        mul_[x * n + y] = enc(a * c - b * d, a * d + b * c);
      }
    }
    neg_[x] = enc(-a, -b);
    conj_[x] = q_ == 2 ? enc(a + b, b) : enc(a, -b);
    if (b == 0) {
      names_[x] = std::to_string(a);
    } else {
      std::string bt = (b == 1 ? "t" : std::to_string(b) + "t");
      names_[x] = a == 0 ? bt : std::to_string(a) + "+" + bt;
    }
  }
  for (int x = 1; x < n; ++x) {
    for (int y = 1; y < n; ++y) {
      if (mul_[x * n + y] == one()) {
        inv_[x] = y;
        break;
      }
    }
  }
}

int GaloisField::inv(int x) const {
  if (x == 0) throw StructuralError("GaloisField: inverse of zero");
  return inv_[x];
}

Matrix mat_identity(int n) {
  Matrix m;
  m.rows = m.cols = n;
  m.e.assign(n * n, 0);
  for (int i = 0; i < n; ++i) m.e[i * n + i] = 1;  // field encoding of 1
  return m;
}

Matrix mat_mul(const GaloisField& F, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw StructuralError("mat_mul: dimension mismatch");
  Matrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.e.assign(out.rows * out.cols, F.zero());
  for (int i = 0; i < out.rows; ++i) {
    for (int j = 0; j < out.cols; ++j) {
      int acc = F.zero();
      for (int k = 0; k < a.cols; ++k) {
        acc = F.add(acc, F.mul(a.at(i, k), b.at(k, j)));
      }
      out.e[i * out.cols + j] = acc;
    }
  }
  return out;
}

Matrix mat_conj_transpose(const GaloisField& F, const Matrix& a) {
  Matrix out;
  out.rows = a.cols;
  out.cols = a.rows;
  out.e.assign(a.e.size(), 0);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      out.e[j * out.cols + i] = F.conj(a.at(i, j));
    }
  }
  return out;
}

bool mat_invertible(const GaloisField& F, Matrix a) {
  if (a.rows != a.cols) return false;
  const int n = a.rows;
  // Gaussian elimination over the field tables.
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a.at(r, col) != F.zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.e[pivot * n + j], a.e[col * n + j]);
      }
    }
    int pinv = F.inv(a.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      int factor = F.mul(a.at(r, col), pinv);
      if (factor == F.zero()) continue;
      for (int j = 0; j < n; ++j) {
        a.e[r * n + j] =
            F.add(a.e[r * n + j], F.neg(F.mul(factor, a.at(col, j))));
      }
    }
  }
  return true;
}

std::string mat_morphism_id(const Matrix& m) {
  std::string id = "M" + std::to_string(m.cols) + ">" + std::to_string(m.rows) + ":";
  for (int v : m.e) id += static_cast<char>('0' + v);
  return id;
}

ValidationReport GroupTable::validate() const {
  ValidationReport rep;
  const int n = static_cast<int>(elements.size());
  if (static_cast<int>(mult.size()) != n) {
    rep.add_structural("table-shape", "mult rows != element count");
    return rep;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mult[a].size()) != n) {
      rep.add_structural("table-shape", elements[a]);
      return rep;
    }
    for (int b = 0; b < n; ++b) {
      if (mult[a][b] < 0 || mult[a][b] >= n) {
        rep.add_structural("table-range", pair_witness(elements[a], elements[b]));
        return rep;
      }
    }
  }
  if (identity() < 0) rep.add_axiom("identity", "no two-sided identity");
  for (int a = 0; a < n && rep.ok(); ++a) {
    if (inverse(a) < 0) rep.add_axiom("inverses", elements[a]);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
          rep.add_axiom("associativity", "(" + elements[a] + ", " + elements[b] +
                                             ", " + elements[c] + ")");
        }
      }
    }
  }
  return rep;
}

int GroupTable::identity() const {
  const int n = static_cast<int>(elements.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      ok = mult[e][a] == a && mult[a][e] == a;
    }
    if (ok) return e;
  }
  return -1;
}

int GroupTable::inverse(int a) const {
  int e = identity();
  if (e < 0) return -1;
  for (int b = 0; b < static_cast<int>(elements.size()); ++b) {
    if (mult[a][b] == e && mult[b][a] == e) return b;
  }
  return -1;
}

int GroupTable::index_of(const std::string& e) const {
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == e) return static_cast<int>(i);
  }
  return -1;
}

GroupTable cyclic_group(int n) {
  GroupTable g;
  for (int i = 0; i < n; ++i) {
    g.elements.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  }
  g.mult.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
  }
  return g;
}

GroupTable symmetric_group_3() {
  // Permutations of {0,1,2} in lexicographic one-line notation.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  GroupTable g;
  for (const auto& q : perms) {
    g.elements.push_back(std::to_string(q[0]) + std::to_string(q[1]) +
                         std::to_string(q[2]));
  }
  const int n = static_cast<int>(perms.size());
  g.mult.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> c;
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.mult[a][b] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return g;
}

GroupTable klein_four() {
  GroupTable g;
  g.elements = {"e", "a", "b", "c"};
  g.mult = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return g;
}

namespace {

void require_valid_dagger(const StrictDagger& d, const char* who) {
  ValidationReport base = validate_category(*d.base);
  if (!base.ok()) {
    throw Error(std::string(who) + ": built category invalid: " + base.summary());
  }
  ValidationReport rep = validate_strict_dagger(d);
  if (!rep.ok()) {
    throw Error(std::string(who) + ": built dagger invalid: " + rep.summary());
  }
}

}  // namespace

StrictDagger build_mat_category(int q, int dmax) {
  if (q != 2 && q != 3) {
    throw SizeGuardError("build_mat_category: q must be 2 or 3");
  }
  if ((q == 2 && (dmax < 0 || dmax > 2)) || (q == 3 && (dmax < 0 || dmax > 1))) {
    throw SizeGuardError("build_mat_category: dmax out of range for q = " +
                         std::to_string(q));
  }
  GaloisField F(q);
  const int nel = F.size();

  FinCategory cat;
  std::vector<Matrix> mats;
  for (int d = 0; d <= dmax; ++d) cat.objects.push_back(std::to_string(d));

  for (int src = 0; src <= dmax; ++src) {
    for (int tgt = 0; tgt <= dmax; ++tgt) {
      const int cells = src * tgt;
      long long total = 1;
      for (int i = 0; i < cells; ++i) total *= nel;
      for (long long k = 0; k < total; ++k) {
        Matrix m;
        m.rows = tgt;
        m.cols = src;
        m.e.assign(cells, 0);
        long long rest = k;
        for (int i = cells - 1; i >= 0; --i) {
          m.e[i] = static_cast<int>(rest % nel);
          rest /= nel;
        }
        cat.morphisms.push_back(
            {mat_morphism_id(m), std::to_string(src), std::to_string(tgt)});
        mats.push_back(std::move(m));
      }
    }
  }
  for (int d = 0; d <= dmax; ++d) {
    cat.identities[std::to_string(d)] = mat_morphism_id(mat_identity(d));
  }
  for (const auto& g : mats) {
    for (const auto& f : mats) {
      if (f.rows != g.cols) continue;
      cat.compose[{mat_morphism_id(g), mat_morphism_id(f)}] =
          mat_morphism_id(mat_mul(F, g, f));
    }
  }

  StrictDagger out;
  out.base = make_category(std::move(cat));
  for (const auto& m : mats) {
    out.dag[mat_morphism_id(m)] = mat_morphism_id(mat_conj_transpose(F, m));
  }
  require_valid_dagger(out, "build_mat_category");
  return out;
}

namespace {

std::string rel_id(int src, int tgt, unsigned mask) {
  return "R" + std::to_string(src) + ">" + std::to_string(tgt) + ":" +
         std::to_string(mask);
}

}  // namespace

StrictDagger build_rel_category(int nmax) {
  if (nmax < 0 || nmax > 3) {
    throw SizeGuardError("build_rel_category: nmax must be at most 3");
  }

  FinCategory cat;
  struct Rel {
    int src, tgt;
    unsigned mask;
  };
  std::vector<Rel> rels;
  for (int k = 0; k <= nmax; ++k) cat.objects.push_back(std::to_string(k));

  for (int src = 0; src <= nmax; ++src) {
    for (int tgt = 0; tgt <= nmax; ++tgt) {
      unsigned total = 1u << (src * tgt);
      for (unsigned mask = 0; mask < total; ++mask) {
        cat.morphisms.push_back(
            {rel_id(src, tgt, mask), std::to_string(src), std::to_string(tgt)});
        rels.push_back({src, tgt, mask});
      }
    }
  }
  for (int k = 0; k <= nmax; ++k) {
    unsigned diag = 0;
    for (int i = 0; i < k; ++i) diag |= 1u << (i * k + i);
    cat.identities[std::to_string(k)] = rel_id(k, k, diag);
  }
  auto has = [](const Rel& r, int i, int j) {
    return (r.mask >> (i * r.tgt + j)) & 1u;
  };
  for (const auto& s : rels) {
    for (const auto& r : rels) {
      if (r.tgt != s.src) continue;
      unsigned mask = 0;
      for (int i = 0; i < r.src; ++i) {
        for (int k = 0; k < s.tgt; ++k) {
          bool rel = false;
          for (int j = 0; j < r.tgt && !rel; ++j) {
            rel = has(r, i, j) && has(s, j, k);
          }
          if (rel) mask |= 1u << (i * s.tgt + k);
        }
      }
      cat.compose[{rel_id(s.src, s.tgt, s.mask), rel_id(r.src, r.tgt, r.mask)}] =
          rel_id(r.src, s.tgt, mask);
    }
  }

  StrictDagger out;
  out.base = make_category(std::move(cat));
  for (const auto& r : rels) {
    unsigned conv = 0;
    for (int i = 0; i < r.src; ++i) {
      for (int j = 0; j < r.tgt; ++j) {
        if (has(r, i, j)) conv |= 1u << (j * r.src + i);
      }
    }
    out.dag[rel_id(r.src, r.tgt, r.mask)] = rel_id(r.tgt, r.src, conv);
  }
  require_valid_dagger(out, "build_rel_category");
  return out;
}

StrictDagger build_inverse_dagger_groupoid(const GroupTable& g) {
  ValidationReport grp = g.validate();
  if (!grp.ok()) {
    throw StructuralError("build_inverse_dagger_groupoid: invalid group table: " +
                          grp.summary());
  }
  FinCategory cat;
  cat.objects = {"*"};
  for (const auto& e : g.elements) cat.morphisms.push_back({e, "*", "*"});
  cat.identities["*"] = g.elements[g.identity()];
  const int n = static_cast<int>(g.elements.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      cat.compose[{g.elements[a], g.elements[b]}] = g.elements[g.mult[a][b]];
    }
  }

  StrictDagger out;
  out.base = make_category(std::move(cat));
  for (int a = 0; a < n; ++a) {
    out.dag[g.elements[a]] = g.elements[g.inverse(a)];
  }
  require_valid_dagger(out, "build_inverse_dagger_groupoid");
  return out;
}

namespace {

std::string scalar_id(const std::string& one_cell, int k) {
  return one_cell + ":z" + std::to_string(k);
}

std::string zero_id(const std::string& one_cell) { return one_cell + ":zero"; }

}  // namespace

BiInvolutive build_graded_lines_2cat(const GroupTable& g, int m) {
  if (static_cast<int>(g.elements.size()) > 6) {
    throw SizeGuardError("build_graded_lines_2cat: |g| must be at most 6");
  }
  if (m < 1 || m > 4) {
    throw SizeGuardError("build_graded_lines_2cat: m must be in 1..4");
  }
  ValidationReport grp = g.validate();
  if (!grp.ok()) {
    throw StructuralError("build_graded_lines_2cat: invalid group table: " +
                          grp.summary());
  }

  const int n = static_cast<int>(g.elements.size());
  Fin2Category b;
  b.objects = {"*"};
  for (const auto& e : g.elements) b.one_morphisms.push_back({e, "*", "*"});
  b.one_identities["*"] = g.elements[g.identity()];
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      b.one_compose[{g.elements[a], g.elements[c]}] = g.elements[g.mult[a][c]];
    }
  }
  for (const auto& e : g.elements) {
    for (int k = 0; k < m; ++k) b.two_morphisms.push_back({scalar_id(e, k), e, e});
    b.two_morphisms.push_back({zero_id(e), e, e});
    b.two_identities[e] = scalar_id(e, 0);
  }
  auto vid = [&](const std::string& cell, int k, bool zero) {
    return zero ? zero_id(cell) : scalar_id(cell, ((k % m) + m) % m);
  };
  for (const auto& e : g.elements) {
    for (int k1 = 0; k1 <= m; ++k1) {
      for (int k2 = 0; k2 <= m; ++k2) {
        bool z = k1 == m || k2 == m;
        b.vertical[{vid(e, k1, k1 == m), vid(e, k2, k2 == m)}] =
            vid(e, k1 + k2, z);
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      const std::string& ea = g.elements[a];
      const std::string& ec = g.elements[c];
      const std::string& eac = g.elements[g.mult[a][c]];
      for (int k1 = 0; k1 <= m; ++k1) {
        for (int k2 = 0; k2 <= m; ++k2) {
          bool z = k1 == m || k2 == m;
          b.horizontal[{vid(ea, k1, k1 == m), vid(ec, k2, k2 == m)}] =
              vid(eac, k1 + k2, z);
        }
      }
    }
  }

  BiInvolutive out;
  out.base = make_2category(std::move(b));
  for (int a = 0; a < n; ++a) {
    const std::string& e = g.elements[a];
    const std::string& einv = g.elements[g.inverse(a)];
    out.dag1_on1[e] = einv;
    out.phi[e] = scalar_id(e, 0);
    for (int k = 0; k < m; ++k) {
      out.dag1_on2[scalar_id(e, k)] = scalar_id(einv, k);
      out.dag2[scalar_id(e, k)] = scalar_id(e, (m - k) % m);
    }
    out.dag1_on2[zero_id(e)] = zero_id(einv);
    out.dag2[zero_id(e)] = zero_id(e);
  }

  ValidationReport two = validate_2category(*out.base);
  if (!two.ok()) {
    throw Error("build_graded_lines_2cat: built 2-category invalid: " + two.summary());
  }
  ValidationReport bi = validate_bi_involutive(out);
  if (!bi.ok()) {
    throw Error("build_graded_lines_2cat: canonical daggers invalid: " + bi.summary());
  }
  return out;
}

CoherentDagger2Input build_delooping(const MonoidalDagger& m) {
  const FinCategory& d = *m.dagger.base;

  // Tensor closure and strictness.
  for (const auto& a : d.objects) {
    for (const auto& b : d.objects) {
      auto it = m.tensor_obj.find({a, b});
      if (it == m.tensor_obj.end() ||
          std::find(d.objects.begin(), d.objects.end(), it->second) ==
              d.objects.end()) {
        throw StructuralError("build_delooping: tensor not closed at " +
                              pair_witness(a, b));
      }
    }
  }
  CatTable t = *CatTable::build(d);
  auto ten_o = [&](const std::string& a, const std::string& b) {
    return m.tensor_obj.at({a, b});
  };
  for (const auto& a : d.objects) {
    if (ten_o(m.unit_object, a) != a || ten_o(a, m.unit_object) != a) {
      throw StructuralError("build_delooping: unit law fails at " + a);
    }
    for (const auto& b : d.objects) {
      for (const auto& c : d.objects) {
        if (ten_o(ten_o(a, b), c) != ten_o(a, ten_o(b, c))) {
          throw StructuralError("build_delooping: tensor not associative at (" +
                                a + ", " + b + ", " + c + ")");
        }
      }
    }
  }
  for (const auto& f : d.morphisms) {
    for (const auto& g : d.morphisms) {
      if (!m.tensor_mor.count({f.id, g.id})) {
        throw StructuralError("build_delooping: tensor missing on morphisms " +
                              pair_witness(f.id, g.id));
      }
    }
  }

  Fin2Category b;
  b.objects = {"*"};
  for (const auto& o : d.objects) b.one_morphisms.push_back({o, "*", "*"});
  b.one_identities["*"] = m.unit_object;
  for (const auto& a : d.objects) {
    for (const auto& c : d.objects) {
      b.one_compose[{a, c}] = ten_o(a, c);
    }
  }
  for (const auto& f : d.morphisms) {
    b.two_morphisms.push_back({f.id, f.src, f.tgt});
  }
  for (const auto& o : d.objects) b.two_identities[o] = d.identities.at(o);
  b.vertical = d.compose;
  for (const auto& [pair, val] : m.tensor_mor) b.horizontal[pair] = val;

  CoherentDagger2Input out;
  out.base = make_2category(std::move(b));
  out.psi1_on0["*"] = "*";
  out.psi2_on0["*"] = "*";
  for (const auto& o : d.objects) {
    out.psi1_on1[o] = m.dual_obj.at(o);
    out.psi2_on1[o] = o;
  }
  for (const auto& f : d.morphisms) {
    out.psi1_on2[f.id] = m.dual_mor.at(f.id);
    out.psi2_on2[f.id] = m.dagger.dag.at(f.id);
  }
  out.h1["*"] = m.unit_object;
  out.h2["*"] = m.unit_object;
  for (const auto& o : d.objects) out.hf[o] = d.identities.at(o);

  ValidationReport two = validate_2category(*out.base);
  if (!two.ok()) {
    throw Error("build_delooping: built 2-category invalid: " + two.summary());
  }
  return out;
}

CoherentDagger2Input trivial_coherent_input(const BiInvolutive& v) {
  CoherentDagger2Input out;
  out.base = v.base;
  for (const auto& o : v.base->objects) {
    out.psi1_on0[o] = o;
    out.psi2_on0[o] = o;
    out.h1[o] = v.base->one_identities.at(o);
    out.h2[o] = v.base->one_identities.at(o);
  }
  out.psi1_on1 = v.dag1_on1;
  out.psi1_on2 = v.dag1_on2;
  for (const auto& f : v.base->one_morphisms) {
    out.psi2_on1[f.id] = f.id;
    out.hf[f.id] = v.base->two_identities.at(f.id);
  }
  out.psi2_on2 = v.dag2;
  return out;
}

}  // namespace daggerkit
