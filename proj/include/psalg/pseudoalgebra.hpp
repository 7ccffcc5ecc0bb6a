#pragma once

#include "psalg/pseudo.hpp"
#include "psalg/report.hpp"

namespace psalg {

// Coefficient vector of an element sum h_i e_i of the free module H^rank.
using ModuleElem = std::vector<HElem>;

ModuleElem module_zero(int rank);
ModuleElem basis_vector(const HopfAlgebra& H, int rank, int i);
ModuleElem module_add(const ModuleElem& a, const ModuleElem& b);
ModuleElem module_sub(const ModuleElem& a, const ModuleElem& b);
ModuleElem module_scale(const HopfAlgebra& H, const HElem& h, const ModuleElem& a);
bool module_is_zero(const ModuleElem& a);

// Pseudoproduct coefficients: e_i * e_j = sum_k alpha[(i,j,k)] (x)_H e_k,
// every entry an element of H (x) H. Tables add/scale entrywise, which is
// what the derived-structure builders produce.
struct ProductTable {
  int rank = 1;
  std::map<std::tuple<int, int, int>, Tensor> entries;

  const Tensor* find(int i, int j, int k) const {
    auto it = entries.find({i, j, k});
    return it == entries.end() ? nullptr : &it->second;
  }
  void set(int i, int j, int k, Tensor t) {
    if (t.terms.empty())
      entries.erase({i, j, k});
    else
      entries[{i, j, k}] = std::move(t);
  }
};

ProductTable table_add(const ProductTable& a, const ProductTable& b);
ProductTable table_scale(const ProductTable& a, const Rational& c);
ProductTable table_neg(const ProductTable& a);
int table_degree(const HopfAlgebra& H, const ProductTable& t);  // max slot degree

enum class Flavor { Associative, Lie, Unchecked };

struct Pseudoalgebra {
  HopfPtr hopf;
  ProductTable table;
  Flavor flavor = Flavor::Unchecked;

  int rank() const { return table.rank; }
  const HopfAlgebra& H() const { return *hopf; }
};

// Bilinear extension of the table through H-bilinearity
// (h a * g b = (h (x) g (x)_H 1)(a * b)), normalized.
PseudoElem pseudoproduct(const HopfAlgebra& H, const ProductTable& table,
                         const ModuleElem& a, const ModuleElem& b);
PseudoElem pseudoproduct(const Pseudoalgebra& A, const ModuleElem& a,
                         const ModuleElem& b);

// (a *inner b) *outer c and a *outer (b *inner c) in H^{(x)3} (x)_H M, via
// the extension formulas
//   (beta (x)_H d) * c = sum (beta (x) 1)(Delta (x) id)(alpha_i) (x)_H c_i
//   a * (beta (x)_H d) = sum (1 (x) beta)(id (x) Delta)(alpha_i) (x)_H c_i
// applied to canonical decompositions.
PseudoElem compose_left(const HopfAlgebra& H, const ProductTable& outer,
                        const ProductTable& inner, const ModuleElem& a,
                        const ModuleElem& b, const ModuleElem& c);
PseudoElem compose_right(const HopfAlgebra& H, const ProductTable& outer,
                         const ProductTable& inner, const ModuleElem& a,
                         const ModuleElem& b, const ModuleElem& c);

inline PseudoElem compose_left(const Pseudoalgebra& A, const ModuleElem& a,
                               const ModuleElem& b, const ModuleElem& c) {
  return compose_left(A.H(), A.table, A.table, a, b, c);
}
inline PseudoElem compose_right(const Pseudoalgebra& A, const ModuleElem& a,
                                const ModuleElem& b, const ModuleElem& c) {
  return compose_right(A.H(), A.table, A.table, a, b, c);
}

// Associativity on all basis triples, or skew-commutativity on pairs plus
// the Jacobi identity
//   [a*[b*c]] = [[a*b]*c] + ((sigma (x) id) (x)_H id)[b*[a*c]]
// on all basis triples. Failures are reported with their residuals.
Report check_structure(const Pseudoalgebra& A, Flavor flavor, int threads = 1);

// Current pseudoalgebra over a k-algebra with the given structure constants
// m[i][j] = vector of (k, coeff): alpha_k^{ij} = m_{ij}^k 1 (x) 1.
Pseudoalgebra current(HopfPtr H, int base_dim,
                      const std::map<std::tuple<int, int, int>, Rational>& base_table,
                      Flavor flavor = Flavor::Unchecked);

// Rank-1 Lie table over U(delta): alpha = r + s (x) 1 - 1 (x) s.
Tensor rank1_alpha(const HopfAlgebra& H, const Tensor& r, const HElem& s);

// Evaluates [r, Delta(s)] = 0 and the six-term identity
//   [r12,r13] + r12 s3 + [r12,r23] + r23 s1 + [r13,r23] - r13 s2 = 0
// in H^{(x)3}. r must be an antisymmetric degree-(1,1) tensor, s a generator
// combination with eps(s) = 0.
Report rank1_lie_conditions(const HopfAlgebra& H, const Tensor& r, const HElem& s);

// Decomposition of a table entry back into (r, s): returns false when alpha
// is not of the Lemma-4.1 shape r + s (x) 1 - 1 (x) s.
bool split_rank1_alpha(const HopfAlgebra& H, const Tensor& alpha, Tensor& r,
                       HElem& s);

Pseudoalgebra rank1_lie_algebra(HopfPtr H, const Tensor& alpha);

// Canonical coefficients of p as table-style entries: p = sum_k out[k] (x)_H e_k.
std::vector<Tensor> coefficients_of(const HopfAlgebra& H, const PseudoElem& p);

}  // namespace psalg
