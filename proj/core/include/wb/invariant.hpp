#ifndef WB_INVARIANT_HPP
#define WB_INVARIANT_HPP

#include "wb/group.hpp"
#include "wb/poly.hpp"

namespace wb {

struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Character of Ab(G): exponent c_i per invariant-factor basis element,
/// meaning the basis coset b_i acts on an eigenvector by zeta_{d_i}^{c_i}.
using Character = std::vector<int>;

/// Averaging projector (1/|H|) sum_h h.f over an explicit element list.
Poly reynolds(const std::vector<CycMat>& elements, const Poly& f);

bool is_invariant(const std::vector<CycMat>& elements, const Poly& f);

/// Character by which Ab(G) acts on f; requires f to be a [G,G]-invariant
/// Ab(G)-eigenvector (throws InvariantError otherwise).
Character character_of(const FiniteMatrixGroup& g, const Poly& f);

/// Decompose a [G,G]-invariant f into Ab(G)-eigencomponents; returns only
/// the nonzero components, each tagged with its character.  Characters are
/// enumerated in lexicographic tuple order.
std::vector<std::pair<Character, Poly>> character_split(
    const FiniteMatrixGroup& g, const Poly& f);

/// All characters of Ab(G) in lexicographic tuple order.
std::vector<Character> all_characters(const Abelianization& ab);

struct GradedGenerator {
  Poly poly;
  int degree = 0;
  Character character;
};

struct InvariantBasis {
  std::vector<GradedGenerator> generators;
  int degree_bound = 0;
  /// True when the bound reaches the Noether bound |H|, so the generator
  /// list is certified complete.
  bool certified = false;
};

/// Minimal Ab(G)-homogeneous generating set of C[x_1..x_n]^{[G,G]} up to
/// degree_bound: in each degree, a complement of the decomposable part of
/// the invariant space, split into character isotypic pieces.
InvariantBasis minimal_generators(const FiniteMatrixGroup& g,
                                  int degree_bound);

/// Same procedure for the full group G (trivial character only); used for
/// the central-fibre ideal.
InvariantBasis full_invariants(const FiniteMatrixGroup& g, int degree_bound);

/// Bases of the Ab(G)-isotypic pieces of the degree-d [G,G]-invariant
/// space, keyed by character; only nonzero pieces appear.  Deterministic
/// (reduced echelon bases over the lexicographic monomial list).
std::map<Character, std::vector<Poly>> isotypic_basis(
    const FiniteMatrixGroup& g, int degree);

/// Exact Molien series coefficients dim C[x]^H_d for d = 0..bound.
std::vector<long> molien_dims(const std::vector<CycMat>& elements,
                              int conductor, int bound);

/// Classical generator/relation data for the commutator invariants of the
/// SL(2) groups: p_1, p_2, p_3 in variables x, y (stored as 3-variable
/// polynomials with z unused) and the trinomial relation in Z_1, Z_2, Z_3.
struct SL2Invariants {
  std::vector<Poly> p;  // three generators
  Poly relation;        // in Z_1, Z_2, Z_3 (3-variable polynomial)
};

/// name in {"BD", "BT", "BO", "BI"}; q is the BD parameter (ignored
/// otherwise).  For BD the generators are x^q+y^q, x^q-y^q, xy with
/// relation Z_1^2 - Z_2^2 - 4 Z_3^q.
SL2Invariants sl2_invariant_table(const std::string& name, int q = 0);

/// Deterministic list of degree-d monomial exponents in nvars variables
/// (ascending lexicographic).
std::vector<Exp> monomials_of_degree(int nvars, int d);

}  // namespace wb

#endif
