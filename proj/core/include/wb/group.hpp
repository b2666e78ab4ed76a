#ifndef WB_GROUP_HPP
#define WB_GROUP_HPP

#include <map>
#include <string>
#include <vector>

#include "wb/linalg.hpp"

namespace wb {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool mat_less(const CycMat& a, const CycMat& b);

struct GroupElement {
  CycMat matrix;
  int order = 1;
  int id = 0;
};

/// Conjugacy class annotated with the diagonalization data of a chosen
/// representative: exponents a_1 <= ... <= a_n with eigenvalues
/// zeta_r^{a_i}, and an eigenbasis whose column j satisfies
/// g v_j = zeta_r^{a_j} v_j.
struct ConjClass {
  int representative = 0;       // element id
  std::vector<int> members;     // sorted element ids
  int order = 1;                // order of the representative
  Rat age;                      // (sum a_i) / r
  std::vector<int> exponents;   // ascending
  CycMat eigenbasis;            // columns are eigenvectors
  bool junior() const { return age == 1; }
};

/// Finite abelian quotient G/[G,G] with a basis realizing the invariant
/// factor decomposition and discrete logs for every coset.
struct Abelianization {
  int order = 1;
  std::vector<int> coset_of;                // element id -> coset index
  std::vector<int> coset_rep;               // coset index -> min element id
  std::vector<std::vector<int>> mul;        // coset multiplication table
  std::vector<int> invariant_factors;       // d_1, d_2, ... with d_{i+1} | d_i
  std::vector<int> basis;                   // coset indices, order of basis[i] = d_i
  std::vector<std::vector<int>> dlog;       // coset -> exponent vector over basis
};

struct FiniteMatrixGroup {
  int conductor = 1;   // session conductor: lcm of element orders and entry field
  int dim = 3;
  std::string name;
  std::vector<GroupElement> elements;   // element 0 is the identity
  std::vector<std::vector<int>> mul_table;
  std::vector<int> inv_of;
  std::vector<ConjClass> classes;       // deterministic order
  std::vector<int> class_of;
  std::vector<int> commutator_ids;      // sorted; the subgroup [G,G]
  Abelianization ab;
  bool zeta_conjugate = false;          // alternative primitive-root convention

  int size() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return mul_table[a][b]; }
  int inv(int a) const { return inv_of[a]; }

  std::vector<int> junior_classes() const;  // class indices with age == 1
  std::vector<int> age2_classes() const;
  /// Non-identity elements with all but one eigenvalue equal to 1.
  std::vector<int> quasi_reflections() const;
  bool in_sl() const;
};

struct EnumerateOptions {
  int max_order = 4096;
  bool zeta_conjugate = false;  // use zeta_r^{-1} in diagonalizations
};

/// BFS closure of the generators; deterministic ordering by word length,
/// ties broken lexicographically by matrix entries.  Throws GroupError if
/// the closure exceeds max_order.
FiniteMatrixGroup enumerate_group(const std::vector<CycMat>& generators,
                                  const EnumerateOptions& opts = {});

Rat age_of(const ConjClass& c);

/// Exact diagonalization of a finite-order matrix via spectral projectors
/// P_j = (1/r) sum_k zeta_r^{-jk} g^k.  Returns ascending exponents and the
/// matching eigenbasis columns.
std::pair<std::vector<int>, CycMat> diagonalize(const CycMat& g, int order,
                                                int conductor,
                                                bool zeta_conjugate = false);

}  // namespace wb

#endif
