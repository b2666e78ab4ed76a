#ifndef WB_GROEBNER_HPP
#define WB_GROEBNER_HPP

#include <limits>
#include <string>
#include <vector>

#include "wb/poly.hpp"

namespace wb {

struct GroebnerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroebnerStats {
  long pairs_considered = 0;  // S-pairs selected for reduction
  long pairs_discarded = 0;   // eliminated by the pair criteria
  long basis_size = 0;
  int max_degree_seen = 0;
};

/// Budget exhaustion is a first-class outcome: the exception carries the
/// partial statistics so callers can report them.
struct BudgetError : GroebnerError {
  GroebnerStats stats;
  BudgetError(const std::string& what, GroebnerStats s)
      : GroebnerError(what), stats(s) {}
};

struct GroebnerOptions {
  long max_pairs = 1000000;
  int max_degree = std::numeric_limits<int>::max();
  long max_millis = -1;  // wall-clock cap; -1 = unlimited
};

/// Monomial order: graded reverse lexicographic (default), lexicographic,
/// or a block elimination order (grevlex within each block, the first
/// `eliminated` variables dominating the rest).
class TermOrder {
 public:
  static TermOrder grevlex();
  static TermOrder lex();
  static TermOrder block_elim(int eliminated);

  /// Negative / zero / positive as a < b / a == b / a > b.
  int cmp(const Exp& a, const Exp& b) const;
  bool less(const Exp& a, const Exp& b) const { return cmp(a, b) < 0; }
  int eliminated() const { return block_; }

 private:
  enum Kind { kGrevlex, kLex, kBlock };
  TermOrder(Kind k, int block) : kind_(k), block_(block) {}
  Kind kind_;
  int block_;
};

/// Leading term of a nonzero polynomial under the given order.
Exp leading_exp(const Poly& f, const TermOrder& order);
CycNum leading_coeff(const Poly& f, const TermOrder& order);

/// Reduced Groebner basis, computed on construction by Buchberger's
/// algorithm with the Gebauer-Moeller pair criteria and normal selection
/// strategy (sugar degree as tie-break).  The reduced basis is unique for
/// a given ideal and order, independent of generator input order.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Poly> gens, TermOrder order,
                GroebnerOptions opts = {});

  const std::vector<Poly>& basis() const { return basis_; }
  const TermOrder& order() const { return order_; }
  const GroebnerStats& stats() const { return stats_; }
  int nvars() const { return nvars_; }
  int conductor() const { return conductor_; }

  /// Remainder of f on multivariate division by the basis; zero iff f is
  /// in the ideal.
  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const;
  bool is_unit_ideal() const;

 private:
  TermOrder order_;
  int nvars_;
  int conductor_;
  std::vector<Poly> basis_;     // monic, interreduced, sorted by lead
  std::vector<Exp> lead_exps_;  // cached leading exponents
  GroebnerStats stats_;
};

/// Substitute 0 for the listed variables (indices into the exponent
/// vector); the ambient variable count is unchanged.
Poly set_vars_zero(const Poly& f, const std::vector<int>& zero_vars);

/// Does V(I) contain a point with the listed coordinates zero and all
/// remaining coordinates nonzero?  Decided exactly by localizing at the
/// product of the remaining variables (an extra inverse variable) and
/// testing whether the ideal becomes the unit ideal.
bool consistency_with_unit(const std::vector<Poly>& gens,
                           const std::vector<int>& zero_vars,
                           GroebnerOptions opts = {});

/// f in rad(I), by the same localization trick applied to f.
bool radical_membership(const Poly& f, const std::vector<Poly>& gens,
                        GroebnerOptions opts = {});

/// Generators of the saturation (gens) : f^infinity, computed by
/// adjoining an inverse of f (Rabinowitsch variable) and eliminating it
/// with a block order.  Throws GroebnerError when f is zero.
std::vector<Poly> saturation(const std::vector<Poly>& gens, const Poly& f,
                             GroebnerOptions opts = {});

/// Kernel of the ring map Z_i -> images[i]: generators of the ideal of
/// algebraic relations among the images, as polynomials in s = |images|
/// variables.  Computed by block elimination of the source variables.
std::vector<Poly> kernel_of_map(const std::vector<Poly>& images,
                                GroebnerOptions opts = {});

/// Krull dimension of the quotient by the ideal: n minus the minimum
/// number of variables meeting the support of every leading monomial
/// (equivalently, the maximum size of an independent variable set modulo
/// the leading-term ideal).  Returns n for the zero ideal and -1 for the
/// unit ideal.
int krull_dimension(const std::vector<Poly>& gens, int nvars,
                    GroebnerOptions opts = {});

}  // namespace wb

#endif
