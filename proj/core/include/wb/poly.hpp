#ifndef WB_POLY_HPP
#define WB_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "wb/linalg.hpp"

namespace wb {

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exponent vector; all exponents non-negative.
using Exp = std::vector<int>;

int exp_total_degree(const Exp& e);
Exp exp_mul(const Exp& a, const Exp& b);
bool exp_divides(const Exp& a, const Exp& b);  // a | b componentwise
Exp exp_div(const Exp& b, const Exp& a);       // b - a
Exp exp_lcm(const Exp& a, const Exp& b);

/// Multivariate polynomial over Q(zeta_N), sparse map representation.
/// Terms are kept in ascending lexicographic order of exponent vectors;
/// term order questions are handled by the Groebner engine separately.
class Poly {
 public:
  Poly() : nvars_(0), conductor_(1) {}
  Poly(int nvars, int conductor) : nvars_(nvars), conductor_(conductor) {}

  static Poly constant(int nvars, const CycNum& c);
  static Poly monomial(int nvars, Exp e, const CycNum& c);
  static Poly variable(int nvars, int conductor, int i);

  int nvars() const { return nvars_; }
  int conductor() const { return conductor_; }
  const std::map<Exp, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  void add_term(const Exp& e, const CycNum& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const CycNum& c) const;
  Poly operator*(const Rat& r) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int e) const;

  /// Substitute variable i by images[i]; images live in a common ring.
  Poly substitute(const std::vector<Poly>& images) const;

  /// Linear substitution x_i -> sum_j A[i][j] x_j.
  Poly linear_substitute(const CycMat& a) const;

  /// Group action (g . f)(x) = f(g^{-1} x).
  Poly group_action(const CycMat& g) const;

  /// Lift coefficients into Q(zeta_M).
  Poly lifted(int M) const;

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;  // default names x, y, z, x4, x5, ...

 private:
  int nvars_;
  int conductor_;
  std::map<Exp, CycNum> terms_;
};

inline Poly operator*(const CycNum& c, const Poly& p) { return p * c; }

/// Monomial valuation attached to a diagonalized group element: weights
/// a_1..a_n on eigencoordinates u with x = B u.  The value on f is the
/// minimal weighted degree of f(B u); the leading form is the part of
/// f(B u) realizing it (expressed in the u coordinates).
class MonomialValuation {
 public:
  MonomialValuation() = default;
  MonomialValuation(std::vector<int> weights, const CycMat& eigenbasis);

  const std::vector<int>& weights() const { return weights_; }
  /// Is the eigenbasis the identity (valuation monomial in x already)?
  bool diagonal() const { return diagonal_; }

  /// f rewritten in eigencoordinates, f(B u).
  Poly to_eigen(const Poly& f) const;

  long value(const Poly& f) const;          // +inf (LONG_MAX) on 0
  long eigen_value(const Poly& fu) const;   // same, fu already in u coords
  Poly eigen_leading_form(const Poly& fu) const;

 private:
  std::vector<int> weights_;
  CycMat basis_;
  bool diagonal_ = true;
};

constexpr long kValInfinity = long(1) << 60;

}  // namespace wb

#endif
