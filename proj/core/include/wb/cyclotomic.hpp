#ifndef WB_CYCLOTOMIC_HPP
#define WB_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb {

using Rat = mpq_class;

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Euler totient.
int totient(int n);

/// Monic cyclotomic polynomial Phi_N, coefficient vector indexed by power.
/// Computed as the recursive quotient of x^N - 1 by the Phi_d for proper
/// divisors d; results are cached per N.
const std::vector<Rat>& cyclotomic_polynomial(int N);

/// Exact element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}
/// modulo Phi_N.  The representation is canonical, so structural equality
/// is field equality.  Values are immutable in spirit: all operations
/// return new values.
class CycNum {
 public:
  CycNum() : conductor_(1), c_(1, Rat(0)) {}
  explicit CycNum(int N) : conductor_(N), c_(totient(N), Rat(0)) { check_n(); }
  CycNum(int N, const Rat& r) : CycNum(N) {
    c_[0] = r;
    c_[0].canonicalize();
  }
  CycNum(int N, long r) : CycNum(N, Rat(r)) {}

  /// Raw polynomial in zeta_N (any length), reduced mod Phi_N.
  static CycNum from_poly(int N, std::vector<Rat> poly);

  /// zeta_r^power inside Q(zeta_N); requires r | N.
  static CycNum root(int N, int r, long power);

  int conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws if not rational

  CycNum operator-() const;
  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator/(const CycNum& o) const;
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  CycNum operator*(const Rat& r) const;
  CycNum inverse() const;
  CycNum pow(long e) const;
  /// Complex conjugation, zeta -> zeta^{-1}.
  CycNum conj() const;
  /// Galois map zeta -> zeta^k, gcd(k, N) = 1.
  CycNum galois(long k) const;

  /// Embed into Q(zeta_M) for N | M via zeta_N = zeta_M^{M/N}.
  CycNum lifted(int M) const;
  /// Try to express this element in Q(zeta_d) for d | N.
  std::optional<CycNum> rebased(int d) const;

  bool operator==(const CycNum& o) const {
    return conductor_ == o.conductor_ && c_ == o.c_;
  }
  bool operator!=(const CycNum& o) const { return !(*this == o); }
  /// Total order used only for deterministic tie-breaking.
  bool operator<(const CycNum& o) const;

  /// Text form in the expression grammar (z = zeta_N).
  std::string str() const;

  /// Multiplicative order if this is a root of unity, nullopt otherwise.
  std::optional<int> root_of_unity_order() const;

 private:
  void check_n() const {
    if (conductor_ < 1) throw ArithmeticError("conductor must be positive");
  }
  static void check_same(const CycNum& a, const CycNum& b);

  int conductor_;
  std::vector<Rat> c_;
};

inline CycNum operator*(const Rat& r, const CycNum& a) { return a * r; }

/// Lift both to the lcm of their conductors.
std::pair<CycNum, CycNum> to_common_conductor(const CycNum& a, const CycNum& b);

}  // namespace wb

#endif
