#include "wb/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wb {

int totient(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Quotient of a by monic b; remainder must vanish when exact == true.
std::vector<Rat> poly_div(const std::vector<Rat>& a, const std::vector<Rat>& b,
                          bool exact) {
  std::vector<Rat> rem = a;
  int db = static_cast<int>(b.size()) - 1;
  while (db > 0 && b[db] == 0) --db;
  std::vector<Rat> quot(std::max<int>(1, static_cast<int>(rem.size()) - db), 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i] == 0) continue;
    Rat q = rem[i] / b[db];
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
  }
  if (exact) {
    for (const auto& r : rem)
      if (r != 0) throw ArithmeticError("inexact polynomial division");
  }
  return quot;
}

std::vector<Rat> poly_rem(std::vector<Rat> rem, const std::vector<Rat>& b) {
  int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i] == 0) continue;
    Rat q = rem[i] / b[db];
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
  }
  rem.resize(db);
  return rem;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::mutex g_phi_mutex;
std::map<int, std::vector<Rat>> g_phi_cache;

}  // namespace

const std::vector<Rat>& cyclotomic_polynomial(int N) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(N);
  if (it != g_phi_cache.end()) return it->second;

  // Compute Phi_d for all d | N bottom-up, without recursing under the lock.
  std::vector<int> divisors;
  for (int d = 1; d <= N; ++d)
    if (N % d == 0) divisors.push_back(d);
  for (int d : divisors) {
    if (g_phi_cache.count(d)) continue;
    std::vector<Rat> xn1(d + 1, Rat(0));
    xn1[0] = -1;
    xn1[d] = 1;
    std::vector<Rat> phi = xn1;
    for (int e : divisors) {
      if (e < d && d % e == 0) phi = poly_div(phi, g_phi_cache.at(e), true);
    }
    while (phi.size() > 1 && phi.back() == 0) phi.pop_back();
    g_phi_cache.emplace(d, std::move(phi));
  }
  return g_phi_cache.at(N);
}

CycNum CycNum::from_poly(int N, std::vector<Rat> poly) {
  CycNum r(N);
  // Fold exponents mod N first (zeta^N = 1), then reduce mod Phi_N.
  std::vector<Rat> folded(N, Rat(0));
  for (size_t i = 0; i < poly.size(); ++i) {
    poly[i].canonicalize();
    if (poly[i] != 0) folded[i % N] += poly[i];
  }
  const auto& phi = cyclotomic_polynomial(N);
  auto rem = poly_rem(std::move(folded), phi);
  for (size_t i = 0; i < r.c_.size() && i < rem.size(); ++i) r.c_[i] = rem[i];
  return r;
}

CycNum CycNum::root(int N, int r, long power) {
  if (r <= 0 || N % r != 0)
    throw ArithmeticError("conductor mismatch: order does not divide conductor");
  long e = (static_cast<long>(N) / r) * power;
  e %= N;
  if (e < 0) e += N;
  std::vector<Rat> p(static_cast<size_t>(e) + 1, Rat(0));
  p[static_cast<size_t>(e)] = 1;
  return from_poly(N, std::move(p));
}

bool CycNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycNum::rational_value() const {
  if (!is_rational()) throw ArithmeticError("value is not rational");
  return c_[0];
}

void CycNum::check_same(const CycNum& a, const CycNum& b) {
  if (a.conductor_ != b.conductor_)
    throw ArithmeticError("conductor mismatch in field operation");
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum CycNum::operator+(const CycNum& o) const {
  check_same(*this, o);
  CycNum r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
  check_same(*this, o);
  CycNum r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
  check_same(*this, o);
  if (is_zero() || o.is_zero()) return CycNum(conductor_);
  // Fast path: rational multiplier.
  if (is_rational()) return o * c_[0];
  if (o.is_rational()) return *this * o.c_[0];
  return from_poly(conductor_, poly_mul(c_, o.c_));
}

CycNum CycNum::operator*(const Rat& r) const {
  CycNum out = *this;
  for (auto& x : out.c_) x *= r;
  return out;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (is_rational()) return CycNum(conductor_, Rat(1) / c_[0]);
  // Extended Euclid: u * this + v * Phi_N = gcd = nonzero constant.
  const auto& phi = cyclotomic_polynomial(conductor_);
  std::vector<Rat> r0 = phi, r1 = c_;
  while (r1.size() > 1 && r1.back() == 0) r1.pop_back();
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of this
  while (true) {
    int d1 = static_cast<int>(r1.size()) - 1;
    bool r1_const = (d1 == 0);
    if (r1_const) {
      if (r1[0] == 0) throw ArithmeticError("element not invertible");
      Rat inv = Rat(1) / r1[0];
      for (auto& x : s1) x *= inv;
      return from_poly(conductor_, std::move(s1));
    }
    // r0 = q*r1 + r; advance.
    std::vector<Rat> q = poly_div(r0, r1, false);
    std::vector<Rat> rem = r0;
    {
      auto qr = poly_mul(q, r1);
      rem.resize(std::max(rem.size(), qr.size()), Rat(0));
      for (size_t i = 0; i < qr.size(); ++i) rem[i] -= qr[i];
      while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
    }
    std::vector<Rat> s2 = s0;
    {
      auto qs = poly_mul(q, s1);
      s2.resize(std::max(s2.size(), qs.size()), Rat(0));
      for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

CycNum CycNum::operator/(const CycNum& o) const { return *this * o.inverse(); }

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum base = *this;
  CycNum acc(conductor_, 1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycNum CycNum::galois(long k) const {
  long kk = k % conductor_;
  if (kk < 0) kk += conductor_;
  if (std::gcd(static_cast<long>(conductor_), kk) != 1)
    throw ArithmeticError("galois exponent not coprime to conductor");
  std::vector<Rat> p(conductor_, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) p[(i * kk) % conductor_] += c_[i];
  return from_poly(conductor_, std::move(p));
}

CycNum CycNum::conj() const {
  if (conductor_ == 1) return *this;
  return galois(conductor_ - 1);
}

CycNum CycNum::lifted(int M) const {
  if (M == conductor_) return *this;
  if (M % conductor_ != 0)
    throw ArithmeticError("lift target conductor not a multiple");
  long step = M / conductor_;
  std::vector<Rat> p;
  p.resize(static_cast<size_t>(c_.size() - 1) * step + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) p[i * step] = c_[i];
  return from_poly(M, std::move(p));
}

std::optional<CycNum> CycNum::rebased(int d) const {
  if (d == conductor_) return *this;
  if (d < 1 || conductor_ % d != 0) return std::nullopt;
  int pd = totient(d);
  int pn = totient(conductor_);
  // Solve c = sum u_j * lift(zeta_d^j) by Gaussian elimination over Q.
  std::vector<std::vector<Rat>> cols;
  for (int j = 0; j < pd; ++j)
    cols.push_back(CycNum::root(conductor_, d, j).c_);
  std::vector<std::vector<Rat>> m(pn, std::vector<Rat>(pd + 1, Rat(0)));
  for (int i = 0; i < pn; ++i) {
    for (int j = 0; j < pd; ++j) m[i][j] = cols[j][i];
    m[i][pd] = c_[i];
  }
  int row = 0;
  std::vector<int> pivot_col(pd, -1);
  for (int col = 0; col < pd && row < pn; ++col) {
    int pr = -1;
    for (int i = row; i < pn; ++i)
      if (m[i][col] != 0) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    Rat inv = Rat(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (int i = 0; i < pn; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j <= pd; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col[col] = row;
    ++row;
  }
  // Consistency: rows with all-zero coefficients must have zero rhs.
  for (int i = 0; i < pn; ++i) {
    bool zero = true;
    for (int j = 0; j < pd; ++j)
      if (m[i][j] != 0) { zero = false; break; }
    if (zero && m[i][pd] != 0) return std::nullopt;
  }
  CycNum out(d);
  for (int col = 0; col < pd; ++col)
    if (pivot_col[col] >= 0) out.c_[col] = m[pivot_col[col]][pd];
  return out;
}

bool CycNum::operator<(const CycNum& o) const {
  if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
  for (size_t i = 0; i < c_.size(); ++i) {
    int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string CycNum::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    Rat a = c_[i];
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
      first = false;
    } else {
      if (a < 0) { os << " - "; a = -a; }
      else os << " + ";
    }
    bool unit = (a == 1);
    if (i == 0) {
      os << a;
    } else {
      if (!unit) os << a << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::optional<int> CycNum::root_of_unity_order() const {
  CycNum p = *this;
  CycNum one(conductor_, 1);
  for (int k = 1; k <= 2 * conductor_; ++k) {
    if (p == one) return k;
    p = p * *this;
  }
  return std::nullopt;
}

std::pair<CycNum, CycNum> to_common_conductor(const CycNum& a, const CycNum& b) {
  int l = std::lcm(a.conductor(), b.conductor());
  return {a.lifted(l), b.lifted(l)};
}

}  // namespace wb
