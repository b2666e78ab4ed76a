#include "wb/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wb {

int exp_total_degree(const Exp& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

Exp exp_mul(const Exp& a, const Exp& b) {
  Exp c = a;
  for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

bool exp_divides(const Exp& a, const Exp& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exp exp_div(const Exp& b, const Exp& a) {
  Exp c = b;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= a[i];
  return c;
}

Exp exp_lcm(const Exp& a, const Exp& b) {
  Exp c = a;
  for (size_t i = 0; i < c.size(); ++i) c[i] = std::max(c[i], b[i]);
  return c;
}

Poly Poly::constant(int nvars, const CycNum& c) {
  Poly p(nvars, c.conductor());
  p.add_term(Exp(nvars, 0), c);
  return p;
}

Poly Poly::monomial(int nvars, Exp e, const CycNum& c) {
  Poly p(nvars, c.conductor());
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(int nvars, int conductor, int i) {
  Poly p(nvars, conductor);
  Exp e(nvars, 0);
  e[i] = 1;
  p.add_term(e, CycNum(conductor, 1));
  return p;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_total_degree(e));
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int de = exp_total_degree(e);
    if (d >= 0 && de != d) return false;
    d = de;
  }
  return true;
}

void Poly::add_term(const Exp& e, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(nvars_, conductor_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, c);
  return p;
}

Poly Poly::operator-(const Poly& o) const {
  Poly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  Poly p(nvars_, conductor_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) p.add_term(exp_mul(e1, e2), c1 * c2);
  return p;
}

Poly Poly::operator*(const CycNum& c) const {
  if (c.is_zero()) return Poly(nvars_, conductor_);
  Poly p(nvars_, conductor_);
  for (const auto& [e, a] : terms_) p.terms_.emplace(e, a * c);
  return p;
}

Poly Poly::operator*(const Rat& r) const {
  if (r == 0) return Poly(nvars_, conductor_);
  Poly p(nvars_, conductor_);
  for (const auto& [e, a] : terms_) p.terms_.emplace(e, a * r);
  return p;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw PolyError("negative polynomial power");
  Poly acc = Poly::constant(nvars_, CycNum(conductor_, 1));
  acc.nvars_ = nvars_;
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw PolyError("substitution arity mismatch");
  int out_vars = images.empty() ? 0 : images[0].nvars();
  int out_cond = images.empty() ? conductor_ : images[0].conductor();
  Poly result(out_vars, out_cond);
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(out_vars, c.lifted(out_cond));
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) t = t * images[i].pow(e[i]);
    result += t;
  }
  return result;
}

Poly Poly::linear_substitute(const CycMat& a) const {
  std::vector<Poly> images;
  int cond = a[0][0].conductor();
  for (int i = 0; i < nvars_; ++i) {
    Poly img(nvars_, cond);
    for (int j = 0; j < nvars_; ++j) {
      if (a[i][j].is_zero()) continue;
      Exp e(nvars_, 0);
      e[j] = 1;
      img.add_term(e, a[i][j]);
    }
    images.push_back(std::move(img));
  }
  return substitute(images);
}

Poly Poly::group_action(const CycMat& g) const {
  return linear_substitute(mat_inverse(g));
}

Poly Poly::lifted(int M) const {
  Poly p(nvars_, M);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, c.lifted(M));
  return p;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  // Render highest lex term first.
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.str();
    bool neg = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
        cs.find(" - ") == std::string::npos) {
      neg = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool has_var = exp_total_degree(e) > 0;
    bool unit = (cs == "1");
    bool simple = cs.find(' ') == std::string::npos;
    if (!has_var) {
      os << (simple ? cs : "(" + cs + ")");
    } else {
      if (!unit) os << (simple ? cs : "(" + cs + ")") << "*";
      bool fv = true;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!fv) os << "*";
        fv = false;
        os << names[i];
        if (e[i] > 1) os << "^" << e[i];
      }
    }
  }
  return os.str();
}

std::string Poly::str() const {
  static const char* xyz[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (int i = 0; i < nvars_; ++i)
    names.push_back(i < 3 ? xyz[i] : "x" + std::to_string(i + 1));
  return str(names);
}

MonomialValuation::MonomialValuation(std::vector<int> weights,
                                     const CycMat& eigenbasis)
    : weights_(std::move(weights)), basis_(eigenbasis) {
  int n = static_cast<int>(basis_.size());
  int cond = basis_.empty() ? 1 : basis_[0][0].conductor();
  diagonal_ = mat_equal(basis_, mat_identity(n, cond));
}

Poly MonomialValuation::to_eigen(const Poly& f) const {
  if (diagonal_) return f;
  CycMat b = basis_;
  int fc = f.conductor();
  int bc = b[0][0].conductor();
  if (bc != fc) {
    int l = std::lcm(bc, fc);
    for (auto& row : b)
      for (auto& x : row) x = x.lifted(l);
    if (fc != l) return f.lifted(l).linear_substitute(b);
  }
  return f.linear_substitute(b);
}

long MonomialValuation::eigen_value(const Poly& fu) const {
  long best = kValInfinity;
  for (const auto& [e, c] : fu.terms()) {
    long v = 0;
    for (size_t i = 0; i < weights_.size(); ++i)
      v += static_cast<long>(weights_[i]) * e[i];
    best = std::min(best, v);
  }
  return best;
}

long MonomialValuation::value(const Poly& f) const {
  if (f.is_zero()) throw PolyError("valuation of the zero polynomial");
  return eigen_value(to_eigen(f));
}

Poly MonomialValuation::eigen_leading_form(const Poly& fu) const {
  long v0 = eigen_value(fu);
  Poly lead(fu.nvars(), fu.conductor());
  for (const auto& [e, c] : fu.terms()) {
    long v = 0;
    for (size_t i = 0; i < weights_.size(); ++i)
      v += static_cast<long>(weights_[i]) * e[i];
    if (v == v0) lead.add_term(e, c);
  }
  return lead;
}

}  // namespace wb
