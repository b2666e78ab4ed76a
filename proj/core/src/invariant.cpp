#include "wb/invariant.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace wb {

namespace {

void collect_monomials(int nvars, int d, int pos, Exp& cur,
                       std::vector<Exp>& out) {
  if (pos == nvars - 1) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= d; ++e) {
    cur[pos] = e;
    collect_monomials(nvars, d - e, pos + 1, cur, out);
  }
}

/// Dense coefficient vector of a homogeneous degree-d polynomial.
CycVec to_vector(const Poly& p, const std::map<Exp, int>& index, int dim,
                 int conductor) {
  CycVec v(dim, CycNum(conductor));
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    if (it == index.end())
      throw InvariantError("polynomial not homogeneous of expected degree");
    v[it->second] = c;
  }
  return v;
}

Poly from_vector(const CycVec& v, const std::vector<Exp>& monos, int nvars,
                 int conductor) {
  Poly p(nvars, conductor);
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) p.add_term(monos[i], v[i]);
  return p;
}

bool all_diagonal(const std::vector<CycMat>& mats) {
  for (const auto& m : mats)
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j)
        if (i != j && !m[i][j].is_zero()) return false;
  return true;
}

}  // namespace

std::vector<Exp> monomials_of_degree(int nvars, int d) {
  std::vector<Exp> out;
  Exp cur(nvars, 0);
  collect_monomials(nvars, d, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Poly reynolds(const std::vector<CycMat>& elements, const Poly& f) {
  if (elements.empty()) throw InvariantError("empty element list");
  int cond = elements[0][0][0].conductor();
  Poly sum(f.nvars(), cond);
  Poly fl = f.conductor() == cond ? f : f.lifted(cond);
  for (const auto& h : elements) sum += fl.group_action(h);
  return sum * Rat(1, static_cast<long>(elements.size()));
}

bool is_invariant(const std::vector<CycMat>& elements, const Poly& f) {
  if (elements.empty()) return true;
  int cond = elements[0][0][0].conductor();
  Poly fl = f.conductor() == cond ? f : f.lifted(cond);
  for (const auto& h : elements)
    if (fl.group_action(h) != fl) return false;
  return true;
}

std::vector<Character> all_characters(const Abelianization& ab) {
  std::vector<Character> out;
  Character cur(ab.invariant_factors.size(), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == cur.size()) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c < ab.invariant_factors[i]; ++c) {
      cur[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

/// Value of the character on a coset, as a root of unity in Q(zeta_N).
CycNum character_value(const FiniteMatrixGroup& g, const Character& chi,
                       int coset) {
  CycNum v(g.conductor, 1);
  const auto& dl = g.ab.dlog[coset];
  for (size_t i = 0; i < chi.size(); ++i) {
    int d = g.ab.invariant_factors[i];
    v = v * CycNum::root(g.conductor, d,
                         static_cast<long>(chi[i]) * dl[i]);
  }
  return v;
}

std::vector<CycMat> commutator_mats(const FiniteMatrixGroup& g) {
  std::vector<CycMat> mats;
  for (int id : g.commutator_ids) mats.push_back(g.elements[id].matrix);
  return mats;
}

}  // namespace

Character character_of(const FiniteMatrixGroup& g, const Poly& f) {
  if (f.is_zero()) throw InvariantError("character of the zero polynomial");
  Poly fl = f.conductor() == g.conductor ? f : f.lifted(g.conductor);
  if (!is_invariant(commutator_mats(g), fl))
    throw InvariantError("polynomial is not [G,G]-invariant");
  Character chi;
  for (size_t i = 0; i < g.ab.basis.size(); ++i) {
    int d = g.ab.invariant_factors[i];
    const CycMat& rep =
        g.elements[g.ab.coset_rep[g.ab.basis[i]]].matrix;
    Poly acted = fl.group_action(rep);
    int found = -1;
    for (int c = 0; c < d && found < 0; ++c)
      if (acted == fl * CycNum::root(g.conductor, d, c)) found = c;
    if (found < 0)
      throw InvariantError("polynomial is not an Ab(G)-eigenvector");
    chi.push_back(found);
  }
  return chi;
}

std::vector<std::pair<Character, Poly>> character_split(
    const FiniteMatrixGroup& g, const Poly& f) {
  Poly fl = f.conductor() == g.conductor ? f : f.lifted(g.conductor);
  if (!is_invariant(commutator_mats(g), fl))
    throw InvariantError("polynomial is not [G,G]-invariant");
  // Precompute the coset actions once.
  std::vector<Poly> acted;
  for (int c = 0; c < g.ab.order; ++c)
    acted.push_back(fl.group_action(g.elements[g.ab.coset_rep[c]].matrix));
  std::vector<std::pair<Character, Poly>> out;
  Poly check(fl.nvars(), g.conductor);
  for (const Character& chi : all_characters(g.ab)) {
    Poly proj(fl.nvars(), g.conductor);
    for (int c = 0; c < g.ab.order; ++c)
      proj += acted[c] * character_value(g, chi, c).conj();
    proj = proj * Rat(1, g.ab.order);
    if (!proj.is_zero()) {
      check += proj;
      out.emplace_back(chi, proj);
    }
  }
  if (check != fl)
    throw InvariantError("character projections do not sum back");
  return out;
}

namespace {

Character char_sum(const Character& a, const Character& b,
                   const std::vector<int>& factors) {
  Character c = a;
  for (size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + b[i]) % factors[i];
  return c;
}

InvariantBasis generating_set(const FiniteMatrixGroup& g,
                              const std::vector<CycMat>& hmats, bool use_ab,
                              int degree_bound) {
  int n = g.dim;
  int cond = g.conductor;
  InvariantBasis result;
  result.degree_bound = degree_bound;
  result.certified =
      degree_bound >= static_cast<int>(hmats.size());

  bool diagonal = all_diagonal(hmats);
  std::vector<Character> chars =
      use_ab ? all_characters(g.ab) : std::vector<Character>{Character{}};
  Character trivial = chars.front();
  // Graded pieces of the subalgebra generated so far, with each basis
  // element tagged by its Ab(G)-character (products stay homogeneous).
  std::vector<std::vector<std::pair<Poly, Character>>> alg_basis(
      degree_bound + 1);
  alg_basis[0].emplace_back(Poly::constant(n, CycNum(cond, 1)), trivial);

  for (int d = 1; d <= degree_bound; ++d) {
    auto monos = monomials_of_degree(n, d);
    std::map<Exp, int> index;
    for (size_t i = 0; i < monos.size(); ++i)
      index.emplace(monos[i], static_cast<int>(i));
    int dim = static_cast<int>(monos.size());

    // Basis of the degree-d invariant space of H.
    std::vector<Poly> inv_basis;
    {
      RowSpan span(dim);
      for (const auto& e : monos) {
        Poly m = Poly::monomial(n, e, CycNum(cond, 1));
        Poly r;
        if (diagonal) {
          // Diagonal action maps a monomial to a scalar multiple.
          bool inv = true;
          for (const auto& h : hmats) {
            CycNum scale(cond, 1);
            CycNum inv_scale(cond, 1);
            for (int i = 0; i < n; ++i)
              if (e[i] > 0) inv_scale = inv_scale * h[i][i].pow(e[i]);
            // (h.m)(x) = m(h^{-1}x): scalar is inv of the eigenvalue product.
            if (inv_scale != CycNum(cond, 1)) {
              inv = false;
              break;
            }
            (void)scale;
          }
          if (!inv) continue;
          r = m;
        } else {
          r = reynolds(hmats, m);
          if (r.is_zero()) continue;
        }
        if (span.insert(to_vector(r, index, dim, cond))) inv_basis.push_back(r);
      }
      // Use the reduced rows for determinism.
      inv_basis.clear();
      for (const auto& row : span.rows())
        inv_basis.push_back(from_vector(row, monos, n, cond));
    }
    if (inv_basis.empty()) continue;

    // Decomposable part: products of earlier generators, kept per
    // character so new generators stay Ab(G)-homogeneous.
    std::map<Character, RowSpan> span_by_char;
    for (const Character& chi : chars) span_by_char.emplace(chi, RowSpan(dim));
    for (const auto& gen : result.generators) {
      if (gen.degree > d) continue;
      for (const auto& [b, bchi] : alg_basis[d - gen.degree]) {
        Poly p = gen.poly * b;
        Character pchi =
            char_sum(gen.character, bchi, g.ab.invariant_factors);
        if (span_by_char.at(pchi).insert(to_vector(p, index, dim, cond)))
          alg_basis[d].emplace_back(p, pchi);
      }
    }

    // New generators: per character, the complement of the decomposables.
    for (const Character& chi : chars) {
      RowSpan& span = span_by_char.at(chi);
      for (const auto& v : inv_basis) {
        Poly proj;
        if (use_ab) {
          Poly acc(n, cond);
          for (int c = 0; c < g.ab.order; ++c)
            acc += v.group_action(g.elements[g.ab.coset_rep[c]].matrix) *
                   character_value(g, chi, c).conj();
          proj = acc * Rat(1, g.ab.order);
        } else {
          proj = v;
        }
        if (proj.is_zero()) continue;
        CycVec vec = to_vector(proj, index, dim, cond);
        CycVec red = span.reduce(vec);
        bool zero = std::all_of(red.begin(), red.end(),
                                [](const CycNum& x) { return x.is_zero(); });
        if (zero) continue;
        // Reinsert the reduced representative so the stored generator is
        // normalized (pivot coefficient 1).
        span.insert(red);
        const CycVec& row = span.rows().back();
        Poly gen_poly = from_vector(row, monos, n, cond);
        result.generators.push_back({gen_poly, d, chi});
        alg_basis[d].emplace_back(gen_poly, chi);
      }
    }
  }
  return result;
}

}  // namespace

std::map<Character, std::vector<Poly>> isotypic_basis(
    const FiniteMatrixGroup& g, int degree) {
  int n = g.dim;
  int cond = g.conductor;
  auto hmats = commutator_mats(g);
  bool diagonal = all_diagonal(hmats);
  auto monos = monomials_of_degree(n, degree);
  std::map<Exp, int> index;
  for (size_t i = 0; i < monos.size(); ++i)
    index.emplace(monos[i], static_cast<int>(i));
  int dim = static_cast<int>(monos.size());

  std::vector<Poly> inv_basis;
  {
    RowSpan span(dim);
    for (const auto& e : monos) {
      Poly m = Poly::monomial(n, e, CycNum(cond, 1));
      Poly r;
      if (diagonal) {
        bool inv = true;
        for (const auto& h : hmats) {
          CycNum inv_scale(cond, 1);
          for (int i = 0; i < n; ++i)
            if (e[i] > 0) inv_scale = inv_scale * h[i][i].pow(e[i]);
          if (inv_scale != CycNum(cond, 1)) {
            inv = false;
            break;
          }
        }
        if (!inv) continue;
        r = m;
      } else {
        r = reynolds(hmats, m);
        if (r.is_zero()) continue;
      }
      span.insert(to_vector(r, index, dim, cond));
    }
    for (const auto& row : span.rows())
      inv_basis.push_back(from_vector(row, monos, n, cond));
  }

  std::map<Character, std::vector<Poly>> out;
  if (inv_basis.empty()) return out;
  std::map<Character, RowSpan> spans;
  for (const Character& chi : all_characters(g.ab)) {
    RowSpan span(dim);
    for (const auto& f : inv_basis) {
      Poly acc(n, cond);
      for (int c = 0; c < g.ab.order; ++c)
        acc += f.group_action(g.elements[g.ab.coset_rep[c]].matrix) *
               character_value(g, chi, c).conj();
      acc = acc * Rat(1, g.ab.order);
      if (!acc.is_zero()) span.insert(to_vector(acc, index, dim, cond));
    }
    std::vector<Poly> piece;
    for (const auto& row : span.rows())
      piece.push_back(from_vector(row, monos, n, cond));
    if (!piece.empty()) out.emplace(chi, std::move(piece));
  }
  return out;
}

InvariantBasis minimal_generators(const FiniteMatrixGroup& g,
                                  int degree_bound) {
  return generating_set(g, commutator_mats(g), true, degree_bound);
}

InvariantBasis full_invariants(const FiniteMatrixGroup& g, int degree_bound) {
  std::vector<CycMat> mats;
  for (const auto& e : g.elements) mats.push_back(e.matrix);
  return generating_set(g, mats, false, degree_bound);
}

std::vector<long> molien_dims(const std::vector<CycMat>& elements,
                              int conductor, int bound) {
  if (elements.empty()) throw InvariantError("empty element list");
  int n = static_cast<int>(elements[0].size());
  std::vector<CycNum> total(bound + 1, CycNum(conductor));
  for (const auto& h : elements) {
    // Order of h.
    CycMat p = h;
    CycMat id = mat_identity(n, conductor);
    int r = 1;
    while (!mat_equal(p, id)) {
      p = mat_mul(p, h);
      ++r;
    }
    auto [exps, basis] = diagonalize(h, r, conductor);
    // Product of geometric series 1/(1 - zeta^{-a_i} t): the action on
    // functions uses h^{-1}, whose eigenvalues are zeta^{-a_i}.
    std::vector<CycNum> series(bound + 1, CycNum(conductor));
    series[0] = CycNum(conductor, 1);
    for (int i = 0; i < n; ++i) {
      CycNum lambda = CycNum::root(conductor, r, -exps[i]);
      std::vector<CycNum> next(bound + 1, CycNum(conductor));
      CycNum pow_l(conductor, 1);
      for (int k = 0; k <= bound; ++k) {
        for (int j = 0; j + k <= bound; ++j)
          if (!series[j].is_zero()) next[j + k] += series[j] * pow_l;
        pow_l = pow_l * lambda;
      }
      series = std::move(next);
    }
    for (int k = 0; k <= bound; ++k) total[k] += series[k];
  }
  std::vector<long> dims;
  Rat order(static_cast<long>(elements.size()));
  for (int k = 0; k <= bound; ++k) {
    CycNum c = total[k] * Rat(1, static_cast<long>(elements.size()));
    Rat v = c.rational_value();
    if (v.get_den() != 1)
      throw InvariantError("Molien coefficient is not an integer");
    dims.push_back(v.get_num().get_si());
  }
  return dims;
}

SL2Invariants sl2_invariant_table(const std::string& name, int q) {
  auto X = [](int cond) { return Poly::variable(3, cond, 0); };
  auto Y = [](int cond) { return Poly::variable(3, cond, 1); };
  auto Z = [](int cond, int i) { return Poly::variable(3, cond, i); };
  SL2Invariants out;
  if (name == "BD") {
    if (q < 2) throw InvariantError("BD parameter must be >= 2");
    int c = 1;
    Poly x = X(c), y = Y(c);
    out.p = {x.pow(q) + y.pow(q), x.pow(q) - y.pow(q), x * y};
    out.relation = Z(c, 0).pow(2) - Z(c, 1).pow(2) -
                   Z(c, 2).pow(q) * CycNum(c, 4);
    return out;
  }
  if (name == "BT") {
    int c = 12;
    Poly x = X(c), y = Y(c);
    // sqrt(-12) = 2 i sqrt(3), both available in Q(zeta_12).
    CycNum i = CycNum::root(c, 4, 1);
    CycNum s3 = CycNum::root(c, 12, 1) + CycNum::root(c, 12, 11);
    CycNum sm12 = i * s3 * Rat(2);
    Poly x2y2 = x.pow(2) * y.pow(2);
    out.p = {x.pow(4) + y.pow(4) + x2y2 * sm12,
             x.pow(4) + y.pow(4) - x2y2 * sm12,
             x.pow(5) * y - x * y.pow(5)};
    CycNum coeff = (CycNum::root(c, 3, 1) - CycNum::root(c, 3, 2)) * Rat(12);
    out.relation =
        Z(c, 0).pow(3) - Z(c, 1).pow(3) - Z(c, 2).pow(2) * coeff;
    return out;
  }
  if (name == "BO") {
    int c = 1;
    Poly x = X(c), y = Y(c);
    Poly x4y4 = x.pow(4) * y.pow(4);
    out.p = {x.pow(5) * y - x * y.pow(5),
             x.pow(8) + x4y4 * CycNum(c, 14) + y.pow(8),
             x.pow(12) - x.pow(8) * y.pow(4) * CycNum(c, 33) -
                 x.pow(4) * y.pow(8) * CycNum(c, 33) + y.pow(12)};
    out.relation = Z(c, 0).pow(4) * CycNum(c, 108) - Z(c, 1).pow(3) +
                   Z(c, 2).pow(2);
    return out;
  }
  if (name == "BI") {
    int c = 1;
    Poly x = X(c), y = Y(c);
    out.p = {x.pow(11) * y + x.pow(6) * y.pow(6) * CycNum(c, 11) -
                 x * y.pow(11),
             x.pow(20) - x.pow(15) * y.pow(5) * CycNum(c, 228) +
                 x.pow(10) * y.pow(10) * CycNum(c, 494) +
                 x.pow(5) * y.pow(15) * CycNum(c, 228) + y.pow(20),
             x.pow(30) + x.pow(25) * y.pow(5) * CycNum(c, 522) -
                 x.pow(20) * y.pow(10) * CycNum(c, 10005) -
                 x.pow(10) * y.pow(20) * CycNum(c, 10005) -
                 x.pow(5) * y.pow(25) * CycNum(c, 522) + y.pow(30)};
    out.relation = Z(c, 0).pow(5) * CycNum(c, 1728) + Z(c, 1).pow(3) -
                   Z(c, 2).pow(2);
    return out;
  }
  throw InvariantError("unknown invariant table entry: " + name);
}

}  // namespace wb
