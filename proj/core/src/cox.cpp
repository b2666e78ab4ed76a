#include "wb/cox.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace wb {

namespace {

Character char_sum(const Character& a, const Character& b,
                   const std::vector<int>& factors) {
  Character c = a;
  for (size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + b[i]) % factors[i];
  return c;
}

Character char_scale(const Character& a, int k,
                     const std::vector<int>& factors) {
  Character c = a;
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<int>((static_cast<long>(c[i]) * k) % factors[i]);
  return c;
}

/// Dense coefficient vector of a homogeneous degree-d polynomial.
CycVec poly_vec(const Poly& f, const std::map<Exp, int>& index, int dim,
                int cond) {
  CycVec v(dim, CycNum(cond));
  Poly fl = f.conductor() == cond ? f : f.lifted(cond);
  for (const auto& [e, c] : fl.terms()) {
    auto it = index.find(e);
    if (it == index.end())
      throw CoxError("polynomial is not homogeneous of the expected degree");
    v[it->second] = c;
  }
  return v;
}

bool vec_zero(const CycVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const CycNum& x) { return x.is_zero(); });
}

/// All products of phi-generators of total standard degree d.
struct ProductEntry {
  Exp ambient;  // exponent vector over all s generators (T part zero)
  Poly image;   // kappa of the product, in x, y, z
  std::vector<long> texp;
  Character chi;
};

std::vector<ProductEntry> enumerate_products(const CoxPresentation& p,
                                             int d) {
  std::vector<ProductEntry> out;
  int cond = p.group.conductor;
  const auto& factors = p.group.ab.invariant_factors;
  Character trivial(factors.size(), 0);
  Exp cur(p.s(), 0);
  std::function<void(int, int)> rec = [&](int idx, int rem) {
    if (rem == 0) {
      ProductEntry e;
      e.ambient = cur;
      e.image = Poly::constant(3, CycNum(cond, 1));
      e.texp.assign(p.m(), 0);
      e.chi = trivial;
      for (int i = 0; i < p.num_phi; ++i) {
        if (cur[i] == 0) continue;
        e.image *= p.generators[i].base.pow(cur[i]);
        for (int j = 0; j < p.m(); ++j)
          e.texp[j] += p.generators[i].t_exponents[j] * cur[i];
        e.chi = char_sum(
            e.chi, char_scale(p.generators[i].character, cur[i], factors),
            factors);
      }
      out.push_back(std::move(e));
      return;
    }
    if (idx == p.num_phi) return;
    int deg = p.generators[idx].degree;
    for (int e = 0; e * deg <= rem; ++e) {
      cur[idx] = e;
      rec(idx + 1, rem - e * deg);
    }
    cur[idx] = 0;
  };
  rec(0, d);
  return out;
}

bool dominates(const std::vector<long>& a, const std::vector<long>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

/// Per-(degree, character) lifting workspace.
struct LiftSlice {
  const CoxPresentation* p;
  int d;
  Character chi;
  int cond;
  std::vector<Exp> monos;
  std::map<Exp, int> index;
  int dim;
  std::vector<Poly> basis;                      // isotypic invariants
  std::vector<std::vector<Poly>> eigenforms;    // [valuation][basis]
  std::vector<const ProductEntry*> products;    // chi-matching products

  /// Valuation of a coefficient combination of the basis.
  long nu(int j, const CycVec& coeffs) const {
    Poly sum(3, cond);
    for (size_t b = 0; b < basis.size(); ++b)
      if (!coeffs[b].is_zero()) sum += eigenforms[j][b] * coeffs[b];
    return p->valuations[j].eigen_value(sum);
  }

  Poly combo(const CycVec& coeffs) const {
    Poly sum(3, cond);
    for (size_t b = 0; b < basis.size(); ++b)
      if (!coeffs[b].is_zero()) sum += basis[b] * coeffs[b];
    return sum;
  }

  /// Basis (as coefficient combinations) of { f : nu_j(f) >= v_j }.
  std::vector<CycVec> subspace(const std::vector<long>& v) const {
    int D = static_cast<int>(basis.size());
    CycMat a;
    for (int j = 0; j < p->m(); ++j) {
      // Coefficient rows of eigen-monomials below the threshold.
      std::map<Exp, CycVec> rows;
      const auto& w = p->valuations[j].weights();
      for (int b = 0; b < D; ++b) {
        for (const auto& [e, c] : eigenforms[j][b].terms()) {
          long wd = 0;
          for (size_t i = 0; i < e.size(); ++i) wd += long(w[i]) * e[i];
          if (wd >= v[j]) continue;
          auto it = rows.find(e);
          if (it == rows.end())
            it = rows.emplace(e, CycVec(D, CycNum(cond))).first;
          it->second[b] = c;
        }
      }
      for (auto& [e, row] : rows) a.push_back(std::move(row));
    }
    if (a.empty()) {
      std::vector<CycVec> id;
      for (int b = 0; b < D; ++b) {
        CycVec v1(D, CycNum(cond));
        v1[b] = CycNum(cond, 1);
        id.push_back(std::move(v1));
      }
      return id;
    }
    return kernel_basis(a);
  }

  /// Row span of kappa-images of products dominating v.
  RowSpan product_span(const std::vector<long>& v) const {
    RowSpan span(dim);
    for (const ProductEntry* e : products)
      if (dominates(e->texp, v))
        span.insert(poly_vec(e->image, index, dim, cond));
    return span;
  }

  /// Tightest valuation vector of a nonzero subspace.
  std::vector<long> tighten(const std::vector<CycVec>& combos) const {
    std::vector<long> v(p->m(), kValInfinity);
    for (int j = 0; j < p->m(); ++j)
      for (const auto& c : combos) v[j] = std::min(v[j], nu(j, c));
    return v;
  }

  /// Solve f = sum c_M kappa(M) over products dominating v; returns the
  /// ambient lift if solvable.
  std::optional<Poly> solve_lift(const Poly& f,
                                 const std::vector<long>& v) const {
    std::vector<const ProductEntry*> cols;
    for (const ProductEntry* e : products)
      if (dominates(e->texp, v)) cols.push_back(e);
    if (cols.empty()) return std::nullopt;
    CycMat a(dim, CycVec(cols.size(), CycNum(cond)));
    for (size_t k = 0; k < cols.size(); ++k) {
      CycVec col = poly_vec(cols[k]->image, index, dim, cond);
      for (int r = 0; r < dim; ++r) a[r][k] = col[r];
    }
    auto sol = solve(a, poly_vec(f, index, dim, cond));
    if (!sol) return std::nullopt;
    Poly lift(p->s(), cond);
    for (size_t k = 0; k < cols.size(); ++k)
      if (!(*sol)[k].is_zero()) lift.add_term(cols[k]->ambient, (*sol)[k]);
    return lift;
  }
};

LiftSlice make_slice(const CoxPresentation& p, int d, const Character& chi,
                     const std::vector<Poly>& basis,
                     const std::vector<ProductEntry>& all_products) {
  LiftSlice s;
  s.p = &p;
  s.d = d;
  s.chi = chi;
  s.cond = p.group.conductor;
  s.monos = monomials_of_degree(3, d);
  for (size_t i = 0; i < s.monos.size(); ++i)
    s.index.emplace(s.monos[i], static_cast<int>(i));
  s.dim = static_cast<int>(s.monos.size());
  s.basis = basis;
  s.eigenforms.resize(p.m());
  for (int j = 0; j < p.m(); ++j)
    for (const auto& b : basis)
      s.eigenforms[j].push_back(p.valuations[j].to_eigen(b));
  for (const auto& e : all_products)
    if (e.chi == chi) s.products.push_back(&e);
  return s;
}

/// Enumerate the achievable valuation vectors of the slice and check the
/// span inclusion at each; reports every failing vector (with a witness
/// combination) via the callback, which may return false to stop.
bool walk_valuation_vectors(
    const LiftSlice& s,
    const std::function<bool(const std::vector<long>& v,
                             const std::vector<CycVec>& inside,
                             const RowSpan& span)>& visit) {
  std::set<std::vector<long>> seen;
  std::function<bool(const std::vector<long>&)> dfs =
      [&](const std::vector<long>& v0) -> bool {
    auto combos = s.subspace(v0);
    if (combos.empty()) return true;
    std::vector<long> v = s.tighten(combos);
    if (!seen.insert(v).second) return true;
    RowSpan span = s.product_span(v);
    if (!visit(v, combos, span)) return false;
    for (int j = 0; j < s.p->m(); ++j) {
      std::vector<long> bumped = v;
      bumped[j] += 1;
      if (!dfs(bumped)) return false;
    }
    return true;
  };
  std::vector<long> start(s.p->m(), std::numeric_limits<long>::min());
  for (auto& x : start) x = 0;
  return dfs(start);
}

}  // namespace

Poly CoxPresentation::kappa(const Poly& f) const {
  int cond = std::lcm(group.conductor, f.conductor());
  std::vector<Poly> images;
  for (int i = 0; i < s(); ++i) {
    if (generators[i].exceptional >= 0)
      images.push_back(Poly::constant(3, CycNum(cond, 1)));
    else
      images.push_back(generators[i].base.lifted(cond));
  }
  return f.lifted(cond).substitute(images);
}

std::vector<long> CoxPresentation::u_degree(const Exp& e) const {
  std::vector<long> deg(m(), 0);
  for (int j = 0; j < m(); ++j)
    for (int i = 0; i < s(); ++i) deg[j] += U[j][i] * e[i];
  return deg;
}

bool CoxPresentation::u_homogeneous(const Poly& f) const {
  bool first = true;
  std::vector<long> d0;
  for (const auto& [e, c] : f.terms()) {
    auto d = u_degree(e);
    if (first) {
      d0 = d;
      first = false;
    } else if (d != d0) {
      return false;
    }
  }
  return true;
}

CoxPresentation build_candidate(const FiniteMatrixGroup& g,
                                const std::vector<GradedGenerator>& gens,
                                bool attach_relations,
                                GroebnerOptions kernel_budget) {
  CoxPresentation p;
  p.group = g;
  p.junior_class_ids = g.junior_classes();
  for (int id : p.junior_class_ids) {
    const ConjClass& c = g.classes[id];
    p.orders.push_back(c.order);
    p.valuations.emplace_back(c.exponents, c.eigenbasis);
  }
  int m = p.m();

  p.num_phi = static_cast<int>(gens.size());
  for (int i = 0; i < p.num_phi; ++i) {
    const GradedGenerator& gen = gens[i];
    if (gen.poly.is_zero() || !gen.poly.is_homogeneous())
      throw CoxError("generator is not a nonzero homogeneous polynomial");
    CoxGenerator cg;
    cg.base = gen.poly.lifted(g.conductor);
    cg.character = gen.character;
    cg.degree = gen.degree;
    cg.name = "Z" + std::to_string(i + 1);
    for (int j = 0; j < m; ++j)
      cg.t_exponents.push_back(p.valuations[j].value(cg.base));
    p.generators.push_back(std::move(cg));
  }
  Character trivial(g.ab.invariant_factors.size(), 0);
  for (int j = 0; j < m; ++j) {
    CoxGenerator cg;
    cg.base = Poly(3, g.conductor);
    cg.exceptional = j;
    cg.character = trivial;
    cg.name = "T" + std::to_string(j + 1);
    cg.t_exponents.assign(m, 0);
    cg.t_exponents[j] = -p.orders[j];
    p.generators.push_back(std::move(cg));
  }

  p.U.assign(m, std::vector<long>(p.s(), 0));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < p.s(); ++i) p.U[j][i] = p.generators[i].t_exponents[j];

  if (attach_relations && p.num_phi <= 4) {
    std::vector<Poly> images;
    for (int i = 0; i < p.num_phi; ++i) images.push_back(p.generators[i].base);
    auto kernel = kernel_of_map(images, kernel_budget);
    for (const auto& rel : kernel)
      p.relations.push_back(homogenize_relation(p, rel));
  }
  return p;
}

Poly homogenize_relation(const CoxPresentation& p, const Poly& rel) {
  if (rel.is_zero()) throw CoxError("zero relation");
  if (rel.nvars() != p.num_phi)
    throw CoxError("relation has the wrong number of variables");
  int m = p.m();
  // U-degree of each monomial, over the phi block only.
  std::vector<std::vector<long>> degs;
  for (const auto& [e, c] : rel.terms()) {
    std::vector<long> d(m, 0);
    for (int i = 0; i < p.num_phi; ++i)
      for (int j = 0; j < m; ++j)
        d[j] += p.generators[i].t_exponents[j] * e[i];
    degs.push_back(std::move(d));
  }
  std::vector<long> target(m, std::numeric_limits<long>::max());
  for (const auto& d : degs)
    for (int j = 0; j < m; ++j) target[j] = std::min(target[j], d[j]);
  Poly out(p.s(), rel.conductor());
  int t = 0;
  for (const auto& [e, c] : rel.terms()) {
    Exp w(p.s(), 0);
    for (int i = 0; i < p.num_phi; ++i) w[i] = e[i];
    for (int j = 0; j < m; ++j) {
      long diff = degs[t][j] - target[j];
      if (diff % p.orders[j] != 0)
        throw CoxError("relation cannot be homogenized: degree gap is not "
                       "a multiple of the class order");
      w[p.num_phi + j] = static_cast<int>(diff / p.orders[j]);
    }
    out.add_term(w, c);
    ++t;
  }
  return out;
}

std::vector<std::vector<long>> scaled_U(const CoxPresentation& p,
                                        const std::vector<long>& divisors) {
  if (static_cast<int>(divisors.size()) != p.m())
    throw CoxError("one divisor per row required");
  auto u = p.U;
  for (int j = 0; j < p.m(); ++j) {
    for (auto& x : u[j]) {
      if (x % divisors[j] != 0)
        throw CoxError("row is not divisible by the requested factor");
      x /= divisors[j];
    }
  }
  return u;
}

RelationReport verify_relations(const CoxPresentation& p) {
  RelationReport rep;
  for (size_t r = 0; r < p.relations.size(); ++r) {
    const Poly& rel = p.relations[r];
    if (rel.is_zero()) {
      rep.ok = false;
      rep.detail = "relation " + std::to_string(r) + " is zero";
      return rep;
    }
    if (!p.u_homogeneous(rel)) {
      rep.ok = false;
      rep.detail = "relation " + std::to_string(r) + " is not U-homogeneous";
      return rep;
    }
    if (!p.kappa(rel).is_zero()) {
      rep.ok = false;
      rep.detail =
          "relation " + std::to_string(r) + " has nonzero kappa-image";
      return rep;
    }
  }
  rep.detail = "all " + std::to_string(p.relations.size()) +
               " relations vanish and are U-homogeneous";
  return rep;
}

LiftReport check_lifting_bounded(const CoxPresentation& p, int degree_bound,
                                 bool stop_at_first_failure) {
  LiftReport rep;
  rep.degree_bound = degree_bound;
  for (int d = 1; d <= degree_bound; ++d) {
    auto pieces = isotypic_basis(p.group, d);
    if (pieces.empty()) continue;
    auto products = enumerate_products(p, d);
    for (const auto& [chi, basis] : pieces) {
      LiftSlice s = make_slice(p, d, chi, basis, products);
      walk_valuation_vectors(
          s, [&](const std::vector<long>& v,
                 const std::vector<CycVec>& inside, const RowSpan& span) {
            for (const auto& c : inside) {
              CycVec vec = poly_vec(s.combo(c), s.index, s.dim, s.cond);
              if (!span.contains(vec)) {
                rep.ok = false;
                rep.failures.push_back({d, chi, s.combo(c), v});
                return !stop_at_first_failure;
              }
            }
            return true;
          });
      if (!rep.ok && stop_at_first_failure) return rep;
    }
  }
  return rep;
}

TrinomialLiftResult check_lifting_trinomial(const CoxPresentation& p,
                                            int degree_bound) {
  if (p.relations.size() != 1 || p.relations[0].num_terms() != 3)
    throw CoxError("presentation does not have a single trinomial relation");
  TrinomialLiftResult res;
  for (int d = 1; d <= degree_bound && res.ok; ++d) {
    auto pieces = isotypic_basis(p.group, d);
    if (pieces.empty()) continue;
    auto products = enumerate_products(p, d);
    for (const auto& [chi, basis] : pieces) {
      LiftSlice s = make_slice(p, d, chi, basis, products);
      bool clean = walk_valuation_vectors(
          s, [&](const std::vector<long>& v,
                 const std::vector<CycVec>& inside, const RowSpan& span) {
            for (const auto& c : inside) {
              Poly f = s.combo(c);
              auto lift = s.solve_lift(f, v);
              if (!lift) {
                res.ok = false;
                res.counterexample = LiftFailure{d, chi, f, v};
                return false;
              }
              res.witnesses.push_back({d, chi, f, v, *lift});
            }
            return true;
          });
      if (!clean) return res;
    }
  }
  return res;
}

namespace {

/// Arithmetic context of F_p with a fixed root of unity image of zeta_N.
struct FpCtx {
  unsigned long long p = 0;
  std::vector<unsigned long long> zeta_pow;  // zeta_N^i mod p
};

unsigned long long fp_pow(unsigned long long b, unsigned long long e,
                          unsigned long long p) {
  unsigned long long r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool fp_is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Smallest prime >= start with p = 1 mod N, together with an element of
/// exact multiplicative order N.
FpCtx fp_context(int N, unsigned long long start) {
  unsigned long long p = start + (N - start % N) + 1;
  while (!fp_is_prime(p)) p += N;
  std::vector<int> prime_factors;
  int nn = N;
  for (int q = 2; q * q <= nn; ++q)
    if (nn % q == 0) {
      prime_factors.push_back(q);
      while (nn % q == 0) nn /= q;
    }
  if (nn > 1) prime_factors.push_back(nn);
  for (unsigned long long g = 2;; ++g) {
    unsigned long long w = fp_pow(g, (p - 1) / N, p);
    bool exact = w != 1 || N == 1;
    for (int q : prime_factors)
      if (fp_pow(w, N / q, p) == 1) exact = false;
    if (!exact) continue;
    FpCtx ctx;
    ctx.p = p;
    ctx.zeta_pow.resize(totient(N));
    unsigned long long cur = 1;
    for (auto& z : ctx.zeta_pow) {
      z = cur;
      cur = cur * w % p;
    }
    return ctx;
  }
}

/// Image of a cyclotomic number under zeta_N -> fixed root mod p; throws
/// ArithmeticError when a denominator vanishes mod p.
unsigned long long fp_of(const CycNum& x, const FpCtx& ctx) {
  unsigned long long acc = 0;
  const auto& c = x.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    mpz_class num = c[i].get_num() % mpz_class(static_cast<long>(ctx.p));
    mpz_class den = c[i].get_den() % mpz_class(static_cast<long>(ctx.p));
    if (den == 0) throw ArithmeticError("denominator vanishes mod p");
    unsigned long long n =
        mpz_class(num + static_cast<long>(ctx.p)).get_ui() % ctx.p;
    unsigned long long d = den.get_ui() % ctx.p;
    acc = (acc + n * fp_pow(d, ctx.p - 2, ctx.p) % ctx.p * ctx.zeta_pow[i]) %
          ctx.p;
  }
  return acc;
}

/// Incremental row space over F_p (reduced rows, pivot entry 1).
class FpSpan {
 public:
  FpSpan(int ncols, unsigned long long p) : ncols_(ncols), p_(p) {}

  bool insert(std::vector<unsigned long long> v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
      unsigned long long c = v[pivots_[r]];
      if (c == 0) continue;
      const auto& row = rows_[r];
      for (int j = 0; j < ncols_; ++j)
        if (row[j]) v[j] = (v[j] + (p_ - c) * row[j]) % p_;
    }
    int piv = -1;
    for (int j = 0; j < ncols_; ++j)
      if (v[j]) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    unsigned long long inv = fp_pow(v[piv], p_ - 2, p_);
    for (int j = 0; j < ncols_; ++j) v[j] = v[j] * inv % p_;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int ncols_;
  unsigned long long p_;
  std::vector<std::vector<unsigned long long>> rows_;
  std::vector<int> pivots_;
};

/// Exponent vectors over the phi-generators with given weighted degree,
/// in the deterministic recursion order of enumerate_products.
std::vector<Exp> phi_exponents_of_degree(const CoxPresentation& p, int d) {
  std::vector<Exp> out;
  Exp cur(p.num_phi, 0);
  std::function<void(int, int)> rec = [&](int idx, int rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (idx == p.num_phi) return;
    int deg = p.generators[idx].degree;
    for (int e = 0; e * deg <= rem; ++e) {
      cur[idx] = e;
      rec(idx + 1, rem - e * deg);
    }
    cur[idx] = 0;
  };
  rec(0, d);
  return out;
}

}  // namespace

GradedRelations graded_relations(const CoxPresentation& p, int degree_bound) {
  GradedRelations out;
  out.degree_bound = degree_bound;
  int cond = p.group.conductor;
  int nphi = p.num_phi;
  if (nphi == 0) return out;
  int dmin = p.generators[0].degree;
  for (int i = 0; i < nphi; ++i)
    dmin = std::min(dmin, p.generators[i].degree);

  // Expected rank of the degree-d evaluation matrix: the phi-generators
  // span the commutator-invariant ring degree by degree.
  std::vector<CycMat> comm;
  for (int id : p.group.commutator_ids)
    comm.push_back(p.group.elements[id].matrix);
  auto subdim = molien_dims(comm, cond, degree_bound);

  FpCtx ctx = fp_context(cond, 1u << 20);
  // Mod-p coefficient tables of the phi-generators.
  using FpPoly = std::map<Exp, unsigned long long>;
  std::vector<FpPoly> phi_fp(nphi);
  for (int i = 0; i < nphi; ++i)
    for (const auto& [e, c] : p.generators[i].base.terms())
      phi_fp[i][e] = fp_of(c, ctx);

  for (int d = 2 * dmin; d <= degree_bound; ++d) {
    auto exps = phi_exponents_of_degree(p, d);
    int nprods = static_cast<int>(exps.size());
    if (nprods < 2) continue;
    std::map<Exp, int> prod_index;
    for (int k = 0; k < nprods; ++k) prod_index.emplace(exps[k], k);
    long target_rank = nprods - subdim[d];
    if (target_rank <= 0) continue;

    // Certificate attempt: do multiples of the known lower-degree
    // relations already fill the kernel mod p?  (Rank mod p only ever
    // under-approximates, so "yes" is exact.)
    bool complete = false;
    {
      FpSpan span(nprods, ctx.p);
      for (size_t r = 0;
           r < out.phi_relations.size() && span.rank() < target_rank; ++r) {
        const Poly& rel = out.phi_relations[r];
        int dr = out.relation_degrees[r];
        if (dr >= d) continue;
        for (const Exp& b : phi_exponents_of_degree(p, d - dr)) {
          std::vector<unsigned long long> v(nprods, 0);
          for (const auto& [e, c] : rel.terms())
            v[prod_index.at(exp_mul(e, b))] = fp_of(c, ctx);
          span.insert(std::move(v));
          if (span.rank() >= target_rank) break;
        }
      }
      if (span.rank() >= target_rank) {
        // Confirm the evaluation matrix has the expected rank mod p, so
        // the true kernel dimension equals the target.
        std::map<Exp, int> mono_index;
        std::vector<FpPoly> images(nprods);
        for (int k = 0; k < nprods; ++k) {
          FpPoly img{{Exp(3, 0), 1 % ctx.p}};
          for (int i = 0; i < nphi; ++i)
            for (int rep = 0; rep < exps[k][i]; ++rep) {
              FpPoly nxt;
              for (const auto& [ea, ca] : img)
                for (const auto& [eb, cb] : phi_fp[i]) {
                  auto e = exp_mul(ea, eb);
                  nxt[e] = (nxt[e] + ca * cb) % ctx.p;
                }
              img = std::move(nxt);
            }
          for (const auto& [e, c] : img)
            if (c) mono_index.emplace(e, static_cast<int>(mono_index.size()));
          images[k] = std::move(img);
        }
        FpSpan espan(static_cast<int>(mono_index.size()), ctx.p);
        for (int k = 0; k < nprods; ++k) {
          std::vector<unsigned long long> v(mono_index.size(), 0);
          for (const auto& [e, c] : images[k]) v[mono_index.at(e)] = c;
          espan.insert(std::move(v));
        }
        complete = espan.rank() == subdim[d];
      }
    }
    if (complete) continue;

    // Exact extraction at this degree.
    auto prods = enumerate_products(p, d);
    if (prods.size() != exps.size())
      throw CoxError("product enumeration mismatch");
    std::map<Exp, int> mono_index;
    for (const auto& pe : prods)
      for (const auto& [e, c] : pe.image.terms())
        mono_index.emplace(e, static_cast<int>(mono_index.size()));
    int dim = static_cast<int>(mono_index.size());
    CycMat a(dim, CycVec(nprods, CycNum(cond)));
    for (int k = 0; k < nprods; ++k) {
      Poly img = prods[k].image.conductor() == cond
                     ? prods[k].image
                     : prods[k].image.lifted(cond);
      for (const auto& [e, c] : img.terms()) a[mono_index.at(e)][k] = c;
    }
    auto kernel = kernel_basis(a);
    RowSpan old(nprods);
    for (size_t r = 0; r < out.phi_relations.size(); ++r) {
      const Poly& rel = out.phi_relations[r];
      int dr = out.relation_degrees[r];
      if (dr >= d) continue;
      for (const Exp& b : phi_exponents_of_degree(p, d - dr)) {
        CycVec v(nprods, CycNum(cond));
        for (const auto& [e, c] : rel.terms())
          v[prod_index.at(exp_mul(e, b))] = c;
        old.insert(std::move(v));
      }
    }
    for (auto& c : kernel) {
      CycVec res = old.reduce(c);
      int lead = -1;
      for (int k = 0; k < nprods; ++k)
        if (!res[k].is_zero()) {
          lead = k;
          break;
        }
      if (lead < 0) continue;
      CycNum inv = res[lead].inverse();
      Poly rel(nphi, cond);
      for (int k = 0; k < nprods; ++k)
        if (!res[k].is_zero()) rel.add_term(exps[k], res[k] * inv);
      old.insert(std::move(res));
      out.phi_relations.push_back(std::move(rel));
      out.relation_degrees.push_back(d);
      out.last_new_degree = d;
    }
  }
  for (const auto& rel : out.phi_relations)
    out.relations.push_back(homogenize_relation(p, rel));
  return out;
}

std::vector<Correction> suggest_corrections(const CoxPresentation& p,
                                            int degree) {
  std::vector<Correction> out;
  CoxPresentation aug = p;
  for (int round = 0; round < 32; ++round) {
    auto pieces = isotypic_basis(aug.group, degree);
    auto products = enumerate_products(aug, degree);
    bool failed = false;
    for (const auto& [chi, basis] : pieces) {
      if (failed) break;
      LiftSlice s = make_slice(aug, degree, chi, basis, products);
      walk_valuation_vectors(
          s, [&](const std::vector<long>& v,
                 const std::vector<CycVec>& inside, const RowSpan& span) {
            for (const auto& c : inside) {
              Poly f = s.combo(c);
              CycVec vec = poly_vec(f, s.index, s.dim, s.cond);
              if (span.contains(vec)) continue;
              // Residual of f modulo the liftable part, normalized.
              CycVec red = span.reduce(vec);
              RowSpan norm(s.dim);
              norm.insert(red);
              Poly residual(3, s.cond);
              for (size_t i = 0; i < norm.rows().back().size(); ++i)
                if (!norm.rows().back()[i].is_zero())
                  residual.add_term(s.monos[i], norm.rows().back()[i]);

              Correction corr;
              corr.invariant = residual;
              corr.degree = degree;
              corr.character = chi;
              for (int j = 0; j < aug.m(); ++j)
                corr.valuation_row.push_back(
                    aug.valuations[j].value(residual));
              // Modification of an existing generator: the deterministic
              // expansion of the residual uses exactly one bare generator.
              auto expansion =
                  s.solve_lift(residual,
                               std::vector<long>(aug.m(),
                                                 std::numeric_limits<long>::min()));
              if (expansion) {
                std::vector<int> bare;
                for (const auto& [e, coef] : expansion->terms()) {
                  int nz = 0, var = -1;
                  for (int i = 0; i < aug.s(); ++i) {
                    if (e[i] > 0) {
                      nz += e[i];
                      var = i;
                    }
                  }
                  if (nz == 1 && var < aug.num_phi) bare.push_back(var);
                }
                if (bare.size() == 1) corr.replaces = bare[0];
              }
              out.push_back(corr);
              failed = true;
              return false;  // restart with the augmented set
            }
            return true;
          });
      if (failed) break;
    }
    if (!failed) break;
    // Install the new generator and retry.
    const Correction& corr = out.back();
    GradedGenerator gg{corr.invariant, corr.degree, corr.character};
    std::vector<GradedGenerator> gens;
    for (int i = 0; i < aug.num_phi; ++i) {
      if (corr.replaces == i)
        gens.push_back(gg);
      else
        gens.push_back({aug.generators[i].base, aug.generators[i].degree,
                        aug.generators[i].character});
    }
    if (corr.replaces < 0) gens.push_back(gg);
    aug = build_candidate(aug.group, gens, false);
  }
  return out;
}

CoxPresentation apply_corrections(const CoxPresentation& p,
                                  const std::vector<Correction>& cs,
                                  bool attach_relations) {
  std::vector<GradedGenerator> gens;
  for (int i = 0; i < p.num_phi; ++i)
    gens.push_back({p.generators[i].base, p.generators[i].degree,
                    p.generators[i].character});
  for (const auto& c : cs) {
    GradedGenerator gg{c.invariant, c.degree, c.character};
    if (c.replaces >= 0)
      gens[c.replaces] = gg;
    else
      gens.push_back(gg);
  }
  return build_candidate(p.group, gens, attach_relations);
}

Poly invariant_representative(const CoxPresentation& p, const Poly& f) {
  if (f.is_zero() || !f.is_homogeneous())
    throw CoxError("invariant must be nonzero and homogeneous");
  int cond = std::lcm(p.group.conductor, f.conductor());
  Poly fl = f.lifted(cond);
  Character chi = character_of(p.group, fl);
  Character trivial(p.group.ab.invariant_factors.size(), 0);
  if (chi != trivial)
    throw CoxError("invariant representative requires the trivial character");
  int d = fl.total_degree();
  std::vector<long> v(p.m());
  for (int j = 0; j < p.m(); ++j) v[j] = p.valuations[j].value(fl);
  auto products = enumerate_products(p, d);
  LiftSlice slice = make_slice(p, d, chi, {fl}, products);
  auto lift = slice.solve_lift(fl, v);
  if (!lift)
    throw CoxError("no dominating expression for the invariant in degree " +
                   std::to_string(d));
  // Complete each monomial with the exceptional exponents that bring its
  // torus degree to zero; divisibility holds because the character is
  // trivial, so every torus weight is a multiple of the class order.
  Poly out(p.s(), lift->conductor());
  for (const auto& [e, c] : lift->terms()) {
    Exp w = e;
    auto deg = p.u_degree(e);
    for (int j = 0; j < p.m(); ++j) {
      if (deg[j] % p.orders[j] != 0)
        throw CoxError("torus degree not divisible by the class order");
      w[p.num_phi + j] = static_cast<int>(deg[j] / p.orders[j]);
    }
    out.add_term(w, c);
  }
  return out;
}

std::vector<Poly> exceptional_saturation(const CoxPresentation& p,
                                         const std::vector<Poly>& relations,
                                         GroebnerOptions opts) {
  if (relations.empty()) return {};
  int s = p.s();
  int cond = p.group.conductor;
  Exp e(s, 0);
  for (int i = p.num_phi; i < s; ++i) e[i] = 1;
  Poly prod = Poly::monomial(s, e, CycNum(cond, Rat(1)));
  return saturation(relations, prod, opts);
}

}  // namespace wb
