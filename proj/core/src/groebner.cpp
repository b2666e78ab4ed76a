#include "wb/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

namespace wb {

namespace {

using Clock = std::chrono::steady_clock;

int grevlex_cmp(const Exp& a, const Exp& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: larger is the one whose last nonzero difference is
  // negative.
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int lex_cmp(const Exp& a, const Exp& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

TermOrder TermOrder::grevlex() { return TermOrder(kGrevlex, 0); }
TermOrder TermOrder::lex() { return TermOrder(kLex, 0); }
TermOrder TermOrder::block_elim(int eliminated) {
  if (eliminated <= 0) throw GroebnerError("empty elimination block");
  return TermOrder(kBlock, eliminated);
}

int TermOrder::cmp(const Exp& a, const Exp& b) const {
  if (a.size() != b.size())
    throw GroebnerError("term order: exponent dimension mismatch");
  int n = static_cast<int>(a.size());
  switch (kind_) {
    case kGrevlex:
      return grevlex_cmp(a, b, 0, n);
    case kLex:
      return lex_cmp(a, b);
    case kBlock: {
      int hi = std::min(block_, n);
      int c = grevlex_cmp(a, b, 0, hi);
      if (c != 0) return c;
      return grevlex_cmp(a, b, hi, n);
    }
  }
  return 0;
}

Exp leading_exp(const Poly& f, const TermOrder& order) {
  if (f.is_zero()) throw GroebnerError("leading term of zero polynomial");
  const Exp* best = nullptr;
  for (const auto& [e, c] : f.terms()) {
    if (!best || order.less(*best, e)) best = &e;
  }
  return *best;
}

CycNum leading_coeff(const Poly& f, const TermOrder& order) {
  return f.terms().at(leading_exp(f, order));
}

namespace {

Poly monomial_times(const Poly& f, const Exp& e, const CycNum& c) {
  return f * Poly::monomial(f.nvars(), e, c);
}

bool exp_coprime(const Exp& a, const Exp& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

struct PairRec {
  int i, j;
  Exp lcm;
  int deg;
  int sugar;
};

/// Full reduction of f against (polys, leads); reducer choice is the
/// first basis element in list order whose lead divides the term.
Poly reduce_full(Poly f, const std::vector<Poly>& polys,
                 const std::vector<Exp>& leads, const TermOrder& order) {
  Poly rem(f.nvars(), f.conductor());
  while (!f.is_zero()) {
    Exp le = leading_exp(f, order);
    CycNum lc = f.terms().at(le);
    bool reduced = false;
    for (size_t k = 0; k < polys.size(); ++k) {
      if (exp_divides(leads[k], le)) {
        f -= monomial_times(polys[k], exp_div(le, leads[k]), lc);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(le, lc);
      f.add_term(le, -lc);
    }
  }
  return rem;
}

Poly make_monic(const Poly& f, const TermOrder& order) {
  return f * leading_coeff(f, order).inverse();
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<Poly> gens, TermOrder order,
                             GroebnerOptions opts)
    : order_(order), nvars_(0), conductor_(1) {
  for (const auto& g : gens) {
    if (g.nvars() > nvars_) nvars_ = g.nvars();
    conductor_ = std::lcm(conductor_, g.conductor());
  }

  auto start = Clock::now();
  auto check_clock = [&]() {
    if (opts.max_millis >= 0 &&
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                              start)
                .count() > opts.max_millis)
      throw BudgetError("groebner budget: wall clock exceeded", stats_);
  };

  std::vector<Poly> basis;
  std::vector<Exp> leads;
  std::vector<int> sugars;
  std::vector<PairRec> pairs;

  auto add_element = [&](const Poly& h, int sugar) {
    Exp lh = leading_exp(h, order_);
    int t = static_cast<int>(basis.size());
    // Gebauer-Moeller update of the pair set.
    std::vector<PairRec> fresh;
    for (int i = 0; i < t; ++i) {
      PairRec p;
      p.i = i;
      p.j = t;
      p.lcm = exp_lcm(leads[i], lh);
      p.deg = exp_total_degree(p.lcm);
      p.sugar = std::max(sugars[i] + p.deg - exp_total_degree(leads[i]),
                         sugar + p.deg - exp_total_degree(lh));
      fresh.push_back(std::move(p));
    }
    std::vector<bool> keep(fresh.size(), false);
    for (size_t a = 0; a < fresh.size(); ++a) {
      if (exp_coprime(leads[fresh[a].i], lh)) {
        // Buchberger's coprime criterion: drop, and it still shields
        // others below.
        stats_.pairs_discarded++;
        continue;
      }
      bool dominated = false;
      for (size_t b = 0; b < fresh.size() && !dominated; ++b) {
        if (b == a) continue;
        bool b_alive = keep[b] || b > a;
        if (!b_alive) continue;
        if (exp_divides(fresh[b].lcm, fresh[a].lcm) &&
            fresh[b].lcm != fresh[a].lcm)
          dominated = true;
        if (b < a && keep[b] && fresh[b].lcm == fresh[a].lcm)
          dominated = true;  // duplicate lcm, keep the first
      }
      if (dominated) {
        stats_.pairs_discarded++;
        continue;
      }
      keep[a] = true;
    }
    // Prune old pairs whose lcm is a proper multiple of the new lead.
    std::vector<PairRec> survivors;
    for (auto& p : pairs) {
      bool drop = exp_divides(lh, p.lcm) &&
                  exp_lcm(leads[p.i], lh) != p.lcm &&
                  exp_lcm(leads[p.j], lh) != p.lcm;
      if (drop)
        stats_.pairs_discarded++;
      else
        survivors.push_back(std::move(p));
    }
    pairs = std::move(survivors);
    for (size_t a = 0; a < fresh.size(); ++a)
      if (keep[a]) pairs.push_back(std::move(fresh[a]));
    basis.push_back(h);
    leads.push_back(std::move(lh));
    sugars.push_back(sugar);
  };

  // Seed with the nonzero inputs in a deterministic order.
  std::vector<Poly> seeds;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Poly lifted = g.lifted(conductor_);
    if (lifted.nvars() != nvars_)
      throw GroebnerError("groebner: mixed variable counts");
    seeds.push_back(make_monic(lifted, order_));
  }
  std::sort(seeds.begin(), seeds.end(), [&](const Poly& a, const Poly& b) {
    return order_.less(leading_exp(a, order_), leading_exp(b, order_)) ||
           (leading_exp(a, order_) == leading_exp(b, order_) &&
            a.terms() < b.terms());
  });
  for (const auto& s : seeds) {
    Poly red = reduce_full(s, basis, leads, order_);
    if (!red.is_zero()) add_element(make_monic(red, order_), s.total_degree());
  }

  while (!pairs.empty()) {
    check_clock();
    // Normal strategy: minimal lcm degree, then minimal sugar, then
    // smallest lcm in the order, then smallest index pair.
    size_t best = 0;
    for (size_t a = 1; a < pairs.size(); ++a) {
      const PairRec& p = pairs[a];
      const PairRec& q = pairs[best];
      if (std::tuple(p.deg, p.sugar) < std::tuple(q.deg, q.sugar) ||
          (p.deg == q.deg && p.sugar == q.sugar &&
           (order_.less(p.lcm, q.lcm) ||
            (p.lcm == q.lcm && std::tuple(p.i, p.j) < std::tuple(q.i, q.j)))))
        best = a;
    }
    PairRec p = pairs[best];
    pairs.erase(pairs.begin() + best);
    if (++stats_.pairs_considered > opts.max_pairs)
      throw BudgetError("groebner budget: pair limit exceeded", stats_);
    if (p.deg > opts.max_degree)
      throw BudgetError("groebner budget: degree limit exceeded", stats_);
    stats_.max_degree_seen = std::max(stats_.max_degree_seen, p.deg);

    Poly s = monomial_times(basis[p.i], exp_div(p.lcm, leads[p.i]),
                            CycNum(conductor_, Rat(1))) -
             monomial_times(basis[p.j], exp_div(p.lcm, leads[p.j]),
                            CycNum(conductor_, Rat(1)));
    Poly red = reduce_full(std::move(s), basis, leads, order_);
    if (!red.is_zero()) add_element(make_monic(red, order_), p.sugar);
  }

  // Interreduce to the unique reduced basis.
  std::vector<bool> redundant(basis.size(), false);
  for (size_t a = 0; a < basis.size(); ++a) {
    for (size_t b = 0; b < basis.size(); ++b) {
      if (a == b || redundant[b]) continue;
      if (exp_divides(leads[b], leads[a]) &&
          !(leads[a] == leads[b] && b > a)) {
        redundant[a] = true;
        break;
      }
    }
  }
  std::vector<Poly> kept;
  std::vector<Exp> kept_leads;
  for (size_t a = 0; a < basis.size(); ++a) {
    if (!redundant[a]) {
      kept.push_back(basis[a]);
      kept_leads.push_back(leads[a]);
    }
  }
  for (size_t a = 0; a < kept.size(); ++a) {
    std::vector<Poly> others;
    std::vector<Exp> other_leads;
    for (size_t b = 0; b < kept.size(); ++b) {
      if (b == a) continue;
      others.push_back(kept[b]);
      other_leads.push_back(kept_leads[b]);
    }
    kept[a] = make_monic(reduce_full(kept[a], others, other_leads, order_),
                         order_);
    kept_leads[a] = leading_exp(kept[a], order_);
  }
  std::vector<size_t> perm(kept.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    return order_.less(kept_leads[a], kept_leads[b]);
  });
  for (size_t a : perm) {
    basis_.push_back(kept[a]);
    lead_exps_.push_back(kept_leads[a]);
  }
  stats_.basis_size = static_cast<long>(basis_.size());
}

Poly GroebnerBasis::normal_form(const Poly& f) const {
  int cond = std::lcm(conductor_, f.conductor());
  std::vector<Poly> lifted;
  for (const auto& g : basis_) lifted.push_back(g.lifted(cond));
  return reduce_full(f.lifted(cond), lifted, lead_exps_, order_);
}

bool GroebnerBasis::contains(const Poly& f) const {
  return normal_form(f).is_zero();
}

bool GroebnerBasis::is_unit_ideal() const {
  return basis_.size() == 1 && basis_[0].total_degree() == 0;
}

Poly set_vars_zero(const Poly& f, const std::vector<int>& zero_vars) {
  Poly out(f.nvars(), f.conductor());
  for (const auto& [e, c] : f.terms()) {
    bool killed = false;
    for (int v : zero_vars) {
      if (e[v] > 0) {
        killed = true;
        break;
      }
    }
    if (!killed) out.add_term(e, c);
  }
  return out;
}

namespace {

/// Append one fresh variable to the ambient ring of f.
Poly widen_by_one(const Poly& f) {
  Poly out(f.nvars() + 1, f.conductor());
  for (const auto& [e, c] : f.terms()) {
    Exp w = e;
    w.push_back(0);
    out.add_term(w, c);
  }
  return out;
}

}  // namespace

bool consistency_with_unit(const std::vector<Poly>& gens,
                           const std::vector<int>& zero_vars,
                           GroebnerOptions opts) {
  if (gens.empty()) return true;
  int nvars = gens[0].nvars();
  int cond = 1;
  for (const auto& g : gens) cond = std::lcm(cond, g.conductor());
  std::vector<bool> is_zero_var(nvars, false);
  for (int v : zero_vars) is_zero_var[v] = true;

  std::vector<Poly> sys;
  for (const auto& g : gens) {
    Poly s = set_vars_zero(g.lifted(cond), zero_vars);
    if (s.is_zero()) continue;
    if (s.total_degree() == 0) return false;  // nonzero constant
    sys.push_back(widen_by_one(s));
  }
  // y * prod(remaining variables) - 1 forces the remaining coordinates
  // nonzero.
  Exp prod(nvars + 1, 0);
  for (int v = 0; v < nvars; ++v)
    if (!is_zero_var[v]) prod[v] = 1;
  prod[nvars] = 1;
  Poly rab = Poly::monomial(nvars + 1, prod, CycNum(cond, Rat(1)));
  rab.add_term(Exp(nvars + 1, 0), CycNum(cond, Rat(-1)));
  sys.push_back(rab);

  GroebnerBasis gb(sys, TermOrder::grevlex(), opts);
  return !gb.is_unit_ideal();
}

bool radical_membership(const Poly& f, const std::vector<Poly>& gens,
                        GroebnerOptions opts) {
  if (f.is_zero()) return true;
  int nvars = f.nvars();
  int cond = f.conductor();
  for (const auto& g : gens) cond = std::lcm(cond, g.conductor());
  std::vector<Poly> sys;
  for (const auto& g : gens)
    if (!g.is_zero()) sys.push_back(widen_by_one(g.lifted(cond)));
  Poly yf = widen_by_one(f.lifted(cond));
  Exp y(nvars + 1, 0);
  y[nvars] = 1;
  yf = yf * Poly::monomial(nvars + 1, y, CycNum(cond, Rat(1)));
  yf.add_term(Exp(nvars + 1, 0), CycNum(cond, Rat(-1)));
  sys.push_back(yf);
  GroebnerBasis gb(sys, TermOrder::grevlex(), opts);
  return gb.is_unit_ideal();
}

std::vector<Poly> saturation(const std::vector<Poly>& gens, const Poly& f,
                             GroebnerOptions opts) {
  if (f.is_zero()) throw GroebnerError("saturation by zero");
  int n = f.nvars();
  int cond = f.conductor();
  for (const auto& g : gens) cond = std::lcm(cond, g.conductor());
  // The Rabinowitsch variable sits at index 0 so the block order can
  // eliminate it; the original variables shift up by one.
  auto shift_up = [&](const Poly& g) {
    Poly out(n + 1, cond);
    for (const auto& [e, c] : g.terms()) {
      Exp w(n + 1, 0);
      std::copy(e.begin(), e.end(), w.begin() + 1);
      out.add_term(w, c);
    }
    return out;
  };
  std::vector<Poly> sys;
  for (const auto& g : gens)
    if (!g.is_zero()) sys.push_back(shift_up(g.lifted(cond)));
  Poly rab(n + 1, cond);
  Poly fl = f.lifted(cond);
  for (const auto& [e, c] : fl.terms()) {
    Exp w(n + 1, 0);
    w[0] = 1;
    std::copy(e.begin(), e.end(), w.begin() + 1);
    rab.add_term(w, c);
  }
  rab.add_term(Exp(n + 1, 0), CycNum(cond, Rat(-1)));
  sys.push_back(std::move(rab));

  GroebnerBasis gb(sys, TermOrder::block_elim(1), opts);
  std::vector<Poly> out;
  for (const auto& g : gb.basis()) {
    bool pure = true;
    for (const auto& [e, c] : g.terms()) {
      (void)c;
      if (e[0] > 0) {
        pure = false;
        break;
      }
    }
    if (!pure) continue;
    Poly down(n, cond);
    for (const auto& [e, c] : g.terms())
      down.add_term(Exp(e.begin() + 1, e.end()), c);
    out.push_back(std::move(down));
  }
  return out;
}

std::vector<Poly> kernel_of_map(const std::vector<Poly>& images,
                                GroebnerOptions opts) {
  if (images.empty()) return {};
  int n = images[0].nvars();
  int s = static_cast<int>(images.size());
  int cond = 1;
  for (const auto& im : images) cond = std::lcm(cond, im.conductor());

  std::vector<Poly> sys;
  for (int i = 0; i < s; ++i) {
    Poly g(n + s, cond);
    Exp z(n + s, 0);
    z[n + i] = 1;
    g.add_term(z, CycNum(cond, Rat(1)));
    Poly image = images[i].lifted(cond);
    for (const auto& [e, c] : image.terms()) {
      Exp w = e;
      w.resize(n + s, 0);
      g.add_term(w, -c);
    }
    sys.push_back(std::move(g));
  }
  GroebnerBasis gb(sys, TermOrder::block_elim(n), opts);

  std::vector<Poly> kernel;
  for (const auto& g : gb.basis()) {
    bool pure = true;
    for (const auto& [e, c] : g.terms()) {
      for (int v = 0; v < n && pure; ++v)
        if (e[v] > 0) pure = false;
      if (!pure) break;
    }
    if (!pure) continue;
    Poly down(s, cond);
    for (const auto& [e, c] : g.terms())
      down.add_term(Exp(e.begin() + n, e.end()), c);
    kernel.push_back(std::move(down));
  }
  return kernel;
}

namespace {

int min_hitting_set(const std::vector<std::vector<int>>& supports,
                    std::vector<bool>& chosen, int depth, int best) {
  // First support not yet hit.
  const std::vector<int>* open = nullptr;
  for (const auto& s : supports) {
    bool hit = false;
    for (int v : s)
      if (chosen[v]) {
        hit = true;
        break;
      }
    if (!hit) {
      open = &s;
      break;
    }
  }
  if (!open) return depth;
  if (depth + 1 >= best) return best;  // cannot improve
  for (int v : *open) {
    chosen[v] = true;
    best = std::min(best, min_hitting_set(supports, chosen, depth + 1, best));
    chosen[v] = false;
  }
  return best;
}

}  // namespace

int krull_dimension(const std::vector<Poly>& gens, int nvars,
                    GroebnerOptions opts) {
  GroebnerBasis gb(gens, TermOrder::grevlex(), opts);
  if (gb.is_unit_ideal()) return -1;
  std::vector<std::vector<int>> supports;
  for (const auto& g : gb.basis()) {
    Exp le = leading_exp(g, gb.order());
    std::vector<int> sup;
    for (int v = 0; v < static_cast<int>(le.size()); ++v)
      if (le[v] > 0) sup.push_back(v);
    supports.push_back(std::move(sup));
  }
  std::vector<bool> chosen(nvars, false);
  int cover = min_hitting_set(supports, chosen, 0, nvars + 1);
  return nvars - cover;
}

}  // namespace wb
