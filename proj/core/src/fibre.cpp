#include "wb/fibre.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace wb {

namespace {

/// Append one fresh variable (index nvars) to the ambient ring of f.
Poly widen(const Poly& f, int nvars) {
  Poly out(nvars + 1, f.conductor());
  for (const auto& [e, c] : f.terms()) {
    Exp w(nvars + 1, 0);
    std::copy(e.begin(), e.end(), w.begin());
    out.add_term(w, c);
  }
  return out;
}

}  // namespace

std::vector<Poly> central_fibre_ideal(const CoxPresentation& p,
                                      const std::vector<Poly>& relations,
                                      const InvariantBasis& invariants) {
  std::vector<Poly> out = relations;
  for (const auto& gen : invariants.generators) {
    if (gen.degree <= 0) continue;
    out.push_back(invariant_representative(p, gen.poly));
  }
  return out;
}

ComponentCheck verify_component(const std::vector<Poly>& fibre_ideal,
                                const std::vector<Poly>& candidate, int nvars,
                                GroebnerOptions opts) {
  ComponentCheck r;
  for (size_t i = 0; i < fibre_ideal.size(); ++i) {
    if (!radical_membership(fibre_ideal[i], candidate, opts)) {
      r.contained = false;
      r.failing = static_cast<int>(i);
      break;
    }
  }
  r.dim = krull_dimension(candidate, nvars, opts);
  return r;
}

std::vector<OrbitRecord> stable_orbits(const CoxPresentation& p,
                                       const std::vector<Poly>& restrict_to,
                                       const std::vector<Poly>& cap,
                                       const Cone& chamber,
                                       const StableOrbitOptions& opts) {
  const int s = p.s();
  const int m = p.m();
  if (s > 26) throw FibreError("ambient dimension too large for orbit scan");
  if (chamber.ambient_dim() != m)
    throw FibreError("chamber lives in the wrong ambient space");

  // Witness: sum of the chamber's rays, a relative-interior point.
  ZVec w(m, 0);
  for (const auto& r : chamber.rays())
    for (int j = 0; j < m; ++j) w[j] += r[j];

  // Degree-matrix columns, deduplicated so cones are cached per distinct
  // column subset rather than per coordinate subset.
  std::vector<ZVec> cols(s, ZVec(m));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < m; ++j) cols[i][j] = p.U[j][i];
  std::map<ZVec, int> class_of;
  std::vector<ZVec> unique_cols;
  std::vector<int> col_class(s);
  for (int i = 0; i < s; ++i) {
    auto [it, fresh] =
        class_of.emplace(cols[i], static_cast<int>(unique_cols.size()));
    if (fresh) unique_cols.push_back(cols[i]);
    col_class[i] = it->second;
  }
  std::map<unsigned long long, bool> stable_cache;

  // Per-term variable masks of the restriction generators, for the
  // surviving-pattern signature that keys the consistency memo.
  struct GenSupport {
    std::vector<unsigned> term_masks;
  };
  std::vector<GenSupport> supports;
  for (const auto& g : restrict_to) {
    GenSupport gs;
    for (const auto& [e, c] : g.terms()) {
      unsigned tm = 0;
      for (int i = 0; i < s; ++i)
        if (e[i] > 0) tm |= 1u << i;
      gs.term_masks.push_back(tm);
    }
    supports.push_back(std::move(gs));
  }
  std::map<std::string, bool> meet_cache;

  std::vector<OrbitRecord> out;
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    // Stability of the stratum with exactly these coordinates zero.
    unsigned long long ckey = 0;
    for (int i = 0; i < s; ++i)
      if (!(mask & (1u << i))) ckey |= 1ull << col_class[i];
    auto sit = stable_cache.find(ckey);
    if (sit == stable_cache.end()) {
      std::vector<ZVec> rays;
      for (size_t u = 0; u < unique_cols.size(); ++u)
        if (ckey & (1ull << u)) rays.push_back(unique_cols[u]);
      bool ok = Cone::from_rays(m, rays).contains_relint(w);
      sit = stable_cache.emplace(ckey, ok).first;
    }
    if (!sit->second) continue;

    // Does the stratum meet the restriction variety?
    bool meets = true;
    if (!restrict_to.empty()) {
      std::string key;
      bool single_survivor = false;
      for (size_t gi = 0; gi < supports.size(); ++gi) {
        int alive = 0;
        key.push_back('|');
        for (size_t t = 0; t < supports[gi].term_masks.size(); ++t) {
          if (supports[gi].term_masks[t] & mask) continue;
          ++alive;
          key.push_back(static_cast<char>(t & 0x7f));
          key.push_back(static_cast<char>((t >> 7) & 0x7f));
        }
        if (alive == 1) single_survivor = true;
      }
      if (single_survivor) {
        // Some generator restricts to a single monomial in nonvanishing
        // coordinates: it cannot vanish on the stratum.
        meets = false;
      } else {
        auto mit = meet_cache.find(key);
        if (mit == meet_cache.end()) {
          std::vector<int> zeros;
          for (int i = 0; i < s; ++i)
            if (mask & (1u << i)) zeros.push_back(i);
          bool ok = consistency_with_unit(restrict_to, zeros, opts.groebner);
          mit = meet_cache.emplace(std::move(key), ok).first;
        }
        meets = mit->second;
      }
    }
    if (!meets) continue;

    OrbitRecord rec;
    for (int i = 0; i < s; ++i)
      if (mask & (1u << i)) rec.zero_vars.push_back(i);
    rec.orbit_dim = s - static_cast<int>(rec.zero_vars.size());
    out.push_back(std::move(rec));
  }

  if (opts.with_cap_dims) {
    int cond = p.group.conductor;
    for (auto& rec : out) {
      // Dimension of the closure of (stratum  intersect  V(cap)): cut the
      // zero coordinates, localize at the surviving ones with an inverse
      // variable, and measure the Krull dimension of the graph.
      std::vector<Poly> sys;
      for (const auto& g : cap) sys.push_back(widen(g, s));
      for (int i : rec.zero_vars) sys.push_back(Poly::variable(s + 1, cond, i));
      Exp prod(s + 1, 0);
      prod[s] = 1;
      for (int i = 0; i < s; ++i)
        if (!std::binary_search(rec.zero_vars.begin(), rec.zero_vars.end(), i))
          prod[i] = 1;
      sys.push_back(Poly::monomial(s + 1, prod, CycNum(cond, Rat(1))) -
                    Poly::constant(s + 1, CycNum(cond, Rat(1))));
      try {
        rec.cap_dim = krull_dimension(sys, s + 1, opts.groebner);
      } catch (const BudgetError&) {
        rec.cap_dim = -2;
      }
    }
  }
  return out;
}

}  // namespace wb
