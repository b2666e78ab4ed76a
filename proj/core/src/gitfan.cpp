#include "wb/gitfan.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace wb {

namespace {

using LMat = std::vector<std::vector<long>>;

std::vector<ZVec> matrix_columns(const LMat& u) {
  size_t m = u.size(), s = u[0].size();
  std::vector<ZVec> cols(s, ZVec(m));
  for (size_t j = 0; j < s; ++j)
    for (size_t i = 0; i < m; ++i) cols[j][i] = u[i][j];
  return cols;
}

/// Memoizing I-face decision procedure.  The answer for a face depends
/// only on which monomials of each relation survive the zero
/// substitution, so results are shared across faces with the same
/// surviving pattern.
class FaceTester {
 public:
  FaceTester(const std::vector<Poly>& rels, int s, IFaceMode mode,
             GroebnerOptions opts)
      : rels_(rels), s_(s), mode_(mode), opts_(opts) {
    for (const auto& r : rels_) {
      std::vector<unsigned long long> masks;
      for (const auto& [e, c] : r.terms()) {
        (void)c;
        unsigned long long m = 0;
        for (int i = 0; i < s_; ++i)
          if (e[i] > 0) m |= 1ull << i;
        masks.push_back(m);
      }
      term_support_.push_back(std::move(masks));
    }
    trinomial_ = rels_.size() == 1 && rels_[0].num_terms() == 3;
    if (mode_ == IFaceMode::kCombinatorial && !trinomial_ &&
        !rels_.empty())
      throw FanError(
          "combinatorial mode requires a single trinomial relation");
  }

  /// mask bit i set <=> coordinate i nonzero on the orbit.
  std::pair<bool, const char*> test(unsigned long long mask) {
    // Surviving-monomial pattern per relation.
    std::string key;
    bool any_single = false, all_empty = true;
    std::vector<std::vector<int>> surviving(rels_.size());
    for (size_t r = 0; r < rels_.size(); ++r) {
      for (size_t t = 0; t < term_support_[r].size(); ++t)
        if ((term_support_[r][t] & ~mask) == 0)
          surviving[r].push_back(static_cast<int>(t));
      if (surviving[r].size() == 1) any_single = true;
      if (!surviving[r].empty()) all_empty = false;
      for (int t : surviving[r]) key += std::to_string(t) + ",";
      key += ";";
    }
    if (all_empty) return {true, "combinatorial"};
    if (any_single) return {false, "combinatorial"};
    if (mode_ != IFaceMode::kGroebner && trinomial_)
      return {true, "combinatorial"};  // 2 or 3 surviving monomials
    // General case: localize at the surviving coordinates.
    auto it = memo_.find(key);
    if (it != memo_.end()) return {it->second, "groebner"};
    std::vector<int> zero;
    for (int i = 0; i < s_; ++i)
      if (!(mask & (1ull << i))) zero.push_back(i);
    bool ok = consistency_with_unit(rels_, zero, opts_);
    memo_.emplace(std::move(key), ok);
    return {ok, "groebner"};
  }

 private:
  const std::vector<Poly>& rels_;
  int s_;
  IFaceMode mode_;
  GroebnerOptions opts_;
  std::vector<std::vector<unsigned long long>> term_support_;
  bool trinomial_ = false;
  std::map<std::string, bool> memo_;
};

void check_shape(const LMat& u, const std::vector<Poly>& relations) {
  if (u.empty() || u[0].empty()) throw FanError("empty degree matrix");
  if (u[0].size() > 62)
    throw FanError("too many generators for face enumeration");
  for (const auto& row : u)
    if (row.size() != u[0].size())
      throw FanError("ragged degree matrix");
  for (const auto& r : relations)
    if (r.nvars() != static_cast<int>(u[0].size()))
      throw FanError("relation variable count does not match the matrix");
}

}  // namespace

Cone movable_cone(const LMat& u) {
  if (u.empty() || u[0].empty()) throw FanError("empty degree matrix");
  int m = static_cast<int>(u.size());
  int s = static_cast<int>(u[0].size());
  auto cols = matrix_columns(u);
  if (!Cone::from_rays(m, cols).is_fulldim())
    throw FanError("degree matrix does not have full row rank");
  Cone mov;
  for (int skip = 0; skip < s; ++skip) {
    std::vector<ZVec> rays;
    for (int j = 0; j < s; ++j)
      if (j != skip) rays.push_back(cols[j]);
    Cone facet_image = Cone::from_rays(m, rays);
    mov = skip == 0 ? facet_image : mov.intersect(facet_image);
  }
  return mov;
}

bool is_I_face(const std::vector<Poly>& relations,
               const std::vector<int>& nonzero, IFaceMode mode,
               GroebnerOptions opts) {
  int s = relations.empty() ? 0 : relations[0].nvars();
  for (int i : nonzero) s = std::max(s, i + 1);
  FaceTester tester(relations, s, mode, opts);
  unsigned long long mask = 0;
  for (int i : nonzero) mask |= 1ull << i;
  return tester.test(mask).first;
}

std::vector<ProjectedFace> enumerate_I_faces(const LMat& u,
                                             const std::vector<Poly>& relations,
                                             FanOptions opts,
                                             bool full_dim_only) {
  check_shape(u, relations);
  int m = static_cast<int>(u.size());
  int s = static_cast<int>(u[0].size());
  auto cols = matrix_columns(u);
  FaceTester tester(relations, s, opts.mode, opts.groebner);
  // Image cones depend only on the set of distinct columns involved.
  std::map<std::vector<ZVec>, Cone> cone_cache;
  std::vector<ProjectedFace> out;
  for (unsigned long long mask = 0; mask < (1ull << s); ++mask) {
    std::set<ZVec> colset;
    std::vector<int> face;
    for (int i = 0; i < s; ++i)
      if (mask & (1ull << i)) {
        face.push_back(i);
        colset.insert(cols[i]);
      }
    std::vector<ZVec> sig(colset.begin(), colset.end());
    auto it = cone_cache.find(sig);
    if (it == cone_cache.end())
      it = cone_cache.emplace(sig, Cone::from_rays(m, sig)).first;
    if (full_dim_only && !it->second.is_fulldim()) continue;
    auto [ok, cert] = tester.test(mask);
    if (!ok) continue;
    out.push_back({face, it->second, cert});
  }
  return out;
}

std::string chamber_key(const Cone& c) {
  std::ostringstream os;
  for (const auto& r : c.rays()) {
    for (const auto& x : r) os << x.get_str() << ",";
    os << ";";
  }
  return os.str();
}

ChamberDecomposition chamber_decomposition(const LMat& u,
                                           const std::vector<Poly>& relations,
                                           const FanOptions& opts,
                                           const FanState* resume) {
  check_shape(u, relations);
  auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&]() {
    if (opts.budget_ms < 0) return false;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    return ms > opts.budget_ms;
  };
  int m = static_cast<int>(u.size());
  int s = static_cast<int>(u[0].size());
  auto cols = matrix_columns(u);

  ChamberDecomposition d;
  d.mov = movable_cone(u);
  if (!d.mov.is_fulldim())
    throw FanError("movable cone is not full-dimensional");

  FanState st;
  if (resume) st = *resume;
  std::set<Cone> activeset;
  for (const auto& rays : st.active)
    activeset.insert(Cone::from_rays(m, rays));

  auto snapshot_active = [&]() {
    st.active.clear();
    for (const auto& c : activeset) st.active.push_back(c.rays());
  };
  auto partial = [&]() {
    st.complete = false;
    snapshot_active();
    d.active.assign(activeset.begin(), activeset.end());
    d.state = st;
    return d;
  };

  // Phase 1: collect the distinct full-dimensional projected I-face
  // cones.  Image cones are cached by distinct-column signature; once a
  // signature is known active, further faces with it are skipped.
  if (!st.scan_done) {
    const unsigned long long total = 1ull << s;
    // One worker's scan over [lo, hi): signature caching and face tests
    // are local, discovered active cones accumulate in `found`.  `known`
    // is read-only shared state (cones active before the scan started).
    auto scan_range = [&](unsigned long long lo, unsigned long long hi,
                          FaceTester& tester,
                          std::map<std::vector<ZVec>, std::pair<int, Cone>>&
                              sigs,
                          const std::set<Cone>& known,
                          std::set<Cone>& found) {
      for (unsigned long long mask = lo; mask < hi; ++mask) {
        std::set<ZVec> colset;
        for (int i = 0; i < s; ++i)
          if (mask & (1ull << i)) colset.insert(cols[i]);
        std::vector<ZVec> sig(colset.begin(), colset.end());
        auto it = sigs.find(sig);
        if (it == sigs.end()) {
          Cone c = Cone::from_rays(m, sig);
          int status = 0;
          if (!c.is_fulldim())
            status = -1;
          else if (known.count(c) || found.count(c))
            status = 1;
          it = sigs.emplace(sig, std::make_pair(status, std::move(c))).first;
        }
        if (it->second.first != 0) continue;
        if (tester.test(mask).first) {
          found.insert(it->second.second);
          it->second.first = 1;
        }
      }
    };
    int jobs = std::max(1, opts.jobs);
    const unsigned long long chunk = 1ull << 12;
    if (jobs > 1 && total - st.next_mask > chunk) {
      // Chunked parallel scan.  Chunks complete out of order; on a budget
      // stop the resume point is the first unfinished chunk, so a rerun
      // revisits at most the interleaved tail (idempotent: rediscovered
      // cones merge into the same set).
      unsigned long long base = st.next_mask;
      unsigned long long nchunks = (total - base + chunk - 1) / chunk;
      std::vector<char> done(nchunks, 0);
      std::atomic<unsigned long long> next_chunk{0};
      std::atomic<bool> stop{false};
      std::vector<std::set<Cone>> results(jobs);
      auto worker = [&](int tid) {
        FaceTester tester(relations, s, opts.mode, opts.groebner);
        std::map<std::vector<ZVec>, std::pair<int, Cone>> sigs;
        while (!stop.load()) {
          unsigned long long ci = next_chunk.fetch_add(1);
          if (ci >= nchunks) break;
          unsigned long long lo = base + ci * chunk;
          scan_range(lo, std::min(total, lo + chunk), tester, sigs,
                     activeset, results[tid]);
          done[ci] = 1;
          if (out_of_time()) stop.store(true);
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
      for (auto& t : pool) t.join();
      for (const auto& r : results)
        for (const auto& c : r) activeset.insert(c);
      unsigned long long first_undone = nchunks;
      for (unsigned long long i = 0; i < nchunks; ++i)
        if (!done[i]) {
          first_undone = i;
          break;
        }
      if (first_undone < nchunks) {
        st.next_mask = base + first_undone * chunk;
        return partial();
      }
    } else {
      FaceTester tester(relations, s, opts.mode, opts.groebner);
      std::map<std::vector<ZVec>, std::pair<int, Cone>> sigs;
      std::set<Cone> found;
      for (unsigned long long lo = st.next_mask; lo < total; lo += chunk) {
        if (out_of_time()) {
          st.next_mask = lo;
          for (const auto& c : found) activeset.insert(c);
          return partial();
        }
        scan_range(lo, std::min(total, lo + chunk), tester, sigs, activeset,
                   found);
      }
      for (const auto& c : found) activeset.insert(c);
    }
    st.scan_done = true;
    st.next_mask = total;
  }
  d.active.assign(activeset.begin(), activeset.end());

  // Phase 2: witness-seeded wall-crossing search.
  auto generic = [&](const ZVec& w) {
    if (!d.mov.contains_relint(w)) return false;
    for (const auto& c : d.active)
      if (c.contains(w) && !c.contains_relint(w)) return false;
    return true;
  };
  auto lambda_of = [&](const ZVec& w) {
    std::vector<ZVec> normals = d.mov.facets();
    Chamber ch;
    ch.witness = w;
    for (size_t i = 0; i < d.active.size(); ++i)
      if (d.active[i].contains_relint(w)) {
        ch.defining_faces.push_back(static_cast<int>(i));
        for (const auto& f : d.active[i].facets()) normals.push_back(f);
      }
    ch.cone = Cone::from_inequalities(m, normals);
    return ch;
  };
  std::mt19937 rng(opts.seed);
  auto combine = [&](const std::vector<ZVec>& rays, bool randomize) {
    ZVec w(m, 0);
    for (const auto& r : rays) {
      long c = randomize ? 1 + static_cast<long>(rng() % 997) : 1;
      for (int i = 0; i < m; ++i) w[i] += c * r[i];
    }
    return w;
  };

  std::set<std::string> visited(st.visited.begin(), st.visited.end());
  std::deque<int> frontier(st.frontier.begin(), st.frontier.end());

  auto push_chamber = [&](const Chamber& ch) {
    std::string key = chamber_key(ch.cone);
    if (!visited.insert(key).second) return false;
    ++st.count;
    if (!opts.count_only) d.chambers.push_back(ch);
    st.witnesses.push_back(ch.witness);
    frontier.push_back(static_cast<int>(st.witnesses.size()) - 1);
    return true;
  };

  if (visited.empty() && frontier.empty() && st.witnesses.empty()) {
    bool found = false;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
      ZVec w = combine(d.mov.rays(), attempt > 0);
      if (generic(w)) {
        push_chamber(lambda_of(w));
        found = true;
      }
    }
    if (!found) throw FanError("no generic interior witness found");
  } else if (!opts.count_only && d.chambers.empty()) {
    // Resuming a full decomposition: rebuild every stored chamber from
    // its witness (a count-only resume skips this).
    for (const auto& w : st.witnesses) d.chambers.push_back(lambda_of(w));
  }

  while (!frontier.empty()) {
    if (out_of_time()) {
      st.visited.assign(visited.begin(), visited.end());
      st.frontier.assign(frontier.begin(), frontier.end());
      return partial();
    }
    ZVec w = st.witnesses[frontier.front()];
    frontier.pop_front();
    Chamber k = lambda_of(w);
    for (const auto& a : k.cone.facets()) {
      Cone wall = k.cone.face(a);
      {
        ZVec p0 = wall.relint_point();
        if (!d.mov.contains_relint(p0)) continue;  // boundary wall
      }
      bool crossed = false;
      for (int attempt = 0; attempt < 20 && !crossed; ++attempt) {
        ZVec p = combine(wall.rays(), attempt > 0);
        if (!d.mov.contains_relint(p)) continue;
        for (int shift = 4; shift <= 200; shift += 4) {
          ZVec wp(m);
          for (int i = 0; i < m; ++i)
            wp[i] = (p[i] << shift) - a[i];
          if (!generic(wp)) continue;
          Chamber n = lambda_of(wp);
          if (!n.cone.contains_cone(wall)) continue;  // stepped too far
          push_chamber(n);
          crossed = true;
          break;
        }
      }
      if (!crossed) throw FanError("wall crossing failed");
    }
  }

  st.complete = true;
  st.visited.assign(visited.begin(), visited.end());
  st.frontier.clear();
  snapshot_active();
  std::sort(d.chambers.begin(), d.chambers.end(),
            [](const Chamber& a, const Chamber& b) {
              return a.cone < b.cone;
            });
  d.state = st;
  return d;
}

FlopGraph flop_graph(const ChamberDecomposition& d) {
  FlopGraph g;
  g.nodes = static_cast<int>(d.chambers.size());
  int m = d.mov.ambient_dim();
  for (int i = 0; i < g.nodes; ++i) {
    for (int j = i + 1; j < g.nodes; ++j) {
      Cone shared = d.chambers[i].cone.intersect(d.chambers[j].cone);
      if (shared.dim() != m - 1) continue;
      FlopEdge e;
      e.a = i;
      e.b = j;
      const auto& ra = d.chambers[i].cone.rays();
      const auto& rb = d.chambers[j].cone.rays();
      std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(),
                          std::back_inserter(e.removed));
      std::set_difference(rb.begin(), rb.end(), ra.begin(), ra.end(),
                          std::back_inserter(e.added));
      g.edges.push_back(std::move(e));
    }
  }
  return g;
}

bool graph_connected(const FlopGraph& g) {
  if (g.nodes == 0) return true;
  std::vector<std::vector<int>> adj(g.nodes);
  for (const auto& e : g.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<char> seen(g.nodes, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push_back(w);
      }
  }
  return reached == g.nodes;
}

}  // namespace wb
