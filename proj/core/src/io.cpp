#include "wb/io.hpp"

#include <sstream>

#include "wb/cyc_parser.hpp"

namespace wb {

namespace {

Json zvec_to_json(const ZVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

ZVec zvec_from_json(const Json& j) {
  ZVec v;
  for (const auto& x : j) v.emplace_back(x.get<std::string>());
  return v;
}

Json zmat_to_json(const ZMat& m) {
  Json a = Json::array();
  for (const auto& r : m) a.push_back(zvec_to_json(r));
  return a;
}

ZMat zmat_from_json(const Json& j) {
  ZMat m;
  for (const auto& r : j) m.push_back(zvec_from_json(r));
  return m;
}

std::string ray_str(const ZVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::vector<std::string> default_labels(size_t s) {
  std::vector<std::string> out;
  for (size_t i = 0; i < s; ++i) out.push_back("T" + std::to_string(i + 1));
  return out;
}

}  // namespace

Json poly_to_json(const Poly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back({{"e", e}, {"c", c.str()}});
  return {{"nvars", f.nvars()},
          {"conductor", f.conductor()},
          {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
  int nvars = j.at("nvars").get<int>();
  int cond = j.at("conductor").get<int>();
  Poly f(nvars, cond);
  for (const auto& t : j.at("terms")) {
    Exp e = t.at("e").get<Exp>();
    if (static_cast<int>(e.size()) != nvars)
      throw IoError("exponent length does not match nvars");
    f.add_term(e, parse_cyc(t.at("c").get<std::string>(), cond));
  }
  return f;
}

Json ideal_to_json(const std::vector<Poly>& gens, int nvars, int conductor) {
  Json polys = Json::array();
  for (const auto& g : gens) polys.push_back(poly_to_json(g));
  return {{"nvars", nvars}, {"conductor", conductor}, {"polys", polys}};
}

std::vector<Poly> ideal_from_json(const Json& j) {
  int nvars = j.at("nvars").get<int>();
  std::vector<Poly> out;
  for (const auto& pj : j.at("polys")) {
    Poly f = poly_from_json(pj);
    if (f.nvars() != nvars)
      throw IoError("ideal generator has the wrong variable count");
    out.push_back(std::move(f));
  }
  return out;
}

Json group_report(const FiniteMatrixGroup& g) {
  Json classes = Json::array();
  int juniors = 0, seniors = 0;
  for (const auto& c : g.classes) {
    classes.push_back({{"representative_order", c.order},
                       {"size", static_cast<int>(c.members.size())},
                       {"age", rat_str(c.age)},
                       {"junior", c.junior()}});
    if (c.junior()) ++juniors;
    if (c.age == 2) ++seniors;
  }
  return {{"name", g.name},
          {"order", g.size()},
          {"conductor", g.conductor},
          {"in_sl", g.in_sl()},
          {"classes", classes},
          {"num_classes", static_cast<int>(g.classes.size())},
          {"junior_classes", juniors},
          {"age_two_classes", seniors},
          {"commutator_order", static_cast<int>(g.commutator_ids.size())},
          {"abelianization_invariant_factors", g.ab.invariant_factors},
          {"quasi_reflections", static_cast<int>(g.quasi_reflections().size())}};
}

Json presentation_to_json(const CoxPresentation& p) {
  Json gens = Json::array();
  for (const auto& gen : p.generators) {
    Json gj = {{"name", gen.name},
               {"degree", gen.degree},
               {"exceptional", gen.exceptional},
               {"t_exponents", gen.t_exponents},
               {"character", gen.character}};
    if (gen.exceptional < 0) gj["base"] = poly_to_json(gen.base);
    gens.push_back(std::move(gj));
  }
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(poly_to_json(r));
  return {{"group", p.group.name},
          {"num_phi", p.num_phi},
          {"ambient_size", p.s()},
          {"class_orders", p.orders},
          {"generators", gens},
          {"degree_matrix", p.U},
          {"relations", rels}};
}

Json cone_to_json(const Cone& c) {
  Json rays = Json::array();
  for (const auto& r : c.rays()) rays.push_back(zvec_to_json(r));
  return {{"ambient_dim", c.ambient_dim()},
          {"dim", c.dim()},
          {"rays", rays}};
}

Json decomposition_to_json(const ChamberDecomposition& d) {
  Json chambers = Json::array();
  for (const auto& ch : d.chambers)
    chambers.push_back({{"cone", cone_to_json(ch.cone)},
                        {"witness", zvec_to_json(ch.witness)}});
  return {{"movable_cone", cone_to_json(d.mov)},
          {"chamber_count", d.state.count},
          {"complete", d.state.complete},
          {"chambers", chambers}};
}

Json flops_to_json(const FlopGraph& g, const ChamberDecomposition& d) {
  (void)d;
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json rm = Json::array(), ad = Json::array();
    for (const auto& r : e.removed) rm.push_back(zvec_to_json(r));
    for (const auto& r : e.added) ad.push_back(zvec_to_json(r));
    edges.push_back({{"a", e.a}, {"b", e.b}, {"removed", rm}, {"added", ad}});
  }
  return {{"nodes", g.nodes}, {"edges", edges}};
}

std::string flops_to_dot(const FlopGraph& g, const ChamberDecomposition& d) {
  std::ostringstream os;
  os << "graph flops {\n";
  for (int i = 0; i < g.nodes; ++i) {
    os << "  c" << i;
    if (i < static_cast<int>(d.chambers.size()))
      os << " [tooltip=\"witness " << ray_str(d.chambers[i].witness) << "\"]";
    os << ";\n";
  }
  for (const auto& e : g.edges) {
    os << "  c" << e.a << " -- c" << e.b << " [label=\"";
    for (size_t i = 0; i < e.removed.size(); ++i) {
      if (i) os << " ";
      os << ray_str(e.removed[i]);
    }
    os << " / ";
    for (size_t i = 0; i < e.added.size(); ++i) {
      if (i) os << " ";
      os << ray_str(e.added[i]);
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json fan_state_to_json(const FanState& s) {
  Json active = Json::array();
  for (const auto& m : s.active) active.push_back(zmat_to_json(m));
  Json witnesses = Json::array();
  for (const auto& w : s.witnesses) witnesses.push_back(zvec_to_json(w));
  return {{"scan_done", s.scan_done},
          {"next_mask", s.next_mask},
          {"active", active},
          {"count", s.count},
          {"visited", s.visited},
          {"witnesses", witnesses},
          {"frontier", s.frontier},
          {"complete", s.complete}};
}

FanState fan_state_from_json(const Json& j) {
  FanState s;
  s.scan_done = j.at("scan_done").get<bool>();
  s.next_mask = j.at("next_mask").get<unsigned long long>();
  for (const auto& m : j.at("active")) s.active.push_back(zmat_from_json(m));
  s.count = j.at("count").get<long>();
  s.visited = j.at("visited").get<std::vector<std::string>>();
  for (const auto& w : j.at("witnesses"))
    s.witnesses.push_back(zvec_from_json(w));
  s.frontier = j.at("frontier").get<std::vector<int>>();
  s.complete = j.at("complete").get<bool>();
  return s;
}

Json orbit_records_to_json(const std::vector<OrbitRecord>& rs,
                           const std::vector<std::string>& labels) {
  Json rows = Json::array();
  for (const auto& r : rs) {
    Json eqs = Json::array();
    for (int z : r.zero_vars) {
      if (!labels.empty())
        eqs.push_back(labels.at(z));
      else
        eqs.push_back("T" + std::to_string(z + 1));
    }
    rows.push_back({{"zero_vars", r.zero_vars},
                    {"equations", eqs},
                    {"dim", r.orbit_dim},
                    {"cap_dim", r.cap_dim}});
  }
  return {{"rows", rows}};
}

std::string orbit_records_to_text(const std::vector<OrbitRecord>& rs,
                                  const std::vector<std::string>& labels) {
  std::vector<std::string> names =
      labels.empty() && !rs.empty() ? default_labels(0) : labels;
  std::ostringstream os;
  os << "equations | dim | dim(cap)\n";
  for (const auto& r : rs) {
    for (size_t i = 0; i < r.zero_vars.size(); ++i) {
      if (i) os << " = ";
      int z = r.zero_vars[i];
      os << (z < static_cast<int>(names.size()) ? names[z]
                                                : "T" + std::to_string(z + 1));
    }
    os << " = 0 | " << r.orbit_dim << " | ";
    if (r.cap_dim == -2)
      os << "budget";
    else
      os << r.cap_dim;
    os << "\n";
  }
  return os.str();
}

}  // namespace wb
