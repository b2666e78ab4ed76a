#ifndef WB_IO_HPP
#define WB_IO_HPP

#include <json.hpp>

#include "wb/fibre.hpp"
#include "wb/gitfan.hpp"

namespace wb {

using Json = nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Polynomials are exchanged as {nvars, conductor, terms: [{e, c}]} with
/// coefficients in the cyclotomic expression grammar (round-trips through
/// the parser).
Json poly_to_json(const Poly& f);
Poly poly_from_json(const Json& j);

/// Ideal files: {"nvars": n, "conductor": N, "polys": [...]}.
Json ideal_to_json(const std::vector<Poly>& gens, int nvars, int conductor);
std::vector<Poly> ideal_from_json(const Json& j);

Json group_report(const FiniteMatrixGroup& g);
Json presentation_to_json(const CoxPresentation& p);
Json cone_to_json(const Cone& c);
Json decomposition_to_json(const ChamberDecomposition& d);
Json flops_to_json(const FlopGraph& g, const ChamberDecomposition& d);
std::string flops_to_dot(const FlopGraph& g, const ChamberDecomposition& d);

Json fan_state_to_json(const FanState& s);
FanState fan_state_from_json(const Json& j);

/// Orbit tables; labels name the ambient coordinates (defaults to T1..Ts
/// when empty).
Json orbit_records_to_json(const std::vector<OrbitRecord>& rs,
                           const std::vector<std::string>& labels = {});
std::string orbit_records_to_text(const std::vector<OrbitRecord>& rs,
                                  const std::vector<std::string>& labels = {});

}  // namespace wb

#endif
