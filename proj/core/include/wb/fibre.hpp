#ifndef WB_FIBRE_HPP
#define WB_FIBRE_HPP

#include "wb/cox.hpp"
#include "wb/gitfan.hpp"

namespace wb {

struct FibreError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ideal of the fibre over the origin inside the total coordinate space:
/// the relation ideal together with a degree-zero ambient representative
/// of every non-constant full-group invariant generator.
std::vector<Poly> central_fibre_ideal(const CoxPresentation& p,
                                      const std::vector<Poly>& relations,
                                      const InvariantBasis& invariants);

struct ComponentCheck {
  bool contained = true;
  int failing = -1;  // first fibre generator outside the candidate radical
  int dim = -1;      // Krull dimension of the candidate
};

/// Does the candidate component lie over the fibre, i.e. is V(candidate)
/// contained in V(fibre_ideal)?  Checked by radical membership of every
/// fibre generator in the candidate ideal.
ComponentCheck verify_component(const std::vector<Poly>& fibre_ideal,
                                const std::vector<Poly>& candidate, int nvars,
                                GroebnerOptions opts = {});

/// One coordinate-orbit stratum: the coordinates forced to zero, the
/// stratum dimension s - |zero_vars|, and the dimension of the closure of
/// (orbit intersected with V(cap)).  cap_dim is -2 when the dimension
/// computation ran out of budget.
struct OrbitRecord {
  std::vector<int> zero_vars;
  int orbit_dim = 0;
  int cap_dim = -1;
};

struct StableOrbitOptions {
  GroebnerOptions groebner;
  bool with_cap_dims = true;
};

/// All torus-orbit strata of the ambient space that meet V(restrict_to)
/// and are stable for the chamber: the witness (sum of the chamber's
/// rays) must lie in the relative interior of the cone spanned by the
/// degree-matrix columns of the surviving coordinates.  cap_dim measures
/// each stratum against V(cap) (localized at the surviving coordinates).
/// Records are sorted by zero_vars.
std::vector<OrbitRecord> stable_orbits(const CoxPresentation& p,
                                       const std::vector<Poly>& restrict_to,
                                       const std::vector<Poly>& cap,
                                       const Cone& chamber,
                                       const StableOrbitOptions& opts = {});

}  // namespace wb

#endif
