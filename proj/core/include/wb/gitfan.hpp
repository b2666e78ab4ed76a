#ifndef WB_GITFAN_HPP
#define WB_GITFAN_HPP

#include "wb/cone.hpp"
#include "wb/cox.hpp"

namespace wb {

struct FanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A face of the positive orthant whose torus orbit meets the variety of
/// the relation ideal, together with its image cone under the degree
/// matrix.
struct ProjectedFace {
  std::vector<int> face;  // indices of the non-vanishing coordinates
  Cone cone;              // nonnegative span of the selected columns
  std::string certificate;  // "combinatorial" or "groebner"
};

enum class IFaceMode { kAuto, kCombinatorial, kGroebner };

/// Resumable progress snapshot of a chamber decomposition: the orbit-cone
/// scan position and discovered cones, then the wall-crossing search
/// frontier.  Serialized by the CLI layer.
struct FanState {
  bool scan_done = false;
  unsigned long long next_mask = 0;   // next orthant face to test
  std::vector<ZMat> active;           // rays of active cones found so far
  long count = 0;                     // chambers discovered
  std::vector<std::string> visited;   // canonical chamber keys
  std::vector<ZVec> witnesses;        // one witness per discovered chamber
  std::vector<int> frontier;          // witness indices not yet expanded
  bool complete = false;
};

struct FanOptions {
  IFaceMode mode = IFaceMode::kAuto;
  unsigned seed = 20260823;
  long budget_ms = -1;  // wall-clock cap for the whole decomposition
  bool count_only = false;  // skip per-chamber cone storage
  int jobs = 1;             // worker threads for the orbit-cone scan
  GroebnerOptions groebner;  // budget for individual face tests
};

/// Full-dimensional GIT chamber of the movable cone.
struct Chamber {
  Cone cone;
  ZVec witness;  // strictly interior, generic
  std::vector<int> defining_faces;  // active cones with witness in relint
};

struct ChamberDecomposition {
  Cone mov;
  std::vector<Cone> active;  // distinct full-dimensional projected I-face
                             // cones, sorted
  std::vector<Chamber> chambers;  // canonically sorted; empty if count_only
  FanState state;                 // progress/count; state.complete on success
};

struct FlopEdge {
  int a = 0, b = 0;            // chamber indices, a < b
  std::vector<ZVec> removed;   // rays of a not in b
  std::vector<ZVec> added;     // rays of b not in a
};

struct FlopGraph {
  int nodes = 0;
  std::vector<FlopEdge> edges;
};

/// Intersection over all facets F of the positive orthant of the cones
/// spanned by the columns of u outside F.  Throws FanError when u does
/// not have full row rank.
Cone movable_cone(const std::vector<std::vector<long>>& u);

/// Does the orbit with exactly the listed coordinates nonzero meet the
/// variety of the relations?  Combinatorial mode requires a single
/// trinomial relation (surviving-monomial count 1 rejects, 0/2/3 accept);
/// groebner mode localizes at the product of the surviving coordinates.
bool is_I_face(const std::vector<Poly>& relations,
               const std::vector<int>& nonzero, IFaceMode mode,
               GroebnerOptions opts = {});

/// All I-faces of the positive orthant (optionally only those with a
/// full-dimensional image cone), in bit-mask order of the index sets.
std::vector<ProjectedFace> enumerate_I_faces(
    const std::vector<std::vector<long>>& u,
    const std::vector<Poly>& relations, FanOptions opts = {},
    bool full_dim_only = false);

/// The complete set of full-dimensional GIT chambers subdividing the
/// movable cone: witness-seeded intersections of active orbit cones,
/// explored by exact wall crossing.  A budget overrun returns a partial
/// result with state.complete == false; pass the state back in to resume.
ChamberDecomposition chamber_decomposition(
    const std::vector<std::vector<long>>& u,
    const std::vector<Poly>& relations, const FanOptions& opts = {},
    const FanState* resume = nullptr);

/// Adjacency graph of the chambers: edges are shared walls of dimension
/// m-1, labeled by the exchanged rays.
FlopGraph flop_graph(const ChamberDecomposition& d);

bool graph_connected(const FlopGraph& g);

/// Canonical identifier of a chamber (its sorted primitive rays).
std::string chamber_key(const Cone& c);

}  // namespace wb

#endif
