#ifndef WB_COX_HPP
#define WB_COX_HPP

#include <optional>

#include "wb/groebner.hpp"
#include "wb/invariant.hpp"

namespace wb {

struct CoxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One generator of the candidate total coordinate ring: either a lifted
/// invariant phi * prod_j t_j^{nu_j(phi)} or an exceptional generator
/// t_j^{-ord}.
struct CoxGenerator {
  Poly base;                      // in x, y, z; zero for exceptional
  int exceptional = -1;           // junior-class slot j, or -1
  std::vector<long> t_exponents;  // length m
  Character character;            // trivial for exceptional generators
  std::string name;               // Z_i or T_j
  int degree = 0;                 // standard degree of base (0 for T_j)
};

struct CoxPresentation {
  FiniteMatrixGroup group;
  std::vector<int> junior_class_ids;  // class indices, deterministic order
  std::vector<long> orders;           // ord of each junior representative
  std::vector<MonomialValuation> valuations;  // one per junior class
  std::vector<CoxGenerator> generators;  // the phi-generators, then T_j
  int num_phi = 0;
  /// Weight matrix of the class-group torus action: m rows (junior
  /// classes), one column per generator.
  std::vector<std::vector<long>> U;
  std::vector<Poly> relations;  // in the s ambient variables

  int m() const { return static_cast<int>(junior_class_ids.size()); }
  int s() const { return static_cast<int>(generators.size()); }

  /// Image of an ambient polynomial under Z_i -> phi_i, T_j -> 1.
  Poly kappa(const Poly& f) const;
  std::vector<long> u_degree(const Exp& e) const;
  bool u_homogeneous(const Poly& f) const;
};

/// Assemble the candidate presentation: valuation rows, degree matrix,
/// exceptional generators.  When attach_relations is set and the phi
/// block is small, the relation ideal is computed as the kernel of the
/// invariant map and homogenized with the exceptional variables.
CoxPresentation build_candidate(const FiniteMatrixGroup& g,
                                const std::vector<GradedGenerator>& gens,
                                bool attach_relations = true,
                                GroebnerOptions kernel_budget = {});

/// Homogenize a relation among the phi-generators (a polynomial in
/// num_phi variables) with respect to the U-grading by multiplying each
/// monomial with exceptional variables; throws if the degrees cannot be
/// matched.
Poly homogenize_relation(const CoxPresentation& p, const Poly& rel);

/// Divide row j of U by divisors[j] (throws unless exact); used to
/// reproduce rescaled display conventions.
std::vector<std::vector<long>> scaled_U(const CoxPresentation& p,
                                        const std::vector<long>& divisors);

struct RelationReport {
  bool ok = true;
  std::string detail;
};

/// Every relation must be nonzero, have kappa-image zero, and be
/// U-homogeneous.
RelationReport verify_relations(const CoxPresentation& p);

/// A failed lifting instance: the invariant f of the given degree and
/// character cannot be written as a combination of generator products
/// whose exceptional-exponent vectors dominate the required valuations.
struct LiftFailure {
  int degree = 0;
  Character character;
  Poly f;
  std::vector<long> required;
};

/// A successful witness: kappa(lift) = f and every monomial of the lift
/// dominates the required valuation vector.
struct LiftWitness {
  int degree = 0;
  Character character;
  Poly f;
  std::vector<long> required;
  Poly lift;  // in the ambient variables
};

struct LiftReport {
  bool ok = true;
  int degree_bound = 0;
  std::vector<LiftFailure> failures;
};

/// Degree-by-degree graded verification of the valuation-lifting
/// condition up to the bound; exact within the bound (the achievable
/// valuation vectors of each isotypic piece are enumerated and the
/// span inclusion checked at each of them).
LiftReport check_lifting_bounded(const CoxPresentation& p, int degree_bound,
                                 bool stop_at_first_failure = false);

struct TrinomialLiftResult {
  bool ok = true;
  std::vector<LiftWitness> witnesses;
  std::optional<LiftFailure> counterexample;
};

/// Same verification for a presentation whose relation ideal is a single
/// trinomial, returning an explicit dominating preimage for every
/// isotypic basis invariant up to the bound.
TrinomialLiftResult check_lifting_trinomial(const CoxPresentation& p,
                                            int degree_bound);

/// Minimal generators of the relation ideal of the phi-generators,
/// computed degree by degree: at each standard degree the kernel of the
/// product evaluation matrix is reduced modulo multiples of lower-degree
/// relations, and the survivors are new minimal generators.  Degrees
/// where a modular rank certificate shows the lower-degree multiples
/// already fill the whole kernel are certified complete without exact
/// work (the modular rank is a lower bound, so the certificate can only
/// err towards doing the exact computation).
struct GradedRelations {
  std::vector<Poly> phi_relations;  // in the num_phi Z-variables
  std::vector<int> relation_degrees;
  std::vector<Poly> relations;  // U-homogenized, in the s ambient variables
  int degree_bound = 0;
  int last_new_degree = 0;  // 0 when no relation was found
};

GradedRelations graded_relations(const CoxPresentation& p, int degree_bound);

/// Saturate homogenized relations by the product of the exceptional
/// variables.  The homogenized generators cut out the right variety only
/// where no exceptional coordinate vanishes; the ideal of the closure of
/// that locus — which the fan and fibre computations require — is the
/// saturation.  For a principal relation ideal this is typically the
/// identity.
std::vector<Poly> exceptional_saturation(const CoxPresentation& p,
                                         const std::vector<Poly>& relations,
                                         GroebnerOptions opts = {});

/// Express a full-group invariant f (in x, y, z) as a degree-zero ambient
/// polynomial: a dominating lift of f in the phi-generators, with each
/// monomial completed by the exceptional monomial that cancels its torus
/// degree.  kappa of the result is f.  Throws CoxError when f is not
/// homogeneous or no dominating expression exists within its degree.
Poly invariant_representative(const CoxPresentation& p, const Poly& f);

/// A corrected or new generator emitted by the repair step.
struct Correction {
  Poly invariant;  // in x, y, z
  int degree = 0;
  Character character;
  std::vector<long> valuation_row;
  int replaces = -1;  // index of a phi-generator it modifies, or -1 (new)
};

/// Lifting-failure repair at one degree: residuals of the failing
/// isotypic subspaces modulo the liftable part, with deterministic
/// normalization; empty when lifting already holds at this degree.
std::vector<Correction> suggest_corrections(const CoxPresentation& p,
                                            int degree);

/// Apply corrections: replace or append phi-generators and rebuild.
CoxPresentation apply_corrections(const CoxPresentation& p,
                                  const std::vector<Correction>& cs,
                                  bool attach_relations = true);

}  // namespace wb

#endif
