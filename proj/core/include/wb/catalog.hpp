#ifndef WB_CATALOG_HPP
#define WB_CATALOG_HPP

#include <string>
#include <vector>

#include "wb/group.hpp"
#include "wb/invariant.hpp"

namespace wb {

/// Named generator set; pass to enumerate_group to materialize the group.
struct CatalogEntry {
  std::string name;
  std::vector<CycMat> generators;
};

/// Embed a 2x2 matrix into SL(3) as diag(g, det(g)^{-1}).
CycMat sl3_embed(const CycMat& g);

/// Dihedral group of order 2n acting by rotations/reflections on the
/// (x, y)-plane, embedded in SL(3) with determinant compensation on z.
CatalogEntry catalog_dihedral(int n);

/// Binary dihedral group of order 4q in SL(2), embedded in SL(3).
CatalogEntry catalog_binary_dihedral(int q);

/// Binary tetrahedral (order 24), octahedral (48), icosahedral (120)
/// subgroups of SL(2), embedded in SL(3).
CatalogEntry catalog_binary_tetrahedral();
CatalogEntry catalog_binary_octahedral();
CatalogEntry catalog_binary_icosahedral();

/// Order-16 group generated by the embeddings of [[0,i],[i,0]] and
/// diag(zeta_8^3, zeta_8).
CatalogEntry catalog_example16();

/// Order-24 group generated by the embeddings of diag(zeta_6, zeta_6^5) and
/// [[0,zeta_8^3],[zeta_8^3,0]].
CatalogEntry catalog_example24();

/// Trihedral group of order 21: diag(zeta_7, zeta_7^2, zeta_7^4) and the
/// coordinate 3-cycle.
CatalogEntry catalog_trihedral21();

/// Heisenberg group of order 27: diag(1, zeta_3, zeta_3^2) and the 3-cycle.
CatalogEntry catalog_heisenberg27();

/// Order-54 double extension of the Heisenberg group.
CatalogEntry catalog_extension54();

/// Product construction (mu_{wd} | mu_d ; H | K): scalars in mu_{wd} paired
/// with elements of the 2x2 group H through the cyclic quotient H/K of
/// order w, then embedded into SL(3).  The quotient generator is chosen
/// deterministically (smallest enumeration id generating H/K).
CatalogEntry catalog_product(int w, int d, const std::vector<CycMat>& h_gens,
                             const std::vector<CycMat>& k_gens);

/// Lookup by name ("D2n:7", "BD:16", "BT", "BO", "BI", "EX16", "EX24",
/// "G21", "G27", "G54").  Throws GroupError for unknown names.
CatalogEntry catalog_lookup(const std::string& name);

/// Curated commutator-invariant generating sets with the valuation
/// lifting property for the irreducible catalog groups ("G21", "G27",
/// "G54").  The polynomials are fixed eigenvector bases whose induced
/// generator sets present the total coordinate ring; characters are
/// computed against the given group, which must match the name.
std::vector<GradedGenerator> catalog_cox_basis(const FiniteMatrixGroup& g,
                                               const std::string& name);

}  // namespace wb

#endif
