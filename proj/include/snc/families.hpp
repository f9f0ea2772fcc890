// Deterministic model generators: the classical example families plus a
// seeded random model source for property suites.

#ifndef SNC_FAMILIES_HPP
#define SNC_FAMILIES_HPP

#include <set>
#include <string>
#include <vector>

#include "snc/dual_complex.hpp"
#include "snc/model.hpp"

namespace snc {

/// Assemble a simplicial-case model from a downward-closed family of index
/// sets; face links are forced since every set carries exactly one piece.
SNCModel simplicial_model_from_sets(std::vector<std::string> components,
                                    const std::set<std::vector<int>>& sets, int ambient_dim,
                                    bool rational, bool hypersurface);

/// n hyperplanes in general position: every index set of size <= n-1
/// carries one piece, the full set none. The dual complex is the boundary
/// of the standard (n-1)-simplex. Requires n >= 2.
SNCModel gordon_family(int n);

/// A rooted tree of rational curves on a surface. shape[i] is the parent
/// of node i+1 (node 0 is the root); throws on cycles / bad indices.
SNCModel tree_family(const std::vector<int>& shape);

/// A model whose dual complex is the cone over the given simplicial base;
/// always collapsible to a point.
SNCModel cone_family(const DualComplex& base);

/// Seeded generator of valid simplicial models: a downward-closed random
/// family of index sets with forced face links. Identical output for
/// identical parameters. Consecutive components are always linked, so the
/// dual complex is connected. With allow_parallel, maximal pair strata may
/// receive a second piece (two components meeting in two disjoint centers),
/// so the dual complex becomes a genuine Delta-complex.
SNCModel random_snc_model(int n_components, int max_depth, double density, unsigned seed,
                          bool allow_parallel = false);

struct NamedModel {
  std::string name;
  SNCModel model;
};

/// Curated resolution models of compound Du Val points; every one of them
/// is declared rational and hypersurface and certifies contractible.
std::vector<NamedModel> bundled_cdv_models();

/// The curated counterexample: ambient dimension 3 with dual complex the
/// 2-sphere, declared rational. The vanishing checker must reject it.
SNCModel s2_counterexample_model();

}  // namespace snc

#endif  // SNC_FAMILIES_HPP
