// The simplicial map psi from a triangulated covered space onto the
// barycentric subdivision of the nerve of its cover: construction,
// surjectivity check, and exact fiber component counts.

#ifndef SNC_NERVE_HPP
#define SNC_NERVE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "snc/dual_complex.hpp"
#include "snc/matrix.hpp"
#include "snc/model.hpp"

namespace snc {

class NerveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite simplicial model T of the divisor Z together with, per
/// component, the vertex subset spanning it (as a full subcomplex). The
/// associated SNCModel is derived from the membership data unless the
/// document carried explicit strata, in which case they must agree.
struct TriangulatedCover {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> simplices;   // maximal is enough; closure is taken
  std::vector<std::vector<int>> membership;  // sorted vertex ids, one list per component
  SNCModel model;
};

/// Build a cover from in-memory data, deriving the model from membership.
TriangulatedCover make_cover(std::vector<std::string> vertices,
                             std::vector<std::vector<int>> simplices,
                             std::vector<std::string> components,
                             std::vector<std::vector<int>> membership);

/// Parse a cover document: a model document extended with "triangulation"
/// and "membership" objects. Throws NerveError / ModelError.
TriangulatedCover load_cover(const std::string& json_text);

std::string serialize_cover(const TriangulatedCover& cover);

/// The simplicial map: domain is the barycentric subdivision of T (twice,
/// if the simplicial-extension test failed once), target the barycentric
/// subdivision of the dual complex.
struct NerveMap {
  DualComplex domain;
  DualComplex target;
  std::vector<int> vertex_image;  // domain vertex id -> target vertex id
  int subdivisions = 1;
};

/// Each domain vertex goes to the barycenter of the simplex recording its
/// deepest stratum. Throws NerveError when the simplicial extension fails
/// (after retrying on a finer subdivision), naming the offending simplex.
NerveMap build_nerve_map(const TriangulatedCover& cover);

/// True iff every cell of the target (in particular every vertex) is the
/// image of some domain cell.
bool check_surjective(const NerveMap& map);

/// Number of connected components of the preimage of the point of the
/// given target cell with the given rational barycentric coordinates.
/// Throws std::invalid_argument when the coordinates do not sum to 1.
int fiber_components(const NerveMap& map, CellRef target_cell,
                     const std::vector<Rational>& coords);

// Fixture covers used across the test and acceptance suites.
TriangulatedCover path_cover();
TriangulatedCover cycle_cover();
/// Seed-deterministic valid cover (path / cycle / star of arcs).
TriangulatedCover random_cover(unsigned seed);

}  // namespace snc

#endif  // SNC_NERVE_HPP
