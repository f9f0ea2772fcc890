// Exact integral (co)homology of Delta-complexes, and the combinatoric
// delta-cochain complex carried by the pieces of an SNC model.

#ifndef SNC_HOMOLOGY_HPP
#define SNC_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "snc/dual_complex.hpp"
#include "snc/matrix.hpp"
#include "snc/model.hpp"
#include "snc/smith.hpp"

namespace snc {

/// Boundary matrices over the integers; columns are k-cells, rows are
/// (k-1)-cells, entries are alternating signs from the ordered vertex
/// tuples. boundary[k] is the matrix of d_k for 1 <= k <= dim.
struct ChainComplex {
  std::vector<IntMatrix> boundary;  // boundary[0] unused (0 x n0 by convention)
  std::vector<int> cell_counts;

  int dim() const { return static_cast<int>(cell_counts.size()) - 1; }
};

/// The differentials of the combinatoric complex on pieces: delta_p maps
/// p-cochains to (p+1)-cochains with sign (-1)^j on dropping the j-th
/// index.
struct CochainComplexDelta {
  std::vector<IntMatrix> delta;  // delta[p]: rows (p+1)-cells, cols p-cells
  std::vector<int> cell_counts;

  int dim() const { return static_cast<int>(cell_counts.size()) - 1; }
};

struct HomologyGroup {
  int rank = 0;
  std::vector<BigInt> torsion;  // each > 1, divisibility-sorted
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

ChainComplex chain_complex(const DualComplex& dual);

/// H_k of the complex; throws std::out_of_range for k outside [0, dim].
HomologyGroup homology(const ChainComplex& chain, int k);

/// All homology groups H_0 .. H_dim.
std::vector<HomologyGroup> all_homology(const ChainComplex& chain);

CochainComplexDelta cochain_complex_delta(const DualComplex& dual);

/// rank H^p of the delta-cochain complex, over the rationals.
int delta_cohomology_rank(const CochainComplexDelta& cochain, int p);

enum class VanishingVerdict { consistent, violates, not_applicable };

struct VanishingResult {
  VanishingVerdict verdict;
  int top_rank = 0;  // rank H^{n-1}(Gamma, Q)
};

/// Necessary-condition check on models declared rational: the top rational
/// cohomology of the dual complex must vanish. The model must declare
/// ambient_dim.
VanishingResult verify_rational_vanishing(const SNCModel& model);

std::string to_string(VanishingVerdict v);

}  // namespace snc

#endif  // SNC_HOMOLOGY_HPP
