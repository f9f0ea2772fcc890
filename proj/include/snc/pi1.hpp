// Edge-path group of the 2-skeleton, Tietze simplification, discrete
// collapses, and the simple-connectivity / contractibility verdicts.

#ifndef SNC_PI1_HPP
#define SNC_PI1_HPP

#include <string>
#include <vector>

#include "snc/dual_complex.hpp"
#include "snc/homology.hpp"

namespace snc {

/// A finite presentation. Words are sequences of nonzero signed generator
/// references: +(i+1) for generator i, -(i+1) for its inverse.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;
  std::vector<std::string> history;  // Tietze moves applied, in order

  bool empty() const { return generators.empty() && relators.empty(); }
  size_t total_relator_length() const;
};

/// Spanning tree is BFS from the lexicographically least vertex label;
/// generators are the non-tree edges, relators the 2-cell boundary words.
/// Throws std::runtime_error on a disconnected complex (message carries
/// the component count).
GroupPresentation edge_path_presentation(const DualComplex& dual);

/// Free/cyclic reduction, generator elimination through short or
/// single-occurrence relators, and length-reducing relator substitution,
/// up to move_budget moves. The isomorphism class of the presented group
/// never changes.
GroupPresentation tietze_simplify(GroupPresentation pres, int move_budget);

/// Rank and torsion of the abelianization, from the exponent-sum matrix.
HomologyGroup abelianization(const GroupPresentation& pres);

enum class Pi1Verdict { yes, no, unknown };

/// "no" and "yes" are proofs (abelianization obstruction / empty
/// presentation); "unknown" is honest failure within the budget.
Pi1Verdict simple_connectivity_verdict(const DualComplex& dual, int move_budget);

struct CollapseStep {
  std::string free_face;
  std::string coface;
};

struct CollapseResult {
  DualComplex reduced;
  std::vector<CollapseStep> certificate;
  bool collapsed_to_point = false;
};

/// Repeatedly remove free faces (lowest dimension first, lexicographic
/// among ties). The certificate replays the elementary collapses.
CollapseResult greedy_collapse(const DualComplex& dual);

enum class ContractibilityVerdict { point, not_point, unknown };

/// For complexes of dimension <= 2 only (throws otherwise): simply
/// connected with trivial H_2 certifies the homotopy type of a point.
ContractibilityVerdict contractibility_verdict_dim2(const DualComplex& dual, int move_budget);

std::string to_string(Pi1Verdict v);
std::string to_string(ContractibilityVerdict v);

}  // namespace snc

#endif  // SNC_PI1_HPP
