// The dual complex of an SNC model, as a Delta-complex: cells carry ordered
// vertex tuples and explicit face attachments, so parallel cells over the
// same vertex set (reducible intersections) are representable. Values are
// immutable; subdivisions return new complexes.

#ifndef SNC_DUAL_COMPLEX_HPP
#define SNC_DUAL_COMPLEX_HPP

#include <string>
#include <utility>
#include <vector>

#include "snc/model.hpp"

namespace snc {

struct Cell {
  std::vector<int> vertices;  // ascending vertex ids, k+1 of them
  std::string name;           // unique within the complex
  std::vector<int> faces;     // ids in dimension k-1; faces[j] drops vertices[j]
};

struct CellRef {
  int dim = -1;
  int id = -1;
  bool valid() const { return dim >= 0; }
  friend bool operator==(const CellRef&, const CellRef&) = default;
  friend bool operator<(const CellRef& a, const CellRef& b) {
    return std::pair(a.dim, a.id) < std::pair(b.dim, b.id);
  }
};

class DualComplex {
 public:
  DualComplex() = default;

  /// Build a simplicial complex from vertex labels and a family of
  /// simplices (vertex id lists); the downward closure is taken and cells
  /// are named canonically from their labels.
  static DualComplex from_simplices(std::vector<std::string> vertex_labels,
                                    const std::vector<std::vector<int>>& simplices);

  /// Assemble a Delta-complex from raw cell layers (used when carving
  /// subcomplexes out of an existing complex). Face references must be
  /// consistent; checked by assertion only.
  static DualComplex from_cells(std::vector<std::string> vertex_labels,
                                std::vector<std::vector<Cell>> cells);

  int dim() const { return static_cast<int>(cells_.size()) - 1; }
  bool empty() const { return cells_.empty(); }
  const std::vector<std::vector<Cell>>& cells() const { return cells_; }
  const Cell& cell(CellRef r) const { return cells_[static_cast<size_t>(r.dim)][static_cast<size_t>(r.id)]; }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }

  std::vector<int> f_vector() const;
  long long euler_characteristic() const;

  /// Every cell determined by its vertex set (and no parallel cells).
  bool is_simplicial() const;
  int connected_components() const;

  /// Lookup by cell name; CellRef.dim == -1 when absent.
  CellRef find_cell(const std::string& name) const;
  /// Lookup a simplicial cell by its sorted vertex label list.
  CellRef find_cell_by_labels(const std::vector<std::string>& labels) const;

  DualComplex barycentric_subdivision() const;

  /// Stellar subdivision at the named cell. Requires a simplicial complex
  /// (barycentric_subdivision first otherwise); throws std::invalid_argument
  /// on an unknown cell name.
  DualComplex star_subdivision(const std::string& cell_name) const;
  DualComplex star_subdivision(CellRef cell) const;

  /// All cells as vertex id sets (simplicial complexes only).
  std::vector<std::vector<int>> simplices() const;

  /// Combinatorics-only document (vertices, cells with faces), the format
  /// the CLI uses to pipe complexes between commands.
  std::string serialize() const;

 private:
  std::vector<std::vector<Cell>> cells_;  // cells_[k] = k-cells
  std::vector<std::string> vertex_labels_;

  friend DualComplex build_dual_complex(const SNCModel& model);
};

/// One k-cell per depth-k piece, faces following the model's face_links;
/// the model must be valid.
DualComplex build_dual_complex(const SNCModel& model);

}  // namespace snc

#endif  // SNC_DUAL_COMPLEX_HPP
