// Combinatorial intersection model of a simple-normal-crossings divisor.
//
// A model records the irreducible components Z_1..Z_N, the pieces of every
// nonempty intersection stratum, and for each piece of depth k the k+1
// containing pieces obtained by dropping one index. Models are immutable
// after loading and safe to share across threads.

#ifndef SNC_MODEL_HPP
#define SNC_MODEL_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace snc {

/// Thrown by load_model on documents that cannot be turned into a model at
/// all (schema violations, dangling links, duplicate names).
class ModelError : public std::runtime_error {
 public:
  ModelError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// One irreducible component of an intersection stratum. `faces` maps each
/// dropped component name to the name of the unique containing piece one
/// depth up.
struct Piece {
  std::string name;
  std::map<std::string, std::string> faces;
};

/// All pieces over one index set {i0 < ... < ik}; indices are positions in
/// the component order.
struct Stratum {
  std::vector<int> indices;
  std::vector<Piece> pieces;
};

struct SNCModel {
  int ambient_dim = 0;
  std::vector<std::string> components;  // the canonical sign order
  std::vector<Stratum> strata;          // sorted by (depth, indices)
  bool declared_rational = false;
  bool declared_hypersurface = false;

  int component_index(const std::string& name) const;
  const Stratum* find_stratum(const std::vector<int>& indices) const;
};

/// An invariant violation reported by validate(); data, not a failure.
struct Violation {
  std::string code;    // machine-readable, e.g. "depth-bound"
  std::string detail;  // offending names
};

/// Parse and structurally validate a UTF-8 JSON model document. Missing
/// singleton strata are synthesized (one piece per component, named after
/// the component). Unknown fields are rejected. Throws ModelError.
SNCModel load_model(const std::string& json_text);

/// Canonical serialization; load_model(serialize(m)) round-trips byte for
/// byte on valid models.
std::string serialize(const SNCModel& model);

/// Check the SNCModel invariants; empty means the model is valid.
std::vector<Violation> validate(const SNCModel& model);

/// True iff every index set carries at most one piece, i.e. the dual
/// complex is an honest simplicial complex.
bool is_simplicial_case(const SNCModel& model);

}  // namespace snc

#endif  // SNC_MODEL_HPP
