#include "snc/dual_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace snc {

namespace {

std::string brace_name(const std::vector<std::string>& labels, const std::vector<int>& vs) {
  std::string s = "{";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += labels[static_cast<size_t>(vs[i])];
  }
  return s + "}";
}

}  // namespace

DualComplex DualComplex::from_simplices(std::vector<std::string> vertex_labels,
                                        const std::vector<std::vector<int>>& simplices) {
  // Downward closure, one set per dimension.
  std::vector<std::set<std::vector<int>>> by_dim;
  auto insert_with_faces = [&](auto&& self, std::vector<int> s) -> void {
    const size_t d = s.size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    if (!by_dim[d].insert(s).second) return;
    if (d == 0) return;
    for (size_t j = 0; j < s.size(); ++j) {
      std::vector<int> f = s;
      f.erase(f.begin() + static_cast<long>(j));
      self(self, std::move(f));
    }
  };
  for (std::vector<int> s : simplices) {
    if (s.empty()) continue;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    insert_with_faces(insert_with_faces, std::move(s));
  }

  DualComplex out;
  out.vertex_labels_ = std::move(vertex_labels);
  // Every vertex of the label list is a cell, even if no input simplex
  // mentioned it.
  if (by_dim.empty()) by_dim.resize(1);
  for (int v = 0; v < static_cast<int>(out.vertex_labels_.size()); ++v)
    by_dim[0].insert({v});

  std::map<std::vector<int>, int> id_of;  // within current dimension
  out.cells_.resize(by_dim.size());
  for (size_t d = 0; d < by_dim.size(); ++d) {
    std::map<std::vector<int>, int> next_ids;
    int id = 0;
    for (const auto& vs : by_dim[d]) {
      Cell c;
      c.vertices = vs;
      c.name = (d == 0) ? out.vertex_labels_[static_cast<size_t>(vs[0])]
                        : brace_name(out.vertex_labels_, vs);
      if (d > 0) {
        for (size_t j = 0; j < vs.size(); ++j) {
          std::vector<int> f = vs;
          f.erase(f.begin() + static_cast<long>(j));
          c.faces.push_back(id_of.at(f));
        }
      }
      next_ids[vs] = id++;
      out.cells_[d].push_back(std::move(c));
    }
    id_of = std::move(next_ids);
  }
  return out;
}

DualComplex DualComplex::from_cells(std::vector<std::string> vertex_labels,
                                    std::vector<std::vector<Cell>> cells) {
  DualComplex out;
  out.vertex_labels_ = std::move(vertex_labels);
  out.cells_ = std::move(cells);
  if (out.cells_.empty()) out.cells_.resize(1);
  return out;
}

std::vector<int> DualComplex::f_vector() const {
  std::vector<int> f;
  for (const auto& layer : cells_) f.push_back(static_cast<int>(layer.size()));
  return f;
}

long long DualComplex::euler_characteristic() const {
  long long chi = 0;
  int sign = 1;
  for (const auto& layer : cells_) {
    chi += sign * static_cast<long long>(layer.size());
    sign = -sign;
  }
  return chi;
}

bool DualComplex::is_simplicial() const {
  for (const auto& layer : cells_) {
    std::set<std::vector<int>> seen;
    for (const Cell& c : layer)
      if (!seen.insert(c.vertices).second) return false;
  }
  return true;
}

int DualComplex::connected_components() const {
  const int n = cells_.empty() ? 0 : static_cast<int>(cells_[0].size());
  if (n == 0) return 0;
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  if (cells_.size() > 1) {
    for (const Cell& e : cells_[1])
      parent[static_cast<size_t>(find(e.vertices[0]))] = find(e.vertices[1]);
  }
  std::set<int> roots;
  for (int v = 0; v < n; ++v) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

CellRef DualComplex::find_cell(const std::string& name) const {
  for (size_t d = 0; d < cells_.size(); ++d)
    for (size_t i = 0; i < cells_[d].size(); ++i)
      if (cells_[d][i].name == name) return {static_cast<int>(d), static_cast<int>(i)};
  return {};
}

CellRef DualComplex::find_cell_by_labels(const std::vector<std::string>& labels) const {
  std::vector<int> vs;
  for (const std::string& l : labels) {
    auto it = std::find(vertex_labels_.begin(), vertex_labels_.end(), l);
    if (it == vertex_labels_.end()) return {};
    vs.push_back(static_cast<int>(it - vertex_labels_.begin()));
  }
  std::sort(vs.begin(), vs.end());
  const size_t d = vs.size() - 1;
  if (vs.empty() || d >= cells_.size()) return {};
  for (size_t i = 0; i < cells_[d].size(); ++i)
    if (cells_[d][i].vertices == vs) return {static_cast<int>(d), static_cast<int>(i)};
  return {};
}

DualComplex DualComplex::barycentric_subdivision() const {
  // Vertices of the subdivision are the cells; simplices are chains of
  // cells under the iterated-face relation. For complexes whose cells have
  // pairwise distinct vertices (always the case here) a chain is uniquely
  // determined by its set of cells, so the result is simplicial.
  std::vector<std::vector<int>> sd_vid(cells_.size());
  std::vector<std::string> labels;
  std::vector<CellRef> cell_of_vid;
  for (size_t d = 0; d < cells_.size(); ++d) {
    sd_vid[d].resize(cells_[d].size());
    for (size_t i = 0; i < cells_[d].size(); ++i) {
      sd_vid[d][i] = static_cast<int>(labels.size());
      labels.push_back(d == 0 ? vertex_labels_[static_cast<size_t>(cells_[0][i].vertices[0])]
                              : "b(" + cells_[d][i].name + ")");
      cell_of_vid.push_back({static_cast<int>(d), static_cast<int>(i)});
    }
  }

  // below[ref] = all iterated faces of the cell.
  std::map<CellRef, std::set<CellRef>> below;
  for (size_t d = 0; d < cells_.size(); ++d) {
    for (size_t i = 0; i < cells_[d].size(); ++i) {
      CellRef r{static_cast<int>(d), static_cast<int>(i)};
      std::set<CellRef>& b = below[r];
      for (int f : cells_[d][i].faces) {
        CellRef fr{static_cast<int>(d) - 1, f};
        b.insert(fr);
        const auto& fb = below[fr];  // already computed (lower dimension)
        b.insert(fb.begin(), fb.end());
      }
    }
  }

  // chains_to[ref] = every chain ending at ref, as sd-vertex id lists.
  std::map<CellRef, std::vector<std::vector<int>>> chains_to;
  std::vector<std::vector<int>> all_chains;
  for (size_t d = 0; d < cells_.size(); ++d) {
    for (size_t i = 0; i < cells_[d].size(); ++i) {
      CellRef r{static_cast<int>(d), static_cast<int>(i)};
      const int vid = sd_vid[d][i];
      std::vector<std::vector<int>> mine;
      mine.push_back({vid});
      for (const CellRef& b : below[r]) {
        for (const std::vector<int>& ch : chains_to[b]) {
          std::vector<int> ext = ch;
          ext.push_back(vid);
          mine.push_back(std::move(ext));
        }
      }
      all_chains.insert(all_chains.end(), mine.begin(), mine.end());
      chains_to[r] = std::move(mine);
    }
  }
  return from_simplices(std::move(labels), all_chains);
}

DualComplex DualComplex::star_subdivision(const std::string& cell_name) const {
  CellRef r = find_cell(cell_name);
  if (!r.valid()) throw std::invalid_argument("unknown cell identifier: " + cell_name);
  return star_subdivision(r);
}

DualComplex DualComplex::star_subdivision(CellRef ref) const {
  if (!is_simplicial())
    throw std::logic_error("star_subdivision requires a simplicial complex");
  if (ref.dim < 0 || static_cast<size_t>(ref.dim) >= cells_.size() || ref.id < 0 ||
      static_cast<size_t>(ref.id) >= cells_[static_cast<size_t>(ref.dim)].size())
    throw std::invalid_argument("unknown cell identifier");
  const Cell& center = cell(ref);
  const std::vector<int>& a = center.vertices;

  std::string apex = "s" + brace_name(vertex_labels_, a);
  while (std::find(vertex_labels_.begin(), vertex_labels_.end(), apex) != vertex_labels_.end())
    apex += "'";
  std::vector<std::string> labels = vertex_labels_;
  const int apex_id = static_cast<int>(labels.size());
  labels.push_back(apex);

  auto contains_a = [&](const std::vector<int>& s) {
    return std::includes(s.begin(), s.end(), a.begin(), a.end());
  };

  std::vector<std::vector<int>> out;
  for (const auto& layer : cells_) {
    for (const Cell& c : layer) {
      if (contains_a(c.vertices)) continue;
      out.push_back(c.vertices);
    }
  }
  // Proper subsets of the center (as bitmask over its vertices).
  std::vector<std::vector<int>> proper_subsets;
  const size_t k = a.size();
  for (unsigned mask = 0; mask + 1 < (1u << k); ++mask) {
    std::vector<int> f;
    for (size_t j = 0; j < k; ++j)
      if (mask & (1u << j)) f.push_back(a[j]);
    proper_subsets.push_back(std::move(f));
  }
  // Cone of the new apex over boundary(center) * link(center).
  for (const auto& layer : cells_) {
    for (const Cell& c : layer) {
      if (!contains_a(c.vertices)) continue;
      std::vector<int> link_part;
      std::set_difference(c.vertices.begin(), c.vertices.end(), a.begin(), a.end(),
                          std::back_inserter(link_part));
      for (const auto& f : proper_subsets) {
        std::vector<int> s{apex_id};
        s.insert(s.end(), f.begin(), f.end());
        s.insert(s.end(), link_part.begin(), link_part.end());
        out.push_back(std::move(s));
      }
    }
  }
  // Subdividing at a vertex replaces it by the apex, so its old label must
  // not survive as a stray 0-cell: keep only labels that still occur.
  std::vector<int> new_id(labels.size(), -1);
  std::vector<std::string> used_labels;
  for (const auto& s : out)
    for (int v : s)
      if (new_id[static_cast<size_t>(v)] < 0) new_id[static_cast<size_t>(v)] = 0;
  for (size_t v = 0; v < labels.size(); ++v) {
    if (new_id[v] < 0) continue;
    new_id[v] = static_cast<int>(used_labels.size());
    used_labels.push_back(labels[v]);
  }
  for (auto& s : out)
    for (int& v : s) v = new_id[static_cast<size_t>(v)];
  return from_simplices(std::move(used_labels), out);
}

std::vector<std::vector<int>> DualComplex::simplices() const {
  std::vector<std::vector<int>> out;
  for (const auto& layer : cells_)
    for (const Cell& c : layer) out.push_back(c.vertices);
  return out;
}

std::string DualComplex::serialize() const {
  nlohmann::ordered_json doc;
  doc["vertices"] = vertex_labels_;
  nlohmann::ordered_json layers = nlohmann::ordered_json::array();
  for (size_t d = 1; d < cells_.size(); ++d) {
    nlohmann::ordered_json layer = nlohmann::ordered_json::array();
    for (const Cell& c : cells_[d]) {
      nlohmann::ordered_json cj;
      cj["name"] = c.name;
      std::vector<std::string> vl;
      for (int v : c.vertices) vl.push_back(vertex_labels_[static_cast<size_t>(v)]);
      cj["vertices"] = vl;
      std::vector<std::string> fl;
      for (int f : c.faces) fl.push_back(cells_[d - 1][static_cast<size_t>(f)].name);
      cj["faces"] = fl;
      layer.push_back(std::move(cj));
    }
    layers.push_back(std::move(layer));
  }
  doc["cells"] = std::move(layers);
  return doc.dump(2) + "\n";
}

DualComplex build_dual_complex(const SNCModel& m) {
  DualComplex out;
  out.vertex_labels_ = m.components;

  // Piece name -> cell ref, filled dimension by dimension.
  std::map<std::string, CellRef> ref_of;
  size_t max_depth = 0;
  for (const Stratum& s : m.strata) max_depth = std::max(max_depth, s.indices.size() - 1);
  out.cells_.resize(max_depth + 1);

  // Vertices first, in component order.
  out.cells_[0].resize(m.components.size());
  for (const Stratum& s : m.strata) {
    if (s.indices.size() != 1) continue;
    const int v = s.indices[0];
    Cell c;
    c.vertices = {v};
    c.name = s.pieces[0].name;
    ref_of[c.name] = {0, v};
    out.cells_[0][static_cast<size_t>(v)] = std::move(c);
  }

  for (size_t depth = 1; depth <= max_depth; ++depth) {
    for (const Stratum& s : m.strata) {
      if (s.indices.size() != depth + 1) continue;
      for (const Piece& p : s.pieces) {
        Cell c;
        c.vertices = s.indices;
        c.name = p.name;
        for (int idx : s.indices) {
          const std::string& comp = m.components[static_cast<size_t>(idx)];
          c.faces.push_back(ref_of.at(p.faces.at(comp)).id);
        }
        ref_of[c.name] = {static_cast<int>(depth), static_cast<int>(out.cells_[depth].size())};
        out.cells_[depth].push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace snc
