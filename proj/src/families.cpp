#include "snc/families.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace snc {

namespace {

std::string set_name(const std::vector<std::string>& comps, const std::vector<int>& set) {
  if (set.size() == 1) return comps[static_cast<size_t>(set[0])];
  std::string s;
  for (size_t i = 0; i < set.size(); ++i) {
    if (i) s += "&";
    s += comps[static_cast<size_t>(set[i])];
  }
  return s;
}

}  // namespace

SNCModel simplicial_model_from_sets(std::vector<std::string> components,
                                    const std::set<std::vector<int>>& sets, int ambient_dim,
                                    bool rational, bool hypersurface) {
  SNCModel m;
  m.components = std::move(components);
  m.ambient_dim = ambient_dim;
  m.declared_rational = rational;
  m.declared_hypersurface = hypersurface;
  for (const auto& set : sets) {
    Stratum s;
    s.indices = set;
    Piece p;
    p.name = set_name(m.components, set);
    if (set.size() > 1) {
      for (int dropped : set) {
        std::vector<int> parent;
        for (int j : set)
          if (j != dropped) parent.push_back(j);
        p.faces[m.components[static_cast<size_t>(dropped)]] = set_name(m.components, parent);
      }
    }
    s.pieces.push_back(std::move(p));
    m.strata.push_back(std::move(s));
  }
  std::sort(m.strata.begin(), m.strata.end(), [](const Stratum& a, const Stratum& b) {
    if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
    return a.indices < b.indices;
  });
  return m;
}

namespace {

void add_with_subsets(std::set<std::vector<int>>& sets, std::vector<int> s) {
  std::sort(s.begin(), s.end());
  if (!sets.insert(s).second) return;
  if (s.size() == 1) return;
  for (size_t j = 0; j < s.size(); ++j) {
    std::vector<int> f = s;
    f.erase(f.begin() + static_cast<long>(j));
    add_with_subsets(sets, std::move(f));
  }
}

}  // namespace

SNCModel gordon_family(int n) {
  if (n < 2) throw std::invalid_argument("gordon_family requires n >= 2");
  std::vector<std::string> comps;
  for (int i = 1; i <= n; ++i) comps.push_back("Z" + std::to_string(i));
  std::set<std::vector<int>> sets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (s.size() <= static_cast<size_t>(n - 1)) sets.insert(std::move(s));
  }
  return simplicial_model_from_sets(std::move(comps), sets, n, false, false);
}

SNCModel tree_family(const std::vector<int>& shape) {
  const int n = static_cast<int>(shape.size()) + 1;
  std::vector<std::string> comps;
  for (int i = 0; i < n; ++i) comps.push_back("E" + std::to_string(i));
  std::set<std::vector<int>> sets;
  for (int i = 0; i < n; ++i) sets.insert({i});
  for (size_t i = 0; i < shape.size(); ++i) {
    const int child = static_cast<int>(i) + 1;
    const int parent = shape[i];
    if (parent < 0 || parent >= child)
      throw std::invalid_argument("tree_family: shape is not a rooted tree (node " +
                                  std::to_string(child) + " has parent " +
                                  std::to_string(parent) + ")");
    sets.insert({std::min(parent, child), std::max(parent, child)});
  }
  SNCModel m = simplicial_model_from_sets(std::move(comps), sets, 2, true, false);
  return m;
}

SNCModel cone_family(const DualComplex& base) {
  if (!base.is_simplicial())
    throw std::invalid_argument("cone_family requires a simplicial base");
  std::vector<std::string> comps = base.vertex_labels();
  std::string apex = "apex";
  while (std::find(comps.begin(), comps.end(), apex) != comps.end()) apex += "'";
  const int apex_id = static_cast<int>(comps.size());
  comps.push_back(apex);

  std::set<std::vector<int>> sets;
  sets.insert({apex_id});
  for (const auto& layer : base.cells()) {
    for (const Cell& c : layer) {
      sets.insert(c.vertices);
      std::vector<int> coned = c.vertices;
      coned.push_back(apex_id);
      sets.insert(std::move(coned));
    }
  }
  const int ambient = static_cast<int>(comps.size());
  return simplicial_model_from_sets(std::move(comps), sets, ambient, false, false);
}

SNCModel random_snc_model(int n_components, int max_depth, double density, unsigned seed,
                          bool allow_parallel) {
  if (n_components < 1 || max_depth < 1 || density < 0.0 || density > 1.0)
    throw std::invalid_argument("random_snc_model: parameters out of range");
  std::mt19937_64 rng(seed);
  auto coin = [&](double p) {
    // Fixed-width draw so the stream is identical across platforms.
    return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
  };

  std::set<std::vector<int>> sets;
  for (int i = 0; i < n_components; ++i) sets.insert({i});
  // A path through the components keeps the complex connected.
  for (int i = 0; i + 1 < n_components; ++i) sets.insert({i, i + 1});
  for (int i = 0; i < n_components; ++i)
    for (int j = i + 2; j < n_components; ++j)
      if (coin(density)) sets.insert({i, j});
  for (int size = 3; size <= std::min(max_depth + 1, n_components); ++size) {
    // Candidates are downward-closed: all facets must already be present.
    std::vector<std::vector<int>> candidates;
    for (const auto& s : sets) {
      if (s.size() != static_cast<size_t>(size - 1)) continue;
      for (int extra = s.back() + 1; extra < n_components; ++extra) {
        std::vector<int> cand = s;
        cand.push_back(extra);
        bool closed = true;
        for (size_t j = 0; j < cand.size() && closed; ++j) {
          std::vector<int> facet = cand;
          facet.erase(facet.begin() + static_cast<long>(j));
          if (!sets.count(facet)) closed = false;
        }
        if (closed) candidates.push_back(std::move(cand));
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& cand : candidates)
      if (coin(density)) sets.insert(cand);
  }

  std::vector<std::string> comps;
  for (int i = 1; i <= n_components; ++i) comps.push_back("Z" + std::to_string(i));
  const int ambient = std::max(2, max_depth + 1);
  SNCModel m = simplicial_model_from_sets(std::move(comps), sets, ambient, false, false);

  if (allow_parallel) {
    // Duplicate some maximal pair strata: two components may also meet in a
    // second, disjoint center. Links of the copy are forced as well.
    for (Stratum& s : m.strata) {
      if (s.indices.size() != 2) continue;
      bool maximal = true;
      for (const auto& other : sets)
        if (other.size() > 2 &&
            std::includes(other.begin(), other.end(), s.indices.begin(), s.indices.end()))
          maximal = false;
      if (!maximal || !coin(0.5)) continue;
      Piece copy = s.pieces[0];
      copy.name += "'";
      s.pieces.push_back(std::move(copy));
    }
  }
  return m;
}

std::vector<NamedModel> bundled_cdv_models() {
  std::vector<NamedModel> out;
  {
    // Ordinary double point: one exceptional component, dual complex a
    // single vertex.
    std::set<std::vector<int>> sets{{0}};
    out.push_back({"cdv_odp",
                   simplicial_model_from_sets({"E"}, sets, 3, true, true)});
  }
  {
    // Two components meeting in one curve; dual complex an edge.
    std::set<std::vector<int>> sets;
    add_with_subsets(sets, {0, 1});
    out.push_back({"cdv_two_component",
                   simplicial_model_from_sets({"E1", "E2"}, sets, 3, true, true)});
  }
  {
    // Three components pairwise meeting, with a triple point; dual complex
    // a full 2-simplex.
    std::set<std::vector<int>> sets;
    add_with_subsets(sets, {0, 1, 2});
    out.push_back({"cdv_triangle",
                   simplicial_model_from_sets({"E1", "E2", "E3"}, sets, 3, true, true)});
  }
  return out;
}

SNCModel s2_counterexample_model() {
  // Four components, all intersections up to triples: the dual complex is
  // the boundary of the 3-simplex, a 2-sphere, inside ambient dimension 3.
  std::set<std::vector<int>> sets;
  for (unsigned mask = 1; mask < 16u; ++mask) {
    std::vector<int> s;
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (s.size() <= 3) sets.insert(std::move(s));
  }
  return simplicial_model_from_sets({"Z1", "Z2", "Z3", "Z4"}, sets, 3, true, false);
}

}  // namespace snc
