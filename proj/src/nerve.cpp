#include "snc/nerve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "snc/families.hpp"

namespace snc {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

/// Flat enumeration of the cells of a complex (dimension ascending, id
/// ascending); this is exactly the vertex order of its barycentric
/// subdivision.
std::vector<CellRef> cell_enumeration(const DualComplex& cx) {
  std::vector<CellRef> out;
  for (size_t d = 0; d < cx.cells().size(); ++d)
    for (size_t i = 0; i < cx.cells()[d].size(); ++i)
      out.push_back({static_cast<int>(d), static_cast<int>(i)});
  return out;
}

struct Triangulation {
  DualComplex cx;
  std::vector<std::set<int>> membership;  // vertex ids per component
};

/// Subdivide, carrying the component subcomplexes along: a new vertex (a
/// cell of the old complex) belongs to a component iff all its old
/// vertices did.
Triangulation subdivide(const Triangulation& t) {
  Triangulation out;
  out.cx = t.cx.barycentric_subdivision();
  out.membership.resize(t.membership.size());
  std::vector<CellRef> cells = cell_enumeration(t.cx);
  for (size_t vid = 0; vid < cells.size(); ++vid) {
    const Cell& c = t.cx.cell(cells[vid]);
    for (size_t i = 0; i < t.membership.size(); ++i) {
      bool inside = true;
      for (int v : c.vertices)
        if (!t.membership[i].count(v)) { inside = false; break; }
      if (inside) out.membership[i].insert(static_cast<int>(vid));
    }
  }
  return out;
}

/// Maximal index set of components containing the cell; empty means the
/// cover does not actually cover this simplex.
std::vector<int> depth_set(const Triangulation& t, const Cell& c) {
  std::vector<int> out;
  for (size_t i = 0; i < t.membership.size(); ++i) {
    bool inside = true;
    for (int v : c.vertices)
      if (!t.membership[i].count(v)) { inside = false; break; }
    if (inside) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::set<std::vector<int>> derive_strata(const Triangulation& t) {
  std::set<std::vector<int>> sets;
  const size_t nv = t.cx.cells()[0].size();
  for (size_t v = 0; v < nv; ++v) {
    std::vector<int> dv;
    for (size_t i = 0; i < t.membership.size(); ++i)
      if (t.membership[i].count(static_cast<int>(v))) dv.push_back(static_cast<int>(i));
    const size_t k = dv.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> s;
      for (size_t j = 0; j < k; ++j)
        if (mask & (1u << j)) s.push_back(dv[j]);
      sets.insert(std::move(s));
    }
  }
  return sets;
}

/// Every intersection of components must be a connected (irreducible)
/// subcomplex; a disconnected one would need two pieces over one index set.
void check_irreducible(const Triangulation& t) {
  for (const std::vector<int>& s : derive_strata(t)) {
    std::set<int> verts = t.membership[static_cast<size_t>(s[0])];
    for (size_t i = 1; i < s.size(); ++i) {
      std::set<int> next;
      for (int v : verts)
        if (t.membership[static_cast<size_t>(s[i])].count(v)) next.insert(v);
      verts = std::move(next);
    }
    if (verts.empty()) continue;
    std::map<int, int> parent;
    for (int v : verts) parent[v] = v;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    if (t.cx.cells().size() > 1) {
      for (const Cell& e : t.cx.cells()[1]) {
        if (verts.count(e.vertices[0]) && verts.count(e.vertices[1])) {
          int a = find(e.vertices[0]), b = find(e.vertices[1]);
          if (a != b) parent[a] = b;
        }
      }
    }
    std::set<int> roots;
    for (int v : verts) roots.insert(find(v));
    if (roots.size() > 1) {
      std::string names;
      for (size_t i = 0; i < s.size(); ++i) names += (i ? "," : "") + std::to_string(s[i] + 1);
      throw NerveError("intersection of components {" + names + "} has " +
                       std::to_string(roots.size()) +
                       " connected pieces; irreducible intersections are required");
    }
  }
}

Triangulation as_triangulation(const TriangulatedCover& cover) {
  Triangulation t;
  t.cx = DualComplex::from_simplices(cover.vertices, cover.simplices);
  for (const auto& mem : cover.membership)
    t.membership.emplace_back(mem.begin(), mem.end());
  return t;
}

void validate_cover(const TriangulatedCover& cover, const Triangulation& t) {
  if (!is_simplicial_case(cover.model))
    throw NerveError("cover requires irreducible intersections (one piece per index set)");
  for (const auto& layer : t.cx.cells()) {
    for (const Cell& c : layer) {
      if (depth_set(t, c).empty())
        throw NerveError("simplex " + c.name + " is not contained in any component");
    }
  }
  check_irreducible(t);
  std::set<std::vector<int>> derived = derive_strata(t);
  std::set<std::vector<int>> declared;
  for (const Stratum& s : cover.model.strata) declared.insert(s.indices);
  if (derived != declared)
    throw NerveError("nerve of the cover does not match the strata of the model");
}

}  // namespace

TriangulatedCover make_cover(std::vector<std::string> vertices,
                             std::vector<std::vector<int>> simplices,
                             std::vector<std::string> components,
                             std::vector<std::vector<int>> membership) {
  TriangulatedCover cover;
  cover.vertices = std::move(vertices);
  cover.simplices = std::move(simplices);
  cover.membership = std::move(membership);
  for (auto& mem : cover.membership) std::sort(mem.begin(), mem.end());
  Triangulation t = as_triangulation(cover);
  check_irreducible(t);
  std::set<std::vector<int>> sets = derive_strata(t);
  size_t max_size = 1;
  for (const auto& s : sets) max_size = std::max(max_size, s.size());
  cover.model = simplicial_model_from_sets(std::move(components), sets,
                                           static_cast<int>(max_size) + 1, false, false);
  return cover;
}

TriangulatedCover load_cover(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw NerveError(std::string("cover document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("triangulation") || !doc.contains("membership"))
    throw NerveError("cover document needs triangulation and membership");

  TriangulatedCover cover;
  const json& tri = doc["triangulation"];
  if (!tri.is_object() || !tri.contains("vertices") || !tri.contains("simplices"))
    throw NerveError("triangulation needs vertices and simplices");
  for (const auto& v : tri["vertices"]) {
    if (!v.is_string()) throw NerveError("triangulation vertices must be strings");
    cover.vertices.push_back(v.get<std::string>());
  }
  auto vertex_id = [&](const std::string& name) {
    auto it = std::find(cover.vertices.begin(), cover.vertices.end(), name);
    if (it == cover.vertices.end()) throw NerveError("unknown triangulation vertex " + name);
    return static_cast<int>(it - cover.vertices.begin());
  };
  for (const auto& sj : tri["simplices"]) {
    std::vector<int> s;
    for (const auto& v : sj) s.push_back(vertex_id(v.get<std::string>()));
    cover.simplices.push_back(std::move(s));
  }

  if (!doc.contains("components") || !doc["components"].is_array())
    throw NerveError("cover document needs a components array");
  std::vector<std::string> components;
  for (const auto& c : doc["components"]) components.push_back(c.get<std::string>());

  const json& mem = doc["membership"];
  if (!mem.is_object()) throw NerveError("membership must be an object");
  cover.membership.resize(components.size());
  for (auto it = mem.begin(); it != mem.end(); ++it) {
    auto cit = std::find(components.begin(), components.end(), it.key());
    if (cit == components.end())
      throw NerveError("membership names unknown component " + it.key());
    std::vector<int>& m = cover.membership[static_cast<size_t>(cit - components.begin())];
    for (const auto& v : it.value()) m.push_back(vertex_id(v.get<std::string>()));
    std::sort(m.begin(), m.end());
  }

  if (doc.contains("strata")) {
    json model_doc = doc;
    model_doc.erase("triangulation");
    model_doc.erase("membership");
    cover.model = load_model(model_doc.dump());
    Triangulation t = as_triangulation(cover);
    validate_cover(cover, t);
  } else {
    TriangulatedCover derived = make_cover(cover.vertices, cover.simplices,
                                           std::move(components), cover.membership);
    if (doc.contains("ambient_dim")) derived.model.ambient_dim = doc["ambient_dim"].get<int>();
    cover = std::move(derived);
  }
  return cover;
}

std::string serialize_cover(const TriangulatedCover& cover) {
  ordered_json doc = ordered_json::parse(serialize(cover.model));
  ordered_json tri;
  tri["vertices"] = cover.vertices;
  ordered_json simplices = ordered_json::array();
  for (const auto& s : cover.simplices) {
    std::vector<std::string> names;
    for (int v : s) names.push_back(cover.vertices[static_cast<size_t>(v)]);
    simplices.push_back(names);
  }
  tri["simplices"] = std::move(simplices);
  doc["triangulation"] = std::move(tri);
  ordered_json mem;
  for (size_t i = 0; i < cover.membership.size(); ++i) {
    std::vector<std::string> names;
    for (int v : cover.membership[i]) names.push_back(cover.vertices[static_cast<size_t>(v)]);
    mem[cover.model.components[i]] = names;
  }
  doc["membership"] = std::move(mem);
  return doc.dump(2) + "\n";
}

NerveMap build_nerve_map(const TriangulatedCover& cover) {
  Triangulation base = as_triangulation(cover);
  validate_cover(cover, base);

  DualComplex gamma = build_dual_complex(cover.model);
  DualComplex sd_gamma = gamma.barycentric_subdivision();
  std::vector<CellRef> gamma_cells = cell_enumeration(gamma);
  // Target vertex id for an index set = position of the Gamma-cell with
  // that vertex set in the enumeration.
  std::map<std::vector<int>, int> target_vid;
  for (size_t vid = 0; vid < gamma_cells.size(); ++vid)
    target_vid[gamma.cell(gamma_cells[vid]).vertices] = static_cast<int>(vid);
  // Target cells by vertex set, for the extension test.
  std::set<std::vector<int>> target_cells;
  for (const auto& layer : sd_gamma.cells())
    for (const Cell& c : layer) target_cells.insert(c.vertices);

  Triangulation cur = base;
  std::string failure;
  for (int attempt = 1; attempt <= 2; ++attempt) {
    NerveMap map;
    map.subdivisions = attempt;
    map.target = sd_gamma;
    map.domain = cur.cx.barycentric_subdivision();
    std::vector<CellRef> cur_cells = cell_enumeration(cur.cx);
    map.vertex_image.resize(cur_cells.size());
    for (size_t vid = 0; vid < cur_cells.size(); ++vid) {
      std::vector<int> d = depth_set(cur, cur.cx.cell(cur_cells[vid]));
      auto it = target_vid.find(d);
      if (it == target_vid.end())
        throw NerveError("depth set of " + cur.cx.cell(cur_cells[vid]).name +
                         " is not a stratum of the model");
      map.vertex_image[vid] = it->second;
    }
    // Simplicial extension: the image vertex set of every domain simplex
    // must span a simplex of the target.
    failure.clear();
    for (const auto& layer : map.domain.cells()) {
      for (const Cell& c : layer) {
        std::vector<int> img;
        for (int v : c.vertices) img.push_back(map.vertex_image[static_cast<size_t>(v)]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (!target_cells.count(img)) {
          failure = c.name;
          break;
        }
      }
      if (!failure.empty()) break;
    }
    if (failure.empty()) return map;
    cur = subdivide(cur);
  }
  throw NerveError("simplicial extension failed at simplex " + failure +
                   " even after a second subdivision");
}

bool check_surjective(const NerveMap& map) {
  std::set<std::vector<int>> hit;
  for (const auto& layer : map.domain.cells()) {
    for (const Cell& c : layer) {
      std::vector<int> img;
      for (int v : c.vertices) img.push_back(map.vertex_image[static_cast<size_t>(v)]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      hit.insert(std::move(img));
    }
  }
  for (const auto& layer : map.target.cells())
    for (const Cell& c : layer)
      if (!hit.count(c.vertices)) return false;
  return true;
}

int fiber_components(const NerveMap& map, CellRef target_cell,
                     const std::vector<Rational>& coords) {
  const Cell& tc = map.target.cell(target_cell);
  if (coords.size() != tc.vertices.size())
    throw std::invalid_argument("one barycentric coordinate per target vertex expected");
  Rational sum = 0;
  for (const Rational& c : coords) {
    if (c < 0) throw std::invalid_argument("barycentric coordinates must be nonnegative");
    sum += c;
  }
  if (sum != 1) throw std::invalid_argument("barycentric coordinates must sum to 1");

  std::set<int> support;
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] > 0) support.insert(tc.vertices[i]);

  // The preimage meets a closed domain simplex in a convex (hence
  // connected) slice, nonempty exactly when every supported target vertex
  // is the image of one of its vertices. Slices of adjacent simplices meet
  // in the slice of the common face, so components of the fiber are the
  // components of the face-adjacency graph over the nonempty slices.
  const auto& layers = map.domain.cells();
  std::vector<std::vector<char>> node(layers.size());
  std::vector<std::vector<int>> flat_id(layers.size());
  int total = 0;
  for (size_t d = 0; d < layers.size(); ++d) {
    node[d].assign(layers[d].size(), 0);
    flat_id[d].assign(layers[d].size(), -1);
    for (size_t i = 0; i < layers[d].size(); ++i) {
      std::set<int> img;
      for (int v : layers[d][i].vertices) img.insert(map.vertex_image[static_cast<size_t>(v)]);
      bool ok = std::includes(img.begin(), img.end(), support.begin(), support.end());
      node[d][i] = ok ? 1 : 0;
      if (ok) flat_id[d][i] = total++;
    }
  }
  if (total == 0) return 0;

  std::vector<int> parent(static_cast<size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (size_t d = 1; d < layers.size(); ++d) {
    for (size_t i = 0; i < layers[d].size(); ++i) {
      if (!node[d][i]) continue;
      for (int f : layers[d][i].faces) {
        if (!node[d - 1][static_cast<size_t>(f)]) continue;
        int a = find(flat_id[d][i]), b = find(flat_id[d - 1][static_cast<size_t>(f)]);
        if (a != b) parent[static_cast<size_t>(a)] = b;
      }
    }
  }
  std::set<int> roots;
  for (int x = 0; x < total; ++x) roots.insert(find(x));
  return static_cast<int>(roots.size());
}

TriangulatedCover path_cover() {
  return make_cover({"a", "b", "c"}, {{0, 1}, {1, 2}}, {"Z1", "Z2"}, {{0, 1}, {1, 2}});
}

TriangulatedCover cycle_cover() {
  // Three arcs around a hexagon, consecutive ones meeting in one point.
  return make_cover({"p1", "p2", "p3", "p4", "p5", "p6"},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}},
                    {"Z1", "Z2", "Z3"}, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
}

TriangulatedCover random_cover(unsigned seed) {
  // A chain (or cycle) of arcs: consecutive components overlap in a single
  // shared vertex or along one shared edge, every component has at least
  // one exclusive vertex. These are exactly the 1-dimensional covers with
  // irreducible intersections and vertex depth sets of size <= 2.
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  const bool cycle = pick(0, 1) == 1;
  const int n_comp = cycle ? pick(3, 5) : pick(2, 5);

  std::vector<std::string> vertices;
  std::vector<std::vector<int>> edges;
  std::vector<std::vector<int>> membership(static_cast<size_t>(n_comp));
  auto add_vertex = [&]() {
    vertices.push_back("v" + std::to_string(vertices.size()));
    return static_cast<int>(vertices.size()) - 1;
  };
  auto add_block = [&](int count, int comp_a, int comp_b) {
    std::vector<int> block;
    for (int k = 0; k < count; ++k) {
      int v = add_vertex();
      block.push_back(v);
      membership[static_cast<size_t>(comp_a)].push_back(v);
      if (comp_b >= 0) membership[static_cast<size_t>(comp_b)].push_back(v);
    }
    return block;
  };

  int prev = -1;
  int first = -1;
  auto chain = [&](const std::vector<int>& block) {
    for (int v : block) {
      if (prev >= 0) edges.push_back({prev, v});
      if (first < 0) first = v;
      prev = v;
    }
  };

  for (int i = 0; i < n_comp; ++i) {
    // Exclusive interior of component i, then the block it shares with the
    // next component (one vertex or one edge).
    chain(add_block(pick(1, 3), i, -1));
    const bool last = (i == n_comp - 1);
    if (!last)
      chain(add_block(pick(1, 2), i, i + 1));
    else if (cycle) {
      std::vector<int> shared = add_block(pick(1, 2), i, 0);
      chain(shared);
      edges.push_back({prev, first});
    }
  }

  std::vector<std::string> comps;
  for (size_t i = 0; i < membership.size(); ++i) comps.push_back("Z" + std::to_string(i + 1));
  for (auto& mem : membership) std::sort(mem.begin(), mem.end());
  return make_cover(std::move(vertices), std::move(edges), std::move(comps),
                    std::move(membership));
}

}  // namespace snc
