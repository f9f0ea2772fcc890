#include "snc/pi1.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace snc {

namespace {

std::vector<int> free_reduce(const std::vector<int>& w) {
  std::vector<int> out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

std::vector<int> cyclic_reduce(std::vector<int> w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(w);
  }
  return w;
}

std::vector<int> invert(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

/// Canonical form of a cyclic word up to rotation and inversion, used for
/// duplicate detection.
std::vector<int> cyclic_canon(const std::vector<int>& w) {
  if (w.empty()) return w;
  std::vector<int> best;
  for (const std::vector<int>& base : {w, invert(w)}) {
    for (size_t r = 0; r < base.size(); ++r) {
      std::vector<int> rot(base.begin() + static_cast<long>(r), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(r));
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

void substitute_generator(GroupPresentation& p, int gen, const std::vector<int>& replacement) {
  for (auto& rel : p.relators) {
    std::vector<int> out;
    for (int x : rel) {
      if (x == gen + 1)
        out.insert(out.end(), replacement.begin(), replacement.end());
      else if (x == -(gen + 1)) {
        std::vector<int> inv = invert(replacement);
        out.insert(out.end(), inv.begin(), inv.end());
      } else
        out.push_back(x);
    }
    rel = free_reduce(out);
  }
  // Drop the generator and reindex.
  p.generators.erase(p.generators.begin() + gen);
  for (auto& rel : p.relators)
    for (int& x : rel) {
      if (x > gen + 1) --x;
      else if (x < -(gen + 1)) ++x;
    }
}

}  // namespace

size_t GroupPresentation::total_relator_length() const {
  size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

GroupPresentation edge_path_presentation(const DualComplex& dual) {
  const auto& layers = dual.cells();
  if (layers.empty() || layers[0].empty())
    throw std::runtime_error("edge_path_presentation: empty complex");
  const int comps = dual.connected_components();
  if (comps != 1)
    throw std::runtime_error("edge_path_presentation: disconnected complex (" +
                             std::to_string(comps) + " components)");

  const int nv = static_cast<int>(layers[0].size());
  const auto& labels = dual.vertex_labels();
  int start = 0;
  for (int v = 1; v < nv; ++v)
    if (labels[static_cast<size_t>(v)] < labels[static_cast<size_t>(start)]) start = v;

  const size_t ne = layers.size() > 1 ? layers[1].size() : 0;
  // adjacency: vertex -> (neighbor label, edge name, edge id, neighbor)
  std::vector<std::vector<std::tuple<std::string, std::string, int, int>>> adj(
      static_cast<size_t>(nv));
  for (size_t e = 0; e < ne; ++e) {
    const Cell& ec = layers[1][e];
    int a = ec.vertices[0], b = ec.vertices[1];
    adj[static_cast<size_t>(a)].emplace_back(labels[static_cast<size_t>(b)], ec.name,
                                             static_cast<int>(e), b);
    adj[static_cast<size_t>(b)].emplace_back(labels[static_cast<size_t>(a)], ec.name,
                                             static_cast<int>(e), a);
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());

  std::vector<bool> tree_edge(ne, false), visited(static_cast<size_t>(nv), false);
  std::queue<int> bfs;
  bfs.push(start);
  visited[static_cast<size_t>(start)] = true;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (const auto& [nl, en, eid, w] : adj[static_cast<size_t>(v)]) {
      if (visited[static_cast<size_t>(w)]) continue;
      visited[static_cast<size_t>(w)] = true;
      tree_edge[static_cast<size_t>(eid)] = true;
      bfs.push(w);
    }
  }

  GroupPresentation p;
  std::vector<int> gen_of_edge(ne, 0);  // signed index+1, 0 for tree edges
  for (size_t e = 0; e < ne; ++e) {
    if (tree_edge[e]) continue;
    gen_of_edge[e] = static_cast<int>(p.generators.size()) + 1;
    p.generators.push_back(layers[1][e].name);
  }

  if (layers.size() > 2) {
    for (const Cell& t : layers[2]) {
      // Boundary path v0 -> v1 -> v2 -> v0 through faces f2, f0, f1.
      const int e01 = t.faces[2], e12 = t.faces[0], e02 = t.faces[1];
      std::vector<int> word;
      auto push = [&](int eid, bool forward) {
        int g = gen_of_edge[static_cast<size_t>(eid)];
        if (g != 0) word.push_back(forward ? g : -g);
      };
      push(e01, true);
      push(e12, true);
      push(e02, false);
      p.relators.push_back(cyclic_reduce(word));
    }
  }
  return p;
}

GroupPresentation tietze_simplify(GroupPresentation p, int move_budget) {
  int budget = move_budget;
  auto spend = [&](const std::string& what) {
    p.history.push_back(what);
    return --budget > 0;
  };

  bool progress = true;
  while (progress && budget > 0) {
    progress = false;

    // Cyclic/free reduction and removal of empty or duplicate relators.
    std::set<std::vector<int>> seen;
    for (size_t i = 0; i < p.relators.size();) {
      std::vector<int> red = cyclic_reduce(p.relators[i]);
      if (red != p.relators[i]) {
        p.relators[i] = red;
        progress = true;
        if (!spend("reduce relator " + std::to_string(i))) return p;
      }
      if (p.relators[i].empty()) {
        p.relators.erase(p.relators.begin() + static_cast<long>(i));
        progress = true;
        if (!spend("drop empty relator")) return p;
        continue;
      }
      if (!seen.insert(cyclic_canon(p.relators[i])).second) {
        p.relators.erase(p.relators.begin() + static_cast<long>(i));
        progress = true;
        if (!spend("drop duplicate relator")) return p;
        continue;
      }
      ++i;
    }
    if (progress) continue;

    // Generator elimination: a relator in which some generator occurs
    // exactly once lets us solve for that generator. Shortest such relator
    // first, so short (length 1 and 2) relators are always consumed before
    // anything that could grow the presentation.
    size_t best_rel = p.relators.size();
    int best_gen = -1;
    for (size_t i = 0; i < p.relators.size(); ++i) {
      const auto& r = p.relators[i];
      if (best_rel < p.relators.size() && r.size() >= p.relators[best_rel].size()) continue;
      std::map<int, int> occ;
      for (int x : r) occ[std::abs(x)]++;
      for (const auto& [g, n] : occ) {
        if (n == 1) {
          best_rel = i;
          best_gen = g - 1;
          break;
        }
      }
    }
    if (best_gen >= 0) {
      std::vector<int> r = p.relators[best_rel];
      // Rotate the single occurrence of the generator to the front.
      size_t pos = 0;
      while (std::abs(r[pos]) != best_gen + 1) ++pos;
      std::rotate(r.begin(), r.begin() + static_cast<long>(pos), r.end());
      std::vector<int> tail(r.begin() + 1, r.end());
      // r = g^s * tail = 1, so g = tail^{-1} (s = +1) or g = tail (s = -1).
      std::vector<int> replacement = (r[0] > 0) ? invert(tail) : tail;
      p.relators.erase(p.relators.begin() + static_cast<long>(best_rel));
      substitute_generator(p, best_gen, replacement);
      progress = true;
      if (!spend("eliminate generator via relator of length " +
                 std::to_string(r.size())))
        return p;
      continue;
    }

    // Relator substitution: if more than half of one relator occurs inside
    // another (cyclically, either orientation), rewriting shortens it.
    for (size_t i = 0; i < p.relators.size() && !progress; ++i) {
      const std::vector<int>& ri = p.relators[i];
      if (ri.size() < 2) continue;
      for (size_t j = 0; j < p.relators.size() && !progress; ++j) {
        if (i == j) continue;
        std::vector<int>& rj = p.relators[j];
        if (rj.size() < ri.size()) continue;
        for (const std::vector<int>& base : {ri, invert(ri)}) {
          for (size_t rot = 0; rot < base.size() && !progress; ++rot) {
            std::vector<int> w(base.begin() + static_cast<long>(rot), base.end());
            w.insert(w.end(), base.begin(), base.begin() + static_cast<long>(rot));
            const size_t half = w.size() / 2 + 1;
            for (size_t len = w.size(); len >= half && !progress; --len) {
              std::vector<int> u(w.begin(), w.begin() + static_cast<long>(len));
              auto it = std::search(rj.begin(), rj.end(), u.begin(), u.end());
              if (it == rj.end()) continue;
              std::vector<int> v(w.begin() + static_cast<long>(len), w.end());
              std::vector<int> out(rj.begin(), it);
              std::vector<int> vinv = invert(v);
              out.insert(out.end(), vinv.begin(), vinv.end());
              out.insert(out.end(), it + static_cast<long>(len), rj.end());
              out = free_reduce(out);
              if (out.size() < rj.size()) {
                rj = out;
                progress = true;
                if (!spend("substitute relator " + std::to_string(i) + " into " +
                           std::to_string(j)))
                  return p;
              }
            }
          }
          if (progress) break;
        }
      }
    }
  }
  return p;
}

HomologyGroup abelianization(const GroupPresentation& p) {
  const Eigen::Index g = static_cast<Eigen::Index>(p.generators.size());
  const Eigen::Index r = static_cast<Eigen::Index>(p.relators.size());
  IntMatrix m = IntMatrix::Zero(r, g);
  for (Eigen::Index i = 0; i < r; ++i)
    for (int x : p.relators[static_cast<size_t>(i)])
      m(i, std::abs(x) - 1) += BigInt(x > 0 ? 1 : -1);
  SmithResult snf = smith_normal_form(m);
  HomologyGroup h;
  h.rank = static_cast<int>(g) - snf.rank;
  for (const BigInt& d : snf.diagonal)
    if (d > BigInt(1)) h.torsion.push_back(d);
  return h;
}

Pi1Verdict simple_connectivity_verdict(const DualComplex& dual, int move_budget) {
  // Simple connectivity includes path connectivity.
  if (dual.connected_components() != 1) return Pi1Verdict::no;
  ChainComplex cc = chain_complex(dual);
  if (cc.dim() >= 1) {
    HomologyGroup h1 = homology(cc, 1);
    if (h1.rank > 0 || !h1.torsion.empty()) return Pi1Verdict::no;
  }
  GroupPresentation pres = edge_path_presentation(dual);
  GroupPresentation simp = tietze_simplify(std::move(pres), move_budget);
  if (simp.generators.empty() && simp.relators.empty()) return Pi1Verdict::yes;
  return Pi1Verdict::unknown;
}

CollapseResult greedy_collapse(const DualComplex& dual) {
  const auto& layers = dual.cells();
  std::vector<std::vector<bool>> alive(layers.size());
  std::vector<std::vector<int>> usage(layers.size());  // direct live cofaces
  for (size_t d = 0; d < layers.size(); ++d) {
    alive[d].assign(layers[d].size(), true);
    usage[d].assign(layers[d].size(), 0);
  }
  for (size_t d = 1; d < layers.size(); ++d)
    for (const Cell& c : layers[d])
      for (int f : c.faces) usage[d - 1][static_cast<size_t>(f)]++;

  CollapseResult out;
  for (;;) {
    // A free pair: cell f with exactly one live direct coface c, where c
    // itself is maximal. Lowest dimension first, then lexicographic name.
    int fd = -1, fi = -1;
    for (size_t d = 0; d + 1 < layers.size() && fd < 0; ++d) {
      const std::string* best = nullptr;
      for (size_t i = 0; i < layers[d].size(); ++i) {
        if (!alive[d][i] || usage[d][i] != 1) continue;
        // Locate the unique live coface and require it maximal.
        int ci = -1;
        for (size_t c = 0; c < layers[d + 1].size() && ci < 0; ++c) {
          if (!alive[d + 1][c]) continue;
          int mult = 0;
          for (int f : layers[d + 1][c].faces)
            if (f == static_cast<int>(i)) ++mult;
          if (mult == 1) ci = static_cast<int>(c);
          else if (mult > 1) { ci = -2; break; }  // doubled face, not free
        }
        if (ci < 0) continue;
        if (d + 2 < layers.size() && usage[d + 1][static_cast<size_t>(ci)] > 0) continue;
        if (!best || layers[d][i].name < *best) {
          best = &layers[d][i].name;
          fd = static_cast<int>(d);
          fi = static_cast<int>(i);
        }
      }
    }
    if (fd < 0) break;

    // Remove the pair.
    int ci = -1;
    for (size_t c = 0; c < layers[static_cast<size_t>(fd) + 1].size(); ++c) {
      if (!alive[static_cast<size_t>(fd) + 1][c]) continue;
      for (int f : layers[static_cast<size_t>(fd) + 1][c].faces)
        if (f == fi) { ci = static_cast<int>(c); break; }
      if (ci >= 0) break;
    }
    const Cell& coface = layers[static_cast<size_t>(fd) + 1][static_cast<size_t>(ci)];
    out.certificate.push_back({layers[static_cast<size_t>(fd)][static_cast<size_t>(fi)].name,
                               coface.name});
    alive[static_cast<size_t>(fd)][static_cast<size_t>(fi)] = false;
    alive[static_cast<size_t>(fd) + 1][static_cast<size_t>(ci)] = false;
    for (int f : coface.faces) usage[static_cast<size_t>(fd)][static_cast<size_t>(f)]--;
    // The free face is gone too, so its own faces each lose one coface.
    if (fd > 0)
      for (int f : layers[static_cast<size_t>(fd)][static_cast<size_t>(fi)].faces)
        usage[static_cast<size_t>(fd) - 1][static_cast<size_t>(f)]--;
  }

  // Rebuild the reduced complex from the surviving cells.
  {
    std::vector<std::vector<Cell>> cells;
    std::vector<std::vector<int>> remap(layers.size());
    std::vector<std::string> vlabels;
    std::vector<int> vmap(layers.empty() ? 0 : layers[0].size(), -1);
    for (size_t d = 0; d < layers.size(); ++d) {
      remap[d].assign(layers[d].size(), -1);
      std::vector<Cell> layer;
      for (size_t i = 0; i < layers[d].size(); ++i) {
        if (!alive[d][i]) continue;
        Cell c = layers[d][i];
        if (d == 0) {
          vmap[static_cast<size_t>(c.vertices[0])] = static_cast<int>(vlabels.size());
          vlabels.push_back(dual.vertex_labels()[static_cast<size_t>(c.vertices[0])]);
        }
        for (int& v : c.vertices) v = vmap[static_cast<size_t>(v)];
        for (int& f : c.faces) f = remap[d - 1][static_cast<size_t>(f)];
        remap[d][i] = static_cast<int>(layer.size());
        layer.push_back(std::move(c));
      }
      cells.push_back(std::move(layer));
    }
    while (cells.size() > 1 && cells.back().empty()) cells.pop_back();
    out.reduced = DualComplex::from_cells(std::move(vlabels), std::move(cells));
  }
  int total = 0;
  for (const auto& layer : out.reduced.cells()) total += static_cast<int>(layer.size());
  out.collapsed_to_point = (total == 1);
  return out;
}

ContractibilityVerdict contractibility_verdict_dim2(const DualComplex& dual, int move_budget) {
  if (dual.dim() > 2)
    throw std::invalid_argument("contractibility_verdict_dim2 requires dimension <= 2");
  ChainComplex cc = chain_complex(dual);
  std::vector<HomologyGroup> h = all_homology(cc);
  bool reduced_trivial = true;
  for (size_t k = 0; k < h.size(); ++k) {
    int reduced_rank = h[k].rank - (k == 0 ? 1 : 0);
    if (reduced_rank != 0 || !h[k].torsion.empty()) reduced_trivial = false;
  }
  if (!reduced_trivial) return ContractibilityVerdict::not_point;
  Pi1Verdict pi1 = simple_connectivity_verdict(dual, move_budget);
  if (pi1 == Pi1Verdict::yes) return ContractibilityVerdict::point;
  if (pi1 == Pi1Verdict::no) return ContractibilityVerdict::not_point;
  return ContractibilityVerdict::unknown;
}

std::string to_string(Pi1Verdict v) {
  switch (v) {
    case Pi1Verdict::yes: return "yes";
    case Pi1Verdict::no: return "no";
    case Pi1Verdict::unknown: return "unknown";
  }
  return "?";
}

std::string to_string(ContractibilityVerdict v) {
  switch (v) {
    case ContractibilityVerdict::point: return "point";
    case ContractibilityVerdict::not_point: return "not-point";
    case ContractibilityVerdict::unknown: return "unknown";
  }
  return "?";
}

}  // namespace snc
