#include "snc/model.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace snc {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string join_names(const SNCModel& m, const std::vector<int>& indices) {
  std::string s;
  for (size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ",";
    s += m.components[static_cast<size_t>(indices[i])];
  }
  return "{" + s + "}";
}

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw ModelError("unknown-field", "unknown field '" + it.key() + "' in " + where);
  }
}

}  // namespace

int SNCModel::component_index(const std::string& name) const {
  for (size_t i = 0; i < components.size(); ++i)
    if (components[i] == name) return static_cast<int>(i);
  return -1;
}

const Stratum* SNCModel::find_stratum(const std::vector<int>& indices) const {
  for (const Stratum& s : strata)
    if (s.indices == indices) return &s;
  return nullptr;
}

SNCModel load_model(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ModelError("json-parse", e.what());
  }
  if (!doc.is_object()) throw ModelError("schema", "document is not a JSON object");
  require_keys(doc, {"ambient_dim", "components", "strata", "flags"}, "document");

  SNCModel m;
  if (doc.contains("ambient_dim")) {
    if (!doc["ambient_dim"].is_number_integer() || doc["ambient_dim"].get<int>() <= 0)
      throw ModelError("schema", "ambient_dim must be a positive integer");
    m.ambient_dim = doc["ambient_dim"].get<int>();
  }
  if (!doc.contains("components") || !doc["components"].is_array() ||
      doc["components"].empty())
    throw ModelError("schema", "components must be a nonempty array of strings");
  for (const auto& c : doc["components"]) {
    if (!c.is_string()) throw ModelError("schema", "component names must be strings");
    if (m.component_index(c.get<std::string>()) >= 0)
      throw ModelError("duplicate-component", "duplicate component " + c.get<std::string>());
    m.components.push_back(c.get<std::string>());
  }

  std::set<std::string> piece_names;
  std::set<std::vector<int>> seen_index_sets;
  if (doc.contains("flags")) {
    const json& f = doc["flags"];
    if (!f.is_object()) throw ModelError("schema", "flags must be an object");
    require_keys(f, {"declared_rational", "declared_hypersurface"}, "flags");
    if (f.contains("declared_rational")) {
      if (!f["declared_rational"].is_boolean())
        throw ModelError("schema", "declared_rational must be a boolean");
      m.declared_rational = f["declared_rational"].get<bool>();
    }
    if (f.contains("declared_hypersurface")) {
      if (!f["declared_hypersurface"].is_boolean())
        throw ModelError("schema", "declared_hypersurface must be a boolean");
      m.declared_hypersurface = f["declared_hypersurface"].get<bool>();
    }
  }

  if (doc.contains("strata")) {
    if (!doc["strata"].is_array()) throw ModelError("schema", "strata must be an array");
    for (const json& sj : doc["strata"]) {
      if (!sj.is_object()) throw ModelError("schema", "stratum entries must be objects");
      require_keys(sj, {"indices", "pieces"}, "stratum");
      if (!sj.contains("indices") || !sj["indices"].is_array() || sj["indices"].empty())
        throw ModelError("schema", "stratum indices must be a nonempty array");
      Stratum s;
      for (const auto& n : sj["indices"]) {
        if (!n.is_string()) throw ModelError("schema", "stratum indices must be component names");
        int idx = m.component_index(n.get<std::string>());
        if (idx < 0)
          throw ModelError("unknown-component",
                           "stratum references unknown component " + n.get<std::string>());
        s.indices.push_back(idx);
      }
      std::sort(s.indices.begin(), s.indices.end());
      if (std::adjacent_find(s.indices.begin(), s.indices.end()) != s.indices.end())
        throw ModelError("schema", "stratum index set has a repeated component");
      if (!seen_index_sets.insert(s.indices).second)
        throw ModelError("duplicate-stratum",
                         "index set " + join_names(m, s.indices) + " appears twice");
      if (!sj.contains("pieces") || !sj["pieces"].is_array())
        throw ModelError("schema", "stratum pieces must be an array");
      for (const json& pj : sj["pieces"]) {
        if (!pj.is_object()) throw ModelError("schema", "pieces must be objects");
        require_keys(pj, {"name", "faces"}, "piece");
        if (!pj.contains("name") || !pj["name"].is_string())
          throw ModelError("schema", "piece name must be a string");
        Piece p;
        p.name = pj["name"].get<std::string>();
        if (!piece_names.insert(p.name).second)
          throw ModelError("duplicate-piece", "duplicate piece name " + p.name);
        if (pj.contains("faces")) {
          if (!pj["faces"].is_object())
            throw ModelError("schema", "piece faces must be an object, in piece " + p.name);
          for (auto it = pj["faces"].begin(); it != pj["faces"].end(); ++it) {
            if (!it.value().is_string())
              throw ModelError("schema", "face link targets must be strings, in piece " + p.name);
            p.faces[it.key()] = it.value().get<std::string>();
          }
        }
        s.pieces.push_back(std::move(p));
      }
      std::sort(s.pieces.begin(), s.pieces.end(),
                [](const Piece& a, const Piece& b) { return a.name < b.name; });
      m.strata.push_back(std::move(s));
    }
  }

  // Synthesize missing singleton strata; the single piece is named after
  // its component.
  for (size_t i = 0; i < m.components.size(); ++i) {
    std::vector<int> single{static_cast<int>(i)};
    if (seen_index_sets.count(single)) continue;
    if (!piece_names.insert(m.components[i]).second)
      throw ModelError("duplicate-piece",
                       "cannot synthesize singleton piece " + m.components[i] +
                           ": name already in use");
    Stratum s;
    s.indices = single;
    s.pieces.push_back(Piece{m.components[i], {}});
    m.strata.push_back(std::move(s));
  }

  std::sort(m.strata.begin(), m.strata.end(), [](const Stratum& a, const Stratum& b) {
    if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
    return a.indices < b.indices;
  });

  // Hard structural checks: load refuses models whose links cannot resolve.
  for (const Stratum& s : m.strata) {
    const size_t depth = s.indices.size() - 1;
    if (depth == 0) {
      if (s.pieces.size() != 1)
        throw ModelError("singleton-pieces",
                         "component " + m.components[static_cast<size_t>(s.indices[0])] +
                             " must have exactly one piece");
      if (!s.pieces[0].faces.empty())
        throw ModelError("schema", "singleton piece " + s.pieces[0].name +
                                       " must not carry face links");
      continue;
    }
    if (m.ambient_dim > 0 && depth > static_cast<size_t>(m.ambient_dim - 1)) {
      throw ModelError("depth-bound",
                       "piece " + s.pieces.at(0).name + " has depth " + std::to_string(depth) +
                           " exceeding ambient_dim - 1");
    }
    for (const Piece& p : s.pieces) {
      if (p.faces.size() != s.indices.size())
        throw ModelError("missing-face-link",
                         "piece " + p.name + " must link one parent per dropped component");
      for (int idx : s.indices) {
        const std::string& comp = m.components[static_cast<size_t>(idx)];
        auto it = p.faces.find(comp);
        if (it == p.faces.end())
          throw ModelError("missing-face-link",
                           "piece " + p.name + " has no link for dropped component " + comp);
        std::vector<int> parent_set;
        for (int j : s.indices)
          if (j != idx) parent_set.push_back(j);
        const Stratum* parent = m.find_stratum(parent_set);
        bool ok = false;
        if (parent) {
          for (const Piece& pp : parent->pieces)
            if (pp.name == it->second) ok = true;
        }
        if (!ok)
          throw ModelError("dangling-link", "piece " + p.name + " links to nonexistent piece " +
                                                it->second + " on " + join_names(m, parent_set));
      }
    }
  }

  return m;
}

std::string serialize(const SNCModel& m) {
  ordered_json doc;
  if (m.ambient_dim > 0) doc["ambient_dim"] = m.ambient_dim;
  doc["components"] = m.components;
  ordered_json strata = ordered_json::array();
  for (const Stratum& s : m.strata) {
    ordered_json sj;
    std::vector<std::string> names;
    for (int i : s.indices) names.push_back(m.components[static_cast<size_t>(i)]);
    sj["indices"] = names;
    ordered_json pieces = ordered_json::array();
    for (const Piece& p : s.pieces) {
      ordered_json pj;
      pj["name"] = p.name;
      pj["faces"] = ordered_json::object();
      for (const auto& [drop, target] : p.faces) pj["faces"][drop] = target;
      pieces.push_back(std::move(pj));
    }
    sj["pieces"] = std::move(pieces);
    strata.push_back(std::move(sj));
  }
  doc["strata"] = std::move(strata);
  doc["flags"] = {{"declared_rational", m.declared_rational},
                  {"declared_hypersurface", m.declared_hypersurface}};
  return doc.dump(2) + "\n";
}

std::vector<Violation> validate(const SNCModel& m) {
  std::vector<Violation> out;

  auto find_piece = [&](const std::vector<int>& set, const std::string& name) -> const Piece* {
    const Stratum* s = m.find_stratum(set);
    if (!s) return nullptr;
    for (const Piece& p : s->pieces)
      if (p.name == name) return &p;
    return nullptr;
  };

  for (size_t i = 0; i < m.components.size(); ++i) {
    const Stratum* s = m.find_stratum({static_cast<int>(i)});
    if (!s || s->pieces.size() != 1)
      out.push_back({"singleton-pieces",
                     "component " + m.components[i] + " must have exactly one piece"});
  }

  for (const Stratum& s : m.strata) {
    const size_t depth = s.indices.size() - 1;
    if (m.ambient_dim > 0 && depth > static_cast<size_t>(m.ambient_dim - 1)) {
      for (const Piece& p : s.pieces)
        out.push_back({"depth-bound", "piece " + p.name + " has depth " +
                                          std::to_string(depth) + " exceeding ambient_dim - 1"});
    }
    if (depth == 0) continue;
    for (const Piece& p : s.pieces) {
      // Totality of links.
      for (int idx : s.indices) {
        const std::string& comp = m.components[static_cast<size_t>(idx)];
        auto it = p.faces.find(comp);
        std::vector<int> parent_set;
        for (int j : s.indices)
          if (j != idx) parent_set.push_back(j);
        if (it == p.faces.end()) {
          out.push_back({"missing-link",
                         "piece " + p.name + " has no link for dropped component " + comp});
          continue;
        }
        if (!find_piece(parent_set, it->second))
          out.push_back({"dangling-link", "piece " + p.name + " links to nonexistent piece " +
                                              it->second});
      }
      if (depth < 2) continue;
      // Double-drop consistency: dropping {a, b} in either order must land
      // on the same depth-(k-2) piece.
      for (size_t ai = 0; ai < s.indices.size(); ++ai) {
        for (size_t bi = ai + 1; bi < s.indices.size(); ++bi) {
          const std::string& ca = m.components[static_cast<size_t>(s.indices[ai])];
          const std::string& cb = m.components[static_cast<size_t>(s.indices[bi])];
          auto ita = p.faces.find(ca);
          auto itb = p.faces.find(cb);
          if (ita == p.faces.end() || itb == p.faces.end()) continue;
          std::vector<int> drop_a, drop_b, drop_ab;
          for (int j : s.indices) {
            if (j != s.indices[ai]) drop_a.push_back(j);
            if (j != s.indices[bi]) drop_b.push_back(j);
            if (j != s.indices[ai] && j != s.indices[bi]) drop_ab.push_back(j);
          }
          const Piece* pa = find_piece(drop_a, ita->second);
          const Piece* pb = find_piece(drop_b, itb->second);
          if (!pa || !pb) continue;
          auto a_then_b = pa->faces.find(cb);
          auto b_then_a = pb->faces.find(ca);
          if (a_then_b == pa->faces.end() || b_then_a == pb->faces.end()) continue;
          if (a_then_b->second != b_then_a->second)
            out.push_back({"link-consistency",
                           "piece " + p.name + ": dropping " + ca + "," + cb +
                               " in either order disagrees (" + a_then_b->second + " vs " +
                               b_then_a->second + ")"});
        }
      }
    }
  }
  return out;
}

bool is_simplicial_case(const SNCModel& m) {
  for (const Stratum& s : m.strata)
    if (s.pieces.size() > 1) return false;
  return true;
}

}  // namespace snc
