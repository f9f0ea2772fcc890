// Command-line front end: analyze / verify / blowup / generate.
//
// Exit codes: 0 success, 1 validation failure, 2 I/O error, 3 theorem
// contradiction (verify) or broken blowup invariant (blowup).

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snc/dual_complex.hpp"
#include "snc/families.hpp"
#include "snc/homology.hpp"
#include "snc/model.hpp"
#include "snc/pi1.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitContradiction = 3;

std::string fnv1a_digest(const std::string& bytes) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::system_error(errno, std::generic_category(), path);
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) throw std::system_error(errno, std::generic_category(), path);
  return out.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::system_error(errno, std::generic_category(), out_path);
  out << text;
  if (!out) throw std::system_error(errno, std::generic_category(), out_path);
}

std::string base_name(const std::string& path) {
  size_t slash = path.find_last_of('/');
  std::string name = (slash == std::string::npos) ? path : path.substr(slash + 1);
  size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name;
}

ordered_json homology_json(const std::vector<snc::HomologyGroup>& groups) {
  ordered_json out = ordered_json::array();
  for (const snc::HomologyGroup& g : groups) {
    ordered_json gj;
    gj["rank"] = g.rank;
    ordered_json torsion = ordered_json::array();
    for (const snc::BigInt& t : g.torsion) torsion.push_back(t.str());
    gj["torsion"] = std::move(torsion);
    out.push_back(std::move(gj));
  }
  return out;
}

struct Analysis {
  snc::SNCModel model;
  snc::DualComplex dual;
  std::vector<snc::HomologyGroup> homology;
  std::vector<int> delta_ranks;
  snc::Pi1Verdict pi1 = snc::Pi1Verdict::unknown;
  size_t tietze_moves = 0;
  bool has_contractibility = false;
  snc::ContractibilityVerdict contractibility = snc::ContractibilityVerdict::unknown;
  bool has_vanishing = false;
  snc::VanishingResult vanishing{snc::VanishingVerdict::not_applicable, 0};
  double seconds = 0.0;
};

Analysis analyze_model(const snc::SNCModel& model, int budget) {
  const auto start = std::chrono::steady_clock::now();
  Analysis a;
  a.model = model;
  a.dual = build_dual_complex(model);
  snc::ChainComplex cc = chain_complex(a.dual);
  a.homology = all_homology(cc);
  snc::CochainComplexDelta dd = cochain_complex_delta(a.dual);
  for (int p = 0; p <= a.dual.dim(); ++p) a.delta_ranks.push_back(delta_cohomology_rank(dd, p));
  a.pi1 = simple_connectivity_verdict(a.dual, budget);
  if (a.dual.connected_components() == 1) {
    snc::GroupPresentation pres =
        tietze_simplify(edge_path_presentation(a.dual), budget);
    a.tietze_moves = pres.history.size();
  }
  if (a.dual.dim() <= 2) {
    a.has_contractibility = true;
    a.contractibility = contractibility_verdict_dim2(a.dual, budget);
  }
  if (model.ambient_dim > 0) {
    a.has_vanishing = true;
    a.vanishing = verify_rational_vanishing(model);
  }
  a.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return a;
}

ordered_json report_json(const std::string& name, const std::string& digest,
                         const Analysis& a, int budget, bool timings) {
  ordered_json r;
  r["model"] = {{"name", name}, {"digest", digest}};
  r["f_vector"] = a.dual.f_vector();
  r["euler_characteristic"] = a.dual.euler_characteristic();
  r["homology"] = homology_json(a.homology);
  r["delta_cohomology_ranks"] = a.delta_ranks;
  r["pi1"] = {{"simply_connected", snc::to_string(a.pi1)},
              {"tietze_budget", budget},
              {"tietze_moves", a.tietze_moves}};
  if (a.has_contractibility) r["contractibility"] = snc::to_string(a.contractibility);
  if (a.has_vanishing)
    r["vanishing"] = {{"verdict", snc::to_string(a.vanishing.verdict)},
                      {"top_rank", a.vanishing.top_rank}};
  if (timings) r["timings"] = {{"analyze_seconds", a.seconds}};
  return r;
}

std::string report_table(const std::string& name, const Analysis& a) {
  std::ostringstream out;
  out << "model: " << name << "\n";
  out << "f-vector:";
  for (int f : a.dual.f_vector()) out << " " << f;
  out << "\neuler characteristic: " << a.dual.euler_characteristic() << "\n";
  for (size_t k = 0; k < a.homology.size(); ++k) {
    out << "H_" << k << ": rank " << a.homology[k].rank;
    if (!a.homology[k].torsion.empty()) {
      out << ", torsion";
      for (const snc::BigInt& t : a.homology[k].torsion) out << " " << t.str();
    }
    out << "\n";
  }
  out << "delta-cohomology ranks:";
  for (int r : a.delta_ranks) out << " " << r;
  out << "\nsimply connected: " << snc::to_string(a.pi1) << "\n";
  if (a.has_contractibility)
    out << "contractibility: " << snc::to_string(a.contractibility) << "\n";
  if (a.has_vanishing)
    out << "vanishing: " << snc::to_string(a.vanishing.verdict) << " (top rank "
        << a.vanishing.top_rank << ")\n";
  return out.str();
}

/// Load a model file; reports I/O problems as exit 2 and model problems as
/// exit 1 through the returned status.
struct Loaded {
  int status = 0;
  std::string error;
  std::string bytes;
  snc::SNCModel model;
};

Loaded load_checked(const std::string& path) {
  Loaded out;
  try {
    out.bytes = read_file(path);
  } catch (const std::exception& e) {
    out.status = kExitIo;
    out.error = std::string("error: ") + e.what();
    return out;
  }
  try {
    out.model = snc::load_model(out.bytes);
  } catch (const snc::ModelError& e) {
    out.status = kExitValidation;
    out.error = "validation error [" + e.code() + "]: " + e.what();
    return out;
  }
  std::vector<snc::Violation> violations = snc::validate(out.model);
  if (!violations.empty()) {
    out.status = kExitValidation;
    std::ostringstream msg;
    for (const snc::Violation& v : violations)
      msg << "violation [" << v.code << "]: " << v.detail << "\n";
    out.error = msg.str();
    if (!out.error.empty()) out.error.pop_back();
  }
  return out;
}

int worker_count(size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("SNC_DUAL_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) n = static_cast<unsigned>(cap);
  }
  return static_cast<int>(std::min<size_t>(n, jobs));
}

int cmd_analyze(const std::vector<std::string>& paths, const std::string& out_path,
                int budget, const std::string& format, bool timings) {
  struct Slot {
    int status = 0;
    std::string text;
  };
  std::vector<Slot> slots(paths.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next.fetch_add(1); i < paths.size(); i = next.fetch_add(1)) {
      Loaded in = load_checked(paths[i]);
      if (in.status != 0) {
        slots[i] = {in.status, in.error + "\n"};
        continue;
      }
      Analysis a = analyze_model(in.model, budget);
      const std::string name = base_name(paths[i]);
      if (format == "table")
        slots[i] = {0, report_table(name, a)};
      else
        slots[i] = {0, report_json(name, fnv1a_digest(in.bytes), a, budget, timings).dump(2) +
                           "\n"};
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < worker_count(paths.size()); ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  int status = 0;
  std::string combined;
  for (const Slot& s : slots) {
    if (s.status != 0) {
      std::cerr << s.text;
      status = std::max(status, s.status);
    } else {
      combined += s.text;
    }
  }
  try {
    write_output(out_path, combined);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return status;
}

int cmd_verify(const std::string& path, int budget) {
  Loaded in = load_checked(path);
  if (in.status != 0) {
    std::cerr << in.error << "\n";
    return in.status;
  }
  Analysis a = analyze_model(in.model, budget);
  int status = 0;
  if (in.model.declared_rational && a.has_vanishing &&
      a.vanishing.verdict == snc::VanishingVerdict::violates) {
    std::cout << "contradiction: Theorem 1 (top cohomology of the dual complex vanishes "
                 "for rational singularities); computed top rank "
              << a.vanishing.top_rank << "\n";
    status = kExitContradiction;
  }
  if (in.model.declared_hypersurface && in.model.ambient_dim >= 3) {
    if (a.pi1 == snc::Pi1Verdict::no) {
      std::cout << "contradiction: Theorem 2 (the dual complex of an isolated hypersurface "
                   "singularity is simply connected)\n";
      status = kExitContradiction;
    } else if (a.pi1 == snc::Pi1Verdict::unknown) {
      std::cerr << "warning: simple connectivity undecided within budget " << budget << "\n";
    }
  }
  if (status == 0) std::cout << "ok: no declared flag is contradicted\n";
  return status;
}

int cmd_blowup(const std::string& path, const std::string& cell_spec, int iterations,
               unsigned seed, const std::string& out_path) {
  Loaded in = load_checked(path);
  if (in.status != 0) {
    std::cerr << in.error << "\n";
    return in.status;
  }
  snc::DualComplex before = build_dual_complex(in.model);
  std::vector<snc::HomologyGroup> h_before = all_homology(chain_complex(before));

  ordered_json moves = ordered_json::array();
  snc::DualComplex current = before;
  if (!current.is_simplicial()) {
    current = current.barycentric_subdivision();
    moves.push_back("barycentric");
  }
  std::mt19937_64 rng(seed);
  for (int it = 0; it < iterations; ++it) {
    snc::CellRef target;
    if (it == 0 && cell_spec != "random") {
      target = current.find_cell(cell_spec);
      if (!target.valid()) {
        std::cerr << "error: unknown cell " << cell_spec << "\n";
        return kExitValidation;
      }
    } else {
      // Pick a cell uniformly from the flat enumeration.
      size_t total = 0;
      for (const auto& layer : current.cells()) total += layer.size();
      size_t k = rng() % total;
      for (size_t d = 0; d < current.cells().size(); ++d) {
        if (k < current.cells()[d].size()) {
          target = {static_cast<int>(d), static_cast<int>(k)};
          break;
        }
        k -= current.cells()[d].size();
      }
    }
    moves.push_back("star " + current.cell(target).name);
    current = current.star_subdivision(target);
  }

  std::vector<snc::HomologyGroup> h_after = all_homology(chain_complex(current));
  const bool preserved =
      h_before == h_after && before.euler_characteristic() == current.euler_characteristic();

  ordered_json doc;
  doc["model"] = {{"name", base_name(path)}, {"digest", fnv1a_digest(in.bytes)}};
  doc["seed"] = seed;
  doc["moves"] = std::move(moves);
  doc["before"] = {{"f_vector", before.f_vector()},
                   {"euler_characteristic", before.euler_characteristic()},
                   {"homology", homology_json(h_before)}};
  doc["after"] = {{"f_vector", current.f_vector()},
                  {"euler_characteristic", current.euler_characteristic()},
                  {"homology", homology_json(h_after)}};
  doc["invariants_preserved"] = preserved;
  doc["complex"] = ordered_json::parse(current.serialize());
  try {
    write_output(out_path, doc.dump(2) + "\n");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  if (!preserved) {
    std::cerr << "error: homology changed under star subdivision\n";
    return kExitContradiction;
  }
  return 0;
}

int cmd_generate(const std::string& family, int n, const std::string& shape_str,
                 unsigned seed, int components, int depth, double density,
                 const std::string& out_path) {
  try {
    if (family == "cdv") {
      // The curated corpus; --out names a directory in this case.
      std::string combined;
      for (const snc::NamedModel& nm : snc::bundled_cdv_models()) {
        if (out_path.empty())
          combined += serialize(nm.model);
        else
          write_output(out_path + "/" + nm.name + ".json", serialize(nm.model));
      }
      if (out_path.empty()) std::cout << combined;
      return 0;
    }
    snc::SNCModel m;
    if (family == "gordon") {
      m = snc::gordon_family(n);
    } else if (family == "tree") {
      std::vector<int> shape;
      std::stringstream ss(shape_str);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) shape.push_back(std::stoi(tok));
      m = snc::tree_family(shape);
    } else if (family == "random") {
      m = snc::random_snc_model(components, depth, density, seed);
    } else if (family == "cone") {
      m = snc::cone_family(build_dual_complex(snc::gordon_family(n)));
    } else if (family == "s2") {
      m = snc::s2_counterexample_model();
    } else {
      std::cerr << "error: unknown family " << family
                << " (expected gordon|tree|random|cone|cdv|s2)\n";
      return kExitValidation;
    }
    write_output(out_path, serialize(m));
    return 0;
  } catch (const std::system_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual complexes of simple-normal-crossings divisors"};
  app.require_subcommand(1);

  std::string out_path;
  int budget = 10000;
  std::string format = "json";
  bool timings = false;
  unsigned seed = 0;
  int iterations = 1;

  std::vector<std::string> analyze_paths;
  CLI::App* analyze = app.add_subcommand("analyze", "full invariant report for model files");
  analyze->add_option("paths", analyze_paths, "model documents")->required();
  analyze->add_option("--out", out_path, "write the report here instead of stdout");
  analyze->add_option("--budget", budget, "Tietze move budget");
  analyze->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  analyze->add_flag("--timings", timings, "include wall-clock timings in the report");

  std::string verify_path;
  CLI::App* verify = app.add_subcommand("verify", "check declared flags against the complex");
  verify->add_option("path", verify_path, "model document")->required();
  verify->add_option("--budget", budget, "Tietze move budget");

  std::string blowup_path, cell_spec = "random";
  CLI::App* blowup = app.add_subcommand("blowup", "star subdivisions plus invariance report");
  blowup->add_option("path", blowup_path, "model document")->required();
  blowup->add_option("cell", cell_spec, "cell name or 'random'");
  blowup->add_option("--iterations", iterations, "number of subdivisions");
  blowup->add_option("--seed", seed, "seed for random cell choices");
  blowup->add_option("--out", out_path, "write the report here instead of stdout");

  std::string family, shape_str;
  int n = 3, components = 5, depth = 2;
  double density = 0.5;
  CLI::App* generate = app.add_subcommand("generate", "emit example-family model documents");
  generate->add_option("family", family, "gordon|tree|random|cone|cdv|s2")->required();
  generate->add_option("--n", n, "hyperplane count (gordon) / base size (cone)");
  generate->add_option("--shape", shape_str, "comma-separated parent list (tree)");
  generate->add_option("--seed", seed, "generator seed (random)");
  generate->add_option("--components", components, "component count (random)");
  generate->add_option("--depth", depth, "maximal depth (random)");
  generate->add_option("--density", density, "stratum density (random)");
  generate->add_option("--out", out_path, "output file (directory for cdv)");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) return cmd_analyze(analyze_paths, out_path, budget, format, timings);
  if (verify->parsed()) return cmd_verify(verify_path, budget);
  if (blowup->parsed()) return cmd_blowup(blowup_path, cell_spec, iterations, seed, out_path);
  return cmd_generate(family, n, shape_str, seed, components, depth, density, out_path);
}
