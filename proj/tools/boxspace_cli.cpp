#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "boxspace/errors.hpp"
#include "boxspace/feasibility.hpp"
#include "boxspace/graph.hpp"
#include "boxspace/lanczos.hpp"
#include "boxspace/psl.hpp"
#include "boxspace/quaternion.hpp"
#include "boxspace/reps.hpp"
#include "boxspace/simd.hpp"
#include "boxspace/spectral.hpp"
#include "boxspace/suites.hpp"
#include "boxspace/zmod.hpp"

namespace {

using namespace boxspace;
using nlohmann::json;
using u64 = std::uint64_t;
using u32 = std::uint32_t;

constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  u64 p = 5, q = 29, seed = 0;
  unsigned n = 1, k = 1, m = 2;
  std::string mode = "dense", out, graph_file, named, suite, isa;
  u64 cap_elements = psl::kDefaultElementCap, cap_vertices = graph::kDefaultVertexCap;
  bool timings = false;
};

json params_json(const RunConfig& c) {
  return {{"p", c.p}, {"q", c.q}, {"n", c.n}, {"k", c.k}, {"m", c.m}, {"mode", c.mode},
          {"cap_elements", c.cap_elements}, {"cap_vertices", c.cap_vertices}};
}

// tmp file + rename so a reader never sees a half-written report
void write_atomic(const std::string& path, const std::string& body) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw ResourceError("cannot write " + tmp);
    os << body;
    if (!os.flush()) throw ResourceError("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string replace_ext(const std::string& path, const std::string& ext) {
  return std::filesystem::path(path).replace_extension(ext).string();
}

int emit(const RunConfig& c, const std::string& command, json results, bool pass) {
  json report{{"version", 1},      {"tool_version", kVersion}, {"command", command},
              {"params", params_json(c)}, {"seed", c.seed}, {"results", std::move(results)},
              {"pass", pass}};
  const std::string body = report.dump(2) + "\n";
  if (c.out.empty())
    std::cout << body;
  else
    write_atomic(c.out, body);
  return pass ? 0 : 1;
}

graph::Graph load_graph(const RunConfig& c) {
  if (!c.graph_file.empty()) {
    std::ifstream is(c.graph_file);
    if (!is) throw ParameterError("cannot open " + c.graph_file);
    return graph::read_edge_list(is);
  }
  const std::string& s = c.named;
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  auto arg = [&]() -> u32 {
    if (colon == std::string::npos) throw ParameterError("graph '" + s + "' needs a size, e.g. " + head + ":8");
    return static_cast<u32>(std::stoul(s.substr(colon + 1)));
  };
  if (head == "cycle") return graph::cycle(arg());
  if (head == "complete") return graph::complete(arg());
  if (head == "path") return graph::path(arg());
  if (head == "petersen") return graph::petersen();
  if (head == "k33") return graph::complete_bipartite(3, 3);
  if (head == "psl23") return graph::psl23_cayley();
  throw ParameterError("unknown graph '" + s + "' (cycle:N complete:N path:N petersen k33 psl23, or --graph FILE)");
}

graph::Graph lps_graph(const RunConfig& c) {
  const auto params = zmod::LpsParams::make(c.p, c.q, c.n);
  const auto gens = quat::enumerate_Sp(c.p);
  const auto letters = psl::lps_generators(gens, c.q, c.n, params.epsilon_at(c.n));
  const auto closure = psl::quotient_from_generators(letters, c.cap_elements);
  return graph::cayley_graph(closure.quotient);
}

int cmd_feasible(const RunConfig& c) {
  const auto r = feasibility::triangle_feasible(c.q, c.k);
  json res{{"q", r.q}, {"k", r.k}, {"n_min", r.n_min}, {"hypothesis_ok", r.hypothesis_ok},
           {"order_exponent", r.order_exponent}, {"log10_order", r.log10_order},
           {"beyond_desk_scale", r.beyond_desk_scale}};
  std::cerr << "n_min = " << r.n_min << ", |quotient| <= " << r.q << "^" << r.order_exponent << " (about 10^"
            << static_cast<u64>(r.log10_order) << ")\n";
  return emit(c, "feasible", json::array({res}), r.hypothesis_ok);
}

int cmd_pipeline(const RunConfig& c) {
  const auto ids = suites::suite_criteria(c.suite);  // throws on unknown suite before any work
  suites::Config sc;
  sc.p = c.p;
  sc.q = c.q;
  sc.seed = c.seed;
  sc.cap_elements = c.cap_elements;
  sc.cap_vertices = c.cap_vertices;
  json results = json::array();
  std::vector<std::string> failing;
  std::ostringstream csv;
  csv << "criterion,title,pass\n";
  for (int id : ids) {
    const auto r = suites::run_criterion(id, sc);
    json j{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"summary", r.summary}, {"certificate", r.detail}};
    if (c.timings) j["seconds"] = r.seconds;
    results.push_back(std::move(j));
    csv << r.id << ",\"" << r.title << "\"," << (r.pass ? 1 : 0) << "\n";
    std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << ": " << r.summary << "\n";
    if (!r.pass) failing.push_back(std::to_string(r.id) + " " + r.title);
  }
  if (!c.out.empty()) write_atomic(replace_ext(c.out, ".csv"), csv.str());
  if (!failing.empty()) {
    std::cerr << "failing:";
    for (const auto& f : failing) std::cerr << " [" << f << "]";
    std::cerr << "\n";
  }
  return emit(c, "pipeline " + c.suite, results, failing.empty());
}

int cmd_cayley(const RunConfig& c) {
  const auto g = lps_graph(c);
  json res{{"vertices", g.size()}, {"edges", g.edge_count()}, {"degree", g.regularity().value_or(0)},
           {"expected_order", psl::psl_order(c.q, c.n)}, {"bipartite", graph::is_bipartite(g)},
           {"connected", graph::is_connected(g)}};
  if (!c.out.empty()) {
    std::ostringstream os;
    graph::write_edge_list(os, g);
    write_atomic(replace_ext(c.out, ".edges"), os.str());
  }
  return emit(c, "cayley", json::array({res}), g.size() == psl::psl_order(c.q, c.n));
}

int cmd_cover(const RunConfig& c) {
  const auto base = load_graph(c);
  const auto cov = graph::homology_cover(base, c.m, c.cap_vertices);
  const bool ok = graph::is_covering_map(cov.graph, base, cov.projection) && graph::deck_action_ok(cov);
  json res{{"base_vertices", base.size()}, {"r", cov.r}, {"fiber_size", cov.fiber_size},
           {"cover_vertices", cov.graph.size()}, {"cover_edges", cov.graph.edge_count()}, {"covering_map", ok}};
  if (!c.out.empty()) {
    std::ostringstream os;
    graph::write_cover(os, cov);
    write_atomic(replace_ext(c.out, ".cover"), os.str());
  }
  return emit(c, "cover", json::array({res}), ok);
}

int cmd_spectrum(const RunConfig& c) {
  const auto g = (c.graph_file.empty() && c.named.empty()) ? lps_graph(c) : load_graph(c);
  json res{{"vertices", g.size()}, {"mode", c.mode}};
  bool pass = true;
  if (c.mode == "dense") {
    const auto s = spectral::spectrum(g, spectral::Operator::adjacency);
    const auto cert = spectral::ramanujan_check(s, g);
    res["max_residual"] = s.max_residual;
    res["ramanujan"] = {{"valid", cert.valid}, {"bipartite", cert.bipartite}, {"bound", cert.bound},
                        {"worst", cert.worst}, {"margin", cert.margin}, {"pass", cert.pass()}};
    json mult = json::array();
    for (auto [v, k] : s.multiplicities()) mult.push_back({v, k});
    res["spectrum"] = mult;
    if (!c.out.empty()) {
      std::ostringstream os;
      s.write_csv(os);
      write_atomic(replace_ext(c.out, ".csv"), os.str());
    }
    pass = s.max_residual <= 1e-8;
  } else if (c.mode == "extreme") {
    spectral::LanczosOptions opt;
    opt.seed = c.seed;
    const auto e = spectral::extreme_eigenvalues(g, opt);
    const auto cert = spectral::ramanujan_check_extremes(e.largest, e.smallest, g, spectral::kExtremeTol);
    res["second_largest"] = e.largest;
    res["smallest"] = e.smallest;
    res["residual_second_largest"] = e.residual_largest;
    res["residual_smallest"] = e.residual_smallest;
    res["converged"] = e.converged;
    res["isa"] = e.isa;
    res["ramanujan"] = {{"bound", cert.bound}, {"margin", cert.margin}, {"pass", cert.pass()}};
    pass = e.converged;
  } else {
    throw ParameterError("--mode must be dense or extreme");
  }
  return emit(c, "spectrum", json::array({res}), pass);
}

int cmd_reps(const RunConfig& c) {
  const auto G = reps::BorelGroup::make(c.q, c.k, c.n);
  const auto T = reps::irrep_inventory(G, c.seed);
  json dims = json::object();
  for (auto [d, k] : T.dimension_counts) dims[std::to_string(d)] = k;
  json res{{"order", G.order}, {"irreps", T.irreps.size()}, {"sum_dim_sq", T.sum_dim_sq}, {"dimensions", dims},
           {"orthonormality_defect", T.orthonormality_defect}, {"levels_ok", T.levels_ok}};
  if (!c.out.empty()) {
    std::ostringstream os;
    T.write_csv(os, G);
    write_atomic(replace_ext(c.out, ".csv"), os.str());
  }
  return emit(c, "reps", json::array({res}), T.complete && T.levels_ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boxspace: LPS graphs, congruence kernels, homology covers and Borel representations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  RunConfig c;
  auto common = [&](CLI::App* s) {
    s->add_option("--p", c.p, "quaternion prime, 1 mod 4")->capture_default_str();
    s->add_option("--q", c.q, "odd prime modulus")->capture_default_str();
    s->add_option("--n", c.n, "level")->capture_default_str();
    s->add_option("--k", c.k, "kernel depth")->capture_default_str();
    s->add_option("--m", c.m, "cover coefficient modulus")->capture_default_str();
    s->add_option("--mode", c.mode, "dense|extreme")->check(CLI::IsMember({"dense", "extreme"}))->capture_default_str();
    s->add_option("--seed", c.seed)->capture_default_str();
    s->add_option("--out", c.out, "report path (stdout if omitted)");
    s->add_option("--cap-elements", c.cap_elements)->capture_default_str();
    s->add_option("--cap-vertices", c.cap_vertices)->capture_default_str();
    s->add_option("--graph", c.graph_file, "edge-list file");
    s->add_option("--named", c.named, "cycle:N complete:N path:N petersen k33 psl23");
    s->add_option("--isa", c.isa, "force scalar|avx2|neon");
    s->add_flag("--timings", c.timings, "include wall-clock seconds (breaks byte-identity)");
  };
  auto* feasible = app.add_subcommand("feasible", "minimal level for the expander construction");
  auto* pipeline = app.add_subcommand("pipeline", "run an acceptance bundle");
  pipeline->add_option("suite", c.suite, "hensel|subgroups|covers|spectra|poincare|reps|loops|ramanujan|all")->required();
  auto* cayley = app.add_subcommand("cayley", "build the LPS Cayley graph of PSL(2, Z/q^n)");
  auto* cover = app.add_subcommand("cover", "m-homology cover of a graph");
  auto* spectrum = app.add_subcommand("spectrum", "adjacency spectrum (dense) or extremes (Lanczos)");
  auto* repcmd = app.add_subcommand("reps", "irreducible representations of B_{k,n}");
  for (auto* s : {feasible, pipeline, cayley, cover, spectrum, repcmd}) common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (!c.isa.empty()) {
      const auto isa = simd::parse_isa(c.isa);
      if (!isa || !simd::isa_available(*isa)) throw ParameterError("ISA '" + c.isa + "' unavailable");
      simd::force_isa(isa);
    }
    if (*feasible) return cmd_feasible(c);
    if (*pipeline) return cmd_pipeline(c);
    if (*cayley) return cmd_cayley(c);
    if (*cover) {
      if (c.graph_file.empty() && c.named.empty()) throw ParameterError("cover needs --graph or --named");
      return cmd_cover(c);
    }
    if (*spectrum) return cmd_spectrum(c);
    if (*repcmd) return cmd_reps(c);
  } catch (const ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
