// Command-line front end: build or load matroids, run the analysis pipeline,
// reproduce the catalog invariant table, and emit human- and machine-readable
// reports.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "whpp/analysis.hpp"
#include "whpp/builders.hpp"
#include "whpp/quadrangle.hpp"

using json = nlohmann::json;
using namespace whpp;

namespace {

struct StageTimer {
  bool enabled = false;
  std::chrono::steady_clock::time_point last = std::chrono::steady_clock::now();
  void mark(const std::string& stage) {
    auto now = std::chrono::steady_clock::now();
    if (enabled) {
      auto us = std::chrono::duration_cast<std::chrono::microseconds>(now - last).count();
      std::cerr << "[time] " << stage << ": " << us << " us\n";
    }
    last = now;
  }
};

Matroid load_from_file(const std::string& kind, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, path + ": cannot open file");
  try {
    if (kind == "bases") return read_bases(in);
    if (kind == "graph") {
      auto [edges, nv] = read_graph(in);
      return graphic(edges, nv);
    }
    if (kind == "gfmatrix") return from_matrix(read_gf_matrix(in));
    return from_matrix(read_rational_matrix(in));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::pair<int, int> parse_two_ints(const std::string& spec, const std::string& what) {
  auto comma = spec.find(',');
  if (comma == std::string::npos)
    throw Error(ErrorCode::Parse, what + " expects two comma-separated integers");
  try {
    return {std::stoi(spec.substr(0, comma)), std::stoi(spec.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, what + ": bad integer in \"" + spec + "\"");
  }
}

/// Input descriptors: catalog:NAME, uniform:r,n, pg:m,q, ag:m,q, graph:PATH,
/// gfmatrix:PATH, qmatrix:PATH, bases:PATH.
Matroid resolve_descriptor(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::Parse,
                "bad input descriptor \"" + spec +
                    "\" (expected kind:value, e.g. catalog:F7 or uniform:3,7)");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "catalog") return catalog(rest);
  if (kind == "uniform") {
    auto [r, n] = parse_two_ints(rest, "uniform");
    return uniform(r, n);
  }
  if (kind == "pg") {
    auto [m, q] = parse_two_ints(rest, "pg");
    return projective_geometry(m, q);
  }
  if (kind == "ag") {
    auto [m, q] = parse_two_ints(rest, "ag");
    return affine_geometry(m, q);
  }
  if (kind == "graph" || kind == "gfmatrix" || kind == "qmatrix" || kind == "bases")
    return load_from_file(kind, rest);
  throw Error(ErrorCode::Parse, "unknown input kind \"" + kind + "\"");
}

json verdict_to_json(const Verdict& v) {
  json torsion = json::array();
  for (const BigInt& t : v.tutte_torsion) torsion.push_back(t.str());
  return json{{"n", v.n},
              {"r", v.r},
              {"basis_count", v.basis_count},
              {"z", v.z},
              {"dim_V", v.dim_V},
              {"dim_W", v.dim_W},
              {"inner_free_rank", v.inner_free_rank},
              {"tutte_free_rank", v.tutte_free_rank},
              {"tutte_torsion", torsion},
              {"reduction_applies", v.reduction_applies},
              {"is_binary", v.is_binary},
              {"is_regular", v.is_regular},
              {"is_projective_geometry", v.is_projective_geometry},
              {"whpp_status", to_string(v.whpp_status)},
              {"justification", v.justification}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, path + ": cannot open for writing");
  out << content;
}

std::string torsion_str(const std::vector<BigInt>& torsion) {
  std::string out = "[";
  for (size_t i = 0; i < torsion.size(); ++i) {
    if (i) out += ",";
    out += torsion[i].str();
  }
  return out + "]";
}

int cmd_analyze(const std::string& spec, const std::string& json_path,
                const std::string& matrix_path, const std::string& quad_path, bool timings) {
  StageTimer timer;
  timer.enabled = timings;
  Matroid m = resolve_descriptor(spec);
  timer.mark("build");
  auto quads = enumerate_degenerate_quadrangles(m);
  timer.mark("quadrangles");
  Verdict v = whpp_verdict(m);
  timer.mark("verdict");

  std::cout << "input: " << spec << "\n";
  std::cout << "n=" << v.n << " r=" << v.r << " |B|=" << v.basis_count << " z=" << v.z << "\n";
  std::cout << "quadrangles: " << quads.size() << "\n";
  std::cout << "dim_V=" << v.dim_V << " dim_W=" << v.dim_W
            << " inner_free_rank=" << v.inner_free_rank << "\n";
  std::cout << "tutte group: free rank " << v.tutte_free_rank << ", torsion "
            << torsion_str(v.tutte_torsion) << "\n";
  std::cout << "reduction_applies=" << (v.reduction_applies ? "yes" : "no")
            << " binary=" << (v.is_binary ? "yes" : "no")
            << " regular=" << (v.is_regular ? "yes" : "no")
            << " projective_geometry=" << (v.is_projective_geometry ? "yes" : "no") << "\n";
  std::cout << "whpp: " << to_string(v.whpp_status) << "\n";
  std::cout << "justification: " << v.justification << "\n";

  if (!json_path.empty()) {
    json report{{"input_descriptor", spec},
                {"quadrangle_count", quads.size()},
                {"verdict", verdict_to_json(v)}};
    write_file(json_path, report.dump(2) + "\n");
  }
  if (!matrix_path.empty())
    write_file(matrix_path, dump_matrix(relation_matrix(m).to_integer_matrix()));
  if (!quad_path.empty()) write_file(quad_path, dump_quadrangles(m));
  timer.mark("reports");
  return 0;
}

int cmd_table1(const std::string& json_path) {
  bool all_match = true;
  json rows = json::array();
  std::printf("%-15s %3s %7s %11s %6s %9s  %s\n", "name", "n", "dim_V", "dim_V(exp)", "|B|",
              "|B|(exp)", "match");
  for (const auto& entry : catalog_entries()) {
    Matroid m = catalog(entry.name);
    int dv = dim_V(m);
    bool match = m.ground_size() == entry.n && dv == entry.expected_dim_v &&
                 static_cast<long long>(m.num_bases()) == entry.expected_bases;
    all_match = all_match && match;
    std::printf("%-15s %3d %7d %11d %6zu %9lld  %s\n", entry.name.c_str(), m.ground_size(), dv,
                entry.expected_dim_v, m.num_bases(), entry.expected_bases,
                match ? "ok" : "MISMATCH");
    rows.push_back(json{{"name", entry.name},
                        {"n", m.ground_size()},
                        {"dim_V", dv},
                        {"dim_V_expected", entry.expected_dim_v},
                        {"basis_count", m.num_bases()},
                        {"basis_count_expected", entry.expected_bases},
                        {"match", match}});
  }
  std::printf("%s\n", all_match ? "all rows match" : "MISMATCHES PRESENT");
  if (!json_path.empty()) write_file(json_path, rows.dump(2) + "\n");
  return all_match ? 0 : 2;
}

int cmd_catalog_list() {
  std::printf("%-15s %3s %5s %6s  %s\n", "name", "n", "|B|", "dim_V", "construction");
  for (const auto& entry : catalog_entries())
    std::printf("%-15s %3d %5lld %6d  %s\n", entry.name.c_str(), entry.n, entry.expected_bases,
                entry.expected_dim_v, entry.construction.c_str());
  return 0;
}

int cmd_quadrangles(const std::string& spec, const std::string& dump_path) {
  Matroid m = resolve_descriptor(spec);
  std::string dump = dump_quadrangles(m);
  if (dump_path.empty())
    std::cout << dump;
  else
    write_file(dump_path, dump);
  return 0;
}

int cmd_tutte(const std::string& spec, const std::string& json_path,
              const std::string& matrix_path) {
  Matroid m = resolve_descriptor(spec);
  AbelianInvariants inv = tutte_invariants(m);
  std::cout << "input: " << spec << "\n";
  std::cout << "generators: " << m.num_bases() << " basis symbols + epsilon\n";
  std::cout << "tutte group: free rank " << inv.free_rank << ", torsion "
            << torsion_str(inv.torsion) << "\n";
  if (!json_path.empty()) {
    json torsion = json::array();
    for (const BigInt& t : inv.torsion) torsion.push_back(t.str());
    json report{{"input_descriptor", spec},
                {"tutte_free_rank", inv.free_rank},
                {"tutte_torsion", torsion}};
    write_file(json_path, report.dump(2) + "\n");
  }
  if (!matrix_path.empty())
    write_file(matrix_path, dump_matrix(signed_tutte_relations(m).to_integer_matrix()));
  return 0;
}

int cmd_verify_weights(const std::string& spec, const std::string& weights_path) {
  Matroid m = resolve_descriptor(spec);
  std::ifstream in(weights_path);
  if (!in) throw Error(ErrorCode::Parse, weights_path + ": cannot open file");
  WeightFunction w;
  try {
    w = read_weights(in, m);
  } catch (const Error& e) {
    throw Error(e.code(), weights_path + ": " + e.what());
  }
  QuadrangleCheck check = verify_quadrangle_relations(m, w);
  if (check.ok) {
    std::cout << "PASS: all degenerate-quadrangle products balance\n";
    return 0;
  }
  const auto& q = *check.witness;
  std::cout << "FAIL: quadrangle S=" << format_subset(q.prefix) << " diag={" << q.i << "," << q.j
            << "}/{" << q.k << "," << q.l << "} bases=" << q.b1 << "," << q.b2 << "," << q.b3
            << "," << q.b4 << " violates w(B1)w(B3) = w(B2)w(B4)\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matroid analysis: quadrangle relations, Tutte group invariants and "
               "weak half-plane property verdicts"};
  app.require_subcommand(1);

  std::string spec, json_path, matrix_path, quad_path, weights_path, catalog_action;
  bool timings = false;

  CLI::App* analyze = app.add_subcommand("analyze", "full analysis of one matroid");
  analyze->add_option("spec", spec, "input descriptor (catalog:NAME, uniform:r,n, pg:m,q, "
                                    "ag:m,q, graph:PATH, gfmatrix:PATH, qmatrix:PATH, bases:PATH)")
      ->required();
  analyze->add_option("--json", json_path, "write the machine-readable report here");
  analyze->add_option("--dump-matrix", matrix_path, "write the plain relation matrix here");
  analyze->add_option("--dump-quadrangles", quad_path, "write the quadrangle list here");
  analyze->add_flag("--timings", timings, "print per-stage timings to stderr");

  CLI::App* table1 = app.add_subcommand("table1", "recompute the full catalog invariant table");
  table1->add_option("--json", json_path, "write the row records here");

  CLI::App* cat = app.add_subcommand("catalog", "catalog operations");
  cat->add_option("action", catalog_action, "only \"list\" is available")->required();

  CLI::App* quad = app.add_subcommand("quadrangles", "dump the degenerate quadrangles");
  quad->add_option("spec", spec, "input descriptor")->required();
  quad->add_option("--dump-quadrangles", quad_path, "write to a file instead of stdout");

  CLI::App* tutte = app.add_subcommand("tutte", "Tutte group invariants");
  tutte->add_option("spec", spec, "input descriptor")->required();
  tutte->add_option("--json", json_path, "write the machine-readable report here");
  tutte->add_option("--dump-matrix", matrix_path, "write the signed relation matrix here");

  CLI::App* verify = app.add_subcommand("verify-weights", "check a weight file against the "
                                                          "quadrangle relations");
  verify->add_option("spec", spec, "input descriptor")->required();
  verify->add_option("weights", weights_path, "weight file: one \"e1 ... er : a/b\" per basis")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (analyze->parsed()) return cmd_analyze(spec, json_path, matrix_path, quad_path, timings);
    if (table1->parsed()) return cmd_table1(json_path);
    if (cat->parsed()) {
      if (catalog_action != "list") {
        std::cerr << "error: unknown catalog action \"" << catalog_action << "\"\n";
        return 1;
      }
      return cmd_catalog_list();
    }
    if (quad->parsed()) return cmd_quadrangles(spec, quad_path);
    if (tutte->parsed()) return cmd_tutte(spec, json_path, matrix_path);
    if (verify->parsed()) return cmd_verify_weights(spec, weights_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ChecksumMismatch ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
