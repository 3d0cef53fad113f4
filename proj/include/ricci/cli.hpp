#pragma once

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ricci/curvature.hpp"
#include "ricci/generators.hpp"
#include "ricci/io.hpp"

namespace ricci {

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (const char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline int parse_int_param(const std::string& tok) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::BadParameter, "expected an integer, got '" + tok + "'");
  }
}

// The complex a subcommand operates on, with its labels and (when generated)
// the generator context used to bind probe edges and the Laplacian walk.
struct CliInput {
  LabeledComplex lc;
  std::vector<ProbeEdge> probes;
  std::optional<std::array<Rat, 3>> box;  // parallelepiped parameters
};

// --generate NAME[:params] with NAME one of the solids, star_pair:d,d',
// parallelepiped:a,b,c or tiling:kind[,radius].
inline CliInput generated_input(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  std::vector<std::string> params;
  if (colon != std::string::npos) params = split(spec.substr(colon + 1), ',');
  auto arity = [&](std::size_t want) {
    if (params.size() != want)
      fail(ErrorCode::BadParameter,
           "'" + head + "' takes " + std::to_string(want) + " parameter(s)");
  };
  CliInput input;
  Generated g;
  if (head == "platonic") {
    arity(1);
    g = platonic(params[0]);
  } else if (head == "tetrahedron" || head == "cube" || head == "octahedron" ||
             head == "dodecahedron" || head == "icosahedron") {
    arity(0);
    g = platonic(head);
  } else if (head == "star_pair" || head == "generic_star_pair") {
    arity(2);
    g = generic_star_pair(parse_int_param(params[0]), parse_int_param(params[1]));
  } else if (head == "parallelepiped") {
    arity(3);
    const Rat a = rat_from_string(params[0]);
    const Rat b = rat_from_string(params[1]);
    const Rat c = rat_from_string(params[2]);
    g = parallelepiped(a, b, c);
    input.box = {{a, b, c}};
  } else if (head == "tiling" || head == "tiling_patch") {
    if (params.size() != 1 && params.size() != 2)
      fail(ErrorCode::BadParameter, "tiling takes kind[,radius]");
    const int radius = params.size() == 2 ? parse_int_param(params[1]) : 4;
    g = tiling_patch(params[0], radius);
  } else {
    fail(ErrorCode::UnknownName, "unknown generator '" + head + "'");
  }
  input.lc.labels = default_labels(g.complex.vertex_count());
  input.lc.complex = std::move(g.complex);
  input.probes = std::move(g.probes);
  return input;
}

inline CliInput file_input(const std::string& path, bool euclidean) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  CliInput input;
  if (first != std::string::npos && text.compare(first, 3, "OFF") == 0) {
    input.lc.complex = parse_off(text, euclidean);
    input.lc.labels = default_labels(input.lc.complex.vertex_count());
  } else {
    input.lc = parse_edge_list(text);
  }
  return input;
}

inline WalkSpec bind_walk(const CliInput& input, const std::string& walk_name) {
  if (walk_name == "uniform") return WalkSpec::uniform();
  if (walk_name != "laplacian")
    fail(ErrorCode::BadParameter, "--walk must be uniform or laplacian");
  if (input.box)
    return WalkSpec::laplacian(
        parallelepiped_laplacian((*input.box)[0], (*input.box)[1], (*input.box)[2]));
  return WalkSpec::laplacian(harmonic_laplacian(input.lc.complex));
}

inline EdgeReport edge_report(const CliInput& input, VertexId u, VertexId v,
                              const WalkSpec& walk, const std::optional<Time>& t0) {
  const Complex2& c = input.lc.complex;
  if (!c.has_edge(u, v))
    fail(ErrorCode::NotAnEdge,
         "'" + input.lc.labels[static_cast<std::size_t>(u)] + "," +
             input.lc.labels[static_cast<std::size_t>(v)] + "' is not an edge");
  EdgeReport e;
  e.u = input.lc.labels[static_cast<std::size_t>(u)];
  e.v = input.lc.labels[static_cast<std::size_t>(v)];
  e.d = degree(c, u);
  e.dp = degree(c, v);
  const EdgeCurvature ric = ollivier_ricci(c, u, v, walk, t0);
  const EdgeCurvature one = kappa_one(c, u, v, walk);
  e.ric = ric.value;
  e.kappa_one = one.value;
  e.jost_liu = jost_liu_bound(c, u, v);
  if (c.faces()) e.forman = forman_curvature(c, u, v);
  e.t_used = ric.t_used;
  e.certificate_valid = verify_certificate(ric.run.instance, ric.run.solution).valid() &&
                        verify_certificate(one.run.instance, one.run.solution).valid();
  return e;
}

inline void emit_report(const ReportDocument& doc, const std::string& format,
                        std::ostream& out) {
  if (format == "table")
    out << to_table(doc);
  else if (format == "csv")
    out << to_csv(doc);
  else if (format == "json")
    out << to_json(doc);
  else
    fail(ErrorCode::BadParameter, "--format must be table, csv or json");
}

inline bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownName:
    case ErrorCode::BadParameter:
    case ErrorCode::RadiusTooSmall:
    case ErrorCode::DegreeTooSmall:
    case ErrorCode::NonPositiveLength:
    case ErrorCode::NotAnEdge:
    case ErrorCode::SameVertex:
      return true;
    default:
      return false;
  }
}

}  // namespace detail

// Entry point shared by the binary and the tests.  Returns the process exit
// code: 0 success, 1 usage error, 2 computation error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Exact Ollivier-Ricci curvature of graphs and polyhedral surfaces"};
  app.require_subcommand(1);

  std::string input_path, generate_spec, edge_spec, t_spec;
  std::string walk_name = "uniform", format = "table", output_path, name;
  bool all_edges = false, certify = false, euclidean = false;

  auto add_source = [&](CLI::App* cmd) {
    auto* in = cmd->add_option("--input", input_path, "edge-list or OFF file");
    auto* gen = cmd->add_option("--generate", generate_spec, "built-in family NAME[:params]");
    in->excludes(gen);
    cmd->add_flag("--euclidean", euclidean, "derive OFF edge lengths from coordinates");
  };

  CLI::App* curvature = app.add_subcommand("curvature", "curvature of one or all edges");
  add_source(curvature);
  curvature->add_option("--edge", edge_spec, "vertex label pair U,V");
  curvature->add_flag("--all-edges", all_edges, "process every edge");
  curvature->add_option("--t", t_spec, "walk time for ric as an exact rational");
  curvature->add_option("--walk", walk_name, "uniform or laplacian");
  curvature->add_option("--format", format, "table, csv or json");
  curvature->add_flag("--certify", certify, "fail unless every dual certificate verifies");

  CLI::App* myers = app.add_subcommand("myers", "minimum curvature and diameter bound");
  add_source(myers);
  myers->add_option("--t", t_spec, "walk time for ric as an exact rational");
  myers->add_option("--walk", walk_name, "uniform or laplacian");
  myers->add_option("--format", format, "table, csv or json");

  CLI::App* compare = app.add_subcommand("compare", "ric vs kappa^1 vs bounds on probe edges");
  compare->add_option("--generate", generate_spec, "built-in family NAME[:params]")
      ->required();

  CLI::App* generate = app.add_subcommand("generate", "write a built-in family to a file");
  generate->add_option("name", name, "family NAME[:params]")->required();
  generate->add_option("--output", output_path, "destination file (default stdout)");

  std::vector<const char*> argv;
  argv.push_back("ricci");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (generate->parsed()) {
      const detail::CliInput input = detail::generated_input(name);
      const std::string text = serialize_edge_list(input.lc.complex, input.lc.labels);
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream file(output_path);
        if (!file) fail(ErrorCode::BadParameter, "cannot write '" + output_path + "'");
        file << text;
      }
      return 0;
    }

    if (compare->parsed()) {
      const detail::CliInput input = detail::generated_input(generate_spec);
      const Complex2& c = input.lc.complex;
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"probe", "edge", "d", "d'", "ric", "kappa^1", "jost-liu", "forman/3"});
      for (const auto& probe : input.probes) {
        const EdgeCurvature ric = ollivier_ricci(c, probe.u, probe.v);
        const EdgeCurvature one = kappa_one(c, probe.u, probe.v);
        const Rat forman3 = forman_curvature(c, probe.u, probe.v) / 3;
        rows.push_back({probe.label,
                        input.lc.labels[static_cast<std::size_t>(probe.u)] + "-" +
                            input.lc.labels[static_cast<std::size_t>(probe.v)],
                        std::to_string(degree(c, probe.u)), std::to_string(degree(c, probe.v)),
                        rat_to_string(ric.value), rat_to_string(one.value),
                        rat_to_string(jost_liu_bound(c, probe.u, probe.v)),
                        rat_to_string(forman3)});
      }
      std::vector<std::size_t> width(rows.front().size(), 0);
      for (const auto& row : rows)
        for (std::size_t k = 0; k < row.size(); ++k)
          width[k] = std::max(width[k], row[k].size());
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          out << row[k];
          if (k + 1 < row.size()) out << std::string(width[k] - row[k].size() + 2, ' ');
        }
        out << '\n';
      }
      return 0;
    }

    // curvature and myers share their input handling
    if (input_path.empty() && generate_spec.empty())
      fail(ErrorCode::BadParameter, "one of --input or --generate is required");
    const detail::CliInput input = input_path.empty()
                                       ? detail::generated_input(generate_spec)
                                       : detail::file_input(input_path, euclidean);
    const WalkSpec walk = detail::bind_walk(input, walk_name);
    std::optional<Time> t0;
    if (!t_spec.empty()) t0 = rat_from_string(t_spec);

    if (myers->parsed()) {
      const MyersReport report = myers_check(input.lc.complex, walk, t0);
      ReportDocument doc;
      doc.summary = SummaryReport{report.rho, report.bound, report.diameter, report.sharp};
      detail::emit_report(doc, format, out);
      return 0;
    }

    // curvature
    std::vector<std::pair<VertexId, VertexId>> targets;
    if (!edge_spec.empty()) {
      const auto parts = detail::split(edge_spec, ',');
      if (parts.size() != 2) fail(ErrorCode::BadParameter, "--edge wants 'U,V'");
      targets.emplace_back(input.lc.id_of(parts[0]), input.lc.id_of(parts[1]));
    } else if (all_edges || input.probes.empty()) {
      for (const auto& e : input.lc.complex.edges()) targets.push_back(e);
    } else {
      for (const auto& probe : input.probes) targets.emplace_back(probe.u, probe.v);
    }
    ReportDocument doc;
    for (const auto& [u, v] : targets)
      doc.edges.push_back(detail::edge_report(input, u, v, walk, t0));
    detail::emit_report(doc, format, out);
    if (certify)
      for (const auto& e : doc.edges)
        if (!e.certificate_valid)
          fail(ErrorCode::InvalidMeasure,
               "certificate verification failed on edge " + e.u + "," + e.v);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << " [" << error_code_name(e.code()) << "]\n";
    return detail::is_usage_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ricci
