#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ricci/complex.hpp"

namespace ricci {

// ------------------------------------------------------------- edge lists

// A complex together with the original vertex labels (dense ids are an
// implementation detail; files and the CLI speak labels).
struct LabeledComplex {
  Complex2 complex;
  std::vector<std::string> labels;

  VertexId id_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return static_cast<VertexId>(i);
    fail(ErrorCode::ParseError, "unknown vertex label '" + label + "'");
  }
};

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i + 1);
  return labels;
}

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

[[noreturn]] inline void parse_fail(int line_no, const std::string& reason) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + reason);
}

}  // namespace detail

// Text format: one edge per line as "u v" or "u v length", faces as
// "f u v w ...", comments from '#' to end of line.  Labels are arbitrary
// whitespace-free strings, mapped to dense ids in order of first appearance.
inline LabeledComplex parse_edge_list(const std::string& text) {
  std::vector<std::string> labels;
  std::map<std::string, VertexId> ids;
  auto intern = [&](const std::string& label) {
    auto it = ids.find(label);
    if (it != ids.end()) return it->second;
    const VertexId id = static_cast<VertexId>(labels.size());
    ids.emplace(label, id);
    labels.push_back(label);
    return id;
  };

  std::vector<EdgeSpec> edges;
  std::vector<Face> faces;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.front() == "f") {
      if (tokens.size() < 4) detail::parse_fail(line_no, "a face needs at least 3 vertices");
      Face face;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        auto it = ids.find(tokens[k]);
        if (it == ids.end())
          detail::parse_fail(line_no, "face vertex '" + tokens[k] + "' never appeared in an edge");
        face.push_back(it->second);
      }
      faces.push_back(std::move(face));
      continue;
    }
    if (tokens.size() != 2 && tokens.size() != 3)
      detail::parse_fail(line_no, "expected 'u v [length]'");
    if (tokens[0] == tokens[1]) detail::parse_fail(line_no, "loop edge '" + tokens[0] + "'");
    const VertexId u = intern(tokens[0]);
    const VertexId v = intern(tokens[1]);
    Rat length(1);
    if (tokens.size() == 3) {
      try {
        length = rat_from_string(tokens[2]);
      } catch (const Error& e) {
        detail::parse_fail(line_no, e.what());
      }
    }
    edges.push_back({u, v, length});
  }
  std::optional<std::vector<Face>> face_arg;
  if (!faces.empty()) face_arg = std::move(faces);
  return {build_complex(static_cast<int>(labels.size()), edges, face_arg), std::move(labels)};
}

inline std::string serialize_edge_list(const Complex2& c,
                                       const std::vector<std::string>& labels = {}) {
  const auto names = labels.empty() ? default_labels(c.vertex_count()) : labels;
  if (static_cast<int>(names.size()) != c.vertex_count())
    fail(ErrorCode::ShapeMismatch, "label count differs from vertex count");
  std::ostringstream out;
  for (const auto& [u, v] : c.edges())
    out << names[static_cast<std::size_t>(u)] << ' ' << names[static_cast<std::size_t>(v)]
        << ' ' << rat_to_string(c.edge_length(u, v)) << '\n';
  if (c.faces())
    for (const auto& face : *c.faces()) {
      out << 'f';
      for (const VertexId w : face) out << ' ' << names[static_cast<std::size_t>(w)];
      out << '\n';
    }
  return out.str();
}

// ---------------------------------------------------------------- OFF files

namespace detail {

// Square root of a nonnegative rational: exact when the value is a perfect
// square, otherwise the nearest double converted back to an exact (dyadic)
// rational, so downstream arithmetic stays rational either way.
inline Rat rational_sqrt(const Rat& v) {
  if (v < 0) fail(ErrorCode::NonPositiveLength, "negative squared length");
  mpz_class num = v.get_num(), den = v.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn) / Rat(rd);
  }
  return Rat(std::sqrt(v.get_d()));
}

}  // namespace detail

// Minimal OFF mesh subset: "OFF" header, counts, vertex coordinate lines,
// face lines "k i1 ... ik" with 0-based indices.  Edges are the sides of the
// faces.  Lengths default to 1 so combinatorial results are unchanged by the
// embedding; pass euclidean_lengths to measure edges from the coordinates.
inline Complex2 parse_off(const std::string& text, bool euclidean_lengths = false) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    for (auto& tok : detail::tokenize(line)) tokens.push_back(tok);
  }
  std::size_t pos = 0;
  auto next = [&]() -> const std::string& {
    if (pos >= tokens.size()) fail(ErrorCode::ParseError, "unexpected end of OFF data");
    return tokens[pos++];
  };
  auto next_int = [&](const char* what) {
    const std::string& tok = next();
    try {
      std::size_t used = 0;
      const int value = std::stoi(tok, &used);
      if (used != tok.size() || value < 0) throw std::invalid_argument(tok);
      return value;
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, std::string("bad ") + what + " '" + tok + "'");
    }
  };
  if (next() != "OFF") fail(ErrorCode::ParseError, "missing OFF header");
  const int nv = next_int("vertex count");
  const int nf = next_int("face count");
  next_int("edge count");  // present in the format; edges are derived from faces

  std::vector<std::array<Rat, 3>> coords(static_cast<std::size_t>(nv));
  for (auto& p : coords)
    for (auto& x : p) x = rat_from_string(next());

  std::vector<Face> faces;
  std::map<std::pair<VertexId, VertexId>, bool> seen;
  std::vector<EdgeSpec> edges;
  for (int f = 0; f < nf; ++f) {
    const int k = next_int("face size");
    if (k < 3) fail(ErrorCode::ParseError, "face with fewer than 3 vertices");
    Face face;
    for (int t = 0; t < k; ++t) {
      const int idx = next_int("face index");
      if (idx >= nv) fail(ErrorCode::ParseError, "face index out of range");
      face.push_back(static_cast<VertexId>(idx));
    }
    for (int t = 0; t < k; ++t) {
      VertexId u = face[static_cast<std::size_t>(t)];
      VertexId v = face[static_cast<std::size_t>((t + 1) % k)];
      if (u == v) fail(ErrorCode::ParseError, "degenerate face edge");
      if (u > v) std::swap(u, v);
      if (seen.emplace(std::make_pair(u, v), true).second) {
        Rat length(1);
        if (euclidean_lengths) {
          Rat sq(0);
          for (int axis = 0; axis < 3; ++axis) {
            const Rat diff = coords[static_cast<std::size_t>(u)][static_cast<std::size_t>(axis)] -
                             coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(axis)];
            sq += diff * diff;
          }
          length = detail::rational_sqrt(sq);
        }
        edges.push_back({u, v, length});
      }
    }
    faces.push_back(std::move(face));
  }
  return build_complex(nv, edges, faces);
}

// ------------------------------------------------------------------ reports

struct EdgeReport {
  std::string u, v;  // vertex labels
  int d = 0, dp = 0;
  Rat ric, kappa_one, jost_liu;
  std::optional<Rat> forman;  // absent when the complex has no face list
  Rat t_used;
  bool certificate_valid = false;

  bool operator==(const EdgeReport&) const = default;
};

struct SummaryReport {
  Rat rho;
  std::optional<Rat> myers_bound;  // absent unless rho > 0
  Rat diameter;
  bool sharp = false;

  bool operator==(const SummaryReport&) const = default;
};

struct ReportDocument {
  std::vector<EdgeReport> edges;
  std::optional<SummaryReport> summary;

  bool operator==(const ReportDocument&) const = default;
};

inline std::string to_json(const ReportDocument& doc) {
  nlohmann::json j;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : doc.edges) {
    nlohmann::json row;
    row["u"] = e.u;
    row["v"] = e.v;
    row["d"] = e.d;
    row["dp"] = e.dp;
    row["ric"] = rat_to_string(e.ric);
    row["kappa_one"] = rat_to_string(e.kappa_one);
    row["jost_liu"] = rat_to_string(e.jost_liu);
    if (e.forman)
      row["forman"] = rat_to_string(*e.forman);
    else
      row["forman"] = nullptr;
    row["t_used"] = rat_to_string(e.t_used);
    row["certificate_valid"] = e.certificate_valid;
    j["edges"].push_back(std::move(row));
  }
  if (doc.summary) {
    nlohmann::json s;
    s["rho"] = rat_to_string(doc.summary->rho);
    if (doc.summary->myers_bound)
      s["myers_bound"] = rat_to_string(*doc.summary->myers_bound);
    else
      s["myers_bound"] = nullptr;
    s["diameter"] = rat_to_string(doc.summary->diameter);
    s["sharp"] = doc.summary->sharp;
    j["summary"] = std::move(s);
  }
  return j.dump(2) + "\n";
}

inline ReportDocument report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  ReportDocument doc;
  for (const auto& row : j.at("edges")) {
    EdgeReport e;
    e.u = row.at("u").get<std::string>();
    e.v = row.at("v").get<std::string>();
    e.d = row.at("d").get<int>();
    e.dp = row.at("dp").get<int>();
    e.ric = rat_from_string(row.at("ric").get<std::string>());
    e.kappa_one = rat_from_string(row.at("kappa_one").get<std::string>());
    e.jost_liu = rat_from_string(row.at("jost_liu").get<std::string>());
    if (!row.at("forman").is_null())
      e.forman = rat_from_string(row.at("forman").get<std::string>());
    e.t_used = rat_from_string(row.at("t_used").get<std::string>());
    e.certificate_valid = row.at("certificate_valid").get<bool>();
    doc.edges.push_back(std::move(e));
  }
  if (j.contains("summary")) {
    const auto& s = j.at("summary");
    SummaryReport sum;
    sum.rho = rat_from_string(s.at("rho").get<std::string>());
    if (!s.at("myers_bound").is_null())
      sum.myers_bound = rat_from_string(s.at("myers_bound").get<std::string>());
    sum.diameter = rat_from_string(s.at("diameter").get<std::string>());
    sum.sharp = s.at("sharp").get<bool>();
    doc.summary = std::move(sum);
  }
  return doc;
}

namespace detail {

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace detail

// CSV encoding: one uniform schema with a leading record-type column so the
// per-edge rows and the optional summary row share a single table; empty
// cells encode absent optionals.  Carries exactly the JSON fields.
inline std::string to_csv(const ReportDocument& doc) {
  std::ostringstream out;
  out << "type,u,v,d,dp,ric,kappa_one,jost_liu,forman,t_used,certificate_valid,"
         "rho,myers_bound,diameter,sharp\n";
  for (const auto& e : doc.edges) {
    out << "edge," << detail::csv_quote(e.u) << ',' << detail::csv_quote(e.v) << ',' << e.d
        << ',' << e.dp << ',' << rat_to_string(e.ric) << ',' << rat_to_string(e.kappa_one)
        << ',' << rat_to_string(e.jost_liu) << ','
        << (e.forman ? rat_to_string(*e.forman) : "") << ',' << rat_to_string(e.t_used)
        << ',' << (e.certificate_valid ? "true" : "false") << ",,,,\n";
  }
  if (doc.summary) {
    const auto& s = *doc.summary;
    out << "summary,,,,,,,,,,," << rat_to_string(s.rho) << ','
        << (s.myers_bound ? rat_to_string(*s.myers_bound) : "") << ','
        << rat_to_string(s.diameter) << ',' << (s.sharp ? "true" : "false") << '\n';
  }
  return out.str();
}

inline ReportDocument report_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::ParseError, "empty CSV report");
  ReportDocument doc;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = detail::csv_split(line);
    if (f.size() != 15) fail(ErrorCode::ParseError, "malformed CSV row: " + line);
    if (f[0] == "edge") {
      EdgeReport e;
      e.u = f[1];
      e.v = f[2];
      e.d = std::stoi(f[3]);
      e.dp = std::stoi(f[4]);
      e.ric = rat_from_string(f[5]);
      e.kappa_one = rat_from_string(f[6]);
      e.jost_liu = rat_from_string(f[7]);
      if (!f[8].empty()) e.forman = rat_from_string(f[8]);
      e.t_used = rat_from_string(f[9]);
      e.certificate_valid = (f[10] == "true");
      doc.edges.push_back(std::move(e));
    } else if (f[0] == "summary") {
      SummaryReport s;
      s.rho = rat_from_string(f[11]);
      if (!f[12].empty()) s.myers_bound = rat_from_string(f[12]);
      s.diameter = rat_from_string(f[13]);
      s.sharp = (f[14] == "true");
      doc.summary = std::move(s);
    } else {
      fail(ErrorCode::ParseError, "unknown CSV record type '" + f[0] + "'");
    }
  }
  return doc;
}

inline std::string to_table(const ReportDocument& doc) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"edge", "d", "d'", "ric", "kappa^1", "jost-liu", "forman", "t", "certified"});
  for (const auto& e : doc.edges)
    rows.push_back({e.u + "-" + e.v, std::to_string(e.d), std::to_string(e.dp),
                    rat_to_string(e.ric), rat_to_string(e.kappa_one),
                    rat_to_string(e.jost_liu), e.forman ? rat_to_string(*e.forman) : "-",
                    rat_to_string(e.t_used), e.certificate_valid ? "yes" : "NO"});
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  std::ostringstream out;
  if (!doc.edges.empty()) {
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        out << row[k];
        if (k + 1 < row.size()) out << std::string(width[k] - row[k].size() + 2, ' ');
      }
      out << '\n';
    }
  }
  if (doc.summary) {
    const auto& s = *doc.summary;
    out << "rho = " << rat_to_string(s.rho)
        << "  myers_bound = " << (s.myers_bound ? rat_to_string(*s.myers_bound) : "-")
        << "  diameter = " << rat_to_string(s.diameter)
        << "  sharp = " << (s.sharp ? "yes" : "no") << '\n';
  }
  return out.str();
}

}  // namespace ricci
