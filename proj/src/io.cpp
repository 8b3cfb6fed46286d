#include "coc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace coc {

ParseError::ParseError(int line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

long long parse_number(std::istringstream& in, int line, const char* what) {
  long long value = 0;
  if (!(in >> value)) throw ParseError(line, std::string("expected ") + what);
  return value;
}

void expect_end(std::istringstream& in, int line) {
  std::string rest;
  if (in >> rest) throw ParseError(line, "unexpected trailing '" + rest + "'");
}

}  // namespace

InstanceFile parse_instance(std::istream& in) {
  InstanceFile file;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  long long edges_seen = 0;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::string format;
      if (!(ls >> format) || format != "coc") {
        throw ParseError(line_no, "header must read 'p coc <n> <m>'");
      }
      n = parse_number(ls, line_no, "vertex count");
      m = parse_number(ls, line_no, "edge count");
      expect_end(ls, line_no);
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      file.graph = Graph::with_vertices(static_cast<std::size_t>(n));
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "'" + tag + "' before header");
    if (tag == "e") {
      long long u = parse_number(ls, line_no, "edge endpoint");
      long long v = parse_number(ls, line_no, "edge endpoint");
      expect_end(ls, line_no);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line_no, "edge endpoint out of range 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(line_no, "self-loop");
      if (!file.graph.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1))) {
        throw ParseError(line_no, "duplicate edge");
      }
      ++edges_seen;
    } else if (tag == "l" || tag == "k") {
      long long value = parse_number(ls, line_no, "parameter value");
      expect_end(ls, line_no);
      if (tag == "l") {
        if (value < 1) throw ParseError(line_no, "ell must be positive");
        file.ell = static_cast<int>(value);
      } else {
        if (value < 0) throw ParseError(line_no, "k must be non-negative");
        file.k = static_cast<int>(value);
      }
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p coc' header");
  if (edges_seen != m) {
    throw ParseError(line_no, "header announces " + std::to_string(m) +
                                  " edges but " + std::to_string(edges_seen) +
                                  " were listed");
  }
  return file;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const COCInstance& inst) {
  const VertexSet& vs = inst.graph.vertices();
  std::vector<int> rank(inst.graph.id_bound(), 0);
  bool renamed = false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    rank[static_cast<std::size_t>(vs[i])] = static_cast<int>(i) + 1;
    renamed = renamed || vs[i] != static_cast<Vertex>(i);
  }
  if (renamed) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      out << "c vertex " << i + 1 << ' ' << vs[i] + 1 << '\n';
    }
  }
  out << "p coc " << vs.size() << ' ' << inst.graph.num_edges() << '\n';
  out << "l " << inst.ell << '\n';
  out << "k " << inst.k << '\n';
  for (auto [u, v] : inst.graph.edges()) {
    out << "e " << rank[static_cast<std::size_t>(u)] << ' '
        << rank[static_cast<std::size_t>(v)] << '\n';
  }
}

std::string format_instance(const COCInstance& inst) {
  std::ostringstream os;
  write_instance(os, inst);
  return os.str();
}

namespace {

nlohmann::json one_based(const VertexSet& s) {
  auto arr = nlohmann::json::array();
  for (Vertex v : s) arr.push_back(v + 1);
  return arr;
}

}  // namespace

nlohmann::json kernel_report(const COCInstance& original,
                             const KernelResult& result) {
  nlohmann::json report;
  report["schema"] = kReportSchema;
  report["ell"] = original.ell;
  report["original"] = {{"vertices", original.graph.num_vertices()},
                        {"edges", original.graph.num_edges()},
                        {"k", original.k}};
  report["kernel"] = {{"vertices", result.instance.graph.num_vertices()},
                      {"edges", result.instance.graph.num_edges()},
                      {"k", result.instance.k},
                      {"vertex_ids", one_based(result.instance.graph.vertices())}};
  report["verdict"] =
      result.verdict == Verdict::kReduced ? "reduced" : "trivial-no";
  report["dropped_small_components"] = one_based(result.dropped);
  auto steps = nlohmann::json::array();
  for (const auto& step : result.trace) {
    nlohmann::json s;
    s["x"] = one_based(step.x);
    s["y"] = one_based(step.y);
    s["x_size"] = step.x.size();
    s["k_before"] = step.k_before;
    s["k_after"] = step.k_after;
    s["lp_objective"] = to_string(step.lp_objective);
    s["lp_constraints"] = step.lp_constraints;
    if (step.probe_vertex) {
      s["probe_vertex"] = *step.probe_vertex + 1;
    } else {
      s["probe_vertex"] = nullptr;
    }
    steps.push_back(std::move(s));
  }
  report["steps"] = std::move(steps);
  auto objectives = nlohmann::json::array();
  for (const auto& r : result.lp_objectives) objectives.push_back(to_string(r));
  report["lp_objectives"] = std::move(objectives);
  return report;
}

}  // namespace coc
