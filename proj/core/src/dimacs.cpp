#include "shc/dimacs.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "shc/error.hpp"

namespace shc {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line_no, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(ErrorCode::SyntaxError, line_no,
                     "bad " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return value;
}

void apply_metadata(InstanceMetadata& meta, std::string_view key, std::string_view value, std::size_t line_no) {
  if (key == "k") {
    meta.k = parse_number<int>(value, line_no, "k");
  } else if (key == "rho") {
    meta.rho = parse_number<double>(value, line_no, "rho");
  } else if (key == "p") {
    meta.p = parse_number<double>(value, line_no, "p");
  } else if (key == "q") {
    meta.q = parse_number<double>(value, line_no, "q");
  } else if (key == "seed") {
    meta.seed = parse_number<std::uint64_t>(value, line_no, "seed");
  } else if (key == "n_communities") {
    meta.n_communities = parse_number<int>(value, line_no, "n_communities");
  }
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

Instance parse_instance(std::string_view text) {
  InstanceMetadata meta;
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::size_t problem_line = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<Vertex, Colour>> precolours;
  std::vector<std::size_t> precolour_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (tok[0] == "c") {
      if (tok.size() == 3) apply_metadata(meta, tok[1], tok[2], line_no);
    } else if (tok[0] == "p") {
      if (n) throw ParseError(ErrorCode::SyntaxError, line_no, "second problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError(ErrorCode::SyntaxError, line_no, "expected 'p edge <n> <m>'");
      }
      n = parse_number<std::size_t>(tok[2], line_no, "vertex count");
      declared_m = parse_number<std::size_t>(tok[3], line_no, "edge count");
      if (*n == 0) throw ParseError(ErrorCode::SyntaxError, line_no, "vertex count must be positive");
      problem_line = line_no;
    } else if (tok[0] == "e" || tok[0] == "v") {
      if (!n) throw ParseError(ErrorCode::SyntaxError, line_no, "data line before problem line");
      if (tok.size() != 3) throw ParseError(ErrorCode::SyntaxError, line_no, "expected two fields");
      auto a = parse_number<std::size_t>(tok[1], line_no, "vertex");
      if (a < 1 || a > *n) throw ParseError(ErrorCode::EndpointOutOfRange, line_no, "vertex out of 1..n");
      if (tok[0] == "e") {
        auto b = parse_number<std::size_t>(tok[2], line_no, "vertex");
        if (b < 1 || b > *n) throw ParseError(ErrorCode::EndpointOutOfRange, line_no, "vertex out of 1..n");
        if (a == b) throw ParseError(ErrorCode::SelfLoop, line_no, "self-loop");
        edges.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
      } else {
        auto c = parse_number<unsigned>(tok[2], line_no, "colour");
        if (c < 1 || c > 0xffffu) throw ParseError(ErrorCode::ColourOutOfRange, line_no, "colour must be >= 1");
        precolours.emplace_back(static_cast<Vertex>(a - 1), static_cast<Colour>(c));
        precolour_lines.push_back(line_no);
      }
    } else {
      throw ParseError(ErrorCode::SyntaxError, line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }

  if (!n) throw ParseError(ErrorCode::SyntaxError, line_no, "missing problem line");
  if (edges.size() != declared_m) {
    throw ParseError(ErrorCode::InconsistentHeader, problem_line,
                     "declared " + std::to_string(declared_m) + " edges, found " + std::to_string(edges.size()));
  }

  int k = 2;
  if (meta.k) {
    k = *meta.k;
  } else {
    for (const auto& [v, c] : precolours) k = std::max<int>(k, c);
  }
  if (k < 2) throw ParseError(ErrorCode::SyntaxError, problem_line, "k must be at least 2");
  meta.k = k;

  std::vector<Colour> assign(*n, kFree);
  for (std::size_t i = 0; i < precolours.size(); ++i) {
    const auto& [v, c] = precolours[i];
    if (c > k) {
      throw ParseError(ErrorCode::ColourOutOfRange, precolour_lines[i],
                       "colour " + std::to_string(c) + " exceeds k=" + std::to_string(k));
    }
    assign[v] = c;
  }

  return Instance{Graph::build(*n, edges), PartialColouring(k, std::move(assign)), meta};
}

std::string write_instance(const Graph& g, const PartialColouring& pc, const InstanceMetadata& meta) {
  std::string out;
  auto line = [&out](std::string_view a, std::string_view b) {
    out.append("c ").append(a).append(" ").append(b).append("\n");
  };
  line("k", std::to_string(pc.k()));
  if (meta.rho) line("rho", format_real(*meta.rho));
  if (meta.p) line("p", format_real(*meta.p));
  if (meta.q) line("q", format_real(*meta.q));
  if (meta.seed) line("seed", std::to_string(*meta.seed));
  if (meta.n_communities) line("n_communities", std::to_string(*meta.n_communities));

  out += "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  }
  for (std::size_t v = 0; v < pc.size(); ++v) {
    const Colour c = pc[static_cast<Vertex>(v)];
    if (c != kFree) out += "v " + std::to_string(v + 1) + " " + std::to_string(c) + "\n";
  }
  return out;
}

Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::filesystem::path& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << write_instance(inst.graph, inst.precolouring, inst.metadata);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::vector<int> read_ground_truth(const std::filesystem::path& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<int> communities(n, 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError(ErrorCode::SyntaxError, line_no, "expected '<vertex> <community>'");
    auto v = parse_number<std::size_t>(tok[0], line_no, "vertex");
    auto c = parse_number<int>(tok[1], line_no, "community");
    if (v < 1 || v > n) throw ParseError(ErrorCode::EndpointOutOfRange, line_no, "vertex out of 1..n");
    if (c < 1) throw ParseError(ErrorCode::ColourOutOfRange, line_no, "community must be >= 1");
    communities[v - 1] = c;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (communities[v] == 0) {
      throw Error(ErrorCode::InconsistentHeader, "no community for vertex " + std::to_string(v + 1));
    }
  }
  return communities;
}

void write_ground_truth(const std::filesystem::path& path, const std::vector<int>& communities) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  for (std::size_t v = 0; v < communities.size(); ++v) out << (v + 1) << ' ' << communities[v] << '\n';
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace shc
