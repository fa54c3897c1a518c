#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shc/colouring.hpp"
#include "shc/graph.hpp"

namespace shc {

/// Header metadata carried in `c <key> <value>` lines. Unknown comment lines
/// are ignored on read and never written.
struct InstanceMetadata {
  std::optional<int> k;
  std::optional<double> rho;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<std::uint64_t> seed;
  std::optional<int> n_communities;

  friend bool operator==(const InstanceMetadata&, const InstanceMetadata&) = default;
};

struct Instance {
  Graph graph;
  PartialColouring precolouring;
  InstanceMetadata metadata;
};

/// Parses the extended DIMACS edge format:
///
///   c <key> <value>      metadata (k, rho, p, q, seed, n_communities) or free comment
///   p edge <n> <m>       exactly one, before any e/v line
///   e <u> <v>            1-based endpoints
///   v <vertex> <colour>  precolour, colour in 1..k
///
/// k is taken from `c k` when present, otherwise from the largest precolour
/// (at least 2); the resolved k is always stored in metadata.k. Throws ParseError{SyntaxError | InconsistentHeader |
/// ColourOutOfRange | EndpointOutOfRange | SelfLoop}.
Instance parse_instance(std::string_view text);

/// Canonical serialisation: `c k` from pc.k(), remaining metadata lines in fixed key order, sorted e lines,
/// sorted v lines. Deterministic bytes; reals use shortest round-trip form.
std::string write_instance(const Graph& g, const PartialColouring& pc, const InstanceMetadata& meta);

Instance read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const Instance& inst);

/// Ground-truth sidecar: one `<vertex> <community>` line per vertex, 1-based.
std::vector<int> read_ground_truth(const std::filesystem::path& path, std::size_t n);
void write_ground_truth(const std::filesystem::path& path, const std::vector<int>& communities);

/// Shortest decimal text that parses back to the same double.
std::string format_real(double x);

}  // namespace shc
