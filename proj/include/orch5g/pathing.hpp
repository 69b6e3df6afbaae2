#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orch5g/units.hpp"

namespace orch5g::pathing {

// A directed edge in whatever graph the caller assembles: physical links,
// virtual LSP adjacencies, candidate tunnels. Edge ids drive tie-breaking so
// they must be unique and stable.
struct Edge {
  std::string id;
  std::string src;
  std::string dst;
  LatencyNs latency_ns = 0;
};

struct Path {
  std::vector<int> edges;  // indices into the caller's edge list
  LatencyNs total_ns = 0;
};

// All simple paths from src to dst (node-simple; src == dst yields the empty
// path). Intended for the desk-scale graphs this emulator works on.
std::vector<Path> all_simple_paths(const std::vector<Edge>& edges, const std::string& src,
                                   const std::string& dst);

// Orders by (total latency, lexicographic edge-id sequence).
bool path_less(const std::vector<Edge>& edges, const Path& a, const Path& b);

// The minimum path under path_less, or nullopt if dst is unreachable.
std::optional<Path> min_latency_path(const std::vector<Edge>& edges, const std::string& src,
                                     const std::string& dst);

// Orders by (total latency, edge count, lexicographic edge-id sequence).
// For graphs where one logical hop can be offered as several chained
// candidate edges of equal total latency, this prefers the single-edge
// composition over a chain of fragments.
bool compact_path_less(const std::vector<Edge>& edges, const Path& a, const Path& b);

// The minimum path under compact_path_less, or nullopt if dst is unreachable.
std::optional<Path> min_compact_path(const std::vector<Edge>& edges, const std::string& src,
                                     const std::string& dst);

// The first k paths in path_less order.
std::vector<Path> k_shortest_paths(const std::vector<Edge>& edges, const std::string& src,
                                   const std::string& dst, int k);

}  // namespace orch5g::pathing
