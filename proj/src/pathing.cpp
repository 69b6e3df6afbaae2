#include "orch5g/pathing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orch5g::pathing {

namespace {

void dfs(const std::vector<Edge>& edges, const std::map<std::string, std::vector<int>>& out,
         const std::string& node, const std::string& dst, std::set<std::string>& visited,
         Path& current, std::vector<Path>& found) {
  if (node == dst) {
    found.push_back(current);
    return;
  }
  auto it = out.find(node);
  if (it == out.end()) return;
  for (int e : it->second) {
    const Edge& edge = edges[e];
    if (visited.count(edge.dst)) continue;
    visited.insert(edge.dst);
    current.edges.push_back(e);
    current.total_ns += edge.latency_ns;
    dfs(edges, out, edge.dst, dst, visited, current, found);
    current.total_ns -= edge.latency_ns;
    current.edges.pop_back();
    visited.erase(edge.dst);
  }
}

}  // namespace

std::vector<Path> all_simple_paths(const std::vector<Edge>& edges, const std::string& src,
                                   const std::string& dst) {
  std::map<std::string, std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) out[edges[i].src].push_back(i);

  std::vector<Path> found;
  std::set<std::string> visited{src};
  Path current;
  dfs(edges, out, src, dst, visited, current, found);
  return found;
}

bool path_less(const std::vector<Edge>& edges, const Path& a, const Path& b) {
  if (a.total_ns != b.total_ns) return a.total_ns < b.total_ns;
  return std::lexicographical_compare(
      a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
      [&](int x, int y) { return edges[x].id < edges[y].id; });
}

std::optional<Path> min_latency_path(const std::vector<Edge>& edges, const std::string& src,
                                     const std::string& dst) {
  auto paths = all_simple_paths(edges, src, dst);
  if (paths.empty()) return std::nullopt;
  return *std::min_element(paths.begin(), paths.end(),
                           [&](const Path& a, const Path& b) { return path_less(edges, a, b); });
}

bool compact_path_less(const std::vector<Edge>& edges, const Path& a, const Path& b) {
  if (a.total_ns != b.total_ns) return a.total_ns < b.total_ns;
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  return std::lexicographical_compare(
      a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
      [&](int x, int y) { return edges[x].id < edges[y].id; });
}

std::optional<Path> min_compact_path(const std::vector<Edge>& edges, const std::string& src,
                                     const std::string& dst) {
  auto paths = all_simple_paths(edges, src, dst);
  if (paths.empty()) return std::nullopt;
  return *std::min_element(paths.begin(), paths.end(), [&](const Path& a, const Path& b) {
    return compact_path_less(edges, a, b);
  });
}

std::vector<Path> k_shortest_paths(const std::vector<Edge>& edges, const std::string& src,
                                   const std::string& dst, int k) {
  auto paths = all_simple_paths(edges, src, dst);
  std::sort(paths.begin(), paths.end(),
            [&](const Path& a, const Path& b) { return path_less(edges, a, b); });
  if (static_cast<int>(paths.size()) > k) paths.resize(k);
  return paths;
}

}  // namespace orch5g::pathing
