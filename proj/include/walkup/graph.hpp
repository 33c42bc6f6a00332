#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace walkup {

// Simple undirected graph on 0 .. n-1.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
    finalize();
  }

  std::size_t size() const { return adj_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

  // Sorted (u < v) edge list.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  std::size_t degree(int v) const { return adj_.at(v).size(); }

  bool is_connected() const { return count_reachable(std::vector<bool>(size(), true)) == size(); }

  bool is_tree() const { return size() > 0 && num_edges() + 1 == size() && is_connected(); }

  // Connectivity of the subgraph induced on `members` (true entries).
  bool induced_connected(const std::vector<bool>& members) const {
    std::size_t want = std::count(members.begin(), members.end(), true);
    return want > 0 && count_reachable(members) == want;
  }

  std::size_t induced_edge_count(const std::vector<bool>& members) const {
    std::size_t n = 0;
    for (auto [u, v] : edges_)
      if (members[u] && members[v]) ++n;
    return n;
  }

  void add_edge(int u, int v) {
    if (u == v) throw std::domain_error("graph: loop edge");
    if (u < 0 || v < 0 || static_cast<std::size_t>(std::max(u, v)) >= size())
      throw std::domain_error("graph: edge endpoint out of range");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  void finalize() {
    edges_.clear();
    for (std::size_t u = 0; u < size(); ++u) {
      auto& a = adj_[u];
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      for (int v : a)
        if (static_cast<int>(u) < v) edges_.emplace_back(static_cast<int>(u), v);
    }
  }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::size_t count_reachable(const std::vector<bool>& members) const {
    auto start = std::find(members.begin(), members.end(), true);
    if (start == members.end() || size() == 0) return 0;
    std::vector<bool> seen(size(), false);
    std::vector<int> stack{static_cast<int>(start - members.begin())};
    seen[stack.back()] = true;
    std::size_t n = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++n;
      for (int v : adj_[u])
        if (members[v] && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    return n;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
};

}  // namespace walkup
