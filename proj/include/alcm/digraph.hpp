#ifndef ALCM_DIGRAPH_HPP_
#define ALCM_DIGRAPH_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace alcm {

/// Small directed graph over ordered vertex values. Iteration follows the
/// vertex order, so cycle witnesses are deterministic.
template <class V>
class Digraph {
 public:
  void addVertex(const V& v) { adjacency_.try_emplace(v); }

  void addEdge(const V& from, const V& to) {
    addVertex(to);
    adjacency_[from].insert(to);
  }

  const std::map<V, std::set<V>>& adjacency() const { return adjacency_; }

  /// A directed cycle v0 -> v1 -> ... -> vk -> v0 as [v0 .. vk], if one exists.
  /// Self-loops count. Iterative DFS, linear in the size of the graph.
  std::optional<std::vector<V>> findCycle() const {
    enum class Color { White, Grey, Black };
    std::map<V, Color> color;
    for (const auto& [v, _] : adjacency_) color[v] = Color::White;

    for (const auto& [start, _] : adjacency_) {
      if (color[start] != Color::White) continue;
      struct Frame {
        V vertex;
        typename std::set<V>::const_iterator next;
      };
      std::vector<Frame> stack;
      color[start] = Color::Grey;
      stack.push_back({start, adjacency_.at(start).begin()});
      while (!stack.empty()) {
        Frame& top = stack.back();
        const auto& succ = adjacency_.at(top.vertex);
        if (top.next == succ.end()) {
          color[top.vertex] = Color::Black;
          stack.pop_back();
          continue;
        }
        const V w = *top.next;
        ++top.next;
        if (color[w] == Color::Grey) {
          std::vector<V> cycle;
          auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame& f) { return f.vertex == w; });
          for (; it != stack.end(); ++it) cycle.push_back(it->vertex);
          return cycle;
        }
        if (color[w] == Color::White) {
          color[w] = Color::Grey;
          stack.push_back({w, adjacency_.at(w).begin()});
        }
      }
    }
    return std::nullopt;
  }

  bool acyclic() const { return !findCycle().has_value(); }

 private:
  std::map<V, std::set<V>> adjacency_;
};

}  // namespace alcm

#endif  // ALCM_DIGRAPH_HPP_
