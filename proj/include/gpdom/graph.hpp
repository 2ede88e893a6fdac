#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gpdom/slot_set.hpp"
#include "gpdom/vertex.hpp"

namespace gpdom {

/// Unordered vertex pair, stored with a.slot(n) < b.slot(n).
struct Edge {
  Vertex a;
  Vertex b;

  static Edge make(Vertex x, Vertex y, int n);
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string format_edge(const Edge& e, int base = 0);

/// Generalized Petersen graph P(n,k) minus a set of vertices and edges.
/// Immutable after construction.
class GPGraph {
 public:
  static GPGraph build(int n, int k, const FaultSpec& fault = {},
                       std::span<const Edge> deleted_edges = {});
  static GPGraph build(int n, int k, std::span<const Vertex> deleted_vertices,
                       std::span<const Edge> deleted_edges = {});

  /// Edge set of the undeleted graph, deduplicated, sorted by slot pair.
  static std::vector<Edge> pristine_edges(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int slot_count() const { return 2 * n_; }

  bool live(int slot) const { return live_.test(slot); }
  bool live(Vertex v) const { return live(v.slot(n_)); }
  const SlotSet& live_set() const { return live_; }
  int live_count() const { return live_.count(); }

  /// Open neighbourhood over live edges, as slots.
  std::span<const int> neighbors(int slot) const { return adj_[slot]; }
  /// Closed neighbourhood bitmap; empty for a deleted slot.
  const SlotSet& closed(int slot) const { return closed_[slot]; }

  /// Row-major copy of all closed neighbourhood bitmaps, `words()` words per slot.
  const std::vector<std::uint64_t>& closed_matrix() const { return closed_matrix_; }
  int words() const { return words_; }

  /// Closed neighbourhood of a live vertex, sorted by slot.
  std::vector<Vertex> closed_neighborhood(Vertex v) const;

  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(Vertex x, Vertex y) const;

  const std::vector<Vertex>& deleted_vertices() const { return deleted_vertices_; }
  const std::vector<Edge>& deleted_edges() const { return deleted_edges_; }
  const FaultSpec& fault() const { return fault_; }

  /// True for P(n,k) with no deletions at all.
  bool pristine() const { return deleted_vertices_.empty() && deleted_edges_.empty(); }

 private:
  int n_ = 0;
  int k_ = 0;
  SlotSet live_;
  std::vector<std::vector<int>> adj_;
  std::vector<SlotSet> closed_;
  std::vector<std::uint64_t> closed_matrix_;
  int words_ = 0;
  std::vector<Edge> edges_;
  std::vector<Vertex> deleted_vertices_;
  std::vector<Edge> deleted_edges_;
  FaultSpec fault_;
};

}  // namespace gpdom
