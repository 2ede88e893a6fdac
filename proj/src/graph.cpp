#include "gpdom/graph.hpp"

#include <algorithm>

#include "gpdom/error.hpp"

namespace gpdom {


Vertex rotate(Vertex v, int d, int n) { return {v.ring, Vertex::mod(v.index + d, n)}; }

Vertex reflect(Vertex v, int center, int n) {
  return {v.ring, Vertex::mod(2 * center - v.index, n)};
}

std::string format_vertex(Vertex v, int base) {
  return (v.ring == Ring::Outer ? "u" : "v") + std::to_string(v.index + base);
}

std::optional<Vertex> parse_vertex(std::string_view text, int base) {
  if (text.size() < 2 || (text[0] != 'u' && text[0] != 'v')) return std::nullopt;
  int value = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
    if (value > 100000000) return std::nullopt;
  }
  return Vertex{text[0] == 'u' ? Ring::Outer : Ring::Inner, value - base};
}

Edge Edge::make(Vertex x, Vertex y, int n) {
  if (x.slot(n) > y.slot(n)) std::swap(x, y);
  return {x, y};
}

std::string format_edge(const Edge& e, int base) {
  return format_vertex(e.a, base) + "-" + format_vertex(e.b, base);
}

std::vector<Edge> GPGraph::pristine_edges(int n, int k) {
  std::vector<Edge> out;
  out.reserve(3 * n);
  auto add = [&](Vertex x, Vertex y) {
    if (x != y) out.push_back(Edge::make(x, y, n));
  };
  for (int i = 0; i < n; ++i) {
    add(Vertex::outer(i, n), Vertex::outer(i + 1, n));
    add(Vertex::outer(i, n), Vertex::inner(i, n));
    add(Vertex::inner(i, n), Vertex::inner(i + k, n));
  }
  auto key = [n](const Edge& e) { return std::pair{e.a.slot(n), e.b.slot(n)}; };
  std::sort(out.begin(), out.end(), [&](const Edge& l, const Edge& r) { return key(l) < key(r); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GPGraph GPGraph::build(int n, int k, const FaultSpec& fault, std::span<const Edge> deleted_edges) {
  if (fault.faulted) {
    const Vertex f = *fault.faulted;
    if (n >= 3 && (f.index < 0 || f.index >= n))
      throw Error(ErrorCode::InvalidFault, "fault index " + std::to_string(f.index) + " outside [0, " +
                                               std::to_string(n) + ")");
    std::vector<Vertex> dv{f};
    GPGraph g = build(n, k, std::span<const Vertex>(dv), deleted_edges);
    g.fault_ = fault;
    return g;
  }
  return build(n, k, std::span<const Vertex>{}, deleted_edges);
}

GPGraph GPGraph::build(int n, int k, std::span<const Vertex> deleted_vertices,
                       std::span<const Edge> deleted_edges) {
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "n must be >= 3, got " + std::to_string(n));
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "k must be >= 1, got " + std::to_string(k));

  GPGraph g;
  g.n_ = n;
  g.k_ = k;
  const int slots = 2 * n;
  g.live_ = SlotSet(slots);
  for (int s = 0; s < slots; ++s) g.live_.set(s);

  for (const Vertex& v : deleted_vertices) {
    if (v.index < 0 || v.index >= n)
      throw Error(ErrorCode::InvalidFault, "deleted vertex " + format_vertex(v) + " out of range");
    g.live_.reset(v.slot(n));
    g.deleted_vertices_.push_back(v);
  }
  std::sort(g.deleted_vertices_.begin(), g.deleted_vertices_.end(),
            [n](Vertex a, Vertex b) { return a.slot(n) < b.slot(n); });
  g.deleted_vertices_.erase(std::unique(g.deleted_vertices_.begin(), g.deleted_vertices_.end()),
                            g.deleted_vertices_.end());
  if (g.deleted_vertices_.size() == 1) g.fault_.faulted = g.deleted_vertices_.front();

  std::vector<Edge> all = pristine_edges(n, k);
  for (const Edge& raw : deleted_edges) {
    if (raw.a.index < 0 || raw.a.index >= n || raw.b.index < 0 || raw.b.index >= n)
      throw Error(ErrorCode::InvalidEdge, "edge endpoint out of range");
    Edge e = Edge::make(raw.a, raw.b, n);
    if (std::find(all.begin(), all.end(), e) == all.end())
      throw Error(ErrorCode::InvalidEdge, format_edge(e) + " is not an edge of P(" +
                                              std::to_string(n) + "," + std::to_string(k) + ")");
    if (std::find(g.deleted_edges_.begin(), g.deleted_edges_.end(), e) == g.deleted_edges_.end())
      g.deleted_edges_.push_back(e);
  }

  g.adj_.assign(slots, {});
  for (const Edge& e : all) {
    if (std::find(g.deleted_edges_.begin(), g.deleted_edges_.end(), e) != g.deleted_edges_.end())
      continue;
    const int a = e.a.slot(n), b = e.b.slot(n);
    if (!g.live_.test(a) || !g.live_.test(b)) continue;
    g.edges_.push_back(e);
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  g.closed_.assign(slots, SlotSet(slots));
  for (int s = 0; s < slots; ++s) {
    std::sort(g.adj_[s].begin(), g.adj_[s].end());
    if (!g.live_.test(s)) continue;
    g.closed_[s].set(s);
    for (int t : g.adj_[s]) g.closed_[s].set(t);
  }
  g.words_ = (slots + 63) / 64;
  g.closed_matrix_.reserve(static_cast<std::size_t>(slots) * g.words_);
  for (int s = 0; s < slots; ++s)
    for (auto w : g.closed_[s].words()) g.closed_matrix_.push_back(w);
  return g;
}

std::vector<Vertex> GPGraph::closed_neighborhood(Vertex v) const {
  if (v.index < 0 || v.index >= n_ || !live(v))
    throw Error(ErrorCode::InvalidVertex, format_vertex(v) + " is not a live vertex");
  std::vector<Vertex> out;
  closed_[v.slot(n_)].for_each([&](int s) { out.push_back(Vertex::from_slot(s, n_)); });
  return out;
}

bool GPGraph::has_edge(Vertex x, Vertex y) const {
  const Edge e = Edge::make(x, y, n_);
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

}  // namespace gpdom
