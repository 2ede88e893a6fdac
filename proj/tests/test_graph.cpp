#include <algorithm>
#include <set>

#include "doctest.h"

#include "gpdom/error.hpp"
#include "gpdom/graph.hpp"

using namespace gpdom;

namespace {

Vertex U(int i, int n) { return Vertex::outer(i, n); }
Vertex V(int i, int n) { return Vertex::inner(i, n); }

}  // namespace

TEST_CASE("Petersen graph has 10 vertices and 15 edges") {
  const GPGraph g = GPGraph::build(5, 2);
  CHECK(g.live_count() == 10);
  CHECK(g.edge_count() == 15);
  for (int s = 0; s < g.slot_count(); ++s) CHECK(g.neighbors(s).size() == 3);
}

TEST_CASE("pristine edge set matches the defining pairs") {
  for (int n = 3; n <= 14; ++n) {
    for (int k = 1; k < n; ++k) {
      std::set<std::pair<int, int>> want;
      auto add = [&](Vertex a, Vertex b) {
        int x = a.slot(n), y = b.slot(n);
        if (x == y) return;
        want.insert({std::min(x, y), std::max(x, y)});
      };
      for (int i = 0; i < n; ++i) {
        add(U(i, n), U(i + 1, n));
        add(U(i, n), V(i, n));
        add(V(i, n), V(i + k, n));
      }
      const auto edges = GPGraph::pristine_edges(n, k);
      REQUIRE(edges.size() == want.size());
      std::size_t idx = 0;
      for (const auto& [x, y] : want) {
        CHECK(edges[idx].a.slot(n) == x);
        CHECK(edges[idx].b.slot(n) == y);
        ++idx;
      }
    }
  }
}

TEST_CASE("adjacency is symmetric and degree is at most 3") {
  for (int n = 3; n <= 16; ++n) {
    for (int f = -1; f < n; f += 3) {
      const FaultSpec fault = f < 0 ? FaultSpec{} : FaultSpec::outer(f, n);
      const GPGraph g = GPGraph::build(n, 2, fault);
      for (int s = 0; s < g.slot_count(); ++s) {
        if (!g.live(s)) {
          CHECK(g.neighbors(s).empty());
          CHECK(g.closed(s).none());
          continue;
        }
        CHECK(g.neighbors(s).size() <= 3);
        for (int t : g.neighbors(s)) {
          CHECK(g.live(t));
          auto back = g.neighbors(t);
          CHECK(std::find(back.begin(), back.end(), s) != back.end());
          CHECK(g.closed(s).test(t));
        }
        CHECK(g.closed(s).test(s));
      }
    }
  }
}

TEST_CASE("closed neighbourhood drops deleted neighbours") {
  const GPGraph g = GPGraph::build(6, 2, FaultSpec::outer(2, 6));
  const auto nb = g.closed_neighborhood(U(1, 6));
  CHECK(nb == std::vector<Vertex>{U(0, 6), U(1, 6), V(1, 6)});
  CHECK_THROWS_AS(g.closed_neighborhood(U(2, 6)), Error);
}

TEST_CASE("rotate and reflect") {
  CHECK(rotate(U(2, 7), 3, 7) == U(5, 7));
  CHECK(rotate(V(6, 7), 1, 7) == V(0, 7));
  CHECK(rotate(U(0, 9), 9, 9) == U(0, 9));
  CHECK(reflect(U(4, 10), 3, 10) == U(2, 10));
  CHECK(reflect(V(3, 10), 3, 10) == V(3, 10));
  const GPGraph g = GPGraph::build(10, 2);
  CHECK(g.has_edge(reflect(U(3, 10), 3, 10), reflect(U(4, 10), 3, 10)));
  CHECK(g.has_edge(U(3, 10), U(2, 10)));
}

TEST_CASE("rotations and reflections are automorphisms of P(n,2)") {
  for (int n = 3; n <= 13; ++n) {
    const GPGraph g = GPGraph::build(n, 2);
    for (int d = 0; d < n; ++d) {
      for (const Edge& e : g.edges()) {
        CHECK(g.has_edge(rotate(e.a, d, n), rotate(e.b, d, n)));
        CHECK(g.has_edge(reflect(e.a, d, n), reflect(e.b, d, n)));
      }
    }
  }
}

TEST_CASE("edge deletion") {
  const Edge e = Edge::make(U(0, 8), U(1, 8), 8);
  const std::vector<Edge> del{e};
  const GPGraph g = GPGraph::build(8, 2, FaultSpec{}, del);
  CHECK(g.edge_count() == 23);
  CHECK_FALSE(g.has_edge(U(0, 8), U(1, 8)));
  CHECK_FALSE(g.pristine());
  CHECK(format_edge(e) == "u0-u1");
}

TEST_CASE("invalid construction arguments") {
  CHECK_THROWS_AS(GPGraph::build(2, 1), Error);
  CHECK_THROWS_AS(GPGraph::build(7, 0), Error);
  try {
    GPGraph::build(7, 2, FaultSpec{Vertex{Ring::Outer, 9}});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidFault);
  }
  const std::vector<Edge> bogus{Edge::make(U(0, 8), U(3, 8), 8)};
  try {
    GPGraph::build(8, 2, FaultSpec{}, bogus);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidEdge);
  }
}

TEST_CASE("vertex text form") {
  CHECK(format_vertex(U(3, 10)) == "u3");
  CHECK(format_vertex(V(0, 10), 1) == "v1");
  CHECK(parse_vertex("v12") == Vertex{Ring::Inner, 12});
  CHECK(parse_vertex("u1", 1) == Vertex{Ring::Outer, 0});
  CHECK_FALSE(parse_vertex("w1"));
  CHECK_FALSE(parse_vertex("u"));
  CHECK_FALSE(parse_vertex("u1x"));
  CHECK_FALSE(parse_vertex(""));
}
