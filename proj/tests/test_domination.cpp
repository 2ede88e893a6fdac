#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "gpdom/domination.hpp"
#include "gpdom/error.hpp"
#include "gpdom/graph.hpp"

using namespace gpdom;

namespace {

Vertex U(int i, int n) { return Vertex::outer(i, n); }
Vertex V(int i, int n) { return Vertex::inner(i, n); }

// Independent oracle: walk the edge list.
bool naive_dominating(const GPGraph& g, const DomSet& s) {
  std::vector<bool> cov(g.slot_count(), false);
  for (int x = 0; x < g.slot_count(); ++x)
    if (g.live(x) && s.contains_slot(x)) cov[x] = true;
  for (const Edge& e : g.edges()) {
    const int a = e.a.slot(g.n()), b = e.b.slot(g.n());
    if (s.contains_slot(a)) cov[b] = true;
    if (s.contains_slot(b)) cov[a] = true;
  }
  for (int x = 0; x < g.slot_count(); ++x)
    if (g.live(x) && !cov[x]) return false;
  return true;
}

// gamma_i counted straight from the block definition.
int naive_gamma(const DomSet& s, int i) {
  const int n = s.n();
  int c = 0;
  for (int d = -2; d <= 2; ++d) c += s.contains(U(i + d, n)) + s.contains(V(i + d, n));
  return c;
}

DomSet tiled(int n) {
  DomSet s(n);
  for (int j = 0; 5 * j < n; ++j) {
    s.insert(U(5 * j, n));
    s.insert(V(5 * j + 2, n));
    s.insert(V(5 * j + 3, n));
  }
  return s;
}

}  // namespace

TEST_CASE("is_dominating on small cases") {
  const GPGraph p5 = GPGraph::build(5, 2);
  CHECK(is_dominating(p5, DomSet(5, {U(0, 5), V(2, 5), V(3, 5)})));
  CHECK_FALSE(is_dominating(p5, DomSet(5)));
  const GPGraph p6 = GPGraph::build(6, 2, FaultSpec::outer(2, 6));
  CHECK(is_dominating(p6, DomSet(6, {U(0, 6), V(3, 6), V(4, 6)})));
}

TEST_CASE("is_dominating agrees with the edge-walk oracle on random sets") {
  std::mt19937 rng(5);
  for (int n = 3; n <= 20; ++n) {
    for (int f = -1; f < n; f += 4) {
      const FaultSpec fault = f < 0 ? FaultSpec{} : FaultSpec::outer(f, n);
      const GPGraph g = GPGraph::build(n, 2, fault);
      for (int t = 0; t < 40; ++t) {
        DomSet s(n);
        for (int x = 0; x < 2 * n; ++x)
          if (g.live(x) && rng() % 3 == 0) s.insert(Vertex::from_slot(x, n));
        CHECK(is_dominating(g, s) == naive_dominating(g, s));
      }
    }
  }
}

TEST_CASE("set with a deleted vertex is rejected") {
  const GPGraph g = GPGraph::build(6, 2, FaultSpec::outer(2, 6));
  CHECK_THROWS_AS(require_valid_set(g, DomSet(6, {U(2, 6)})), Error);
  CHECK_THROWS_AS(require_valid_set(g, DomSet(7, {U(0, 7)})), Error);
}

TEST_CASE("block partition") {
  // n=12, centre 4.
  const Block b = block(4, 12);
  std::vector<Vertex> all;
  for (int i = 2; i <= 6; ++i) all.push_back(U(i, 12));
  for (int i = 2; i <= 6; ++i) all.push_back(V(i, 12));
  CHECK(b.all == all);
  auto sorted = [](std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(b.left) == sorted({V(3, 12), U(2, 12), V(2, 12)}));
  CHECK(sorted(b.middle) == sorted({U(3, 12), V(4, 12), U(5, 12)}));
  CHECK(sorted(b.right) == sorted({V(5, 12), U(6, 12), V(6, 12)}));
  CHECK(sorted(b.outward_right) == sorted({V(7, 12), U(7, 12), V(8, 12)}));
  CHECK(sorted(b.outward_left) == sorted({V(1, 12), U(1, 12), V(0, 12)}));
  CHECK(block(0, 5).all.size() == 10);
}

TEST_CASE("gammas on the tiled set and on the empty set") {
  const DomSet s = tiled(10);
  CHECK(s == DomSet(10, {U(0, 10), V(2, 10), V(3, 10), U(5, 10), V(7, 10), V(8, 10)}));
  const auto g = gammas(s);
  CHECK(std::all_of(g.begin(), g.end(), [](int x) { return x == 3; }));
  const auto z = gammas(DomSet(9));
  CHECK(std::all_of(z.begin(), z.end(), [](int x) { return x == 0; }));
}

TEST_CASE("block-sum identity and gamma bounds on random sets") {
  std::mt19937 rng(9);
  for (int n = 5; n <= 40; ++n) {
    for (int t = 0; t < 20; ++t) {
      DomSet s(n);
      for (int x = 0; x < 2 * n; ++x)
        if (rng() % 2) s.insert(Vertex::from_slot(x, n));
      const auto g = gammas(s);
      CHECK(std::accumulate(g.begin(), g.end(), 0) == 5 * s.size());
      for (int i = 0; i < n; ++i) {
        CHECK(g[i] == naive_gamma(s, i));
        CHECK(g[i] >= 0);
        CHECK(g[i] <= 10);
      }
    }
  }
}

TEST_CASE("profile of the six-column example") {
  const int n = 6;
  const FaultSpec f = FaultSpec::outer(2, n);
  const GPGraph g = GPGraph::build(n, 2, f);
  const DomSet s(n, {U(0, n), V(3, n), V(4, n)});
  const BlockProfile p = gamma_profile(g, s, f);
  CHECK(std::accumulate(p.gammas.begin(), p.gammas.end(), 0) == 15);
  CHECK(p.type == TypeTag::TypeII);
  CHECK(p.pseudo_couples.empty());
  CHECK(classify(g, s, f) == TypeTag::TypeII);
}

TEST_CASE("couple number counts only blocks outside the fault window") {
  const int n = 12;
  const FaultSpec f = FaultSpec::outer(0, n);
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    DomSet s(n);
    for (int x = 1; x < 2 * n; ++x)
      if (rng() % 3 == 0) s.insert(Vertex::from_slot(x, n));
    const auto g = gammas(s);
    int want = 0;
    for (int i = 3; i <= 9; ++i) want += g[i] == 2;
    CHECK(couple_number(s, f) == want);
  }
  CHECK(fault_window(0, n) == std::vector<int>{0, 1, 2, 10, 11});
}

TEST_CASE("classify: gamma_i = 1 is not Type I") {
  const int n = 10;
  const FaultSpec f = FaultSpec::outer(0, n);
  const GPGraph g = GPGraph::build(n, 2, f);
  CHECK(classify(g, DomSet(n, {U(3, n), U(8, n)}), f) == TypeTag::NotTypeI);
  CHECK(classify(GPGraph::build(10, 2), tiled(10), FaultSpec{}) == TypeTag::NoFault);
}

TEST_CASE("Type IIIb pattern is recognised") {
  const int n = 11;
  const int fidx = 4;
  const FaultSpec f = FaultSpec::outer(fidx, n);
  const GPGraph g = GPGraph::build(n, 2, f);
  const DomSet core(n, {U(2, n), V(2, n), U(6, n), V(6, n)});
  std::vector<int> outside;
  for (int x = 0; x < 2 * n; ++x) {
    const Vertex v = Vertex::from_slot(x, n);
    int d = Vertex::mod(v.index - fidx, n);
    if (d > n / 2) d -= n;
    if (d < -2 || d > 2) outside.push_back(x);
  }
  int hits = 0;
  const int m = static_cast<int>(outside.size());
  // Completions by 4 vertices outside the fault window.
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    DomSet s = core;
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1) s.insert(Vertex::from_slot(outside[b], n));
    if (!is_dominating(g, s)) continue;
    const auto gm = gammas(s);
    if (*std::min_element(gm.begin(), gm.end()) < 2) continue;
    CHECK(classify(g, s, f) == TypeTag::TypeIIIb);
    ++hits;
  }
  CHECK(hits > 0);
}

TEST_CASE("pseudo-couple vertices") {
  const int n = 10;
  const FaultSpec f = FaultSpec::outer(0, n);
  const GPGraph g = GPGraph::build(n, 2, f);
  CHECK(pseudo_couple_vertices(GPGraph::build(6, 2, FaultSpec::outer(2, 6)), DomSet(6, {U(0, 6), V(3, 6), V(4, 6)}),
                               FaultSpec::outer(2, 6))
            .empty());
  // A set without Type II/III shape is refused.
  DomSet outer_only(n);
  for (int i = 1; i < n; ++i) outer_only.insert(U(i, n));
  CHECK_THROWS_AS(pseudo_couple_vertices(g, outer_only, f), Error);
  CHECK(pseudo_couple_candidates(outer_only, f) == std::vector<int>{3, 4, 5, 6, 7});
  // Inner members on columns 4..6 hide indices 3..7.
  DomSet some = outer_only;
  some.insert(V(4, n));
  some.insert(V(6, n));
  CHECK(pseudo_couple_candidates(some, f).empty());
}

TEST_CASE("self-contained blocks") {
  const GPGraph g = GPGraph::build(10, 2);
  CHECK(self_contained_blocks(g, tiled(10)) == std::vector<int>{2, 7});
  CHECK(self_contained_blocks(g, DomSet(10)).empty());
}

TEST_CASE("two self-contained blocks five apart force gamma 3 between them") {
  for (int n = 10; n <= 25; ++n) {
    const GPGraph g = GPGraph::build(n, 2);
    DomSet s(n);
    for (int j = 0; 5 * j + 5 <= n; ++j) {
      s.insert(U(5 * j, n));
      s.insert(V(5 * j + 2, n));
      s.insert(V(5 * j + 3, n));
    }
    const auto sc = self_contained_blocks(g, s);
    const auto gm = gammas(s);
    for (int i : sc) {
      if (std::find(sc.begin(), sc.end(), Vertex::mod(i - 5, n)) == sc.end()) continue;
      for (int x = i - 5; x <= i; ++x) CHECK(gm[Vertex::mod(x, n)] == 3);
    }
  }
}

TEST_CASE("format_set and lex order") {
  const DomSet a(5, {U(0, 5), V(2, 5)});
  const DomSet b(5, {U(1, 5), V(0, 5)});
  CHECK(format_set(a) == "{u0, v2}");
  CHECK(format_set(a, 1) == "{u1, v3}");
  CHECK(lex_less(a, b));
  CHECK_FALSE(lex_less(b, a));
}
