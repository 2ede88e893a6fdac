#include <algorithm>
#include <map>

#include "doctest.h"

#include "gpdom/domination.hpp"
#include "gpdom/error.hpp"
#include "gpdom/graph.hpp"
#include "gpdom/normalizer.hpp"
#include "gpdom/solver.hpp"

using namespace gpdom;

namespace {

Vertex U(int i, int n) { return Vertex::outer(i, n); }
Vertex V(int i, int n) { return Vertex::inner(i, n); }

int min_gamma(const DomSet& s) {
  const auto g = gammas(s);
  return *std::min_element(g.begin(), g.end());
}

int count_ones(const DomSet& s) {
  const auto g = gammas(s);
  return static_cast<int>(std::count(g.begin(), g.end(), 1));
}

struct Instance {
  int n;
  FaultSpec fault;
  GPGraph g;
  std::vector<DomSet> clean;  // minimum sets avoiding N(u_f)
};

const std::vector<Instance>& instances() {
  static const std::vector<Instance> all = [] {
    std::vector<Instance> out;
    for (int n = 5; n <= 12; ++n) {
      const FaultSpec f = FaultSpec::outer(0, n);
      GPGraph g = GPGraph::build(n, 2, f);
      std::vector<DomSet> clean;
      for (DomSet& s : enumerate_minimum_sets(g).sets)
        if (!touches_fault(s, f)) clean.push_back(std::move(s));
      out.push_back({n, f, std::move(g), std::move(clean)});
    }
    return out;
  }();
  return all;
}

// Replays a step list and checks every intermediate set.
void replay(const GPGraph& g, DomSet s, const std::vector<RewriteStep>& steps) {
  const int size = s.size();
  for (const auto& st : steps) {
    REQUIRE(s.contains(st.removed));
    REQUIRE_FALSE(s.contains(st.added));
    s.erase(st.removed);
    s.insert(st.added);
    CHECK(s.size() == size);
    CHECK(is_dominating(g, s));
    CHECK(gammas(s) == st.gammas_after);
  }
}

}  // namespace

TEST_CASE("exchange preconditions") {
  const int n = 6;
  const FaultSpec f = FaultSpec::outer(2, n);
  const GPGraph g = GPGraph::build(n, 2, f);
  const DomSet s(n, {U(0, n), V(3, n), V(4, n)});
  try {
    exchange(g, s, U(1, n), U(3, n));
    FAIL("x not in S");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidExchange);
  }
  try {
    exchange(g, s, U(0, n), V(3, n));
    FAIL("y already in S");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidExchange);
  }
  try {
    exchange(g, s, U(0, n), U(5, n));
    FAIL("u0's neighbourhood loses cover");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RejectedExchange);
  }
}

TEST_CASE("to_type1 is the identity on Type I input") {
  const int n = 6;
  const FaultSpec f = FaultSpec::outer(2, n);
  const GPGraph g = GPGraph::build(n, 2, f);
  const DomSet s(n, {U(0, n), V(3, n), V(4, n)});
  const Rewrite r = to_type1(g, s, f);
  CHECK(r.steps.empty());
  CHECK(r.set == s);
}

TEST_CASE("to_type1 on every clean minimum set, n in [5, 12]") {
  int moved = 0;
  for (const auto& inst : instances()) {
    for (const DomSet& s : inst.clean) {
      const Rewrite r = to_type1(inst.g, s, inst.fault);
      CHECK(min_gamma(r.set) >= 2);
      CHECK(r.set.size() == s.size());
      CHECK(is_dominating(inst.g, r.set));
      CHECK(static_cast<int>(r.steps.size()) <= count_ones(s));
      replay(inst.g, s, r.steps);
      for (const auto& st : r.steps) CHECK(st.rule == Rule::TypeIFix);
      moved += !r.steps.empty();
    }
  }
  CHECK(moved > 0);
}

TEST_CASE("the single-block repair swap is accepted wherever it applies") {
  int seen = 0;
  for (const auto& inst : instances()) {
    const int n = inst.n;
    const int f = 0;
    for (const DomSet& s : inst.clean) {
      const auto gm = gammas(s);
      for (int i = 0; i < n; ++i) {
        if (gm[i] != 1 || !s.contains(U(i, n))) continue;
        if (Vertex::mod(i + 2, n) == f || Vertex::mod(i + 3, n) == f) continue;
        const Block b = block(i, n);
        if (count_in(s, b.outward_right) != 3) continue;
        const DomSet t = exchange(inst.g, s, U(i + 3, n), U(i + 2, n));
        CHECK(is_dominating(inst.g, t));
        ++seen;
      }
    }
  }
  MESSAGE("repair swaps checked: ", seen);
}

TEST_CASE("canonical type: a Type II set is left alone") {
  const int n = 6;
  const FaultSpec f = FaultSpec::outer(2, n);
  const GPGraph g = GPGraph::build(n, 2, f);
  const DomSet s(n, {U(0, n), V(3, n), V(4, n)});
  const Canonical c = to_canonical_type(g, s, f);
  CHECK(c.tag == TypeTag::TypeII);
  CHECK(c.steps.empty());
  CHECK(c.set == s);
}

TEST_CASE("canonical type: every Type I clean minimum set at n = 9 canonicalises") {
  const auto& inst = instances()[4];
  REQUIRE(inst.n == 9);
  int checked = 0;
  for (const DomSet& s : inst.clean) {
    if (classify(inst.g, s, inst.fault) == TypeTag::NotTypeI) continue;
    const int gf = gammas(s)[0];
    if (gf != 3 && gf != 4) continue;
    const Canonical c = to_canonical_type(inst.g, s, inst.fault);
    CHECK(is_type2_or_3(c.tag));
    CHECK(c.set.size() == s.size());
    replay(inst.g, s, c.steps);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("canonical type rewrites: the named swaps land on Type II") {
  // Single-vertex perturbations of clean minimum sets give inputs for the
  // rewrite patterns that minimum sets alone rarely hit.
  std::map<Rule, int> hits;
  for (const auto& inst : instances()) {
    const int n = inst.n;
    for (const DomSet& base : inst.clean) {
      std::vector<DomSet> candidates{base};
      for (const Vertex& x : base.vertices())
        for (int y = 0; y < 2 * n; ++y) {
          const Vertex vy = Vertex::from_slot(y, n);
          if (!inst.g.live(y) || base.contains(vy)) continue;
          DomSet t = base;
          t.erase(x);
          t.insert(vy);
          candidates.push_back(t);
        }
      for (const DomSet& t : candidates) {
        if (touches_fault(t, inst.fault) || !is_dominating(inst.g, t)) continue;
        if (classify(inst.g, t, inst.fault) == TypeTag::NotTypeI) continue;
        Canonical c;
        try {
          c = to_canonical_type(inst.g, t, inst.fault);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::InfeasiblePattern);
          continue;
        }
        CHECK(is_type2_or_3(c.tag));
        CHECK(c.set.size() == t.size());
        replay(inst.g, t, c.steps);
        if (c.steps.size() == 1) {
          const auto& st = c.steps.front();
          ++hits[st.rule];
          if (st.rule != Rule::Shift3d && st.rule != Rule::FaultBlockReduce) CHECK(c.tag == TypeTag::TypeII);
          if (st.rule == Rule::Shift3d) CHECK(c.tag == TypeTag::TypeIIId);
          if (st.rule == Rule::Shift4g) {
            // S - v_{f+1} + v_{f+3}, in one of the two orientations.
            const bool fwd = st.removed == V(1, n) && st.added == V(3, n);
            const bool mir = st.removed == V(-1, n) && st.added == V(-3, n);
            CHECK((fwd || mir));
          }
          if (st.rule == Rule::Shift3b) {
            const bool fwd = st.removed == U(2, n) && st.added == V(1, n);
            const bool mir = st.removed == U(-2, n) && st.added == V(-1, n);
            CHECK((fwd || mir));
          }
        }
      }
    }
  }
  CHECK(hits[Rule::Shift3b] > 0);
  CHECK(hits[Rule::Shift4g] > 0);
}

TEST_CASE("reduce_couples is the identity without couples") {
  const int n = 6;
  const FaultSpec f = FaultSpec::outer(2, n);
  const GPGraph g = GPGraph::build(n, 2, f);
  const DomSet s(n, {U(0, n), V(3, n), V(4, n)});
  const CoupleReduction r = reduce_couples(g, s, f);
  CHECK(r.initial_couples == 0);
  CHECK(r.steps.empty());
  CHECK(r.set == s);
}

TEST_CASE("normalize: full pipeline over clean minimum sets, n in [5, 11]") {
  for (const auto& inst : instances()) {
    if (inst.n > 11) continue;
    for (const DomSet& s : inst.clean) {
      const Normalization out = normalize(inst.g, s, inst.fault);
      CHECK(is_type2_or_3(out.tag));
      CHECK(out.set.size() == s.size());
      CHECK(is_dominating(inst.g, out.set));
      replay(inst.g, s, out.steps);
      // Couple reduction never raises the couple number.
      CHECK(out.couples_after_reduction <= out.couples_before_reduction);
      int prev = -1;
      for (const auto& st : out.steps) {
        if (st.rule != Rule::CoupleReduce) continue;
        int c = 0;
        for (int i = 3; i <= inst.n - 3; ++i) c += st.gammas_after[i] == 2;
        if (prev >= 0) CHECK(c == prev - 1);
        prev = c;
      }
      if (out.stuck.empty())
        for (int i : pseudo_couple_vertices(inst.g, out.set, inst.fault)) CHECK(gammas(out.set)[i] >= 3);
    }
  }
}

TEST_CASE("normalize is deterministic and its trace is well formed") {
  const auto& inst = instances()[6];
  REQUIRE(inst.n == 11);
  for (const DomSet& s : inst.clean) {
    const auto a = normalize(inst.g, s, inst.fault);
    const auto b = normalize(inst.g, s, inst.fault);
    CHECK(format_trace(a.steps) == format_trace(b.steps));
    CHECK(a.set == b.set);
  }
  RewriteStep st{U(3, 11), U(2, 11), Rule::TypeIFix, {3, 3, 2}};
  CHECK(format_trace({st}) == "TypeI-Fix removed=u3 added=u2 gamma_profile_after=[3,3,2]\n");
  CHECK(format_trace({st}, 1) == "TypeI-Fix removed=u4 added=u3 gamma_profile_after=[3,3,2]\n");
}

TEST_CASE("normalizer refuses sets that touch the fault") {
  const int n = 8;
  const FaultSpec f = FaultSpec::outer(0, n);
  const GPGraph g = GPGraph::build(n, 2, f);
  for (const DomSet& s : enumerate_minimum_sets(g).sets) {
    if (!touches_fault(s, f)) continue;
    CHECK_THROWS_AS(to_type1(g, s, f), Error);
    break;
  }
  CHECK_THROWS_AS(to_type1(GPGraph::build(8, 2), DomSet(8), FaultSpec{}), Error);
}
