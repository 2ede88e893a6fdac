#include <algorithm>
#include <array>
#include <bit>

#include "gpdom/constructor.hpp"
#include "gpdom/error.hpp"
#include "gpdom/solver.hpp"

namespace gpdom {

const char* to_string(Engine e) {
  switch (e) {
    case Engine::BnB: return "BnB";
    case Engine::CyclicDP: return "CyclicDP";
    case Engine::Constructor: return "Constructor";
  }
  return "?";
}

namespace {

template <int W>
struct Mask {
  std::array<std::uint64_t, W> w{};

  static Mask from(const SlotSet& s) {
    Mask m;
    auto src = s.words();
    for (std::size_t i = 0; i < src.size() && i < W; ++i) m.w[i] = src[i];
    return m;
  }
  bool test(int s) const { return (w[s >> 6] >> (s & 63)) & 1u; }
  void set(int s) { w[s >> 6] |= std::uint64_t{1} << (s & 63); }
  void reset(int s) { w[s >> 6] &= ~(std::uint64_t{1} << (s & 63)); }
  bool none() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  int first() const {
    for (int i = 0; i < W; ++i)
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return -1;
  }
  Mask operator|(const Mask& o) const {
    Mask r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Mask operator&(const Mask& o) const {
    Mask r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Mask minus(const Mask& o) const {
    Mask r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  bool intersects(const Mask& o) const {
    for (int i = 0; i < W; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  template <class F>
  void for_each(F&& fn) const {
    for (int i = 0; i < W; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        fn(i * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

/// Depth-first search shared by the optimiser and the enumerator.
template <int W>
class Search {
 public:
  using M = Mask<W>;

  explicit Search(const GPGraph& g) : slots_(g.slot_count()), live_(M::from(g.live_set())) {
    closed_.reserve(slots_);
    for (int s = 0; s < slots_; ++s) closed_.push_back(M::from(g.closed(s)));
  }

  /// Looks for a dominating set smaller than `best`; updates both on success.
  void minimise(int& best, M& best_set) {
    enumerate_ = false;
    best_ = best;
    M none;
    dfs(M{}, none, none, 0);
    if (found_) {
      best = best_;
      best_set = best_set_;
    }
  }

  /// Collects every dominating set of exactly `target` members.
  void collect(int target, std::size_t cap, std::vector<M>& out, bool& truncated) {
    enumerate_ = true;
    best_ = target + 1;
    cap_ = cap;
    out_ = &out;
    M none;
    dfs(M{}, none, none, 0);
    truncated = truncated_;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  /// Greedy packing of undominated vertices with pairwise disjoint
  /// candidate sets; each one needs its own chosen vertex.
  int packing_bound(const M& uncovered, const M& forbidden) const {
    M used;
    int packed = 0;
    bool infeasible = false;
    uncovered.for_each([&](int x) {
      if (infeasible) return;
      M cand = closed_[x].minus(forbidden);
      if (cand.none()) {
        infeasible = true;
        return;
      }
      if (!cand.intersects(used)) {
        used = used | cand;
        ++packed;
      }
    });
    return infeasible ? slots_ + 1 : packed;
  }

  void dfs(const M& chosen, const M& covered, const M& forbidden, int count) {
    ++nodes_;
    if (truncated_) return;
    const M uncovered = live_.minus(covered);
    if (uncovered.none()) {
      if (enumerate_) {
        if (out_->size() >= cap_) {
          truncated_ = true;
          return;
        }
        out_->push_back(chosen);
      } else if (count < best_) {
        best_ = count;
        best_set_ = chosen;
        found_ = true;
      }
      return;
    }
    const int lb = packing_bound(uncovered, forbidden);
    if (count + lb >= best_) return;

    const int pivot = uncovered.first();
    M cand = closed_[pivot].minus(forbidden);
    std::array<int, 8> order{};
    int m = 0;
    cand.for_each([&](int s) {
      if (m < 8) order[m++] = s;
    });
    // Most newly covered first; ties by slot.
    std::array<int, 8> gain{};
    for (int j = 0; j < m; ++j) gain[j] = (closed_[order[j]] & uncovered).count();
    for (int a = 1; a < m; ++a)
      for (int b = a; b > 0 && gain[b] > gain[b - 1]; --b) {
        std::swap(gain[b], gain[b - 1]);
        std::swap(order[b], order[b - 1]);
      }

    M banned = forbidden;
    for (int j = 0; j < m; ++j) {
      const int w = order[j];
      M next_chosen = chosen;
      next_chosen.set(w);
      dfs(next_chosen, covered | closed_[w], banned, count + 1);
      banned.set(w);
      if (truncated_) return;
    }
  }

  int slots_;
  M live_;
  std::vector<M> closed_;
  bool enumerate_ = false;
  int best_ = 0;
  bool found_ = false;
  M best_set_;
  std::size_t cap_ = 0;
  std::vector<M>* out_ = nullptr;
  bool truncated_ = false;
  std::int64_t nodes_ = 0;
};

template <int W>
DomSet to_domset(const Mask<W>& m, int n) {
  DomSet s(n);
  m.for_each([&](int slot) { s.bits().set(slot); });
  return s;
}

/// Greedy dominating set: repeatedly take the live vertex covering the most
/// undominated vertices. Gives the initial upper bound.
DomSet greedy_set(const GPGraph& g) {
  DomSet s(g.n());
  SlotSet uncovered = g.live_set();
  while (!uncovered.none()) {
    int best = -1, best_gain = -1;
    g.live_set().for_each([&](int v) {
      SlotSet c = g.closed(v);
      c &= uncovered;
      const int gain = c.count();
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    });
    s.bits().set(best);
    uncovered.subtract(g.closed(best));
  }
  return s;
}

template <int W>
SolveResult run_bnb(const GPGraph& g) {
  Search<W> search(g);
  DomSet incumbent = greedy_set(g);
  if (g.pristine() && g.k() == 2) {
    DomSet pattern = construct_fault_free(g.n());
    if (pattern.size() < incumbent.size()) incumbent = pattern;
  }
  int best = incumbent.size();
  Mask<W> best_set;
  search.minimise(best, best_set);
  SolveResult r;
  r.engine = Engine::BnB;
  r.stats.nodes_or_states = search.nodes();
  if (best < incumbent.size()) {
    r.gamma = best;
    r.certificate = to_domset(best_set, g.n());
  } else {
    r.gamma = incumbent.size();
    r.certificate = incumbent;
  }
  return r;
}

template <class F>
auto dispatch_width(int slots, F&& fn) {
  if (slots <= 64) return fn.template operator()<1>();
  if (slots <= 128) return fn.template operator()<2>();
  if (slots <= 256) return fn.template operator()<4>();
  if (slots <= 512) return fn.template operator()<8>();
  if (slots <= 1024) return fn.template operator()<16>();
  throw Error(ErrorCode::SizeLimit, "branch and bound supports at most 1024 slots");
}

}  // namespace

SolveResult solve_bnb(const GPGraph& g, const BnbOptions& opts) {
  if (!opts.force && g.live_count() > opts.max_live)
    throw Error(ErrorCode::SizeLimit, std::to_string(g.live_count()) + " live vertices exceed the limit of " +
                                          std::to_string(opts.max_live));
  const auto start = std::chrono::steady_clock::now();
  SolveResult r = dispatch_width(g.slot_count(), [&]<int W>() { return run_bnb<W>(g); });
  r.stats.elapsed = std::chrono::steady_clock::now() - start;
  if (!is_dominating(g, r.certificate) || r.certificate.size() != r.gamma)
    throw Error(ErrorCode::ConstructionBug, "branch and bound produced an invalid certificate");
  return r;
}

Enumeration enumerate_minimum_sets(const GPGraph& g, std::size_t cap, int max_live) {
  if (g.live_count() > max_live)
    throw Error(ErrorCode::SizeLimit, std::to_string(g.live_count()) +
                                          " live vertices exceed the enumeration limit of " +
                                          std::to_string(max_live));
  Enumeration e;
  e.gamma = solve_bnb(g, {.max_live = max_live}).gamma;
  dispatch_width(g.slot_count(), [&]<int W>() {
    Search<W> search(g);
    std::vector<Mask<W>> found;
    search.collect(e.gamma, cap, found, e.truncated);
    for (const auto& m : found) e.sets.push_back(to_domset(m, g.n()));
    return 0;
  });
  std::sort(e.sets.begin(), e.sets.end(), lex_less);
  return e;
}

CertificateReport verify_certificate(const GPGraph& g, const DomSet& s, int claimed) {
  CertificateReport rep;
  rep.claimed = claimed;
  rep.size = s.size();
  try {
    const SlotSet missing = undominated(g, s);
    rep.dominating = missing.none();
    missing.for_each([&](int slot) { rep.undominated.push_back(Vertex::from_slot(slot, g.n())); });
  } catch (const Error& e) {
    rep.error = e.what();
    return rep;
  }
  rep.size_matches = rep.size == claimed;
  if (g.k() == 2 && g.deleted_edges().empty() && g.deleted_vertices().size() == 1 &&
      g.deleted_vertices().front().ring == Ring::Outer) {
    rep.window_high = ceil_three_fifths(g.n());
    rep.window_low = rep.window_high - 1;
    rep.window_ok = rep.window_low <= claimed && claimed <= rep.window_high;
  }
  return rep;
}

}  // namespace gpdom
