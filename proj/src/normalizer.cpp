#include "gpdom/normalizer.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "gpdom/error.hpp"

namespace gpdom {

const char* to_string(Rule r) {
  switch (r) {
    case Rule::Exchange: return "Exchange";
    case Rule::TypeIFix: return "TypeI-Fix";
    case Rule::CoupleReduce: return "CoupleReduce";
    case Rule::Shift3b: return "Shift3b->II";
    case Rule::Shift3c: return "Shift3c->II";
    case Rule::Shift3d: return "Shift3d->IIId";
    case Rule::Shift4e: return "Shift4e->II";
    case Rule::Shift4f: return "Shift4f->II";
    case Rule::Shift4g: return "Shift4g->II";
    case Rule::FaultBlockReduce: return "FaultBlock-Reduce";
  }
  return "?";
}

namespace {

int require_outer_fault(const GPGraph& g, const FaultSpec& fault, const char* op) {
  if (!fault.is_outer())
    throw Error(ErrorCode::NotApplicable, std::string(op) + " needs an outer-vertex fault");
  if (g.live(*fault.faulted))
    throw Error(ErrorCode::NotApplicable, std::string(op) + ": fault vertex is not deleted in the graph");
  return fault.faulted->index;
}

/// Closed neighbourhood of u_f in the undeleted graph.
bool in_fault_neighbourhood(Vertex v, int f, int n) {
  return v == Vertex::outer(f, n) || v == Vertex::outer(f - 1, n) || v == Vertex::outer(f + 1, n) ||
         v == Vertex::inner(f, n);
}

/// Order f+3, f+4, ..., f+2 (mod n).
std::vector<int> scan_order(int f, int n) {
  std::vector<int> order(n);
  for (int t = 0; t < n; ++t) order[t] = Vertex::mod(f + 3 + t, n);
  return order;
}

/// Exchange that additionally refuses to add anything in N[u_f].
std::optional<DomSet> try_exchange(const GPGraph& g, const DomSet& s, Vertex x, Vertex y, int f) {
  if (in_fault_neighbourhood(y, f, g.n())) return std::nullopt;
  if (!s.contains(x) || s.contains(y) || !g.live(y)) return std::nullopt;
  try {
    return exchange(g, s, x, y);
  } catch (const Error&) {
    return std::nullopt;
  }
}

RewriteStep make_step(Vertex removed, Vertex added, Rule rule, const DomSet& after) {
  return {removed, added, rule, gammas(after)};
}

}  // namespace

bool touches_fault(const DomSet& s, const FaultSpec& fault) {
  if (!fault.is_outer()) return false;
  const int n = s.n(), f = fault.faulted->index;
  return s.contains(Vertex::outer(f, n)) || s.contains(Vertex::outer(f - 1, n)) ||
         s.contains(Vertex::outer(f + 1, n)) || s.contains(Vertex::inner(f, n));
}

DomSet exchange(const GPGraph& g, const DomSet& s, Vertex x, Vertex y) {
  require_valid_set(g, s);
  const int n = g.n();
  if (!s.contains(x) || s.contains(y) || y.index < 0 || y.index >= n || !g.live(y))
    throw Error(ErrorCode::InvalidExchange,
                "need " + format_vertex(x) + " in S and live " + format_vertex(y) + " outside S");
  DomSet out = s;
  out.erase(x);
  out.insert(y);
  const SlotSet missing = undominated(g, out);
  if (missing.intersects(g.closed(x.slot(n))) || !missing.none())
    throw Error(ErrorCode::RejectedExchange,
                "swapping " + format_vertex(x) + " for " + format_vertex(y) + " leaves " +
                    format_vertex(Vertex::from_slot(missing.first(), n)) + " undominated");
  return out;
}

Rewrite to_type1(const GPGraph& g, const DomSet& s, const FaultSpec& fault) {
  const int f = require_outer_fault(g, fault, "to_type1");
  require_valid_set(g, s);
  if (touches_fault(s, fault))
    throw Error(ErrorCode::NotApplicable, "to_type1 needs N(u_f) ∩ S = ∅");
  const int n = g.n();
  Rewrite r{s, {}};
  auto ones = [](const std::vector<int>& gs) { return std::count(gs.begin(), gs.end(), 1); };
  auto gs = gammas(r.set);
  while (ones(gs) > 0) {
    if (static_cast<int>(r.steps.size()) >= n)
      throw Error(ErrorCode::Contradiction, "to_type1 exceeded n steps");
    int i = -1;
    for (int j : scan_order(f, n))
      if (gs[j] == 1) {
        i = j;
        break;
      }
    if (!r.set.contains(Vertex::outer(i, n)))
      throw Error(ErrorCode::Contradiction, "gamma_" + std::to_string(i) + " = 1 with u_" +
                                                std::to_string(i) + " outside S");
    const bool forward = Vertex::mod(i + 2, n) != f && Vertex::mod(i + 3, n) != f;
    const Vertex removed = Vertex::outer(forward ? i + 3 : i - 3, n);
    const Vertex added = Vertex::outer(forward ? i + 2 : i - 2, n);
    if (in_fault_neighbourhood(added, f, n))
      throw Error(ErrorCode::Contradiction, "type-I fix would add " + format_vertex(added) + " next to the fault");
    DomSet next = exchange(g, r.set, removed, added);
    const auto next_gs = gammas(next);
    if (ones(next_gs) >= ones(gs))
      throw Error(ErrorCode::Contradiction, "type-I fix at " + std::to_string(i) + " did not reduce the count");
    r.set = std::move(next);
    gs = next_gs;
    r.steps.push_back({removed, added, Rule::TypeIFix, gs});
  }
  return r;
}

CoupleReduction reduce_couples(const GPGraph& g, const DomSet& s, const FaultSpec& fault) {
  const int f = require_outer_fault(g, fault, "reduce_couples");
  const TypeTag tag = classify(g, s, fault);
  if (!is_type2_or_3(tag))
    throw Error(ErrorCode::NotApplicable, std::string("reduce_couples needs a Type II/III set, got ") +
                                              to_string(tag));
  const int n = g.n();
  const auto window = fault_window(f, n);
  auto outside = [&](int i) { return !std::binary_search(window.begin(), window.end(), i); };
  auto is_candidate = [&](const DomSet& cur, const std::vector<int>& gs, int i) {
    return outside(i) && gs[i] == 2 && !cur.contains(Vertex::inner(i - 1, n)) &&
           !cur.contains(Vertex::inner(i, n)) && !cur.contains(Vertex::inner(i + 1, n));
  };

  CoupleReduction out;
  out.set = s;
  out.initial_couples = couple_number(s, fault);
  int couples = out.initial_couples;
  while (true) {
    const auto gs = gammas(out.set);
    bool applied = false;
    for (int i : scan_order(f, n)) {
      if (!is_candidate(out.set, gs, i)) continue;
      if (!out.set.contains(Vertex::outer(i, n)))
        throw Error(ErrorCode::Contradiction, "couple block " + std::to_string(i) + " without u_i in S");
      const std::pair<Vertex, Vertex> moves[2] = {
          {Vertex::outer(i + 3, n), Vertex::outer(i + 2, n)},
          {Vertex::outer(i - 3, n), Vertex::outer(i - 2, n)},
      };
      for (const auto& [removed, added] : moves) {
        auto next = try_exchange(g, out.set, removed, added, f);
        if (!next) continue;
        if (couple_number(*next, fault) != couples - 1 || !is_type2_or_3(classify(g, *next, fault))) continue;
        out.set = std::move(*next);
        --couples;
        out.steps.push_back(make_step(removed, added, Rule::CoupleReduce, out.set));
        applied = true;
        break;
      }
      if (applied) break;
    }
    if (!applied) break;
  }
  out.final_couples = couples;
  const auto gs = gammas(out.set);
  for (int i = 0; i < n; ++i)
    if (is_candidate(out.set, gs, i)) out.stuck.push_back(i);
  return out;
}

Canonical to_canonical_type(const GPGraph& g, const DomSet& s, const FaultSpec& fault) {
  const int f = require_outer_fault(g, fault, "to_canonical_type");
  const int n = g.n();
  const TypeTag tag = classify(g, s, fault);
  if (tag == TypeTag::NotTypeI)
    throw Error(ErrorCode::NotApplicable, "to_canonical_type needs a Type I set");
  if (touches_fault(s, fault))
    throw Error(ErrorCode::NotApplicable, "to_canonical_type needs N(u_f) ∩ S = ∅");
  const auto gs = gammas(s);
  const int gamma_f = gs[f];
  if (gamma_f < 3)
    throw Error(ErrorCode::Contradiction, "gamma_f = " + std::to_string(gamma_f) + " below 3");
  if (gamma_f >= 5) {
    // First swap (slot order) of a B_f member for a vertex outside B_f that
    // keeps S dominating and Type I.
    const Block bf = block(f, n);
    for (const Vertex& x : s.vertices()) {
      if (std::find(bf.all.begin(), bf.all.end(), x) == bf.all.end()) continue;
      for (int slot = 0; slot < g.slot_count(); ++slot) {
        const Vertex y = Vertex::from_slot(slot, n);
        if (std::find(bf.all.begin(), bf.all.end(), y) != bf.all.end()) continue;
        auto next = try_exchange(g, s, x, y, f);
        if (!next || classify(g, *next, fault) == TypeTag::NotTypeI) continue;
        Canonical rest = to_canonical_type(g, *next, fault);
        rest.steps.insert(rest.steps.begin(), make_step(x, y, Rule::FaultBlockReduce, *next));
        return rest;
      }
    }
    throw Error(ErrorCode::InfeasiblePattern, "no swap lowers gamma_f = " + std::to_string(gamma_f));
  }

  using namespace pattern;
  const BlockPattern raw = block_pattern(s, f);

  // Relative offset o maps to index f + o, or f - o in the mirrored frame.
  auto U = [&](int o, bool mir) { return Vertex::outer(mir ? f - o : f + o, n); };
  auto V = [&](int o, bool mir) { return Vertex::inner(mir ? f - o : f + o, n); };

  auto finish = [&](Vertex removed, Vertex added, Rule rule, TypeTag expect) {
    DomSet next = exchange(g, s, removed, added);
    const TypeTag got = classify(g, next, fault);
    if (got != expect)
      throw Error(ErrorCode::Contradiction, std::string(to_string(rule)) + " produced " + to_string(got) +
                                                " instead of " + to_string(expect));
    return Canonical{next, got, {make_step(removed, added, rule, next)}};
  };

  if (gamma_f == 3) {
    const BlockPattern left_mask = u(-2) | v(-2) | v(-1);
    const bool mir = std::popcount(raw & left_mask) == 2;
    const BlockPattern p = mir ? mirror(raw) : raw;
    if (p == kTypeII) return {s, TypeTag::TypeII, {}};
    if (p == (u(-2) | u(2) | v(2))) return finish(U(2, mir), V(1, mir), Rule::Shift3b, TypeTag::TypeII);
    if (p == (v(-1) | v(1) | v(2))) return finish(V(-1, mir), U(-2, mir), Rule::Shift3c, TypeTag::TypeII);
    if (p == (v(-1) | u(2) | v(2))) return finish(U(-3, mir), U(-2, mir), Rule::Shift3d, TypeTag::TypeIIId);
    throw Error(ErrorCode::InfeasiblePattern, "B_f ∩ S = " + format_set(s) + " with gamma_f = 3");
  }

  for (bool mir : {false, true}) {
    const BlockPattern p = mir ? mirror(raw) : raw;
    if (p == kTypeIIIa) return {s, TypeTag::TypeIIIa, {}};
    if (p == kTypeIIIb) return {s, TypeTag::TypeIIIb, {}};
    if (p == kTypeIIIc) return {s, TypeTag::TypeIIIc, {}};
    if (p == kTypeIIId) return {s, TypeTag::TypeIIId, {}};
  }
  for (bool mir : {false, true}) {
    const BlockPattern p = mir ? mirror(raw) : raw;
    if (p == (u(-2) | v(1) | u(2) | v(2))) return finish(U(2, mir), U(3, mir), Rule::Shift4e, TypeTag::TypeII);
    if (p == (u(-2) | v(-2) | v(1) | v(2))) return finish(V(-2, mir), V(-4, mir), Rule::Shift4f, TypeTag::TypeII);
    if (p == (v(-2) | v(-1) | v(1) | u(2))) return finish(V(1, mir), V(3, mir), Rule::Shift4g, TypeTag::TypeII);
  }
  throw Error(ErrorCode::InfeasiblePattern, "B_f ∩ S of " + format_set(s) + " with gamma_f = 4");
}

Normalization normalize(const GPGraph& g, const DomSet& s, const FaultSpec& fault) {
  Normalization out;
  Rewrite t1 = to_type1(g, s, fault);
  out.steps = t1.steps;
  Canonical canon = to_canonical_type(g, t1.set, fault);
  out.steps.insert(out.steps.end(), canon.steps.begin(), canon.steps.end());
  CoupleReduction red = reduce_couples(g, canon.set, fault);
  out.steps.insert(out.steps.end(), red.steps.begin(), red.steps.end());
  out.set = red.set;
  out.tag = classify(g, out.set, fault);
  out.couples_before_reduction = red.initial_couples;
  out.couples_after_reduction = red.final_couples;
  out.stuck = red.stuck;
  return out;
}

std::string format_trace(const std::vector<RewriteStep>& steps, int base) {
  std::string out;
  for (const auto& st : steps) {
    out += to_string(st.rule);
    out += " removed=" + format_vertex(st.removed, base) + " added=" + format_vertex(st.added, base) +
           " gamma_profile_after=[";
    for (std::size_t i = 0; i < st.gammas_after.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(st.gammas_after[i]);
    }
    out += "]\n";
  }
  return out;
}

}  // namespace gpdom
