#include "gpdom/domination.hpp"

#include <algorithm>

#include "gpdom/error.hpp"
#include "gpdom/kernels.hpp"

namespace gpdom {

DomSet::DomSet(int n, std::span<const Vertex> vertices) : DomSet(n) {
  for (const Vertex& v : vertices) insert(v);
}

std::vector<Vertex> DomSet::vertices() const {
  std::vector<Vertex> out;
  bits_.for_each([&](int s) { out.push_back(Vertex::from_slot(s, n_)); });
  return out;
}

bool lex_less(const DomSet& a, const DomSet& b) {
  int x = a.bits().first(), y = b.bits().first();
  while (x >= 0 && y >= 0) {
    if (x != y) return x < y;
    x = a.bits().next(x + 1);
    y = b.bits().next(y + 1);
  }
  return x < 0 && y >= 0;
}

std::string format_set(const DomSet& s, int base) {
  std::string out = "{";
  bool first = true;
  for (const Vertex& v : s.vertices()) {
    if (!first) out += ", ";
    out += format_vertex(v, base);
    first = false;
  }
  return out + "}";
}

void require_valid_set(const GPGraph& g, const DomSet& s) {
  if (s.n() != g.n())
    throw Error(ErrorCode::InvalidSet, "set built for n=" + std::to_string(s.n()) + ", graph has n=" +
                                           std::to_string(g.n()));
  if (!s.bits().subset_of(g.live_set())) {
    SlotSet dead = s.bits();
    dead.subtract(g.live_set());
    throw Error(ErrorCode::InvalidSet,
                "set contains deleted vertex " + format_vertex(Vertex::from_slot(dead.first(), g.n())));
  }
}

SlotSet undominated(const GPGraph& g, const DomSet& s) {
  require_valid_set(g, s);
  std::vector<int> rows;
  rows.reserve(s.size());
  s.bits().for_each([&](int v) { rows.push_back(v); });
  SlotSet covered(g.slot_count());
  kernels::active().cover_union(g.closed_matrix().data(), g.words(), rows.data(),
                                static_cast<int>(rows.size()), covered.words().data());
  SlotSet missing = g.live_set();
  missing.subtract(covered);
  return missing;
}

bool is_dominating(const GPGraph& g, const DomSet& s) { return undominated(g, s).none(); }

Block block(int i, int n) {
  Block b;
  b.center = Vertex::mod(i, n);
  auto U = [n, i](int o) { return Vertex::outer(i + o, n); };
  auto V = [n, i](int o) { return Vertex::inner(i + o, n); };
  for (int o = -2; o <= 2; ++o) {
    b.all.push_back(U(o));
    b.all.push_back(V(o));
  }
  std::sort(b.all.begin(), b.all.end(), [n](Vertex x, Vertex y) { return x.slot(n) < y.slot(n); });
  b.all.erase(std::unique(b.all.begin(), b.all.end()), b.all.end());
  b.left = {V(-1), U(-2), V(-2)};
  b.middle = {U(-1), V(0), U(1)};
  b.right = {V(1), U(2), V(2)};
  b.outward_left = {V(-3), U(-3), V(-4)};
  b.outward_right = {V(3), U(3), V(4)};
  return b;
}

int count_in(const DomSet& s, std::span<const Vertex> vs) {
  int c = 0;
  for (const Vertex& v : vs) c += s.contains(v) ? 1 : 0;
  return c;
}

std::vector<int> gammas(const DomSet& s) {
  const int n = s.n();
  std::vector<std::int32_t> columns(n), sums(n);
  for (int j = 0; j < n; ++j)
    columns[j] = (s.contains_slot(j) ? 1 : 0) + (s.contains_slot(n + j) ? 1 : 0);
  kernels::active().window_sums(columns.data(), n, 2, sums.data());
  return {sums.begin(), sums.end()};
}

const char* to_string(TypeTag t) {
  switch (t) {
    case TypeTag::NotTypeI: return "NotTypeI";
    case TypeTag::TypeI: return "TypeI";
    case TypeTag::TypeII: return "TypeII";
    case TypeTag::TypeIIIa: return "TypeIIIa";
    case TypeTag::TypeIIIb: return "TypeIIIb";
    case TypeTag::TypeIIIc: return "TypeIIIc";
    case TypeTag::TypeIIId: return "TypeIIId";
    case TypeTag::NoFault: return "NoFault";
  }
  return "?";
}

bool is_type2_or_3(TypeTag t) {
  return t == TypeTag::TypeII || t == TypeTag::TypeIIIa || t == TypeTag::TypeIIIb ||
         t == TypeTag::TypeIIIc || t == TypeTag::TypeIIId;
}

std::vector<int> fault_window(int f, int n) {
  std::vector<int> w;
  for (int o = -2; o <= 2; ++o) w.push_back(Vertex::mod(f + o, n));
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

namespace pattern {
BlockPattern mirror(BlockPattern p) {
  BlockPattern out = 0;
  for (int o = -2; o <= 2; ++o) {
    if (p & u(o)) out |= u(-o);
    if (p & v(o)) out |= v(-o);
  }
  return out;
}
}  // namespace pattern

BlockPattern block_pattern(const DomSet& s, int f) {
  const int n = s.n();
  BlockPattern p = 0;
  for (int o = -2; o <= 2; ++o) {
    if (s.contains(Vertex::outer(f + o, n))) p |= pattern::u(o);
    if (s.contains(Vertex::inner(f + o, n))) p |= pattern::v(o);
  }
  return p;
}

namespace {

bool in_window(int i, const std::vector<int>& window) {
  return std::binary_search(window.begin(), window.end(), i);
}

}  // namespace

int couple_number(const DomSet& s, const FaultSpec& fault) {
  if (!fault.is_outer()) return 0;
  const auto window = fault_window(fault.faulted->index, s.n());
  const auto g = gammas(s);
  int c = 0;
  for (int i = 0; i < s.n(); ++i)
    if (g[i] == 2 && !in_window(i, window)) ++c;
  return c;
}

TypeTag classify(const GPGraph& g, const DomSet& s, const FaultSpec& fault) {
  require_valid_set(g, s);
  const auto gs = gammas(s);
  if (std::any_of(gs.begin(), gs.end(), [](int x) { return x <= 1; })) return TypeTag::NotTypeI;
  if (!fault.present()) return TypeTag::NoFault;
  if (!fault.is_outer()) return TypeTag::TypeI;

  const int f = fault.faulted->index;
  const BlockPattern p = block_pattern(s, f);
  const BlockPattern q = pattern::mirror(p);
  auto matches = [&](BlockPattern want) { return p == want || q == want; };
  if (gs[f] == 3 && matches(pattern::kTypeII)) return TypeTag::TypeII;
  if (gs[f] == 4) {
    if (matches(pattern::kTypeIIIa)) return TypeTag::TypeIIIa;
    if (matches(pattern::kTypeIIIb)) return TypeTag::TypeIIIb;
    if (matches(pattern::kTypeIIIc)) return TypeTag::TypeIIIc;
    if (matches(pattern::kTypeIIId)) return TypeTag::TypeIIId;
  }
  return TypeTag::TypeI;
}

std::vector<int> pseudo_couple_candidates(const DomSet& s, const FaultSpec& fault) {
  if (!fault.is_outer()) throw Error(ErrorCode::NotApplicable, "pseudo-couples need an outer fault");
  const int n = s.n();
  const auto window = fault_window(fault.faulted->index, n);
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (in_window(i, window)) continue;
    if (!s.contains(Vertex::inner(i - 1, n)) && !s.contains(Vertex::inner(i, n)) &&
        !s.contains(Vertex::inner(i + 1, n)))
      out.push_back(i);
  }
  return out;
}

std::vector<int> pseudo_couple_vertices(const GPGraph& g, const DomSet& s, const FaultSpec& fault) {
  const TypeTag t = classify(g, s, fault);
  if (!is_type2_or_3(t))
    throw Error(ErrorCode::NotApplicable, std::string("pseudo-couples need a Type II/III set, got ") +
                                              to_string(t));
  return pseudo_couple_candidates(s, fault);
}

std::vector<int> self_contained_blocks(const GPGraph& g, const DomSet& s) {
  require_valid_set(g, s);
  constexpr BlockPattern want = pattern::u(-2) | pattern::v(0) | pattern::v(1);
  std::vector<int> out;
  for (int i = 0; i < s.n(); ++i)
    if (block_pattern(s, i) == want) out.push_back(i);
  return out;
}

BlockProfile gamma_profile(const GPGraph& g, const DomSet& s, const FaultSpec& fault) {
  require_valid_set(g, s);
  BlockProfile p;
  p.gammas = gammas(s);
  p.couple_number = couple_number(s, fault);
  if (fault.is_outer()) p.fault_window = fault_window(fault.faulted->index, s.n());
  p.type = classify(g, s, fault);
  if (is_type2_or_3(p.type)) p.pseudo_couples = pseudo_couple_vertices(g, s, fault);
  p.self_contained = self_contained_blocks(g, s);
  return p;
}

}  // namespace gpdom
