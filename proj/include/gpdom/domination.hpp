#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpdom/graph.hpp"
#include "gpdom/slot_set.hpp"
#include "gpdom/vertex.hpp"

namespace gpdom {

/// Candidate dominating set: a membership bitmap over the 2n vertex slots.
class DomSet {
 public:
  DomSet() = default;
  explicit DomSet(int n) : n_(n), bits_(2 * n) {}
  DomSet(int n, std::span<const Vertex> vertices);
  DomSet(int n, std::initializer_list<Vertex> vertices)
      : DomSet(n, std::span<const Vertex>(vertices.begin(), vertices.size())) {}

  int n() const { return n_; }
  int size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Vertex v) const { return bits_.test(v.slot(n_)); }
  bool contains_slot(int s) const { return bits_.test(s); }
  void insert(Vertex v) { bits_.set(Vertex::mod(v.index, n_) + (v.ring == Ring::Inner ? n_ : 0)); }
  void erase(Vertex v) { bits_.reset(Vertex::mod(v.index, n_) + (v.ring == Ring::Inner ? n_ : 0)); }

  const SlotSet& bits() const { return bits_; }
  SlotSet& bits() { return bits_; }

  /// Members in slot order (outer ring first).
  std::vector<Vertex> vertices() const;

  friend bool operator==(const DomSet&, const DomSet&) = default;

 private:
  int n_ = 0;
  SlotSet bits_;
};

/// Lexicographic comparison of the sorted slot lists.
bool lex_less(const DomSet& a, const DomSet& b);

std::string format_set(const DomSet& s, int base = 0);

/// Throws invalid-set if `s` was built for another n or holds a deleted slot.
void require_valid_set(const GPGraph& g, const DomSet& s);

bool is_dominating(const GPGraph& g, const DomSet& s);

/// Live slots not covered by N[s].
SlotSet undominated(const GPGraph& g, const DomSet& s);

/// The block B_i of P(n,2) and the partition of B_i - u_i.
struct Block {
  int center = 0;
  std::vector<Vertex> all;  // B_i, slot order, deduplicated
  std::vector<Vertex> left;    // L_i = {v_{i-1}, u_{i-2}, v_{i-2}}
  std::vector<Vertex> middle;  // M_i = {u_{i-1}, v_i, u_{i+1}}
  std::vector<Vertex> right;   // R_i = {v_{i+1}, u_{i+2}, v_{i+2}}
  std::vector<Vertex> outward_left;   // N+(L_i) = {v_{i-3}, u_{i-3}, v_{i-4}}
  std::vector<Vertex> outward_right;  // N+(R_i) = {v_{i+3}, u_{i+3}, v_{i+4}}
};

Block block(int i, int n);

/// |{members of s among the listed vertices}|, counting each listed entry.
int count_in(const DomSet& s, std::span<const Vertex> vs);

/// gamma_i(S) = |B_i ∩ S| for every i, as cyclic 5-column window sums of the
/// per-column membership counts.
std::vector<int> gammas(const DomSet& s);

enum class TypeTag { NotTypeI, TypeI, TypeII, TypeIIIa, TypeIIIb, TypeIIIc, TypeIIId, NoFault };

const char* to_string(TypeTag t);
bool is_type2_or_3(TypeTag t);

/// Indices {f-2, ..., f+2} mod n, deduplicated and sorted.
std::vector<int> fault_window(int f, int n);

struct BlockProfile {
  std::vector<int> gammas;
  int couple_number = 0;
  std::vector<int> fault_window;
  TypeTag type = TypeTag::NoFault;
  std::vector<int> pseudo_couples;
  std::vector<int> self_contained;
};

/// Members of B_f ∩ S encoded as a 10-bit mask relative to f:
/// bit (o + 2) for u_{f+o}, bit (7 + o) for v_{f+o}, o in [-2, 2].
using BlockPattern = unsigned;

namespace pattern {
constexpr BlockPattern u(int o) { return 1u << (o + 2); }
constexpr BlockPattern v(int o) { return 1u << (7 + o); }

constexpr BlockPattern kTypeII = u(-2) | v(1) | v(2);
constexpr BlockPattern kTypeIIIa = v(-1) | v(1) | u(2) | v(2);
constexpr BlockPattern kTypeIIIb = u(-2) | v(-2) | u(2) | v(2);
constexpr BlockPattern kTypeIIIc = v(-2) | v(-1) | v(1) | v(2);
constexpr BlockPattern kTypeIIId = u(-2) | v(-2) | v(1) | u(2);

BlockPattern mirror(BlockPattern p);
}  // namespace pattern

BlockPattern block_pattern(const DomSet& s, int f);

/// Couple number: |{i ∉ F : gamma_i = 2}|; zero without an outer fault.
int couple_number(const DomSet& s, const FaultSpec& fault);

TypeTag classify(const GPGraph& g, const DomSet& s, const FaultSpec& fault);

/// Same scan without the Type II/III precondition; needs an outer fault.
std::vector<int> pseudo_couple_candidates(const DomSet& s, const FaultSpec& fault);
/// i ∉ F with no inner member among v_{i-1}, v_i, v_{i+1}. Throws
/// not-applicable unless `s` classifies as Type II or III.
std::vector<int> pseudo_couple_vertices(const GPGraph& g, const DomSet& s, const FaultSpec& fault);

/// Indices i with B_i ∩ S = {u_{i-2}, v_i, v_{i+1}} exactly.
std::vector<int> self_contained_blocks(const GPGraph& g, const DomSet& s);

/// Profile of `s`. Pseudo-couples are filled only for Type II/III sets.
BlockProfile gamma_profile(const GPGraph& g, const DomSet& s, const FaultSpec& fault);

}  // namespace gpdom
