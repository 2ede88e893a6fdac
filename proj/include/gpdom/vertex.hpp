#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gpdom {

enum class Ring : std::uint8_t { Outer, Inner };

/// A vertex of P(n,k): `Outer(i)` is u_i, `Inner(i)` is v_i. The index is
/// kept reduced modulo n by every constructor that knows n.
struct Vertex {
  Ring ring = Ring::Outer;
  int index = 0;

  static Vertex outer(int i, int n) { return {Ring::Outer, mod(i, n)}; }
  static Vertex inner(int i, int n) { return {Ring::Inner, mod(i, n)}; }

  /// Slot layout: outer ring in [0, n), inner ring in [n, 2n).
  int slot(int n) const { return ring == Ring::Outer ? index : n + index; }
  static Vertex from_slot(int slot, int n) {
    return slot < n ? Vertex{Ring::Outer, slot} : Vertex{Ring::Inner, slot - n};
  }

  static int mod(int i, int n) {
    int r = i % n;
    return r < 0 ? r + n : r;
  }

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

Vertex rotate(Vertex v, int d, int n);
Vertex reflect(Vertex v, int center, int n);

/// `u3` / `v0`. `base` is added to the index (1 for one-based labels).
std::string format_vertex(Vertex v, int base = 0);

/// Parses `u<i>` / `v<i>` and reduces nothing: the caller validates range.
std::optional<Vertex> parse_vertex(std::string_view text, int base = 0);

/// Nullable single-vertex fault. The closed forms cover outer faults only.
struct FaultSpec {
  std::optional<Vertex> faulted;

  static FaultSpec none() { return {}; }
  static FaultSpec outer(int f, int n) { return {Vertex::outer(f, n)}; }
  bool present() const { return faulted.has_value(); }
  bool is_outer() const { return faulted && faulted->ring == Ring::Outer; }
};

}  // namespace gpdom
