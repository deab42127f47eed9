#pragma once

#include <array>
#include <limits>

#include "signedhom/graph.hpp"

namespace signedhom {

// Sentinel for "no closed walk of this type"; compares above every length.
constexpr int kNoClosedWalk = std::numeric_limits<int>::max();

enum class WalkParity { Even = 0, Odd = 1 };

// Lengths of shortest closed walks by (length parity, walk sign). With any
// edge present, the even/positive entry is at most 2 (traverse it twice); a
// negative loop makes the odd/negative entry 1.
struct GirthTable {
  std::array<int, 4> len{kNoClosedWalk, kNoClosedWalk, kNoClosedWalk, kNoClosedWalk};

  static constexpr int index(WalkParity p, Sign s) {
    return static_cast<int>(p) * 2 + (s == Sign::Negative ? 1 : 0);
  }
  int& at(WalkParity p, Sign s) { return len[index(p, s)]; }
  int at(WalkParity p, Sign s) const { return len[index(p, s)]; }

  // Entrywise >=, the homomorphism precondition on girths.
  bool dominates(const GirthTable& o) const {
    for (int i = 0; i < 4; ++i)
      if (len[i] < o.len[i]) return false;
    return true;
  }

  friend bool operator==(const GirthTable& a, const GirthTable& b) { return a.len == b.len; }
};

// Shortest closed walk of each type via BFS over (vertex, parity, sign)
// states, minimized over all base vertices.
GirthTable signed_girths(const SignedGraph& g);

}  // namespace signedhom
