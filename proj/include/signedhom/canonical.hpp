#pragma once

#include <string>

#include "signedhom/graph.hpp"

namespace signedhom {

// Canonical encoding of a signed graph up to vertex relabeling and switching:
// two graphs get equal keys exactly when some bijection composed with some
// switching maps one onto the other.
struct CanonicalKey {
  std::string bytes;

  friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes == b.bytes;
  }
  friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes < b.bytes;
  }

  std::string hex() const;  // short stable digest for filenames
};

// Minimum encoding over relabelings (restricted to degree-respecting ones)
// and over all switchings per labeling. Handles loops and parallel edges;
// intended for small graphs, hence the vertex limit.
CanonicalKey canonical_form(const SignedGraph& g, int max_n = 10);

}  // namespace signedhom
