#pragma once

#include <optional>
#include <vector>

#include "signedhom/graph.hpp"

namespace signedhom {

// Flips every non-loop edge with exactly one endpoint in s. Loop signs are
// invariant. Involution: switched(switched(g, s), s) == g.
SignedGraph switched(const SignedGraph& g, const SwitchSet& s);

// Finds a switch set carrying g's signature onto sigma2 (one sign per alive
// edge, in alive-id order), or nullopt when the signatures are not switching
// equivalent. The disagreement edge set must be an edge cut; each component is
// 2-colored to decide.
std::optional<SwitchSet> is_switching_equivalent(const SignedGraph& g,
                                                 const std::vector<Sign>& sigma2);

}  // namespace signedhom
