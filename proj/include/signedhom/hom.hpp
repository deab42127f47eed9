#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "signedhom/graph.hpp"

namespace signedhom {

// A node budget large enough to be unreachable on desk-scale inputs while
// still finite, so runaway searches surface as Undecided instead of hanging.
constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ull;

// Default assignment budget for the brute-force enumeration oracle.
constexpr std::uint64_t kDefaultEnumBudget = 100'000'000ull;

enum class SolveStatus { Found, Absent, Undecided };

// Vertex map plus a switch set on the source. Valid when, after switching the
// source at switch_set, every source edge lands on a target edge of the same
// sign (loops map to loops).
struct Homomorphism {
  std::vector<int> mapping;
  SwitchSet switch_set;
};

struct SolveOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Absent;
  std::optional<Homomorphism> witness;
  std::uint64_t nodes = 0;

  bool found() const { return status == SolveStatus::Found; }
};

// Edge-sign preserving homomorphism (no switching anywhere).
SolveResult esp_hom(const SignedGraph& g, const SignedGraph& h, const SolveOptions& = {});

// Switching homomorphism: one CSP variable per source vertex ranging over
// (target vertex, switch bit); an edge u-v of sign s matches target pair
// (a, b) iff the target has an edge a-b of sign s * bit(u) * bit(v).
SolveResult hom(const SignedGraph& g, const SignedGraph& h, const SolveOptions& = {});

// Extends a partial vertex map; switching is permitted only at the listed
// free vertices, pinned vertices never switch.
SolveResult extend_esp_hom(const SignedGraph& g, const SignedGraph& h,
                           const std::vector<std::pair<int, int>>& partial,
                           const std::vector<int>& switch_allowed, const SolveOptions& = {});

// O(e) direct validity check, independent of the solver's tables.
bool valid_homomorphism(const SignedGraph& g, const SignedGraph& h, const Homomorphism& hm);

// Brute-force oracle: complete enumeration of |V(h)|^|V(g)| assignments.
// Throws when the assignment count exceeds the budget.
std::vector<Homomorphism> all_esp_homs(const SignedGraph& g, const SignedGraph& h,
                                       std::uint64_t budget = kDefaultEnumBudget);

}  // namespace signedhom
