#include "signedhom/hom.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <stdexcept>
#include <unordered_set>

namespace signedhom {

namespace {

// Domains are sets of values (target vertex * 2 + switch bit), so targets up
// to 128 vertices fit.
constexpr int kMaxValues = 256;

struct Bits {
  std::array<std::uint64_t, 4> w{};

  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }
  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) +
           std::popcount(w[3]);
  }
  Bits& operator&=(const Bits& o) {
    for (int i = 0; i < 4; ++i) w[i] &= o.w[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (int i = 0; i < 4; ++i) w[i] |= o.w[i];
    return *this;
  }
  friend bool operator==(const Bits& a, const Bits& b) { return a.w == b.w; }

  template <typename F>
  void for_each(F f) const {
    for (int i = 0; i < 4; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        f(i * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

struct BudgetExceeded {};

int sign_index(Sign s) { return s == Sign::Negative ? 1 : 0; }

// Compatibility tables for one target graph.
struct TargetTables {
  int tn = 0;
  // compat[sign][value]: values of the other endpoint of a source edge with
  // that sign (switch bits folded in).
  std::array<std::vector<Bits>, 2> compat;
  // loop_ok[sign]: values whose target vertex carries a loop of that sign.
  std::array<Bits, 2> loop_ok;

  explicit TargetTables(const SignedGraph& h) : tn(h.vertex_count()) {
    if (tn * 2 > kMaxValues)
      throw std::invalid_argument("hom solver: target too large (128 vertex limit)");
    std::vector<std::array<char, 2>> adj(static_cast<std::size_t>(tn) * tn, {0, 0});
    for (const Edge& e : h.alive_edges()) {
      int si = sign_index(e.sign);
      adj[static_cast<std::size_t>(e.u) * tn + e.v][si] = 1;
      adj[static_cast<std::size_t>(e.v) * tn + e.u][si] = 1;
    }
    for (int si = 0; si < 2; ++si) compat[si].assign(static_cast<std::size_t>(tn) * 2, Bits{});
    for (int t = 0; t < tn; ++t) {
      for (int b = 0; b < 2; ++b) {
        int val = t * 2 + b;
        for (int t2 = 0; t2 < tn; ++t2) {
          for (int b2 = 0; b2 < 2; ++b2) {
            for (int si = 0; si < 2; ++si) {
              // Source sign si becomes si ^ (b != b2) on the target side.
              int need = si ^ (b ^ b2);
              if (adj[static_cast<std::size_t>(t) * tn + t2][need])
                compat[si][val].set(t2 * 2 + b2);
            }
          }
        }
        for (int si = 0; si < 2; ++si)
          if (adj[static_cast<std::size_t>(t) * tn + t][si]) loop_ok[si].set(val);
      }
    }
  }
};

struct Constraint {
  int other;
  int sign;  // sign index of the source edge
};

class Solver {
 public:
  Solver(const SignedGraph& g, const TargetTables& tables) : g_(g), t_(tables) {
    n_ = g.vertex_count();
    cons_.resize(n_);
    std::vector<std::unordered_set<std::uint64_t>> seen(n_);
    for (const Edge& e : g.alive_edges()) {
      if (is_loop(e)) {
        loops_.push_back(e);
        continue;
      }
      int si = sign_index(e.sign);
      auto link = [&](int a, int b) {
        std::uint64_t key = static_cast<std::uint64_t>(b) * 2 + si;
        if (seen[a].insert(key).second) cons_[a].push_back({b, si});
      };
      link(e.u, e.v);
      link(e.v, e.u);
    }
  }

  // pinned: vertex -> target (bit 0, not switchable). switchable: free
  // vertices allowed both bits; everything else gets bit 0 only.
  SolveResult run(const std::vector<std::pair<int, int>>& pinned,
                  const std::vector<char>& switchable, std::uint64_t budget) {
    budget_ = budget;
    nodes_ = 0;
    dom_.assign(n_, Bits{});
    for (int v = 0; v < n_; ++v) {
      for (int t = 0; t < t_.tn; ++t) {
        dom_[v].set(t * 2);
        if (switchable[v]) dom_[v].set(t * 2 + 1);
      }
    }
    for (auto [v, t] : pinned) {
      Bits single{};
      single.set(t * 2);
      dom_[v] = single;
    }
    for (const Edge& e : loops_) dom_[e.u] &= t_.loop_ok[sign_index(e.sign)];

    SolveResult res;
    try {
      bool ok = propagate_all();
      if (ok) ok = search();
      if (ok) {
        Homomorphism hm;
        hm.mapping.resize(n_);
        for (int v = 0; v < n_; ++v) {
          int val = first_value(dom_[v]);
          hm.mapping[v] = val >> 1;
          if (val & 1) hm.switch_set.push_back(v);
        }
        res.status = SolveStatus::Found;
        res.witness = std::move(hm);
      } else {
        res.status = SolveStatus::Absent;
      }
    } catch (const BudgetExceeded&) {
      res.status = SolveStatus::Undecided;
    }
    res.nodes = nodes_;
    return res;
  }

 private:
  static int first_value(const Bits& b) {
    for (int i = 0; i < 4; ++i)
      if (b.w[i]) return i * 64 + std::countr_zero(b.w[i]);
    return -1;
  }

  bool revise(int v, const Constraint& c) {
    // Values of c.other supported by v's current domain.
    Bits allowed{};
    dom_[v].for_each([&](int val) { allowed |= t_.compat[c.sign][val]; });
    Bits next = dom_[c.other];
    next &= allowed;
    if (next == dom_[c.other]) return true;
    dom_[c.other] = next;
    return next.any();
  }

  // AC fixpoint seeded from every vertex (or from one changed vertex).
  bool propagate_all() {
    std::vector<int> queue(n_);
    for (int v = 0; v < n_; ++v) queue[v] = v;
    return propagate(queue);
  }

  bool propagate_from(int v) {
    std::vector<int> queue{v};
    return propagate(queue);
  }

  bool propagate(std::vector<int>& queue) {
    std::vector<char> queued(n_, 0);
    for (int v : queue) queued[v] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      queued[v] = 0;
      for (const Constraint& c : cons_[v]) {
        Bits before = dom_[c.other];
        if (!revise(v, c)) return false;
        if (!(before == dom_[c.other]) && !queued[c.other]) {
          queued[c.other] = 1;
          queue.push_back(c.other);
        }
      }
    }
    return true;
  }

  bool search() {
    int var = -1, best = kMaxValues + 1;
    for (int v = 0; v < n_; ++v) {
      int cnt = dom_[v].count();
      if (cnt > 1 && cnt < best) {
        best = cnt;
        var = v;
      }
    }
    if (var == -1) return true;  // all singletons; AC kept them consistent

    std::vector<int> values;
    values.reserve(best);
    dom_[var].for_each([&](int val) { values.push_back(val); });

    for (int val : values) {
      if (++nodes_ > budget_) throw BudgetExceeded{};
      std::vector<Bits> saved = dom_;
      Bits single{};
      single.set(val);
      dom_[var] = single;
      if (propagate_from(var) && search()) return true;
      dom_ = std::move(saved);
    }
    return false;
  }

  const SignedGraph& g_;
  const TargetTables& t_;
  int n_ = 0;
  std::vector<std::vector<Constraint>> cons_;
  std::vector<Edge> loops_;
  std::vector<Bits> dom_;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
};

SolveResult solve(const SignedGraph& g, const SignedGraph& h,
                  const std::vector<std::pair<int, int>>& pinned,
                  const std::vector<char>& switchable, const SolveOptions& opts) {
  TargetTables tables(h);
  Solver solver(g, tables);
  SolveResult res = solver.run(pinned, switchable, opts.node_budget);
  if (res.found() && !valid_homomorphism(g, h, *res.witness))
    throw std::logic_error("hom solver produced an invalid witness");
  return res;
}

}  // namespace

SolveResult esp_hom(const SignedGraph& g, const SignedGraph& h, const SolveOptions& opts) {
  std::vector<char> switchable(g.vertex_count(), 0);
  return solve(g, h, {}, switchable, opts);
}

SolveResult hom(const SignedGraph& g, const SignedGraph& h, const SolveOptions& opts) {
  std::vector<char> switchable(g.vertex_count(), 1);
  return solve(g, h, {}, switchable, opts);
}

SolveResult extend_esp_hom(const SignedGraph& g, const SignedGraph& h,
                           const std::vector<std::pair<int, int>>& partial,
                           const std::vector<int>& switch_allowed, const SolveOptions& opts) {
  std::vector<char> pinned_flag(g.vertex_count(), 0);
  for (auto [v, t] : partial) {
    if (v < 0 || v >= g.vertex_count() || t < 0 || t >= h.vertex_count())
      throw std::invalid_argument("extend_esp_hom: partial map references invalid ids");
    pinned_flag[v] = 1;
  }
  std::vector<char> switchable(g.vertex_count(), 0);
  for (int v : switch_allowed) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("extend_esp_hom: bad free vertex");
    if (!pinned_flag[v]) switchable[v] = 1;
  }
  return solve(g, h, partial, switchable, opts);
}

bool valid_homomorphism(const SignedGraph& g, const SignedGraph& h, const Homomorphism& hm) {
  const int n = g.vertex_count();
  if (static_cast<int>(hm.mapping.size()) != n) return false;
  for (int img : hm.mapping)
    if (img < 0 || img >= h.vertex_count()) return false;
  std::vector<char> sw(n, 0);
  for (int v : hm.switch_set) {
    if (v < 0 || v >= n) return false;
    sw[v] = 1;
  }
  std::unordered_set<std::uint64_t> target_edges;
  for (const Edge& e : h.alive_edges()) {
    int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    target_edges.insert((static_cast<std::uint64_t>(a) * h.vertex_count() + b) * 2 +
                        sign_index(e.sign));
  }
  for (const Edge& e : g.alive_edges()) {
    Sign s = e.sign;
    if (!is_loop(e) && (sw[e.u] ^ sw[e.v])) s = flipped(s);
    int a = hm.mapping[e.u], b = hm.mapping[e.v];
    if (a > b) std::swap(a, b);
    if (!target_edges.count((static_cast<std::uint64_t>(a) * h.vertex_count() + b) * 2 +
                            sign_index(s)))
      return false;
  }
  return true;
}

std::vector<Homomorphism> all_esp_homs(const SignedGraph& g, const SignedGraph& h,
                                       std::uint64_t budget) {
  const int n = g.vertex_count(), tn = h.vertex_count();
  std::vector<Homomorphism> out;
  if (n == 0) {
    out.push_back(Homomorphism{});
    return out;
  }
  if (tn == 0) return out;
  long double total = 1;
  for (int i = 0; i < n; ++i) total *= tn;
  if (total > static_cast<long double>(budget))
    throw std::invalid_argument("all_esp_homs: assignment budget exceeded");

  Homomorphism hm;
  hm.mapping.assign(n, 0);
  for (;;) {
    if (valid_homomorphism(g, h, hm)) out.push_back(hm);
    int i = n - 1;
    while (i >= 0 && hm.mapping[i] == tn - 1) hm.mapping[i--] = 0;
    if (i < 0) break;
    ++hm.mapping[i];
  }
  return out;
}

}  // namespace signedhom
