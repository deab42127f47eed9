#include "signedhom/critical.hpp"

namespace signedhom {

GirthDomination girth_dominates(const SignedGraph& g, const SignedGraph& h) {
  GirthDomination d;
  d.source = signed_girths(g);
  d.target = signed_girths(h);
  d.ok = d.source.dominates(d.target);
  return d;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Critical: return "critical";
    case Verdict::Maps: return "maps";
    case Verdict::GirthViolation: return "girth_violation";
    case Verdict::NonMinimal: return "non_minimal";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

CriticalityReport is_critical(const SignedGraph& g, const SignedGraph& h,
                              const SolveOptions& opts) {
  CriticalityReport rep;
  rep.girth = girth_dominates(g, h);
  if (!rep.girth.ok) {
    rep.verdict = Verdict::GirthViolation;
    return rep;
  }

  SolveResult whole = hom(g, h, opts);
  rep.total_nodes += whole.nodes;
  if (whole.status == SolveStatus::Undecided) {
    rep.verdict = Verdict::Undecided;
    return rep;
  }
  if (whole.found()) {
    rep.verdict = Verdict::Maps;
    rep.hom_witness = std::move(whole.witness);
    return rep;
  }
  rep.refutation_nodes = whole.nodes;

  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      // g - v has the same edges and still fails to map.
      rep.isolated_vertex = v;
      rep.verdict = Verdict::NonMinimal;
      return rep;
    }
  }

  for (int id = 0; id < g.edge_id_limit(); ++id) {
    if (!g.edge_alive(id)) continue;
    SolveResult sub = hom(delete_edge(g, id), h, opts);
    rep.total_nodes += sub.nodes;
    if (sub.status == SolveStatus::Undecided) {
      rep.verdict = Verdict::Undecided;
      return rep;
    }
    if (!sub.found()) {
      rep.failing_edge = id;
      rep.verdict = Verdict::NonMinimal;
      return rep;
    }
    rep.deletion_witnesses.emplace_back(id, std::move(*sub.witness));
  }

  rep.verdict = Verdict::Critical;
  return rep;
}

bool density_check(const SignedGraph& g) {
  return 2 * g.edge_count() >= 3 * g.vertex_count() - 1;
}

bool potential_check(const SignedGraph& g) { return potential(g) <= 1; }

}  // namespace signedhom
