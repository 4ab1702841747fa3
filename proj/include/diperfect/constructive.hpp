#pragma once

#include <memory>
#include <optional>
#include <string>

#include "diperfect/digraph.hpp"
#include "diperfect/partitions.hpp"

namespace diperfect {

// Reduction rules replaying the structural lemmas.  Every vertex-deleting
// rule recurses on a proper induced subdigraph of its instance; the mode
// column says under which admissibility notion the rule's splice is valid.
//
//   sink_append        (BE+alpha)  u outside an S-free path P with N+(u)
//                      non-empty and inside V(P): delete the suffix of P from
//                      the first vertex u dominates, append it to the path
//                      ending at u.
//   source_prepend     (BE+alpha)  directional dual of sink_append.
//   arc_splice         (BE+alpha)  arc u1->u2 with u1 not in S, P S-free and
//                      disjoint from {u1,u2}, last(P)->u2, N+(u1) inside
//                      V(P) u {u2}: delete the suffix from the first vertex
//                      u1 dominates, then reattach after u1 or inside the
//                      arc u1u2.
//   arc_splice_dual    (BE+alpha)  directional dual of arc_splice.
//   sandwich           (BE+alpha)  partition (V1,V2,V3) with V1 -> V2 -> V3
//                      (complete domination, no back arcs), D[V2] hamiltonian
//                      and holding at most one S-vertex: delete all of V2 but
//                      one vertex, thread the cycle remainder back through
//                      the kept vertex's path.
//   digon_triangle     (BE)  digon {v1,v2} outside S forming a directed
//                      triangle with v3 in S: delete {v1,v2}, walk the path
//                      at v3 to find which of v1/v2 its outer end dominates,
//                      append/prepend the digon pair.
//   pair_detach        (BE)  N-(v1) = {v2,v3}, N+(v4) inside {v2,v3}, all
//                      outside S: delete {v2,v3}; v1 becomes a source and v4
//                      a sink, so prepend v2 to v1's path and append v3 to
//                      v4's path.
//   single_detach      (BE)  v2,v3 -> v1 and all other neighbors of v2,v3
//                      lie in S: delete v1 and reattach it to the two
//                      length-one paths holding v2 and v3.
//   pendant_prepend    (alpha)  arc v1->v2 with v1 outside S and
//                      N-(v2) = {v1}: delete v1, prepend it to the path that
//                      must start at v2.
//   pendant_append     (alpha)  directional dual of pendant_prepend.
//   s_head_splice      (alpha)  path P whose tail avoids S, u outside P with
//                      last(P)->u and N-(u) inside V(P): delete the tail of
//                      P, reattach before u or inside the arc first(P)->u.
//   s_head_splice_dual (alpha)  directional dual of s_head_splice.
//   transitive_triangle_case (alpha)  induced transitive triangle
//                      (v1,v2,v3): delete {v1,v2} (variant 0) or {v2,v3}
//                      (variant 1) and re-thread them through the path
//                      holding the remaining corner, using the at most one
//                      extra in-neighbor v4 of the sink (variant 0) /
//                      out-neighbor of the source (variant 1).
//   delegate_begin_end (alpha)  instance lies in class D: the begin-end
//                      construction below this node also settles the alpha
//                      instance.  Keeps the digraph, switches the mode.
//   fallback_search    (leaf)  exact backtracking search; records the found
//                      partition.  Covers the cases the proofs close
//                      non-constructively.
enum class Rule {
  fallback_search,
  sink_append,
  source_prepend,
  arc_splice,
  arc_splice_dual,
  sandwich,
  digon_triangle,
  pair_detach,
  single_detach,
  pendant_prepend,
  pendant_append,
  s_head_splice,
  s_head_splice_dual,
  transitive_triangle_case,
  delegate_begin_end,
};

const char* to_string(Rule rule);
std::optional<Rule> rule_from_string(const std::string& name);

// One reduction step.  Vertex ids are local to the node's instance; the
// child certificate lives in the densely re-indexed instance obtained by
// deleting `deleted` (increasing-order re-index, as induced_subdigraph does).
struct Certificate {
  Rule rule = Rule::fallback_search;
  std::vector<Vertex> verts;  // rule-specific tuple, see rule_hypotheses_ok
  Path path;                  // P for the path rules; Hamilton cycle for sandwich
  int index = -1;             // chosen split position in P (sink_append family)
  int variant = 0;            // transitive_triangle_case: 0 deletes {v1,v2}, 1 {v2,v3}
  VertexSet deleted;          // vertices removed before recursing
  PathPartition leaf;         // fallback_search only
  std::unique_ptr<Certificate> child;
};

struct BuildResult {
  PathPartition partition;
  Certificate certificate;
};

// Constructive S_BE-path partition for a 3-anti-circulant digraph in class D
// (preconditions checked; S must be a maximum stable set).  Always succeeds.
BuildResult build_SBE_partition(const Digraph& d, const VertexSet& s);

// Constructive S-path partition for a 3-anti-circulant digraph (class-D
// membership not required).  Always succeeds.
BuildResult build_S_partition(const Digraph& d, const VertexSet& s);

struct VerifyResult {
  bool ok = true;
  std::string error;  // names the offending node on failure
};

// Replays the certificate bottom-up, re-checking every rule's hypotheses and
// splice validity; ok iff the replay reproduces pp and pp is admissible.
VerifyResult verify_certificate(const Digraph& d, const VertexSet& s, const PathPartition& pp,
                                const Certificate& certificate, PartitionMode mode);

struct CertificateStats {
  int nodes = 0;
  int fallback_nodes = 0;
};

CertificateStats certificate_stats(const Certificate& certificate);

}  // namespace diperfect
