#pragma once

#include <optional>
#include <vector>

#include "diperfect/digraph.hpp"

namespace diperfect {

// Stability number plus every maximum stable set, in lexicographic order.
// The empty digraph yields alpha = 0 with the single empty set.
struct StableSetReport {
  int alpha = 0;
  std::vector<VertexSet> max_stable_sets;
};

// No arc between any two members, in either direction.
bool is_stable(const Digraph& d, const VertexSet& s);
bool is_maximum_stable(const Digraph& d, const VertexSet& s);

// Branch and bound on the underlying graph, vertex-order branching.
StableSetReport stable_sets(const Digraph& d);

// Split of V(D)-S relative to a maximum stable set S: b_plus vertices only
// dominate S, b_minus are only dominated by S, b_pm do both.  Since S is
// maximum the three sets cover V(D)-S.
struct BPartition {
  VertexSet b_plus;
  VertexSet b_minus;
  VertexSet b_pm;
};

BPartition b_partition(const Digraph& d, const VertexSet& s);

// For every v in B+, |N-(v) ∩ B+| <= 1, and for every u in B-,
// |N+(u) ∩ B-| <= 1.  Holds on every 3-anti-circulant digraph; a false
// return carries the offending vertex and signals an implementation bug.
struct BplusIndegreeCheck {
  bool holds = true;
  std::optional<Vertex> counterexample;
};

BplusIndegreeCheck check_lemma_bplus_indegree(const Digraph& d, const VertexSet& s);

}  // namespace diperfect
