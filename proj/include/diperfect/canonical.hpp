#pragma once

#include <cstdint>

#include "diperfect/digraph.hpp"
#include "diperfect/partitions.hpp"

namespace diperfect {

// Invariant hash: iterated neighborhood refinement over (out, in, digon)
// relations.  Equal for isomorphic digraphs; collisions between
// non-isomorphic digraphs are legal and resolved by exact checks.
std::uint64_t canonical_hash(const Digraph& a);

// Exact isomorphism test: refinement colors first, then backtracking over
// color-compatible assignments.  Intended for desk-scale instances.
bool isomorphic(const Digraph& a, const Digraph& b);

// Memo wired to the two functions above.
PropertyMemo make_property_memo();

}  // namespace diperfect
