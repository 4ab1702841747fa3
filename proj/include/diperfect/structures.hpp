#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "diperfect/digraph.hpp"

namespace diperfect {

enum class WitnessKind {
  anti_p4,
  anti_directed_odd_cycle,
  blocking_odd_cycle,
  transitive_triangle,
  anti_circulant_violation,
};

const char* to_string(WitnessKind kind);
std::optional<WitnessKind> witness_kind_from_string(const std::string& name);

// Vertex tuple certifying a detected structure.  For cycles the vertices are
// listed in cyclic order starting from the constrained positions (x1, x2, ...).
// For transitive triangles the order is (source, middle, sink).
struct Witness {
  WitnessKind kind;
  std::vector<Vertex> vertices;
};

// Replays the defining arc conditions of w.kind against d.
bool witness_holds(const Digraph& d, const Witness& w);

// Anti-P4: distinct v1,v2,v3,v4 with arcs v1->v2, v3->v2, v3->v4.  Occurrences
// are not required to be induced.  Tuples are enumerated in lexicographic order.
std::optional<Witness> find_anti_p4(const Digraph& d);
std::vector<std::array<Vertex, 4>> all_anti_p4(const Digraph& d);

// First anti-P4 (lexicographic) whose closing arc v4->v1 is missing.
std::optional<Witness> find_anti_circulant_violation(const Digraph& d);
bool is_3_anti_circulant(const Digraph& d);

// Vertex sets X of odd size >= min_len whose induced underlying graph is a
// chordless cycle.  Each set is returned once, in a canonical cyclic order
// (smallest vertex first, towards its smaller cycle neighbor).  min_len must
// be odd and >= 3.  Directed cycles are included; callers filter by
// orientation constraints.
std::vector<std::vector<Vertex>> find_chordless_odd_cycles(const Digraph& d, int min_len);

// Anti-directed odd cycle: induced non-oriented odd cycle x1..x_{2k+1}, k >= 2,
// where each of x1,x2,x3,x4,x6,x8,...,x2k is a source or a sink of the cycle
// subdigraph.  Returns the lexicographically least witness sequence.
std::optional<Witness> find_induced_anti_directed_odd_cycle(const Digraph& d);

// Blocking odd cycle: induced non-oriented odd cycle x1..x_{2k+1}, k >= 1,
// with x1 a source and x2 a sink of the cycle subdigraph.  Length-3 hits are
// exactly induced transitive triangles.
std::optional<Witness> find_induced_blocking_odd_cycle(const Digraph& d);

// Induced transitive triangle, reported as (source, middle, sink).
std::optional<Witness> find_induced_transitive_triangle(const Digraph& d);

// Class B: no induced anti-directed odd cycle.  Class D: no induced blocking
// odd cycle.
bool in_class_b(const Digraph& d);
bool in_class_d(const Digraph& d);

}  // namespace diperfect
