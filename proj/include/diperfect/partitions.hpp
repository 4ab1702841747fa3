#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diperfect/digraph.hpp"

namespace diperfect {

// Vertex-disjoint paths covering all of V(D).
struct PathPartition {
  std::vector<Path> paths;
};

enum class PartitionMode { alpha, begin_end };

bool is_path_partition(const Digraph& d, const PathPartition& pp);

// Every path contains exactly one vertex of S.
bool is_orthogonal(const VertexSet& s, const PathPartition& pp);

// Every vertex of S is the initial or the final vertex of its path.
bool endpoints_cover(const VertexSet& s, const PathPartition& pp);

// Valid partition + orthogonal (+ endpoint condition in begin_end mode).
bool is_admissible(const Digraph& d, const VertexSet& s, const PathPartition& pp,
                   PartitionMode mode);

// Paths sorted lexicographically; the canonical form used for comparisons.
PathPartition normalized(PathPartition pp);
bool partitions_equal(const PathPartition& a, const PathPartition& b);

// Exact backtracking search seeded on the S-vertices: each grows one path
// over uncovered non-S vertices, so |P| = |S| is forced by construction.
// Returns the first admissible partition in a fixed deterministic order, or
// nullopt when none exists.  Throws std::invalid_argument if S is not stable.
std::optional<PathPartition> find_S_path_partition(const Digraph& d, const VertexSet& s);
std::optional<PathPartition> find_SBE_path_partition(const Digraph& d, const VertexSet& s);

// Quantifies over every maximum stable set of D.
struct PropertyVerdict {
  bool holds = true;
  std::optional<VertexSet> failing_stable_set;
  std::vector<std::pair<VertexSet, PathPartition>> witness_partitions;
};

PropertyVerdict satisfies_alpha_property(const Digraph& d);
PropertyVerdict satisfies_be_property(const Digraph& d);

// Optional memo for diperfection sweeps, keyed by an injected canonical-form
// hash with exact isomorphism confirmation on collisions (see canonical.hpp
// for the standard provider).  Entries are write-once; guarded for use by
// concurrent sweeps.  Correctness never depends on the hash quality.
class PropertyMemo {
 public:
  PropertyMemo(std::function<std::uint64_t(const Digraph&)> hash,
               std::function<bool(const Digraph&, const Digraph&)> isomorphic)
      : hash_(std::move(hash)), isomorphic_(std::move(isomorphic)) {}

  std::optional<bool> lookup(PartitionMode mode, const Digraph& d);
  void store(PartitionMode mode, const Digraph& d, bool holds);

 private:
  struct Entry {
    Digraph representative;
    bool holds;
  };
  std::function<std::uint64_t(const Digraph&)> hash_;
  std::function<bool(const Digraph&, const Digraph&)> isomorphic_;
  std::unordered_multimap<std::uint64_t, Entry> alpha_, be_;
  std::mutex mutex_;
};

// Checks the property on D[X] for every X, in increasing size then
// lexicographic order, short-circuiting on the first failure.
struct DiperfectVerdict {
  bool holds = true;
  std::optional<VertexSet> failing_subset;           // X with D[X] lacking the property
  std::optional<VertexSet> failing_stable_set;       // the bad stable set inside D[X]
};

DiperfectVerdict is_alpha_diperfect(const Digraph& d, PropertyMemo* memo = nullptr);
DiperfectVerdict is_be_diperfect(const Digraph& d, PropertyMemo* memo = nullptr);

}  // namespace diperfect
