#pragma once

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "ksphere/chi.hpp"
#include "ksphere/rep.hpp"

namespace ksphere {

// Subset of basis indices, as a bitmask.
using IndexSet = std::uint32_t;

// The working state of a reduction: an ordered independent character basis
// (the "vertices"), a system of distinct nonempty subsets of it whose
// subset-sums are the characters of S, and the accumulated sign. The
// represented character set is recoverable via char_of; sign * chi(S) is
// constant across all moves.
struct Hypergraph {
  int ambient_n = 0;
  std::vector<F2Vec> basis;
  std::set<IndexSet> sets;
  int sign = +1;

  int p() const { return static_cast<int>(basis.size()); }
  F2Vec char_of(IndexSet s) const;
  std::vector<F2Vec> char_set() const;  // sorted
  // Number of cardinality-2 sets containing vertex v.
  int degree(int v) const;
  int max_set_cardinality() const;
  bool is_graph() const { return max_set_cardinality() <= 2; }
};

// --- Moves -----------------------------------------------------------------

// S <- S symmetric-difference {a,b,c,ab,ac,bc,abc}; flips the sign (the
// octet's trivial summand is desuspended). Requires a, b, c independent.
struct SpinToggle {
  F2Vec a, b, c;
  friend bool operator==(const SpinToggle&, const SpinToggle&) = default;
};

// Change of basis: new_basis[i] = sum of old_basis[j] over bits j of
// map.rows[i]. The character set S is untouched; only its expression as
// subsets changes. Requires map invertible and sized to the current basis.
struct BaseChange {
  F2Matrix map;
  friend bool operator==(const BaseChange&, const BaseChange&) = default;
};

// Replace the basis outright with the given independent list, which must
// still span S. Accepted by replay; the standard reduction never emits it.
struct Rebuild {
  std::vector<F2Vec> basis;
  friend bool operator==(const Rebuild&, const Rebuild&) = default;
};

// Declares the graph split into connected components (vertex index lists,
// each sorted, ordered by smallest vertex). Vertices in no set are free.
struct KunnethSplit {
  std::vector<std::vector<int>> components;
  friend bool operator==(const KunnethSplit&, const KunnethSplit&) = default;
};

enum class BasePattern {
  marked_vertex,  // S = {v}           -> (0, 0) on local rank 1
  bare_edge,      // S = {vw}          -> (1, 0) on local rank 2
  edge_one_mark,  // S = {v, vw}       -> (0, 0) on local rank 2
  hard_triangle,  // S = {v, w, vw}    -> (0, 1) on local rank 2
};

const char* to_string(BasePattern p);

struct BaseCase {
  std::vector<int> vertices;  // sorted component vertices
  BasePattern pattern;
  KResult local;
  friend bool operator==(const BaseCase&, const BaseCase&) = default;
};

using Move = std::variant<SpinToggle, BaseChange, Rebuild, KunnethSplit, BaseCase>;

struct TraceStep {
  Move move;
  // Optional checkpoint: sign * chi(S) after the move, which a valid trace
  // keeps equal to chi of the original representation.
  std::optional<std::int64_t> chi;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// Machine-checkable certificate of one reducer run.
struct Trace {
  CanonicalRep initial;
  std::vector<TraceStep> steps;
  KResult result;
  int toggle_count() const;
  friend bool operator==(const Trace&, const Trace&) = default;
};

// --- Operations --------------------------------------------------------------

Hypergraph build_hypergraph(const CanonicalRep& rep);

// Apply one move to the state (no validation beyond hard preconditions).
void apply_spin_toggle(Hypergraph& h, F2Vec a, F2Vec b, F2Vec c);
void apply_base_change(Hypergraph& h, const F2Matrix& map);
void apply_rebuild(Hypergraph& h, const std::vector<F2Vec>& basis);

// Pure single-move convenience used by tests.
Hypergraph spin_toggle(Hypergraph h, F2Vec a, F2Vec b, F2Vec c);

// Eliminate all sets of cardinality >= 3. Each pass toggles the triple
// (first vertex, second vertex, product of the rest) of a largest set;
// the measure (max cardinality, count at max) strictly decreases.
Hypergraph to_graph(Hypergraph h, std::vector<Move>* log = nullptr);

// Bring vertex v down to degree <= 1 on a graph. Each pass toggles v with
// its two smallest neighbors w < u, re-expresses the basis with w replaced
// by w+u, and re-graphs the cardinality-3 sets that appeared (none of which
// touch v). Asserts the degree drop claimed by the construction.
Hypergraph reduce_vertex(Hypergraph h, int v, std::vector<Move>* log = nullptr);

struct Component {
  std::vector<int> vertices;    // sorted
  std::vector<IndexSet> sets;   // masks over the full basis, sorted
};

struct SplitResult {
  std::vector<Component> components;  // ordered by smallest vertex
  int free_rank = 0;                  // ambient_n minus sum of local ranks
};

// Requires a graph of maximum degree 1.
SplitResult split_components(const Hypergraph& h);

std::pair<BasePattern, KResult> eval_component(const Component& comp);

struct ReduceOptions {
  // Record sign*chi(S) after every move into the trace.
  bool with_checkpoints = false;
  // Cross-check sign*chi(S) against the oracle after every move (slow path).
  bool debug_chi = false;
};

// The full reduction: canonicalize, build, graph, reduce vertices in basis
// order until every degree is <= 1, split, evaluate, combine. Deterministic;
// emits the complete trace.
std::pair<KResult, Trace> reduce(const RepMultiset& rep, const ReduceOptions& options = {});

// Re-applies each move with every precondition re-checked, verifying chi
// checkpoints against the oracle when present. Returns the final result or
// throws InvalidMoveError / CheckpointMismatchError with the location.
KResult replay_trace(const RepMultiset& rep, const Trace& trace);

}  // namespace ksphere
