#pragma once

#include "qmap/qasm.hpp"

namespace qmap {

/// Symmetric, zero-diagonal matrix counting two-qubit gates per qubit pair.
class InteractionGraph {
public:
    InteractionGraph() = default;
    explicit InteractionGraph(int qubit_count);

    int qubit_count() const { return q_; }
    int weight(int i, int j) const;
    void set_weight(int i, int j, int w);
    void add_interaction(int i, int j);

    std::string to_csv() const;

    friend bool operator==(const InteractionGraph&, const InteractionGraph&) = default;

private:
    void check_pair(int i, int j) const;
    int q_ = 0;
    std::vector<int> w_;  // q*q row-major
};

/// Counts every arity-2 gate; single-qubit gates are discarded. Throws on
/// gates of arity >= 3 (lower the circuit first).
InteractionGraph build_interaction_graph(const Circuit& circuit);

struct DegreeInfo {
    std::vector<int> degree;   // incident edges with nonzero weight
    int maxdeg_vertex = 0;     // ties broken toward the lowest index
};

DegreeInfo degree_info(const InteractionGraph& graph);

/// An ordering of all qubits; not necessarily a connected path in the graph.
struct LongPath {
    std::vector<int> order;

    friend bool operator==(const LongPath&, const LongPath&) = default;
};

/// Greedy heavy-edge ordering. Starts at the max-degree vertex, repeatedly
/// follows the heaviest edge to an unvisited neighbor (consuming it), and
/// falls back to the unvisited row holding the largest remaining weight when
/// the previous vertex has no unvisited neighbor. All ties break toward the
/// lowest index, so the result is deterministic.
LongPath long_path(const InteractionGraph& graph);

}  // namespace qmap
