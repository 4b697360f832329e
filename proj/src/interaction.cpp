#include "qmap/interaction.hpp"

#include <algorithm>

namespace qmap {

InteractionGraph::InteractionGraph(int qubit_count) : q_(qubit_count) {
    if (qubit_count < 0) throw std::invalid_argument("qubit count must be non-negative");
    w_.assign(static_cast<std::size_t>(q_) * q_, 0);
}

void InteractionGraph::check_pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= q_ || j >= q_) throw std::invalid_argument("qubit index out of range");
    if (i == j) throw std::invalid_argument("self-interaction is not representable");
}

int InteractionGraph::weight(int i, int j) const {
    if (i < 0 || j < 0 || i >= q_ || j >= q_) throw std::invalid_argument("qubit index out of range");
    return w_[static_cast<std::size_t>(i) * q_ + j];
}

void InteractionGraph::set_weight(int i, int j, int w) {
    check_pair(i, j);
    if (w < 0) throw std::invalid_argument("weight must be non-negative");
    w_[static_cast<std::size_t>(i) * q_ + j] = w;
    w_[static_cast<std::size_t>(j) * q_ + i] = w;
}

void InteractionGraph::add_interaction(int i, int j) {
    check_pair(i, j);
    ++w_[static_cast<std::size_t>(i) * q_ + j];
    ++w_[static_cast<std::size_t>(j) * q_ + i];
}

std::string InteractionGraph::to_csv() const {
    std::string out;
    for (int i = 0; i < q_; ++i) {
        for (int j = 0; j < q_; ++j) {
            if (j > 0) out += ',';
            out += std::to_string(weight(i, j));
        }
        out += '\n';
    }
    return out;
}

InteractionGraph build_interaction_graph(const Circuit& circuit) {
    InteractionGraph graph(circuit.qubit_count);
    for (const Gate& gate : circuit.gates) {
        if (gate.arity() > 2) {
            throw std::invalid_argument("gate '" + gate_text(gate) + "' has arity > 2; lower the circuit first");
        }
        if (gate.arity() == 2) graph.add_interaction(gate.operands[0], gate.operands[1]);
    }
    return graph;
}

DegreeInfo degree_info(const InteractionGraph& graph) {
    const int q = graph.qubit_count();
    DegreeInfo result;
    result.degree.assign(q, 0);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            if (j != i && graph.weight(i, j) > 0) ++result.degree[i];
        }
    }
    result.maxdeg_vertex = 0;
    for (int i = 1; i < q; ++i) {
        if (result.degree[i] > result.degree[result.maxdeg_vertex]) result.maxdeg_vertex = i;
    }
    return result;
}

LongPath long_path(const InteractionGraph& graph) {
    const int q = graph.qubit_count();
    LongPath path;
    if (q == 0) return path;

    // Working copy; traversed edges are consumed as the path grows.
    std::vector<int> work(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) work[static_cast<std::size_t>(i) * q + j] = graph.weight(i, j);
    auto w = [&](int i, int j) -> int& { return work[static_cast<std::size_t>(i) * q + j]; };

    // Cached per-row maxima keep the whole construction at O(q^2).
    std::vector<int> row_max(q, 0);
    auto refresh_row = [&](int r) {
        int m = 0;
        for (int c = 0; c < q; ++c) m = std::max(m, w(r, c));
        row_max[r] = m;
    };
    for (int r = 0; r < q; ++r) refresh_row(r);

    std::vector<char> visited(q, 0);
    path.order.reserve(q);
    const int start = degree_info(graph).maxdeg_vertex;
    path.order.push_back(start);
    visited[start] = 1;

    while (static_cast<int>(path.order.size()) < q) {
        const int prev = path.order.back();
        int next = -1;
        int best_weight = 0;
        for (int j = 0; j < q; ++j) {
            if (!visited[j] && w(prev, j) > best_weight) {
                next = j;
                best_weight = w(prev, j);
            }
        }
        if (next >= 0) {
            w(prev, next) = 0;
            w(next, prev) = 0;
            refresh_row(prev);
            refresh_row(next);
        } else {
            // No unvisited neighbor left: jump to the unvisited row holding
            // the largest remaining weight, or the lowest unvisited index
            // once the matrix is exhausted.
            int best_remaining = 0;
            for (int r = 0; r < q; ++r) {
                if (!visited[r] && row_max[r] > best_remaining) {
                    next = r;
                    best_remaining = row_max[r];
                }
            }
            if (next < 0) {
                for (int r = 0; r < q; ++r) {
                    if (!visited[r]) {
                        next = r;
                        break;
                    }
                }
            }
        }
        visited[next] = 1;
        path.order.push_back(next);
    }
    return path;
}

}  // namespace qmap
