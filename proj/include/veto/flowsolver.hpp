#ifndef VETO_FLOWSOLVER_HPP
#define VETO_FLOWSOLVER_HPP

#include <cstdint>
#include <vector>

#include "veto/errors.hpp"

namespace veto {

/// Directed network for exact integer max-flow. Unbounded arcs are legal as
/// long as one terminal side is fully bounded; they are materialized at
/// (1 + sum of that side's finite capacities), an upper bound on any flow.
class FlowNetwork {
public:
    static constexpr std::int64_t kUnbounded = -1;

    struct Arc {
        int from;
        int to;
        std::int64_t capacity; // kUnbounded or >= 0
    };

    FlowNetwork(int node_count, int source, int sink);

    void add_arc(int from, int to, std::int64_t capacity);
    void add_unbounded_arc(int from, int to);

    int node_count() const { return node_count_; }
    int source() const { return source_; }
    int sink() const { return sink_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

private:
    int node_count_;
    int source_;
    int sink_;
    std::vector<Arc> arcs_;
};

struct FlowResult {
    std::int64_t value = 0;
    /// Flow per arc, aligned with FlowNetwork::arcs().
    std::vector<std::int64_t> arc_flow;
    /// Nodes reachable from the source in the residual network; together
    /// with its complement this is a minimum cut.
    std::vector<bool> source_side;
};

/// Maximum integral flow via Dinic's blocking-flow method. The result is
/// self-checked (conservation, capacities, value = cut capacity) before it
/// is returned. Throws LimitError if capacities could overflow 64-bit
/// arithmetic, never returning a wrong answer.
FlowResult max_flow(const FlowNetwork& net);

/// Re-derives the optimality evidence of `res` against `net`. Used by tests;
/// max_flow already enforces this internally.
bool flow_result_consistent(const FlowNetwork& net, const FlowResult& res);

} // namespace veto

#endif
