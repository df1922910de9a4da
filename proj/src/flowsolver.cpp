#include "veto/flowsolver.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace veto {

namespace {

constexpr std::int64_t kCapacityCeiling = std::numeric_limits<std::int64_t>::max() / 4;

} // namespace

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : node_count_(node_count), source_(source), sink_(sink) {
    if (node_count < 2)
        throw std::invalid_argument("flow network needs at least source and sink");
    if (source < 0 || source >= node_count || sink < 0 || sink >= node_count)
        throw std::invalid_argument("source or sink out of range");
    if (source == sink)
        throw std::invalid_argument("source and sink must differ");
}

void FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
    if (from < 0 || from >= node_count_ || to < 0 || to >= node_count_)
        throw std::invalid_argument("arc endpoint out of range");
    if (capacity < 0)
        throw std::invalid_argument("arc capacity must be non-negative");
    arcs_.push_back({from, to, capacity});
}

void FlowNetwork::add_unbounded_arc(int from, int to) {
    if (from < 0 || from >= node_count_ || to < 0 || to >= node_count_)
        throw std::invalid_argument("arc endpoint out of range");
    arcs_.push_back({from, to, kUnbounded});
}

namespace {

// Standard Dinic structure: paired forward/backward edges, BFS levels,
// DFS blocking flow with an iterator per node.
class Dinic {
public:
    Dinic(int n, int s, int t) : n_(n), s_(s), t_(t), adj_(n) {}

    int add_edge(int u, int v, std::int64_t cap) {
        adj_[u].push_back({v, cap, static_cast<int>(adj_[v].size())});
        adj_[v].push_back({u, 0, static_cast<int>(adj_[u].size()) - 1});
        return static_cast<int>(adj_[u].size()) - 1;
    }

    std::int64_t run() {
        std::int64_t total = 0;
        while (bfs()) {
            iter_.assign(n_, 0);
            while (std::int64_t pushed = dfs(s_, std::numeric_limits<std::int64_t>::max()))
                total += pushed;
        }
        return total;
    }

    std::int64_t flow_on(int u, int edge_index) const {
        const Edge& e = adj_[u][edge_index];
        return adj_[e.to][e.rev].cap; // residual of the reverse edge
    }

    std::vector<bool> residual_reachable() const {
        std::vector<bool> seen(n_, false);
        std::queue<int> q;
        q.push(s_);
        seen[s_] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Edge& e : adj_[u]) {
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = true;
                    q.push(e.to);
                }
            }
        }
        return seen;
    }

private:
    struct Edge {
        int to;
        std::int64_t cap; // residual capacity
        int rev;
    };

    bool bfs() {
        level_.assign(n_, -1);
        std::queue<int> q;
        q.push(s_);
        level_[s_] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Edge& e : adj_[u]) {
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[u] + 1;
                    q.push(e.to);
                }
            }
        }
        return level_[t_] >= 0;
    }

    std::int64_t dfs(int u, std::int64_t limit) {
        if (u == t_)
            return limit;
        for (int& i = iter_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
            Edge& e = adj_[u][i];
            if (e.cap <= 0 || level_[e.to] != level_[u] + 1)
                continue;
            std::int64_t pushed = dfs(e.to, std::min(limit, e.cap));
            if (pushed > 0) {
                e.cap -= pushed;
                adj_[e.to][e.rev].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    int n_, s_, t_;
    std::vector<std::vector<Edge>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

std::int64_t finite_side_sum(const FlowNetwork& net, int terminal, bool outgoing) {
    std::int64_t sum = 0;
    for (const auto& a : net.arcs()) {
        int end = outgoing ? a.from : a.to;
        if (end != terminal)
            continue;
        if (a.capacity == FlowNetwork::kUnbounded)
            return -1;
        sum += a.capacity;
        if (sum > kCapacityCeiling)
            throw LimitError("flow capacities exceed the 64-bit safety bound");
    }
    return sum;
}

std::int64_t unbounded_stand_in(const FlowNetwork& net) {
    // Any feasible flow is capped by the finite capacity of a fully bounded
    // terminal side, so that sum plus one acts as infinity.
    std::int64_t from_source = finite_side_sum(net, net.source(), true);
    if (from_source >= 0)
        return from_source + 1;
    std::int64_t into_sink = finite_side_sum(net, net.sink(), false);
    if (into_sink >= 0)
        return into_sink + 1;
    throw LimitError("unbounded arcs touch both source and sink; flow value is unbounded");
}

} // namespace

bool flow_result_consistent(const FlowNetwork& net, const FlowResult& res) {
    const auto& arcs = net.arcs();
    if (res.arc_flow.size() != arcs.size())
        return false;
    if (static_cast<int>(res.source_side.size()) != net.node_count())
        return false;
    if (!res.source_side[net.source()] || res.source_side[net.sink()])
        return false;

    std::vector<std::int64_t> net_out(net.node_count(), 0);
    std::int64_t cut_capacity = 0;
    for (size_t i = 0; i < arcs.size(); ++i) {
        std::int64_t f = res.arc_flow[i];
        if (f < 0)
            return false;
        if (arcs[i].capacity != FlowNetwork::kUnbounded && f > arcs[i].capacity)
            return false;
        net_out[arcs[i].from] += f;
        net_out[arcs[i].to] -= f;
        if (res.source_side[arcs[i].from] && !res.source_side[arcs[i].to]) {
            if (arcs[i].capacity == FlowNetwork::kUnbounded)
                return false; // an unbounded arc can never cross a finite cut
            cut_capacity += arcs[i].capacity;
        }
    }
    for (int u = 0; u < net.node_count(); ++u) {
        if (u == net.source() || u == net.sink())
            continue;
        if (net_out[u] != 0)
            return false;
    }
    return net_out[net.source()] == res.value && net_out[net.sink()] == -res.value &&
           cut_capacity == res.value;
}

FlowResult max_flow(const FlowNetwork& net) {
    const std::int64_t big = unbounded_stand_in(net);
    std::int64_t finite_total = 0;
    for (const auto& a : net.arcs()) {
        std::int64_t cap = a.capacity == FlowNetwork::kUnbounded ? big : a.capacity;
        finite_total += cap;
        if (cap > kCapacityCeiling || finite_total > kCapacityCeiling)
            throw LimitError("flow capacities exceed the 64-bit safety bound");
    }

    Dinic dinic(net.node_count(), net.source(), net.sink());
    std::vector<int> edge_index;
    edge_index.reserve(net.arcs().size());
    for (const auto& a : net.arcs()) {
        std::int64_t cap = a.capacity == FlowNetwork::kUnbounded ? big : a.capacity;
        edge_index.push_back(dinic.add_edge(a.from, a.to, cap));
    }

    FlowResult res;
    res.value = dinic.run();
    res.arc_flow.reserve(net.arcs().size());
    for (size_t i = 0; i < net.arcs().size(); ++i)
        res.arc_flow.push_back(dinic.flow_on(net.arcs()[i].from, edge_index[i]));
    res.source_side = dinic.residual_reachable();

    if (!flow_result_consistent(net, res))
        throw std::logic_error("max_flow produced an inconsistent result");
    return res;
}

} // namespace veto
