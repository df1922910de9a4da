#include "veto/vetocore.hpp"

#include <numeric>
#include <stdexcept>

namespace veto {

namespace {

constexpr int kScaleLimit = 10000; // keeps t*m and r*n well inside int64

struct Egcd {
    std::int64_t g, x, y; // g = gcd(a, b) = a*x + b*y
};

Egcd extended_gcd(std::int64_t a, std::int64_t b) {
    if (b == 0)
        return {a, 1, 0};
    Egcd sub = extended_gcd(b, a % b);
    return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

} // namespace

VetoCoefficients compute_coefficients(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("compute_coefficients: m and n must be >= 1");
    if (m > kScaleLimit || n > kScaleLimit)
        throw LimitError("compute_coefficients: m or n beyond the documented 10^4 bound");

    const std::int64_t alpha = std::gcd<std::int64_t>(m, n);
    // Solve t'*m - r'*n = alpha, then clamp t' into [0, n/alpha): shifting
    // (t', r') by (n/alpha, m/alpha) preserves the identity.
    Egcd e = extended_gcd(m, n);
    std::int64_t t_prime = e.x;
    std::int64_t r_prime = -e.y;
    const std::int64_t t_step = n / alpha;
    const std::int64_t r_step = m / alpha;
    std::int64_t q = t_prime >= 0 ? t_prime / t_step : -((-t_prime + t_step - 1) / t_step);
    t_prime -= q * t_step;
    r_prime -= q * r_step;

    VetoCoefficients c;
    c.alpha = alpha;
    c.r = r_prime + 3 * alpha * m;
    c.t = t_prime + 3 * alpha * n;
    if (c.r <= 0 || c.t <= alpha * n || c.r * n != c.t * m - alpha)
        throw std::logic_error("coefficient construction violated its invariants");
    return c;
}

bool lemma1_check(int m, int n, int k, const VetoCoefficients& coeffs) {
    if (k < 1 || k > n)
        throw std::invalid_argument("lemma1_check: k out of range");
    return (coeffs.r * k) / coeffs.t == veto_power(m, n, k);
}

FlowNetwork blocking_network(const Profile& p, int c, const VetoCoefficients& coeffs) {
    const int m = p.candidate_count();
    const int n = p.voter_count();
    // Nodes: 0 = source, 1..n = voters, then the m-1 candidates != c, last = sink.
    const int sink = n + m;
    FlowNetwork net(n + m + 1, 0, sink);
    auto candidate_node = [&](int d) { return 1 + n + (d < c ? d : d - 1); };

    for (int v = 0; v < n; ++v)
        net.add_arc(0, 1 + v, coeffs.r);
    for (int d = 0; d < m; ++d)
        if (d != c)
            net.add_arc(candidate_node(d), sink, coeffs.t);
    for (int v = 0; v < n; ++v) {
        const Ballot& b = p.ballot(v);
        for (int pos = b.rank(c) + 1; pos < m; ++pos)
            net.add_unbounded_arc(1 + v, candidate_node(b.at(pos)));
    }
    return net;
}

BlockingTest test_blocked(const Profile& p, int c) {
    const int m = p.candidate_count();
    const int n = p.voter_count();
    if (c < 0 || c >= m)
        throw std::invalid_argument("candidate index out of range");

    BlockingTest out;
    if (m == 1) {
        // No other candidates, so no blocking set can exist.
        out.blocked = false;
        return out;
    }
    const VetoCoefficients coeffs = compute_coefficients(m, n);
    out.threshold = coeffs.r * n - coeffs.t;
    out.flow_value = max_flow(blocking_network(p, c, coeffs)).value;
    out.blocked = out.flow_value <= out.threshold;
    return out;
}

bool is_blocked(const Profile& p, int c) { return test_blocked(p, c).blocked; }

std::set<int> compute_core(const Profile& p) {
    std::set<int> core;
    for (int c = 0; c < p.candidate_count(); ++c)
        if (!is_blocked(p, c))
            core.insert(c);
    return core;
}

BlockingCertificate blocking_certificate(const Profile& p, int c) {
    const int m = p.candidate_count();
    const int n = p.voter_count();
    if (c < 0 || c >= m)
        throw std::invalid_argument("candidate index out of range");
    if (m == 1)
        throw std::logic_error("blocking_certificate: candidate is not blocked");

    const VetoCoefficients coeffs = compute_coefficients(m, n);
    const FlowResult res = max_flow(blocking_network(p, c, coeffs));
    if (res.value > coeffs.r * n - coeffs.t)
        throw std::logic_error("blocking_certificate: candidate is not blocked");

    // Coalition = voters whose source arc is uncut; blocking set = candidates
    // whose sink arc is uncut. Cut arithmetic gives r|T| + t|B| >= t*m.
    BlockingCertificate cert;
    cert.candidate = c;
    for (int v = 0; v < n; ++v)
        if (res.source_side[1 + v])
            cert.coalition.members.insert(v);
    for (int d = 0; d < m; ++d) {
        if (d == c)
            continue;
        const int node = 1 + n + (d < c ? d : d - 1);
        if (!res.source_side[node])
            cert.blocking_set.insert(d);
    }
    return cert;
}

bool certificate_is_valid(const Profile& p, const BlockingCertificate& cert) {
    const int m = p.candidate_count();
    const int n = p.voter_count();
    if (cert.candidate < 0 || cert.candidate >= m)
        return false;
    if (cert.coalition.members.empty() || cert.blocking_set.empty())
        return false;
    if (cert.blocking_set.count(cert.candidate))
        return false;
    for (int v : cert.coalition.members)
        if (v < 0 || v >= n)
            return false;
    for (int d : cert.blocking_set) {
        if (d < 0 || d >= m)
            return false;
        for (int v : cert.coalition.members)
            if (!p.ballot(v).prefers(d, cert.candidate))
                return false;
    }
    const int k = cert.coalition.size();
    return m - static_cast<int>(cert.blocking_set.size()) <= veto_power(m, n, k);
}

std::set<int> brute_force_core(const Profile& p) {
    const int m = p.candidate_count();
    const int n = p.voter_count();
    if (n > 20)
        throw std::invalid_argument("brute_force_core: guarded to n <= 20");

    // Per voter, a bitmask over candidates ranked above c, per candidate c.
    const int words = (m + 63) / 64;
    std::vector<std::vector<std::uint64_t>> above(
        static_cast<size_t>(n), std::vector<std::uint64_t>(static_cast<size_t>(m) * words, 0));
    for (int v = 0; v < n; ++v) {
        const Ballot& b = p.ballot(v);
        for (int c = 0; c < m; ++c) {
            auto* mask = &above[v][static_cast<size_t>(c) * words];
            for (int pos = 0; pos < b.rank(c); ++pos) {
                int d = b.at(pos);
                mask[d / 64] |= std::uint64_t(1) << (d % 64);
            }
        }
    }

    std::vector<int> power(n + 1, 0);
    for (int k = 1; k <= n; ++k)
        power[k] = veto_power(m, n, k);

    std::set<int> core;
    std::vector<std::uint64_t> inter(words);
    for (int c = 0; c < m; ++c) {
        bool blocked = false;
        for (std::uint32_t coalition = 1; coalition < (1u << n) && !blocked; ++coalition) {
            for (int w = 0; w < words; ++w)
                inter[w] = ~std::uint64_t(0);
            int k = 0;
            for (int v = 0; v < n; ++v) {
                if (!(coalition & (1u << v)))
                    continue;
                ++k;
                const auto* mask = &above[v][static_cast<size_t>(c) * words];
                for (int w = 0; w < words; ++w)
                    inter[w] &= mask[w];
            }
            int best_b = 0;
            for (int w = 0; w < words; ++w)
                best_b += __builtin_popcountll(inter[w]);
            if (m - best_b <= power[k])
                blocked = true;
        }
        if (!blocked)
            core.insert(c);
    }
    return core;
}

} // namespace veto
