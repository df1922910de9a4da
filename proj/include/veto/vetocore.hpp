#ifndef VETO_VETOCORE_HPP
#define VETO_VETOCORE_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "veto/flowsolver.hpp"
#include "veto/prefmodel.hpp"

namespace veto {

/// Scaling pair (r, t) with alpha = gcd(m, n) satisfying r*n = t*m - alpha
/// and t > alpha*n, which turns veto power into floor(r*k/t).
struct VetoCoefficients {
    std::int64_t r = 0;
    std::int64_t t = 0;
    std::int64_t alpha = 0;
};

/// Witness that `coalition` blocks `candidate` with blocking set
/// `blocking_set`: every coalition member ranks every member of the set
/// above the candidate, and m - |set| <= veto_power(m, n, |coalition|).
struct BlockingCertificate {
    int candidate = 0;
    Coalition coalition;
    std::set<int> blocking_set;
};

/// Outcome of the flow-based blocking test, with the raw flow value kept
/// for diagnostics: blocked iff flow_value <= threshold (= r*n - t).
struct BlockingTest {
    bool blocked = false;
    std::int64_t flow_value = 0;
    std::int64_t threshold = 0;
};

/// Builds (r, t, alpha) by extended Euclid, normalized to t' in [0, n/alpha)
/// and shifted by (3*alpha*m, 3*alpha*n). Throws LimitError beyond the
/// documented m, n <= 10000 bound.
VetoCoefficients compute_coefficients(int m, int n);

/// Self-test of the floor identity: floor(r*k/t) == veto_power(m, n, k).
bool lemma1_check(int m, int n, int k, const VetoCoefficients& coeffs);

/// Flow network for candidate c: source -> voter arcs of capacity r,
/// candidate -> sink arcs of capacity t, and unbounded voter -> candidate
/// arcs wherever the voter ranks the candidate below c. Exposed for tests.
FlowNetwork blocking_network(const Profile& p, int c, const VetoCoefficients& coeffs);

BlockingTest test_blocked(const Profile& p, int c);
bool is_blocked(const Profile& p, int c);

/// All candidates not blocked by any coalition. Never empty.
std::set<int> compute_core(const Profile& p);

/// Extracts a (coalition, blocking set) witness from the minimum cut.
/// Throws std::logic_error if the candidate is not blocked.
BlockingCertificate blocking_certificate(const Profile& p, int c);

bool certificate_is_valid(const Profile& p, const BlockingCertificate& cert);

/// Definition-level core: enumerates every non-empty coalition per
/// candidate. Guarded to n <= 20 voters.
std::set<int> brute_force_core(const Profile& p);

} // namespace veto

#endif
