#ifndef VETO_RULES_HPP
#define VETO_RULES_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "veto/prefmodel.hpp"

namespace veto {

/// Exact rational with arbitrary-precision integers; always normalized
/// (gcd 1, positive denominator). Round-boundary ties in the eating
/// simulation must be detected exactly, so floating point is out.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Fixed "num/den" text form (also for integers: "5/4", "1/1", "0/1").
std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// One round of the eating simulation.
struct ConsumptionRound {
    Rational duration;
    /// eats[v] = candidate voter v is eating during this round.
    std::vector<int> eats;
    /// Candidates whose capacity reaches zero at the round boundary.
    std::set<int> eliminated;
    /// All m capacities after the round (eliminated ones are zero).
    std::vector<Rational> capacities_after;
};

struct ConsumptionTrace {
    std::vector<ConsumptionRound> rounds;
};

struct ConsumptionResult {
    std::set<int> winners;
    ConsumptionTrace trace;
};

/// Veto by consumption: every voter eats their worst remaining candidate at
/// speed 1; a round ends when some candidate is fully eaten; simultaneous
/// zero-crossings are eliminated together. Winners are the candidates
/// eliminated in the final round, at time exactly m/n.
ConsumptionResult consumption_winners(const Profile& p);

/// Same simulation without building a trace (hot path for simulations).
std::set<int> consumption_winner_set(const Profile& p);

std::string consumption_trace_render(const ConsumptionTrace& trace);

/// Order over the r*n voter-clone turns of voting by veto tokens.
struct TokenOrder {
    enum class Kind { Sequential, RoundRobin, Random, Explicit };

    Kind kind = Kind::Sequential;
    std::uint64_t seed = 0;  // Random only
    std::vector<int> slots;  // Explicit only: acting voter per turn, 0-based

    static TokenOrder sequential() { return {Kind::Sequential, 0, {}}; }
    static TokenOrder round_robin() { return {Kind::RoundRobin, 0, {}}; }
    static TokenOrder random(std::uint64_t seed) { return {Kind::Random, seed, {}}; }
    static TokenOrder explicit_order(std::vector<int> slots) {
        return {Kind::Explicit, 0, std::move(slots)};
    }
};

/// Voting by veto tokens: t clones per candidate, r clones per voter; each
/// voter-clone in turn vetoes a clone of the acting voter's worst candidate
/// that still has clones. Exactly alpha = gcd(m, n) clones survive; winners
/// are the candidates with a surviving clone.
std::set<int> tokens_winners(const Profile& p, const TokenOrder& order);

} // namespace veto

#endif
