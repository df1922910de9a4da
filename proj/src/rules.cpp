#include "veto/rules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "veto/rng.hpp"
#include "veto/vetocore.hpp"

namespace veto {

std::string rational_to_string(const Rational& q) {
    std::ostringstream out;
    out << numerator(q) << '/' << denominator(q);
    return out.str();
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den <= 0)
            throw std::invalid_argument(text);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

namespace {

// The simulation keeps all capacities as integer numerators over one shared
// denominator, so round boundaries compare and subtract exactly without a
// gcd per step. Rational values are materialized only when tracing.
struct EatingState {
    BigInt denom = 1;
    std::vector<BigInt> cap;     // numerators; capacity of d is cap[d]/denom
    std::vector<bool> alive;
    std::vector<int> eaters;     // voters currently eating d
    std::vector<int> cursor;     // per voter: ballot position of current target
    int alive_count;
};

ConsumptionResult run_consumption(const Profile& p, bool build_trace) {
    const int m = p.candidate_count();
    const int n = p.voter_count();

    EatingState st;
    st.cap.assign(m, BigInt(1));
    st.alive.assign(m, true);
    st.eaters.assign(m, 0);
    st.cursor.assign(n, m - 1);
    st.alive_count = m;
    for (int v = 0; v < n; ++v)
        ++st.eaters[p.ballot(v).at(m - 1)];

    ConsumptionResult result;
    std::set<int> last_eliminated;

    while (st.alive_count > 0) {
        // Round duration is min cap[d]/eaters[d] over candidates being eaten.
        int argmin = -1;
        for (int d = 0; d < m; ++d) {
            if (!st.alive[d] || st.eaters[d] == 0)
                continue;
            if (argmin < 0 ||
                st.cap[d] * st.eaters[argmin] < st.cap[argmin] * st.eaters[d])
                argmin = d;
        }
        // Someone is always eating: every voter targets an alive candidate.
        const BigInt min_num = st.cap[argmin];
        const int min_eaters = st.eaters[argmin];

        ConsumptionRound round;
        if (build_trace) {
            round.duration = Rational(min_num, st.denom * min_eaters);
            round.eats.resize(n);
            for (int v = 0; v < n; ++v)
                round.eats[v] = p.ballot(v).at(st.cursor[v]);
        }

        // cap[d]/D -= eaters[d] * min_num/(D*min_eaters), over the new
        // denominator D*min_eaters.
        for (int d = 0; d < m; ++d) {
            if (!st.alive[d])
                continue;
            st.cap[d] = st.cap[d] * min_eaters - min_num * st.eaters[d];
        }
        st.denom *= min_eaters;

        std::set<int> eliminated;
        for (int d = 0; d < m; ++d)
            if (st.alive[d] && st.cap[d] == 0)
                eliminated.insert(d);
        for (int d : eliminated) {
            st.alive[d] = false;
            --st.alive_count;
        }

        if (build_trace) {
            round.eliminated = eliminated;
            round.capacities_after.reserve(m);
            for (int d = 0; d < m; ++d)
                round.capacities_after.emplace_back(
                    st.alive[d] ? Rational(st.cap[d], st.denom) : Rational(0));
            result.trace.rounds.push_back(std::move(round));
        }
        last_eliminated = std::move(eliminated);

        if (st.alive_count == 0)
            break;
        for (int v = 0; v < n; ++v) {
            int& pos = st.cursor[v];
            if (st.alive[p.ballot(v).at(pos)])
                continue;
            while (!st.alive[p.ballot(v).at(pos)])
                --pos;
            ++st.eaters[p.ballot(v).at(pos)];
        }
    }

    result.winners = std::move(last_eliminated);
    return result;
}

} // namespace

ConsumptionResult consumption_winners(const Profile& p) { return run_consumption(p, true); }

std::set<int> consumption_winner_set(const Profile& p) {
    return run_consumption(p, false).winners;
}

std::string consumption_trace_render(const ConsumptionTrace& trace) {
    std::ostringstream out;
    Rational total = 0;
    for (size_t k = 0; k < trace.rounds.size(); ++k) {
        const ConsumptionRound& round = trace.rounds[k];
        out << "round " << k + 1 << ": duration " << rational_to_string(round.duration)
            << '\n';
        out << "  eats:";
        for (size_t v = 0; v < round.eats.size(); ++v)
            out << ' ' << v + 1 << "->" << round.eats[v] + 1;
        out << '\n';
        out << "  eliminated:";
        for (int d : round.eliminated)
            out << ' ' << d + 1;
        out << '\n';
        out << "  capacities:";
        for (const Rational& c : round.capacities_after)
            out << ' ' << rational_to_string(c);
        out << '\n';
        total += round.duration;
    }
    out << "durations:";
    for (const ConsumptionRound& round : trace.rounds)
        out << ' ' << rational_to_string(round.duration);
    out << '\n';
    out << "total: " << rational_to_string(total) << '\n';
    return out.str();
}

namespace {

// Scans the acting voter's ballot from the bottom for the worst candidate
// with clones left. Pointers only move up because counts never grow.
struct TokenState {
    std::vector<std::int64_t> clones;
    std::vector<int> cursor;

    void veto(const Profile& p, int voter) {
        int& pos = cursor[voter];
        while (clones[p.ballot(voter).at(pos)] == 0)
            --pos;
        --clones[p.ballot(voter).at(pos)];
    }
};

} // namespace

std::set<int> tokens_winners(const Profile& p, const TokenOrder& order) {
    const int m = p.candidate_count();
    const int n = p.voter_count();
    const VetoCoefficients coeffs = compute_coefficients(m, n);
    const std::int64_t r = coeffs.r;

    TokenState st;
    st.clones.assign(m, coeffs.t);
    st.cursor.assign(n, m - 1);

    switch (order.kind) {
    case TokenOrder::Kind::Sequential:
        for (int v = 0; v < n; ++v)
            for (std::int64_t i = 0; i < r; ++i)
                st.veto(p, v);
        break;
    case TokenOrder::Kind::RoundRobin:
        for (std::int64_t pass = 0; pass < r; ++pass)
            for (int v = 0; v < n; ++v)
                st.veto(p, v);
        break;
    case TokenOrder::Kind::Random: {
        if (r * n > (std::int64_t(1) << 31))
            throw LimitError("random token order would need more than 2^31 turns");
        std::vector<int> slots;
        slots.reserve(static_cast<size_t>(r * n));
        for (int v = 0; v < n; ++v)
            slots.insert(slots.end(), static_cast<size_t>(r), v);
        std::mt19937_64 gen(order.seed);
        shuffle_portable(slots, gen);
        for (int v : slots)
            st.veto(p, v);
        break;
    }
    case TokenOrder::Kind::Explicit: {
        if (static_cast<std::int64_t>(order.slots.size()) != r * n)
            throw std::invalid_argument("explicit token order must have r*n = " +
                                        std::to_string(r * n) + " entries");
        std::vector<std::int64_t> uses(n, 0);
        for (int v : order.slots) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("explicit token order names voter out of range");
            ++uses[v];
        }
        for (int v = 0; v < n; ++v)
            if (uses[v] != r)
                throw std::invalid_argument("explicit token order must use every voter " +
                                            std::to_string(r) + " times");
        for (int v : order.slots)
            st.veto(p, v);
        break;
    }
    }

    std::set<int> winners;
    for (int d = 0; d < m; ++d)
        if (st.clones[d] > 0)
            winners.insert(d);
    return winners;
}

} // namespace veto
