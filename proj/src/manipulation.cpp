#include "veto/manipulation.hpp"

#include <algorithm>
#include <stdexcept>

#include "veto/vetocore.hpp"

namespace veto {

namespace {

/// Worst element of `outcome` by the voter's sincere ranking.
int worst_for(const Ballot& sincere, const std::set<int>& outcome) {
    int worst = -1;
    for (int c : outcome)
        if (worst < 0 || sincere.rank(c) > sincere.rank(worst))
            worst = c;
    return worst;
}

Ballot probe_ballot(const Ballot& sincere, int d, const std::set<int>& top) {
    const int m = sincere.candidate_count();
    std::vector<int> order;
    order.reserve(m);
    for (int pos = 0; pos < m; ++pos)
        if (top.count(sincere.at(pos)))
            order.push_back(sincere.at(pos));
    order.push_back(d);
    for (int pos = 0; pos < m; ++pos) {
        int c = sincere.at(pos);
        if (c != d && !top.count(c))
            order.push_back(c);
    }
    return Ballot(std::move(order));
}

} // namespace

bool blocked_with_top_set(const Profile& p, int voter, int d, const TopSet& top) {
    if (voter < 0 || voter >= p.voter_count())
        throw std::invalid_argument("voter index out of range");
    if (d < 0 || d >= p.candidate_count())
        throw std::invalid_argument("candidate index out of range");
    if (top.members.count(d))
        throw std::invalid_argument("probe candidate cannot be in its own top set");
    for (int c : top.members)
        if (c < 0 || c >= p.candidate_count())
            throw std::invalid_argument("top set names a candidate out of range");
    Ballot probe = probe_ballot(p.ballot(voter), d, top.members);
    return is_blocked(p.with_ballot(voter, std::move(probe)), d);
}

ManipulationOutcome find_pessimist_manipulation(const Profile& p, int voter) {
    if (voter < 0 || voter >= p.voter_count())
        throw std::invalid_argument("voter index out of range");
    const Ballot& sincere = p.ballot(voter);
    const int m = p.candidate_count();

    ManipulationOutcome out;
    out.sincere_core = compute_core(p);
    out.sincere_worst = worst_for(sincere, out.sincere_core);

    // Nothing can beat an outcome whose worst element is the voter's top.
    if (sincere.rank(out.sincere_worst) == 0)
        return out;

    // Good candidates (strictly above the sincere worst) seed the ballot in
    // sincere order; each further slot takes a candidate that is blocked
    // with the current prefix as its top set.
    std::vector<int> placed;
    std::set<int> placed_set;
    for (int pos = 0; pos < sincere.rank(out.sincere_worst); ++pos) {
        placed.push_back(sincere.at(pos));
        placed_set.insert(sincere.at(pos));
    }

    while (static_cast<int>(placed.size()) < m) {
        int chosen = -1;
        for (int pos = 0; pos < m; ++pos) {
            int d = sincere.at(pos); // scan in sincere order: ties go to the
            if (placed_set.count(d)) // candidate the voter likes most
                continue;
            if (blocked_with_top_set(p, voter, d, TopSet{placed_set})) {
                chosen = d;
                break;
            }
        }
        if (chosen < 0)
            return out; // no remaining candidate blockable: not manipulable
        placed.push_back(chosen);
        placed_set.insert(chosen);
    }

    Ballot strategic(placed);
    Profile manipulated = p.with_ballot(voter, strategic);
    out.manipulable = true;
    out.strategic_ballot = std::move(strategic);
    out.manipulated_core = compute_core(manipulated);
    out.manipulated_worst = worst_for(sincere, *out.manipulated_core);
    return out;
}

ManipulationOutcome brute_force_manipulation(const Profile& p, int voter) {
    if (voter < 0 || voter >= p.voter_count())
        throw std::invalid_argument("voter index out of range");
    const int m = p.candidate_count();
    if (m > 8)
        throw std::invalid_argument("brute_force_manipulation: guarded to m <= 8");
    const Ballot& sincere = p.ballot(voter);

    ManipulationOutcome out;
    out.sincere_core = compute_core(p);
    out.sincere_worst = worst_for(sincere, out.sincere_core);

    std::vector<int> order(m);
    for (int i = 0; i < m; ++i)
        order[i] = i;

    int best_rank = sincere.rank(out.sincere_worst);
    do {
        Profile alt = p.with_ballot(voter, Ballot(order));
        std::set<int> core = compute_core(alt);
        int worst = worst_for(sincere, core);
        if (sincere.rank(worst) < best_rank) {
            best_rank = sincere.rank(worst);
            out.manipulable = true;
            out.strategic_ballot = Ballot(order);
            out.manipulated_core = std::move(core);
            out.manipulated_worst = worst;
        }
    } while (std::next_permutation(order.begin(), order.end()));

    return out;
}

} // namespace veto
