#ifndef VETO_MANIPULATION_HPP
#define VETO_MANIPULATION_HPP

#include <optional>
#include <set>

#include "veto/prefmodel.hpp"

namespace veto {

/// Candidates placed above a probe candidate on a constructed ballot.
/// Blocking depends on a manipulator's ballot only through this set.
struct TopSet {
    std::set<int> members;
};

struct ManipulationOutcome {
    bool manipulable = false;
    std::optional<Ballot> strategic_ballot;
    std::set<int> sincere_core;
    std::optional<std::set<int>> manipulated_core;
    /// The manipulator's worst core element under truth-telling.
    int sincere_worst = 0;
    std::optional<int> manipulated_worst;
};

/// Substitutes the canonical probe ballot (members of `top` in the voter's
/// sincere order, then d, then the rest in sincere order) and reports
/// whether d is blocked in the modified profile. Requires d not in `top`.
bool blocked_with_top_set(const Profile& p, int voter, int d, const TopSet& top);

/// Greedy polynomial-time test for pessimist manipulability: good candidates
/// go on top, then any candidate blocked with the current top set is
/// appended, until either everyone is placed (strategic vote found) or no
/// remaining candidate is blocked (not manipulable).
ManipulationOutcome find_pessimist_manipulation(const Profile& p, int voter);

/// Enumerates all m! ballots of the voter. Guarded to m <= 8. Returns a
/// ballot maximizing the pessimist outcome when any improvement exists.
ManipulationOutcome brute_force_manipulation(const Profile& p, int voter);

} // namespace veto

#endif
