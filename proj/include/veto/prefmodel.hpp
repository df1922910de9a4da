#ifndef VETO_PREFMODEL_HPP
#define VETO_PREFMODEL_HPP

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "veto/errors.hpp"

namespace veto {

/// A candidate is identified by a dense 0-based index; the text format is
/// 1-based. A display label is optional and never serialized.
struct Candidate {
    int index = 0;
    std::optional<std::string> label;
};

/// One voter's strict linear order, most preferred first.
class Ballot {
public:
    /// Throws std::invalid_argument unless `order` is a permutation of 0..m-1.
    explicit Ballot(std::vector<int> order);

    int candidate_count() const { return static_cast<int>(order_.size()); }

    /// Candidate at position `pos` (0 = most preferred).
    int at(int pos) const { return order_[pos]; }

    /// Position of candidate c; lower is better.
    int rank(int c) const { return rank_[c]; }

    bool prefers(int c, int d) const { return rank_[c] < rank_[d]; }

    const std::vector<int>& order() const { return order_; }

    bool operator==(const Ballot& other) const { return order_ == other.order_; }

private:
    std::vector<int> order_;
    std::vector<int> rank_;
};

/// An immutable profile: n voters' linear orders over m candidates.
class Profile {
public:
    Profile(int candidate_count, std::vector<Ballot> ballots);

    int candidate_count() const { return m_; }
    int voter_count() const { return static_cast<int>(ballots_.size()); }

    const Ballot& ballot(int voter) const { return ballots_[voter]; }
    const std::vector<Ballot>& ballots() const { return ballots_; }

    Candidate candidate(int index) const;

    /// Attach display labels (fixture readability). Throws if the count is
    /// wrong or labels repeat.
    void set_labels(std::vector<std::string> labels);
    const std::optional<std::vector<std::string>>& labels() const { return labels_; }

    /// Returns a copy with voter `voter`'s ballot replaced.
    Profile with_ballot(int voter, Ballot replacement) const;

    bool operator==(const Profile& other) const {
        return m_ == other.m_ && ballots_ == other.ballots_;
    }

private:
    int m_;
    std::vector<Ballot> ballots_;
    std::optional<std::vector<std::string>> labels_;
};

/// A set of voters, used as a (potential) blocking coalition.
struct Coalition {
    std::set<int> members;

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int voter) const { return members.count(voter) != 0; }
};

/// Proportional veto power of a k-voter coalition: ceil(m*k/n) - 1.
/// Throws std::invalid_argument unless 1 <= k <= n and m >= 1.
int veto_power(int m, int n, int k);

/// Reads the profile text format: optional '#' comments, an "m n" header,
/// then n lines each a permutation of 1..m. Throws ParseError.
Profile parse_profile(std::istream& in);
Profile parse_profile(const std::string& text);

/// Inverse of parse_profile: header plus one line per ballot, 1-based,
/// single spaces, '\n' endings, no comments.
std::string serialize_profile(const Profile& p);

} // namespace veto

#endif
