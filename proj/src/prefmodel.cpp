#include "veto/prefmodel.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace veto {

Ballot::Ballot(std::vector<int> order) : order_(std::move(order)) {
    const int m = static_cast<int>(order_.size());
    if (m == 0)
        throw std::invalid_argument("ballot is empty");
    rank_.assign(m, -1);
    for (int pos = 0; pos < m; ++pos) {
        const int c = order_[pos];
        if (c < 0 || c >= m)
            throw std::invalid_argument("ballot entry out of range: " + std::to_string(c));
        if (rank_[c] != -1)
            throw std::invalid_argument("ballot repeats candidate " + std::to_string(c));
        rank_[c] = pos;
    }
}

Profile::Profile(int candidate_count, std::vector<Ballot> ballots)
    : m_(candidate_count), ballots_(std::move(ballots)) {
    if (m_ < 1)
        throw std::invalid_argument("candidate count must be >= 1");
    if (ballots_.empty())
        throw std::invalid_argument("profile needs at least one voter");
    for (const Ballot& b : ballots_)
        if (b.candidate_count() != m_)
            throw std::invalid_argument("ballot length does not match candidate count");
}

Candidate Profile::candidate(int index) const {
    if (index < 0 || index >= m_)
        throw std::invalid_argument("candidate index out of range");
    Candidate c;
    c.index = index;
    if (labels_)
        c.label = (*labels_)[index];
    return c;
}

void Profile::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != m_)
        throw std::invalid_argument("label count does not match candidate count");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != m_)
        throw std::invalid_argument("candidate labels must be unique");
    labels_ = std::move(labels);
}

Profile Profile::with_ballot(int voter, Ballot replacement) const {
    if (voter < 0 || voter >= voter_count())
        throw std::invalid_argument("voter index out of range");
    std::vector<Ballot> copy = ballots_;
    copy[voter] = std::move(replacement);
    Profile p(m_, std::move(copy));
    p.labels_ = labels_;
    return p;
}

int veto_power(int m, int n, int k) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("veto_power: m and n must be >= 1");
    if (k < 1 || k > n)
        throw std::invalid_argument("veto_power: coalition size out of range");
    const long long num = static_cast<long long>(m) * k;
    return static_cast<int>((num + n - 1) / n) - 1;
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == '#')
            return true;
        if (!std::isspace(static_cast<unsigned char>(ch)))
            return false;
    }
    return true; // blank
}

std::vector<long long> parse_ints(const std::string& line, int lineno) {
    std::vector<long long> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(lineno, "not an integer: '" + tok + "'");
        }
    }
    return out;
}

} // namespace

Profile parse_profile(std::istream& in) {
    std::string line;
    int lineno = 0;
    int m = -1, n = -1;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line))
            continue;
        auto vals = parse_ints(line, lineno);
        if (vals.size() != 2)
            throw ParseError(lineno, "header must be 'm n'");
        if (vals[0] < 1 || vals[1] < 1)
            throw ParseError(lineno, "m and n must be positive");
        if (vals[0] > 1000000 || vals[1] > 1000000)
            throw ParseError(lineno, "m or n implausibly large");
        m = static_cast<int>(vals[0]);
        n = static_cast<int>(vals[1]);
        break;
    }
    if (m < 0)
        throw ParseError(lineno == 0 ? 1 : lineno, "missing 'm n' header");

    std::vector<Ballot> ballots;
    ballots.reserve(n);
    while (static_cast<int>(ballots.size()) < n) {
        if (!std::getline(in, line))
            throw ParseError(lineno, "expected " + std::to_string(n) + " ballots, got " +
                                         std::to_string(ballots.size()));
        ++lineno;
        if (is_comment_or_blank(line))
            continue;
        auto vals = parse_ints(line, lineno);
        if (static_cast<int>(vals.size()) != m)
            throw ParseError(lineno, "ballot has " + std::to_string(vals.size()) +
                                         " entries, expected " + std::to_string(m));
        std::vector<int> order(m);
        std::vector<char> seen(m, 0);
        for (int i = 0; i < m; ++i) {
            if (vals[i] < 1 || vals[i] > m)
                throw ParseError(lineno, "candidate index " + std::to_string(vals[i]) +
                                             " out of range 1.." + std::to_string(m));
            int c = static_cast<int>(vals[i]) - 1;
            if (seen[c])
                throw ParseError(lineno,
                                 "candidate " + std::to_string(vals[i]) + " appears twice");
            seen[c] = 1;
            order[i] = c;
        }
        ballots.emplace_back(std::move(order));
    }

    // Anything after the last ballot must be comments or blank.
    while (std::getline(in, line)) {
        ++lineno;
        if (!is_comment_or_blank(line))
            throw ParseError(lineno, "unexpected content after last ballot");
    }

    return Profile(m, std::move(ballots));
}

Profile parse_profile(const std::string& text) {
    std::istringstream in(text);
    return parse_profile(in);
}

std::string serialize_profile(const Profile& p) {
    std::ostringstream out;
    out << p.candidate_count() << ' ' << p.voter_count() << '\n';
    for (int v = 0; v < p.voter_count(); ++v) {
        const Ballot& b = p.ballot(v);
        for (int pos = 0; pos < p.candidate_count(); ++pos) {
            if (pos)
                out << ' ';
            out << b.at(pos) + 1;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace veto
