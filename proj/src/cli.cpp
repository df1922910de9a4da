#include "veto/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "veto/manipulation.hpp"
#include "veto/montecarlo.hpp"
#include "veto/prefmodel.hpp"
#include "veto/rules.hpp"
#include "veto/vetocore.hpp"

namespace veto::cli {

namespace {

using nlohmann::json;

Profile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    return parse_profile(in);
}

// All user-facing candidate and voter indices are 1-based, like the file
// format; ascending order everywhere.
json to_json_1based(const std::set<int>& xs) {
    json arr = json::array();
    for (int x : xs)
        arr.push_back(x + 1);
    return arr;
}

std::string join_1based(const std::set<int>& xs) {
    std::ostringstream out;
    bool first = true;
    for (int x : xs) {
        if (!first)
            out << ' ';
        out << x + 1;
        first = false;
    }
    return out.str();
}

std::string join_ballot(const Ballot& b) {
    std::ostringstream out;
    for (int pos = 0; pos < b.candidate_count(); ++pos) {
        if (pos)
            out << ' ';
        out << b.at(pos) + 1;
    }
    return out.str();
}

int cmd_core(const std::string& path, bool certificates, const std::string& format,
             std::ostream& out) {
    Profile p = load_profile(path);
    std::set<int> core = compute_core(p);

    std::vector<BlockingCertificate> certs;
    if (certificates)
        for (int c = 0; c < p.candidate_count(); ++c)
            if (!core.count(c))
                certs.push_back(blocking_certificate(p, c));

    if (format == "json") {
        json doc;
        doc["core"] = to_json_1based(core);
        if (certificates) {
            json arr = json::array();
            for (const auto& cert : certs) {
                json item;
                item["candidate"] = cert.candidate + 1;
                item["coalition"] = to_json_1based(cert.coalition.members);
                item["blocking_set"] = to_json_1based(cert.blocking_set);
                arr.push_back(item);
            }
            doc["certificates"] = arr;
        }
        out << doc.dump() << '\n';
    } else {
        out << "core: " << join_1based(core) << '\n';
        for (const auto& cert : certs)
            out << "certificate " << cert.candidate + 1 << ": coalition={"
                << join_1based(cert.coalition.members) << "} blocking={"
                << join_1based(cert.blocking_set) << "}\n";
    }
    return 0;
}

json trace_to_json(const ConsumptionTrace& trace) {
    json rounds = json::array();
    for (const ConsumptionRound& r : trace.rounds) {
        json item;
        item["duration"] = rational_to_string(r.duration);
        json eats = json::array();
        for (int c : r.eats)
            eats.push_back(c + 1);
        item["eats"] = eats;
        item["eliminated"] = to_json_1based(r.eliminated);
        json caps = json::array();
        for (const Rational& c : r.capacities_after)
            caps.push_back(rational_to_string(c));
        item["capacities"] = caps;
        rounds.push_back(item);
    }
    return json{{"rounds", rounds}};
}

int cmd_consume(const std::string& path, bool trace, const std::string& format,
                std::ostream& out) {
    Profile p = load_profile(path);
    if (trace) {
        ConsumptionResult res = consumption_winners(p);
        if (format == "json") {
            json doc;
            doc["winners"] = to_json_1based(res.winners);
            doc["trace"] = trace_to_json(res.trace);
            out << doc.dump() << '\n';
        } else {
            out << "winners: " << join_1based(res.winners) << '\n';
            out << consumption_trace_render(res.trace);
        }
    } else {
        std::set<int> winners = consumption_winner_set(p);
        if (format == "json")
            out << json{{"winners", to_json_1based(winners)}}.dump() << '\n';
        else
            out << "winners: " << join_1based(winners) << '\n';
    }
    return 0;
}

TokenOrder parse_order(const std::string& text, std::uint64_t seed) {
    if (text == "seq")
        return TokenOrder::sequential();
    if (text == "rr")
        return TokenOrder::round_robin();
    if (text == "random")
        return TokenOrder::random(seed);
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in)
            throw std::invalid_argument("cannot open order file '" + text.substr(1) + "'");
        std::vector<int> slots;
        long long v;
        while (in >> v) {
            if (v < 1)
                throw std::invalid_argument("order file entries are 1-based voter indices");
            slots.push_back(static_cast<int>(v - 1));
        }
        if (!in.eof())
            throw std::invalid_argument("order file contains a non-integer token");
        return TokenOrder::explicit_order(std::move(slots));
    }
    throw std::invalid_argument("unknown order '" + text + "' (want seq|rr|random|@<file>)");
}

int cmd_tokens(const std::string& path, const std::string& order_text, std::uint64_t seed,
               const std::string& format, std::ostream& out) {
    Profile p = load_profile(path);
    std::set<int> winners = tokens_winners(p, parse_order(order_text, seed));
    if (format == "json")
        out << json{{"winners", to_json_1based(winners)}}.dump() << '\n';
    else
        out << "winners: " << join_1based(winners) << '\n';
    return 0;
}

int cmd_manipulate(const std::string& path, int voter_1based, const std::string& format,
                   std::ostream& out) {
    Profile p = load_profile(path);
    if (voter_1based < 1 || voter_1based > p.voter_count())
        throw std::invalid_argument("voter must be in 1.." + std::to_string(p.voter_count()));
    ManipulationOutcome res = find_pessimist_manipulation(p, voter_1based - 1);

    if (format == "json") {
        json doc;
        doc["manipulable"] = res.manipulable;
        doc["sincere_core"] = to_json_1based(res.sincere_core);
        doc["sincere_worst"] = res.sincere_worst + 1;
        if (res.manipulable) {
            json ballot = json::array();
            for (int pos = 0; pos < res.strategic_ballot->candidate_count(); ++pos)
                ballot.push_back(res.strategic_ballot->at(pos) + 1);
            doc["strategic_ballot"] = ballot;
            doc["manipulated_core"] = to_json_1based(*res.manipulated_core);
            doc["manipulated_worst"] = *res.manipulated_worst + 1;
        }
        out << doc.dump() << '\n';
    } else {
        out << "manipulable: " << (res.manipulable ? "yes" : "no") << '\n';
        out << "sincere core: " << join_1based(res.sincere_core) << '\n';
        out << "sincere worst: " << res.sincere_worst + 1 << '\n';
        if (res.manipulable) {
            out << "strategic ballot: " << join_ballot(*res.strategic_ballot) << '\n';
            out << "manipulated core: " << join_1based(*res.manipulated_core) << '\n';
            out << "manipulated worst: " << *res.manipulated_worst + 1 << '\n';
        }
    }
    return 0;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1)
                throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(what + " list must be comma-separated positive integers");
        }
    }
    if (out.empty())
        throw std::invalid_argument(what + " list is empty");
    return out;
}

Statistic parse_stat(const std::string& text) {
    if (text == "core-proportion")
        return Statistic::CoreProportion;
    if (text == "winner-count")
        return Statistic::ConsumptionWinnerCount;
    if (text == "prop4")
        return Statistic::LastPlaceAgreement;
    throw std::invalid_argument("unknown statistic '" + text +
                                "' (want core-proportion|winner-count|prop4)");
}

int cmd_simulate(const std::string& stat, const std::string& n_list, const std::string& m_list,
                 int samples, std::uint64_t seed, int workers, const std::string& format,
                 std::ostream& out) {
    SimulationSpec spec;
    spec.statistic = parse_stat(stat);
    spec.samples = samples;
    spec.master_seed = seed;
    spec.workers = workers;
    for (int n : parse_int_list(n_list, "--n"))
        for (int m : parse_int_list(m_list, "--m"))
            spec.grid.emplace_back(n, m);

    SimulationResult res = run_simulation(spec);
    if (format == "records") {
        out << render_records(res);
    } else if (format == "json") {
        json cells = json::array();
        for (const CellStats& c : res.cells) {
            json item;
            item["n"] = c.n;
            item["m"] = c.m;
            item["mean"] = c.mean;
            item["stddev"] = c.stddev;
            item["stderr"] = c.std_error;
            item["count"] = c.count;
            cells.push_back(item);
        }
        out << json{{"cells", cells}}.dump() << '\n';
    } else {
        out << render_table(res);
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Proportional veto core toolkit"};
    app.require_subcommand(1);

    std::string path, format = "text", order_text, stat, n_list, m_list;
    bool certificates = false, trace = false;
    int voter = 0, samples = 1000, workers = 0;
    std::uint64_t seed = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* core = app.add_subcommand("core", "Compute the proportional veto core");
    core->add_option("file", path, "profile file")->required();
    core->add_flag("--certificates", certificates, "emit a blocking certificate per blocked candidate");
    add_format(core);

    CLI::App* consume = app.add_subcommand("consume", "Run veto by consumption");
    consume->add_option("file", path, "profile file")->required();
    consume->add_flag("--trace", trace, "include the round-by-round trace");
    add_format(consume);

    CLI::App* tokens = app.add_subcommand("tokens", "Run voting by veto tokens");
    tokens->add_option("file", path, "profile file")->required();
    tokens->add_option("--order", order_text, "seq|rr|random|@<file>")->required();
    tokens->add_option("--seed", seed, "seed for --order random");
    add_format(tokens);

    CLI::App* manipulate = app.add_subcommand("manipulate", "Decide pessimist manipulability");
    manipulate->add_option("file", path, "profile file")->required();
    manipulate->add_option("--voter", voter, "manipulating voter, 1-based")->required();
    add_format(manipulate);

    CLI::App* simulate = app.add_subcommand("simulate", "Impartial Culture simulations");
    simulate->add_option("--stat", stat, "core-proportion|winner-count|prop4")->required();
    simulate->add_option("--n", n_list, "comma list of voter counts")->required();
    simulate->add_option("--m", m_list, "comma list of candidate counts")->required();
    simulate->add_option("--samples", samples, "samples per cell")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed, "master seed");
    simulate->add_option("--workers", workers, "worker threads (0 = auto)");
    std::string sim_format = "table";
    simulate->add_option("--format", sim_format, "table, records or json")
        ->check(CLI::IsMember({"table", "records", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (core->parsed())
            return cmd_core(path, certificates, format, out);
        if (consume->parsed())
            return cmd_consume(path, trace, format, out);
        if (tokens->parsed())
            return cmd_tokens(path, order_text, seed, format, out);
        if (manipulate->parsed())
            return cmd_manipulate(path, voter, format, out);
        if (simulate->parsed())
            return cmd_simulate(stat, n_list, m_list, samples, seed, workers, sim_format, out);
    } catch (const LimitError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

} // namespace veto::cli
