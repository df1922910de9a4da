#include "veto/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "veto/rng.hpp"
#include "veto/rules.hpp"
#include "veto/vetocore.hpp"

namespace veto {

Profile sample_ic_profile(int m, int n, std::uint64_t seed) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("sample_ic_profile: m and n must be >= 1");
    std::mt19937_64 gen(seed);
    std::vector<Ballot> ballots;
    ballots.reserve(n);
    std::vector<int> order(m);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < m; ++i)
            order[i] = i;
        shuffle_portable(order, gen);
        ballots.emplace_back(order);
    }
    return Profile(m, std::move(ballots));
}

std::set<int> last_place_characterization(const Profile& p) {
    const int m = p.candidate_count();
    const int n = p.voter_count();
    std::vector<int> last_count(m, 0);
    for (int v = 0; v < n; ++v)
        ++last_count[p.ballot(v).at(m - 1)];
    std::set<int> out;
    for (int c = 0; c < m; ++c)
        if (static_cast<long long>(m) * last_count[c] <= n)
            out.insert(c);
    return out;
}

namespace {

double sample_statistic(Statistic stat, const Profile& p) {
    switch (stat) {
    case Statistic::CoreProportion:
        return static_cast<double>(compute_core(p).size()) / p.candidate_count();
    case Statistic::ConsumptionWinnerCount:
        return static_cast<double>(consumption_winner_set(p).size());
    case Statistic::LastPlaceAgreement:
        return compute_core(p) == last_place_characterization(p) ? 1.0 : 0.0;
    }
    return 0.0;
}

CellStats summarize(int n, int m, const std::vector<double>& values) {
    CellStats out;
    out.n = n;
    out.m = m;
    out.count = static_cast<long>(values.size());
    double sum = 0;
    for (double v : values)
        sum += v;
    out.mean = sum / out.count;
    if (out.count > 1) {
        double ss = 0;
        for (double v : values)
            ss += (v - out.mean) * (v - out.mean);
        out.stddev = std::sqrt(ss / (out.count - 1));
        out.std_error = out.stddev / std::sqrt(static_cast<double>(out.count));
    }
    return out;
}

} // namespace

SimulationResult run_simulation(const SimulationSpec& spec) {
    if (spec.grid.empty())
        throw std::invalid_argument("simulation grid is empty");
    if (spec.samples < 1)
        throw std::invalid_argument("samples must be >= 1");

    int workers = spec.workers;
    if (workers <= 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<int>(workers, spec.samples);

    SimulationResult result;
    result.statistic = spec.statistic;
    result.cells.reserve(spec.grid.size());

    for (size_t cell = 0; cell < spec.grid.size(); ++cell) {
        const auto [n, m] = spec.grid[cell];
        if (n < 1 || m < 1)
            throw std::invalid_argument("grid cell with non-positive n or m");
        std::vector<double> values(spec.samples);

        std::exception_ptr worker_error;
        std::mutex error_mutex;
        auto worker = [&](int begin, int end) {
            try {
                for (int idx = begin; idx < end; ++idx) {
                    Profile p = sample_ic_profile(
                        m, n, derive_seed(spec.master_seed, static_cast<std::uint64_t>(cell),
                                          static_cast<std::uint64_t>(idx)));
                    values[idx] = sample_statistic(spec.statistic, p);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!worker_error)
                    worker_error = std::current_exception();
            }
        };

        if (workers == 1) {
            worker(0, spec.samples);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            const int chunk = (spec.samples + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                int begin = w * chunk;
                int end = std::min(spec.samples, begin + chunk);
                if (begin < end)
                    pool.emplace_back(worker, begin, end);
            }
            for (auto& t : pool)
                t.join();
        }
        if (worker_error)
            std::rethrow_exception(worker_error);

        result.cells.push_back(summarize(n, m, values));
    }
    return result;
}

namespace {

std::string fixed_str(double v, int decimals) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(decimals) << v;
    return out.str();
}

} // namespace

std::string render_table(const SimulationResult& res) {
    std::vector<int> ns, ms;
    for (const CellStats& c : res.cells) {
        if (std::find(ns.begin(), ns.end(), c.n) == ns.end())
            ns.push_back(c.n);
        if (std::find(ms.begin(), ms.end(), c.m) == ms.end())
            ms.push_back(c.m);
    }
    // Complete cross product, row-major in grid order.
    if (res.cells.size() != ns.size() * ms.size())
        throw std::invalid_argument("render_table: grid is not a complete cross product");
    auto cell_at = [&](int n, int m) -> const CellStats& {
        for (const CellStats& c : res.cells)
            if (c.n == n && c.m == m)
                return c;
        throw std::invalid_argument("render_table: grid is not a complete cross product");
    };

    size_t label_width = 0;
    std::vector<std::string> row_labels;
    for (int n : ns) {
        row_labels.push_back("n=" + std::to_string(n));
        label_width = std::max(label_width, row_labels.back().size());
    }
    std::vector<std::string> col_labels;
    std::vector<size_t> col_widths;
    for (int m : ms) {
        col_labels.push_back("m=" + std::to_string(m));
        size_t w = col_labels.back().size();
        for (int n : ns)
            w = std::max(w, fixed_str(cell_at(n, m).mean, 2).size());
        col_widths.push_back(w);
    }

    std::ostringstream out;
    out << std::string(label_width, ' ');
    for (size_t j = 0; j < ms.size(); ++j)
        out << "  " << std::setw(static_cast<int>(col_widths[j])) << col_labels[j];
    out << '\n';
    for (size_t i = 0; i < ns.size(); ++i) {
        out << std::setw(static_cast<int>(label_width)) << row_labels[i];
        for (size_t j = 0; j < ms.size(); ++j)
            out << "  " << std::setw(static_cast<int>(col_widths[j]))
                << fixed_str(cell_at(ns[i], ms[j]).mean, 2);
        out << '\n';
    }
    return out.str();
}

std::string render_records(const SimulationResult& res) {
    std::ostringstream out;
    for (size_t i = 0; i < res.cells.size(); ++i) {
        const CellStats& c = res.cells[i];
        out << i << ' ' << c.n << ' ' << c.m << ' ' << fixed_str(c.mean, 6) << ' '
            << fixed_str(c.stddev, 6) << ' ' << fixed_str(c.std_error, 6) << ' ' << c.count
            << '\n';
    }
    return out.str();
}

} // namespace veto
