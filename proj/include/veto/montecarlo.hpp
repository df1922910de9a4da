#ifndef VETO_MONTECARLO_HPP
#define VETO_MONTECARLO_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "veto/prefmodel.hpp"

namespace veto {

enum class Statistic {
    CoreProportion,         // |core| / m
    ConsumptionWinnerCount, // |veto-by-consumption winners|
    LastPlaceAgreement,     // core == last-place characterization
};

struct SimulationSpec {
    Statistic statistic = Statistic::CoreProportion;
    std::vector<std::pair<int, int>> grid; // (n, m) cells
    int samples = 1;
    std::uint64_t master_seed = 0;
    int workers = 0; // 0 = hardware concurrency
};

struct CellStats {
    int n = 0;
    int m = 0;
    double mean = 0;
    double stddev = 0;
    double std_error = 0;
    long count = 0;
};

struct SimulationResult {
    Statistic statistic = Statistic::CoreProportion;
    std::vector<CellStats> cells; // aligned with the spec's grid
};

/// Impartial Culture draw: n independent uniform permutations of 1..m from
/// mt19937_64(seed) with the pinned shuffle. Same arguments, same profile.
Profile sample_ic_profile(int m, int n, std::uint64_t seed);

/// Candidates ranked last by at most n/m voters, i.e. m * last_count <= n.
/// Almost surely equals the core as n grows at fixed m.
std::set<int> last_place_characterization(const Profile& p);

/// Runs every cell; per-sample seeds are derived from (master seed, cell
/// ordinal, sample index), so results are bit-identical for any worker
/// count. Sample values are reduced in index order.
SimulationResult run_simulation(const SimulationSpec& spec);

/// Aligned rows-by-n, columns-by-m table, means to 2 decimals. Requires the
/// grid to be a complete cross product.
std::string render_table(const SimulationResult& res);

/// Line-delimited records: `cell n m mean stddev stderr count`.
std::string render_records(const SimulationResult& res);

} // namespace veto

#endif
