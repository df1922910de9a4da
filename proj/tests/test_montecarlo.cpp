#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "veto/montecarlo.hpp"
#include "veto/rng.hpp"
#include "veto/rules.hpp"
#include "veto/vetocore.hpp"
#include "test_support.hpp"

using namespace veto;

TEST_CASE("sampling is deterministic in (m, n, seed)") {
    Profile a = sample_ic_profile(6, 9, 123456789);
    Profile b = sample_ic_profile(6, 9, 123456789);
    CHECK(a == b);
    Profile c = sample_ic_profile(6, 9, 123456790);
    CHECK(!(a == c));
}

TEST_CASE("single candidate sampling") {
    Profile p = sample_ic_profile(1, 3, 42);
    CHECK(p.candidate_count() == 1);
    for (int v = 0; v < 3; ++v)
        CHECK(p.ballot(v).at(0) == 0);
}

TEST_CASE("ballots are uniform over the 6 orders of 3 candidates") {
    std::map<std::vector<int>, int> freq;
    const int samples = 60000;
    for (int i = 0; i < samples; ++i) {
        Profile p = sample_ic_profile(3, 1, derive_seed(0xFEED, 0, i));
        ++freq[p.ballot(0).order()];
    }
    CHECK(freq.size() == 6);
    for (const auto& [order, count] : freq)
        CHECK(std::abs(count / double(samples) - 1.0 / 6) < 0.01);
    // chi-square against uniform: 5 dof, 0.001 quantile is 20.5
    double chi2 = 0;
    for (const auto& [order, count] : freq) {
        double expected = samples / 6.0;
        chi2 += (count - expected) * (count - expected) / expected;
    }
    CHECK(chi2 < 20.5);
}

TEST_CASE("last-place characterization") {
    // a is ranked last by 3 voters, b by 1: 5*3 > 4 and 5*1 > 4 exclude both
    Profile p = vetotest::example1();
    CHECK(last_place_characterization(p) == std::set<int>{2, 3, 4});
}

TEST_CASE("core proportion of the 2x2 cell is analytically 3/4") {
    SimulationSpec spec;
    spec.statistic = Statistic::CoreProportion;
    spec.grid = {{2, 2}};
    spec.samples = 100000;
    spec.master_seed = 2024;
    SimulationResult res = run_simulation(spec);
    CHECK(std::abs(res.cells[0].mean - 0.75) < 0.01);
    CHECK(res.cells[0].count == 100000);
}

TEST_CASE("consumption winner count means") {
    SimulationSpec spec;
    spec.statistic = Statistic::ConsumptionWinnerCount;
    spec.samples = 100000;
    spec.master_seed = 77;
    spec.grid = {{2, 2}};
    CHECK(std::abs(run_simulation(spec).cells[0].mean - 1.5) < 0.01);

    spec.grid = {{5, 2}};
    spec.samples = 1000;
    CHECK(run_simulation(spec).cells[0].mean == 1.0); // odd n cannot split evenly
}

TEST_CASE("per-profile statistics respect their logical bounds") {
    for (int i = 0; i < 200; ++i) {
        int m = 1 + i % 6;
        int n = 1 + (i / 6) % 6;
        Profile p = sample_ic_profile(m, n, 0x5C0DE + i);
        double prop = double(compute_core(p).size()) / m;
        CHECK(prop >= 1.0 / m);
        CHECK(prop <= 1.0);
        size_t winners = consumption_winner_set(p).size();
        CHECK(winners >= 1);
        CHECK(winners <= static_cast<size_t>(m));
    }
}

TEST_CASE("last-place agreement is high for large n") {
    SimulationSpec spec;
    spec.statistic = Statistic::LastPlaceAgreement;
    spec.grid = {{301, 3}};
    spec.samples = 200;
    spec.master_seed = 5150;
    SimulationResult res = run_simulation(spec);
    CHECK(res.cells[0].mean >= 0.8);
    CHECK(res.cells[0].mean <= 1.0);
}

TEST_CASE("results are independent of the worker count") {
    SimulationSpec spec;
    spec.statistic = Statistic::CoreProportion;
    spec.grid = {{3, 4}, {4, 3}, {2, 5}};
    spec.samples = 500;
    spec.master_seed = 31415;

    spec.workers = 1;
    std::string one = render_records(run_simulation(spec));
    spec.workers = 3;
    std::string three = render_records(run_simulation(spec));
    spec.workers = 0; // auto
    std::string autod = render_records(run_simulation(spec));
    CHECK(one == three);
    CHECK(one == autod);
}

TEST_CASE("core proportion means match the reference grid") {
    // reference IC averages for n, m in {2..5}
    const double expected[4][4] = {
        {0.75, 0.39, 0.41, 0.28},
        {0.50, 0.69, 0.35, 0.33},
        {0.68, 0.45, 0.66, 0.35},
        {0.50, 0.42, 0.47, 0.66},
    };
    SimulationSpec spec;
    spec.statistic = Statistic::CoreProportion;
    spec.samples = 1000;
    spec.master_seed = 161803;
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; m <= 5; ++m)
            spec.grid.emplace_back(n, m);
    SimulationResult res = run_simulation(spec);
    for (size_t i = 0; i < res.cells.size(); ++i) {
        const CellStats& c = res.cells[i];
        CHECK(std::abs(c.mean - expected[c.n - 2][c.m - 2]) < 0.05);
    }
}

TEST_CASE("render table") {
    SimulationSpec spec;
    spec.statistic = Statistic::CoreProportion;
    spec.grid = {{2, 2}};
    spec.samples = 50;
    spec.master_seed = 1;
    SimulationResult res = run_simulation(spec);
    std::string table = render_table(res);
    CHECK(table == render_table(res)); // deterministic
    // one header line plus one row
    CHECK(std::count(table.begin(), table.end(), '\n') == 2);
    CHECK(table.find("m=2") != std::string::npos);
    CHECK(table.find("n=2") != std::string::npos);

    // incomplete grids are rejected
    SimulationResult broken = res;
    CellStats extra = res.cells[0];
    extra.n = 3;
    broken.cells.push_back(extra);
    CellStats extra2 = extra;
    extra2.m = 5;
    broken.cells.push_back(extra2); // {2,3} x {2,5} needs 4 cells, has 3
    CHECK_THROWS_AS(render_table(broken), std::invalid_argument);
}

TEST_CASE("render records schema") {
    SimulationSpec spec;
    spec.statistic = Statistic::ConsumptionWinnerCount;
    spec.grid = {{2, 2}, {3, 2}};
    spec.samples = 100;
    spec.master_seed = 99;
    SimulationResult res = run_simulation(spec);
    std::string records = render_records(res);
    std::istringstream in(records);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        long cell, n, m, count;
        double mean, stddev, se;
        REQUIRE(static_cast<bool>(fields >> cell >> n >> m >> mean >> stddev >> se >> count));
        CHECK(cell == lineno);
        CHECK(count == 100);
        ++lineno;
    }
    CHECK(lineno == 2);
}

TEST_CASE("spec validation") {
    SimulationSpec spec;
    spec.grid = {};
    CHECK_THROWS_AS(run_simulation(spec), std::invalid_argument);
    spec.grid = {{2, 2}};
    spec.samples = 0;
    CHECK_THROWS_AS(run_simulation(spec), std::invalid_argument);
}

TEST_CASE("limit errors surface from worker threads") {
    SimulationSpec spec;
    spec.statistic = Statistic::CoreProportion;
    spec.grid = {{3, 10001}}; // m beyond the coefficient bound
    spec.samples = 8;
    spec.workers = 2;
    CHECK_THROWS_AS(run_simulation(spec), LimitError);
}
