#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pilotshift/error.hpp"
#include "pilotshift/pilot_grid.hpp"

using namespace pilotshift;

TEST_CASE("pilot positions") {
    CHECK(pilot_positions({{8, 2, 9.0}, 1}) == std::vector<int>{1, 5});
    CHECK(pilot_positions({{8, 2, 9.0}, 4}) == std::vector<int>{4, 8});
    CHECK(pilot_positions({{64, 4, 9.0}, 3}) == std::vector<int>{3, 19, 35, 51});
    CHECK(pilot_positions({{64, 64, 9.0}, 1}).size() == 64);
}

TEST_CASE("layout validation") {
    CHECK_THROWS_AS(pilot_positions({{64, 5, 9.0}, 1}), ConfigError);
    CHECK_THROWS_AS(pilot_positions({{64, 4, 9.0}, 0}), ConfigError);
    CHECK_THROWS_AS(pilot_positions({{64, 4, 9.0}, 17}), ConfigError);
    CHECK_THROWS_AS(pilot_positions({{64, 4, 0.0}, 1}), ConfigError);
    CHECK_THROWS_AS(pilot_positions({{64, 0, 9.0}, 1}), ConfigError);
    CHECK_THROWS_AS(pilot_positions({{8, 16, 9.0}, 1}), ConfigError);
}

TEST_CASE("offsets partition the subcarriers into equally spaced classes") {
    for (auto [n_s, n_p] : {std::pair{8, 2}, {64, 4}, {64, 8}, {256, 16}}) {
        const PilotGeometry g{n_s, n_p, 9.0};
        std::set<int> seen;
        for (int r = 1; r <= g.spacing(); ++r) {
            const auto pos = pilot_positions({g, r});
            CHECK(pos.size() == static_cast<std::size_t>(n_p));
            for (std::size_t k = 1; k < pos.size(); ++k) CHECK(pos[k] - pos[k - 1] == g.spacing());
            for (int p : pos) {
                CHECK(residue_offset(p, g.spacing()) == r);
                CHECK(seen.insert(p).second);
            }
        }
        CHECK(seen.size() == static_cast<std::size_t>(n_s));
        CHECK(*seen.begin() == 1);
        CHECK(*seen.rbegin() == n_s);
    }
}

TEST_CASE("frame assembly") {
    const DataSymbols data{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}};

    SUBCASE("N_s = 8, N_p = 2, r_o = 1, P = 9") {
        const FreqFrame f = assemble_frame(data, {{8, 2, 9.0}, 1});
        const std::vector<Complex> expected{{3, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}};
        CHECK(f.symbols == expected);
    }

    SUBCASE("shifting moves pilots through a fixed data order") {
        const FreqFrame f = assemble_frame(data, {{8, 2, 9.0}, 2});
        const std::vector<Complex> expected{{1, 0}, {3, 0}, {2, 0}, {3, 0}, {4, 0}, {3, 0}, {5, 0}, {6, 0}};
        CHECK(f.symbols == expected);
    }

    SUBCASE("matches the test oracle layout") {
        std::mt19937_64 rng(1);
        const auto d = oracle::random_qpsk(60, rng);
        for (int r = 1; r <= 16; ++r) {
            CHECK(assemble_frame(d, {{64, 4, 9.0}, r}).symbols == oracle::frame(d, 64, 4, 9.0, r));
        }
    }

    SUBCASE("average power bookkeeping") {
        std::mt19937_64 rng(2);
        const auto d = oracle::random_qpsk(60, rng);
        const FreqFrame f = assemble_frame(d, {{64, 4, 9.0}, 7});
        double power = 0.0;
        for (const auto& s : f.symbols) power += std::norm(s);
        CHECK(power / 64.0 == doctest::Approx(1.5).epsilon(1e-12));
    }

    SUBCASE("wrong data length") {
        CHECK_THROWS_AS(assemble_frame(DataSymbols(5), {{8, 2, 9.0}, 1}), InputError);
    }
}

TEST_CASE("frame disassembly") {
    std::vector<Complex> bins;
    for (int i = 1; i <= 8; ++i) bins.emplace_back(i, 0);
    const FreqFrame f{bins};
    const DataSymbols got = disassemble_frame(f, std::vector<int>{1, 5});
    CHECK(got == DataSymbols{{2, 0}, {3, 0}, {4, 0}, {6, 0}, {7, 0}, {8, 0}});

    CHECK_THROWS_AS(disassemble_frame(f, std::vector<int>{0, 5}), InputError);
    CHECK_THROWS_AS(disassemble_frame(f, std::vector<int>{1, 9}), InputError);
    CHECK_THROWS_AS(disassemble_frame(f, std::vector<int>{5, 5}), InputError);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = oracle::random_qpsk(240, rng);
        const PilotLayout layout{{256, 16, 9.0}, trial % 16 + 1};
        const FreqFrame frame = assemble_frame(d, layout);
        CHECK(disassemble_frame(frame, pilot_positions(layout)) == d);
        // one residue class off: data comes back misaligned
        const PilotLayout wrong{layout.geometry, layout.offset % 16 + 1};
        CHECK(disassemble_frame(frame, pilot_positions(wrong)) != d);
    }
}

TEST_CASE("wrap index") {
    CHECK(wrap_index(5, 8) == 5);
    CHECK(wrap_index(9, 8) == 1);
    CHECK(wrap_index(13, 8) == 5);
    CHECK(wrap_index(16, 8) == 8);
    CHECK_THROWS_AS(wrap_index(0, 8), InputError);
    CHECK_THROWS_AS(wrap_index(17, 8), InputError);

    for (int n_s : {8, 64, 256}) {
        for (int v = 1; v <= 2 * n_s; ++v) CHECK(wrap_index(v, n_s) == (v - 1) % n_s + 1);
    }
}
