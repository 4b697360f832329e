#include <doctest.h>

#include <random>

#include "qmap/placement.hpp"

using namespace qmap;

namespace {

LongPath iota_path(int q) {
    LongPath p;
    for (int i = 0; i < q; ++i) p.order.push_back(i);
    return p;
}

}  // namespace

TEST_CASE("spiral order on a full 3x3 grid") {
    const std::vector<Cell> expected{{1, 1}, {1, 2}, {2, 2}, {2, 1}, {2, 0},
                                     {1, 0}, {0, 0}, {0, 1}, {0, 2}};
    CHECK(spiral_order(3, 3, 9) == expected);
}

TEST_CASE("spiral order on one row alternates around the center") {
    const std::vector<Cell> expected{{0, 2}, {0, 3}, {0, 1}, {0, 4}, {0, 0}};
    CHECK(spiral_order(1, 5, 5) == expected);
}

TEST_CASE("single qubit lands on the single cell") {
    LongPath p{{0}};
    const Grid g = spiral_place(p);
    CHECK(g.rows() == 1);
    CHECK(g.cols() == 1);
    CHECK(g.cell(0, 0) == 0);
}

TEST_CASE("nine qubits fill a 3x3 grid along the spiral") {
    LongPath p{{4, 7, 0, 2, 8, 6, 1, 3, 5}};
    const Grid g = spiral_place(p);
    REQUIRE(g.rows() == 3);
    REQUIRE(g.cols() == 3);
    const auto cells = spiral_order(3, 3, 9);
    for (int i = 0; i < 9; ++i) {
        CHECK(g.cell(cells[static_cast<std::size_t>(i)].row, cells[static_cast<std::size_t>(i)].col) ==
              p.order[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("five qubits on 3x3 leave four vacant cells") {
    const Grid g = spiral_place(iota_path(5));
    REQUIRE(g.rows() == 3);
    const auto cells = spiral_order(3, 3, 9);
    int vacant = 0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (g.cell(r, c) == kEmptyCell) ++vacant;
    CHECK(vacant == 4);
    for (int i = 0; i < 5; ++i) {
        CHECK(g.cell(cells[static_cast<std::size_t>(i)].row, cells[static_cast<std::size_t>(i)].col) == i);
    }
}

TEST_CASE("center rule for square grids") {
    for (int q : {1, 4, 9, 16, 25}) {
        LongPath p = iota_path(q);
        const Grid g = spiral_place(p);
        const int n = g.rows();
        CHECK(g.cell((n - 1) / 2, (n - 1) / 2) == 0);
    }
}

TEST_CASE("grid config overrides") {
    SUBCASE("explicit dimensions") {
        PlacementConfig cfg;
        cfg.rows = 2;
        cfg.cols = 4;
        const Grid g = spiral_place(iota_path(6), cfg);
        CHECK(g.rows() == 2);
        CHECK(g.cols() == 4);
    }
    SUBCASE("rows only derives columns") {
        PlacementConfig cfg;
        cfg.rows = 2;
        const Grid g = spiral_place(iota_path(6), cfg);
        CHECK(g.rows() == 2);
        CHECK(g.cols() == 3);
    }
    SUBCASE("capacity is checked") {
        PlacementConfig cfg;
        cfg.rows = 2;
        cfg.cols = 2;
        CHECK_THROWS_AS(spiral_place(iota_path(5), cfg), std::invalid_argument);
    }
}

TEST_CASE("spiral_place rejects non-permutations") {
    CHECK_THROWS_AS(spiral_place(LongPath{{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(spiral_place(LongPath{{1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(spiral_place(LongPath{{}}), std::invalid_argument);
}

TEST_CASE("cell and position stay mutually inverse") {
    std::mt19937_64 rng(0x3311u);
    for (int trial = 0; trial < 100; ++trial) {
        const int q = 1 + static_cast<int>(rng() % 20);
        std::vector<int> order(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i) order[static_cast<std::size_t>(i)] = i;
        std::shuffle(order.begin(), order.end(), rng);
        const Grid g = spiral_place(LongPath{order});
        for (int i = 0; i < q; ++i) {
            const Cell c = g.position(i);
            CHECK(g.cell(c.row, c.col) == i);
        }
    }
}

TEST_CASE("grid distance") {
    const Grid g = spiral_place(iota_path(9));
    SUBCASE("examples") {
        // Qubit 0 at (1,1); qubit 1 at (1,2) by the spiral convention.
        CHECK(grid_distance(g, 0, 1) == 1);
        // Qubit 6 at (0,0), qubit 2 at (2,2).
        CHECK(grid_distance(g, 6, 2) == 4);
    }
    SUBCASE("symmetry") {
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j)
                if (i != j) CHECK(grid_distance(g, i, j) == grid_distance(g, j, i));
    }
    SUBCASE("unplaced qubit") { CHECK_THROWS_AS(grid_distance(g, 0, 9), std::invalid_argument); }
}

TEST_CASE("placement is deterministic") {
    LongPath p{{3, 1, 4, 0, 2}};
    CHECK(spiral_place(p) == spiral_place(p));
}

TEST_CASE("fill_vacant_cells appends spare qubits row-major") {
    const Grid g = spiral_place(iota_path(5));
    const Grid full = fill_vacant_cells(g);
    CHECK(full.qubit_count() == 9);
    int expected = 5;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (g.cell(r, c) == kEmptyCell) {
                CHECK(full.cell(r, c) == expected);
                ++expected;
            } else {
                CHECK(full.cell(r, c) == g.cell(r, c));
            }
        }
    }
}

TEST_CASE("from_cells validates occupancy") {
    CHECK_THROWS_AS(Grid::from_cells(2, 2, {0, 1, 1, kEmptyCell}), std::invalid_argument);
    CHECK_THROWS_AS(Grid::from_cells(2, 2, {0, 2, kEmptyCell, kEmptyCell}), std::invalid_argument);
    const Grid g = Grid::from_cells(2, 2, {2, 0, kEmptyCell, 1});
    CHECK(g.qubit_count() == 3);
    CHECK(g.position(2) == Cell{0, 0});
}

TEST_CASE("grid art and csv") {
    const Grid g = Grid::from_cells(2, 2, {1, 0, 2, kEmptyCell});
    CHECK(g.to_csv() == "1,0\n2,-1\n");
    CHECK(g.to_art() == "q1 q0\nq2  .\n");
}
