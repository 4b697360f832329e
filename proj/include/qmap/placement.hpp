#pragma once

#include "qmap/interaction.hpp"

#include <optional>

namespace qmap {

inline constexpr int kEmptyCell = -1;

struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Rectangular array of cells holding qubit indices. Tracks both directions
/// of the assignment: cell -> qubit and qubit -> cell.
class Grid {
public:
    Grid() = default;
    Grid(int rows, int cols);
    static Grid from_cells(int rows, int cols, const std::vector<int>& cells);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int qubit_count() const { return static_cast<int>(pos_.size()); }

    int cell(int row, int col) const;
    const std::vector<int>& cells() const { return cell_; }

    bool placed(int qubit) const;
    Cell position(int qubit) const;

    void place(int qubit, int row, int col);
    void swap_qubits(int a, int b);

    std::string to_art() const;
    std::string to_csv() const;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    int index(int row, int col) const { return row * cols_ + col; }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> cell_;  // row-major; kEmptyCell when vacant
    std::vector<Cell> pos_;  // qubit -> cell
};

struct PlacementConfig {
    std::optional<int> rows;
    std::optional<int> cols;
};

/// Cells of an outward clockwise spiral from the grid center, skipping
/// coordinates that fall outside the grid. Arm pattern: 1 east, 1 south,
/// 2 west, 2 north, 3 east, 3 south, ...
std::vector<Cell> spiral_order(int rows, int cols, int count);

/// Places path.order[0] at (floor((r-1)/2), floor((c-1)/2)) and the rest
/// along the spiral. Defaults to the smallest square grid holding all
/// qubits: r = c = ceil(sqrt(q)).
Grid spiral_place(const LongPath& path, const PlacementConfig& cfg = {});

/// Manhattan distance between two placed qubits.
int grid_distance(const Grid& grid, int i, int j);

/// Assigns fresh qubit indices to vacant cells (row-major order) so every
/// cell is occupied; existing placements are unchanged.
Grid fill_vacant_cells(const Grid& grid);

}  // namespace qmap
