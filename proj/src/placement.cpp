#include "qmap/placement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace qmap {

Grid::Grid(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
    cell_.assign(static_cast<std::size_t>(rows) * cols, kEmptyCell);
}

Grid Grid::from_cells(int rows, int cols, const std::vector<int>& cells) {
    Grid grid(rows, cols);
    if (cells.size() != grid.cell_.size()) throw std::invalid_argument("cell list does not match grid size");
    int count = 0;
    for (int v : cells) {
        if (v != kEmptyCell) ++count;
    }
    std::vector<char> seen(count, 0);
    for (int v : cells) {
        if (v == kEmptyCell) continue;
        if (v < 0 || v >= count || seen[v]) {
            throw std::invalid_argument("cells must hold each qubit index 0..n-1 exactly once");
        }
        seen[v] = 1;
    }
    grid.pos_.assign(count, Cell{});
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int v = cells[static_cast<std::size_t>(grid.index(r, c))];
            grid.cell_[static_cast<std::size_t>(grid.index(r, c))] = v;
            if (v != kEmptyCell) grid.pos_[v] = Cell{r, c};
        }
    }
    return grid;
}

int Grid::cell(int row, int col) const {
    if (row < 0 || col < 0 || row >= rows_ || col >= cols_) throw std::invalid_argument("cell out of range");
    return cell_[static_cast<std::size_t>(index(row, col))];
}

bool Grid::placed(int qubit) const {
    return qubit >= 0 && qubit < static_cast<int>(pos_.size()) &&
           pos_[static_cast<std::size_t>(qubit)].row >= 0;
}

Cell Grid::position(int qubit) const {
    if (!placed(qubit)) throw std::invalid_argument("qubit q" + std::to_string(qubit) + " is not placed");
    return pos_[static_cast<std::size_t>(qubit)];
}

void Grid::place(int qubit, int row, int col) {
    if (qubit < 0) throw std::invalid_argument("negative qubit index");
    if (cell(row, col) != kEmptyCell) throw std::invalid_argument("cell is already occupied");
    if (placed(qubit)) throw std::invalid_argument("qubit q" + std::to_string(qubit) + " is already placed");
    if (qubit >= static_cast<int>(pos_.size())) pos_.resize(static_cast<std::size_t>(qubit) + 1, Cell{-1, -1});
    cell_[static_cast<std::size_t>(index(row, col))] = qubit;
    pos_[static_cast<std::size_t>(qubit)] = Cell{row, col};
}

void Grid::swap_qubits(int a, int b) {
    if (a == b) throw std::invalid_argument("cannot swap a qubit with itself");
    Cell pa = position(a);
    Cell pb = position(b);
    std::swap(cell_[static_cast<std::size_t>(index(pa.row, pa.col))],
              cell_[static_cast<std::size_t>(index(pb.row, pb.col))]);
    std::swap(pos_[static_cast<std::size_t>(a)], pos_[static_cast<std::size_t>(b)]);
}

std::string Grid::to_art() const {
    std::size_t width = 1;
    for (int v : cell_) {
        if (v != kEmptyCell) width = std::max(width, 1 + std::to_string(v).size());
    }
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            int v = cell_[static_cast<std::size_t>(index(r, c))];
            std::string label = v == kEmptyCell ? "." : "q" + std::to_string(v);
            if (c > 0) out += ' ';
            out += std::string(width - label.size(), ' ') + label;
        }
        out += '\n';
    }
    return out;
}

std::string Grid::to_csv() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c > 0) out += ',';
            out += std::to_string(cell_[static_cast<std::size_t>(index(r, c))]);
        }
        out += '\n';
    }
    return out;
}

std::vector<Cell> spiral_order(int rows, int cols, int count) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
    if (count < 0 || count > rows * cols) throw std::invalid_argument("count exceeds grid capacity");
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 0) return out;

    int r = (rows - 1) / 2;
    int c = (cols - 1) / 2;
    out.push_back(Cell{r, c});

    static constexpr int dr[4] = {0, 1, 0, -1};  // E, S, W, N
    static constexpr int dc[4] = {1, 0, -1, 0};
    int dir = 0;
    int len = 1;
    while (static_cast<int>(out.size()) < count) {
        for (int arm = 0; arm < 2 && static_cast<int>(out.size()) < count; ++arm) {
            for (int step = 0; step < len && static_cast<int>(out.size()) < count; ++step) {
                r += dr[dir];
                c += dc[dir];
                if (r >= 0 && r < rows && c >= 0 && c < cols) out.push_back(Cell{r, c});
            }
            dir = (dir + 1) % 4;
        }
        ++len;
        if (len > 2 * (rows + cols) + 4) throw std::logic_error("spiral did not cover the grid");
    }
    return out;
}

Grid spiral_place(const LongPath& path, const PlacementConfig& cfg) {
    const int q = static_cast<int>(path.order.size());
    if (q < 1) throw std::invalid_argument("cannot place an empty path");
    std::vector<char> seen(q, 0);
    for (int v : path.order) {
        if (v < 0 || v >= q || seen[v]) throw std::invalid_argument("path is not a permutation of 0..q-1");
        seen[v] = 1;
    }

    int rows, cols;
    if (cfg.rows && cfg.cols) {
        rows = *cfg.rows;
        cols = *cfg.cols;
    } else if (cfg.rows) {
        rows = *cfg.rows;
        cols = (q + rows - 1) / rows;
    } else if (cfg.cols) {
        cols = *cfg.cols;
        rows = (q + cols - 1) / cols;
    } else {
        rows = cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(q))));
    }
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
    if (rows * cols < q) {
        throw std::invalid_argument("grid " + std::to_string(rows) + "x" + std::to_string(cols) +
                                    " cannot hold " + std::to_string(q) + " qubits");
    }

    Grid grid(rows, cols);
    auto cells = spiral_order(rows, cols, q);
    for (int i = 0; i < q; ++i) grid.place(path.order[static_cast<std::size_t>(i)], cells[static_cast<std::size_t>(i)].row,
                                           cells[static_cast<std::size_t>(i)].col);
    return grid;
}

int grid_distance(const Grid& grid, int i, int j) {
    Cell a = grid.position(i);
    Cell b = grid.position(j);
    return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

Grid fill_vacant_cells(const Grid& grid) {
    Grid out = grid;
    int next = grid.qubit_count();
    for (int r = 0; r < grid.rows(); ++r) {
        for (int c = 0; c < grid.cols(); ++c) {
            if (out.cell(r, c) == kEmptyCell) out.place(next++, r, c);
        }
    }
    return out;
}

}  // namespace qmap
