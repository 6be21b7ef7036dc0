#pragma once

#include <crcforge/bitset.hpp>
#include <crcforge/error.hpp>

#include <optional>
#include <string>

namespace crcforge::stochastic {

/// A subset of the grid H(1,q) x H(1,q'): `rows` = q, `cols` = q'. Column i
/// (fixed i, row varying) is a clique of size q; row j is a clique of size q'.
class GridSet {
public:
    GridSet(int rows, int cols);

    auto rows() const noexcept -> int { return _rows; }
    auto cols() const noexcept -> int { return _cols; }
    auto contains(int row, int col) const -> bool { return _cells.test(offset(row, col)); }
    void insert(int row, int col) { _cells.set(offset(row, col)); }
    auto size() const noexcept -> std::size_t { return _cells.count(); }
    auto is_full() const noexcept -> bool { return size() == _cells.size(); }

    auto column_count(int col) const -> int;
    auto row_count(int row) const -> int;

    friend auto operator==(const GridSet &, const GridSet &) -> bool = default;

private:
    auto offset(int row, int col) const -> std::size_t;

    int _rows;
    int _cols;
    Bitset _cells;
};

auto to_string(const GridSet & set) -> std::string;

/// (a,b): a members in every column (size-q clique), b in every row.
struct StochasticProfile {
    int a;
    int b;

    auto gamma() const noexcept -> int { return a + b; }

    friend auto operator==(const StochasticProfile &, const StochasticProfile &) -> bool = default;
};

auto profile(const GridSet & set) -> std::optional<StochasticProfile>;

/// The (a,b)-stochastic set with a = q*gamma/(q+q'), b = q'*gamma/(q+q'):
/// column i holds the cyclic interval {i*a, ..., i*a + a - 1} mod q.
/// Accepts 0 < a <= q; a == q yields the full grid.
auto build(int q, int qp, int gamma) -> GridSet;

/// True iff build(q, qp, gamma) succeeds with a < q, i.e. the result is a
/// covering-radius-1 CRC of the grid.
auto exists(int q, int qp, int gamma) -> bool;

/// Intersection numbers of the set as a code in the grid graph, counted
/// directly on the product graph. Empty unless the set is a proper nonempty
/// CRC with covering radius 1.
struct GridCrc {
    int gamma;
    int beta;
    /// valency - (gamma + beta); -2 for stochastic sets.
    int eigenvalue;
};

auto check_grid_crc(const GridSet & set) -> std::optional<GridCrc>;

}
