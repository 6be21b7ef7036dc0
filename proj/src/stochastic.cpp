#include <crcforge/error.hpp>
#include <crcforge/stochastic.hpp>

namespace crcforge::stochastic {

GridSet::GridSet(int rows, int cols) :
    _rows(rows),
    _cols(cols),
    _cells(rows > 0 && cols > 0 ? static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) : 0)
{
    if (rows < 1 || cols < 1)
        throw Error(Errc::invalid_dimensions, "grid dimensions must be positive");
}

auto GridSet::offset(int row, int col) const -> std::size_t
{
    if (row < 0 || row >= _rows || col < 0 || col >= _cols)
        throw Error(Errc::vertex_out_of_space, "grid cell out of range");
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(_cols) + static_cast<std::size_t>(col);
}

auto GridSet::column_count(int col) const -> int
{
    int count = 0;
    for (int j = 0; j < _rows; ++j)
        count += contains(j, col) ? 1 : 0;
    return count;
}

auto GridSet::row_count(int row) const -> int
{
    int count = 0;
    for (int i = 0; i < _cols; ++i)
        count += contains(row, i) ? 1 : 0;
    return count;
}

auto to_string(const GridSet & set) -> std::string
{
    std::string out;
    for (int j = 0; j < set.rows(); ++j) {
        for (int i = 0; i < set.cols(); ++i)
            out += set.contains(j, i) ? '*' : '.';
        out += '\n';
    }
    return out;
}

auto profile(const GridSet & set) -> std::optional<StochasticProfile>
{
    int a = set.column_count(0);
    for (int i = 1; i < set.cols(); ++i)
        if (set.column_count(i) != a)
            return std::nullopt;
    int b = set.row_count(0);
    for (int j = 1; j < set.rows(); ++j)
        if (set.row_count(j) != b)
            return std::nullopt;
    return StochasticProfile{a, b};
}

auto build(int q, int qp, int gamma) -> GridSet
{
    if (q < 1 || qp < 1)
        throw Error(Errc::invalid_dimensions, "grid dimensions must be positive");
    long long numerator = static_cast<long long>(q) * gamma;
    if (numerator % (q + qp) != 0)
        throw Error(Errc::divisibility_violated, "q+q' must divide q*gamma (q=" + std::to_string(q) + ", q'=" +
                std::to_string(qp) + ", gamma=" + std::to_string(gamma) + ")");
    long long a = numerator / (q + qp);
    if (a <= 0 || a > q)
        throw Error(Errc::degree_out_of_range, "column degree q*gamma/(q+q') must lie in 1..q");

    GridSet result{q, qp};
    for (int i = 0; i < qp; ++i) {
        long long shift = (static_cast<long long>(i) * a) % q;
        for (long long k = 0; k < a; ++k)
            result.insert(static_cast<int>((shift + k) % q), i);
    }
    return result;
}

auto exists(int q, int qp, int gamma) -> bool
{
    if (q < 1 || qp < 1)
        return false;
    long long numerator = static_cast<long long>(q) * gamma;
    if (numerator % (q + qp) != 0)
        return false;
    long long a = numerator / (q + qp);
    return 0 < a && a < q;
}

auto check_grid_crc(const GridSet & set) -> std::optional<GridCrc>
{
    int q = set.rows();
    int qp = set.cols();
    std::optional<int> gamma;
    std::optional<int> beta;
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < qp; ++i) {
            bool inside = set.contains(j, i);
            int across = 0;
            for (int jj = 0; jj < q; ++jj)
                if (jj != j && set.contains(jj, i) != inside)
                    ++across;
            for (int ii = 0; ii < qp; ++ii)
                if (ii != i && set.contains(j, ii) != inside)
                    ++across;
            auto & slot = inside ? beta : gamma;
            if (! slot)
                slot = across;
            else if (*slot != across)
                return std::nullopt;
        }
    if (! gamma || ! beta || *gamma == 0)
        return std::nullopt;
    int valency = (q - 1) + (qp - 1);
    return GridCrc{*gamma, *beta, valency - (*gamma + *beta)};
}

}
