#pragma once

#include <crcforge/hamming.hpp>
#include <crcforge/verifier.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>

namespace crcforge {

/// Largest space the backtracking search accepts.
inline constexpr VertexIndex max_search_vertices = 64;

struct SearchConstraints {
    Space space;
    /// Target gamma of the emitted codes (not normalized).
    std::optional<int> gamma;
    /// Target eigenvalue index i, i.e. gamma + beta = q*i.
    std::optional<int> eigenvalue_index;
    /// Skip the sink; codes are still verified and counted.
    bool count_only = false;
    /// Only codes containing the all-zero word.
    bool fix_origin = false;
    /// Worker count; 0 means default_thread_count().
    unsigned threads = 0;
};

struct ParameterSet {
    long long gamma;
    long long beta;
    std::optional<int> eigenvalue_index;

    /// The same parameters with gamma <= beta.
    auto normalized() const -> ParameterSet
    {
        return gamma <= beta ? *this : ParameterSet{beta, gamma, eigenvalue_index};
    }

    friend auto operator==(const ParameterSet &, const ParameterSet &) -> bool = default;
    friend auto operator<=>(const ParameterSet &, const ParameterSet &) = default;
};

struct SearchSummary {
    std::set<ParameterSet> parameter_sets;
    std::uint64_t codes_found = 0;
    std::uint64_t nodes_visited = 0;
};

/// Receives each code found with its certificate. Called from worker
/// threads, one call at a time.
using CodeSink = std::function<void(const Code &, const CrcCertificate &)>;

/// CRC_FORGE_THREADS when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
auto default_thread_count() -> unsigned;

/// Enumerates every covering-radius-1 CRC of the space satisfying the
/// constraints, each exactly once. The search runs once per admissible
/// (gamma, beta) pair, assigning vertices in index order and pruning on
/// partial neighbour counts, the code size q^n*gamma/(gamma+beta) and, when
/// an eigenvalue index >= 2 is targeted, on hyperface counts |C|/q. Each
/// code is re-verified with check_crc before it reaches the sink.
auto enumerate_crcs(const SearchConstraints & constraints, const CodeSink & sink) -> SearchSummary;

}
