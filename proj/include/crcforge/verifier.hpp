#pragma once

#include <crcforge/hamming.hpp>

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace crcforge {

/// Breadth-first layering C_0 = C, C_1, ..., C_rho of the vertex set.
struct DistancePartition {
    std::vector<std::vector<VertexIndex>> classes;
    /// layer[v] = distance from v to the code.
    std::vector<int> layer;
    int rho;
};

auto distance_partition(const Code & code) -> DistancePartition;

/// Intersection numbers of a completely regular code. For class i, alpha[i]
/// counts neighbours inside C_i, beta[i] neighbours in C_{i+1} (i < rho) and
/// gamma[i-1] neighbours in C_{i-1} (i >= 1).
struct CrcCertificate {
    int n;
    int q;
    int rho;
    VertexIndex code_size;
    std::vector<long long> alpha;
    std::vector<long long> beta;
    std::vector<long long> gamma;
    /// (k, k - (gamma + beta)); covering radius 1 only.
    std::optional<std::pair<long long, long long>> code_eigenvalues;
    /// i with lambda_i(n,q) = k - (gamma + beta); covering radius 1 only.
    std::optional<int> eigenvalue_index;

    auto valency() const noexcept -> long long { return static_cast<long long>(n) * (q - 1); }
    /// gamma_1 and beta_0, the pair that matters when rho == 1.
    auto gamma1() const -> long long { return gamma.at(0); }
    auto beta0() const -> long long { return beta.at(0); }
};

/// Where the constant-count condition first breaks, in vertex order.
struct CrcFailure {
    enum class Count { alpha, beta, gamma };

    Vertex witness_vertex;
    VertexIndex witness_index;
    int class_index;
    Count count;
    long long observed_count;
    long long expected_count;
};

using CrcResult = std::variant<CrcCertificate, CrcFailure>;

/// Decides complete regularity. Rejects empty and full codes.
auto check_crc(const Code & code) -> CrcResult;

/// Re-derives the failure by recounting the witness and the first vertex of
/// its class; true iff the two counts really differ.
auto failure_is_genuine(const Code & code, const CrcFailure & failure) -> bool;

/// |{x in C : x_i = a}| for every position i and symbol a.
struct HyperfaceProfile {
    int n;
    int q;
    std::vector<VertexIndex> counts;

    auto at(int direction, Symbol a) const -> VertexIndex
    {
        return counts[static_cast<std::size_t>(direction) * static_cast<std::size_t>(q) + a];
    }
    auto is_balanced() const -> bool;
};

auto hyperface_profile(const Code & code) -> HyperfaceProfile;

/// Codeword count of every maximal clique, in all_cliques order.
struct CliqueProfile {
    std::vector<Clique> cliques;
    std::vector<int> counts;
    bool constant;
    std::optional<int> common_count;
};

auto clique_profile(const Code & code) -> CliqueProfile;

/// Positions (0-based) j such that some codeword and some non-codeword
/// differ only in position j.
auto essential_positions(const Code & code) -> std::vector<int>;

/// Deletes every nonessential position.
auto reduce(const Code & code) -> Code;

/// Inserts a nonessential position before `at_position` (0..n).
auto extend(const Code & code, int at_position) -> Code;

}
