#pragma once

#include <crcforge/constructions.hpp>
#include <crcforge/hamming.hpp>
#include <crcforge/parameters.hpp>
#include <crcforge/stochastic.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace crcforge {

/// A {-1,0,1}-valued function on A x A, stored row-major.
struct DerivativeFunction {
    int q;
    std::vector<std::int8_t> values;

    auto at(Symbol x1, Symbol x2) const -> int
    {
        return values[static_cast<std::size_t>(x1) * static_cast<std::size_t>(q) + x2];
    }
};

/// For a code in H(3,q): x' -> chi(x' with u inserted at `position`) -
/// chi(x' with v inserted at `position`), x' ranging over the other two
/// positions in order.
auto derivative(const Code & code, int position, Symbol u, Symbol v) -> DerivativeFunction;

struct DerivativeClass {
    enum class Tag { zero, string, cross, unclassified };

    Tag tag;
    std::vector<Symbol> X;
    std::vector<Symbol> Y;
    /// Axis (0 or 1) a string depends on; -1 otherwise.
    int axis = -1;
};

auto to_string(const DerivativeClass & c) -> std::string;

/// Zero, then (X,Y,j)-string for j = 0, 1, then (X,Y)-cross. A string is +1
/// exactly where x_j is in X and -1 where x_j is in Y; a cross is +1 exactly
/// on X x (A\Y) and -1 exactly on (A\X) x Y; |X| = |Y| in both.
auto classify(const DerivativeFunction & f) -> DerivativeClass;

/// Every maximal clique of the ambient space lying entirely inside the code.
auto full_cliques(const Code & code) -> std::vector<Clique>;

/// A partition of a code in H(3,q) into maximal cliques. When all three
/// codirections occur, `blocks` holds the minimal envelopes R, S, T and the
/// projections D1 (in S x T), D2 (in R x ~T), D3 (in ~R x ~S), and
/// `profiles` their stochastic profiles (a,b), (a,c), (b,c).
struct CliqueDecomposition {
    std::array<std::vector<Clique>, 3> cliques;
    bool strong;
    std::optional<ConstructionDBlocks> blocks;
    std::optional<std::array<stochastic::StochasticProfile, 3>> profiles;
};

struct CliqueCoverFailure {
    enum class Kind { not_clique_partition, lemma_violated };

    Kind kind;
    std::optional<Vertex> witness;
    /// Number of full cliques through the witness.
    int cover_count;
    std::string detail;
};

using CliqueCoverResult = std::variant<CliqueDecomposition, CliqueCoverFailure>;

/// Partitions the code into maximal cliques. When full cliques overlap, a
/// deterministic exact-cover search prefers a partition using all three
/// codirections. A strong partition is then checked for complementary
/// envelopes and stochastic projections with shared a, b, c.
auto clique_cover(const Code & code) -> CliqueCoverResult;

struct ExtractedConstructionD {
    int q;
    ConditionOneWitness witness;
    /// Symbol sets as found in the code, not relabelled.
    ConstructionDBlocks blocks;
};

/// Recovers the three-block data of a code with the strong clique property.
/// Throws precondition_violated if no strong partition exists and
/// condition_one_violated if the recovered profiles break Condition 1.
auto extract_construction_d(const Code & code) -> ExtractedConstructionD;

/// Relabels R, S, T to initial intervals, keeping the grids.
auto canonicalize(const ConstructionDBlocks & blocks) -> ConstructionDBlocks;

}
