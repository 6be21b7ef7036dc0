#pragma once

#include <crcforge/hamming.hpp>
#include <crcforge/parameters.hpp>
#include <crcforge/stochastic.hpp>

#include <optional>
#include <string>
#include <vector>

namespace crcforge {

/// Codes in H(3,q) are built over canonical alphabet intervals; every
/// builder validates its parameters and throws Error on violation.

/// Grid CRC of H(2,q) with a nonessential position added in front.
/// gamma even, 2 <= gamma <= 2q-2.
auto build_a(int q, int gamma) -> Code;

/// Symbol-wise mod-2 lifting of a CRC of H(3,2) to even q.
/// variant 1 lifts {000,111}; variant 2 lifts {000,100,111,011}.
auto build_b(int q, int variant) -> Code;

/// (T x ~T x S) u (~T x T x ~S) u (D x A) with T = {0..t-1},
/// S = {0..q/2-1} and D the stochastic set build(t,t,2t-q). q even, q/2 < t < q.
auto build_c(int q, int t) -> Code;

/// The three-block code of a Condition 1 witness; every block is a stochastic
/// set, full when its degrees saturate.
auto build_d(int q, const ConditionOneWitness & w) -> Code;

/// B x A x A with B = {0..b_size-1}; eigenvalue index 1.
auto build_index1(int q, int b_size) -> Code;

/// Union of the diagonal classes x1+x2+x3 = c mod q for c < m; eigenvalue index 3.
auto build_index3(int q, int m) -> Code;

/// Alphabet subsets and blocks of the three-block code. D1 lies in S x T,
/// D2 in R x ~T, D3 in ~R x ~S; grid rows follow the first factor, in
/// ascending symbol order.
struct ConstructionDBlocks {
    int q;
    std::vector<Symbol> R;
    std::vector<Symbol> S;
    std::vector<Symbol> T;
    stochastic::GridSet D1;
    stochastic::GridSet D2;
    stochastic::GridSet D3;
};

auto construction_d_blocks(int q, const ConditionOneWitness & w) -> ConstructionDBlocks;

/// C1 u C2 u C3: cliques of codirection 1 over D1, codirection 2 over D2,
/// codirection 3 over D3. Works for arbitrary symbol sets R, S, T.
auto assemble_construction_d(const ConstructionDBlocks & blocks) -> Code;

enum class ConstructionKind { a, b, c, d, index1, index3 };

auto to_string(ConstructionKind kind) -> const char *;
auto parse_construction_kind(const std::string & name) -> std::optional<ConstructionKind>;

/// A builder together with its integer parameters:
///   a: {q, gamma}   b: {q, variant}   c: {q, t}
///   d: {q, r, s, t, a, b, c}   index1: {q, b_size}   index3: {q, m}
struct ConstructionSpec {
    ConstructionKind kind;
    std::vector<int> parameters;
};

auto build(const ConstructionSpec & spec) -> Code;

/// Certificate values the construction guarantees: gamma, beta and the
/// eigenvalue index. For variant 2 of build_b gamma is reported as q.
struct ExpectedParameters {
    int gamma;
    int beta;
    int eigenvalue_index;
};

auto expected_parameters(const ConstructionSpec & spec) -> ExpectedParameters;

/// The builder realising a feasible verdict of feasible_h3q(q, gamma, index).
auto designated_construction(int q, int gamma, const FeasibilityVerdict & verdict) -> ConstructionSpec;

}
