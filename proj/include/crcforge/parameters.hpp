#pragma once

#include <crcforge/error.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crcforge {

/// lambda_i(n,q) = n(q-1) - q*i, the i-th eigenvalue of H(n,q).
auto eigenvalue(int n, int q, int i) -> long long;

/// Multiplicity binom(n,i) * (q-1)^i of lambda_i(n,q).
auto eigenvalue_multiplicity(int n, int q, int i) -> std::uint64_t;

/// The i in 0..n with lambda_i(n,q) == lambda, if any.
auto eigenvalue_index(int n, int q, long long lambda) -> std::optional<int>;

/// Integers (r,s,t,a,b,c) for the three-block construction at alphabet size q.
struct ConditionOneWitness {
    int r;
    int s;
    int t;
    int a;
    int b;
    int c;

    auto gamma() const noexcept -> int { return a + b + c; }

    friend auto operator==(const ConditionOneWitness &, const ConditionOneWitness &) -> bool = default;
    friend auto operator<=>(const ConditionOneWitness &, const ConditionOneWitness &) = default;
};

auto to_string(const ConditionOneWitness & w) -> std::string;

/// Exact check of  cr = a(q-t),  b(q-s) = c(q-r),  at = bs  and the bounds
/// 0<r,s,t<q,  0<c<=min(q-s,q-t),  0<b<=min(t,q-r),  0<a<=min(r,s).
auto check_condition1(int q, const ConditionOneWitness & w) -> bool;

/// Every witness with a+b+c == gamma (all gammas when empty), in
/// lexicographic (r,s,t,a,b,c) order.
auto solve_condition1(int q, std::optional<int> gamma = std::nullopt) -> std::vector<ConditionOneWitness>;

enum class FeasibilityRule {
    index1_range,           // 1 <= gamma <= q/2
    index2_even,            // gamma even, 2 <= gamma <= q
    index2_half_to_full,    // q even, q/2 <= gamma <= q (n >= 3)
    index2_condition1,      // q even, gamma odd and small, Condition 1 solvable (n >= 3)
    index3_divisible,       // 3 | gamma, 3 <= gamma <= 3q/2
    infeasible,
};

auto to_string(FeasibilityRule rule) -> const char *;

struct FeasibilityVerdict {
    bool feasible;
    FeasibilityRule rule;
    /// Human-readable statement of the clause that decided the verdict.
    std::string explanation;
    /// Present whenever Condition 1 is solvable for (q, gamma), not only when that clause decides.
    std::optional<ConditionOneWitness> witness;
};

/// Largest normalized gamma (gamma <= beta) for eigenvalue index i in H(n,q):
/// floor(q*i/2), since gamma + beta = q*i.
auto max_normalized_gamma(int q, int index) -> int;

/// Existence of a covering-radius-1 CRC in H(3,q) with the given normalized
/// gamma and eigenvalue index 1, 2 or 3.
auto feasible_h3q(int q, int gamma, int index) -> FeasibilityVerdict;

/// Existence of a covering-radius-1 CRC in H(n,q), n >= 2, with eigenvalue
/// lambda_2(n,q) and normalized gamma.
auto feasible_hnq(int n, int q, int gamma) -> FeasibilityVerdict;

}
