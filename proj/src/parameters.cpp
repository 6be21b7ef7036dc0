#include <crcforge/error.hpp>
#include <crcforge/parameters.hpp>

#include <algorithm>
#include <limits>

namespace crcforge {

auto eigenvalue(int n, int q, int i) -> long long
{
    if (n < 1 || q < 2)
        throw Error(Errc::invalid_dimensions, "H(n,q) needs n >= 1 and q >= 2");
    if (i < 0 || i > n)
        throw Error(Errc::invalid_parameters, "eigenvalue index must lie in 0..n");
    return static_cast<long long>(n) * (q - 1) - static_cast<long long>(q) * i;
}

auto eigenvalue_multiplicity(int n, int q, int i) -> std::uint64_t
{
    eigenvalue(n, q, i);
    std::uint64_t binom = 1;
    for (int k = 1; k <= i; ++k)
        binom = binom * static_cast<std::uint64_t>(n - i + k) / static_cast<std::uint64_t>(k);
    std::uint64_t result = binom;
    for (int k = 0; k < i; ++k) {
        if (result > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q - 1))
            throw Error(Errc::invalid_parameters, "multiplicity overflows 64 bits");
        result *= static_cast<std::uint64_t>(q - 1);
    }
    return result;
}

auto eigenvalue_index(int n, int q, long long lambda) -> std::optional<int>
{
    long long diff = static_cast<long long>(n) * (q - 1) - lambda;
    if (diff < 0 || diff % q != 0)
        return std::nullopt;
    long long i = diff / q;
    if (i > n)
        return std::nullopt;
    return static_cast<int>(i);
}

auto to_string(const ConditionOneWitness & w) -> std::string
{
    return "(r,s,t,a,b,c)=(" + std::to_string(w.r) + "," + std::to_string(w.s) + "," + std::to_string(w.t) + "," +
        std::to_string(w.a) + "," + std::to_string(w.b) + "," + std::to_string(w.c) + ")";
}

auto check_condition1(int q, const ConditionOneWitness & w) -> bool
{
    auto [r, s, t, a, b, c] = w;
    auto in_open = [q](int x) { return 0 < x && x < q; };
    if (! in_open(r) || ! in_open(s) || ! in_open(t))
        return false;
    if (c <= 0 || c > std::min(q - s, q - t))
        return false;
    if (b <= 0 || b > std::min(t, q - r))
        return false;
    if (a <= 0 || a > std::min(r, s))
        return false;
    return c * r == a * (q - t) && b * (q - s) == c * (q - r) && a * t == b * s;
}

auto solve_condition1(int q, std::optional<int> gamma) -> std::vector<ConditionOneWitness>
{
    std::vector<ConditionOneWitness> result;
    if (q < 2)
        return result;
    auto consider = [&](int r, int s, int t, int a) {
        if ((a * t) % s != 0 || (a * (q - t)) % r != 0)
            return;
        ConditionOneWitness w{r, s, t, a, a * t / s, a * (q - t) / r};
        if ((! gamma || w.gamma() == *gamma) && check_condition1(q, w))
            result.push_back(w);
    };
    for (int r = 1; r < q; ++r)
        for (int s = 1; s < q; ++s)
            for (int t = 1; t < q; ++t) {
                if (gamma) {
                    // gamma = a (1 + t/s + (q-t)/r) fixes a
                    long long num = static_cast<long long>(*gamma) * r * s;
                    long long den = static_cast<long long>(r) * s + static_cast<long long>(r) * t + static_cast<long long>(s) * (q - t);
                    if (num % den == 0 && num / den >= 1 && num / den <= std::min(r, s))
                        consider(r, s, t, static_cast<int>(num / den));
                    continue;
                }
                for (int a = 1; a <= std::min(r, s); ++a)
                    consider(r, s, t, a);
            }
    return result;
}

auto to_string(FeasibilityRule rule) -> const char *
{
    switch (rule) {
    case FeasibilityRule::index1_range: return "index1-range";
    case FeasibilityRule::index2_even: return "index2-even";
    case FeasibilityRule::index2_half_to_full: return "index2-half-to-full";
    case FeasibilityRule::index2_condition1: return "index2-condition1";
    case FeasibilityRule::index3_divisible: return "index3-divisible";
    case FeasibilityRule::infeasible: return "infeasible";
    }
    return "unknown";
}

auto max_normalized_gamma(int q, int index) -> int
{
    return q * index / 2;
}

namespace {
    void require_normalized(int q, int gamma, int index)
    {
        if (gamma < 1)
            throw Error(Errc::invalid_parameters, "gamma must be positive");
        int bound = max_normalized_gamma(q, index);
        if (gamma > bound)
            throw Error(Errc::unnormalized_gamma, "gamma=" + std::to_string(gamma) + " exceeds beta=" +
                    std::to_string(q * index - gamma) + "; query the complement, gamma=" +
                    std::to_string(q * index - gamma));
    }

    auto index2_verdict(bool three_or_more, int q, int gamma) -> FeasibilityVerdict
    {
        if (gamma % 2 == 0 && 2 <= gamma && gamma <= q)
            return {true, FeasibilityRule::index2_even, "gamma is even and 2 <= gamma <= q", std::nullopt};
        if (! three_or_more)
            return {false, FeasibilityRule::infeasible,
                "in H(2,q) and after reduction to two essential positions only even gamma occurs", std::nullopt};
        if (q % 2 != 0)
            return {false, FeasibilityRule::infeasible,
                "q is odd, so gamma + beta = 2q and the integral code size force gamma to be even", std::nullopt};
        auto witnesses = solve_condition1(q, gamma);
        if (2 * gamma >= q && gamma <= q) {
            std::optional<ConditionOneWitness> witness;
            if (! witnesses.empty())
                witness = witnesses.front();
            return {true, FeasibilityRule::index2_half_to_full, "q is even and q/2 <= gamma <= q", witness};
        }
        if (! witnesses.empty())
            return {true, FeasibilityRule::index2_condition1,
                "q is even, gamma is odd and below q/2, and Condition 1 holds", witnesses.front()};
        return {false, FeasibilityRule::infeasible,
            "q is even, gamma is odd and below q/2, and Condition 1 has no solution", std::nullopt};
    }
}

auto feasible_h3q(int q, int gamma, int index) -> FeasibilityVerdict
{
    if (q < 2)
        throw Error(Errc::invalid_dimensions, "q must be at least 2");
    if (index < 1 || index > 3)
        throw Error(Errc::invalid_parameters, "eigenvalue index must be 1, 2 or 3 in H(3,q)");
    require_normalized(q, gamma, index);
    switch (index) {
    case 1:
        return {true, FeasibilityRule::index1_range, "eigenvalue index 1 admits every gamma with 1 <= gamma <= q/2",
            std::nullopt};
    case 2:
        return index2_verdict(true, q, gamma);
    default:
        if (gamma % 3 == 0)
            return {true, FeasibilityRule::index3_divisible,
                "eigenvalue index 3 admits gamma divisible by 3; normalization gamma <= beta = 3q - gamma gives "
                "3 <= gamma <= 3q/2",
                std::nullopt};
        return {false, FeasibilityRule::infeasible,
            "eigenvalue index 3 requires gamma divisible by 3 (every clique holds gamma/3 codewords)", std::nullopt};
    }
}

auto feasible_hnq(int n, int q, int gamma) -> FeasibilityVerdict
{
    if (n < 2 || q < 2)
        throw Error(Errc::invalid_dimensions, "feasible_hnq needs n >= 2 and q >= 2");
    require_normalized(q, gamma, 2);
    return index2_verdict(n >= 3, q, gamma);
}

}
