#include <crcforge/constructions.hpp>
#include <crcforge/verifier.hpp>

#include <algorithm>
#include <numeric>

namespace crcforge {

namespace {
    auto interval(int from, int to) -> std::vector<Symbol>
    {
        std::vector<Symbol> result;
        for (int a = from; a < to; ++a)
            result.push_back(static_cast<Symbol>(a));
        return result;
    }

    void require(bool ok, Errc code, const std::string & message)
    {
        if (! ok)
            throw Error(code, message);
    }

    auto grid_code(const stochastic::GridSet & grid) -> Code
    {
        Space plane{2, grid.rows()};
        Bitset bits(static_cast<std::size_t>(plane.vertex_count()));
        for (int j = 0; j < grid.rows(); ++j)
            for (int i = 0; i < grid.cols(); ++i)
                if (grid.contains(j, i))
                    bits.set(plane.index(Vertex{static_cast<Symbol>(j), static_cast<Symbol>(i)}));
        return Code{plane, std::move(bits)};
    }
}

auto build_a(int q, int gamma) -> Code
{
    require(q >= 2, Errc::invalid_dimensions, "q must be at least 2");
    require(gamma % 2 == 0, Errc::invalid_parameters, "construction A needs even gamma");
    require(2 <= gamma && gamma <= 2 * q - 2, Errc::invalid_parameters, "construction A needs 2 <= gamma <= 2q-2");
    return extend(grid_code(stochastic::build(q, q, gamma)), 0);
}

auto build_b(int q, int variant) -> Code
{
    require(q >= 2 && q % 2 == 0, Errc::invalid_parameters, "construction B needs even q");
    require(variant == 1 || variant == 2, Errc::invalid_parameters, "construction B variant must be 1 or 2");
    // Seeds in H(3,2): variant 1 is {000,111}, variant 2 is {000,100,111,011} = {x : x2 == x3}.
    return Code::from_predicate(Space{3, q}, [variant](const Vertex & x) {
        Symbol x1 = x[0] % 2, x2 = x[1] % 2, x3 = x[2] % 2;
        return variant == 1 ? (x1 == x2 && x2 == x3) : x2 == x3;
    });
}

auto build_c(int q, int t) -> Code
{
    require(q >= 2 && q % 2 == 0, Errc::invalid_parameters, "construction C needs even q");
    require(2 * t > q && t < q, Errc::invalid_parameters, "construction C needs q/2 < t < q");
    auto d = stochastic::build(t, t, 2 * t - q);
    auto in_t = [t](Symbol x) { return x < static_cast<Symbol>(t); };
    auto in_s = [q](Symbol x) { return x < static_cast<Symbol>(q / 2); };
    return Code::from_predicate(Space{3, q}, [&](const Vertex & x) {
        if (in_t(x[0]) && ! in_t(x[1]) && in_s(x[2]))
            return true;
        if (! in_t(x[0]) && in_t(x[1]) && ! in_s(x[2]))
            return true;
        return in_t(x[0]) && in_t(x[1]) && d.contains(static_cast<int>(x[0]), static_cast<int>(x[1]));
    });
}

auto construction_d_blocks(int q, const ConditionOneWitness & w) -> ConstructionDBlocks
{
    require(check_condition1(q, w), Errc::condition_one_violated,
        "Condition 1 fails for q=" + std::to_string(q) + " and " + to_string(w));
    auto [r, s, t, a, b, c] = w;
    return ConstructionDBlocks{q, interval(0, r), interval(0, s), interval(0, t),
        stochastic::build(s, t, a + b), stochastic::build(r, q - t, a + c), stochastic::build(q - r, q - s, b + c)};
}

auto assemble_construction_d(const ConstructionDBlocks & blocks) -> Code
{
    int q = blocks.q;
    Space space{3, q};
    // rank of each symbol inside `set` (first) or inside its complement (second); -1 elsewhere
    auto locate = [q](const std::vector<Symbol> & set) {
        std::vector<bool> member(static_cast<std::size_t>(q), false);
        for (auto x : set) {
            if (x >= static_cast<Symbol>(q) || member[x])
                throw Error(Errc::invalid_parameters, "symbol set must hold distinct symbols below q");
            member[x] = true;
        }
        std::vector<int> inside(static_cast<std::size_t>(q), -1), outside(static_cast<std::size_t>(q), -1);
        int in = 0, out = 0;
        for (std::size_t x = 0; x < member.size(); ++x) {
            if (member[x])
                inside[x] = in++;
            else
                outside[x] = out++;
        }
        return std::pair{inside, outside};
    };
    auto [r_in, r_out] = locate(blocks.R);
    auto [s_in, s_out] = locate(blocks.S);
    auto [t_in, t_out] = locate(blocks.T);

    auto check_shape = [](const stochastic::GridSet & g, std::size_t rows, std::size_t cols) {
        if (static_cast<std::size_t>(g.rows()) != rows || static_cast<std::size_t>(g.cols()) != cols)
            throw Error(Errc::invalid_parameters, "block grid does not match its symbol sets");
    };
    auto uq = static_cast<std::size_t>(q);
    check_shape(blocks.D1, blocks.S.size(), blocks.T.size());
    check_shape(blocks.D2, blocks.R.size(), uq - blocks.T.size());
    check_shape(blocks.D3, uq - blocks.R.size(), uq - blocks.S.size());

    return Code::from_predicate(space, [&](const Vertex & x) {
        auto x1 = x[0], x2 = x[1], x3 = x[2];
        if (s_in[x2] >= 0 && t_in[x3] >= 0 && blocks.D1.contains(s_in[x2], t_in[x3]))
            return true;
        if (r_in[x1] >= 0 && t_out[x3] >= 0 && blocks.D2.contains(r_in[x1], t_out[x3]))
            return true;
        return r_out[x1] >= 0 && s_out[x2] >= 0 && blocks.D3.contains(r_out[x1], s_out[x2]);
    });
}

auto build_d(int q, const ConditionOneWitness & w) -> Code
{
    return assemble_construction_d(construction_d_blocks(q, w));
}

auto build_index1(int q, int b_size) -> Code
{
    require(q >= 2, Errc::invalid_dimensions, "q must be at least 2");
    require(1 <= b_size && b_size <= q - 1, Errc::invalid_parameters, "index-1 construction needs 1 <= |B| <= q-1");
    return Code::from_predicate(Space{3, q}, [&](const Vertex & x) { return x[0] < static_cast<Symbol>(b_size); });
}

auto build_index3(int q, int m) -> Code
{
    require(q >= 2, Errc::invalid_dimensions, "q must be at least 2");
    require(1 <= m && m <= q - 1, Errc::invalid_parameters, "index-3 construction needs 1 <= m <= q-1");
    return Code::from_predicate(Space{3, q},
        [&](const Vertex & x) { return (x[0] + x[1] + x[2]) % static_cast<Symbol>(q) < static_cast<Symbol>(m); });
}

auto to_string(ConstructionKind kind) -> const char *
{
    switch (kind) {
    case ConstructionKind::a: return "a";
    case ConstructionKind::b: return "b";
    case ConstructionKind::c: return "c";
    case ConstructionKind::d: return "d";
    case ConstructionKind::index1: return "index1";
    case ConstructionKind::index3: return "index3";
    }
    return "?";
}

auto parse_construction_kind(const std::string & name) -> std::optional<ConstructionKind>
{
    for (auto kind : {ConstructionKind::a, ConstructionKind::b, ConstructionKind::c, ConstructionKind::d,
             ConstructionKind::index1, ConstructionKind::index3})
        if (name == to_string(kind))
            return kind;
    return std::nullopt;
}

namespace {
    void require_arity(const ConstructionSpec & spec, std::size_t count)
    {
        if (spec.parameters.size() != count)
            throw Error(Errc::invalid_parameters, std::string("construction ") + to_string(spec.kind) + " takes " +
                    std::to_string(count) + " parameters");
    }

    auto witness_of(const ConstructionSpec & spec) -> ConditionOneWitness
    {
        const auto & p = spec.parameters;
        return ConditionOneWitness{p[1], p[2], p[3], p[4], p[5], p[6]};
    }
}

auto build(const ConstructionSpec & spec) -> Code
{
    const auto & p = spec.parameters;
    switch (spec.kind) {
    case ConstructionKind::a: require_arity(spec, 2); return build_a(p[0], p[1]);
    case ConstructionKind::b: require_arity(spec, 2); return build_b(p[0], p[1]);
    case ConstructionKind::c: require_arity(spec, 2); return build_c(p[0], p[1]);
    case ConstructionKind::d: require_arity(spec, 7); return build_d(p[0], witness_of(spec));
    case ConstructionKind::index1: require_arity(spec, 2); return build_index1(p[0], p[1]);
    case ConstructionKind::index3: require_arity(spec, 2); return build_index3(p[0], p[1]);
    }
    throw Error(Errc::invalid_parameters, "unknown construction");
}

auto expected_parameters(const ConstructionSpec & spec) -> ExpectedParameters
{
    const auto & p = spec.parameters;
    switch (spec.kind) {
    case ConstructionKind::a: require_arity(spec, 2); return {p[1], 2 * p[0] - p[1], 2};
    case ConstructionKind::b:
        require_arity(spec, 2);
        return p[1] == 1 ? ExpectedParameters{p[0] / 2, 3 * p[0] / 2, 2} : ExpectedParameters{p[0], p[0], 2};
    case ConstructionKind::c: require_arity(spec, 2); return {p[1], 2 * p[0] - p[1], 2};
    case ConstructionKind::d: {
        require_arity(spec, 7);
        int gamma = witness_of(spec).gamma();
        return {gamma, 2 * p[0] - gamma, 2};
    }
    case ConstructionKind::index1: require_arity(spec, 2); return {p[1], p[0] - p[1], 1};
    case ConstructionKind::index3: require_arity(spec, 2); return {3 * p[1], 3 * (p[0] - p[1]), 3};
    }
    throw Error(Errc::invalid_parameters, "unknown construction");
}

auto designated_construction(int q, int gamma, const FeasibilityVerdict & verdict) -> ConstructionSpec
{
    if (! verdict.feasible)
        throw Error(Errc::precondition_violated, "no construction for an infeasible verdict");
    switch (verdict.rule) {
    case FeasibilityRule::index1_range: return {ConstructionKind::index1, {q, gamma}};
    case FeasibilityRule::index2_even: return {ConstructionKind::a, {q, gamma}};
    case FeasibilityRule::index2_half_to_full:
        if (2 * gamma == q)
            return {ConstructionKind::b, {q, 1}};
        if (gamma == q)
            return {ConstructionKind::b, {q, 2}};
        return {ConstructionKind::c, {q, gamma}};
    case FeasibilityRule::index2_condition1: {
        const auto & w = verdict.witness.value();
        return {ConstructionKind::d, {q, w.r, w.s, w.t, w.a, w.b, w.c}};
    }
    case FeasibilityRule::index3_divisible: return {ConstructionKind::index3, {q, gamma / 3}};
    case FeasibilityRule::infeasible: break;
    }
    throw Error(Errc::precondition_violated, "verdict carries no constructive rule");
}

}
