#include <crcforge/parameters.hpp>
#include <crcforge/verifier.hpp>

#include <algorithm>

namespace crcforge {

auto distance_partition(const Code & code) -> DistancePartition
{
    if (code.empty())
        throw Error(Errc::empty_code, "distance partition of the empty code is undefined");

    const auto & space = code.space();
    auto total = static_cast<std::size_t>(space.vertex_count());
    DistancePartition result{{}, std::vector<int>(total, -1), 0};

    std::vector<VertexIndex> frontier = code.codeword_indices();
    for (auto v : frontier)
        result.layer[v] = 0;

    int depth = 0;
    while (! frontier.empty()) {
        result.classes.push_back(frontier);
        std::vector<VertexIndex> next;
        for (auto v : frontier)
            space.for_each_neighbor(v, [&](VertexIndex w) {
                if (result.layer[w] < 0) {
                    result.layer[w] = depth + 1;
                    next.push_back(w);
                }
            });
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
        ++depth;
    }
    result.rho = static_cast<int>(result.classes.size()) - 1;
    return result;
}

namespace {
    struct LayerCounts {
        long long down = 0;
        long long same = 0;
        long long up = 0;
    };

    auto count_layers(const Space & space, const std::vector<int> & layer, VertexIndex v) -> LayerCounts
    {
        LayerCounts c;
        int own = layer[v];
        space.for_each_neighbor(v, [&](VertexIndex w) {
            int l = layer[w];
            if (l < own)
                ++c.down;
            else if (l == own)
                ++c.same;
            else
                ++c.up;
        });
        return c;
    }
}

auto check_crc(const Code & code) -> CrcResult
{
    if (code.empty())
        throw Error(Errc::empty_code, "complete regularity is undefined for the empty code");
    if (code.is_full())
        throw Error(Errc::full_code, "complete regularity is undefined for the full vertex set");

    const auto & space = code.space();
    auto partition = distance_partition(code);
    int rho = partition.rho;

    std::vector<std::optional<LayerCounts>> expected(static_cast<std::size_t>(rho) + 1);
    for (VertexIndex v = 0; v < space.vertex_count(); ++v) {
        int cls = partition.layer[v];
        auto observed = count_layers(space, partition.layer, v);
        auto & first = expected[static_cast<std::size_t>(cls)];
        if (! first) {
            first = observed;
            continue;
        }
        if (observed.down != first->down)
            return CrcFailure{space.vertex(v), v, cls, CrcFailure::Count::gamma, observed.down, first->down};
        if (observed.up != first->up)
            return CrcFailure{space.vertex(v), v, cls, CrcFailure::Count::beta, observed.up, first->up};
    }

    CrcCertificate cert{space.n(), space.q(), rho, code.size(), {}, {}, {}, std::nullopt, std::nullopt};
    for (int i = 0; i <= rho; ++i) {
        const auto & c = *expected[static_cast<std::size_t>(i)];
        cert.alpha.push_back(c.same);
        if (i < rho)
            cert.beta.push_back(c.up);
        if (i > 0)
            cert.gamma.push_back(c.down);
    }
    if (rho == 1) {
        long long k = cert.valency();
        long long lambda = k - (cert.gamma1() + cert.beta0());
        cert.code_eigenvalues = std::make_pair(k, lambda);
        cert.eigenvalue_index = eigenvalue_index(space.n(), space.q(), lambda);
    }
    return cert;
}

auto failure_is_genuine(const Code & code, const CrcFailure & failure) -> bool
{
    const auto & space = code.space();
    auto partition = distance_partition(code);
    if (partition.layer[failure.witness_index] != failure.class_index)
        return false;
    auto witness = count_layers(space, partition.layer, failure.witness_index);
    auto reference_vertex = partition.classes[static_cast<std::size_t>(failure.class_index)].front();
    auto reference = count_layers(space, partition.layer, reference_vertex);
    return witness.down != reference.down || witness.up != reference.up;
}

auto HyperfaceProfile::is_balanced() const -> bool
{
    return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>{}) == counts.end();
}

auto hyperface_profile(const Code & code) -> HyperfaceProfile
{
    const auto & space = code.space();
    HyperfaceProfile result{space.n(), space.q(),
        std::vector<VertexIndex>(static_cast<std::size_t>(space.n()) * static_cast<std::size_t>(space.q()), 0)};
    code.members().for_each_set([&](std::size_t v) {
        for (int i = 0; i < space.n(); ++i)
            ++result.counts[static_cast<std::size_t>(i) * static_cast<std::size_t>(space.q()) + space.symbol(v, i)];
    });
    return result;
}

auto clique_profile(const Code & code) -> CliqueProfile
{
    const auto & space = code.space();
    CliqueProfile result{all_cliques(space), {}, true, std::nullopt};
    result.counts.reserve(result.cliques.size());
    for (const auto & c : result.cliques) {
        int count = 0;
        for (auto v : clique_indices(space, c))
            count += code.contains(v) ? 1 : 0;
        result.counts.push_back(count);
    }
    result.constant = std::adjacent_find(result.counts.begin(), result.counts.end(), std::not_equal_to<>{}) ==
        result.counts.end();
    if (result.constant && ! result.counts.empty())
        result.common_count = result.counts.front();
    return result;
}

auto essential_positions(const Code & code) -> std::vector<int>
{
    const auto & space = code.space();
    std::vector<int> result;
    for (int j = 0; j < space.n(); ++j) {
        bool essential = false;
        auto step = space.stride(j);
        for (VertexIndex v = 0; v < space.vertex_count() && ! essential; ++v) {
            if (space.symbol(v, j) != 0)
                continue;
            bool first = code.contains(v);
            for (int a = 1; a < space.q(); ++a)
                if (code.contains(v + step * static_cast<VertexIndex>(a)) != first) {
                    essential = true;
                    break;
                }
        }
        if (essential)
            result.push_back(j);
    }
    return result;
}

auto reduce(const Code & code) -> Code
{
    auto kept = essential_positions(code);
    if (kept.empty())
        throw Error(Errc::no_essential_positions, "code has no essential position (empty or full)");
    const auto & space = code.space();
    Space reduced{static_cast<int>(kept.size()), space.q()};
    Bitset bits(static_cast<std::size_t>(reduced.vertex_count()));
    for (VertexIndex w = 0; w < reduced.vertex_count(); ++w) {
        VertexIndex v = 0;
        for (std::size_t k = 0; k < kept.size(); ++k)
            v += space.stride(kept[k]) * reduced.symbol(w, static_cast<int>(k));
        if (code.contains(v))
            bits.set(w);
    }
    return Code{reduced, std::move(bits)};
}

auto extend(const Code & code, int at_position) -> Code
{
    const auto & space = code.space();
    if (at_position < 0 || at_position > space.n())
        throw Error(Errc::invalid_position, "extension position must lie in 0..n");
    Space extended{space.n() + 1, space.q()};
    Bitset bits(static_cast<std::size_t>(extended.vertex_count()));
    for (VertexIndex w = 0; w < extended.vertex_count(); ++w) {
        VertexIndex v = 0;
        for (int p = 0, k = 0; p < extended.n(); ++p) {
            if (p == at_position)
                continue;
            v += space.stride(k++) * extended.symbol(w, p);
        }
        if (code.contains(v))
            bits.set(w);
    }
    return Code{extended, std::move(bits)};
}

}
