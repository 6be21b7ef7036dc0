#include <crcforge/structure.hpp>

#include <algorithm>
#include <set>

namespace crcforge {

namespace {
    void require_h3(const Code & code, const char * operation)
    {
        if (code.space().n() != 3)
            throw Error(Errc::invalid_dimensions, std::string(operation) + " is defined for codes in H(3,q)");
    }

    auto symbol_list(const std::vector<bool> & flags) -> std::vector<Symbol>
    {
        std::vector<Symbol> result;
        for (std::size_t a = 0; a < flags.size(); ++a)
            if (flags[a])
                result.push_back(static_cast<Symbol>(a));
        return result;
    }
}

auto derivative(const Code & code, int position, Symbol u, Symbol v) -> DerivativeFunction
{
    require_h3(code, "derivative");
    const auto & space = code.space();
    auto q = static_cast<Symbol>(space.q());
    if (position < 0 || position > 2)
        throw Error(Errc::invalid_position, "derivative position must be 0, 1 or 2");
    if (u >= q || v >= q)
        throw Error(Errc::vertex_out_of_space, "derivative symbols must lie below q");

    DerivativeFunction f{space.q(), std::vector<std::int8_t>(static_cast<std::size_t>(q) * q, 0)};
    int first = position == 0 ? 1 : 0;
    int second = position == 2 ? 1 : 2;
    for (Symbol x1 = 0; x1 < q; ++x1)
        for (Symbol x2 = 0; x2 < q; ++x2) {
            VertexIndex rest = space.stride(first) * x1 + space.stride(second) * x2;
            int with_u = code.contains(rest + space.stride(position) * u) ? 1 : 0;
            int with_v = code.contains(rest + space.stride(position) * v) ? 1 : 0;
            f.values[static_cast<std::size_t>(x1) * q + x2] = static_cast<std::int8_t>(with_u - with_v);
        }
    return f;
}

auto to_string(const DerivativeClass & c) -> std::string
{
    auto set = [](const std::vector<Symbol> & xs) {
        std::string out = "{";
        for (std::size_t i = 0; i < xs.size(); ++i)
            out += (i ? "," : "") + std::to_string(xs[i]);
        return out + "}";
    };
    switch (c.tag) {
    case DerivativeClass::Tag::zero: return "zero";
    case DerivativeClass::Tag::string:
        return "string(X=" + set(c.X) + ",Y=" + set(c.Y) + ",axis=" + std::to_string(c.axis + 1) + ")";
    case DerivativeClass::Tag::cross: return "cross(X=" + set(c.X) + ",Y=" + set(c.Y) + ")";
    case DerivativeClass::Tag::unclassified: return "unclassified";
    }
    return "?";
}

namespace {
    auto as_string(const DerivativeFunction & f, int axis) -> std::optional<DerivativeClass>
    {
        auto q = static_cast<Symbol>(f.q);
        std::vector<bool> plus(q, false), minus(q, false);
        for (Symbol a = 0; a < q; ++a) {
            auto value_at = [&](Symbol b) { return axis == 0 ? f.at(a, b) : f.at(b, a); };
            int slice = value_at(0);
            for (Symbol b = 1; b < q; ++b)
                if (value_at(b) != slice)
                    return std::nullopt;
            plus[a] = slice == 1;
            minus[a] = slice == -1;
        }
        auto X = symbol_list(plus), Y = symbol_list(minus);
        if (X.empty() || Y.empty() || X.size() != Y.size())
            return std::nullopt;
        return DerivativeClass{DerivativeClass::Tag::string, X, Y, axis};
    }

    auto as_cross(const DerivativeFunction & f) -> std::optional<DerivativeClass>
    {
        auto q = static_cast<Symbol>(f.q);
        std::vector<bool> in_x(q, false), in_y(q, false);
        for (Symbol x1 = 0; x1 < q; ++x1)
            for (Symbol x2 = 0; x2 < q; ++x2) {
                if (f.at(x1, x2) == 1)
                    in_x[x1] = true;
                if (f.at(x1, x2) == -1)
                    in_y[x2] = true;
            }
        auto X = symbol_list(in_x), Y = symbol_list(in_y);
        if (X.empty() || Y.empty() || X.size() == q || Y.size() == q || X.size() != Y.size())
            return std::nullopt;
        for (Symbol x1 = 0; x1 < q; ++x1)
            for (Symbol x2 = 0; x2 < q; ++x2) {
                int expected = 0;
                if (in_x[x1] && ! in_y[x2])
                    expected = 1;
                else if (! in_x[x1] && in_y[x2])
                    expected = -1;
                if (f.at(x1, x2) != expected)
                    return std::nullopt;
            }
        return DerivativeClass{DerivativeClass::Tag::cross, X, Y, -1};
    }
}

auto classify(const DerivativeFunction & f) -> DerivativeClass
{
    if (std::all_of(f.values.begin(), f.values.end(), [](std::int8_t x) { return x == 0; }))
        return {DerivativeClass::Tag::zero, {}, {}, -1};
    for (int axis : {0, 1})
        if (auto s = as_string(f, axis))
            return *s;
    if (auto c = as_cross(f))
        return *c;
    return {DerivativeClass::Tag::unclassified, {}, {}, -1};
}

auto full_cliques(const Code & code) -> std::vector<Clique>
{
    const auto & space = code.space();
    std::vector<Clique> result;
    for (int dir = 0; dir < space.n(); ++dir)
        code.members().for_each_set([&](std::size_t v) {
            if (space.symbol(v, dir) != 0)
                return;
            auto step = space.stride(dir);
            for (int a = 1; a < space.q(); ++a)
                if (! code.contains(v + step * static_cast<VertexIndex>(a)))
                    return;
            result.push_back(clique_through(space, v, dir));
        });
    std::sort(result.begin(), result.end());
    return result;
}

namespace {
    /// Exact cover of the codewords by full cliques, at most three per codeword.
    class CliquePartitioner {
    public:
        static constexpr long node_limit = 2'000'000;

        explicit CliquePartitioner(const Code & code) :
            _space(code.space()),
            _codewords(code.codeword_indices())
        {
            _position.assign(static_cast<std::size_t>(_space.vertex_count()), 0);
            for (std::size_t k = 0; k < _codewords.size(); ++k)
                _position[_codewords[k]] = k;
            _options.resize(_codewords.size());
            for (std::size_t k = 0; k < _codewords.size(); ++k)
                for (int dir = 0; dir < _space.n(); ++dir) {
                    auto c = clique_through(_space, _codewords[k], dir);
                    auto members = clique_indices(_space, c);
                    if (std::all_of(members.begin(), members.end(), [&](VertexIndex v) { return code.contains(v); }))
                        _options[k].push_back(dir);
                }
            _covered.assign(_codewords.size(), false);
        }

        auto options(std::size_t k) const -> const std::vector<int> & { return _options[k]; }
        auto codeword(std::size_t k) const -> VertexIndex { return _codewords[k]; }
        auto size() const -> std::size_t { return _codewords.size(); }

        /// First partition found, preferring one with all codirections.
        auto run() -> std::optional<std::vector<std::pair<std::size_t, int>>>
        {
            bool unique = std::all_of(_options.begin(), _options.end(), [](auto & o) { return o.size() == 1; });
            if (unique) {
                // full cliques are pairwise disjoint; keep each once, via its member with symbol 0
                std::vector<std::pair<std::size_t, int>> chosen;
                for (std::size_t k = 0; k < _codewords.size(); ++k)
                    if (_space.symbol(_codewords[k], _options[k].front()) == 0)
                        chosen.emplace_back(k, _options[k].front());
                return chosen;
            }
            search();
            return _best;
        }

    private:
        auto available(std::size_t k, int dir) const -> bool
        {
            auto c = clique_through(_space, _codewords[k], dir);
            for (auto v : clique_indices(_space, c))
                if (_covered[_position[v]])
                    return false;
            return true;
        }

        void mark(std::size_t k, int dir, bool value)
        {
            for (auto v : clique_indices(_space, clique_through(_space, _codewords[k], dir)))
                _covered[_position[v]] = value;
        }

        auto uses_every_codirection() const -> bool
        {
            std::vector<bool> seen(static_cast<std::size_t>(_space.n()), false);
            for (auto & [k, dir] : _chosen)
                seen[static_cast<std::size_t>(dir)] = true;
            return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
        }

        /// Returns true to stop the whole search.
        auto search() -> bool
        {
            if (++_nodes > node_limit)
                return true;
            // most constrained uncovered codeword, first in vertex order on ties
            std::optional<std::size_t> pick;
            std::size_t pick_count = 4;
            for (std::size_t k = 0; k < _codewords.size(); ++k) {
                if (_covered[k])
                    continue;
                std::size_t count = 0;
                for (int dir : _options[k])
                    count += available(k, dir) ? 1 : 0;
                if (count < pick_count) {
                    pick = k;
                    pick_count = count;
                    if (count <= 1)
                        break;
                }
            }
            if (! pick) {
                if (! _best)
                    _best = _chosen;
                if (uses_every_codirection()) {
                    _best = _chosen;
                    return true;
                }
                return false;
            }
            for (int dir : _options[*pick]) {
                if (! available(*pick, dir))
                    continue;
                mark(*pick, dir, true);
                _chosen.emplace_back(*pick, dir);
                bool stop = search();
                _chosen.pop_back();
                mark(*pick, dir, false);
                if (stop)
                    return true;
            }
            return false;
        }

        const Space & _space;
        std::vector<VertexIndex> _codewords;
        std::vector<std::size_t> _position;
        std::vector<std::vector<int>> _options;
        std::vector<bool> _covered;
        std::vector<std::pair<std::size_t, int>> _chosen;
        std::optional<std::vector<std::pair<std::size_t, int>>> _best;
        long _nodes = 0;
    };

    auto complement_of(const std::vector<Symbol> & set, int q) -> std::vector<Symbol>
    {
        std::vector<Symbol> result;
        for (Symbol a = 0; a < static_cast<Symbol>(q); ++a)
            if (! std::binary_search(set.begin(), set.end(), a))
                result.push_back(a);
        return result;
    }

    auto rank_in(const std::vector<Symbol> & set, Symbol a) -> int
    {
        return static_cast<int>(std::lower_bound(set.begin(), set.end(), a) - set.begin());
    }

    auto set_string(const std::vector<Symbol> & xs) -> std::string
    {
        std::string out = "{";
        for (std::size_t i = 0; i < xs.size(); ++i)
            out += (i ? "," : "") + std::to_string(xs[i]);
        return out + "}";
    }

    auto lemma_failure(const std::string & detail) -> CliqueCoverFailure
    {
        return CliqueCoverFailure{CliqueCoverFailure::Kind::lemma_violated, std::nullopt, 0, detail};
    }

    /// Envelopes, projections and profiles of a strong partition.
    auto analyse_strong(const Space & space, CliqueDecomposition & decomposition) -> std::optional<CliqueCoverFailure>
    {
        int q = space.q();
        auto uq = static_cast<std::size_t>(q);
        // envelope[dir][p]: symbols at position p over the cliques of codirection dir
        std::array<std::array<std::vector<bool>, 3>, 3> envelope;
        for (auto & per_dir : envelope)
            for (auto & flags : per_dir)
                flags.assign(uq, false);
        for (int dir = 0; dir < 3; ++dir)
            for (const auto & c : decomposition.cliques[static_cast<std::size_t>(dir)])
                for (int p = 0, k = 0; p < 3; ++p)
                    if (p != dir)
                        envelope[static_cast<std::size_t>(dir)][static_cast<std::size_t>(p)][c.fixed[static_cast<std::size_t>(k++)]] = true;

        auto S = symbol_list(envelope[0][1]), T = symbol_list(envelope[0][2]);
        auto R = symbol_list(envelope[1][0]), T2 = symbol_list(envelope[1][2]);
        auto R3 = symbol_list(envelope[2][0]), S3 = symbol_list(envelope[2][1]);

        if (R3 != complement_of(R, q))
            return lemma_failure("envelope R'=" + set_string(R3) + " is not the complement of R=" + set_string(R));
        if (T2 != complement_of(T, q))
            return lemma_failure("envelope T'=" + set_string(T2) + " is not the complement of T=" + set_string(T));
        if (S3 != complement_of(S, q))
            return lemma_failure("envelope S'=" + set_string(S3) + " is not the complement of S=" + set_string(S));

        auto Rbar = R3, Sbar = S3, Tbar = T2;
        stochastic::GridSet D1{static_cast<int>(S.size()), static_cast<int>(T.size())};
        stochastic::GridSet D2{static_cast<int>(R.size()), static_cast<int>(Tbar.size())};
        stochastic::GridSet D3{static_cast<int>(Rbar.size()), static_cast<int>(Sbar.size())};
        for (const auto & c : decomposition.cliques[0])
            D1.insert(rank_in(S, c.fixed[0]), rank_in(T, c.fixed[1]));
        for (const auto & c : decomposition.cliques[1])
            D2.insert(rank_in(R, c.fixed[0]), rank_in(Tbar, c.fixed[1]));
        for (const auto & c : decomposition.cliques[2])
            D3.insert(rank_in(Rbar, c.fixed[0]), rank_in(Sbar, c.fixed[1]));

        auto p1 = stochastic::profile(D1), p2 = stochastic::profile(D2), p3 = stochastic::profile(D3);
        if (! p1 || ! p2 || ! p3)
            return lemma_failure("a block projection is not stochastic");
        if (p1->a != p2->a || p1->b != p3->a || p2->b != p3->b)
            return lemma_failure("block profiles (" + std::to_string(p1->a) + "," + std::to_string(p1->b) + "), (" +
                std::to_string(p2->a) + "," + std::to_string(p2->b) + "), (" + std::to_string(p3->a) + "," +
                std::to_string(p3->b) + ") do not share a, b, c");

        decomposition.profiles = std::array{*p1, *p2, *p3};
        decomposition.blocks = ConstructionDBlocks{q, R, S, T, std::move(D1), std::move(D2), std::move(D3)};
        return std::nullopt;
    }
}

auto clique_cover(const Code & code) -> CliqueCoverResult
{
    require_h3(code, "clique_cover");
    const auto & space = code.space();
    CliquePartitioner partitioner{code};

    for (std::size_t k = 0; k < partitioner.size(); ++k)
        if (partitioner.options(k).empty())
            return CliqueCoverFailure{CliqueCoverFailure::Kind::not_clique_partition,
                space.vertex(partitioner.codeword(k)), 0, "codeword lies in no maximal clique inside the code"};

    auto partition = partitioner.run();
    if (! partition) {
        for (std::size_t k = 0; k < partitioner.size(); ++k)
            if (partitioner.options(k).size() >= 2)
                return CliqueCoverFailure{CliqueCoverFailure::Kind::not_clique_partition,
                    space.vertex(partitioner.codeword(k)), static_cast<int>(partitioner.options(k).size()),
                    "overlapping maximal cliques admit no partition of the code"};
        return CliqueCoverFailure{CliqueCoverFailure::Kind::not_clique_partition, std::nullopt, 0,
            "no partition into maximal cliques"};
    }

    CliqueDecomposition result{{}, false, std::nullopt, std::nullopt};
    for (auto & [k, dir] : *partition)
        result.cliques[static_cast<std::size_t>(dir)].push_back(clique_through(space, partitioner.codeword(k), dir));
    for (auto & list : result.cliques)
        std::sort(list.begin(), list.end());
    result.strong = std::all_of(result.cliques.begin(), result.cliques.end(), [](auto & l) { return ! l.empty(); });

    if (result.strong)
        if (auto failure = analyse_strong(space, result))
            return *failure;
    return result;
}

auto extract_construction_d(const Code & code) -> ExtractedConstructionD
{
    auto cover = clique_cover(code);
    if (auto failure = std::get_if<CliqueCoverFailure>(&cover))
        throw Error(Errc::precondition_violated, "no strong clique partition: " + failure->detail);
    auto & decomposition = std::get<CliqueDecomposition>(cover);
    if (! decomposition.strong)
        throw Error(Errc::precondition_violated, "the clique partition misses a codirection");

    auto & blocks = *decomposition.blocks;
    auto & profiles = *decomposition.profiles;
    ConditionOneWitness witness{static_cast<int>(blocks.R.size()), static_cast<int>(blocks.S.size()),
        static_cast<int>(blocks.T.size()), profiles[0].a, profiles[0].b, profiles[1].b};
    int q = code.space().q();
    if (! check_condition1(q, witness))
        throw Error(Errc::condition_one_violated, "recovered data " + to_string(witness) + " violates Condition 1");
    return ExtractedConstructionD{q, witness, std::move(blocks)};
}

auto canonicalize(const ConstructionDBlocks & blocks) -> ConstructionDBlocks
{
    auto initial = [](std::size_t size) {
        std::vector<Symbol> result(size);
        for (std::size_t i = 0; i < size; ++i)
            result[i] = static_cast<Symbol>(i);
        return result;
    };
    return ConstructionDBlocks{blocks.q, initial(blocks.R.size()), initial(blocks.S.size()), initial(blocks.T.size()),
        blocks.D1, blocks.D2, blocks.D3};
}

}
