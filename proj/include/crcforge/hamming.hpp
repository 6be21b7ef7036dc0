#pragma once

#include <crcforge/bitset.hpp>
#include <crcforge/error.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace crcforge {

using Symbol = std::uint32_t;
using VertexIndex = std::uint64_t;

/// Largest vertex count a Space may have (dense membership indicators).
inline constexpr VertexIndex max_vertex_count = VertexIndex{1} << 32;

/// A word of the Hamming space; coordinates are positions 0..n-1.
class Vertex {
public:
    Vertex() = default;
    explicit Vertex(std::vector<Symbol> coords) : _coords(std::move(coords)) {}
    Vertex(std::initializer_list<Symbol> coords) : _coords(coords) {}

    auto size() const noexcept -> std::size_t { return _coords.size(); }
    auto operator[](std::size_t i) const -> Symbol { return _coords[i]; }
    auto operator[](std::size_t i) -> Symbol & { return _coords[i]; }
    auto begin() const { return _coords.begin(); }
    auto end() const { return _coords.end(); }
    auto coords() const noexcept -> const std::vector<Symbol> & { return _coords; }

    friend auto operator==(const Vertex &, const Vertex &) -> bool = default;
    friend auto operator<=>(const Vertex &, const Vertex &) = default;

private:
    std::vector<Symbol> _coords;
};

auto to_string(const Vertex & v) -> std::string;

/// The Hamming graph H(n,q) over the alphabet {0..q-1}. Vertices are indexed
/// lexicographically with position 0 most significant.
class Space {
public:
    Space(int n, int q);

    auto n() const noexcept -> int { return _n; }
    auto q() const noexcept -> int { return _q; }
    auto vertex_count() const noexcept -> VertexIndex { return _size; }
    auto valency() const noexcept -> int { return _n * (_q - 1); }

    /// Index step of position i; position n-1 has stride 1.
    auto stride(int position) const noexcept -> VertexIndex { return _strides[static_cast<std::size_t>(position)]; }

    auto symbol(VertexIndex v, int position) const noexcept -> Symbol
    {
        return static_cast<Symbol>((v / stride(position)) % static_cast<VertexIndex>(_q));
    }

    auto with_symbol(VertexIndex v, int position, Symbol a) const noexcept -> VertexIndex
    {
        return v - stride(position) * symbol(v, position) + stride(position) * a;
    }

    auto contains(const Vertex & v) const noexcept -> bool;
    auto index(const Vertex & v) const -> VertexIndex;
    auto vertex(VertexIndex i) const -> Vertex;

    /// Calls f(w) for the n(q-1) neighbours of v, position-major then symbol ascending.
    template <typename F>
    void for_each_neighbor(VertexIndex v, F && f) const
    {
        for (int i = 0; i < _n; ++i) {
            auto step = stride(i);
            auto own = symbol(v, i);
            auto base = v - step * own;
            for (Symbol a = 0; a < static_cast<Symbol>(_q); ++a)
                if (a != own)
                    f(base + step * a);
        }
    }

    friend auto operator==(const Space & a, const Space & b) noexcept -> bool { return a._n == b._n && a._q == b._q; }

private:
    int _n;
    int _q;
    VertexIndex _size;
    std::vector<VertexIndex> _strides;
};

auto make_space(int n, int q) -> Space;

auto neighbors(const Space & space, const Vertex & v) -> std::vector<Vertex>;

/// Maximal clique: the q words agreeing outside the codirection. `fixed`
/// holds the n-1 symbols of the other positions in order.
struct Clique {
    int codirection;
    std::vector<Symbol> fixed;

    friend auto operator==(const Clique &, const Clique &) -> bool = default;
    friend auto operator<=>(const Clique &, const Clique &) = default;
};

/// The q^(n-1) words with `symbol` at position `direction`.
struct Hyperface {
    int direction;
    Symbol symbol;
};

auto clique_vertices(const Space & space, const Clique & c) -> std::vector<Vertex>;
auto clique_indices(const Space & space, const Clique & c) -> std::vector<VertexIndex>;

/// The clique of the given codirection through v.
auto clique_through(const Space & space, VertexIndex v, int codirection) -> Clique;

/// All n*q^(n-1) maximal cliques, codirection-major then by fixed symbols.
auto all_cliques(const Space & space) -> std::vector<Clique>;

auto hyperface_vertices(const Space & space, const Hyperface & h) -> std::vector<Vertex>;

/// A set of vertices of a Space, stored as a dense membership indicator.
class Code {
public:
    explicit Code(Space space);
    Code(Space space, Bitset members);

    static auto from_words(Space space, const std::vector<Vertex> & words) -> Code;
    static auto from_predicate(Space space, const std::function<bool(const Vertex &)> & in_code) -> Code;
    static auto full(Space space) -> Code;

    auto space() const noexcept -> const Space & { return _space; }
    auto members() const noexcept -> const Bitset & { return _members; }
    auto contains(VertexIndex v) const noexcept -> bool { return _members.test(v); }
    auto contains(const Vertex & v) const -> bool { return _members.test(_space.index(v)); }
    auto size() const noexcept -> VertexIndex { return _cardinality; }
    auto empty() const noexcept -> bool { return _cardinality == 0; }
    auto is_full() const noexcept -> bool { return _cardinality == _space.vertex_count(); }

    auto complement() const -> Code;

    /// Codewords in lexicographic order.
    auto codewords() const -> std::vector<Vertex>;
    auto codeword_indices() const -> std::vector<VertexIndex>;

    friend auto operator==(const Code & a, const Code & b) -> bool
    {
        return a._space == b._space && a._members == b._members;
    }

private:
    Space _space;
    Bitset _members;
    VertexIndex _cardinality = 0;
};

}
