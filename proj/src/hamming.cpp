#include <crcforge/hamming.hpp>

#include <algorithm>
#include <sstream>

namespace crcforge {

const char * to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::invalid_dimensions: return "invalid-dimensions";
    case Errc::vertex_out_of_space: return "vertex-out-of-space";
    case Errc::invalid_clique: return "invalid-clique";
    case Errc::invalid_hyperface: return "invalid-hyperface";
    case Errc::empty_code: return "empty-code";
    case Errc::full_code: return "full-code";
    case Errc::no_essential_positions: return "no-essential-positions";
    case Errc::invalid_position: return "invalid-position";
    case Errc::space_mismatch: return "space-mismatch";
    case Errc::divisibility_violated: return "divisibility-violated";
    case Errc::degree_out_of_range: return "degree-out-of-range";
    case Errc::invalid_parameters: return "invalid-parameters";
    case Errc::condition_one_violated: return "condition-one-violated";
    case Errc::unnormalized_gamma: return "unnormalized-gamma";
    case Errc::precondition_violated: return "precondition-violated";
    case Errc::space_too_large: return "space-too-large";
    case Errc::format_error: return "format-error";
    }
    return "unknown";
}

auto to_string(const Vertex & v) -> std::string
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

Space::Space(int n, int q) :
    _n(n),
    _q(q),
    _size(1)
{
    if (n < 1 || q < 2)
        throw Error(Errc::invalid_dimensions, "H(n,q) needs n >= 1 and q >= 2, got n=" + std::to_string(n) +
                ", q=" + std::to_string(q));
    for (int i = 0; i < n; ++i) {
        if (_size > max_vertex_count / static_cast<VertexIndex>(q))
            throw Error(Errc::invalid_dimensions, "q^n exceeds the vertex cap of 2^32");
        _size *= static_cast<VertexIndex>(q);
    }
    _strides.resize(static_cast<std::size_t>(n));
    VertexIndex s = 1;
    for (int i = n - 1; i >= 0; --i) {
        _strides[static_cast<std::size_t>(i)] = s;
        s *= static_cast<VertexIndex>(q);
    }
}

auto Space::contains(const Vertex & v) const noexcept -> bool
{
    if (v.size() != static_cast<std::size_t>(_n))
        return false;
    return std::all_of(v.begin(), v.end(), [&](Symbol a) { return a < static_cast<Symbol>(_q); });
}

auto Space::index(const Vertex & v) const -> VertexIndex
{
    if (! contains(v))
        throw Error(Errc::vertex_out_of_space, "vertex " + to_string(v) + " is not in H(" + std::to_string(_n) +
                "," + std::to_string(_q) + ")");
    VertexIndex result = 0;
    for (int i = 0; i < _n; ++i)
        result += stride(i) * v[static_cast<std::size_t>(i)];
    return result;
}

auto Space::vertex(VertexIndex i) const -> Vertex
{
    if (i >= _size)
        throw Error(Errc::vertex_out_of_space, "vertex index " + std::to_string(i) + " out of range");
    std::vector<Symbol> coords(static_cast<std::size_t>(_n));
    for (int p = 0; p < _n; ++p)
        coords[static_cast<std::size_t>(p)] = symbol(i, p);
    return Vertex{std::move(coords)};
}

auto make_space(int n, int q) -> Space
{
    return Space{n, q};
}

auto neighbors(const Space & space, const Vertex & v) -> std::vector<Vertex>
{
    auto vi = space.index(v);
    std::vector<Vertex> result;
    result.reserve(static_cast<std::size_t>(space.valency()));
    space.for_each_neighbor(vi, [&](VertexIndex w) { result.push_back(space.vertex(w)); });
    return result;
}

namespace {
    void validate(const Space & space, const Clique & c)
    {
        if (c.codirection < 0 || c.codirection >= space.n())
            throw Error(Errc::invalid_clique, "clique codirection out of range");
        if (c.fixed.size() != static_cast<std::size_t>(space.n() - 1))
            throw Error(Errc::invalid_clique, "clique needs n-1 fixed symbols");
        for (auto a : c.fixed)
            if (a >= static_cast<Symbol>(space.q()))
                throw Error(Errc::invalid_clique, "clique fixed symbol out of alphabet");
    }

    auto clique_base(const Space & space, const Clique & c) -> VertexIndex
    {
        VertexIndex base = 0;
        std::size_t k = 0;
        for (int p = 0; p < space.n(); ++p)
            if (p != c.codirection)
                base += space.stride(p) * c.fixed[k++];
        return base;
    }
}

auto clique_indices(const Space & space, const Clique & c) -> std::vector<VertexIndex>
{
    validate(space, c);
    auto base = clique_base(space, c);
    std::vector<VertexIndex> result;
    result.reserve(static_cast<std::size_t>(space.q()));
    for (int a = 0; a < space.q(); ++a)
        result.push_back(base + space.stride(c.codirection) * static_cast<VertexIndex>(a));
    return result;
}

auto clique_vertices(const Space & space, const Clique & c) -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    for (auto v : clique_indices(space, c))
        result.push_back(space.vertex(v));
    return result;
}

auto clique_through(const Space & space, VertexIndex v, int codirection) -> Clique
{
    Clique c{codirection, {}};
    for (int p = 0; p < space.n(); ++p)
        if (p != codirection)
            c.fixed.push_back(space.symbol(v, p));
    return c;
}

auto all_cliques(const Space & space) -> std::vector<Clique>
{
    std::vector<Clique> result;
    for (int dir = 0; dir < space.n(); ++dir)
        for (VertexIndex v = 0; v < space.vertex_count(); ++v)
            if (space.symbol(v, dir) == 0)
                result.push_back(clique_through(space, v, dir));
    return result;
}

auto hyperface_vertices(const Space & space, const Hyperface & h) -> std::vector<Vertex>
{
    if (h.direction < 0 || h.direction >= space.n() || h.symbol >= static_cast<Symbol>(space.q()))
        throw Error(Errc::invalid_hyperface, "hyperface direction or symbol out of range");
    std::vector<Vertex> result;
    for (VertexIndex v = 0; v < space.vertex_count(); ++v)
        if (space.symbol(v, h.direction) == h.symbol)
            result.push_back(space.vertex(v));
    return result;
}

Code::Code(Space space) :
    _space(space),
    _members(static_cast<std::size_t>(space.vertex_count()))
{
}

Code::Code(Space space, Bitset members) :
    _space(space),
    _members(std::move(members))
{
    if (_members.size() != _space.vertex_count())
        throw Error(Errc::space_mismatch, "membership indicator length differs from q^n");
    _cardinality = _members.count();
}

auto Code::from_words(Space space, const std::vector<Vertex> & words) -> Code
{
    Bitset bits(static_cast<std::size_t>(space.vertex_count()));
    for (auto & w : words)
        bits.set(space.index(w));
    return Code{space, std::move(bits)};
}

auto Code::from_predicate(Space space, const std::function<bool(const Vertex &)> & in_code) -> Code
{
    Bitset bits(static_cast<std::size_t>(space.vertex_count()));
    for (VertexIndex v = 0; v < space.vertex_count(); ++v)
        if (in_code(space.vertex(v)))
            bits.set(v);
    return Code{space, std::move(bits)};
}

auto Code::full(Space space) -> Code
{
    return Code{space, Bitset(static_cast<std::size_t>(space.vertex_count()), true)};
}

auto Code::complement() const -> Code
{
    return Code{_space, _members.flipped()};
}

auto Code::codeword_indices() const -> std::vector<VertexIndex>
{
    std::vector<VertexIndex> result;
    result.reserve(static_cast<std::size_t>(_cardinality));
    _members.for_each_set([&](std::size_t i) { result.push_back(i); });
    return result;
}

auto Code::codewords() const -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    result.reserve(static_cast<std::size_t>(_cardinality));
    _members.for_each_set([&](std::size_t i) { result.push_back(_space.vertex(i)); });
    return result;
}

}
