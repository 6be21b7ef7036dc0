#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace crcforge {

/// Dense fixed-length bit vector, one bit per element.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;

    explicit Bitset(std::size_t size, bool value = false) :
        _size(size),
        _words((size + word_bits - 1) / word_bits, value ? ~Word{0} : Word{0})
    {
        trim();
    }

    auto size() const noexcept -> std::size_t { return _size; }

    auto test(std::size_t i) const noexcept -> bool
    {
        return (_words[i / word_bits] >> (i % word_bits)) & 1U;
    }

    void set(std::size_t i, bool value = true) noexcept
    {
        Word mask = Word{1} << (i % word_bits);
        if (value)
            _words[i / word_bits] |= mask;
        else
            _words[i / word_bits] &= ~mask;
    }

    void reset(std::size_t i) noexcept { set(i, false); }

    auto count() const noexcept -> std::size_t
    {
        std::size_t result = 0;
        for (auto w : _words)
            result += static_cast<std::size_t>(std::popcount(w));
        return result;
    }

    auto flipped() const -> Bitset
    {
        Bitset result = *this;
        for (auto & w : result._words)
            w = ~w;
        result.trim();
        return result;
    }

    /// Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each_set(F && f) const
    {
        for (std::size_t wi = 0; wi < _words.size(); ++wi) {
            Word w = _words[wi];
            while (w) {
                auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(wi * word_bits + bit);
                w &= w - 1;
            }
        }
    }

    auto words() const noexcept -> const std::vector<Word> & { return _words; }

    friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

private:
    void trim() noexcept
    {
        if (_size % word_bits != 0 && ! _words.empty())
            _words.back() &= (Word{1} << (_size % word_bits)) - 1;
    }

    std::size_t _size = 0;
    std::vector<Word> _words;
};

}
