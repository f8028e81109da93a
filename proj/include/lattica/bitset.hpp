#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace lattica {

/// Fixed-width dynamic bitset used for object and attribute sets.
///
/// Bits beyond size() are always zero, so word-wise comparisons and
/// popcounts never need masking.
class Bitset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t nbits, bool value = false)
        : nbits_(nbits), words_((nbits + word_bits - 1) / word_bits, value ? ~word_type{0} : 0) {
        trim();
    }
    Bitset(std::size_t nbits, std::initializer_list<std::size_t> bits) : Bitset(nbits) {
        for (auto b : bits) set(b);
    }

    std::size_t size() const noexcept { return nbits_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const word_type* data() const noexcept { return words_.data(); }

    bool test(std::size_t i) const noexcept {
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }
    Bitset& set(std::size_t i) noexcept {
        words_[i / word_bits] |= word_type{1} << (i % word_bits);
        return *this;
    }
    Bitset& reset(std::size_t i) noexcept {
        words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
        return *this;
    }
    Bitset& set_all() noexcept {
        for (auto& w : words_) w = ~word_type{0};
        trim();
        return *this;
    }
    Bitset& clear() noexcept {
        for (auto& w : words_) w = 0;
        return *this;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const noexcept { return !none(); }
    bool all() const noexcept { return count() == nbits_; }

    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    Bitset& operator-=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    Bitset complement() const {
        Bitset r(*this);
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool is_subset_of(const Bitset& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool is_proper_subset_of(const Bitset& o) const noexcept {
        return is_subset_of(o) && *this != o;
    }
    bool intersects(const Bitset& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Index of the first set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const noexcept {
        if (from >= nbits_) return nbits_;
        std::size_t wi = from / word_bits;
        word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
        while (true) {
            if (w) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size()) return nbits_;
            w = words_[wi];
        }
    }
    std::size_t find_first() const noexcept { return find_next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            word_type w = words_[wi];
            while (w) {
                f(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    /// True iff this and `o` agree on all bits with index < i.
    bool equal_below(const Bitset& o, std::size_t i) const noexcept {
        std::size_t full = i / word_bits;
        for (std::size_t w = 0; w < full; ++w)
            if (words_[w] != o.words_[w]) return false;
        std::size_t rem = i % word_bits;
        if (rem == 0) return true;
        word_type mask = (word_type{1} << rem) - 1;
        return ((words_[full] ^ o.words_[full]) & mask) == 0;
    }

    /// Clears every bit with index >= i.
    Bitset& truncate(std::size_t i) noexcept {
        if (i >= nbits_) return *this;
        std::size_t full = i / word_bits;
        std::size_t rem = i % word_bits;
        if (rem) {
            words_[full] &= (word_type{1} << rem) - 1;
            ++full;
        }
        for (std::size_t w = full; w < words_.size(); ++w) words_[w] = 0;
        return *this;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    std::size_t hash() const noexcept {
        std::size_t h = nbits_ * 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() noexcept {
        std::size_t rem = nbits_ % word_bits;
        if (rem && !words_.empty()) words_.back() &= (word_type{1} << rem) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<word_type> words_;
};

/// Lectic order: compare bit strings with index 0 most significant.
/// `a` precedes `b` iff the smallest index where they differ is in `b`.
inline bool lectic_less(const Bitset& a, const Bitset& b) noexcept {
    for (std::size_t w = 0; w < a.word_count(); ++w) {
        auto x = a.data()[w] ^ b.data()[w];
        if (x) {
            auto bit = std::countr_zero(x);
            return (b.data()[w] >> bit) & 1u;
        }
    }
    return false;
}

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

using ObjectSet = Bitset;
using AttributeSet = Bitset;

}  // namespace lattica
