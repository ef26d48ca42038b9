#ifndef STONE_BITSET_HPP
#define STONE_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <bit>
#include <compare>
#include <vector>

namespace stone {

/// Fixed-size bit vector used for element subsets of a carrier and point
/// subsets of a space. Size is set at construction and never changes.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static Bitset full(std::size_t n) {
        Bitset b(n);
        for (std::size_t i = 0; i < n; ++i) b.set(i);
        return b;
    }

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset operator|(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }
    Bitset operator&(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    Bitset operator^(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] ^ o.words_[i];
        return r;
    }
    Bitset operator~() const {
        Bitset r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }
    Bitset& operator|=(const Bitset& o) { return *this = *this | o; }
    Bitset& operator&=(const Bitset& o) { return *this = *this & o; }

    bool operator==(const Bitset& o) const = default;

    /// Subset test.
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Lexicographic order on the index-0-first bit sequence, 0 < 1.
    bool lex_less(const Bitset& o) const {
        for (std::size_t i = 0; i < n_; ++i) {
            bool a = test(i), b = o.test(i);
            if (a != b) return !a;
        }
        return false;
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

private:
    void trim() {
        if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;

    friend struct BitsetHash;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const {
        std::size_t h = b.n_;
        for (auto w : b.words_) h = h * 1099511628211ULL ^ w;
        return h;
    }
};

} // namespace stone

#endif
