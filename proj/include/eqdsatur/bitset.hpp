#ifndef EQDSATUR_BITSET_HPP
#define EQDSATUR_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace eqdsatur {

// Dynamic fixed-capacity bitset. Used both for vertex sets (bit v = vertex v)
// and feasible color sets (bit j-1 = color j).
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= (uint64_t{1} << (i & 63));
    }

    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    void fill_first(int m) {  // set bits [0, m)
        assert(m >= 0 && m <= nbits_);
        clear();
        int full = m >> 6;
        for (int w = 0; w < full; ++w) words_[w] = ~uint64_t{0};
        if (m & 63) words_[full] = (uint64_t{1} << (m & 63)) - 1;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    // number of set bits in [0, m)
    int count_below(int m) const {
        assert(m >= 0 && m <= nbits_);
        int full = m >> 6, c = 0;
        for (int w = 0; w < full; ++w) c += std::popcount(words_[w]);
        if (m & 63) c += std::popcount(words_[full] & ((uint64_t{1} << (m & 63)) - 1));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    bool intersects(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & other.words_[w]) return true;
        return false;
    }

    // |a & b & [0, m)|
    static int and_count_below(const Bitset& a, const Bitset& b, int m) {
        assert(a.nbits_ == b.nbits_ && m >= 0 && m <= a.nbits_);
        int full = m >> 6, c = 0;
        for (int w = 0; w < full; ++w) c += std::popcount(a.words_[w] & b.words_[w]);
        if (m & 63)
            c += std::popcount(a.words_[full] & b.words_[full]
                & ((uint64_t{1} << (m & 63)) - 1));
        return c;
    }

    int find_first() const {
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return int(w * 64) + std::countr_zero(words_[w]);
        return -1;
    }

    // first set bit strictly greater than i, or -1
    int find_next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t w = size_t(i) >> 6;
        uint64_t cur = words_[w] & (~uint64_t{0} << (i & 63));
        if (cur) return int(w * 64) + std::countr_zero(cur);
        for (++w; w < words_.size(); ++w)
            if (words_[w]) return int(w * 64) + std::countr_zero(words_[w]);
        return -1;
    }

    template <class Fn>
    void for_each(Fn fn) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t cur = words_[w];
            while (cur) {
                fn(int(w * 64) + std::countr_zero(cur));
                cur &= cur - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    bool operator==(const Bitset&) const = default;

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace eqdsatur

#endif
