#ifndef CARC_BITS_HPP
#define CARC_BITS_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace carc {

// Dynamic fixed-universe bitset used for segment coverage and adjacency rows.
class Bits {
public:
    Bits() = default;
    explicit Bits(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); i++) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); i++) w_[i] &= o.w_[i];
        return *this;
    }

    bool full() const {
        int rem = n_;
        for (uint64_t w : w_) {
            int take = rem >= 64 ? 64 : rem;
            uint64_t want = take == 64 ? ~uint64_t(0) : ((uint64_t(1) << take) - 1);
            if ((w & want) != want) return false;
            rem -= take;
        }
        return true;
    }
    bool any() const {
        for (uint64_t w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }
    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); i++)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    // true if the union of *this and o covers the whole universe
    bool union_full(const Bits& o) const {
        int rem = n_;
        for (size_t i = 0; i < w_.size(); i++) {
            int take = rem >= 64 ? 64 : rem;
            uint64_t want = take == 64 ? ~uint64_t(0) : ((uint64_t(1) << take) - 1);
            if (((w_[i] | o.w_[i]) & want) != want) return false;
            rem -= take;
        }
        return true;
    }
    bool union_full(const Bits& o1, const Bits& o2) const {
        int rem = n_;
        for (size_t i = 0; i < w_.size(); i++) {
            int take = rem >= 64 ? 64 : rem;
            uint64_t want = take == 64 ? ~uint64_t(0) : ((uint64_t(1) << take) - 1);
            if (((w_[i] | o1.w_[i] | o2.w_[i]) & want) != want) return false;
            rem -= take;
        }
        return true;
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// splitmix64: deterministic across platforms, used for all randomized tests
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    uint64_t below(uint64_t bound) { return next() % bound; }
};

} // namespace carc

#endif
