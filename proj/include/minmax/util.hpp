#pragma once

#include <cstdint>
#include <cstddef>
#include <limits>
#include <vector>

namespace minmax {

// Absolute tolerance for all geometric equality comparisons.
inline constexpr double kEps = 1e-9;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool approx_eq(double a, double b, double eps = kEps) {
    return (a > b ? a - b : b - a) <= eps;
}
inline bool approx_le(double a, double b, double eps = kEps) { return a <= b + eps; }
inline bool approx_ge(double a, double b, double eps = kEps) { return a + eps >= b; }
// Strictly greater, ties excluded.
inline bool strictly_gt(double a, double b, double eps = kEps) { return a > b + eps; }
inline bool strictly_lt(double a, double b, double eps = kEps) { return a + eps < b; }

// Fixed-width set of client indices. Supports the subset/equality tests the
// dominance rules need without heap churn per comparison.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
        return n;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const { return words_ == o.words_; }

    // True when every bit of *this is also set in o.
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool proper_subset_of(const Bitset& o) const {
        return subset_of(o) && !(*this == o);
    }
    // True when *this covers every bit of o.
    bool contains_all(const Bitset& o) const { return o.subset_of(*this); }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < bits_; ++i)
            if (test(i)) out.push_back(static_cast<int>(i));
        return out;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Deterministic uniform double in [0,1) from a raw 64-bit engine draw.
// Avoids std::uniform_real_distribution, whose output is implementation
// defined, so generated instances are byte-identical across platforms.
template <class Engine>
double canonical_u01(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

} // namespace minmax
