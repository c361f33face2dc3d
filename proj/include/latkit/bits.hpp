#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace latkit {

// Dense square bit matrix; row r is a contiguous run of words() 64-bit words.
// Used for order relations, so n stays small (a few hundred at most).
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), w_((n + 63) / 64), bits_(size_t(n) * w_, 0) {}

    int size() const { return n_; }
    int words() const { return w_; }

    bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
    void set(int r, int c) { row(r)[c >> 6] |= uint64_t(1) << (c & 63); }
    void clear(int r, int c) { row(r)[c >> 6] &= ~(uint64_t(1) << (c & 63)); }

    uint64_t* row(int r) { return bits_.data() + size_t(r) * w_; }
    const uint64_t* row(int r) const { return bits_.data() + size_t(r) * w_; }

    bool operator==(const BitMatrix&) const = default;

private:
    int n_ = 0;
    int w_ = 0;
    std::vector<uint64_t> bits_;
};

namespace bits {

inline int word_count(int n) { return (n + 63) / 64; }

inline bool get(const uint64_t* w, int i) { return (w[i >> 6] >> (i & 63)) & 1; }
inline void set(uint64_t* w, int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
inline void clear(uint64_t* w, int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

inline void or_assign(uint64_t* a, const uint64_t* b, int w) {
    for (int i = 0; i < w; ++i) a[i] |= b[i];
}
inline void and_assign(uint64_t* a, const uint64_t* b, int w) {
    for (int i = 0; i < w; ++i) a[i] &= b[i];
}
inline void andnot_assign(uint64_t* a, const uint64_t* b, int w) {
    for (int i = 0; i < w; ++i) a[i] &= ~b[i];
}
inline bool subset(const uint64_t* a, const uint64_t* b, int w) {
    for (int i = 0; i < w; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}
inline bool any(const uint64_t* a, int w) {
    for (int i = 0; i < w; ++i)
        if (a[i]) return true;
    return false;
}
inline bool intersects(const uint64_t* a, const uint64_t* b, int w) {
    for (int i = 0; i < w; ++i)
        if (a[i] & b[i]) return true;
    return false;
}
inline int popcount(const uint64_t* a, int w) {
    int c = 0;
    for (int i = 0; i < w; ++i) c += std::popcount(a[i]);
    return c;
}

// Calls f(i) for every set bit, ascending.
template <class F>
inline void for_each(const uint64_t* a, int w, F f) {
    for (int k = 0; k < w; ++k) {
        uint64_t word = a[k];
        while (word) {
            int b = std::countr_zero(word);
            f(k * 64 + b);
            word &= word - 1;
        }
    }
}

inline std::vector<int> to_vector(const uint64_t* a, int w) {
    std::vector<int> out;
    for_each(a, w, [&](int i) { out.push_back(i); });
    return out;
}

}  // namespace bits
}  // namespace latkit
