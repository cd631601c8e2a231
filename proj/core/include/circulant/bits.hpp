#pragma once

#include <cstdint>

// Word-parallel helpers for subsets of Z_m stored as 128-bit masks,
// bit r = residue r. Everything here assumes 1 <= m <= 128.

namespace circulant::detail {

using u128 = unsigned __int128;

inline constexpr int kMaxModulus = 128;

constexpr u128 low_mask(int m) {
    return m >= 128 ? ~u128{0} : ((u128{1} << m) - 1);
}

constexpr bool test_bit(u128 x, int r) { return (x >> r) & 1; }

constexpr u128 set_bit(u128 x, int r) { return x | (u128{1} << r); }

inline int popcount(u128 x) {
    return __builtin_popcountll(static_cast<std::uint64_t>(x)) +
           __builtin_popcountll(static_cast<std::uint64_t>(x >> 64));
}

inline int countr_zero(u128 x) {
    auto lo = static_cast<std::uint64_t>(x);
    if (lo != 0) return __builtin_ctzll(lo);
    auto hi = static_cast<std::uint64_t>(x >> 64);
    return hi != 0 ? 64 + __builtin_ctzll(hi) : 128;
}

// Cyclic shift by s inside the low m bits: bit r moves to (r+s) mod m.
inline u128 rotl_mod(u128 x, int s, int m) {
    s %= m;
    if (s == 0) return x;
    return ((x << s) | (x >> (m - s))) & low_mask(m);
}

// Visits each set bit in ascending order.
template <typename Fn>
void for_each_bit(u128 x, Fn&& fn) {
    while (x) {
        int r = countr_zero(x);
        fn(r);
        x &= x - 1;
    }
}

}  // namespace circulant::detail
