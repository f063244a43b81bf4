#pragma once

#include <array>

namespace qtem {

// Row-major 6x6 matrix over an arbitrary scalar (double for numerics,
// Rational for the exact comparisons).
template <class T>
struct Mat6 {
    std::array<T, 36> e{};

    T& operator()(int r, int c) { return e[static_cast<std::size_t>(r) * 6 + c]; }
    const T& operator()(int r, int c) const { return e[static_cast<std::size_t>(r) * 6 + c]; }

    friend bool operator==(const Mat6& a, const Mat6& b) { return a.e == b.e; }
};

using Mat6d = Mat6<double>;

} // namespace qtem
