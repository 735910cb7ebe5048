#pragma once
#include <algorithm>
#include <optional>
#include <utility>

#include "cyclic_stab/rational.hpp"

namespace testutil {

// Cohomology of Hom((x^a, x^{N-a}), (x^c, x^{N-c})) over k[x], counted monomial by monomial.
// An even map is (x^i, x^{i+c-a}); it is exact iff i >= a or i >= N - c. An odd map is
// (x^i, -x^{i+N-a-c}); it is exact iff i >= a or i >= c. With twist weights (u0, u1) and
// (v0, v1) for the group Z/d, only maps of integral weight survive.
struct Twist {
    cstab::Rat w0, w1;
};

inline std::pair<int, int> rank_one_hom_dims(int N, int a, int c, std::optional<Twist> u = std::nullopt,
                                             std::optional<Twist> v = std::nullopt, int d = 1) {
    auto invariant = [&](const cstab::Rat& tgt, int i) {
        if (!u || !v) return true;
        cstab::Rat gap = tgt - u->w0 - cstab::ratio(i, d);
        return cstab::is_integer(gap);
    };
    int h0 = 0, h1 = 0;
    for (int i = std::max(0, a - c); i < std::min(a, N - c); ++i)
        if (invariant(v ? v->w0 : cstab::Rat(0), i)) ++h0;
    for (int i = std::max(0, a + c - N); i < std::min(a, c); ++i)
        if (invariant(v ? v->w1 : cstab::Rat(0), i)) ++h1;
    return {h0, h1};
}

}  // namespace testutil
