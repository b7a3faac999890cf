#pragma once

#include <random>

#include "mirrorcheck/diff_op.hpp"

namespace testgen {

using namespace mirrorcheck;

/// Small rationals num/den with |num| <= 9, 1 <= den <= 4.
inline scalar small_scalar(std::mt19937 &rng)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    return make_scalar(num(rng), den(rng));
}

inline power_series random_series(std::mt19937 &rng, int order, bool zero_constant = false)
{
    power_series f(order);
    for (int k = zero_constant ? 1 : 0; k <= order; ++k) {
        f.set(k, small_scalar(rng));
    }
    return f;
}

inline dpoly random_dpoly(std::mt19937 &rng, int max_degree)
{
    std::vector<scalar> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto &x : c) {
        x = small_scalar(rng);
    }
    return dpoly(std::move(c));
}

inline diff_op random_op(std::mt19937 &rng, int q_degree, int order)
{
    std::vector<dpoly> s;
    for (int d = 0; d <= q_degree; ++d) {
        s.push_back(random_dpoly(rng, order));
    }
    return diff_op(std::move(s));
}

} // namespace testgen
