#pragma once

// Independent reference implementations used only by tests. These compute the
// string statistics straight from their definitions (max over all cutoff
// positions) instead of the single-scan form used by the library, so the two
// can disagree if either is wrong.

#include <algorithm>
#include <random>
#include <vector>

#include "crystals/monomial.hpp"

namespace test_oracles {

inline std::vector<int> color_shifts(const crystals::Monomial& m, int i) {
    std::vector<int> shifts;
    for (const auto& v : m.entries())
        if (v.index == i) shifts.push_back(v.shift);
    return shifts;
}

// phi_i = max over cutoffs c of sum_{shift <= c} y_i(shift), floored at 0.
inline int phi_by_scan(const crystals::Monomial& m, int i) {
    auto shifts = color_shifts(m, i);
    if (shifts.empty()) return 0;
    int lo = shifts.front() - 1, hi = shifts.back() + 1;
    int best = 0;
    for (int c = lo; c <= hi; ++c) {
        int s = 0;
        for (const auto& v : m.entries())
            if (v.index == i && v.shift <= c) s += v.exp;
        best = std::max(best, s);
    }
    return best;
}

// eps_i = max over cutoffs c of -sum_{shift > c} y_i(shift), floored at 0.
inline int eps_by_scan(const crystals::Monomial& m, int i) {
    auto shifts = color_shifts(m, i);
    if (shifts.empty()) return 0;
    int lo = shifts.front() - 1, hi = shifts.back() + 1;
    int best = 0;
    for (int c = lo; c <= hi; ++c) {
        int s = 0;
        for (const auto& v : m.entries())
            if (v.index == i && v.shift > c) s += v.exp;
        best = std::max(best, -s);
    }
    return best;
}

inline crystals::Monomial random_monomial(std::mt19937& rng, int max_index) {
    std::uniform_int_distribution<int> n_entries(0, 6);
    std::uniform_int_distribution<int> idx(1, max_index);
    std::uniform_int_distribution<int> shift(-3, 4);
    std::uniform_int_distribution<int> ex(-3, 3);
    std::vector<crystals::VarExp> vs;
    int count = n_entries(rng);
    for (int t = 0; t < count; ++t) {
        int e = ex(rng);
        while (e == 0) e = ex(rng);
        vs.push_back({idx(rng), shift(rng), e});
    }
    return crystals::Monomial::from_entries(std::move(vs));
}

}  // namespace test_oracles
