#pragma once

#include <utility>
#include <vector>

#include "pretzel/matrix.hpp"

namespace pretzel {

// Correction terms of the lens space L(D, 2) for D = 1 mod 4, D = 4s+1,
// with classes labelled 0..D-1 by the standard covector map psi.

// psi(i): a characteristic covector for the [[-n,1],[1,-2]] form, n = (D+1)/2
std::pair<Int, Int> lens_psi(const Int& D, const Int& i);

// d(L(D,2), i) by the per-branch closed forms
Rat lens_d(const Int& D, const Int& i);

struct LensTable {
    Int D;
    std::vector<std::pair<Int, Int>> psi;
    std::vector<Rat> d;
};

LensTable lens_table(const Int& D);

} // namespace pretzel
