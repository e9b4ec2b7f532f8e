#pragma once

#include <optional>
#include <string>

#include "pretzel/matrix.hpp"

namespace pretzel {

// A 3-strand pretzel knot P(p, q, r). The triple gives a knot (one component)
// exactly when all parameters are odd or exactly one is even.
struct PretzelKnot {
    long long p = 0;
    long long q = 0;
    long long r = 0;

    PretzelKnot(long long p, long long q, long long r);

    bool all_odd() const;
    long long even_parameter() const; // requires exactly one even parameter
    bool operator==(const PretzelKnot&) const = default;
    std::string to_string() const; // "P(p,q,r)"
};

// Puts the even parameter (if any) last and sorts the odd parameters in
// descending order. A negative even parameter is first made positive by
// reflecting the whole triple; `reflected` records that a mirror was taken.
struct NormalForm {
    PretzelKnot knot;
    bool reflected = false;
};
NormalForm normalize(const PretzelKnot& k);

// Goeritz form [[p+r, -p], [-p, p+q]] of the standard checkerboard surface.
IntMatrix goeritz_form(const PretzelKnot& k);

// Determinant of the double branched cover's linking form, pq + qr + rp.
Int knot_determinant(const PretzelKnot& k);

// Knot signature for the one-even-parameter case, from the Goeritz form with
// correction term p + q (normalized triple expected).
int signature(const PretzelKnot& k);

// Rows of the case table splitting candidates by n = p + q and the sign of
// det G. RuledOut4 marks the two rows dismissed outright (|signature| = 4);
// RuledOutWide extends the same gate to |n| >= 6, where |signature| >= 4 as
// well.
enum class CaseLabel { Case1, Case2, Case3a, Case3b, Case4, RuledOut4, RuledOutWide };

struct SignatureCase {
    CaseLabel label = CaseLabel::RuledOutWide;
    long long n = 0; // p + q
    Int det_g;       // signed Goeritz determinant, pq + qr + rp
    int sigma = 0;
};
SignatureCase case_classify(const PretzelKnot& k); // normalized, even r > 0

// Unknotting number one for all-odd P(p,q,r): holds exactly when some pair of
// parameters is {1,1}, {-1,-1}, {3,-1} or {-3,1} (as a sub-multiset).
bool u1_all_odd(const PretzelKnot& k);

// With r = 0 the knot is the connected sum of two torus links' halves; it has
// unknotting number one exactly when pq = +-3.
bool u1_r_zero(const PretzelKnot& k);

} // namespace pretzel
