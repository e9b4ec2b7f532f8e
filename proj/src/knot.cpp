#include "pretzel/knot.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "pretzel/errors.hpp"

namespace pretzel {

namespace {

constexpr long long kMaxParam = 1000000;

bool is_even(long long x) { return x % 2 == 0; }

} // namespace

PretzelKnot::PretzelKnot(long long p_, long long q_, long long r_) : p(p_), q(q_), r(r_) {
    if (std::llabs(p) > kMaxParam || std::llabs(q) > kMaxParam || std::llabs(r) > kMaxParam)
        throw invalid_knot_error("pretzel parameter exceeds 10^6 in absolute value");
    int evens = is_even(p) + is_even(q) + is_even(r);
    if (evens != 0 && evens != 1)
        throw invalid_knot_error("P(" + std::to_string(p) + "," + std::to_string(q) + "," +
                                 std::to_string(r) +
                                 ") is a link, not a knot: need all parameters odd or exactly "
                                 "one even");
}

bool PretzelKnot::all_odd() const { return !is_even(p) && !is_even(q) && !is_even(r); }

long long PretzelKnot::even_parameter() const {
    if (is_even(p)) return p;
    if (is_even(q)) return q;
    if (is_even(r)) return r;
    throw internal_error("even_parameter on an all-odd pretzel knot");
}

std::string PretzelKnot::to_string() const {
    std::ostringstream os;
    os << "P(" << p << "," << q << "," << r << ")";
    return os.str();
}

NormalForm normalize(const PretzelKnot& k) {
    long long a[3] = {k.p, k.q, k.r};
    bool reflected = false;
    if (!k.all_odd()) {
        long long even = k.even_parameter();
        if (even < 0) {
            for (auto& x : a) x = -x;
            reflected = true;
        }
        std::swap(a[2], *std::find_if(a, a + 3, [](long long x) { return is_even(x); }));
        if (a[0] < a[1]) std::swap(a[0], a[1]);
    } else {
        std::sort(a, a + 3, std::greater<>());
    }
    return {PretzelKnot(a[0], a[1], a[2]), reflected};
}

IntMatrix goeritz_form(const PretzelKnot& k) {
    IntMatrix g(2, 2);
    g.at(0, 0) = make_int(k.p) + make_int(k.r);
    g.at(0, 1) = make_int(-k.p);
    g.at(1, 0) = make_int(-k.p);
    g.at(1, 1) = make_int(k.p) + make_int(k.q);
    return g;
}

Int knot_determinant(const PretzelKnot& k) {
    Int p = make_int(k.p), q = make_int(k.q), r = make_int(k.r);
    return p * q + q * r + r * p;
}

namespace {

// Signature of a symmetric 2x2 integer matrix.
int signature2x2(const IntMatrix& g) {
    Int d = det(g);
    Int tr = g.at(0, 0) + g.at(1, 1);
    if (d < 0) return 0;
    if (d > 0) return tr > 0 ? 2 : -2;
    if (tr > 0) return 1;
    if (tr < 0) return -1;
    return 0;
}

} // namespace

int signature(const PretzelKnot& k) {
    if (k.all_odd()) throw internal_error("signature requires the one-even-parameter form");
    if (k.r % 2 != 0 || k.r < 0) {
        NormalForm nf = normalize(k);
        int s = signature(nf.knot);
        return nf.reflected ? -s : s;
    }
    // Gordon-Litherland for the white checkerboard surface of the standard
    // diagram: the correction term equals p + q.
    return signature2x2(goeritz_form(k)) - static_cast<int>(k.p + k.q);
}

SignatureCase case_classify(const PretzelKnot& k) {
    SignatureCase c;
    c.sigma = signature(k);
    c.n = k.p + k.q;
    c.det_g = det(goeritz_form(k));
    if (c.n == -2)
        c.label = CaseLabel::Case1;
    else if (c.n == 0)
        c.label = CaseLabel::Case2;
    else if (c.n == 2)
        c.label = c.det_g < 0 ? CaseLabel::Case3a : CaseLabel::Case3b;
    else if (c.n == 4 && c.det_g > 0)
        c.label = CaseLabel::Case4;
    else if (c.n == 4 || c.n == -4)
        c.label = CaseLabel::RuledOut4;
    else
        c.label = CaseLabel::RuledOutWide;
    return c;
}

bool u1_all_odd(const PretzelKnot& k) {
    long long a[3] = {k.p, k.q, k.r};
    auto has_pair = [&](long long x, long long y) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j && a[i] == x && a[j] == y) return true;
        return false;
    };
    return has_pair(1, 1) || has_pair(-1, -1) || has_pair(3, -1) || has_pair(-3, 1);
}

bool u1_r_zero(const PretzelKnot& k) {
    long long prod = k.p * k.q;
    return prod == 3 || prod == -3;
}

} // namespace pretzel
