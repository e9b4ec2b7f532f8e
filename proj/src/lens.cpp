#include "pretzel/lens.hpp"

#include "pretzel/errors.hpp"

namespace pretzel {

namespace {

void check_args(const Int& D, const Int& i) {
    if (D < 1 || D % 4 != 1)
        throw unsupported_error("lens space order must be a positive integer = 1 mod 4, got " +
                                D.get_str());
    if (i < 0 || i >= D) throw std::invalid_argument("lens class label out of range");
}

} // namespace

std::pair<Int, Int> lens_psi(const Int& D, const Int& i) {
    check_args(D, i);
    Int s = (D - 1) / 4;
    if (i <= s) return {2 * i - 1, Int(2)};
    if (i <= 3 * s + 1) return {2 * i - D, Int(0)};
    return {2 * i - 2 * D - 1, Int(2)};
}

Rat lens_d(const Int& D, const Int& i) {
    check_args(D, i);
    Int s = (D - 1) / 4;
    if (i <= s) return make_rat(-2 * i * i, D);
    if (i <= 3 * s + 1) {
        Int u = 2 * i - D;
        return make_rat(-(u * u - D), 2 * D);
    }
    Int u = D - i;
    return make_rat(-2 * u * u, D);
}

LensTable lens_table(const Int& D) {
    check_args(D, Int(0));
    if (D > 10000000) throw limit_error("lens table too large");
    LensTable t;
    t.D = D;
    long long n = D.get_si();
    t.psi.reserve(n);
    t.d.reserve(n);
    for (long long i = 0; i < n; ++i) {
        t.psi.push_back(lens_psi(D, Int(static_cast<long>(i))));
        t.d.push_back(lens_d(D, Int(static_cast<long>(i))));
    }
    return t;
}

} // namespace pretzel
