#include <algorithm>
#include <cstdlib>

#include "pretzel/errors.hpp"
#include "pretzel/obstruction.hpp"

namespace pretzel {

IntMatrix seifert_matrix(long long k, long long m) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("band parameter must be odd and >= 1");
    if (m < 1) throw std::invalid_argument("even-column half twist count must be >= 1");
    if (2 * k > 30) throw limit_error("Seifert matrix limited to genus 15");
    int n = static_cast<int>(2 * k);
    int b = static_cast<int>(k - 1); // curves per twist column
    IntMatrix v(n, n);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j <= i; ++j) {
            v.at(i, j) = 1;          // lower-triangular ones
            v.at(b + i, b + j) = -1; // and its negative for the mirrored column
        }
    for (int j = 0; j < b; ++j) {
        v.at(n - 2, j) = 1;
        v.at(n - 2, b + j) = -1;
    }
    v.at(n - 1, n - 2) = 1;
    v.at(n - 1, n - 1) = make_int(m);
    return v;
}

IntPoly alternating_poly(long long k) {
    if (k < 1) throw std::invalid_argument("alternating_poly needs k >= 1");
    std::vector<Int> c(static_cast<size_t>(k));
    for (long long i = 0; i < k; ++i) c[static_cast<size_t>(i)] = (k - 1 - i) % 2 == 0 ? 1 : -1;
    return IntPoly(std::move(c));
}

namespace {

IntPoly normalized(const IntPoly& p) {
    IntPoly q = p.shifted_down(p.valuation());
    return q.leading() > 0 ? q : -q;
}

// p(c) for a square integer matrix c, by Horner's rule
IntMatrix eval_at_matrix(const IntPoly& p, const IntMatrix& c) {
    int d = c.rows();
    IntMatrix acc(d, d);
    for (int deg = p.degree(); deg >= 0; --deg) {
        acc = acc * c;
        Int coeff = p.coeff(deg);
        for (int i = 0; i < d; ++i) acc.at(i, i) += coeff;
    }
    return acc;
}

} // namespace

std::vector<IntPoly> alexander_minors(const IntMatrix& v) {
    if (!v.is_square()) throw std::invalid_argument("Seifert matrix must be square");
    int n = v.rows();
    PolyMatrix a(static_cast<size_t>(n), std::vector<IntPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = IntPoly::t() * IntPoly(v.at(i, j)) - IntPoly(v.at(j, i));
    PolyMatrix minors = all_first_minors(a);
    std::vector<IntPoly> out;
    for (const auto& row : minors)
        for (const auto& p : row) {
            if (p.is_zero()) continue;
            IntPoly q = normalized(p);
            if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
        }
    return out;
}

AlexanderStatus nakanishi_test(const IntMatrix& v) {
    std::vector<IntPoly> minors = alexander_minors(v);
    if (minors.empty()) return AlexanderStatus::UnknottingAtLeast2; // zero ideal

    const IntPoly* f = nullptr;
    for (const auto& p : minors) {
        if (p.leading() != 1) continue;
        Int c0 = p.coeff(0);
        if (c0 != 1 && c0 != -1) continue;
        if (!f || p.degree() < f->degree()) f = &p;
    }
    if (!f) return AlexanderStatus::Indeterminate;
    int d = f->degree();
    if (d == 0) return AlexanderStatus::NoObstruction; // a unit lies in the ideal

    // t acts on Z[t]/(f) by the companion matrix; every other generator g
    // contributes the row span of g(C), which is already closed under t
    IntMatrix c(d, d);
    for (int i = 0; i + 1 < d; ++i) c.at(i, i + 1) = 1;
    for (int j = 0; j < d; ++j) c.at(d - 1, j) = -f->coeff(j);

    std::vector<IntMatrix> blocks;
    for (const auto& p : minors) {
        if (&p == f) continue;
        blocks.push_back(eval_at_matrix(p, c));
    }
    if (blocks.empty()) return AlexanderStatus::UnknottingAtLeast2; // ideal is (f), proper

    IntMatrix stacked(static_cast<int>(blocks.size()) * d, d);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                stacked.at(static_cast<int>(b) * d + i, j) = blocks[b].at(i, j);

    SmithForm s = smith_normal_form(stacked);
    int ones = 0;
    for (const Int& di : s.diagonal)
        if (di == 1) ++ones;
    return ones == d ? AlexanderStatus::NoObstruction : AlexanderStatus::UnknottingAtLeast2;
}

} // namespace pretzel
