#include "pretzel/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "pretzel/errors.hpp"

namespace pretzel {

IntPoly::IntPoly(long long c) {
    if (c != 0) c_.push_back(make_int(c));
}

IntPoly::IntPoly(const Int& c) {
    if (c != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::t() { return monomial(1, 1); }

IntPoly IntPoly::monomial(const Int& c, int deg) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(deg + 1, Int(0));
        p.c_[deg] = c;
    }
    return p;
}

Int IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw internal_error("leading coefficient of zero polynomial");
    return c_.back();
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

int IntPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

IntPoly IntPoly::shifted_down(int k) const {
    if (k == 0) return *this;
    if (static_cast<int>(c_.size()) <= k) return IntPoly();
    for (int i = 0; i < k; ++i) assert(c_[i] == 0);
    return IntPoly(std::vector<Int>(c_.begin() + k, c_.end()));
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = c_[i];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

namespace {

int max_entry_degree(const PolyMatrix& m) {
    int d = 0;
    for (const auto& row : m)
        for (const auto& p : row) d = std::max(d, p.degree());
    return d;
}

IntMatrix eval_matrix(const PolyMatrix& m, const Int& x) {
    size_t n = m.size();
    IntMatrix r(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r.at(i, j) = m[i][j].eval(x);
    return r;
}

// Sample points 1, -1, 2, -2, ... avoiding 0, where these matrices degenerate.
Int sample_point(int idx) {
    int k = idx / 2 + 1;
    return Int(idx % 2 == 0 ? k : -k);
}

// Lagrange interpolation through (xs[i], ys[i]); the result must have integer
// coefficients since the underlying quantity is an integer polynomial.
IntPoly interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    size_t n = xs.size();
    std::vector<Rat> acc(n, Rat(0));
    std::vector<Rat> basis;
    for (size_t i = 0; i < n; ++i) {
        basis.assign(1, Rat(1)); // product of (x - xs[j]) / (xs[i] - xs[j])
        Rat denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis.push_back(Rat(0));
            for (size_t d = basis.size() - 1; d > 0; --d)
                basis[d] = basis[d - 1] - Rat(xs[j]) * basis[d];
            basis[0] = -Rat(xs[j]) * basis[0];
            denom *= Rat(xs[i] - xs[j]);
        }
        Rat scale = Rat(ys[i]) / denom;
        for (size_t d = 0; d < basis.size(); ++d) acc[d] += scale * basis[d];
    }
    std::vector<Int> coeffs(n);
    for (size_t d = 0; d < n; ++d) {
        if (acc[d].get_den() != 1)
            throw internal_error("polynomial interpolation produced a non-integer coefficient");
        coeffs[d] = acc[d].get_num();
    }
    return IntPoly(std::move(coeffs));
}

} // namespace

IntPoly det(const PolyMatrix& m) {
    size_t n = m.size();
    if (n == 0) return IntPoly(1);
    for (const auto& row : m)
        if (row.size() != n) throw internal_error("polynomial determinant of non-square matrix");
    int bound = static_cast<int>(n) * max_entry_degree(m);
    int npts = bound + 1;
    std::vector<Int> xs(npts), ys(npts);
    for (int i = 0; i < npts; ++i) {
        xs[i] = sample_point(i);
        ys[i] = det(eval_matrix(m, xs[i]));
    }
    return interpolate(xs, ys);
}

PolyMatrix all_first_minors(const PolyMatrix& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw internal_error("first minors of non-square matrix");
    if (n == 0) return {};
    if (n == 1) return {{IntPoly(1)}};
    int bound = static_cast<int>(n - 1) * max_entry_degree(m);
    int npts = bound + 1;

    // minor_{ij}(x) = (-1)^{i+j} adj(A(x))_{ji} when A(x) is invertible; at the
    // few singular sample points fall back to deleting row/column directly.
    std::vector<std::vector<std::vector<Int>>> vals(
        n, std::vector<std::vector<Int>>(n, std::vector<Int>(npts)));
    std::vector<Int> xs(npts);
    for (int p = 0; p < npts; ++p) {
        xs[p] = sample_point(p);
        IntMatrix a = eval_matrix(m, xs[p]);
        Int d = det(a);
        if (d != 0) {
            IntMatrix adj = adjugate(a);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    Int v = adj.at(j, i);
                    if ((i + j) % 2 == 1) v = -v;
                    vals[i][j][p] = v;
                }
        } else {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    IntMatrix sub(n - 1, n - 1);
                    for (size_t r = 0, rr = 0; r < n; ++r) {
                        if (r == i) continue;
                        for (size_t c = 0, cc = 0; c < n; ++c) {
                            if (c == j) continue;
                            sub.at(rr, cc) = a.at(r, c);
                            ++cc;
                        }
                        ++rr;
                    }
                    vals[i][j][p] = det(sub);
                }
        }
    }
    PolyMatrix out(n, std::vector<IntPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = interpolate(xs, vals[i][j]);
    return out;
}

} // namespace pretzel
