#include "pretzel/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace pretzel {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    IntMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("from_rows: ragged rows");
        int j = 0;
        for (long long v : row) m.at(i, j++) = make_int(v);
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix::operator*: shape mismatch");
    IntMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += aik * o.at(k, j);
        }
    return m;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = -at(i, j);
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::leading(int k) const {
    IntMatrix m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = at(i, j);
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative dimension");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1, t;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // exact by the Bareiss identity: prev divides t
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign < 0 ? Int(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

RatMatrix inverse(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
    int n = m.rows();
    RatMatrix a(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a.at(i, j) = make_rat(m.at(i, j), 1);
        a.at(i, n + i) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) throw singular_matrix_error("inverse: singular matrix");
        if (piv != c)
            for (int j = 0; j < 2 * n; ++j) std::swap(a.at(c, j), a.at(piv, j));
        Rat p = a.at(c, c);
        for (int j = 0; j < 2 * n; ++j) a.at(c, j) /= p;
        for (int i = 0; i < n; ++i) {
            if (i == c || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (int j = 0; j < 2 * n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = a.at(i, n + j);
    return inv;
}

IntMatrix adjugate(const IntMatrix& m) {
    Int d = det(m);
    if (d == 0) {
        // fall back to cofactor expansion; rare path, small matrices only
        int n = m.rows();
        IntMatrix adj(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                IntMatrix minor(n - 1, n - 1);
                for (int r = 0, rr = 0; r < n; ++r) {
                    if (r == i) continue;
                    for (int c = 0, cc = 0; c < n; ++c) {
                        if (c == j) continue;
                        minor.at(rr, cc++) = m.at(r, c);
                    }
                    ++rr;
                }
                Int cof = det(minor);
                adj.at(j, i) = ((i + j) % 2 == 0) ? cof : Int(-cof);
            }
        return adj;
    }
    RatMatrix inv = inverse(m);
    int n = m.rows();
    IntMatrix adj(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat e = inv.at(i, j) * make_rat(d, 1);
            if (e.get_den() != 1) throw internal_error("adjugate: non-integral entry");
            adj.at(i, j) = e.get_num();
        }
    return adj;
}

bool sylvester_negative_definite(const IntMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("sylvester_negative_definite: not symmetric");
    for (int k = 1; k <= m.rows(); ++k) {
        Int d = det(m.leading(k));
        if (k % 2 == 1 ? d >= 0 : d <= 0) return false;
    }
    return true;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    int R = a.rows(), C = a.cols();
    int n = std::min(R, C);
    SmithForm out;
    for (int t = 0; t < n; ++t) {
        // smallest nonzero |entry| in the trailing submatrix; ties broken row-major
        auto find_pivot = [&]() -> std::pair<int, int> {
            int bi = -1, bj = -1;
            Int best;
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j) {
                    if (a.at(i, j) == 0) continue;
                    Int v = abs(a.at(i, j));
                    if (bi < 0 || v < best) { best = v; bi = i; bj = j; }
                }
            return {bi, bj};
        };
        auto [pi, pj] = find_pivot();
        if (pi < 0) break; // submatrix all zero
        for (;;) {
            if (pi != t)
                for (int j = 0; j < C; ++j) std::swap(a.at(t, j), a.at(pi, j));
            if (pj != t)
                for (int i = 0; i < R; ++i) std::swap(a.at(i, t), a.at(i, pj));
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t); // truncated division
                if (q != 0)
                    for (int j = t; j < C; ++j) a.at(i, j) -= q * a.at(t, j);
                if (a.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < C; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                if (q != 0)
                    for (int i = t; i < R; ++i) a.at(i, j) -= q * a.at(i, t);
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                std::tie(pi, pj) = find_pivot();
                continue;
            }
            // pivot must divide the rest of the submatrix
            int vi = -1, vj = -1;
            for (int i = t + 1; i < R && vi < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) { vi = i; vj = j; break; }
            if (vi < 0) break;
            for (int j = 0; j < C; ++j) a.at(t, j) += a.at(vi, j);
            std::tie(pi, pj) = find_pivot();
        }
        out.diagonal.push_back(abs(a.at(t, t)));
    }
    while (static_cast<int>(out.diagonal.size()) < n) out.diagonal.emplace_back(0);
    for (size_t i = 0; i + 1 < out.diagonal.size(); ++i)
        if (out.diagonal[i + 1] != 0 && (out.diagonal[i] == 0 || out.diagonal[i + 1] % out.diagonal[i] != 0))
            throw internal_error("smith_normal_form: divisibility chain broken");
    return out;
}

std::optional<std::vector<Int>> solve_left_integral(const IntMatrix& m, const std::vector<Int>& v) {
    if (!m.is_square() || static_cast<int>(v.size()) != m.rows())
        throw std::invalid_argument("solve_left_integral: shape mismatch");
    RatMatrix inv = inverse(m);
    std::vector<Int> x(m.rows());
    for (int j = 0; j < m.cols(); ++j) {
        Rat s = 0;
        for (int i = 0; i < m.rows(); ++i) s += make_rat(v[i], 1) * inv.at(i, j);
        if (s.get_den() != 1) return std::nullopt;
        x[j] = s.get_num();
    }
    return x;
}

std::vector<Rat> row_times(const std::vector<Int>& v, const RatMatrix& m) {
    if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("row_times: shape mismatch");
    std::vector<Rat> out(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        Rat s = 0;
        for (int i = 0; i < m.rows(); ++i)
            if (v[i] != 0) s += make_rat(v[i], 1) * m.at(i, j);
        out[j] = s;
    }
    return out;
}

Rat quadratic_form(const std::vector<Int>& v, const RatMatrix& m) {
    std::vector<Rat> vm = row_times(v, m);
    Rat s = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s += make_rat(v[i], 1) * vm[i];
    return s;
}

} // namespace pretzel
