#include <algorithm>
#include <stdexcept>
#include <cstdlib>
#include <optional>
#include <vector>

#include "pretzel/errors.hpp"
#include "pretzel/obstruction.hpp"

namespace pretzel {

IntMatrix surgery_block(long long n) {
    IntMatrix r(2, 2);
    r.at(0, 0) = make_int(-n);
    r.at(0, 1) = make_int(1);
    r.at(1, 0) = make_int(1);
    r.at(1, 1) = make_int(-2);
    return r;
}

namespace {

constexpr int kMaxRank = 64;
constexpr long long kNodeBudget = 5000000;

long long isqrt_ll(long long v) {
    if (v < 0) return -1;
    long long s = static_cast<long long>(isqrt_floor(make_int(v)).get_si());
    while (s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

// Row layout of a certificate E, dimension r+2:
//   rows 0..r-1   pair against the rows of q,
//   row r         = (x_{r+2}, ..., x_3, 1, 0),
//   row r+1       = (0, ..., 0, -1, 1).
// The x-values sit in columns 0..r-1 (column c carries x_{r+2-c}), so the
// column gauge available to the search is: permutations of columns 0..r-1
// that preserve the x-values, and sign flips of columns whose x-value is 0.
// The unimodular side condition lives on the square over those x-columns,
// rows 0..r-1 by columns 0..r-1.
struct Search {
    int r = 0;
    long long n = 0;
    std::vector<std::vector<long long>> qll; // the form, negated diagonal is the row norm
    std::vector<int> norm2;                  // q-indices of norm-2 rows, increasing
    int deferred = -1;                       // q-index of the single heavier row, or -1
    bool chain_connected = false;
    IntMatrix target;                        // q (+) surgery_block(n)

    std::vector<long long> x;    // x[0] = x_3, ascending subscripts
    std::vector<long long> xcol; // per column: xcol[c] = x[r-1-c]
    std::vector<std::pair<long long, int>> hist; // value counts of the partial tuple
    size_t need = 0;                             // minimum size of the largest value class
    std::vector<std::vector<long long>> placed;
    std::vector<char> col_used;
    long long nodes = 0;
    std::optional<IntMatrix> found;

    void bump() {
        if (++nodes > kNodeBudget) throw limit_error("embedding search exceeded its node budget");
    }

    bool run() {
        x.assign(static_cast<size_t>(r), 0);
        need = chain_connected ? norm2.size() : 0;
        return enumerate_x(0, n - 1, 0);
    }

    bool class_bound_ok(int slots_left) const {
        if (need == 0) return true;
        size_t best = 0;
        for (const auto& [value, count] : hist) best = std::max(best, static_cast<size_t>(count));
        return best + static_cast<size_t>(slots_left) >= need;
    }

    // Caps: x[0] <= 1, x[j] <= x[0]+...+x[j-1]+1 for 1 <= j <= r-2, and the
    // final slot is free apart from the norm budget. A connected set of
    // norm-2 rows touches only columns sharing one x-value, and touches at
    // least as many columns as there are rows, which prunes most tuples.
    bool enumerate_x(int j, long long sq_left, long long prefix) {
        bump();
        if (j == r) {
            if (sq_left != 0) return false;
            xcol.assign(static_cast<size_t>(r), 0);
            for (int c = 0; c < r; ++c) xcol[static_cast<size_t>(c)] = x[static_cast<size_t>(r - 1 - c)];
            placed.clear();
            col_used.assign(static_cast<size_t>(r), 0);
            return place_row(0);
        }
        long long cap = isqrt_ll(sq_left);
        if (j == 0) cap = std::min(cap, 1LL);
        else if (j <= r - 2) cap = std::min(cap, prefix + 1);
        for (long long v = 0; v <= cap; ++v) {
            auto it = std::find_if(hist.begin(), hist.end(), [v](const auto& e) { return e.first == v; });
            if (it == hist.end()) it = hist.insert(hist.end(), {v, 0});
            ++it->second;
            x[static_cast<size_t>(j)] = v;
            const bool done = class_bound_ok(r - 1 - j) && enumerate_x(j + 1, sq_left - v * v, prefix + v);
            it = std::find_if(hist.begin(), hist.end(), [v](const auto& e) { return e.first == v; });
            if (--it->second == 0) hist.erase(it);
            if (done) return true;
        }
        return false;
    }

    // A fresh column must be the smallest unused one of its x-value, and a
    // fresh column of x-value 0 enters with coefficient +1 (sign gauge).
    bool fresh_ok(int c, int other) const {
        if (col_used[static_cast<size_t>(c)]) return true;
        for (int d = 0; d < c; ++d) {
            if (d == other) continue;
            if (!col_used[static_cast<size_t>(d)] && xcol[static_cast<size_t>(d)] == xcol[static_cast<size_t>(c)]) return false;
        }
        return true;
    }

    bool place_row(size_t i) {
        if (i == norm2.size()) return finish();
        const int qi = norm2[i];
        for (int a = 0; a < r; ++a) {
            for (int b = a + 1; b < r; ++b) {
                if (xcol[static_cast<size_t>(a)] != xcol[static_cast<size_t>(b)]) continue;
                if (!fresh_ok(a, b) || !fresh_ok(b, a)) continue;
                const bool zero_pair = xcol[static_cast<size_t>(a)] == 0;
                for (int sa = 1; sa >= -1; sa -= 2) {
                    if (zero_pair && !col_used[static_cast<size_t>(a)] && sa != 1) continue;
                    for (int sb = 1; sb >= -1; sb -= 2) {
                        if (!zero_pair && sb != -sa) continue;
                        if (zero_pair && !col_used[static_cast<size_t>(b)] && sb != 1) continue;
                        bump();
                        bool ok = true;
                        for (size_t j = 0; j < i && ok; ++j) {
                            long long dot = sa * placed[j][static_cast<size_t>(a)] + sb * placed[j][static_cast<size_t>(b)];
                            ok = dot == -qll[static_cast<size_t>(qi)][static_cast<size_t>(norm2[j])];
                        }
                        if (!ok) continue;
                        std::vector<long long> w(static_cast<size_t>(r) + 2, 0);
                        w[static_cast<size_t>(a)] = sa;
                        w[static_cast<size_t>(b)] = sb;
                        placed.push_back(std::move(w));
                        const char ua = col_used[static_cast<size_t>(a)], ub = col_used[static_cast<size_t>(b)];
                        col_used[static_cast<size_t>(a)] = col_used[static_cast<size_t>(b)] = 1;
                        const bool done = place_row(i + 1);
                        col_used[static_cast<size_t>(a)] = ua;
                        col_used[static_cast<size_t>(b)] = ub;
                        placed.pop_back();
                        if (done) return true;
                    }
                }
            }
        }
        return false;
    }

    std::vector<Int> u1_vec() const {
        std::vector<Int> u(static_cast<size_t>(r) + 2, make_int(0));
        for (int c = 0; c < r; ++c) u[static_cast<size_t>(c)] = make_int(xcol[static_cast<size_t>(c)]);
        u[static_cast<size_t>(r)] = make_int(1);
        return u;
    }

    bool finish() {
        if (deferred < 0) return assemble({});
        return solve_deferred();
    }

    // The heavy row is pinned by its products against every placed row plus
    // both tail rows: r+1 independent conditions in r+2 unknowns, so the
    // integral solutions form a line and the norm condition is a quadratic.
    bool solve_deferred() {
        bump();
        const int dim = r + 2;
        IntMatrix base(r + 1, dim);
        std::vector<Int> rhs(static_cast<size_t>(r) + 1, make_int(0));
        for (size_t j = 0; j < placed.size(); ++j) {
            for (int c = 0; c < dim; ++c) base.at(static_cast<int>(j), c) = make_int(placed[j][static_cast<size_t>(c)]);
            rhs[j] = make_int(-qll[static_cast<size_t>(deferred)][static_cast<size_t>(norm2[j])]);
        }
        std::vector<Int> u1 = u1_vec();
        for (int c = 0; c < dim; ++c) base.at(r - 1, c) = u1[static_cast<size_t>(c)];
        base.at(r, r) = make_int(-1);
        base.at(r, r + 1) = make_int(1);

        // Kernel generator via signed maximal minors.
        std::vector<Int> g(static_cast<size_t>(dim), make_int(0));
        bool nonzero = false;
        for (int c = 0; c < dim; ++c) {
            IntMatrix sub(r + 1, dim - 1);
            for (int i = 0; i <= r; ++i) {
                int k = 0;
                for (int d = 0; d < dim; ++d) {
                    if (d == c) continue;
                    sub.at(i, k++) = base.at(i, d);
                }
            }
            Int m = det(sub);
            if ((c & 1) != 0) m = -m;
            if (m != 0) nonzero = true;
            g[static_cast<size_t>(c)] = m;
        }
        if (!nonzero) throw internal_error("embedding solve lost rank");
        Int content = make_int(0);
        for (const Int& v : g) content = gcd_int(content, v);
        for (Int& v : g) v /= content;

        IntMatrix square(dim, dim);
        for (int i = 0; i <= r; ++i)
            for (int c = 0; c < dim; ++c) square.at(i, c) = base.at(i, c);
        for (int c = 0; c < dim; ++c) square.at(dim - 1, c) = g[static_cast<size_t>(c)];
        RatMatrix inv = inverse(square);

        std::vector<Rat> wb(static_cast<size_t>(dim)), wd(static_cast<size_t>(dim));
        for (int c = 0; c < dim; ++c) {
            Rat acc(0);
            for (int j = 0; j <= r; ++j) acc += inv.at(c, j) * Rat(rhs[static_cast<size_t>(j)]);
            wb[static_cast<size_t>(c)] = acc;
            wd[static_cast<size_t>(c)] = inv.at(c, dim - 1);
        }

        const long long norm = -qll[static_cast<size_t>(deferred)][static_cast<size_t>(deferred)];
        Rat qa(0), qb(0), qc(0);
        for (int c = 0; c < dim; ++c) {
            qa += wd[static_cast<size_t>(c)] * wd[static_cast<size_t>(c)];
            qb += Rat(2) * wb[static_cast<size_t>(c)] * wd[static_cast<size_t>(c)];
            qc += wb[static_cast<size_t>(c)] * wb[static_cast<size_t>(c)];
        }
        qc -= Rat(make_int(norm));

        Int lcm = make_int(1);
        for (const Rat* t : {&qa, &qb, &qc}) {
            Int den = t->get_den();
            lcm = lcm / gcd_int(lcm, den) * den;
        }
        const Int a = Rat(qa * Rat(lcm)).get_num();
        const Int b = Rat(qb * Rat(lcm)).get_num();
        const Int c0 = Rat(qc * Rat(lcm)).get_num();
        if (a == 0) throw internal_error("embedding solve lost its direction vector");

        Int disc = b * b - 4 * a * c0;
        if (disc < 0) return false;
        Int s = isqrt_floor(disc);
        if (s * s != disc) return false;
        for (int sign = 1; sign >= -1; sign -= 2) {
            if (sign < 0 && s == 0) break;
            Int num = -b + (sign > 0 ? s : -s);
            Int den = 2 * a;
            if (num % den != 0) continue;
            Rat lambda(num / den);
            std::vector<Int> w(static_cast<size_t>(dim));
            bool integral = true;
            for (int c = 0; c < dim && integral; ++c) {
                Rat val = wb[static_cast<size_t>(c)] + lambda * wd[static_cast<size_t>(c)];
                integral = val.get_den() == 1;
                if (integral) w[static_cast<size_t>(c)] = val.get_num();
            }
            if (!integral) continue;
            if (assemble(w)) return true;
        }
        return false;
    }

    static Int gcd_int(const Int& a, const Int& b) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }

    bool assemble(const std::vector<Int>& heavy) {
        bump();
        const int dim = r + 2;
        IntMatrix e(dim, dim);
        size_t next = 0;
        for (int i = 0; i < r; ++i) {
            if (i == deferred) {
                for (int c = 0; c < dim; ++c) e.at(i, c) = heavy[static_cast<size_t>(c)];
            } else {
                const std::vector<long long>& row = placed[next++];
                for (int c = 0; c < dim; ++c) e.at(i, c) = make_int(row[static_cast<size_t>(c)]);
            }
        }
        std::vector<Int> u1 = u1_vec();
        for (int c = 0; c < dim; ++c) e.at(r, c) = u1[static_cast<size_t>(c)];
        e.at(r + 1, r) = make_int(-1);
        e.at(r + 1, r + 1) = make_int(1);

        Int block = det(e.leading(r));
        if (block != 1 && block != -1) return false;
        if (-(e * e.transpose()) != target) throw internal_error("embedding candidate failed recomposition");
        found = e;
        return true;
    }
};

} // namespace

std::optional<IntMatrix> greene_search(const IntMatrix& q, long long n) {
    if (!q.is_square() || !q.is_symmetric()) throw std::invalid_argument("embedding search requires a symmetric form");
    if (n < 1) throw std::invalid_argument("surgery parameter must be positive");
    const int r = q.rows();
    if (r > kMaxRank) throw limit_error("embedding search limited to rank 64 forms");
    if (r > 0 && !sylvester_negative_definite(q)) throw std::invalid_argument("embedding search requires a negative-definite form");
    Int d = det(q);
    if (d < 0) d = -d;
    if (d != make_int(2 * n - 1)) throw std::invalid_argument("surgery parameter inconsistent with the form determinant");

    if (r == 0) {
        if (n != 1) return std::nullopt;
        IntMatrix e(2, 2);
        e.at(0, 0) = make_int(1);
        e.at(1, 0) = make_int(-1);
        e.at(1, 1) = make_int(1);
        return e;
    }

    Search s;
    s.r = r;
    s.n = n;
    s.qll.assign(static_cast<size_t>(r), std::vector<long long>(static_cast<size_t>(r), 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) s.qll[static_cast<size_t>(i)][static_cast<size_t>(j)] = q.at(i, j).get_si();
    for (int i = 0; i < r; ++i) {
        if (s.qll[static_cast<size_t>(i)][static_cast<size_t>(i)] == -2) {
            s.norm2.push_back(i);
        } else if (s.deferred < 0) {
            s.deferred = i;
        } else {
            throw unsupported_error("embedding search supports at most one vertex of weight other than -2");
        }
    }

    if (!s.norm2.empty()) {
        std::vector<int> comp(s.norm2.size(), -1);
        std::vector<size_t> stack{0};
        comp[0] = 0;
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < s.norm2.size(); ++j) {
                if (comp[j] < 0 && s.qll[static_cast<size_t>(s.norm2[i])][static_cast<size_t>(s.norm2[j])] != 0) {
                    comp[j] = 0;
                    stack.push_back(j);
                }
            }
        }
        s.chain_connected = std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
    }

    s.target = IntMatrix::direct_sum(q, surgery_block(n));
    s.run();
    return s.found;
}

} // namespace pretzel
