#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "pretzel/errors.hpp"
#include "pretzel/obstruction.hpp"

using namespace pretzel;

namespace {

IntMatrix pretzel_form(long long p, long long q, long long r) {
    return pretzel_plumbing(PretzelKnot(p, q, r)).intersection_form();
}

long long surgery_n(long long p, long long q, long long r) {
    Int d = knot_determinant(PretzelKnot(p, q, r));
    long long a = d.get_si();
    if (a < 0) a = -a;
    return (a + 1) / 2;
}

// Checks every defining property of an embedding certificate for (q, n):
// shape of the last two rows, the caps on the x-tuple, unimodularity of the
// leading block, and the exact recomposition -EE^t = q (+) [[-n,1],[1,-2]].
void check_certificate(const IntMatrix& e, const IntMatrix& q, long long n) {
    int r = q.rows();
    REQUIRE(e.rows() == r + 2);
    REQUIRE(e.cols() == r + 2);

    CHECK(-(e * e.transpose()) == IntMatrix::direct_sum(q, surgery_block(n)));

    REQUIRE(e.at(r, r) == 1);
    REQUIRE(e.at(r, r + 1) == 0);
    for (int c = 0; c < r; ++c) CHECK(e.at(r + 1, c) == 0);
    CHECK(e.at(r + 1, r) == -1);
    CHECK(e.at(r + 1, r + 1) == 1);

    // x_{3+j} sits at column r-1-j of the next-to-last row
    std::vector<long long> x(static_cast<size_t>(r));
    Int sq = 0;
    for (int j = 0; j < r; ++j) {
        x[static_cast<size_t>(j)] = e.at(r, r - 1 - j).get_si();
        sq += e.at(r, r - 1 - j) * e.at(r, r - 1 - j);
        CHECK(x[static_cast<size_t>(j)] >= 0);
    }
    CHECK(sq == make_int(n - 1));
    if (r > 0) CHECK(x[0] <= 1);
    long long prefix = r > 0 ? x[0] : 0;
    for (int j = 1; j <= r - 2; ++j) {
        CHECK(x[static_cast<size_t>(j)] <= prefix + 1);
        prefix += x[static_cast<size_t>(j)];
    }

    if (r > 0) {
        Int b = det(e.leading(r));
        CHECK((b == 1 || b == -1));
    }
}

// ---------------------------------------------------------------------------
// Plain exhaustive reference search: no gauge fixing, no pruning beyond the
// Gram constraints themselves. Enumerates candidate rows from precomputed
// norm pools and accepts only after a full recomposition check. Feasible for
// rank <= 5; used to cross-check presence/absence on the smallest cases.
// ---------------------------------------------------------------------------

long long ll_isqrt(long long v) {
    long long s = 0;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

void collect_norm_vectors(int d, long long left, std::vector<long long>& cur,
                          std::vector<std::vector<long long>>& out) {
    if (static_cast<int>(cur.size()) == d) {
        if (left == 0) out.push_back(cur);
        return;
    }
    long long cap = ll_isqrt(left);
    for (long long v = -cap; v <= cap; ++v) {
        cur.push_back(v);
        collect_norm_vectors(d, left - v * v, cur, out);
        cur.pop_back();
    }
}

struct BruteSearch {
    int r;
    long long n;
    IntMatrix q;
    IntMatrix target;
    std::map<long long, std::vector<std::vector<long long>>> pools;
    std::vector<long long> u1, u2;
    std::vector<std::vector<long long>> rows;
    long long nodes = 0;
    std::optional<IntMatrix> found;

    BruteSearch(const IntMatrix& form, long long surg)
        : r(form.rows()), n(surg), q(form),
          target(IntMatrix::direct_sum(form, surgery_block(surg))) {
        for (int i = 0; i < r; ++i) {
            long long norm = -q.at(i, i).get_si();
            if (!pools.count(norm)) {
                std::vector<long long> cur;
                collect_norm_vectors(r + 2, norm, cur, pools[norm]);
            }
        }
        u2.assign(static_cast<size_t>(r + 2), 0);
        u2[static_cast<size_t>(r)] = -1;
        u2[static_cast<size_t>(r + 1)] = 1;
    }

    static long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
        long long s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }

    bool x_admissible(const std::vector<long long>& x) const {
        long long sq = 0;
        for (long long v : x) sq += v * v;
        if (sq != n - 1) return false;
        if (r > 0 && x[0] > 1) return false;
        long long prefix = r > 0 ? x[0] : 0;
        for (int j = 1; j <= r - 2; ++j) {
            if (x[static_cast<size_t>(j)] > prefix + 1) return false;
            prefix += x[static_cast<size_t>(j)];
        }
        return true;
    }

    void place(int i) {
        if (found) return;
        REQUIRE(++nodes < 50000000);
        if (i == r) {
            IntMatrix e(r + 2, r + 2);
            for (int a = 0; a < r; ++a)
                for (int c = 0; c < r + 2; ++c)
                    e.at(a, c) = make_int(rows[static_cast<size_t>(a)][static_cast<size_t>(c)]);
            for (int c = 0; c < r + 2; ++c) {
                e.at(r, c) = make_int(u1[static_cast<size_t>(c)]);
                e.at(r + 1, c) = make_int(u2[static_cast<size_t>(c)]);
            }
            if (r > 0) {
                Int b = det(e.leading(r));
                if (b != 1 && b != -1) return;
            }
            if (-(e * e.transpose()) == target) found = e;
            return;
        }
        for (const auto& w : pools.at(-q.at(i, i).get_si())) {
            if (dot(w, u1) != 0 || dot(w, u2) != 0) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = dot(w, rows[static_cast<size_t>(j)]) == -q.at(i, j).get_si();
            if (!ok) continue;
            rows.push_back(w);
            place(i + 1);
            rows.pop_back();
            if (found) return;
        }
    }

    std::optional<IntMatrix> run() {
        long long base = ll_isqrt(n - 1);
        std::vector<long long> x(static_cast<size_t>(r), 0);
        while (true) {
            if (x_admissible(x)) {
                u1.assign(static_cast<size_t>(r + 2), 0);
                for (int j = 0; j < r; ++j) u1[static_cast<size_t>(r - 1 - j)] = x[static_cast<size_t>(j)];
                u1[static_cast<size_t>(r)] = 1;
                place(0);
                if (found) return found;
            }
            int j = 0;
            while (j < r && x[static_cast<size_t>(j)] == base) {
                x[static_cast<size_t>(j)] = 0;
                ++j;
            }
            if (j == r) return std::nullopt;
            ++x[static_cast<size_t>(j)];
        }
    }
};

} // namespace

TEST_CASE("surgery block shape") {
    CHECK(surgery_block(4) == IntMatrix::from_rows({{-4, 1}, {1, -2}}));
    CHECK(det(surgery_block(7)) == make_int(13));
}

TEST_CASE("embedding search input validation") {
    CHECK_THROWS_AS(greene_search(IntMatrix::from_rows({{-2, 1}, {0, -2}}), 2),
                    std::invalid_argument); // not symmetric
    CHECK_THROWS_AS(greene_search(IntMatrix::from_rows({{-2}}), 0),
                    std::invalid_argument); // n must be >= 1
    CHECK_THROWS_AS(greene_search(IntMatrix::from_rows({{1}}), 1),
                    std::invalid_argument); // not negative definite
    CHECK_THROWS_AS(greene_search(IntMatrix::from_rows({{-2}}), 1),
                    std::invalid_argument); // |det| = 2 != 2n - 1
    CHECK_THROWS_AS(greene_search(pretzel_form(3, -5, 2), 9),
                    std::invalid_argument); // right form, wrong n
    CHECK_THROWS_AS(greene_search(IntMatrix::from_rows({{-3, 0}, {0, -3}}), 5),
                    unsupported_error); // two rows of weight != -2

    IntMatrix big(65, 65);
    for (int i = 0; i < 65; ++i) big.at(i, i) = -1;
    CHECK_THROWS_AS(greene_search(big, 1), limit_error);

    SUBCASE("rank 0") {
        IntMatrix empty(0, 0);
        auto cert = greene_search(empty, 1);
        REQUIRE(cert.has_value());
        CHECK(*cert == IntMatrix::from_rows({{1, 0}, {-1, 1}}));
        check_certificate(*cert, empty, 1);
        CHECK_THROWS_AS(greene_search(empty, 2), std::invalid_argument);
    }
}

TEST_CASE("embedding certificates exist for the k = 1 family") {
    for (long long m = 1; m <= 5; ++m) {
        CAPTURE(m);
        IntMatrix q = pretzel_form(1, -3, 2 * m);
        long long n = surgery_n(1, -3, 2 * m);
        CHECK(n == 2 * m + 2);
        auto cert = greene_search(q, n);
        REQUIRE(cert.has_value());
        check_certificate(*cert, q, n);
    }

    SUBCASE("repeat calls return the identical certificate") {
        IntMatrix q = pretzel_form(1, -3, 4);
        auto a = greene_search(q, 6);
        auto b = greene_search(q, 6);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(*a == *b);
    }
}

TEST_CASE("no embedding across the negative-scenario grid") {
    for (long long k : {3, 5, 7, 9})
        for (long long m : {1, 2, 3}) {
            CAPTURE(k);
            CAPTURE(m);
            IntMatrix q = pretzel_form(k, -k - 2, 2 * m);
            CHECK_FALSE(greene_search(q, surgery_n(k, -k - 2, 2 * m)).has_value());
        }
}

TEST_CASE("no embedding in the positive scenario") {
    // the positive-crossing scenario pairs the P(k,-k,2) form with its own
    // determinant's surgery parameter, n = (k^2 + 1) / 2
    for (long long k : {3, 5, 7, 9}) {
        CAPTURE(k);
        IntMatrix q = pretzel_form(k, -k, 2);
        long long n = (k * k + 1) / 2;
        CHECK(surgery_n(k, -k, 2) == n);
        CHECK_FALSE(greene_search(q, n).has_value());
    }
}

TEST_CASE("embedding search agrees with a plain exhaustive search") {
    SUBCASE("single vertex of weight -1: present") {
        IntMatrix q = IntMatrix::from_rows({{-1}});
        auto cert = greene_search(q, 1);
        REQUIRE(cert.has_value());
        check_certificate(*cert, q, 1);
        CHECK(BruteSearch(q, 1).run().has_value());
    }
    SUBCASE("single vertex of weight -3: present") {
        IntMatrix q = IntMatrix::from_rows({{-3}});
        auto cert = greene_search(q, 2);
        REQUIRE(cert.has_value());
        check_certificate(*cert, q, 2);
        CHECK(BruteSearch(q, 2).run().has_value());
    }
    SUBCASE("P(1,-3,2): present") {
        IntMatrix q = pretzel_form(1, -3, 2);
        auto cert = greene_search(q, 4);
        REQUIRE(cert.has_value());
        auto brute = BruteSearch(q, 4).run();
        REQUIRE(brute.has_value());
        check_certificate(*brute, q, 4);
    }
    SUBCASE("P(1,-3,4): present") {
        IntMatrix q = pretzel_form(1, -3, 4);
        CHECK(greene_search(q, 6).has_value());
        CHECK(BruteSearch(q, 6).run().has_value());
    }
    SUBCASE("P(3,-5,2): absent") {
        IntMatrix q = pretzel_form(3, -5, 2);
        CHECK_FALSE(greene_search(q, 10).has_value());
        CHECK_FALSE(BruteSearch(q, 10).run().has_value());
    }
    SUBCASE("P(3,-3,2) in the positive scenario: absent") {
        IntMatrix q = pretzel_form(3, -3, 2);
        CHECK_FALSE(greene_search(q, 5).has_value());
        CHECK_FALSE(BruteSearch(q, 5).run().has_value());
    }
}

TEST_CASE("Seifert matrix shape and symmetrized determinant") {
    CHECK(seifert_matrix(3, 2) == IntMatrix::from_rows({{1, 0, 0, 0, 0, 0},
                                                        {1, 1, 0, 0, 0, 0},
                                                        {0, 0, -1, 0, 0, 0},
                                                        {0, 0, -1, -1, 0, 0},
                                                        {1, 1, -1, -1, 0, 0},
                                                        {0, 0, 0, 0, 1, 2}}));

    // det(V + V^t) recovers the knot determinant k^2 of P(k,-k,2m), up to sign
    for (long long k : {3, 5, 7})
        for (long long m : {1, 2}) {
            CAPTURE(k);
            CAPTURE(m);
            IntMatrix v = seifert_matrix(k, m);
            IntMatrix sym(v.rows(), v.cols());
            for (int i = 0; i < v.rows(); ++i)
                for (int j = 0; j < v.cols(); ++j) sym.at(i, j) = v.at(i, j) + v.at(j, i);
            Int d = det(sym);
            if (d < 0) d = -d;
            CHECK(d == make_int(k * k));
        }

    CHECK_THROWS_AS(seifert_matrix(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(seifert_matrix(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(seifert_matrix(17, 1), limit_error);
}

TEST_CASE("alternating quotient polynomial") {
    CHECK(alternating_poly(1) == IntPoly(1));
    CHECK(alternating_poly(3) == IntPoly(std::vector<Int>{1, -1, 1}));
    CHECK(alternating_poly(5) == IntPoly(std::vector<Int>{1, -1, 1, -1, 1}));
    for (long long k : {1, 3, 5, 7, 9}) {
        CAPTURE(k);
        IntPoly lhs = alternating_poly(k) * IntPoly(std::vector<Int>{1, 1});
        IntPoly rhs = IntPoly::monomial(1, static_cast<int>(k)) + IntPoly(1);
        CHECK(lhs == rhs);
    }
}

namespace {

// remainder of a by a monic divisor b, over the integers
IntPoly rem_monic(IntPoly a, const IntPoly& b) {
    REQUIRE(b.leading() == 1);
    while (!a.is_zero() && a.degree() >= b.degree()) {
        IntPoly head = IntPoly::monomial(a.coeff(a.degree()), a.degree() - b.degree());
        a = a - head * b;
    }
    return a;
}

bool coeffs_divisible(const IntPoly& p, long long m) {
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) % make_int(m) != 0) return false;
    return true;
}

} // namespace

TEST_CASE("minor ideal structure of the doubled-band surface") {
    for (long long k : {3, 5})
        for (long long m : {1, 2, 3}) {
            CAPTURE(k);
            CAPTURE(m);
            std::vector<IntPoly> minors = alexander_minors(seifert_matrix(k, m));
            IntPoly f = alternating_poly(k);
            IntPoly step(std::vector<Int>{make_int(-m), make_int(m)}); // m(t - 1)

            // both generators show up verbatim among the normalized minors
            CHECK(std::find(minors.begin(), minors.end(), f) != minors.end());
            CHECK(std::find(minors.begin(), minors.end(), step) != minors.end());

            // and every minor reduces to a multiple of m modulo the monic
            // generator, so the whole ideal sits inside (f, m)
            for (const auto& p : minors) CHECK(coeffs_divisible(rem_monic(p, f), m));
        }

    SUBCASE("m = 1 ideal contains 1: explicit combination") {
        for (long long k : {3, 5, 7}) {
            CAPTURE(k);
            IntPoly f = alternating_poly(k);
            // f - (t - 1) h = f(1) = 1, with h the exact quotient
            IntPoly tm1(std::vector<Int>{-1, 1});
            IntPoly num = f - IntPoly(1);
            IntPoly h;
            // synthetic division by t - 1
            {
                std::vector<Int> qc(static_cast<size_t>(num.degree()), 0);
                Int carry = 0;
                for (int i = num.degree(); i >= 1; --i) {
                    carry = num.coeff(i) + carry;
                    qc[static_cast<size_t>(i - 1)] = carry;
                }
                CHECK(num.coeff(0) + carry * (-1) == 0);
                h = IntPoly(std::move(qc));
            }
            CHECK(f - tm1 * h == IntPoly(1));
        }
    }
}

TEST_CASE("quotient-module test across the grid") {
    for (long long k : {3, 5, 7})
        for (long long m : {1, 2, 3, 4}) {
            CAPTURE(k);
            CAPTURE(m);
            AlexanderStatus s = nakanishi_test(seifert_matrix(k, m));
            if (m == 1)
                CHECK(s == AlexanderStatus::NoObstruction);
            else
                CHECK(s == AlexanderStatus::UnknottingAtLeast2);
        }
}

TEST_CASE("congruence filter") {
    CHECK(congruence_filter(3) == std::vector<long long>{2, 7});
    CHECK(congruence_filter(5) == std::vector<long long>{3, 22});
    CHECK(congruence_filter(7) == std::vector<long long>{12, 37});
    for (long long k : {3, 5, 7, 9, 11}) {
        CAPTURE(k);
        auto f = congruence_filter(k);
        CHECK(std::is_sorted(f.begin(), f.end()));
        for (long long ell : f) {
            CHECK((ell * ell) % (k * k) == (6 * k + 4) % (k * k));
            CHECK(std::gcd(ell, k) == 1);
            // closed under negation mod k^2
            CHECK(std::find(f.begin(), f.end(), k * k - ell) != f.end());
        }
    }
    CHECK_THROWS_AS(congruence_filter(4), std::invalid_argument);
    CHECK_THROWS_AS(congruence_filter(1), std::invalid_argument);
}

TEST_CASE("unit decomposition") {
    EllDecomposition d = decompose_ell(22, 5);
    CHECK(d.a == 4);
    CHECK(d.r == 2);
    CHECK(d.A == 0);

    // 3 has odd residue mod 5, so it is replaced by -3 = 22 first
    EllDecomposition e = decompose_ell(3, 5);
    CHECK(e.a == 4);
    CHECK(e.r == 2);
    CHECK(e.A == 0);

    EllDecomposition g = decompose_ell(12, 7);
    CHECK(g.a == 5);
    CHECK(g.r == 2);
    CHECK(g.A == 0);

    for (long long k : {3, 5, 7, 9})
        for (long long ell : congruence_filter(k)) {
            CAPTURE(k);
            CAPTURE(ell);
            EllDecomposition f = decompose_ell(ell, k);
            CHECK(f.r % 2 == 0);
            CHECK((f.r * f.r - 4) == k * f.A);
        }

    CHECK_THROWS_AS(decompose_ell(4, 5), std::invalid_argument);  // residue fails mod k
    CHECK_THROWS_AS(decompose_ell(10, 5), std::invalid_argument); // not a unit
    CHECK_THROWS_AS(decompose_ell(3, 4), std::invalid_argument);  // k must be odd >= 3
}

namespace {

// labelled correction terms of the double cover of P(k,-k,2)
std::vector<Rat> labelled_cover_terms(long long k) {
    ClassTable t = compute_class_table(pretzel_plumbing(PretzelKnot(k, -k, 2)));
    std::vector<int> phi = label_classes(t, pretzel_unit_class(t));
    std::vector<Rat> out(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) out[i] = t.classes[static_cast<size_t>(phi[i])].d;
    return out;
}

} // namespace

TEST_CASE("difference table Z") {
    std::vector<Rat> dS = labelled_cover_terms(5);
    std::vector<Rat> dL = lens_table(make_int(25)).d;

    SUBCASE("frozen values at ell = 22") {
        for (long long i = 0; i <= 6; ++i) {
            CAPTURE(i);
            CHECK(compute_Z(i, 22, dS, dL) == (i == 2 ? Rat(2) : Rat(0)));
        }
    }
    SUBCASE("Z is invariant under ell -> D - ell") {
        for (long long ell = 1; ell < 25; ++ell) {
            if (std::gcd(ell, 25LL) != 1) continue;
            for (long long i = 0; i <= 6; ++i) {
                CAPTURE(ell);
                CAPTURE(i);
                CHECK(compute_Z(i, ell, dS, dL) == compute_Z(i, 25 - ell, dS, dL));
            }
        }
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(compute_Z(0, 1, dS, std::vector<Rat>(24)), std::invalid_argument);
        CHECK_THROWS_AS(compute_Z(7, 1, dS, dL), std::invalid_argument); // i > s
        CHECK_THROWS_AS(compute_Z(-1, 1, dS, dL), std::invalid_argument);
        std::vector<Rat> odd(27), lodd(27);
        CHECK_THROWS_AS(compute_Z(0, 1, odd, lodd), std::invalid_argument); // 27 != 1 mod 4
    }
}

TEST_CASE("unit sweep outcomes") {
    SUBCASE("k = 3 passes exactly at the filter units") {
        SymmetryResult res = symmetry_obstruction(pretzel_plumbing(PretzelKnot(3, -3, 2)));
        CHECK(res.status == SymmetryStatus::PassesWith);
        CHECK(res.passing == std::vector<long long>{2, 7});
        CHECK(res.d_sigma[0] == 0);
    }
    SUBCASE("k in {5, 7, 9} fails every unit") {
        for (long long k : {5, 7, 9}) {
            CAPTURE(k);
            SymmetryResult res = symmetry_obstruction(pretzel_plumbing(PretzelKnot(k, -k, 2)));
            CHECK(res.status == SymmetryStatus::FailsAllUnits);
            CHECK(res.passing.empty());
            CHECK(res.d_sigma[0] == 0);
        }
    }
    SUBCASE("surviving units always satisfy the congruence") {
        for (long long k : {3, 5, 7}) {
            CAPTURE(k);
            ClassTable t = compute_class_table(pretzel_plumbing(PretzelKnot(k, -k, 2)));
            LensTable lens = lens_table(t.D);
            auto pass = passing_units(t, lens, pretzel_unit_class(t));
            auto filter = congruence_filter(k);
            for (long long ell : pass) {
                CAPTURE(ell);
                CHECK(std::find(filter.begin(), filter.end(), ell) != filter.end());
            }
        }
    }
    SUBCASE("status does not depend on the labelling generator") {
        for (long long k : {3, 5}) {
            CAPTURE(k);
            ClassTable t = compute_class_table(pretzel_plumbing(PretzelKnot(k, -k, 2)));
            LensTable lens = lens_table(t.D);
            for (size_t c = 0; c < t.classes.size(); ++c) {
                if (t.classes[c].order != t.D) continue;
                auto pass = passing_units(t, lens, static_cast<int>(c));
                CAPTURE(c);
                CHECK(pass.empty() == (k != 3));
                if (k == 3) {
                    REQUIRE(pass.size() == 2);
                    CHECK(pass[0] + pass[1] == 9); // a +-pair mod k^2
                }
            }
        }
    }
    SUBCASE("nonzero correction term at the zero class is inconclusive") {
        // a single -5 vertex bounds a lens space with d != 0 at the zero class
        SymmetryResult res = symmetry_obstruction(linear_chain({5}));
        CHECK(res.status == SymmetryStatus::NotApplicable);
        CHECK(res.d_sigma[0] == Rat(-1));
        CHECK(res.passing.empty());
    }
    SUBCASE("orders outside 1 mod 4 are rejected") {
        CHECK_THROWS_AS(symmetry_obstruction(pretzel_plumbing(PretzelKnot(3, -5, 2))),
                        unsupported_error); // |det| = 19 = 3 mod 4
    }
    SUBCASE("mismatched lens table is rejected") {
        ClassTable t = compute_class_table(pretzel_plumbing(PretzelKnot(3, -3, 2)));
        LensTable wrong = lens_table(make_int(13));
        CHECK_THROWS_AS(passing_units(t, wrong, pretzel_unit_class(t)), std::invalid_argument);
    }
}

TEST_CASE("classification pipeline end to end") {
    auto verdict_of = [](long long p, long long q, long long r) {
        return classify(PretzelKnot(p, q, r)).verdict;
    };

    SUBCASE("explicit unknotting certificates") {
        ObstructionReport rep = classify(PretzelKnot(3, -3, 2));
        CHECK(rep.verdict == Verdict::UnknotOne);
        REQUIRE(!rep.notes.empty());
        CHECK(rep.notes[0].find("P(3,-1,2)") != std::string::npos);

        CHECK(verdict_of(1, -3, 2) == Verdict::UnknotOne);
        CHECK(verdict_of(1, -3, 6) == Verdict::UnknotOne);
        CHECK(verdict_of(5, -1, 2) == Verdict::UnknotOne);
        CHECK(verdict_of(1, 1, 2) == Verdict::UnknotOne);
    }

    SUBCASE("negative-scenario family is ruled out by the embedding search") {
        ObstructionReport rep = classify(PretzelKnot(5, -7, 4));
        CHECK(rep.verdict == Verdict::NotUnknotOne);
        CHECK(rep.family == -2);
        CHECK(rep.greene == "Absent");
        CHECK(rep.alexander == "NotRun");
        CHECK(verdict_of(3, -5, 2) == Verdict::NotUnknotOne);
    }

    SUBCASE("balanced family at m = 1 is ruled out by the combined pair") {
        ObstructionReport rep = classify(PretzelKnot(5, -5, 2));
        CHECK(rep.verdict == Verdict::NotUnknotOne);
        CHECK(rep.family == 0);
        CHECK(rep.alexander == "NoObstruction");
        CHECK(rep.greene == "Absent");
        CHECK(rep.symmetry == "FailsAllUnits");
        CHECK(verdict_of(7, -7, 2) == Verdict::NotUnknotOne);
    }

    SUBCASE("balanced family at m >= 2 is ruled out by the module test") {
        ObstructionReport rep = classify(PretzelKnot(3, -3, 4));
        CHECK(rep.verdict == Verdict::NotUnknotOne);
        CHECK(rep.alexander == "UnknottingAtLeast2");
        CHECK(rep.greene == "NotRun");
        CHECK(classify(PretzelKnot(3, -3, -4)).verdict == Verdict::NotUnknotOne);
        CHECK(classify(PretzelKnot(3, -3, -4)).reflected);
    }

    SUBCASE("wide signature rules out directly") {
        ObstructionReport rep = classify(PretzelKnot(3, 3, 2));
        CHECK(rep.verdict == Verdict::NotUnknotOne);
        REQUIRE(rep.sigma.has_value());
        CHECK(*rep.sigma == -4);
    }

    SUBCASE("open families") {
        ObstructionReport rep = classify(PretzelKnot(5, -3, 2));
        CHECK(rep.verdict == Verdict::Undetermined);
        CHECK(rep.family == 2);
        CHECK(verdict_of(5, -3, 4) == Verdict::Undetermined);

        ObstructionReport tb = classify(PretzelKnot(3, 1, 4));
        CHECK(tb.verdict == Verdict::TwoBridgeDeferred);
        CHECK(tb.two_bridge);
        CHECK(tb.family == 4);
    }

    SUBCASE("all-odd pair criterion") {
        CHECK(verdict_of(1, 1, 3) == Verdict::UnknotOne);
        CHECK(verdict_of(5, 1, -3) == Verdict::UnknotOne);
        CHECK(verdict_of(3, 5, 7) == Verdict::NotUnknotOne);
        CHECK(classify(PretzelKnot(3, 5, 7)).all_odd);
    }

    SUBCASE("r = 0 criterion") {
        CHECK(verdict_of(3, -1, 0) == Verdict::UnknotOne);
        CHECK(verdict_of(5, -1, 0) == Verdict::NotUnknotOne);
        CHECK(verdict_of(5, -3, 0) == Verdict::NotUnknotOne);
    }

    SUBCASE("trivial-knot corner cases are never unknotting number one") {
        for (auto [p, q, r] : {std::tuple<long long, long long, long long>{1, -1, 2},
                               {1, 1, -1},
                               {3, -1, 2}}) {
            CAPTURE(p);
            ObstructionReport rep = classify(PretzelKnot(p, q, r));
            CHECK(rep.verdict == Verdict::NotUnknotOne);
            REQUIRE(!rep.notes.empty());
            CHECK(rep.notes[0].find("trivial") != std::string::npos);
        }
    }

    SUBCASE("reflection is recorded and does not change the verdict") {
        ObstructionReport rep = classify(PretzelKnot(5, -7, -2));
        CHECK(rep.reflected);
        CHECK(rep.normal == PretzelKnot(7, -5, 2));
        CHECK(rep.verdict == classify(PretzelKnot(7, -5, 2)).verdict);
    }

    SUBCASE("oversize inputs degrade to Skipped, not to a guess") {
        ObstructionReport rep = classify(PretzelKnot(61, -63, 6));
        CHECK(rep.verdict == Verdict::Undetermined);
        CHECK(rep.greene == "Skipped");
    }
}
