#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "pretzel/errors.hpp"

namespace pretzel {

using Int = mpz_class;
using Rat = mpq_class;

// reduced rational with positive denominator
// gmpxx has no long long constructor; on LP64 a plain long carries the value
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }
static_assert(sizeof(long) == sizeof(long long));

Rat make_rat(const Int& num, const Int& den);

// "a/b" reduced with b > 0, integers without the "/1"
std::string rat_to_string(const Rat& q);

Int isqrt_floor(const Int& n); // n >= 0

// Dense matrix over arbitrary-precision integers. Row-major, 0-indexed.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const = default;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    // leading principal minor block [0..k) x [0..k)
    IntMatrix leading(int k) const;

    std::string to_string() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Dense matrix over exact rationals.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const = default;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Fraction-free Bareiss determinant. det of the 0x0 matrix is 1.
Int det(const IntMatrix& m);

// Exact inverse; throws singular_matrix_error when det = 0.
RatMatrix inverse(const IntMatrix& m);

// det(m) * inverse(m); always integral.
IntMatrix adjugate(const IntMatrix& m);

// Sylvester criterion for a symmetric form: sign of the i-th leading principal
// minor must be (-1)^i for every i. Vacuously true for the 0x0 form.
bool sylvester_negative_definite(const IntMatrix& m);

struct SmithForm {
    std::vector<Int> diagonal; // d1 | d2 | ... , non-negative, zeros trailing
};

SmithForm smith_normal_form(const IntMatrix& m);

// Integral solution x of x * M = v for square nonsingular M, if one exists.
std::optional<std::vector<Int>> solve_left_integral(const IntMatrix& m, const std::vector<Int>& v);

// v * M over the rationals (v integral row vector)
std::vector<Rat> row_times(const std::vector<Int>& v, const RatMatrix& m);

// v * M * v^t for symmetric rational M
Rat quadratic_form(const std::vector<Int>& v, const RatMatrix& m);

} // namespace pretzel
