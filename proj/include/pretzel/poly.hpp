#pragma once

#include <string>
#include <vector>

#include "pretzel/matrix.hpp"

namespace pretzel {

// Dense polynomial in one variable t over arbitrary-precision integers.
class IntPoly {
  public:
    IntPoly() = default; // zero
    IntPoly(long long c);
    IntPoly(const Int& c);
    explicit IntPoly(std::vector<Int> coeffs); // coeffs[i] is the t^i coefficient
    static IntPoly t();
    static IntPoly monomial(const Int& c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Int coeff(int i) const;
    const Int& leading() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const = default;

    Int eval(const Int& x) const;

    // exponent of the largest power of t dividing this; 0 for the zero polynomial
    int valuation() const;
    IntPoly shifted_down(int k) const; // exact division by t^k

    std::string to_string() const; // e.g. "t^2 - t + 1"

  private:
    void trim();
    std::vector<Int> c_;
};

using PolyMatrix = std::vector<std::vector<IntPoly>>;

// Exact determinant of a square polynomial matrix: evaluated at enough integer
// points for the degree bound, then Lagrange-interpolated over the rationals.
IntPoly det(const PolyMatrix& m);

// minors[i][j] = det of m with row i and column j deleted (all first minors of
// a square matrix, computed together via adjugates at each sample point)
PolyMatrix all_first_minors(const PolyMatrix& m);

} // namespace pretzel
