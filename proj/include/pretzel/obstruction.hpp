#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pretzel/knot.hpp"
#include "pretzel/lens.hpp"
#include "pretzel/matrix.hpp"
#include "pretzel/plumbing.hpp"
#include "pretzel/poly.hpp"

namespace pretzel {

// ---------------------------------------------------------------------------
// Lattice embedding obstruction
// ---------------------------------------------------------------------------

// The rank-2 form [[-n, 1], [1, -2]] carried by the half-integral surgery
// trace; its determinant is 2n - 1.
IntMatrix surgery_block(long long n);

// Which crossing sign the unknotting scenario assumes. The search itself is
// identical; the label feeds report bookkeeping.
enum class CrossingSign { negative_case, positive_case };

// Searches for an integer matrix A of size (r+2) x (r+2) with
//   -A A^t = q (+) [[-n,1],[1,-2]],
// whose last two rows are (x_{r+2}, ..., x_3, 1, 0) and (0, ..., 0, -1, 1)
// with x_i >= 0, x_3 <= 1, x_i <= x_3 + ... + x_{i-1} + 1 for 3 < i < r+2,
// and whose leading r x r block (the rows pairing with q, restricted to the
// x-carrying columns) has determinant +-1. Returns the first certificate in
// the search's canonical order (deterministic across runs and thread counts),
// or nullopt after exhausting the space.
//
// Requires q symmetric negative definite with odd |det q| = 2n - 1; every
// returned certificate is re-verified by exact recomposition before return.
std::optional<IntMatrix> greene_search(const IntMatrix& q, long long n);

// ---------------------------------------------------------------------------
// Alexander module obstruction
// ---------------------------------------------------------------------------

// Seifert matrix of P(k, -k, 2m) on its genus-k spanning surface, k odd >= 1,
// m >= 1. Basis order: the k-1 curves through the first band column, the k-1
// curves through the second, then the two curves crossing the even column.
IntMatrix seifert_matrix(long long k, long long m);

// (t^k + 1) / (t + 1): alternating coefficients, degree k - 1. Determinant of
// the path block of the presentation matrix below; unit leading and trailing
// coefficients, which is what makes the quotient-module test conclusive.
IntPoly alternating_poly(long long k);

// Nonzero (2g-1) x (2g-1) minors of the presentation matrix tV - V^t,
// each normalized by stripping its power of t and making the leading
// coefficient positive, deduplicated.
std::vector<IntPoly> alexander_minors(const IntMatrix& v);

enum class AlexanderStatus { NoObstruction, UnknottingAtLeast2, Indeterminate };

// Decides whether the ideal generated by the (2g-1)-minors of tV - V^t is the
// whole ring. A proper ideal here forces unknotting number >= 2. Conclusive
// only when some minor has unit leading and trailing coefficients (true for
// the pretzel family this feeds); otherwise Indeterminate.
AlexanderStatus nakanishi_test(const IntMatrix& v);

// ---------------------------------------------------------------------------
// Correction-term symmetry obstruction
// ---------------------------------------------------------------------------

// Units ell mod k^2 with ell^2 = 6k + 4 (mod k^2), ascending; k odd >= 3.
// These are the only relabellings whose difference table can vanish mod Z.
std::vector<long long> congruence_filter(long long k);

struct EllDecomposition {
    long long a = 0;
    long long r = 0; // even residue of ell mod k
    long long A = 0; // (r^2 - 4) / k
};

// Writes ell (replaced by -ell mod k^2 when needed to make the residue even)
// as a*k + r and extracts A = (r^2 - 4)/k. Throws std::invalid_argument when
// A is not integral, i.e. when ell does not satisfy the congruence mod k.
EllDecomposition decompose_ell(long long ell, long long k);

// Z(i) = dS[ell*i] - dS[ell*(2s-i)] - dL[i] + dL[2s-i], indices mod D, where
// both tables have size D = 4s + 1. Requires 0 <= i <= s.
Rat compute_Z(long long i, long long ell, const std::vector<Rat>& d_sigma,
              const std::vector<Rat>& d_lens);

// Units ell mod D for which Z(i) = 0 for every i in 0..s, given the class
// table labelled by generator_class and the lens table of the same D.
std::vector<long long> passing_units(const ClassTable& table, const LensTable& lens,
                                     int generator_class);

enum class SymmetryStatus { PassesWith, FailsAllUnits, NotApplicable };

struct SymmetryResult {
    SymmetryStatus status = SymmetryStatus::NotApplicable;
    std::vector<long long> passing; // units surviving the full sweep
    std::vector<Rat> d_sigma;       // correction terms in labelled order
};

// Runs the full unit sweep for the boundary of the plumbing g against the
// lens space L(D, 2), D = |det Q|. Requires D = 1 mod 4 and a cyclic class
// group (unsupported_error otherwise). NotApplicable when the zero-labelled
// correction term differs from the lens value 0, in which case the sweep's
// hypothesis fails and nothing can be concluded.
SymmetryResult symmetry_obstruction(const PlumbingGraph& g);

// ---------------------------------------------------------------------------
// Aggregate verdict
// ---------------------------------------------------------------------------

enum class Verdict { UnknotOne, NotUnknotOne, Undetermined, TwoBridgeDeferred };
const char* verdict_name(Verdict v);

struct ObstructionReport {
    PretzelKnot input;
    PretzelKnot normal;
    bool reflected = false;
    bool all_odd = false;
    long long family = 0;     // p + q of the normal form
    std::optional<int> sigma; // defined for the one-even-parameter form only
    long long det_k = 0;      // signed pq + qr + rp of the normal form
    bool two_bridge = false;  // some parameter is +-1
    std::string alexander = "NotRun"; // NoObstruction|UnknottingAtLeast2|Indeterminate|NotRun|Skipped
    std::string greene = "NotRun";    // Absent|Present|NotRun|Skipped
    std::string symmetry = "NotRun";  // FailsAllUnits|PassesWith|NotApplicable|NotRun|Skipped
    Verdict verdict = Verdict::Undetermined;
    std::vector<std::string> notes;

    ObstructionReport(const PretzelKnot& in, const NormalForm& nf)
        : input(in), normal(nf.knot), reflected(nf.reflected) {}
};

// Full decision pipeline for one knot. Never throws on valid knots; when an
// obstruction exceeds its internal budget the report records "Skipped" for it
// and the verdict falls back to Undetermined rather than guessing.
ObstructionReport classify(const PretzelKnot& k);

} // namespace pretzel
