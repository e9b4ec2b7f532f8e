#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pretzel/knot.hpp"
#include "pretzel/matrix.hpp"

namespace pretzel {

// A weighted tree describing a plumbed 4-manifold whose boundary is the
// 3-manifold we compute correction terms for. Construction validates the
// conditions the d-invariant algorithm needs: connected tree, negative
// definite intersection form, at most one overweight vertex (w(v) > -deg(v)),
// and odd determinant (the class bookkeeping below reduces keys mod |det Q|,
// which separates classes only when that order is odd).
class PlumbingGraph {
  public:
    PlumbingGraph(std::vector<long long> weights, std::vector<std::pair<int, int>> edges);

    int size() const { return static_cast<int>(weights_.size()); }
    long long weight(int v) const { return weights_[v]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const IntMatrix& intersection_form() const { return q_; }
    const Int& determinant() const { return det_; }

  private:
    std::vector<long long> weights_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    IntMatrix q_;
    Int det_;
};

// Text format, one directive per line ('#' starts a comment):
//   v <index> <weight>   vertices, 1-based indices
//   e <index> <index>    edges
PlumbingGraph parse_plumbing(std::istream& in);
PlumbingGraph parse_plumbing_file(const std::string& path);
std::string format_plumbing(const PlumbingGraph& g);

// Hirzebruch-Jung continued fraction expansion a/b = c1 - 1/(c2 - 1/...),
// for a > b >= 1; all entries are >= 2 when b < a.
std::vector<long long> hj_chain(long long a, long long b);

// Path graph with weights -c[0], ..., -c[last]
PlumbingGraph linear_chain(const std::vector<long long>& c);

// Plumbing description of the double branched cover of P(p, q, 2m) in normal
// form (p odd >= 1, q odd, m >= 1): a path of p+2m-1 vertices weighted -2 with
// one q-weighted leaf attached to the p-th path vertex.
PlumbingGraph pretzel_plumbing(const PretzelKnot& k);

using Covector = std::vector<long long>;

struct SpinClassInfo {
    Covector rep;         // first enumerated maximizer attaining the square
    std::vector<Int> key; // K * adj(Q) reduced mod |det Q|; equal iff same class
    Rat square;           // max K Q^{-1} K^t over the class
    Rat d;                // (square + rank) / 4
    Int order;            // order of the class in the class group
};

struct ClassTable {
    Int det_q;  // det Q, sign included
    Int D;      // |det Q| = number of classes
    int rank = 0;
    IntMatrix adjugate_q;
    std::vector<SpinClassInfo> classes; // in order of first appearance
    std::map<std::vector<Int>, int> index_by_key;
    int zero_class = -1; // the class with all-zero key
    int unit_class = -1; // first class of full order D; -1 if the group is not cyclic

    std::vector<Int> key_of(const Covector& k) const;
    int class_of_key(const std::vector<Int>& key) const;
    int class_of(const Covector& k) const;
    int conjugate_class(int idx) const; // class of -K
};

// Runs the pushing-down enumeration over the whole startpath box
// (w(v)+2 <= K(v) <= -w(v)) and aggregates per-class maxima. Throws
// limit_error when the box exceeds the covector budget.
ClassTable compute_class_table(const PlumbingGraph& g);

// All covectors in the startpath box that initiate maximising paths, in
// enumeration order. Exponential in the graph size; intended for small graphs.
std::vector<Covector> charstar_covectors(const PlumbingGraph& g);

// phi[i] = class of i * g for the group labelling by a full-order class g
std::vector<int> label_classes(const ClassTable& t, int generator_class);

// Labelling generator for pretzel tables: the class of (2,0,...,0,-1) when it
// has full order, otherwise the first full-order class. Throws
// unsupported_error when the class group is not cyclic.
int pretzel_unit_class(const ClassTable& t);

} // namespace pretzel
