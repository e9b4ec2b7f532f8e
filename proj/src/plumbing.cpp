#include "pretzel/plumbing.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "pretzel/errors.hpp"

namespace pretzel {

namespace {

constexpr long long kBoxBudget = 4000000;   // startpath covectors per enumeration
constexpr long long kPathStepCap = 10000000; // safety net; paths provably terminate

} // namespace

PlumbingGraph::PlumbingGraph(std::vector<long long> weights,
                             std::vector<std::pair<int, int>> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
    int n = static_cast<int>(weights_.size());
    if (n == 0) throw unsupported_error("plumbing graph has no vertices");
    if (static_cast<int>(edges_.size()) != n - 1)
        throw unsupported_error("plumbing graph is not a tree: expected " +
                                std::to_string(n - 1) + " edges, got " +
                                std::to_string(edges_.size()));
    adj_.assign(n, {});
    for (auto [a, b] : edges_) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b)
            throw unsupported_error("plumbing edge endpoint out of range");
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    // connected + right edge count = tree
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    if (reached != n) throw unsupported_error("plumbing graph is not connected");

    int overweight = 0;
    for (int v = 0; v < n; ++v)
        if (weights_[v] > -static_cast<long long>(adj_[v].size())) ++overweight;
    if (overweight > 1)
        throw unsupported_error("plumbing graph has " + std::to_string(overweight) +
                                " overweight vertices; the d-invariant algorithm allows "
                                "at most one");

    q_ = IntMatrix(n, n);
    for (int v = 0; v < n; ++v) q_.at(v, v) = make_int(weights_[v]);
    for (auto [a, b] : edges_) {
        q_.at(a, b) = 1;
        q_.at(b, a) = 1;
    }
    if (!sylvester_negative_definite(q_))
        throw unsupported_error("plumbing intersection form is not negative definite");
    det_ = det(q_);
    if (det_ % 2 == 0)
        throw unsupported_error("plumbing determinant is even; class arithmetic here "
                                "requires odd order");
}

PlumbingGraph parse_plumbing(std::istream& in) {
    std::map<int, long long> weights;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("plumbing file line " + std::to_string(lineno) + ": " +
                                        why);
        };
        if (kind == "v") {
            int idx;
            long long w;
            if (!(ls >> idx >> w)) fail("expected 'v <index> <weight>'");
            if (idx < 1) fail("vertex indices are 1-based");
            if (weights.count(idx)) fail("duplicate vertex " + std::to_string(idx));
            weights[idx] = w;
        } else if (kind == "e") {
            int a, b;
            if (!(ls >> a >> b)) fail("expected 'e <index> <index>'");
            if (a < 1 || b < 1) fail("vertex indices are 1-based");
            edges.emplace_back(a - 1, b - 1);
        } else {
            fail("unknown directive '" + kind + "'");
        }
    }
    int n = static_cast<int>(weights.size());
    std::vector<long long> w(n);
    for (auto& [idx, weight] : weights) {
        if (idx > n)
            throw std::invalid_argument("plumbing file: vertex indices must be 1.." +
                                        std::to_string(n) + " without gaps");
        w[idx - 1] = weight;
    }
    for (auto [a, b] : edges)
        if (a >= n || b >= n)
            throw std::invalid_argument("plumbing file: edge references undeclared vertex");
    return PlumbingGraph(std::move(w), std::move(edges));
}

PlumbingGraph parse_plumbing_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open plumbing file: " + path);
    return parse_plumbing(in);
}

std::string format_plumbing(const PlumbingGraph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.size(); ++v) os << "v " << v + 1 << " " << g.weight(v) << "\n";
    for (auto [a, b] : g.edges()) os << "e " << a + 1 << " " << b + 1 << "\n";
    return os.str();
}

std::vector<long long> hj_chain(long long a, long long b) {
    if (a <= 0 || b <= 0 || b > a) throw std::invalid_argument("hj_chain needs a >= b >= 1");
    std::vector<long long> out;
    while (b > 0) {
        long long c = (a + b - 1) / b; // ceil(a/b)
        out.push_back(c);
        long long next_b = c * b - a;
        a = b;
        b = next_b;
    }
    return out;
}

PlumbingGraph linear_chain(const std::vector<long long>& c) {
    std::vector<long long> w(c.size());
    for (size_t i = 0; i < c.size(); ++i) w[i] = -c[i];
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i + 1 < c.size(); ++i) edges.emplace_back(i, i + 1);
    return PlumbingGraph(std::move(w), std::move(edges));
}

PlumbingGraph pretzel_plumbing(const PretzelKnot& k) {
    if (k.all_odd() || k.r % 2 != 0 || k.r <= 0 || k.p % 2 == 0 || k.p < 1)
        throw unsupported_error("plumbing construction needs the normal form P(p,q,2m) with "
                                "p odd >= 1 and positive even last parameter, got " +
                                k.to_string());
    long long m = k.r / 2;
    long long n = k.p + 2 * m; // path of n-1 vertices plus one leaf
    if (n > 1000) throw limit_error("plumbing for " + k.to_string() + " has too many vertices");
    std::vector<long long> w(n, -2);
    w[n - 1] = k.q;
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(k.p - 1, n - 1);
    return PlumbingGraph(std::move(w), std::move(edges));
}

std::vector<Int> ClassTable::key_of(const Covector& k) const {
    if (static_cast<int>(k.size()) != rank) throw internal_error("covector has wrong length");
    std::vector<Int> key(rank);
    for (int j = 0; j < rank; ++j) {
        Int acc = 0;
        for (int i = 0; i < rank; ++i) acc += make_int(k[i]) * adjugate_q.at(i, j);
        mpz_mod(key[j].get_mpz_t(), acc.get_mpz_t(), D.get_mpz_t());
    }
    return key;
}

int ClassTable::class_of_key(const std::vector<Int>& key) const {
    auto it = index_by_key.find(key);
    if (it == index_by_key.end()) throw internal_error("key does not belong to any class");
    return it->second;
}

int ClassTable::class_of(const Covector& k) const { return class_of_key(key_of(k)); }

int ClassTable::conjugate_class(int idx) const {
    std::vector<Int> neg = classes[idx].key;
    for (Int& x : neg)
        if (x != 0) x = D - x;
    return class_of_key(neg);
}

namespace {

// Follows one pushing-down path. Returns true when it terminates in the
// all-values-in-[w, -w-2] state, false when some value exceeds -w(v).
bool initiates_maximising_path(const PlumbingGraph& g, Covector k) {
    int n = g.size();
    for (long long step = 0;; ++step) {
        if (step > kPathStepCap) throw internal_error("pushing-down path did not terminate");
        int push_at = -1;
        bool all_low = true;
        for (int v = 0; v < n; ++v) {
            long long top = -g.weight(v);
            if (k[v] > top) return false;
            if (k[v] == top) {
                all_low = false;
                if (push_at < 0) push_at = v;
            }
        }
        if (all_low) return true;
        k[push_at] += 2 * g.weight(push_at);
        for (int u : g.neighbors(push_at)) k[u] += 2;
    }
}

// Calls fn for every covector in the startpath box w(v)+2 <= K(v) <= -w(v).
void for_each_startpath_covector(const PlumbingGraph& g,
                                 const std::function<void(const Covector&)>& fn) {
    int n = g.size();
    long long box = 1;
    for (int v = 0; v < n; ++v) {
        long long options = -g.weight(v); // values w+2, w+4, ..., -w
        if (box > kBoxBudget / options)
            throw limit_error("startpath box exceeds the covector budget");
        box *= options;
    }
    Covector k(n);
    for (int v = 0; v < n; ++v) k[v] = g.weight(v) + 2;
    while (true) {
        fn(k);
        int v = n - 1;
        while (v >= 0 && k[v] == -g.weight(v)) {
            k[v] = g.weight(v) + 2;
            --v;
        }
        if (v < 0) break;
        k[v] += 2;
    }
}

} // namespace

ClassTable compute_class_table(const PlumbingGraph& g) {
    ClassTable t;
    t.rank = g.size();
    t.det_q = g.determinant();
    t.D = abs(t.det_q);
    t.adjugate_q = adjugate(g.intersection_form());
    RatMatrix qinv = inverse(g.intersection_form());

    for_each_startpath_covector(g, [&](const Covector& k) {
        if (!initiates_maximising_path(g, k)) return;
        std::vector<Int> key = t.key_of(k);
        std::vector<Int> ik(k.size());
        for (size_t i = 0; i < k.size(); ++i) ik[i] = make_int(k[i]);
        Rat square = quadratic_form(ik, qinv);
        auto [it, inserted] = t.index_by_key.try_emplace(std::move(key),
                                                         static_cast<int>(t.classes.size()));
        if (inserted) {
            SpinClassInfo info;
            info.rep = k;
            info.key = it->first;
            info.square = square;
            t.classes.push_back(std::move(info));
        } else if (square > t.classes[it->second].square) {
            t.classes[it->second].square = square;
            t.classes[it->second].rep = k;
        }
    });

    if (Int(static_cast<long>(t.classes.size())) != t.D)
        throw internal_error("pushing-down enumeration found " +
                             std::to_string(t.classes.size()) + " classes, expected " +
                             t.D.get_str());
    for (auto& c : t.classes) {
        c.d = (c.square + Rat(t.rank)) / 4;
        Int order = 1;
        for (const Int& x : c.key) order = lcm(order, t.D / gcd(t.D, x));
        c.order = order;
    }
    for (size_t i = 0; i < t.classes.size(); ++i) {
        bool zero = std::all_of(t.classes[i].key.begin(), t.classes[i].key.end(),
                                [](const Int& x) { return x == 0; });
        if (zero) t.zero_class = static_cast<int>(i);
        if (t.unit_class < 0 && t.classes[i].order == t.D) t.unit_class = static_cast<int>(i);
    }
    if (t.zero_class < 0) throw internal_error("no class has the zero key");
    return t;
}

std::vector<Covector> charstar_covectors(const PlumbingGraph& g) {
    std::vector<Covector> out;
    for_each_startpath_covector(g, [&](const Covector& k) {
        if (initiates_maximising_path(g, k)) out.push_back(k);
    });
    return out;
}

std::vector<int> label_classes(const ClassTable& t, int generator_class) {
    if (t.classes[generator_class].order != t.D)
        throw unsupported_error("labelling generator does not have full order");
    if (t.D > 10000000) throw limit_error("class group too large to label");
    long long d = t.D.get_si();
    const std::vector<Int>& gkey = t.classes[generator_class].key;
    std::vector<int> phi(d);
    std::vector<Int> acc(t.rank, Int(0));
    for (long long i = 0; i < d; ++i) {
        phi[i] = t.class_of_key(acc);
        for (int c = 0; c < t.rank; ++c) {
            acc[c] += gkey[c];
            if (acc[c] >= t.D) acc[c] -= t.D;
        }
    }
    return phi;
}

int pretzel_unit_class(const ClassTable& t) {
    Covector preferred_unit(t.rank, 0);
    preferred_unit[0] = 2;
    preferred_unit[t.rank - 1] = -1;
    auto it = t.index_by_key.find(t.key_of(preferred_unit));
    if (it != t.index_by_key.end() && t.classes[it->second].order == t.D) return it->second;
    if (t.unit_class < 0)
        throw unsupported_error("class group is not cyclic; no labelling exists");
    return t.unit_class;
}

} // namespace pretzel
