#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "pretzel/errors.hpp"
#include "pretzel/report.hpp"

namespace {

using namespace pretzel;

std::string covector_text(const Covector& k) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) out << ',';
        out << k[i];
    }
    out << ')';
    return out.str();
}

std::string scaled_text(const Rat& d, long long scale) {
    return rat_to_string(d * Rat(make_int(scale)));
}

struct DinvArgs {
    std::vector<long long> pretzel; // k m
    std::string plumbing_file;
    long long lens = 0;
    long long scale = 1;
    long long relabel = 1;
};

void check_relabel(long long u, long long d) {
    long long g = ((u % d) + d) % d;
    long long a = g, b = d;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    if (a != 1) throw std::invalid_argument("relabel value must be a unit mod " + std::to_string(d));
}

int run_dinv(const DinvArgs& args) {
    int given = (args.pretzel.empty() ? 0 : 1) + (args.plumbing_file.empty() ? 0 : 1) +
                (args.lens != 0 ? 1 : 0);
    if (given != 1)
        throw std::invalid_argument("pick exactly one of --pretzel, --plumbing, --lens");
    if (args.scale < 1) throw std::invalid_argument("--scale must be a positive integer");

    if (args.lens != 0) {
        LensTable t = lens_table(make_int(args.lens));
        long long d = args.lens;
        check_relabel(args.relabel, d);
        for (long long i = 0; i < d; ++i) {
            size_t j = static_cast<size_t>((((args.relabel * i) % d) + d) % d);
            std::cout << i << '\t' << '(' << t.psi[j].first << ',' << t.psi[j].second << ')' << '\t'
                      << scaled_text(t.d[j], args.scale) << '\n';
        }
        return 0;
    }

    PlumbingGraph g = args.plumbing_file.empty()
                          ? pretzel_plumbing(PretzelKnot(args.pretzel[0], -args.pretzel[0],
                                                         2 * args.pretzel[1]))
                          : parse_plumbing_file(args.plumbing_file);
    ClassTable table = compute_class_table(g);
    std::vector<int> phi = label_classes(table, pretzel_unit_class(table));
    long long d = table.D.get_si();
    check_relabel(args.relabel, d);
    for (long long i = 0; i < d; ++i) {
        size_t j = static_cast<size_t>((((args.relabel * i) % d) + d) % d);
        const SpinClassInfo& cls = table.classes[static_cast<size_t>(phi[j])];
        std::cout << i << '\t' << covector_text(cls.rep) << '\t'
                  << scaled_text(cls.d, args.scale) << '\n';
    }
    return 0;
}

struct SweepArgs {
    long long pmin = 1, pmax = 9;
    long long qmin = -9, qmax = -1;
    long long rmin = 2, rmax = 6;
    long long rstep = 1;
    std::string format = "csv";
};

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    long long n = hw ? hw : 1;
    if (const char* env = std::getenv("PRETZEL_OBSTRUCT_THREADS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 1) n = v;
    }
    if (n > 64) n = 64;
    return static_cast<int>(n);
}

int run_sweep(const SweepArgs& args) {
    for (long long b : {args.pmin, args.pmax, args.qmin, args.qmax, args.rmin, args.rmax})
        if (b < -15 || b > 15)
            throw limit_error("sweep bounds are limited to |p|,|q|,|r| <= 15");
    if (args.rstep < 1) throw std::invalid_argument("--rstep must be >= 1");
    if (args.format != "csv" && args.format != "json")
        throw std::invalid_argument("--format must be csv or json");

    std::set<std::tuple<long long, long long, long long>> normals;
    for (long long p = args.pmin; p <= args.pmax; ++p)
        for (long long q = args.qmin; q <= args.qmax; ++q)
            for (long long r = args.rmin; r <= args.rmax; r += args.rstep) {
                int even = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
                if (even > 1) continue; // not a knot
                NormalForm nf = normalize(PretzelKnot(p, q, r));
                normals.emplace(nf.knot.p, nf.knot.q, nf.knot.r);
            }
    std::vector<std::tuple<long long, long long, long long>> order(normals.begin(), normals.end());

    std::vector<std::optional<ObstructionReport>> results(order.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i = next.fetch_add(1); i < order.size(); i = next.fetch_add(1)) {
            auto [p, q, r] = order[i];
            results[i] = classify(PretzelKnot(p, q, r));
        }
    };
    int threads = worker_count();
    if (threads <= 1 || order.size() < 2) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::vector<ObstructionReport> rows;
    rows.reserve(results.size());
    for (auto& r : results) rows.push_back(std::move(*r));

    if (args.format == "csv") {
        std::cout << csv_header() << '\n';
        for (const auto& rep : rows) std::cout << csv_row(rep) << '\n';
        std::cerr << "# " << sweep_summary(rows) << '\n';
    } else {
        std::cout << sweep_json(rows) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unknotting-number-one obstructions for 3-strand pretzel knots"};
    app.require_subcommand(1);

    auto* cls = app.add_subcommand("classify", "run every applicable obstruction on one knot");
    long long p = 0, q = 0, r = 0;
    bool as_json = false;
    cls->add_option("p", p, "first (odd) twist parameter")->required();
    cls->add_option("q", q, "second twist parameter")->required();
    cls->add_option("r", r, "third twist parameter")->required();
    cls->add_flag("--json", as_json, "emit the report as JSON");

    auto* dinv = app.add_subcommand("dinv", "dump a correction-term table");
    DinvArgs da;
    dinv->add_option("--pretzel", da.pretzel, "parameters k m of the double cover of P(k,-k,2m)")
        ->expected(2);
    dinv->add_option("--plumbing", da.plumbing_file, "plumbing graph file (v/e lines)");
    dinv->add_option("--lens", da.lens, "order D of the lens space L(D,2), D = 1 mod 4");
    dinv->add_option("--scale", da.scale, "multiply the printed values by N");
    dinv->add_option("--relabel", da.relabel, "relabel rows by a unit: row i shows entry U*i");

    auto* sweep = app.add_subcommand("sweep", "classify every knot in a parameter box");
    SweepArgs sa;
    sweep->add_option("--pmin", sa.pmin, "lower bound for p");
    sweep->add_option("--pmax", sa.pmax, "upper bound for p");
    sweep->add_option("--qmin", sa.qmin, "lower bound for q");
    sweep->add_option("--qmax", sa.qmax, "upper bound for q");
    sweep->add_option("--rmin", sa.rmin, "lower bound for r");
    sweep->add_option("--rmax", sa.rmax, "upper bound for r");
    sweep->add_option("--rstep", sa.rstep, "step between consecutive r values");
    sweep->add_option("--format", sa.format, "csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cls->parsed()) {
            ObstructionReport rep = classify(PretzelKnot(p, q, r));
            std::cout << (as_json ? classify_json(rep) + "\n" : classify_text(rep));
            return 0;
        }
        if (dinv->parsed()) return run_dinv(da);
        return run_sweep(sa);
    } catch (const limit_error& e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return 4;
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
