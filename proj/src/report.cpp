#include <array>
#include <sstream>

#include <json.hpp>

#include "pretzel/report.hpp"

namespace pretzel {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kColumns = "p,q,r,family,sigma,detK,alexander,greene,symmetry,verdict";

std::string sigma_text(const ObstructionReport& rep) {
    return rep.sigma ? std::to_string(*rep.sigma) : "-";
}

ordered_json knot_json(const PretzelKnot& k) {
    return ordered_json{{"p", k.p}, {"q", k.q}, {"r", k.r}};
}

ordered_json record_json(const ObstructionReport& rep) {
    ordered_json j;
    j["input"] = knot_json(rep.input);
    j["normal"] = knot_json(rep.normal);
    j["reflected"] = rep.reflected;
    j["all_odd"] = rep.all_odd;
    j["two_bridge"] = rep.two_bridge;
    j["family"] = rep.family;
    if (rep.sigma)
        j["sigma"] = *rep.sigma;
    else
        j["sigma"] = nullptr;
    j["detK"] = rep.det_k;
    j["alexander"] = rep.alexander;
    j["greene"] = rep.greene;
    j["symmetry"] = rep.symmetry;
    j["verdict"] = verdict_name(rep.verdict);
    j["notes"] = rep.notes;
    return j;
}

std::array<long long, 4> verdict_tallies(const std::vector<ObstructionReport>& rows) {
    std::array<long long, 4> c{0, 0, 0, 0};
    for (const auto& rep : rows) ++c[static_cast<size_t>(rep.verdict)];
    return c;
}

} // namespace

std::string csv_header() { return kColumns; }

std::string csv_row(const ObstructionReport& rep) {
    std::ostringstream out;
    out << rep.normal.p << ',' << rep.normal.q << ',' << rep.normal.r << ',' << rep.family << ','
        << sigma_text(rep) << ',' << rep.det_k << ',' << rep.alexander << ',' << rep.greene << ','
        << rep.symmetry << ',' << verdict_name(rep.verdict);
    return out.str();
}

std::string report_json(const ObstructionReport& rep) { return record_json(rep).dump(2); }

std::string classify_json(const ObstructionReport& rep) {
    ordered_json j;
    j["schema"] = "1";
    j.update(record_json(rep));
    return j.dump(2);
}

std::string classify_text(const ObstructionReport& rep) {
    std::ostringstream out;
    out << "knot:      " << rep.input.to_string() << '\n';
    out << "normal:    " << rep.normal.to_string() << (rep.reflected ? " (mirrored)" : "") << '\n';
    out << "family:    " << rep.family << '\n';
    out << "sigma:     " << sigma_text(rep) << '\n';
    out << "detK:      " << rep.det_k << '\n';
    out << "alexander: " << rep.alexander << '\n';
    out << "greene:    " << rep.greene << '\n';
    out << "symmetry:  " << rep.symmetry << '\n';
    out << "verdict:   " << verdict_name(rep.verdict) << '\n';
    for (const auto& note : rep.notes) out << "  - " << note << '\n';
    return out.str();
}

std::string sweep_json(const std::vector<ObstructionReport>& rows) {
    ordered_json j;
    j["schema"] = "1";
    j["rows"] = ordered_json::array();
    for (const auto& rep : rows) j["rows"].push_back(record_json(rep));
    auto c = verdict_tallies(rows);
    ordered_json summary;
    summary[verdict_name(Verdict::UnknotOne)] = c[0];
    summary[verdict_name(Verdict::NotUnknotOne)] = c[1];
    summary[verdict_name(Verdict::Undetermined)] = c[2];
    summary[verdict_name(Verdict::TwoBridgeDeferred)] = c[3];
    summary["total"] = static_cast<long long>(rows.size());
    j["summary"] = summary;
    return j.dump(2);
}

std::string sweep_summary(const std::vector<ObstructionReport>& rows) {
    auto c = verdict_tallies(rows);
    std::ostringstream out;
    out << verdict_name(Verdict::UnknotOne) << '=' << c[0] << ' '
        << verdict_name(Verdict::NotUnknotOne) << '=' << c[1] << ' '
        << verdict_name(Verdict::Undetermined) << '=' << c[2] << ' '
        << verdict_name(Verdict::TwoBridgeDeferred) << '=' << c[3] << " total=" << rows.size();
    return out.str();
}

} // namespace pretzel
