#pragma once

#include <string>
#include <vector>

#include "pretzel/obstruction.hpp"

namespace pretzel {

// Fixed column order: p,q,r,family,sigma,detK,alexander,greene,symmetry,verdict.
// Rows carry the normalized triple; sigma renders as "-" when the triple is
// all-odd (it is only defined on the one-even-parameter normal form).
std::string csv_header();
std::string csv_row(const ObstructionReport& rep);

// Single-record JSON object (no schema key; used both standalone and as a
// sweep row). Field order is fixed so output is byte-stable.
std::string report_json(const ObstructionReport& rep);

// classify output: the record wrapped with "schema": "1"
std::string classify_json(const ObstructionReport& rep);
std::string classify_text(const ObstructionReport& rep);

// sweep output: {"schema":"1","rows":[...],"summary":{...}}
std::string sweep_json(const std::vector<ObstructionReport>& rows);

// verdict tallies in a fixed order, e.g.
// "UnknotOne=1 NotUnknotOne=113 Undetermined=24 TwoBridgeDeferred=9 total=147"
std::string sweep_summary(const std::vector<ObstructionReport>& rows);

} // namespace pretzel
