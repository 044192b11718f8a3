#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "orbitref/counterexample.hpp"
#include "orbitref/deciders.hpp"
#include "orbitref/spectra.hpp"
#include "orbitref/witness.hpp"

namespace orbitref::cli {

using nlohmann::json;

/// FNV-1a 64, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

json to_json(const Matrix& m);
json to_json(const SpectralProfile& p);
json to_json(const Verdict& v);
json to_json(const WitnessReport& r);
json to_json(const EnumerationSummary& s);
json to_json(const NoSinglePowerResult& r);
json to_json(const std::vector<TruncationRow>& rows);

/// Human-readable rendering of a JSON report.
std::string render_table(const json& report);

}  // namespace orbitref::cli
