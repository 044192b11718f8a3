#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace orbitref::cli {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json to_json(const Matrix& m) { return m.to_strings(); }

json to_json(const SpectralProfile& p) {
    json entries = json::array();
    for (const auto& e : p.entries) {
        json j{{"eigenvalue", e.eigenvalue.to_string()},
               {"block_sizes", e.block_sizes},
               {"algebraic_multiplicity", e.algebraic_multiplicity()},
               {"rank_sequence", e.rank_sequence}};
        if (e.modulus_sq) j["modulus_sq"] = e.modulus_sq->to_string();
        entries.push_back(std::move(j));
    }
    json j{{"field", p.field->name()}, {"dim", p.dim},         {"entries", entries},
           {"split", p.split},         {"nilpotent", p.nilpotent}, {"fragile", p.fragile}};
    if (p.spectral_radius_sq) j["spectral_radius_sq"] = p.spectral_radius_sq->to_string();
    return j;
}

json to_json(const WitnessReport& r) {
    json samples = json::array();
    for (const auto& s : r.membership_residuals) {
        json cps = json::array();
        for (const auto& c : s.checkpoints) cps.push_back({{"n", c.n}, {"residual", c.residual}});
        samples.push_back(
            {{"vector", s.label}, {"checkpoints", cps}, {"below_threshold", s.below_threshold}, {"decays", s.decays}});
    }
    json j{{"witness", to_json(r.witness)},
           {"commutator_nonzero", r.commutator_nonzero},
           {"threshold", r.threshold},
           {"membership_residuals", samples},
           {"verdict_supported", r.verdict_supported}};
    if (r.commutator_entry) {
        const auto& [i, k, v] = *r.commutator_entry;
        j["commutator_entry"] = {{"row", i}, {"column", k}, {"value", v}};
    }
    return j;
}

json to_json(const EnumerationSummary& s) {
    json diff = json::array();
    for (const auto& m : s.difference) diff.push_back(to_json(m));
    json j{{"q", s.q},
           {"dim", s.dim},
           {"candidates", s.candidates},
           {"orbref0_size", s.orbref0_size},
           {"f_orb_size", s.f_orb_size},
           {"equal", s.equal},
           {"difference", diff},
           {"non_commuting_member", s.non_commuting_member ? to_json(*s.non_commuting_member) : json(nullptr)}};
    json rig{{"checked", s.rigidity.checked}, {"holds", s.rigidity.holds}};
    if (!s.rigidity.counterexample.empty()) rig["counterexample"] = s.rigidity.counterexample;
    j["rigidity"] = rig;
    return j;
}

json to_json(const Verdict& v) {
    json j{{"property", to_string(v.property)},
           {"answer", to_string(v.answer)},
           {"citation", v.citation},
           {"fragile", v.fragile},
           {"trace", v.trace}};
    if (!v.note.empty()) j["note"] = v.note;
    if (v.witness) j["witness"] = {{"jordan_form", to_json(v.witness->jordan_form)}, {"s", to_json(v.witness->witness)}};
    if (v.enumeration) j["enumeration"] = to_json(*v.enumeration);
    return j;
}

json to_json(const NoSinglePowerResult& r) {
    json w = json::array();
    for (const auto& p : r.witnesses) {
        w.push_back({{"exponent", p.exponent},
                     {"x", p.x.to_string()},
                     {"t_power_x", p.t_power_x.to_string()},
                     {"s_x", p.s_x.to_string()}});
    }
    return {{"holds", r.holds}, {"witnesses", w}};
}

json to_json(const std::vector<TruncationRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        out.push_back({{"n", r.n},
                       {"exponent", r.exponent.get_str()},
                       {"vectors_checked", r.vectors_checked},
                       {"all_equal", r.all_equal}});
    }
    return out;
}

namespace {

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void matrix_lines(std::ostringstream& os, const std::string& indent, const json& m) {
    for (const auto& row : m) {
        os << indent << "[";
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << row[i].get<std::string>();
        os << "]\n";
    }
}

void profile_lines(std::ostringstream& os, const json& p) {
    os << "profile over " << p["field"].get<std::string>() << ", dim " << p["dim"] << "\n";
    for (const auto& e : p["entries"]) {
        os << "  " << e["eigenvalue"].get<std::string>() << ": blocks " << e["block_sizes"].dump();
        if (e.contains("modulus_sq")) os << "  |lambda|^2 = " << e["modulus_sq"].get<std::string>();
        os << "\n";
    }
    os << "  split " << p["split"] << ", nilpotent " << p["nilpotent"] << ", fragile " << p["fragile"] << "\n";
}

void enumeration_lines(std::ostringstream& os, const json& e, const std::string& indent) {
    os << indent << "GF(" << e["q"] << ") dim " << e["dim"] << ": |OrbRef0| = " << e["orbref0_size"]
       << ", |F-Orb| = " << e["f_orb_size"] << ", equal " << e["equal"] << "\n";
    for (const auto& m : e["difference"]) {
        os << indent << "  extra member:\n";
        matrix_lines(os, indent + "    ", m);
    }
    if (e["rigidity"]["checked"].get<bool>()) {
        os << indent << "rigidity " << (e["rigidity"]["holds"].get<bool>() ? "holds" : "fails");
        if (e["rigidity"].contains("counterexample")) os << ": " << e["rigidity"]["counterexample"].get<std::string>();
        os << "\n";
    }
}

void witness_lines(std::ostringstream& os, const json& w) {
    os << "witness S (commutator nonzero " << w["commutator_nonzero"] << ", supported " << w["verdict_supported"]
       << "):\n";
    matrix_lines(os, "    ", w["witness"]);
    os << "  vector           ";
    const auto& first = w["membership_residuals"].front()["checkpoints"];
    for (const auto& c : first) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "  N=%-12zu", c["n"].get<std::size_t>());
        os << buf;
    }
    os << "\n";
    for (const auto& s : w["membership_residuals"]) {
        std::string label = s["vector"].get<std::string>();
        label.resize(16, ' ');
        os << "  " << label;
        for (const auto& c : s["checkpoints"]) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "  %-14.6e", c["residual"].get<double>());
            os << buf;
        }
        os << (s["below_threshold"].get<bool>() && s["decays"].get<bool>() ? "" : "  FAIL") << "\n";
    }
}

}  // namespace

std::string render_table(const json& report) {
    std::ostringstream os;
    const std::string cmd = report.value("command", "");
    os << "orbitref " << report.value("version", "") << " " << cmd << "\n";
    if (report.contains("profile")) profile_lines(os, report["profile"]);
    if (report.contains("profile_skipped")) os << "profile: " << report["profile_skipped"].get<std::string>() << "\n";
    if (report.contains("verdicts")) {
        for (const auto& v : report["verdicts"]) {
            os << v["property"].get<std::string>() << ": " << v["answer"].get<std::string>() << "  ["
               << v["citation"].get<std::string>() << "]" << (v["fragile"].get<bool>() ? " FRAGILE" : "") << "\n";
            for (const auto& t : v["trace"]) os << "    " << t.get<std::string>() << "\n";
            if (v.contains("note")) os << "    note: " << v["note"].get<std::string>() << "\n";
            if (v.contains("enumeration")) enumeration_lines(os, v["enumeration"], "    ");
            if (v.contains("witness_report")) witness_lines(os, v["witness_report"]);
        }
    }
    if (report.contains("witness_report")) witness_lines(os, report["witness_report"]);
    if (report.contains("status")) os << "status: " << report["status"].get<std::string>() << "\n";
    if (report.contains("enumeration")) enumeration_lines(os, report["enumeration"], "");
    if (report.contains("aggregate")) {
        for (const auto& [k, a] : report["aggregate"].items()) {
            os << k << ": " << a["total"] << " matrices, " << a["equal"] << " equal, " << a["not_equal"]
               << " not equal\n";
        }
        for (const auto& m : report["matrices"]) {
            os << "  #" << m["code"] << " " << (m["split"].get<bool>() ? "split   " : "nonsplit") << " "
               << (m["equal"].get<bool>() ? "equal    " : "not-equal") << "  " << m["rows"].dump() << "\n";
        }
    }
    if (report.contains("truncation")) {
        os << "   n  n!                  vectors  T^{n!}x = Sx\n";
        for (const auto& r : report["truncation"]) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "  %2u  %-18s  %7zu  %s\n", r["n"].get<unsigned>(),
                          r["exponent"].get<std::string>().c_str(), r["vectors_checked"].get<std::size_t>(),
                          r["all_equal"].get<bool>() ? "yes" : "no");
            os << buf;
        }
        const auto& ns = report["no_single_power"];
        os << "no single power: " << (ns["holds"].get<bool>() ? "holds" : "fails") << "\n";
        for (const auto& w : ns["witnesses"]) {
            os << "  N=" << w["exponent"] << "  x = " << w["x"].get<std::string>()
               << "  T^N x = " << w["t_power_x"].get<std::string>() << "  Sx = " << w["s_x"].get<std::string>()
               << "\n";
        }
    }
    if (report.contains("contains")) {
        os << "S in OrbRef0(T): " << report["contains"] << "\n";
        if (report.contains("failing_vector")) {
            os << "  failing x = [";
            for (std::size_t i = 0; i < report["failing_vector"].size(); ++i) {
                os << (i ? ", " : "") << scalar_text(report["failing_vector"][i]);
            }
            os << "]\n";
        }
    }
    return os.str();
}

}  // namespace orbitref::cli
