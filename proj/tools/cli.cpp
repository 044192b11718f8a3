#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "orbitref/counterexample.hpp"
#include "orbitref/deciders.hpp"
#include "orbitref/galois.hpp"
#include "orbitref/orbit_oracle.hpp"
#include "orbitref/spectra.hpp"
#include "orbitref/witness.hpp"
#include "report.hpp"

namespace orbitref::cli {

namespace {

struct Options {
    std::string input;
    std::string candidate;
    std::string field;
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint64_t q = 0;
    std::size_t d = 0;
    std::optional<double> tol;
    std::size_t powers = 2000;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    std::uint64_t budget = OracleBudget{}.candidates;
    std::uint64_t vector_budget = OracleBudget{}.vectors;
    std::string format = "json";
    std::string cache;
    std::string filter = "all";
    unsigned workers = 0;
    unsigned n = 8;
    std::vector<std::string> properties;
};

unsigned resolve_workers(unsigned w) {
    if (w != 0) return w;
    return std::max(1u, std::thread::hardware_concurrency());
}

OracleBudget budget_of(const Options& o) {
    OracleBudget b;
    b.candidates = o.budget;
    b.vectors = o.vector_budget;
    return b;
}

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::Parse:
        case ErrorCode::InvalidArgument:
        case ErrorCode::ShapeMismatch:
        case ErrorCode::WrongField:
        case ErrorCode::NotPrime:
        case ErrorCode::FiniteFieldUnsupported:
        case ErrorCode::MixedFields:
        case ErrorCode::NumericKindUnsupported:
            return kExitParse;
        case ErrorCode::NotSplit: return kExitNotSplit;
        case ErrorCode::BudgetExceeded: return kExitBudget;
        default: return kExitInternal;
    }
}

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::Parse, msg); }

const FieldDescriptor& make_field(const std::string& tag, std::uint32_t p, std::uint32_t k, double tol) {
    if (tag == "q") return FieldDescriptor::rationals();
    if (tag == "qi") return FieldDescriptor::gaussian_rationals();
    if (tag == "c64") {
        if (!(tol > 0)) parse_error("tol must be positive");
        return FieldDescriptor::complex_float(tol);
    }
    if (tag == "gf") {
        if (p == 0) parse_error("field gf needs p");
        if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
        if (k == 0) k = 1;
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            q *= p;
            if (q > 65536) parse_error("GF(p^k) is limited to order 65536");
        }
        return FieldDescriptor::finite(p, k);
    }
    parse_error("unknown field '" + tag + "' (expected q, qi, gf, c64)");
}

struct Input {
    const FieldDescriptor* field;
    Matrix matrix;
    json echo;
};

Input load_input(const std::string& path, const Options& o) {
    if (path.empty()) parse_error("--input is required");
    std::ifstream in(path);
    if (!in) parse_error("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        parse_error(path + ": " + e.what());
    }
    if (!j.is_object()) parse_error(path + ": expected a JSON object");
    try {
        std::string tag = o.field.empty() ? j.value("field", std::string()) : o.field;
        if (tag.empty()) parse_error(path + ": missing \"field\"");
        std::uint32_t p = o.p ? o.p : j.value("p", 0u);
        std::uint32_t k = o.k ? o.k : j.value("k", 1u);
        double tol = o.tol ? *o.tol : j.value("tol", FieldDescriptor::kDefaultTolerance);
        const FieldDescriptor& f = make_field(tag, p, k, tol);

        if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty()) parse_error(path + ": missing \"rows\"");
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : j["rows"]) {
            if (!r.is_array()) parse_error(path + ": each row must be an array");
            auto& out = rows.emplace_back();
            for (const auto& v : r) {
                if (v.is_string()) out.push_back(v.get<std::string>());
                else if (v.is_number()) out.push_back(v.dump());
                else parse_error(path + ": entries must be strings or numbers");
            }
        }
        for (const auto& r : rows) {
            if (r.size() != rows.size()) parse_error(path + ": matrix is not square");
        }
        Matrix m = Matrix::parse(f, rows);
        json echo{{"field", f.tag()}};
        if (f.kind() == FieldKind::FiniteField) {
            echo["p"] = f.p();
            echo["k"] = f.k();
        }
        if (f.kind() == FieldKind::ComplexFloat) echo["tol"] = f.tol();
        echo["rows"] = rows;
        return {&f, std::move(m), std::move(echo)};
    } catch (const json::exception& e) {
        parse_error(path + ": " + e.what());
    }
}

json base_report(const std::string& command) { return {{"tool", "orbitref"}, {"version", kVersion}, {"command", command}}; }

void attach_input(json& report, const Input& in) {
    report["input"] = in.echo;
    report["input_hash"] = fnv1a_hex(in.echo.dump());
}

WitnessValidationOptions validation_options(const Options& o) {
    WitnessValidationOptions v;
    v.horizon = o.powers;
    v.samples = o.samples;
    v.seed = o.seed;
    v.workers = resolve_workers(o.workers);
    return v;
}

Property parse_property(const std::string& s) {
    if (s == "reflexive") return Property::Reflexive;
    if (s == "orbit_reflexive" || s == "orbit") return Property::OrbitReflexive;
    if (s == "c_orbit_reflexive" || s == "c-orbit" || s == "c_orbit") return Property::COrbitReflexive;
    if (s == "algebraic_f_orbit_reflexive" || s == "algebraic") return Property::AlgebraicFOrbitReflexive;
    parse_error("unknown property '" + s + "'");
}

std::vector<Property> default_properties(const FieldDescriptor& f) {
    if (f.kind() == FieldKind::FiniteField) {
        return {Property::Reflexive, Property::OrbitReflexive, Property::AlgebraicFOrbitReflexive};
    }
    return {Property::Reflexive, Property::OrbitReflexive, Property::COrbitReflexive};
}

[[noreturn]] void rethrow_not_split(const Error& e, const FieldDescriptor& f) {
    std::string msg = e.what();
    if (f.kind() == FieldKind::Rationals) msg += "; try --field qi or --field c64";
    else if (f.kind() == FieldKind::GaussianRationals) msg += "; try --field c64";
    else if (f.kind() == FieldKind::FiniteField) msg += "; try a larger --k";
    throw Error(ErrorCode::NotSplit, msg, e.detail());
}

/// The algebraic verdict, settled or cross-checked by enumeration.
Verdict algebraic_verdict(const Matrix& t, const Options& o) {
    Verdict v = decide_algebraic_f_orbit_reflexive(t);
    if (v.answer == Answer::Unknown) {
        upgrade_with_enumeration(v, enumerate_orbref0(t, budget_of(o), resolve_workers(o.workers)).summary);
        return v;
    }
    try {
        const auto summary = enumerate_orbref0(t, budget_of(o), resolve_workers(o.workers)).summary;
        const bool agrees = summary.equal == (v.answer == Answer::True);
        if (!agrees) {
            const std::string rule = v.citation;
            upgrade_with_enumeration(v, summary);
            v.note = "exhaustive enumeration contradicts the " + rule + " rule answer";
        } else {
            v.trace.push_back("enumeration agrees: |OrbRef0| = " + std::to_string(summary.orbref0_size) +
                              ", |F-Orb| = " + std::to_string(summary.f_orb_size));
            v.enumeration = summary;
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        v.note = "not cross-checked by enumeration: " + std::string(e.what());
    }
    return v;
}

int cmd_jordan(const Options& o, json& report) {
    const Input in = load_input(o.input, o);
    attach_input(report, in);
    try {
        report["profile"] = to_json(block_profile(in.matrix));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotSplit) rethrow_not_split(e, *in.field);
        throw;
    }
    return kExitOk;
}

int cmd_decide(const Options& o, json& report) {
    const Input in = load_input(o.input, o);
    attach_input(report, in);
    std::vector<Property> props;
    for (const auto& s : o.properties) props.push_back(parse_property(s));
    const bool explicit_props = !props.empty();
    if (!explicit_props) props = default_properties(*in.field);
    report["parameters"] = {{"seed", o.seed},
                            {"powers", o.powers},
                            {"samples", o.samples},
                            {"budget", {{"candidates", o.budget}, {"vectors", o.vector_budget}}}};

    std::optional<SpectralProfile> profile;
    try {
        profile = block_profile(in.matrix);
        report["profile"] = to_json(*profile);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotSplit) throw;
        const bool needs_profile = std::any_of(props.begin(), props.end(), [](Property p) {
            return p == Property::Reflexive || p == Property::COrbitReflexive;
        });
        if (in.field->kind() != FieldKind::FiniteField || (explicit_props && needs_profile)) {
            rethrow_not_split(e, *in.field);
        }
        report["profile_skipped"] = std::string("not split over ") + in.field->name() + "; unfactored part " + e.detail();
    }

    json verdicts = json::array();
    bool fragile = false;
    for (Property p : props) {
        Verdict v{p};
        json extra;
        switch (p) {
            case Property::Reflexive:
                if (!profile) continue;  // gf default set, non-split
                v = decide_reflexive(*profile);
                break;
            case Property::OrbitReflexive: v = decide_orbit_reflexive(in.matrix); break;
            case Property::COrbitReflexive:
                v = decide_c_orbit_reflexive(*profile);
                if (v.witness) {
                    const auto r = validate_witness(v.witness->witness, v.witness->jordan_form, validation_options(o));
                    extra = to_json(r);
                }
                break;
            case Property::AlgebraicFOrbitReflexive: v = algebraic_verdict(in.matrix, o); break;
        }
        fragile = fragile || v.fragile;
        json j = to_json(v);
        if (!extra.is_null()) j["witness_report"] = extra;
        verdicts.push_back(std::move(j));
    }
    report["verdicts"] = verdicts;
    report["fragile"] = fragile;
    return kExitOk;
}

int cmd_witness(const Options& o, json& report) {
    const Input in = load_input(o.input, o);
    attach_input(report, in);
    if (!in.field->embeds_in_complex()) {
        throw Error(ErrorCode::FiniteFieldUnsupported, "C-orbit witnesses need a field inside C");
    }
    report["parameters"] = {{"seed", o.seed}, {"powers", o.powers}, {"samples", o.samples}};
    SpectralProfile profile;
    try {
        profile = block_profile(in.matrix);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotSplit) rethrow_not_split(e, *in.field);
        throw;
    }
    report["profile"] = to_json(profile);
    std::vector<JordanBlock> order;
    try {
        order = witness_block_order(profile);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CriterionHolds) throw;
        report["status"] = "criterion_holds";
        report["message"] = e.what();
        return kExitOk;
    }
    const Matrix j = jordan_matrix(*in.field, order);
    const Matrix s = build_c_orbit_witness(j, profile);
    report["status"] = "witness_built";
    report["jordan_form"] = to_json(j);
    report["input_in_jordan_coordinates"] = (in.matrix == j);
    report["witness_report"] = to_json(validate_witness(s, j, validation_options(o)));
    return kExitOk;
}

int cmd_oracle(const Options& o, json& report) {
    const Input in = load_input(o.input, o);
    attach_input(report, in);
    if (in.field->kind() != FieldKind::FiniteField) {
        throw Error(ErrorCode::WrongField, "the oracle enumerates over finite fields only");
    }
    report["parameters"] = {{"budget", {{"candidates", o.budget}, {"vectors", o.vector_budget}}}};
    if (!o.candidate.empty()) {
        const Input s = load_input(o.candidate, o);
        if (s.field != in.field) throw Error(ErrorCode::MixedFields, "candidate is over a different field");
        report["candidate"] = s.echo;
        const auto r = orbref0_contains(in.matrix, s.matrix, budget_of(o));
        report["contains"] = r.contains;
        if (r.failing_vector) {
            json x = json::array();
            for (const auto& c : *r.failing_vector) x.push_back(c.to_string());
            report["failing_vector"] = x;
        }
        return kExitOk;
    }
    const auto r = enumerate_orbref0(in.matrix, budget_of(o), resolve_workers(o.workers));
    report["enumeration"] = to_json(r.summary);
    return kExitOk;
}

// ---- ffscan ----

struct ScanRecord {
    std::uint64_t code = 0;
    std::string hash;
    bool split = false;
    bool equal = false;
    std::uint64_t orbref0_size = 0;
    std::uint64_t f_orb_size = 0;
};

Matrix decode_matrix(const FieldDescriptor& f, std::size_t d, std::uint64_t code) {
    const std::uint64_t q = f.gf().order();
    Matrix m(f, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            m(i, j) = Scalar::finite(f, static_cast<std::uint32_t>(code % q));
            code /= q;
        }
    }
    return m;
}

std::string matrix_hash(const Matrix& m) {
    return fnv1a_hex(std::to_string(m.field().gf().order()) + "/" + std::to_string(m.dim()) + "/" +
                     json(m.to_strings()).dump());
}

std::string resolve_cache_path(const Options& o) {
    if (!o.cache.empty()) return o.cache;
    if (const char* env = std::getenv("ORBITREF_CACHE"); env && *env) return env;
    return {};
}

std::map<std::string, ScanRecord> load_cache(const std::string& path, std::uint64_t q, std::size_t d, std::ostream& err) {
    std::map<std::string, ScanRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    std::size_t bad = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const json j = json::parse(line);
            if (j.at("q").get<std::uint64_t>() != q || j.at("d").get<std::size_t>() != d) continue;
            ScanRecord r{j.at("code").get<std::uint64_t>(), j.at("hash").get<std::string>(), j.at("split").get<bool>(),
                         j.at("equal").get<bool>(), j.at("orbref0_size").get<std::uint64_t>(),
                         j.at("f_orb_size").get<std::uint64_t>()};
            out[r.hash] = r;
        } catch (const json::exception&) {
            ++bad;
        }
    }
    if (bad) err << "warning: skipped " << bad << " unreadable cache lines in " << path << "\n";
    return out;
}

std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (q % p) continue;
        if (!is_prime(p)) break;
        std::uint32_t k = 0;
        std::uint64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++k;
        }
        if (r != 1) break;
        return {p, k};
    }
    parse_error("q = " + std::to_string(q) + " is not a prime power");
}

int cmd_ffscan(const Options& o, json& report, std::ostream& err) {
    std::uint32_t p = o.p, k = o.k ? o.k : 1;
    if (o.q) {
        const auto [qp, qk] = factor_prime_power(o.q);
        if ((o.p && o.p != qp) || (o.k && o.k != qk)) parse_error("--q disagrees with --p/--k");
        p = qp;
        k = qk;
    }
    if (!p) parse_error("ffscan needs --q or --p");
    if (o.d == 0) parse_error("ffscan needs --d >= 1");
    if (o.filter != "all" && o.filter != "split" && o.filter != "nonsplit" && o.filter != "equal" &&
        o.filter != "not-equal") {
        parse_error("unknown filter '" + o.filter + "'");
    }
    const FieldDescriptor& f = make_field("gf", p, k, 0);
    const std::uint64_t q = f.gf().order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < o.d * o.d; ++i) {
        if (total > o.budget / q) {
            throw Error(ErrorCode::BudgetExceeded, "q^(d^2) exceeds the candidate budget " + std::to_string(o.budget));
        }
        total *= q;
    }
    report["field"] = f.name();
    report["q"] = q;
    report["d"] = o.d;
    report["filter"] = o.filter;
    report["parameters"] = {{"budget", {{"candidates", o.budget}, {"vectors", o.vector_budget}}}};

    const std::string cache_path = resolve_cache_path(o);
    auto cached = cache_path.empty() ? std::map<std::string, ScanRecord>{} : load_cache(cache_path, q, o.d, err);

    std::vector<ScanRecord> records(total);
    std::vector<char> fresh(total, 0);
    std::vector<std::uint64_t> todo;
    for (std::uint64_t c = 0; c < total; ++c) {
        const Matrix t = decode_matrix(f, o.d, c);
        const std::string h = matrix_hash(t);
        if (auto it = cached.find(h); it != cached.end() && it->second.code == c) {
            records[c] = it->second;
        } else {
            records[c].code = c;
            records[c].hash = h;
            todo.push_back(c);
        }
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const OracleBudget budget = budget_of(o);
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
            try {
                const std::uint64_t c = todo[i];
                const Matrix t = decode_matrix(f, o.d, c);
                const auto summary = enumerate_orbref0(t, budget, 1).summary;
                ScanRecord& r = records[c];
                r.split = eigenvalues(t).split;
                r.equal = summary.equal;
                r.orbref0_size = summary.orbref0_size;
                r.f_orb_size = summary.f_orb_size;
                fresh[c] = 1;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = todo.size();
            }
        }
    };
    const unsigned workers = std::min<std::size_t>(resolve_workers(o.workers), std::max<std::size_t>(todo.size(), 1));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    if (!cache_path.empty()) {
        std::ofstream cache(cache_path, std::ios::app);
        if (!cache) {
            err << "warning: cannot write cache " << cache_path << "\n";
        } else {
            for (std::uint64_t c = 0; c < total; ++c) {
                if (!fresh[c]) continue;
                const auto& r = records[c];
                cache << json{{"q", q},          {"d", o.d},         {"code", r.code},
                              {"hash", r.hash},  {"split", r.split}, {"equal", r.equal},
                              {"orbref0_size", r.orbref0_size}, {"f_orb_size", r.f_orb_size}}
                             .dump()
                      << "\n";
            }
        }
        err << "cache " << cache_path << ": " << (total - todo.size()) << " reused, "
            << std::count(fresh.begin(), fresh.end(), 1) << " computed\n";
    }
    if (failure) std::rethrow_exception(failure);

    json agg{{"split", {{"total", 0}, {"equal", 0}, {"not_equal", 0}}},
             {"nonsplit", {{"total", 0}, {"equal", 0}, {"not_equal", 0}}}};
    json listed = json::array();
    for (const auto& r : records) {
        json& a = agg[r.split ? "split" : "nonsplit"];
        a["total"] = a["total"].get<std::uint64_t>() + 1;
        a[r.equal ? "equal" : "not_equal"] = a[r.equal ? "equal" : "not_equal"].get<std::uint64_t>() + 1;
        const bool keep = o.filter == "all" || (o.filter == "split" && r.split) || (o.filter == "nonsplit" && !r.split) ||
                          (o.filter == "equal" && r.equal) || (o.filter == "not-equal" && !r.equal);
        if (!keep) continue;
        listed.push_back({{"code", r.code},
                          {"hash", r.hash},
                          {"rows", decode_matrix(f, o.d, r.code).to_strings()},
                          {"split", r.split},
                          {"equal", r.equal},
                          {"orbref0_size", r.orbref0_size},
                          {"f_orb_size", r.f_orb_size}});
    }
    report["aggregate"] = agg;
    report["matrices"] = listed;
    return kExitOk;
}

int cmd_demo(const Options& o, json& report) {
    if (o.n < 2) parse_error("--n must be at least 2");
    report["parameters"] = {{"n", o.n}};
    report["truncation"] = to_json(truncation_table(o.n));
    report["no_single_power"] = to_json(verify_no_single_power(o.n, o.n - 1));
    return kExitOk;
}

void add_field_options(CLI::App* sub, Options& o) {
    sub->add_option("--input", o.input, "matrix file (JSON)");
    sub->add_option("--field", o.field, "override the field: q, qi, gf, c64");
    sub->add_option("--p", o.p, "characteristic for gf");
    sub->add_option("--k", o.k, "extension degree for gf");
    sub->add_option("--tol", o.tol, "tolerance for c64");
}

void add_format(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
}

void add_budget(CLI::App* sub, Options& o) {
    sub->add_option("--budget", o.budget, "candidate budget q^(d^2) for enumeration");
    sub->add_option("--vector-budget", o.vector_budget, "vector budget q^d for enumeration");
    sub->add_option("--workers", o.workers, "worker threads (0 = all cores)");
}

void add_validation(CLI::App* sub, Options& o) {
    sub->add_option("--powers", o.powers, "horizon N for membership residuals");
    sub->add_option("--samples", o.samples, "number of seeded sample vectors");
    sub->add_option("--seed", o.seed, "sample seed");
    sub->add_option("--workers", o.workers, "worker threads (0 = all cores)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Reflexivity deciders for matrices over Q, Q(i), GF(p^k) and complex floats", "orbitref"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto* jordan = app.add_subcommand("jordan", "spectral profile (Jordan block sizes)");
    add_field_options(jordan, o);
    add_format(jordan, o);

    auto* decide = app.add_subcommand("decide", "reflexivity verdicts with certificates");
    add_field_options(decide, o);
    add_format(decide, o);
    add_validation(decide, o);
    decide->add_option("--budget", o.budget, "candidate budget q^(d^2) for enumeration");
    decide->add_option("--vector-budget", o.vector_budget, "vector budget q^d for enumeration");
    decide->add_option("--properties", o.properties,
                       "comma list of reflexive, orbit_reflexive, c_orbit_reflexive, algebraic_f_orbit_reflexive")
        ->delimiter(',');

    auto* witness = app.add_subcommand("witness", "build and validate the C-orbit witness");
    add_field_options(witness, o);
    add_format(witness, o);
    add_validation(witness, o);

    auto* ffscan = app.add_subcommand("ffscan", "classify every d x d matrix over GF(q)");
    ffscan->add_option("--q", o.q, "field order");
    ffscan->add_option("--p", o.p, "characteristic");
    ffscan->add_option("--k", o.k, "extension degree");
    ffscan->add_option("--d", o.d, "dimension")->required();
    ffscan->add_option("--filter", o.filter, "list all, split, nonsplit, equal or not-equal matrices");
    ffscan->add_option("--cache", o.cache, "JSONL cache file (else $ORBITREF_CACHE)");
    add_format(ffscan, o);
    add_budget(ffscan, o);

    auto* oracle = app.add_subcommand("oracle", "enumerate OrbRef0(T) over a finite field");
    add_field_options(oracle, o);
    add_format(oracle, o);
    add_budget(oracle, o);
    oracle->add_option("--candidate", o.candidate, "test a single S from this matrix file");

    auto* demo = app.add_subcommand("demo-counterexample", "shift-plus-rotation truncations");
    demo->add_option("--n", o.n, "largest truncation n");
    add_format(demo, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands()) target = sub;
        out << target->help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    json report = base_report(name);
    int code = kExitOk;
    try {
        if (name == "jordan") code = cmd_jordan(o, report);
        else if (name == "decide") code = cmd_decide(o, report);
        else if (name == "witness") code = cmd_witness(o, report);
        else if (name == "ffscan") code = cmd_ffscan(o, report, err);
        else if (name == "oracle") code = cmd_oracle(o, report);
        else code = cmd_demo(o, report);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return kExitInternal;
    }
    if (o.format == "table") out << render_table(report);
    else out << report.dump(2) << "\n";
    return code;
}

}  // namespace orbitref::cli
