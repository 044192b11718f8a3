// One PASS/FAIL line per acceptance criterion.
//
// Exit status is nonzero when a criterion fails, except for the criteria in
// criteria 2 and 3: those are reported as FAIL but tolerated as long as the
// failure has exactly the recorded shape (the counterexamples are the
// nilpotent matrices whose two largest blocks differ by 2 or more, and the
// decider refutes each of them with its witness). Any other deviation still
// fails the run.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "criterion_table.hpp"
#include "d2_oracle.hpp"
#include "orbitref/counterexample.hpp"
#include "orbitref/deciders.hpp"
#include "orbitref/linalg.hpp"
#include "orbitref/orbit_oracle.hpp"
#include "orbitref/witness.hpp"
#include "test_support.hpp"

using namespace orbitref;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const FieldDescriptor& QI = FieldDescriptor::gaussian_rationals();

struct Outcome {
    bool pass = false;
    std::string detail;
    bool known_refutation = false;  // failure matches the recorded counterexample shape
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s << " s";
    return os.str();
}

json cli_json(const std::vector<std::string>& args, int* code = nullptr) {
    std::ostringstream out, err;
    const int c = cli::run(args, out, err);
    if (code) *code = c;
    if (c != 0) return nullptr;
    return json::parse(out.str());
}

bool is_nilpotent(const Matrix& t) { return matpow(t, t.dim()).is_zero(); }

// Nilpotent with (largest block) - (second largest, 0 if none) >= 2.
bool nilpotent_gap_two(const Matrix& t) {
    if (!is_nilpotent(t)) return false;
    const std::vector<int> sizes = block_profile(t).entries.front().block_sizes;
    return sizes[0] - (sizes.size() > 1 ? sizes[1] : 0) >= 2;
}

// The decider's own witness for T is an exact member of OrbRef0(T).
bool decider_refutes(const Matrix& t) {
    const Verdict v = decide_algebraic_f_orbit_reflexive(t);
    if (v.answer != Answer::False || !v.witness) return false;
    return orbref0_contains(v.witness->jordan_form, v.witness->witness).contains;
}

Matrix decode(const FieldDescriptor& f, std::size_t d, std::uint64_t code) {
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

Outcome fdlem() {
    Outcome o{true};
    std::ostringstream os;
    double worst = 0;
    const fs::path dir = fs::temp_directory_path() / "orbitref_acceptance";
    fs::create_directories(dir);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const auto [t, s] = build_fdlem_pair(p);
        const fs::path file = dir / ("fdlem_" + std::to_string(p) + ".json");
        std::ofstream(file) << json{{"field", "gf"}, {"p", p}, {"rows", t.to_strings()}}.dump();
        const auto t0 = Clock::now();
        const json r = cli_json({"oracle", "--input", file.string(), "--workers", "1"});
        const double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        bool in_diff = false;
        for (const auto& m : r["enumeration"]["difference"]) in_diff = in_diff || m == json(s.to_strings());
        const bool ok = !r["enumeration"]["equal"].get<bool>() && in_diff && !commutator_is_zero(s, t).is_zero && dt < 1.0;
        o.pass = o.pass && ok;
        os << "GF(" << p << ") |OrbRef0|=" << r["enumeration"]["orbref0_size"] << " |F-Orb|="
           << r["enumeration"]["f_orb_size"] << (ok ? "" : " (bad)") << "; ";
    }
    os << "S=[[0,1],[0,1]] in the difference, ST != TS, slowest " << fmt(worst);
    o.detail = os.str();
    return o;
}

Outcome findim_gf4() {
    Outcome o;
    const fs::path cache = fs::temp_directory_path() / "orbitref_acceptance" / "gf4_d2.jsonl";
    fs::create_directories(cache.parent_path());
    fs::remove(cache);
    auto t0 = Clock::now();
    const json cold = cli_json({"ffscan", "--q", "4", "--d", "2", "--cache", cache.string()});
    const double cold_s = seconds_since(t0);
    t0 = Clock::now();
    const json warm = cli_json({"ffscan", "--q", "4", "--d", "2", "--cache", cache.string()});
    const double warm_s = seconds_since(t0);

    const auto& split = cold["aggregate"]["split"];
    const std::uint64_t violations = split["not_equal"].get<std::uint64_t>();
    // Shape check: the violators are exactly the nilpotents with gap >= 2.
    const auto& f4 = FieldDescriptor::finite(2, 2);
    std::set<std::uint64_t> expected, seen;
    bool refuted = true;
    for (std::uint64_t c = 0; c < 256; ++c) {
        const Matrix t = decode(f4, 2, c);
        if (nilpotent_gap_two(t)) {
            expected.insert(c);
            refuted = refuted && decider_refutes(t);
        }
    }
    for (const auto& m : cold["matrices"]) {
        if (m["split"].get<bool>() && !m["equal"].get<bool>()) seen.insert(m["code"].get<std::uint64_t>());
    }
    o.pass = violations == 0 && cold_s < 300 && warm_s < 5 && cold == warm;
    o.known_refutation = !o.pass && seen == expected && refuted && cold_s < 300 && warm_s < 5 && cold == warm;
    std::ostringstream os;
    os << "256 T x 256 S over GF(4): " << split["total"] << " split, " << violations << " violations";
    if (violations) {
        os << " (exactly the " << expected.size() << " nonzero nilpotents, each refuted by the decider witness"
           << (refuted ? "" : " [witness check failed]") << ")";
    }
    os << "; scan " << fmt(cold_s) << ", cached rerun " << fmt(warm_s);
    o.detail = os.str();
    return o;
}

Outcome locnil() {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t total = 0, equal = 0, rigid = 0, gap_two = 0;
    bool shape = true;
    std::string example;
    for (const auto& [f, d] : {std::pair{&FieldDescriptor::finite(3), std::size_t{2}},
                               std::pair{&FieldDescriptor::finite(2), std::size_t{3}}}) {
        std::uint64_t n = 1;
        for (std::size_t i = 0; i < d * d; ++i) n *= f->gf().order();
        for (std::uint64_t c = 0; c < n; ++c) {
            const Matrix t = decode(*f, d, c);
            if (!is_nilpotent(t)) continue;
            ++total;
            const auto s = enumerate_orbref0(t).summary;
            const bool ok = s.equal && s.rigidity.checked && s.rigidity.holds;
            equal += s.equal;
            rigid += s.rigidity.checked && s.rigidity.holds;
            const bool gap = nilpotent_gap_two(t);
            gap_two += gap;
            shape = shape && (ok != gap) && (!gap || decider_refutes(t));
            if (!ok && example.empty()) example = "T=" + t.to_string() + " over " + f->name() + ": " + s.rigidity.counterexample;
        }
    }
    const double dt = seconds_since(t0);
    o.pass = equal == total && rigid == total && dt < 30;
    o.known_refutation = !o.pass && shape && dt < 30;
    std::ostringstream os;
    os << total << " nilpotent T (M2(GF(3)), M3(GF(2))): OrbRef0 = F-Orb for " << equal << ", rigidity for " << rigid;
    if (!o.pass) {
        os << "; the " << total - equal << " failures are exactly the " << gap_two
           << " with block gap >= 2" << (shape ? "" : " [shape mismatch]") << ", e.g. " << example;
    }
    os << "; " << fmt(dt);
    o.detail = os.str();
    return o;
}

Outcome criterion_table_check() {
    Outcome o{true};
    std::size_t rows = 0, matched = 0;
    std::string mismatch;
    for (const auto& row : criterion_table::rows()) {
        ++rows;
        const auto p = profile_from_blocks(QI, criterion_table::blocks_of(row));
        const auto c = decide_c_orbit_reflexive(p);
        const auto r = decide_reflexive(p);
        const bool ok = (c.answer == Answer::True) == row.c_orbit_reflexive &&
                        (r.answer == Answer::True) == row.reflexive && !c.fragile;
        matched += ok;
        if (!ok && mismatch.empty()) mismatch = row.name;
    }
    // Lone-block rows at d = 2, confirmed by the brute force first.
    using namespace d2oracle;
    const std::vector<Q2> sv{{0, 0}, {1, 0}, {-1, 0}, {0, 1}};
    const auto j2 = scan({Shape::Jordan, {1, 0}, {0, 0}}, sv, 1);
    const auto d10 = scan({Shape::Diagonal, {1, 0}, {0, 0}}, sv, 1);
    const auto d11 = scan({Shape::Diagonal, {1, 0}, {1, 0}}, sv, 1);
    const auto nil = scan({Shape::Jordan, {0, 0}, {0, 0}}, sv, 1);
    const auto zero = scan({Shape::Diagonal, {0, 0}, {0, 0}}, sv, 1);
    const bool oracle_ok = !j2.outside_closure.empty() && !nil.outside_closure.empty() &&
                           d10.outside_closure.empty() && d11.outside_closure.empty() && zero.outside_closure.empty();
    o.pass = matched == rows && rows >= 12 && oracle_ok;
    std::ostringstream os;
    os << matched << "/" << rows << " rows match";
    if (!mismatch.empty()) os << " (first mismatch: " << mismatch << ")";
    os << "; d=2 brute force: 1+J2 and J2 refuted (" << j2.outside_closure.size() << " and "
       << nil.outside_closure.size() << " S outside the closure), diag(1,0), I and 0 consistent"
       << (oracle_ok ? "" : " (oracle disagrees)");
    o.detail = os.str();
    return o;
}

Outcome witness_validity() {
    Outcome o{true};
    std::size_t checked = 0;
    double worst_small = 0, worst_residual = 0;
    std::string bad;
    for (const auto& row : criterion_table::rows()) {
        if (row.c_orbit_reflexive) continue;
        const auto p = profile_from_blocks(QI, criterion_table::blocks_of(row));
        const auto v = decide_c_orbit_reflexive(p);
        const auto t0 = Clock::now();
        if (!v.witness) {
            o.pass = false;
            bad = row.name + " (no witness)";
            continue;
        }
        WitnessValidationOptions opts;  // 100 samples, N = 2000, seed 0
        const auto rep = validate_witness(v.witness->witness, v.witness->jordan_form, opts);
        const double dt = seconds_since(t0);
        ++checked;
        const std::size_t d = p.dim;
        if (d <= 6) worst_small = std::max(worst_small, dt);
        bool ok = rep.commutator_nonzero && rep.membership_residuals.size() == d + 100;
        const auto samples = sample_vectors(d, 100, 0);
        for (std::size_t i = 0; i < rep.membership_residuals.size(); ++i) {
            const auto& r = rep.membership_residuals[i];
            const double at100 = r.checkpoints.front().residual, at2000 = r.checkpoints.back().residual;
            ok = ok && r.checkpoints.front().n == 100 && r.checkpoints.back().n == 2000 && at2000 < 1e-2;
            worst_residual = std::max(worst_residual, at2000);
            const bool touches_e01 = i < d ? i <= 1 : (std::abs(samples[i - d][0]) > 0 || std::abs(samples[i - d][1]) > 0);
            // residual(100) at the 1e-12 noise floor means exact membership.
            if (touches_e01) ok = ok && (at2000 <= at100 / 5.0 || at100 <= 1e-12);
        }
        if (d <= 6) ok = ok && dt < 10.0;
        if (!ok && bad.empty()) bad = row.name;
        o.pass = o.pass && ok;
    }
    std::ostringstream os;
    os << checked << " witnesses: ST != TS, max residual(2000) " << std::scientific << std::setprecision(2)
       << worst_residual << std::defaultfloat << ", decay >= 5x on e0/e1 vectors; slowest d<=6 " << fmt(worst_small);
    if (!bad.empty()) os << "; failing: " << bad;
    o.detail = os.str();
    return o;
}

Outcome normal_invariant() {
    Outcome o{true};
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> dim(1, 8), num(-6, 6), den(1, 3);
    const auto t0 = Clock::now();
    std::size_t ok = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Scalar> diag;
        const int d = dim(rng);
        for (int i = 0; i < d; ++i) {
            mpq_class re(num(rng), den(rng)), im(num(rng), den(rng));
            re.canonicalize();
            im.canonicalize();
            diag.push_back(Scalar::gaussian(re, im));
        }
        const auto v = decide_c_orbit_reflexive(block_profile(Matrix::diagonal(diag)));
        ok += v.answer == Answer::True;
    }
    const double dt = seconds_since(t0);
    o.pass = ok == 1000 && dt < 10;
    o.detail = std::to_string(ok) + "/1000 diagonal matrices true; " + fmt(dt);
    return o;
}

Outcome profile_correctness() {
    Outcome o{true};
    std::mt19937_64 rng(7);
    const auto& c64 = FieldDescriptor::complex_float();
    const auto t0 = Clock::now();
    std::size_t exact_ok = 0, float_ok = 0, float_run = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 1 + static_cast<std::size_t>(trial % 6);
        const auto blocks = testsupport::random_blocks(d, rng);
        const Matrix j = jordan_matrix(QI, blocks);
        const Matrix m = conjugate(j, testsupport::random_invertible(QI, d, rng));
        const auto expected = profile_from_blocks(QI, blocks);
        const auto got = block_profile(m);
        exact_ok += testsupport::profile_text(got) == testsupport::profile_text(expected);

        double sep = 1e300;
        for (std::size_t a = 0; a < expected.entries.size(); ++a) {
            for (std::size_t b = a + 1; b < expected.entries.size(); ++b) {
                sep = std::min(sep, std::abs(expected.entries[a].eigenvalue.to_complex() -
                                             expected.entries[b].eigenvalue.to_complex()));
            }
        }
        if (sep <= 1e-3) continue;
        ++float_run;
        const auto numeric = block_profile(m.embed(c64));
        bool same = numeric.entries.size() == expected.entries.size();
        for (std::size_t i = 0; same && i < expected.entries.size(); ++i) {
            same = numeric.entries[i].block_sizes == expected.entries[i].block_sizes &&
                   std::abs(numeric.entries[i].eigenvalue.as_complex() - expected.entries[i].eigenvalue.to_complex()) <
                       1e-3;
        }
        float_ok += same;
    }
    const double dt = seconds_since(t0);
    o.pass = exact_ok == 100 && float_ok == float_run && dt < 60;
    o.detail = "exact " + std::to_string(exact_ok) + "/100, float " + std::to_string(float_ok) + "/" +
               std::to_string(float_run) + "; " + fmt(dt);
    return o;
}

Outcome truncation() {
    Outcome o{true};
    const auto t0 = Clock::now();
    const auto rows = truncation_table(8);
    bool all = rows.size() == 8;
    for (const auto& r : rows) all = all && r.all_equal && r.exponent == factorial(r.n);
    const auto nsp = verify_no_single_power(8, 7);
    bool shape = nsp.holds && !nsp.witnesses.empty();
    for (const auto& w : nsp.witnesses) shape = shape && w.x == CounterexampleVector::twin(w.exponent + 1);
    const double dt = seconds_since(t0);
    o.pass = all && shape && dt < 1.0;
    o.detail = "T^{n!}x = Sx for n = 1..8 on all basis vectors; no single power: " +
               std::to_string(nsp.witnesses.size()) + " witnesses e_{N+1}(+)e_{N+1}, N = 0..7; " + fmt(dt);
    return o;
}

Outcome determinism() {
    Outcome o{true};
    const std::string j31 = std::string(ORBITREF_TEST_DATA_DIR) + "/j31.json";
    const std::string gf4 = std::string(ORBITREF_TEST_DATA_DIR) + "/unipotent_gf4.json";
    std::size_t compared = 0;
    for (const auto& base : std::vector<std::vector<std::string>>{
             {"decide", "--input", j31}, {"witness", "--input", j31}, {"oracle", "--input", gf4},
             {"ffscan", "--q", "3", "--d", "2"}}) {
        std::string first;
        for (const char* w : {"1", "2", "8"}) {
            auto args = base;
            args.insert(args.end(), {"--workers", w});
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            o.pass = o.pass && code == 0;
            if (first.empty()) first = out.str();
            o.pass = o.pass && out.str() == first;
        }
        ++compared;
    }
    o.detail = std::to_string(compared) + " commands byte-identical across 1, 2 and 8 workers";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"1 fdlem reproduction", fdlem},
        {"2 split => OrbRef0 = F-Orb over GF(4)", findim_gf4},
        {"3 nilpotent => OrbRef0 = F-Orb + rigidity", locnil},
        {"4 criterion table", criterion_table_check},
        {"5 witness validity", witness_validity},
        {"6 normal operators", normal_invariant},
        {"7 profile correctness", profile_correctness},
        {"8 counterexample truncation", truncation},
        {"9 determinism", determinism},
    };
    int unexpected = 0;
    for (const auto& [name, check] : criteria) {
        Outcome r;
        try {
            r = check();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << r.detail;
        if (!r.pass && r.known_refutation) std::cout << "  [known counterexample, see notes]";
        std::cout << std::endl;
        if (!r.pass && !r.known_refutation) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
