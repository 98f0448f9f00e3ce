// Command-line surface of the library: tuple reports, scans, axiom
// suites, duality and double checks.  Each invocation prints exactly one
// JSON object on stdout; a human-readable summary and timing go to
// stderr unless --json-only is given.  Exit codes: 0 success, 1 property
// failure or internal disagreement, 2 invalid input.

#include "qtaft/axioms.hpp"
#include "qtaft/doubles.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>

namespace {

using nlohmann::json;
using namespace qtaft;

constexpr int kSchemaVersion = 1;

struct CommonOptions {
    std::uint64_t seed = kDefaultScanSeed;
    bool json_only = false;
    int parallelism = 1;
    std::string scope = "exhaustive";
    std::string mode = "sampled";
    bool allow_large = false;
};

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json params_json(const GtaParameters& p) {
    return {{"N", p.N},   {"a1", p.a1}, {"a2", p.a2},       {"b1", p.b1},
            {"b2", p.b2}, {"Nx", p.Nx}, {"Ny", p.Ny},       {"valid", true},
            {"dimension", p.dimension()}};
}

json classifier_json(const ClassifierReport& r) {
    auto power = [](const std::optional<std::int64_t>& v) {
        return v ? json(*v) : json(nullptr);
    };
    return {{"n", r.n},
            {"j", r.j},
            {"powers",
             {{"a1", power(r.pow_a1)},
              {"a2", power(r.pow_a2)},
              {"b1", power(r.pow_b1)},
              {"b2", power(r.pow_b2)}}},
            {"mu", {{r.mu[0][0], r.mu[0][1]}, {r.mu[1][0], r.mu[1][1]}}},
            {"detMu", r.det_mu},
            {"tau", r.tau},
            {"nu", r.nu},
            {"swapped", r.swapped},
            {"hasPair", r.has_pair},
            {"reason", r.reason}};
}

json certificates_json(const std::vector<PiiCertificate>& certs) {
    json out = json::array();
    for (const auto& c : certs)
        out.push_back({{"c", c.c}, {"d", c.d}, {"modular", c.modular}});
    return out;
}

void emit(const json& report, const std::string& summary, const CommonOptions& opt,
          const Timer& timer) {
    std::cout << report.dump(2) << "\n";
    if (!opt.json_only)
        std::cerr << summary << " (" << timer.seconds() << "s)\n";
}

int emit_invalid(const std::string& command, const std::exception& e,
                 const CommonOptions& opt, const Timer& timer) {
    json report{{"schema_version", kSchemaVersion},
                {"command", command},
                {"valid", false},
                {"error", e.what()}};
    emit(report, std::string("invalid input: ") + e.what(), opt, timer);
    return 2;
}

int run_check(std::array<std::int64_t, 5> t, const CommonOptions& opt) {
    Timer timer;
    ParamsPtr params;
    try {
        params = make_parameters(t[0], t[1], t[2], t[3], t[4]);
    } catch (const NotAParameterTuple& e) {
        return emit_invalid("check", e, opt, timer);
    }
    const auto& p = *params;

    const auto classifier = classify(p);
    const auto certs = oracle_pairs(p);
    const bool oracle_has_pair = !certs.empty();
    const bool agreement = classifier.has_pair == oracle_has_pair;
    const auto [e_xi, e_g] = distinguished_grouplikes(params);

    json report{
        {"schema_version", kSchemaVersion},
        {"command", "check"},
        {"params", params_json(p)},
        {"classifier", classifier_json(classifier)},
        {"certificates", certificates_json(certs)},
        {"oracleHasPair", oracle_has_pair},
        {"agreement", agreement},
        {"structure",
         {{"eXi", e_xi},
          {"eG", e_g},
          {"unimodular", e_xi == 0},
          {"dualUnimodular", e_g == 0},
          {"quasitriangular", is_quasitriangular(p)}}}};

    emit(report,
         p.to_string() + (classifier.has_pair ? ": pair in involution exists"
                                              : ": no pair in involution") +
             (agreement ? ", classifier and oracle agree"
                        : ", CLASSIFIER/ORACLE DISAGREEMENT"),
         opt, timer);
    return agreement ? 0 : 1;
}

int run_scan(std::int64_t max_n, const CommonOptions& opt) {
    Timer timer;
    if (max_n < 2) {
        std::invalid_argument e("scan requires max N >= 2");
        return emit_invalid("scan", e, opt, timer);
    }
    const auto mode =
        opt.mode == "exhaustive" ? ScanMode::Exhaustive : ScanMode::Sampled;
    const auto result = cross_validate(max_n, mode, opt.seed, opt.parallelism);

    json rows = json::array();
    for (const auto& r : result.rows)
        rows.push_back({{"N", r.N},
                        {"validTuples", r.valid_tuples},
                        {"piiFree", r.pii_free},
                        {"modularFree", r.modular_free},
                        {"disagreements", r.disagreements}});
    json report{{"schema_version", kSchemaVersion},
                {"command", "scan"},
                {"maxN", max_n},
                {"mode", opt.mode},
                {"seed", opt.seed},
                {"rows", rows},
                {"ok", result.ok}};
    if (result.counterexample) {
        const auto& c = *result.counterexample;
        report["counterexample"] = {{"N", c[0]}, {"a1", c[1]}, {"a2", c[2]},
                                    {"b1", c[3]}, {"b2", c[4]}};
    }
    emit(report,
         result.ok ? "scan clean up to N = " + std::to_string(max_n)
                   : "scan found a classifier/oracle disagreement",
         opt, timer);
    return result.ok ? 0 : 1;
}

int run_axioms(std::array<std::int64_t, 5> t, const CommonOptions& opt) {
    Timer timer;
    ParamsPtr params;
    try {
        params = make_parameters(t[0], t[1], t[2], t[3], t[4]);
    } catch (const NotAParameterTuple& e) {
        return emit_invalid("axioms", e, opt, timer);
    }
    const auto scope = opt.scope == "sampled" ? CheckScope::Sampled
                                              : CheckScope::Exhaustive;
    auto checks = hopf_axiom_checks(params, scope, opt.seed);

    // Integral and Radford checks ride along: they are exact structure
    // statements on the same tuple.
    bool integral_ok = true;
    std::string integral_witness;
    try {
        left_integral(params);
    } catch (const std::logic_error& e) {
        integral_ok = false;
        integral_witness = e.what();
    }
    std::optional<BasisMonomial> radford_witness;
    const bool radford_ok = verify_radford_s4(params, &radford_witness);

    json axiom_rows = json::array();
    bool ok = integral_ok && radford_ok;
    for (const auto& c : checks) {
        ok = ok && c.ok;
        axiom_rows.push_back({{"name", c.name},
                              {"ok", c.ok},
                              {"witness", c.witness ? json(*c.witness) : json(nullptr)}});
    }
    axiom_rows.push_back({{"name", "left_integral"},
                          {"ok", integral_ok},
                          {"witness", integral_ok ? json(nullptr) : json(integral_witness)}});
    axiom_rows.push_back(
        {{"name", "radford_s4"},
         {"ok", radford_ok},
         {"witness", radford_witness ? json(radford_witness->to_string()) : json(nullptr)}});

    json report{{"schema_version", kSchemaVersion},
                {"command", "axioms"},
                {"params", params_json(*params)},
                {"scope", opt.scope},
                {"seed", opt.seed},
                {"axioms", axiom_rows},
                {"ok", ok}};
    emit(report, params->to_string() + (ok ? ": all axioms pass" : ": AXIOM FAILURE"),
         opt, timer);
    return ok ? 0 : 1;
}

int run_dual(std::array<std::int64_t, 5> t, const CommonOptions& opt) {
    Timer timer;
    ParamsPtr params;
    try {
        params = make_parameters(t[0], t[1], t[2], t[3], t[4]);
    } catch (const NotAParameterTuple& e) {
        return emit_invalid("dual", e, opt, timer);
    }
    const auto result = check_duality(params);

    // Dual of the dual tuple: (b1, b2, a1, a2) -> (a1, a2, b1, b2).
    const auto dual_params = make_parameters(params->N, result.dual_tuple[0],
                                             result.dual_tuple[1], result.dual_tuple[2],
                                             result.dual_tuple[3]);
    const auto bidual = check_duality(dual_params);
    const bool bidual_matches =
        bidual.dual_tuple ==
        std::array<std::int64_t, 4>{params->a1, params->a2, params->b1, params->b2};

    const bool ok = result.ok && bidual.ok && bidual_matches;
    json report{{"schema_version", kSchemaVersion},
                {"command", "dual"},
                {"params", params_json(*params)},
                {"dualTuple", result.dual_tuple},
                {"bidualTuple",
                 {bidual.dual_tuple[0], bidual.dual_tuple[1], bidual.dual_tuple[2],
                  bidual.dual_tuple[3]}},
                {"bidualMatches", bidual_matches},
                {"failures", result.failures},
                {"ok", ok}};
    emit(report,
         params->to_string() + (ok ? ": duality verified" : ": DUALITY FAILURE"),
         opt, timer);
    return ok ? 0 : 1;
}

int run_double(std::array<std::int64_t, 5> t, const CommonOptions& opt) {
    Timer timer;
    ParamsPtr params;
    try {
        params = make_parameters(t[0], t[1], t[2], t[3], t[4]);
    } catch (const NotAParameterTuple& e) {
        return emit_invalid("double", e, opt, timer);
    }
    const auto& p = *params;
    if (p.N > 4 && !opt.allow_large) {
        std::invalid_argument e(
            "double construction for N > 4 requires --allow-large");
        return emit_invalid("double", e, opt, timer);
    }

    const auto certs = oracle_pairs(p);
    bool ok = true;
    json report{{"schema_version", kSchemaVersion},
                {"command", "double"},
                {"params", params_json(p)},
                {"hasPair", !certs.empty()}};

    if (!certs.empty()) {
        const auto& cert = certs.front();
        std::optional<BasisMonomial> cert_witness;
        const bool cert_ok = verify_certificate(params, cert, &cert_witness);
        std::optional<DoublePairWitness> witness;
        const bool iso_ok = cert_ok && pii_isomorphism_check(params, cert, &witness);
        ok = cert_ok && iso_ok;
        report["certificate"] = {{"c", cert.c}, {"d", cert.d}, {"modular", cert.modular}};
        report["certificateVerified"] = cert_ok;
        report["isoMultiplicative"] = iso_ok;
        if (witness)
            report["witness"] = {
                {"u", witness->u.first.to_string() + " (x) " + witness->u.second.to_string()},
                {"v", witness->v.first.to_string() + " (x) " + witness->v.second.to_string()}};
    } else {
        const auto search = triangular_iso_search(params);
        ok = search.survivors.empty();
        report["triangularSurvivors"] = search.survivors.size();
        report["pairsChecked"] = search.pairs_checked;
    }
    report["ok"] = ok;
    emit(report,
         p.to_string() + (ok ? ": double check passed" : ": DOUBLE CHECK FAILURE"),
         opt, timer);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computer algebra for generalised Taft algebras: Hopf "
                 "structure, duals, doubles, and pairs in involution"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::array<std::int64_t, 5> tuple{};
    std::int64_t max_n = 8;

    auto add_tuple = [&](CLI::App* cmd) {
        cmd->add_option("N", tuple[0], "group order N")->required();
        cmd->add_option("a1", tuple[1], "coproduct exponent a1")->required();
        cmd->add_option("a2", tuple[2], "coproduct exponent a2")->required();
        cmd->add_option("b1", tuple[3], "commutation exponent b1")->required();
        cmd->add_option("b2", tuple[4], "commutation exponent b2")->required();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opt.seed, "seed for sampled scopes");
        cmd->add_flag("--json-only", opt.json_only,
                      "suppress the human-readable summary on stderr");
    };

    auto* check = app.add_subcommand(
        "check", "validate a tuple and decide pair-in-involution existence");
    add_tuple(check);
    add_common(check);

    auto* scan = app.add_subcommand(
        "scan", "cross-validate classifier against oracle for all N up to a bound");
    scan->add_option("maxN", max_n, "largest group order to scan");
    scan->add_option("--max-n", max_n, "largest group order to scan");
    scan->add_option("--mode", opt.mode, "exhaustive | sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    scan->add_option("--parallelism", opt.parallelism, "worker threads");
    add_common(scan);

    auto* axioms = app.add_subcommand("axioms", "run the Hopf axiom suite on a tuple");
    add_tuple(axioms);
    axioms->add_option("--scope", opt.scope, "exhaustive | sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    add_common(axioms);

    auto* dual = app.add_subcommand("dual", "verify the dual presentation of a tuple");
    add_tuple(dual);
    dual->add_option("--scope", opt.scope, "exhaustive | sampled");
    add_common(dual);

    auto* dbl = app.add_subcommand(
        "double", "check the Drinfeld/anti-Drinfeld isomorphism criterion");
    add_tuple(dbl);
    dbl->add_option("--scope", opt.scope, "exhaustive | sampled");
    dbl->add_flag("--allow-large", opt.allow_large,
                  "permit the quadratic-size double construction for N > 4");
    add_common(dbl);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(tuple, opt);
        if (scan->parsed()) return run_scan(max_n, opt);
        if (axioms->parsed()) return run_axioms(tuple, opt);
        if (dual->parsed()) return run_dual(tuple, opt);
        if (dbl->parsed()) return run_double(tuple, opt);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
