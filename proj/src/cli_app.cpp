#include "hkface/cli_app.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hkface/json_io.hpp"
#include "hkface/limits.hpp"
#include "hkface/shelling.hpp"

namespace hkface::cli {

namespace {

struct InputOptions {
    std::string input_path;
    std::string family_spec;
    std::string exponents;
    std::string format = "text";
    std::uint64_t budget = EnumerationBudget{}.max_lattice_points;
    int threads = 1;
};

void add_input_options(CLI::App* cmd, InputOptions& opt, bool with_exponents = true) {
    auto* input = cmd->add_option("--input", opt.input_path, "JSON input file");
    auto* family = cmd->add_option("--family", opt.family_spec,
                                   "inline family spec, e.g. path:5, cycle:6, complete:4, bipartite:2,3, simplex:3");
    input->excludes(family);
    family->excludes(input);
    if (with_exponents)
        cmd->add_option("--v", opt.exponents, "comma-separated exponents v_1,..,v_r (default: all ones)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}))
        ->capture_default_str();
    cmd->add_option("--threads", opt.threads, "worker threads for enumeration")->capture_default_str();
}

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long value = std::stol(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

SimplicialComplex complex_from_family_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= spec.size())
        throw ValidationError("family spec must look like name:params, e.g. cycle:5");
    return named_family(spec.substr(0, colon), parse_long_list(spec.substr(colon + 1)));
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
    return j;
}

SimplicialComplex load_complex(const InputOptions& opt) {
    if (!opt.family_spec.empty()) return complex_from_family_spec(opt.family_spec);
    if (!opt.input_path.empty()) return parse_complex(load_json(opt.input_path));
    throw std::invalid_argument("exactly one of --input or --family is required");
}

ExponentVector load_exponents(const InputOptions& opt, const SimplicialComplex& c) {
    if (opt.exponents.empty()) return ExponentVector(c.num_vertices());
    return ExponentVector(parse_long_list(opt.exponents));
}

EnumerationBudget effective_budget(const InputOptions& opt, bool flag_given) {
    EnumerationBudget b;
    if (const char* env = std::getenv("HKFACE_BUDGET"); env && !flag_given) {
        b.max_lattice_points = std::strtoull(env, nullptr, 10);
        if (b.max_lattice_points == 0) throw std::invalid_argument("HKFACE_BUDGET must be a positive integer");
    } else {
        b.max_lattice_points = opt.budget;
    }
    return b;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_hk(const InputOptions& opt, std::ostream& out) {
    const auto c = load_complex(opt);
    const auto v = load_exponents(opt, c);
    const BivariatePolynomial P = ghk_polynomial(c, v);
    if (opt.format == "json") {
        emit_json(out, json{{"binomial", P.str_binomial_basis()},
                            {"expanded", P.str_expanded()},
                            {"terms", polynomial_to_json(P)}});
    } else if (opt.format == "tsv") {
        out << "q_deg\tk_deg\tcoeff\n";
        const auto& terms = P.terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it)
            out << it->first.first << "\t" << it->first.second << "\t" << rational_to_string(it->second) << "\n";
    } else {
        out << P.str_binomial_basis() << "\n";
        out << "expanded: " << P.str_expanded() << "\n";
    }
    return 0;
}

int cmd_coeffs(const InputOptions& opt, std::ostream& out) {
    const auto c = load_complex(opt);
    const auto v = load_exponents(opt, c);
    const CoefficientTable t = hilbert_coefficients(c, v);
    if (opt.format == "json") {
        emit_json(out, coefficient_table_to_json(t));
    } else if (opt.format == "tsv") {
        out << "i\te_i(q)\tL_i\n";
        for (size_t i = 0; i < t.e.size(); ++i)
            out << i << "\t" << t.e[i].str() << "\t" << rational_to_string(t.limits[i]) << "\n";
    } else {
        out << "dimension d = " << t.dimension << "\n";
        for (size_t i = 0; i < t.e.size(); ++i)
            out << "e_" << i << "(q) = " << t.e[i].str() << "   (L_" << i << " = "
                << rational_to_string(t.limits[i]) << ")\n";
        out << "e_HK(J^k) = " << to_bivariate(t.ehk_powers).str_binomial_basis() << "\n";
    }
    return 0;
}

int cmd_ehk(const InputOptions& opt, long k_max, std::ostream& out) {
    const auto c = load_complex(opt);
    const auto v = load_exponents(opt, c);
    if (opt.format == "json") {
        json rows = json::array();
        for (long k = 1; k <= k_max; ++k)
            rows.push_back({{"k", k}, {"ehk", rational_to_string(ehk_of_powers(c, v, k))}});
        emit_json(out, rows);
    } else {
        if (opt.format == "tsv") out << "k\tehk\n";
        for (long k = 1; k <= k_max; ++k) {
            if (opt.format == "tsv")
                out << k << "\t" << rational_to_string(ehk_of_powers(c, v, k)) << "\n";
            else
                out << "e_HK(J^" << k << ") = " << rational_to_string(ehk_of_powers(c, v, k)) << "\n";
        }
    }
    return 0;
}

int cmd_audit(const InputOptions& opt, bool assume_cm, std::ostream& out) {
    const auto c = load_complex(opt);
    const auto v = load_exponents(opt, c);
    const AuditReport rep = smirnov_audit(c, v, assume_cm);
    if (opt.format == "json") {
        emit_json(out, audit_report_to_json(rep));
        return 0;
    }
    out << "ghk: " << rep.ghk.str_binomial_basis() << "\n";
    out << "e0 = " << rep.e0.get_str() << ", e1(q=1) = " << rational_to_string(rep.e1_at_q1)
        << ", colength = " << rep.colength.get_str() << "\n";
    out << "stable: " << (rep.stable ? "true" : "false")
        << "  (all q: " << (rep.stable_all_q ? "true" : "false") << ")\n";
    out << "limit identity L_1 = e0 - e_HK: " << (rep.limit_identity_holds ? "true" : "false") << "\n";
    out << "conjecture status: " << to_string(rep.conjecture_status) << "\n";
    out << "rossi-valla identity: " << (rep.rossi_valla_holds ? "true" : "false") << "\n";
    out << "cm certificate: " << to_string(rep.cm_certificate) << "\n";
    if (rep.candidate_reduction_number)
        out << "candidate reduction number: " << *rep.candidate_reduction_number << " ("
            << rep.reduction_number_note << ")\n";
    else
        out << "candidate reduction number: none (" << rep.reduction_number_note << ")\n";
    return 0;
}

int cmd_verify(const InputOptions& opt, long q_max, long k_max, bool budget_given, std::ostream& out) {
    const auto c = load_complex(opt);
    const auto v = load_exponents(opt, c);
    const EnumerationBudget budget = effective_budget(opt, budget_given);
    const CrossValidationReport rep = cross_validate(c, v, q_max, k_max, budget, opt.threads);
    const size_t matched = static_cast<size_t>(
        std::count_if(rep.points.begin(), rep.points.end(), [](const auto& p) { return p.match; }));
    if (opt.format == "json") {
        emit_json(out, cross_validation_to_json(rep));
    } else if (opt.format == "tsv") {
        out << "q\tk\tclosed_form\toracle\tmatch\n";
        for (const auto& p : rep.points)
            out << p.q << "\t" << p.k << "\t" << rational_to_string(p.closed_form) << "\t" << p.oracle_count
                << "\t" << (p.match ? "yes" : "no") << "\n";
    } else {
        out << matched << "/" << rep.points.size() << " points match "
            << ghk_polynomial(c, v).str_binomial_basis() << "\n";
        for (const auto& p : rep.points)
            if (!p.match)
                out << "mismatch at q=" << p.q << " k=" << p.k << ": closed form "
                    << rational_to_string(p.closed_form) << " vs oracle " << p.oracle_count << "\n";
    }
    return rep.all_match ? 0 : 2;
}

int cmd_limits(const std::string& input_path, const std::string& format, std::optional<long> power,
               std::ostream& out) {
    if (input_path.empty()) throw std::invalid_argument("limits requires --input with a power-table JSON file");
    const PowerTable t = parse_power_table(load_json(input_path));

    std::vector<Rational> L{t.e0};
    for (int i = 1; i <= t.d; ++i) L.push_back(limit_L_i(t, i));

    const long n_lo = std::max<long>(1, t.r - t.d + 1);
    const long n_hi = t.r + 3;

    json j;
    j["table"] = power_table_to_json(t);
    json limits = json::array();
    for (int i = 0; i <= t.d; ++i) limits.push_back(rational_to_string(L[static_cast<size_t>(i)]));
    j["L"] = limits;
    if (t.d == 1) {
        auto chk = dim1_check(t);
        j["dim1_check"] = {{"discrepancy", rational_to_string(chk.discrepancy)},
                           {"consistent", chk.consistent}};
    }
    if (t.d == 2) {
        auto [L1, L2] = dim2_closed_forms(t);
        j["dim2_closed_forms"] = {rational_to_string(L1), rational_to_string(L2)};
    }
    json predicted = json::array();
    for (long n = n_lo; n <= n_hi; ++n)
        predicted.push_back({{"n", n}, {"ehk", rational_to_string(predicted_ehk(t, L, n))}});
    j["predicted_ehk"] = predicted;
    if (power) j["predicted_ehk_at"] = {{"n", *power}, {"ehk", rational_to_string(predicted_ehk(t, L, *power))}};

    if (format == "json") {
        emit_json(out, j);
        return 0;
    }
    if (format == "tsv") {
        out << "i\tL_i\n";
        for (int i = 0; i <= t.d; ++i) out << i << "\t" << rational_to_string(L[static_cast<size_t>(i)]) << "\n";
        return 0;
    }
    out << "d = " << t.d << ", r = " << t.r << ", e0 = " << rational_to_string(t.e0) << "\n";
    for (int i = 0; i <= t.d; ++i)
        out << "L_" << i << " = " << rational_to_string(L[static_cast<size_t>(i)]) << "\n";
    if (t.d == 1) {
        auto chk = dim1_check(t);
        out << "dim-1 check r*e0 - ehk(r) = " << rational_to_string(chk.discrepancy)
            << (chk.consistent ? " (consistent)" : " (INCONSISTENT TABLE)") << "\n";
    }
    if (t.d == 2) {
        auto [L1, L2] = dim2_closed_forms(t);
        out << "dim-2 closed forms: L1 = " << rational_to_string(L1) << ", L2 = " << rational_to_string(L2)
            << "\n";
    }
    for (long n = n_lo; n <= n_hi; ++n)
        out << "predicted e_HK(I^" << n << ") = " << rational_to_string(predicted_ehk(t, L, n)) << "\n";
    if (power)
        out << "predicted e_HK(I^" << *power << ") = " << rational_to_string(predicted_ehk(t, L, *power))
            << "\n";
    if (!t.assumptions.empty()) {
        out << "assumptions:";
        for (const auto& a : t.assumptions) out << " " << a;
        out << "\n";
    }
    return 0;
}

int cmd_family(const InputOptions& opt, std::ostream& out) {
    // compact single-line JSON: the output is meant to be piped back in
    const auto c = load_complex(opt);
    out << complex_to_json(c).dump() << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized Hilbert-Kunz functions of pure-power ideals in face rings", "hkface"};
    app.require_subcommand(1);

    InputOptions hk_opt, coeffs_opt, ehk_opt, audit_opt, verify_opt, family_opt;
    long ehk_kmax = 5, verify_qmax = 3, verify_kmax = 3;
    bool assume_cm = false;
    std::string limits_input, limits_format = "text";
    std::optional<long> limits_power;

    auto* hk = app.add_subcommand("hk", "closed-form ghk polynomial ell(R/(J^[q])^k)");
    add_input_options(hk, hk_opt);

    auto* coeffs = app.add_subcommand("coeffs", "Hilbert-Samuel coefficient table e_i(J^[q]) and limits");
    add_input_options(coeffs, coeffs_opt);

    auto* ehk = app.add_subcommand("ehk", "e_HK(J^k) for k = 1..kmax");
    add_input_options(ehk, ehk_opt);
    ehk->add_option("--kmax", ehk_kmax, "largest power")->capture_default_str();

    auto* audit = app.add_subcommand("audit", "stability and conjecture audit");
    add_input_options(audit, audit_opt);
    audit->add_flag("--assume-cm", assume_cm, "treat the face ring as Cohen-Macaulay");

    auto* verify = app.add_subcommand("verify", "cross-validate the closed form against enumeration");
    add_input_options(verify, verify_opt);
    verify->add_option("--qmax", verify_qmax, "grid bound for q")->capture_default_str();
    verify->add_option("--kmax", verify_kmax, "grid bound for k")->capture_default_str();
    auto* budget_opt =
        verify->add_option("--budget", verify_opt.budget, "lattice-point budget (env HKFACE_BUDGET)")
            ->capture_default_str();

    auto* limits = app.add_subcommand("limits", "L_i and predicted e_HK(I^n) from a power-table file");
    limits->add_option("--input", limits_input, "power-table JSON file");
    limits->add_option("--format", limits_format, "output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}))
        ->capture_default_str();
    limits->add_option("--power", limits_power, "also report predicted e_HK(I^n) at this n");

    auto* family = app.add_subcommand("family", "emit a named complex as JSON");
    add_input_options(family, family_opt, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (hk->parsed()) return cmd_hk(hk_opt, out);
        if (coeffs->parsed()) return cmd_coeffs(coeffs_opt, out);
        if (ehk->parsed()) return cmd_ehk(ehk_opt, ehk_kmax, out);
        if (audit->parsed()) return cmd_audit(audit_opt, assume_cm, out);
        if (verify->parsed()) return cmd_verify(verify_opt, verify_qmax, verify_kmax, budget_opt->count() > 0, out);
        if (limits->parsed()) return cmd_limits(limits_input, limits_format, limits_power, out);
        if (family->parsed()) return cmd_family(family_opt, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n";
    return 1;
}

}  // namespace hkface::cli
