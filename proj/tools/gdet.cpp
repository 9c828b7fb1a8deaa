#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdet/detlab.hpp"
#include "gdet/reps.hpp"
#include "gdet/verify.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using nlohmann::json;
using namespace gdet;

VarNamer namer_for(const Context& ctx) {
    const auto g = ctx.group;
    return [g](long v) { return "x[" + g->element_name(v) + "]"; };
}

std::string value_str(const CycloNumber& v) {
    return v.is_rational() ? v.rational_value().get_str() : v.str();
}

void emit_json(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

json report_shell(const std::string& command, const std::string& group, unsigned long long seed) {
    json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["group"] = group;
    j["seed"] = seed;
    j["results"] = json::array();
    j["payload"] = nullptr;
    return j;
}

CheckMode mode_for(const std::string& mode, const FiniteGroup& g, long trials,
                   unsigned long long seed) {
    if (mode == "symbolic") return CheckMode{true, trials, seed, 0};
    if (mode == "randomized" || mode == "numeric") return CheckMode::make_randomized(trials, seed);
    if (mode == "auto") return CheckMode::auto_for(g, seed, trials);
    throw std::invalid_argument("unknown mode '" + mode + "'");
}

int cmd_info(const std::string& group) {
    const Context ctx = Context::make(group);
    std::cout << "group: " << ctx.group->spec().str() << "\n";
    std::cout << "order: " << ctx.group->order() << "\n";
    std::cout << "conductor: " << ctx.field->conductor() << "\n";
    std::cout << "elements:";
    for (long i = 0; i < ctx.group->order(); ++i)
        std::cout << (i ? ", " : " ") << ctx.group->element_name(i);
    std::cout << "\n";
    return 0;
}

int cmd_reps(const std::string& group, const std::string& json_path) {
    const Context ctx = Context::make(group);
    const RepSet reps = irreducible_set(ctx);
    std::cout << "group: " << ctx.group->spec().str() << " (order " << ctx.group->order() << ")\n";
    std::cout << "conductor: " << ctx.field->conductor() << " (z = primitive root)\n";
    std::cout << "columns:";
    for (long i = 0; i < ctx.group->order(); ++i)
        std::cout << (i ? ", " : " ") << ctx.group->element_name(i);
    std::cout << "\n";
    for (const auto& chi : reps.degree_one) {
        std::cout << chi.name() << ":";
        for (long i = 0; i < ctx.group->order(); ++i)
            std::cout << (i ? ", " : " ") << chi.value(i).str();
        std::cout << "\n";
    }
    for (const auto& rep : reps.degree_two) {
        std::cout << rep.name() << ":";
        for (long i = 0; i < ctx.group->order(); ++i)
            std::cout << (i ? ", " : " ") << rep.value(i).str();
        std::cout << "\n";
    }
    if (!json_path.empty()) {
        json j = report_shell("reps", ctx.group->spec().str(), 0);
        json d1 = json::array(), d2 = json::array();
        for (const auto& chi : reps.degree_one) {
            json values = json::array();
            for (long i = 0; i < ctx.group->order(); ++i) values.push_back(chi.value(i).str());
            d1.push_back({{"name", chi.name()}, {"values", values}});
        }
        for (const auto& rep : reps.degree_two) {
            json values = json::array();
            for (long i = 0; i < ctx.group->order(); ++i) values.push_back(rep.value(i).str());
            d2.push_back({{"name", rep.name()}, {"values", values}});
        }
        j["payload"] = {{"degree_one", d1}, {"degree_two", d2}};
        emit_json(j, json_path);
    }
    return 0;
}

int cmd_det(const std::string& group, std::string mode, unsigned long long seed, long trials,
            long limit, const std::string& json_path) {
    const Context ctx = Context::make(group);
    if (mode == "auto") mode = ctx.group->order() <= limit ? "symbolic" : "numeric";
    json j = report_shell("det", ctx.group->spec().str(), seed);
    j["mode"] = mode;
    json identities = json::array();
    bool all_ok = true;

    if (mode == "symbolic") {
        const Poly theta = symbolic_det(ctx, group_matrix(ctx.group), limit);
        std::cout << theta.str(namer_for(ctx)) << "\n";
        const bool frob = frobenius_theta(ctx, limit) == theta;
        identities.push_back({{"name", "frobenius_product"}, {"status", frob ? "pass" : "fail"}});
        all_ok = all_ok && frob;
        if (!ctx.group->is_abelian()) {
            const bool circ = circulant_theta(ctx) == theta;
            identities.push_back({{"name", "circulant_product"}, {"status", circ ? "pass" : "fail"}});
            all_ok = all_ok && circ;
        }
        j["payload"] = {{"determinant", theta.str(namer_for(ctx))},
                        {"determinant_terms", poly_to_json(theta, namer_for(ctx))},
                        {"terms", theta.term_count()},
                        {"degree", theta.total_degree()}};
    } else if (mode == "numeric") {
        const GroupMatrix m = group_matrix(ctx.group);
        AssignmentStream stream(seed, 10 * ctx.group->order());
        json values = json::array();
        bool frob_ok = true, circ_ok = true;
        for (long t = 0; t < trials; ++t) {
            const auto a = stream.next(ctx);
            const CycloNumber det = numeric_det_at(ctx, m, a);
            std::cout << "trial " << t << ": " << value_str(det) << "\n";
            values.push_back(value_str(det));
            frob_ok = frob_ok && frobenius_theta_at(ctx, a) == det;
            if (!ctx.group->is_abelian()) circ_ok = circ_ok && circulant_theta_at(ctx, a) == det;
        }
        identities.push_back({{"name", "frobenius_product"}, {"status", frob_ok ? "pass" : "fail"}});
        if (!ctx.group->is_abelian())
            identities.push_back(
                {{"name", "circulant_product"}, {"status", circ_ok ? "pass" : "fail"}});
        all_ok = frob_ok && (ctx.group->is_abelian() || circ_ok);
        std::cout << "identities: frobenius " << (frob_ok ? "pass" : "fail");
        if (!ctx.group->is_abelian()) std::cout << ", circulant " << (circ_ok ? "pass" : "fail");
        std::cout << "\n";
        j["payload"] = {{"values", values}, {"trials", trials}};
    } else {
        throw std::invalid_argument("det mode must be symbolic or numeric");
    }
    j["results"] = identities;
    if (!json_path.empty()) emit_json(j, json_path);
    return all_ok ? 0 : 1;
}

int cmd_verify(const std::string& id, const std::string& group, const std::string& mode_name,
               unsigned long long seed, long trials, const std::string& json_path) {
    const Context ctx = Context::make(group);
    const CheckMode mode = mode_for(mode_name, *ctx.group, trials, seed);
    std::vector<CheckResult> results;
    if (id == "all")
        results = run_all_checks(ctx, mode);
    else
        results.push_back(run_check(id, ctx, mode));

    bool any_fail = false;
    for (const auto& r : results) {
        switch (r.status) {
            case CheckStatus::Pass:
                std::cout << "PASS " << r.id << " (" << r.mode << ")\n";
                break;
            case CheckStatus::Fail:
                any_fail = true;
                std::cout << "FAIL " << r.id << " (" << r.mode << "): " << r.reason << "\n";
                break;
            case CheckStatus::Skipped:
                std::cout << "SKIP " << r.id << ": " << r.reason << "\n";
                break;
        }
    }
    if (!json_path.empty()) {
        json j = report_shell("verify", ctx.group->spec().str(), seed);
        for (const auto& r : results) j["results"].push_back(to_json(r));
        emit_json(j, json_path);
    }
    return any_fail ? 1 : 0;
}

int cmd_inverse(const std::string& group, const std::string& coeffs, unsigned long long seed,
                const std::string& json_path) {
    const Context ctx = Context::make(group);
    std::vector<CycloNumber> assign;
    if (coeffs.empty()) {
        // draw a nonsingular assignment from the seeded stream
        AssignmentStream stream(seed, 10 * ctx.group->order());
        const GroupMatrix m = group_matrix(ctx.group);
        for (int attempt = 0; attempt < 1000; ++attempt) {
            assign = stream.next(ctx);
            if (!numeric_det_at(ctx, m, assign).is_zero()) break;
            assign.clear();
        }
        if (assign.empty()) throw std::domain_error("could not find a nonsingular assignment");
    } else {
        std::string text = coeffs;
        if (!text.empty() && text.front() != '{') {
            std::ifstream in(coeffs);
            if (!in) throw std::invalid_argument("cannot read coefficient file '" + coeffs + "'");
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        json parsed = json::parse(text);
        if (!parsed.is_object()) throw std::invalid_argument("coefficients must be a JSON object");
        assign.assign(ctx.group->order(), CycloNumber::zero(ctx.field));
        for (const auto& [name, value] : parsed.items()) {
            const long idx = ctx.group->index_of(ctx.group->element_by_name(name));
            Rational q;
            try {
                q = Rational(value.get<std::string>());
                q.canonicalize();
            } catch (const std::exception&) {
                throw std::invalid_argument("bad rational '" + value.dump() + "' for element " + name);
            }
            assign[idx] = CycloNumber(ctx.field, q);
        }
    }

    const AlgebraElement inv = inverse_element(ctx, assign);
    for (long i = 0; i < ctx.group->order(); ++i)
        std::cout << ctx.group->element_name(i) << ": "
                  << value_str(inv.coeff(i).constant_value()) << "\n";
    if (!json_path.empty()) {
        json j = report_shell("inverse", ctx.group->spec().str(), seed);
        json input = json::object(), output = json::object();
        for (long i = 0; i < ctx.group->order(); ++i) {
            input[ctx.group->element_name(i)] = value_str(assign[i]);
            output[ctx.group->element_name(i)] = value_str(inv.coeff(i).constant_value());
        }
        j["payload"] = {{"coefficients", input},
                        {"inverse", output},
                        {"inverse_element", element_to_json(inv)}};
        emit_json(j, json_path);
    }
    return 0;
}

int cmd_report(const std::string& group, const std::string& mode_name, unsigned long long seed,
               long trials, const std::string& json_path) {
    const Context ctx = Context::make(group);
    const CheckMode mode = mode_for(mode_name, *ctx.group, trials, seed);
    const auto results = run_all_checks(ctx, mode);

    json j = report_shell("report", ctx.group->spec().str(), seed);
    for (const auto& r : results) j["results"].push_back(to_json(r));
    json payload;
    payload["order"] = ctx.group->order();
    payload["conductor"] = ctx.field->conductor();
    json names = json::array();
    for (long i = 0; i < ctx.group->order(); ++i) names.push_back(ctx.group->element_name(i));
    payload["elements"] = names;
    if (ctx.group->order() <= kDefaultSymbolicLimit) {
        const Poly theta = symbolic_det(ctx, group_matrix(ctx.group));
        payload["determinant"] = theta.str(namer_for(ctx));
    } else {
        payload["determinant"] = nullptr;
    }
    j["payload"] = payload;
    emit_json(j, json_path);

    for (const auto& r : results)
        if (r.failed()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact group determinants, factorizations and identity checks"};
    app.set_version_flag("--version", std::string("gdet ") + kVersion);
    app.require_subcommand(1);

    std::string group, mode = "auto", json_path, coeffs, check_id;
    unsigned long long seed = 0;
    long trials = 20, limit = kDefaultSymbolicLimit;

    auto* info = app.add_subcommand("info", "group order and element listing");
    info->add_option("group", group, "group spec, e.g. C2xC6, D5, Q3")->required();

    auto* reps = app.add_subcommand("reps", "irreducible representation tables");
    reps->add_option("group", group)->required();
    reps->add_option("--json", json_path, "write a JSON report to this file");

    auto* det = app.add_subcommand("det", "group determinant and factorization identities");
    det->add_option("group", group)->required();
    det->add_option("--mode", mode)->check(CLI::IsMember({"auto", "symbolic", "numeric"}));
    det->add_option("--seed", seed);
    det->add_option("--trials", trials);
    det->add_option("--limit", limit, "symbolic size limit");
    det->add_option("--json", json_path);

    auto* verify = app.add_subcommand("verify", "run identity checkers");
    verify->add_option("check", check_id, "check id or 'all'")->required();
    verify->add_option("group", group)->required();
    verify->add_option("--mode", mode)->check(CLI::IsMember({"auto", "symbolic", "randomized", "numeric"}));
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);
    verify->add_option("--json", json_path);

    auto* inverse = app.add_subcommand("inverse", "invert a numeric group-algebra element");
    inverse->add_option("group", group)->required();
    inverse->add_option("--coeffs", coeffs, "JSON object or file: element name -> rational");
    inverse->add_option("--seed", seed, "seed used when no coefficients are given");
    inverse->add_option("--json", json_path);

    auto* report = app.add_subcommand("report", "full JSON verification report");
    report->add_option("group", group)->required();
    report->add_option("--mode", mode)->check(CLI::IsMember({"auto", "symbolic", "randomized", "numeric"}));
    report->add_option("--seed", seed);
    report->add_option("--trials", trials);
    report->add_option("--json", json_path, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(info)) return cmd_info(group);
        if (app.got_subcommand(reps)) return cmd_reps(group, json_path);
        if (app.got_subcommand(det)) return cmd_det(group, mode, seed, trials, limit, json_path);
        if (app.got_subcommand(verify))
            return cmd_verify(check_id, group, mode, seed, trials, json_path);
        if (app.got_subcommand(inverse)) return cmd_inverse(group, coeffs, seed, json_path);
        if (app.got_subcommand(report)) return cmd_report(group, mode, seed, trials, json_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
