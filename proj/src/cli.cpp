#include "liou/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"

#include "liou/decision.hpp"
#include "liou/errors.hpp"
#include "liou/parser.hpp"
#include "liou/reduction.hpp"
#include "liou/render.hpp"
#include "liou/verify.hpp"

namespace liou::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string procedure;
    std::string expression;
    std::string input_file;
    std::string coeff_field = "qx";
    bool json = false;
    bool verify = false;
    bool witness = true;
};

/// Outcome of one input: the report plus what it means for the exit code.
struct Evaluation {
    json report;
    int code = exit_ok;
};

json verification_json(const VerificationReport& v)
{
    return {{"identity", v.identity}, {"passed", v.passed}, {"residual", v.residual}};
}

json certificate_json(const ResidueCertificate& c)
{
    json residues = json::array();
    for (const auto& r : c.rational_residues)
        residues.push_back({{"residue", to_string(r.residue)}, {"poles", to_string(r.bound_factor)}});
    json out{{"rt_resultant", to_string(c.rt_resultant)},
             {"ratio_poly", to_string(c.ratio_poly)},
             {"residues", residues},
             {"commensurable", c.commensurable}};
    if (c.scale_a)
        out["scale_a"] = to_string(*c.scale_a);
    return out;
}

json failures_json(const std::vector<FailureReason>& reasons)
{
    json out = json::array();
    for (const auto& r : reasons)
        out.push_back({{"code", r.code}, {"detail", r.detail}});
    return out;
}

RatFunc parse_y(const std::string& text) { return parse(text, Var::y); }

/// Parses one coefficient of a ';'-separated list, keeping offsets relative
/// to the whole list.
RatFunc parse_coefficient(std::string_view piece, std::size_t base)
{
    std::vector<Token> tokens;
    try {
        tokens = tokenize(piece);
    } catch (const Error& e) {
        const std::size_t at = base + e.offset().value_or(0);
        throw Error(e.code(),
                    "illegal character '" + std::string(1, piece[at - base]) + "' at offset " + std::to_string(at), at);
    }
    for (auto& t : tokens)
        t.offset += base;
    return parse(tokens, base + piece.size(), Var::x);
}

std::vector<RatFunc> parse_coefficients(const std::string& text)
{
    std::vector<RatFunc> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t end = text.find(';', start);
        const std::size_t stop = end == std::string::npos ? text.size() : end;
        out.push_back(parse_coefficient(std::string_view(text).substr(start, stop - start), start));
        if (end == std::string::npos)
            break;
        start = end + 1;
    }
    return out;
}

void autonomous(const Options& o, const std::string& text, Evaluation& ev)
{
    const RatFunc r = parse_y(text);
    const AutonomousVerdict v = decide_autonomous(r);
    json& rep = ev.report;
    rep["status"] = to_string(v.status);
    rep["branch"] = to_string(v.branch);
    if (v.witness && o.witness) {
        json w{{"z", to_string(v.witness->z)}};
        if (v.witness->a)
            w["a"] = to_string(*v.witness->a);
        rep["witness"] = w;
    }
    if (v.certificate && v.branch != Branch::antiderivative)
        rep["certificate"] = certificate_json(*v.certificate);
    if (!v.failure_reasons.empty())
        rep["failure_reasons"] = failures_json(v.failure_reasons);
    if (o.verify && v.witness) {
        const auto check = verify_autonomous_witness(r, v.branch, v.witness->z, v.witness->a);
        rep["verification"] = verification_json(check);
        if (!check.passed)
            ev.code = exit_internal;
    }
}

void square(const Options& o, const std::string& text, Evaluation& ev)
{
    const RatFunc f = parse_y(text);
    if (!f.is_polynomial())
        throw Error(Errc::not_polynomial, "P(y) must be a polynomial in y, got " + to_string(f));
    const Poly p = f.num();
    const SquareVerdict v = decide_square(p);
    json& rep = ev.report;
    rep["status"] = to_string(v.status);
    rep["reason"] = v.reason;
    if (v.witness && o.witness) {
        const TowerWitness& w = *v.witness;
        const std::string symbol = w.quad_ext ? w.quad_ext->symbol : "lambda";
        json gens = json::array();
        for (const auto& g : w.generators)
            gens.push_back({{"name", g.name}, {"kind", to_string(g.kind)}, {"rule", derivation_rule(g, symbol)}});
        json wj{{"y", to_string(w.expression, symbol)}, {"generators", gens}};
        if (w.quad_ext)
            wj["extension"] = {{"symbol", w.quad_ext->symbol}, {"square", to_string(w.quad_ext->square)}};
        wj["relation"] = w.claimed_relation;
        rep["witness"] = wj;
    }
    if (o.verify && v.witness) {
        const auto check = verify_square_witness(p, *v.witness);
        rep["verification"] = verification_json(check);
        if (!check.passed)
            ev.code = exit_internal;
    }
}

void abel(const Options& o, const std::string& text, Evaluation& ev)
{
    const std::vector<RatFunc> coeffs = parse_coefficients(text);
    const AbelVerdict v = decide_abel(coeffs);
    json& rep = ev.report;
    rep["status"] = to_string(v.status);
    if (v.gamma)
        rep["gamma"] = to_string(*v.gamma);
    if (v.scaled_coeffs) {
        json sc = json::array();
        for (const auto& c : *v.scaled_coeffs)
            sc.push_back(to_string(c));
        rep["scaled_coeffs"] = sc;
    }
    json hyps = json::array();
    for (const auto& h : v.hypothesis_report)
        hyps.push_back({{"hypothesis", h.hypothesis}, {"outcome", to_string(h.outcome)}, {"detail", h.detail}});
    rep["hypothesis_report"] = hyps;
    json facts = json::object();
    if (!v.part_I_fact.empty())
        facts["part_I"] = v.part_I_fact;
    if (!v.part_II_fact.empty())
        facts["part_II"] = v.part_II_fact;
    if (!facts.empty())
        rep["facts"] = facts;
    if (o.verify && v.gamma) {
        const RatFunc residual = diff(*v.gamma) - coeffs.front() * *v.gamma;
        rep["verification"] = {
            {"identity", "gamma' = a1*gamma"}, {"passed", residual.is_zero()}, {"residual", to_string(residual)}};
        if (!residual.is_zero())
            ev.code = exit_internal;
    }
}

void degbound(const Options&, const std::string& text, Evaluation& ev)
{
    const DegreeBound d = degree_bound_check(parse_poly_over_qx(text));
    json& rep = ev.report;
    const bool bounded = d == DegreeBound::no_solution_in_antiderivative_towers;
    rep["status"] = bounded ? "not_liouvillian" : "inconclusive";
    rep["verdict"] = to_string(d);
    rep["scope"] = "iterated_antiderivative_towers";
}

void antider(const Options& o, const std::string& text, Evaluation& ev)
{
    const RatFunc f = parse(text, Var::x);
    const auto z = has_rational_antiderivative(f);
    json& rep = ev.report;
    // A rational antiderivative is algebraic; otherwise the integral is a
    // transcendental liouvillian element.
    rep["status"] = z ? "algebraic_only" : "liouvillian";
    rep["answer"] = z ? "yes" : "no";
    if (z && o.witness)
        rep["witness"] = {{"antiderivative", to_string(*z)}};
    if (!z)
        rep["detail"] = "Hermite remainder " + to_string(hermite_reduce(f).remainder) + " is nonzero";
    if (o.verify && z) {
        const RatFunc residual = diff(*z) - f;
        rep["verification"] = {
            {"identity", "dz/dx = f(x)"}, {"passed", residual.is_zero()}, {"residual", to_string(residual)}};
        if (!residual.is_zero())
            ev.code = exit_internal;
    }
}

void logderiv(const Options& o, const std::string& text, Evaluation& ev)
{
    const RatFunc alpha = parse(text, Var::x);
    const GammaVerdict g = log_derivative_of_algebraic(alpha);
    json& rep = ev.report;
    const bool yes = g.kind != GammaVerdict::Kind::no;
    rep["status"] = yes ? "algebraic_only" : "liouvillian";
    rep["answer"] = to_string(g.kind);
    if (g.gamma)
        rep["gamma"] = to_string(*g.gamma);
    if (g.rt_resultant) {
        json c{{"rt_resultant", to_string(*g.rt_resultant)}};
        json residues = json::array();
        for (const auto& r : g.residues)
            residues.push_back(to_string(r));
        c["residues"] = residues;
        rep["certificate"] = c;
    }
    rep["detail"] = g.detail;
    if (o.verify && g.gamma) {
        const RatFunc residual = diff(*g.gamma) - alpha * *g.gamma;
        rep["verification"] = {
            {"identity", "gamma' = alpha*gamma"}, {"passed", residual.is_zero()}, {"residual", to_string(residual)}};
        if (!residual.is_zero())
            ev.code = exit_internal;
    }
}

int exit_code_for(ErrorClass c)
{
    switch (c) {
    case ErrorClass::usage: return exit_usage;
    case ErrorClass::precondition: return exit_precondition;
    case ErrorClass::internal: return exit_internal;
    }
    return exit_internal;
}

Evaluation evaluate(const Options& o, const std::string& text)
{
    Evaluation ev;
    ev.report = {{"equation", text}, {"procedure", o.procedure}};
    auto fail = [&](std::string_view kind, ErrorClass cls, const std::string& message, std::optional<std::size_t> off) {
        ev.report = {{"equation", text}, {"procedure", o.procedure}, {"status", "error"}};
        json e{{"kind", kind}, {"class", to_string(cls)}, {"message", message}};
        if (off)
            e["offset"] = *off;
        ev.report["error"] = e;
        ev.code = exit_code_for(cls);
    };
    try {
        if (o.procedure == "autonomous")
            autonomous(o, text, ev);
        else if (o.procedure == "square")
            square(o, text, ev);
        else if (o.procedure == "abel")
            abel(o, text, ev);
        else if (o.procedure == "degbound")
            degbound(o, text, ev);
        else if (o.procedure == "antider")
            antider(o, text, ev);
        else
            logderiv(o, text, ev);
    } catch (const Error& e) {
        fail(errc_name(e.code()), error_class(e.code()), e.what(), e.offset());
    } catch (const std::exception& e) {
        fail(errc_name(Errc::internal_inconsistency), ErrorClass::internal, e.what(), std::nullopt);
    }
    return ev;
}

void print_human(const json& r, std::ostream& out, std::ostream& err)
{
    const std::string prefix = r.contains("line") ? "line " + std::to_string(r["line"].get<long>()) + ": " : "";
    if (r["status"] == "error") {
        const json& e = r["error"];
        err << prefix << "error (" << e["kind"].get<std::string>() << "): " << e["message"].get<std::string>() << '\n';
        if (e.contains("offset")) {
            err << "  " << r["equation"].get<std::string>() << '\n';
            err << "  " << std::string(e["offset"].get<std::size_t>(), ' ') << "^\n";
        }
        return;
    }
    auto str = [](const json& j) { return j.get<std::string>(); };
    out << prefix << r["procedure"].get<std::string>() << ": " << str(r["equation"]) << '\n';
    out << "status: " << str(r["status"]) << '\n';
    if (r.contains("branch") && r["branch"] != "none") {
        const bool anti = r["branch"] == "antiderivative";
        out << "branch: " << str(r["branch"]) << (anti ? " (z' = 1)" : " (z' = a*z)") << '\n';
    }
    if (r.contains("reason"))
        out << "reason: " << str(r["reason"]) << '\n';
    if (r.contains("verdict"))
        out << "verdict: " << str(r["verdict"]) << " (scope: " << str(r["scope"]) << ")\n";
    if (r.contains("answer"))
        out << "answer: " << str(r["answer"]) << '\n';
    if (r.contains("gamma"))
        out << "gamma: " << str(r["gamma"]) << '\n';
    if (r.contains("scaled_coeffs")) {
        out << "scaled coefficients:";
        for (const auto& c : r["scaled_coeffs"])
            out << ' ' << str(c) << (&c == &r["scaled_coeffs"].back() ? "" : ";");
        out << '\n';
    }
    if (r.contains("witness")) {
        const json& w = r["witness"];
        if (w.contains("z")) {
            out << "witness: z = " << str(w["z"]);
            if (w.contains("a"))
                out << ", a = " << str(w["a"]);
            out << '\n';
        } else if (w.contains("y")) {
            out << "witness: y = " << str(w["y"]) << '\n';
            for (const auto& g : w["generators"])
                out << "  generator " << str(g["name"]) << " (" << str(g["kind"]) << "): " << str(g["rule"]) << '\n';
            if (w.contains("extension"))
                out << "  extension: " << str(w["extension"]["symbol"]) << "^2 = " << str(w["extension"]["square"])
                    << '\n';
        } else {
            out << "witness: antiderivative " << str(w["antiderivative"]) << '\n';
        }
    }
    if (r.contains("certificate")) {
        const json& c = r["certificate"];
        out << "certificate: S(t) = " << str(c["rt_resultant"]);
        if (c.contains("ratio_poly"))
            out << ", W(u) = " << str(c["ratio_poly"]);
        out << '\n';
        if (c.contains("commensurable"))
            out << "  residues commensurable: " << (c["commensurable"].get<bool>() ? "yes" : "no") << '\n';
    }
    if (r.contains("failure_reasons"))
        for (const auto& f : r["failure_reasons"])
            out << "failed: " << str(f["code"]) << ": " << str(f["detail"]) << '\n';
    if (r.contains("hypothesis_report"))
        for (const auto& h : r["hypothesis_report"])
            out << "hypothesis \"" << str(h["hypothesis"]) << "\": " << str(h["outcome"]) << " (" << str(h["detail"])
                << ")\n";
    if (r.contains("facts"))
        for (const auto& [key, value] : r["facts"].items())
            out << "fact " << key << ": " << str(value) << '\n';
    if (r.contains("detail"))
        out << "detail: " << str(r["detail"]) << '\n';
    if (r.contains("verification")) {
        const json& v = r["verification"];
        if (v["passed"].get<bool>())
            out << "verification: passed (" << str(v["identity"]) << ")\n";
        else
            out << "verification: FAILED (" << str(v["identity"]) << "), residual " << str(v["residual"]) << '\n';
    }
}

void emit(const Options& o, const json& report, std::ostream& out, std::ostream& err)
{
    if (o.json)
        out << report.dump() << '\n';
    else
        print_human(report, out, err);
}

bool skipped_line(const std::string& line)
{
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

int run_batch(const Options& o, std::ostream& out, std::ostream& err)
{
    std::ifstream in(o.input_file);
    if (!in) {
        err << "error: cannot read input file " << o.input_file << '\n';
        return exit_usage;
    }
    bool any_failed = false;
    bool any_internal = false;
    bool printed = false;
    std::string line;
    for (long number = 1; std::getline(in, line); ++number) {
        if (skipped_line(line))
            continue;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        Evaluation ev = evaluate(o, line);
        ev.report["line"] = number;
        const bool to_out = o.json || ev.report["status"] != "error";
        if (!o.json && to_out && printed)
            out << '\n';
        emit(o, ev.report, out, err);
        printed = printed || to_out;
        any_failed = any_failed || ev.code != exit_ok;
        any_internal = any_internal || ev.code == exit_internal;
    }
    if (any_internal)
        return exit_internal;
    return any_failed ? exit_usage : exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Decides whether first-order ODEs have liouvillian solutions.", "liou"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Print one JSON object per input line");
    app.add_flag("--verify", o.verify, "Re-check every emitted witness; a failure exits with 3");
    app.add_flag("--witness,!--no-witness", o.witness, "Include witness renderings (default on)");
    app.add_option("--input", o.input_file, "Batch file: one input per line, '#' comments");

    struct Sub {
        const char* name;
        const char* help;
        const char* arg_help;
    };
    const Sub subs[] = {
        {"autonomous", "y' = R(y) over the constants", "R(y)"},
        {"square", "(y')^2 = P(y) over the constants", "P(y)"},
        {"abel", "y' = a_n y^n + ... + a_2 y^2 + a_1 y over Q(x)", ""},
        {"degbound", "y' = P(y) over Q(x), iterated antiderivative towers", "P(y) with coefficients in x"},
        {"antider", "Does f(x) have an antiderivative in Q(x)?", "f(x)"},
        {"logderiv", "Is alpha(x) = gamma'/gamma with gamma algebraic over Q(x)?", "alpha(x)"},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->fallthrough();
        if (std::string_view(s.name) == "abel")
            sub->add_option("--coeffs", o.expression, "a1;a2;...;an, each a rational function of x");
        else
            sub->add_option("expression", o.expression, s.arg_help);
        if (std::string_view(s.name) == "degbound")
            sub->add_option("--coeff-field", o.coeff_field, "Coefficient field (only qx)")
                ->check(CLI::IsMember({"qx"}));
        sub->callback([&o, name = std::string(s.name)] { o.procedure = name; });
    }

    // CLI11 reads "-y^2 + 1" as a short flag; a leading space keeps it a value.
    std::vector<std::string> reversed;
    for (auto it = args.rbegin(); it != args.rend(); ++it)
        reversed.push_back(it->size() > 1 && (*it)[0] == '-' && (*it)[1] != '-' && *it != "-h" ? ' ' + *it : *it);
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? exit_ok : exit_usage;
    }

    if (o.expression.starts_with(" -"))
        o.expression.erase(0, 1);
    const bool has_expr = !o.expression.empty();
    const bool has_file = !o.input_file.empty();
    if (has_expr == has_file) {
        err << "error: give exactly one of an expression" << (o.procedure == "abel" ? " (--coeffs)" : "")
            << " or --input FILE\n";
        return exit_usage;
    }
    if (has_file)
        return run_batch(o, out, err);

    const Evaluation ev = evaluate(o, o.expression);
    emit(o, ev.report, out, err);
    return ev.code;
}

} // namespace liou::cli
