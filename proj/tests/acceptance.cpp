// Acceptance run: one PASS/FAIL line per criterion. All checks are exact;
// time limits are 1 s per decided equation and 60 s for the whole run.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "liou/cli.hpp"
#include "liou/decision.hpp"
#include "liou/errors.hpp"
#include "liou/parser.hpp"
#include "liou/reduction.hpp"
#include "liou/render.hpp"
#include "liou/verify.hpp"
#include "oracles.hpp"
#include "schema_check.hpp"

using namespace liou;
using liou::testing::Rng;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double per_equation_limit_s = 1.0;
constexpr double total_limit_s = 60.0;

/// Collects the first few problems of a criterion.
struct Findings {
    std::vector<std::string> problems;
    double slowest_s = 0;

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            problems.push_back(what);
    }
    /// Runs fn, records its wall time against the per-equation limit.
    template <class Fn>
    auto timed(const std::string& label, Fn&& fn)
    {
        const auto start = Clock::now();
        auto result = fn();
        const double s = std::chrono::duration<double>(Clock::now() - start).count();
        slowest_s = std::max(slowest_s, s);
        expect(s < per_equation_limit_s, label + " took " + std::to_string(s) + " s");
        return result;
    }
};

Poly Y(std::vector<Rat> cs) { return Poly(Var::y, std::move(cs)); }
RatFunc Py(std::string_view s) { return parse(s, Var::y); }
RatFunc Px(std::string_view s) { return parse(s, Var::x); }

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Findings&)>& body)
{
    Findings f;
    const auto start = Clock::now();
    try {
        body(f);
    } catch (const std::exception& e) {
        f.problems.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    const bool pass = f.problems.empty();
    failures += pass ? 0 : 1;
    std::ostringstream line;
    line.precision(3);
    line << (pass ? "PASS" : "FAIL") << " [" << number << "] " << title << " (" << std::fixed << s << " s";
    if (f.slowest_s > 0)
        line << ", slowest equation " << f.slowest_s << " s";
    line << ")";
    if (!pass) {
        line << ": " << f.problems.front();
        if (f.problems.size() > 1)
            line << " (+" << f.problems.size() - 1 << " more)";
    }
    std::cout << line.str() << std::endl;
}

void autonomous_case(Findings& f, const std::string& text, Status expected)
{
    const RatFunc r = Py(text);
    const auto v = f.timed(text, [&] { return decide_autonomous(r); });
    f.expect(v.status == expected, "R = " + text + ": got " + std::string(to_string(v.status)));
    if (v.status != Status::liouvillian)
        return;
    if (!v.witness) {
        // Only irrational residues may leave a liouvillian verdict without z.
        const bool irrational = v.certificate && v.certificate->commensurable &&
                                !rational_roots(v.certificate->rt_resultant).nonsplit_remainder.is_constant();
        f.expect(irrational, "R = " + text + ": liouvillian verdict with rational residues but no witness");
        return;
    }
    const auto check = verify_autonomous_witness(r, v.branch, v.witness->z, v.witness->a);
    f.expect(check.passed && check.residual == "0", "R = " + text + ": witness residual " + check.residual);
}

void square_not_liouvillian(Findings& f, const Poly& p)
{
    const std::string label = "P = " + to_string(p);
    const auto v = f.timed(label, [&] { return decide_square(p); });
    f.expect(v.status == Status::not_liouvillian, label + ": got " + std::string(to_string(v.status)));
}

Poly random_squarefree(Rng& rng, std::size_t degree)
{
    for (;;) {
        std::vector<Rat> cs(degree + 1);
        for (auto& c : cs)
            c = rng.rat(9, 4);
        cs.back() = rng.nonzero_rat(9, 4);
        const Poly p(Var::y, cs);
        if (sgn(resultant(p, diff(p))) != 0)
            return p;
    }
}

RatFunc mutate_numerator(const RatFunc& f, std::size_t index, const Rat& delta)
{
    std::vector<Rat> num = f.num().coeffs();
    if (num.size() <= index)
        num.resize(index + 1, 0);
    num[index] += delta;
    return RatFunc(Poly(f.var(), num), f.den());
}

/// True when `mutant` is `w` after t -> t + k or v -> k*v for a constant k,
/// the generator changes that leave the tower's derivation rule intact.
bool trivial_image(const TowerWitness& w, const TowerWitness& mutant, bool in_im, std::size_t index)
{
    const Generator& g = w.generators.front();
    const RatFunc& before = in_im ? w.expression.im : w.expression.re;
    const RatFunc& after = in_im ? mutant.expression.im : mutant.expression.re;
    const auto coeff = [](const RatFunc& f, std::size_t k) {
        const auto& cs = f.num().coeffs();
        return k < cs.size() ? cs[k] : Rat(0);
    };
    std::vector<RatFunc> images;
    if (g.kind == GeneratorKind::antiderivative) {
        const Rat next = coeff(before, index + 1);
        if (sgn(next) != 0) {
            const Rat k = (coeff(after, index) - coeff(before, index)) / (Rat(static_cast<long>(index) + 1) * next);
            images.push_back(RatFunc(Poly(g.var, {k, 1})));
        }
    } else if (sgn(coeff(before, index)) != 0) {
        const Rat ratio = coeff(after, index) / coeff(before, index);
        if (sgn(ratio) != 0) {
            images.push_back(RatFunc(Poly(g.var, {0, ratio})));
            images.push_back(RatFunc(Poly(g.var, {0, 1 / ratio})));
        }
    }
    for (const auto& image : images)
        if (compose(w.expression.re, image) == mutant.expression.re &&
            compose(w.expression.im, image) == mutant.expression.im)
            return true;
    return false;
}

/// Sum of res_i/(y - c_i) over distinct poles.
struct SplitCase {
    std::vector<Rat> poles;
    std::vector<Rat> residues;
    RatFunc h{Var::y};
};

SplitCase random_split_case(Rng& rng, std::size_t max_poles)
{
    SplitCase c;
    const auto n = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_poles)));
    c.poles = rng.distinct_rats(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.residues.push_back(rng.nonzero_rat(4, 3));
        c.h += RatFunc(Y({c.residues.back()}), Y({-c.poles[i], 1}));
    }
    return c;
}

RatFunc random_r(Rng& rng)
{
    switch (rng.integer(0, 2)) {
    case 0: {
        RatFunc g = rng.ratfunc(Var::y, 3, false);
        if (g.is_constant())
            g += RatFunc::variable(Var::y);
        return diff(g).inverse();
    }
    case 1:
        return random_split_case(rng, 3).h.inverse();
    default:
        return rng.ratfunc(Var::y, 3, false);
    }
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

int main()
{
    const auto start = Clock::now();

    criterion(1, "autonomous criterion suite", [](Findings& f) {
        for (const char* r : {"y^2", "y", "y^2 + 1", "y^2 + y", "1/y"})
            autonomous_case(f, r, Status::liouvillian);
        for (const char* r : {"y^3 + y^2", "y^2*(y + 1)"})
            autonomous_case(f, r, Status::not_liouvillian);
        // Residues -1, 1/2, 1/2 are commensurable: liouvillian with a = 2.
        autonomous_case(f, "y^3 - y", Status::liouvillian);
    });

    criterion(2, "elliptic impossibility for squarefree P of degree >= 3", [](Findings& f) {
        for (const auto& [a, b] : std::vector<std::pair<Rat, Rat>>{{1, 1}, {-1, 0}, {0, 1}}) {
            f.expect(a * a * a / 27 + b * b / 4 != 0, "discriminant condition");
            square_not_liouvillian(f, Y({b, a, 0, 1}));
        }
        Rng rng(0xacce0002);
        for (std::size_t degree : {3, 4, 5})
            for (int i = 0; i < 10; ++i)
                square_not_liouvillian(f, random_squarefree(rng, degree));
    });

    criterion(3, "degenerate square cases", [](Findings& f) {
        for (const Poly& p : {Y({3, 2}), Y({1, 0, -1})}) {
            const std::string label = "P = " + to_string(p);
            const auto v = f.timed(label, [&] { return decide_square(p); });
            f.expect(v.status == Status::liouvillian, label + ": got " + std::string(to_string(v.status)));
            if (!v.witness) {
                f.problems.push_back(label + ": no witness");
                continue;
            }
            const auto check = verify_square_witness(p, *v.witness);
            f.expect(check.passed && check.residual == "0", label + ": residual " + check.residual);
        }
        const auto cube = f.timed("P = y^3", [] { return decide_square(Y({0, 0, 0, 1})); });
        f.expect(cube.status == Status::inapplicable, "P = y^3: got " + std::string(to_string(cube.status)));
    });

    criterion(4, "Abel example and its variants", [](Findings& f) {
        const auto v = f.timed("abel 1/x;1/x^2;1/x^3", [] { return decide_abel({Px("1/x"), Px("1/x^2"), Px("1/x^3")}); });
        f.expect(v.status == Status::algebraic_only, "[1/x, 1/x^2, 1/x^3]: status");
        f.expect(v.gamma && *v.gamma == Px("x"), "[1/x, 1/x^2, 1/x^3]: gamma");
        f.expect(v.scaled_coeffs && *v.scaled_coeffs == std::vector<RatFunc>{Px("0"), Px("1/x"), Px("1/x")},
                 "[1/x, 1/x^2, 1/x^3]: scaled coefficients");
        const auto w = f.timed("abel 0;1/x;1/x", [] { return decide_abel({Px("0"), Px("1/x"), Px("1/x")}); });
        f.expect(w.status == Status::algebraic_only, "[0, 1/x, 1/x]: status");
        const auto u = f.timed("abel 0;1;1/x", [] { return decide_abel({Px("0"), Px("1"), Px("1/x")}); });
        f.expect(u.status == Status::inconclusive, "[0, 1, 1/x]: status");
    });

    criterion(5, "degree bound over Q(x)", [](Findings& f) {
        Rng rng(0xacce0005);
        for (int i = 0; i < 200; ++i) {
            const auto degree = static_cast<std::size_t>(rng.integer(1, 7));
            PolyOverQx p;
            for (std::size_t k = 0; k < degree; ++k)
                p.coeffs.push_back(rng.ratfunc(Var::x, 2));
            RatFunc lead(Var::x);
            while (lead.is_zero())
                lead = rng.ratfunc(Var::x, 2, false);
            p.coeffs.push_back(lead);
            const auto d = degree_bound_check(p);
            const auto expected =
                degree >= 3 ? DegreeBound::no_solution_in_antiderivative_towers : DegreeBound::inconclusive;
            f.expect(d == expected, "degree " + std::to_string(degree) + ": got " + std::string(to_string(d)));
        }
        for (const char* r : {"1", "x", "1/(x^2 + 1)"}) {
            const RatFunc minus_r = -Px(r);
            const PolyOverQx riccati{{RatFunc(Var::x), RatFunc(Var::x), minus_r}};
            f.expect(degree_bound_check(riccati) == DegreeBound::inconclusive, std::string("Riccati -r*y^2, r = ") + r);
        }
    });

    criterion(6, "property suites (1000 cases each)", [](Findings& f) {
        constexpr int cases = 1000;
        auto report = [&f](const char* suite, int bad) {
            f.expect(bad == 0, std::string(suite) + ": " + std::to_string(bad) + " failures");
        };

        Rng rng(0xacce0601);
        int bad = 0;
        for (int i = 0; i < cases; ++i)
            bad += check_leibniz(rng.ratfunc(Var::y, 4), rng.ratfunc(Var::y, 4)).passed ? 0 : 1;
        report("Leibniz", bad);

        bad = 0;
        for (int i = 0; i < cases; ++i) {
            Poly den = rng.poly(Var::y, 2, false);
            if (rng.coin())
                den *= pow(rng.poly(Var::y, 2, false), static_cast<std::size_t>(rng.integer(2, 3)));
            const RatFunc g(rng.poly(Var::y, 6), den);
            const auto h = hermite_reduce(g);
            const bool ok = RatFunc(h.poly_part) + diff(h.rat_part) + h.remainder == g && h.remainder.is_proper() &&
                            is_squarefree(h.remainder.den());
            bad += ok ? 0 : 1;
        }
        report("Hermite reconstruction", bad);

        bad = 0;
        for (int i = 0; i < cases; ++i) {
            const auto c = random_split_case(rng, 5);
            const auto brute = testing::brute_residues(c.h.num(), c.poles, 1);
            std::set<Rat> found;
            const auto rr = rational_roots(rt_resultant(c.h));
            for (const auto& r : rr.roots)
                found.insert(r.root);
            bad += (rr.nonsplit_remainder.is_constant() && found == testing::distinct(brute)) ? 0 : 1;
        }
        report("residue oracle", bad);

        bad = 0;
        for (int i = 0; i < cases; ++i) {
            const auto c = random_split_case(rng, 4);
            const auto rr = rational_roots(ratio_poly(rt_resultant(c.h)));
            std::set<Rat> found;
            for (const auto& r : rr.roots)
                found.insert(r.root);
            bad += (rr.nonsplit_remainder.is_constant() && found == testing::brute_ratios(c.residues)) ? 0 : 1;
        }
        report("ratio oracle", bad);

        bad = 0;
        const RatFunc inv = RatFunc::variable(Var::y).inverse();
        for (int i = 0; i < cases; ++i) {
            const RatFunc r = random_r(rng);
            const Status s = decide_autonomous(r).status;
            const bool scaled = decide_autonomous(rng.nonzero_rat() * r).status == s;
            const bool inverted = decide_autonomous(RatFunc(Y({0, 0, -1})) * compose(r, inv)).status == s;
            bad += scaled && inverted ? 0 : 1;
        }
        report("scaling and inversion invariance", bad);

        // Every emitted witness verifies; a single-coefficient mutation fails
        // unless it is one of the trivial symmetries z + c (antiderivative
        // branch) or k*z (logarithmic branch), and constant mutants are
        // rejected as malformed.
        bad = 0;
        int mutants = 0;
        for (int witnesses = 0; witnesses < cases;) {
            const RatFunc r = random_r(rng);
            const auto v = decide_autonomous(r);
            if (!v.witness)
                continue;
            ++witnesses;
            const RatFunc& z = v.witness->z;
            if (!verify_autonomous_witness(r, v.branch, z, v.witness->a).passed) {
                ++bad;
                continue;
            }
            const auto span = static_cast<long>(z.num().coeffs().size());
            const RatFunc zm = mutate_numerator(z, static_cast<std::size_t>(rng.integer(0, span)), rng.nonzero_rat());
            if (zm.is_constant()) {
                try {
                    verify_autonomous_witness(r, v.branch, zm, v.witness->a);
                    ++bad;
                } catch (const Error& e) {
                    bad += e.code() == Errc::malformed_witness ? 0 : 1;
                }
                continue;
            }
            ++mutants;
            const bool trivial = v.branch == Branch::antiderivative ? (zm - z).is_constant() : (zm / z).is_constant();
            bad += verify_autonomous_witness(r, v.branch, zm, v.witness->a).passed == trivial ? 0 : 1;
        }
        report("autonomous witness round trip", bad);
        f.expect(mutants > cases / 2, "too few autonomous mutants: " + std::to_string(mutants));

        bad = 0;
        int trivial_square = 0;
        for (int witnesses = 0; witnesses < cases;) {
            const Poly p = rng.poly(Var::y, 2, false);
            if (p.is_constant())
                continue;
            const auto v = decide_square(p);
            if (!v.witness) {
                bad += v.status == Status::liouvillian ? 1 : 0;
                continue;
            }
            ++witnesses;
            if (!verify_square_witness(p, *v.witness).passed) {
                ++bad;
                continue;
            }
            TowerWitness wm = *v.witness;
            const bool in_im = !wm.expression.im.is_zero() && rng.coin();
            RatFunc& part = in_im ? wm.expression.im : wm.expression.re;
            const auto span = static_cast<long>(part.num().coeffs().size());
            const auto index = static_cast<std::size_t>(rng.integer(0, span));
            part = mutate_numerator(part, index, rng.nonzero_rat());
            try {
                const bool trivial = trivial_image(*v.witness, wm, in_im, index);
                trivial_square += trivial ? 1 : 0;
                bad += verify_square_witness(p, wm).passed == trivial ? 0 : 1;
            } catch (const Error& e) {
                bad += e.code() == Errc::malformed_witness || e.code() == Errc::malformed_extension ? 0 : 1;
            }
        }
        report("square witness round trip", bad);
        f.expect(trivial_square < cases / 2, "square mutants mostly trivial: " + std::to_string(trivial_square));
    });

    criterion(7, "CLI contract", [](Findings& f) {
        const std::vector<std::pair<std::string, std::vector<std::string>>> goldens = {
            {"autonomous_y2", {"autonomous", "y^2"}},
            {"square_cubic", {"square", "y^3 + y + 1"}},
            {"abel_paper", {"abel", "--coeffs", "1/x;1/x^2;1/x^3"}},
            {"autonomous_zero", {"autonomous", "0"}},
        };
        const testing::SchemaCheck schema(LIOU_SCHEMA_PATH);
        for (const auto& [name, args] : goldens) {
            for (const bool as_json : {true, false}) {
                auto full = args;
                if (as_json)
                    full.push_back("--json");
                const CliRun r = run_cli(full);
                const std::string text =
                    "exit: " + std::to_string(r.code) + "\n--- stdout\n" + r.out + "--- stderr\n" + r.err;
                const std::string file =
                    std::string(LIOU_GOLDEN_DIR) + "/" + name + (as_json ? ".json" : ".human") + ".golden";
                f.expect(text == read_file(file), "golden mismatch: " + file);
                if (as_json) {
                    const auto problem = schema.validate(nlohmann::json::parse(r.out));
                    f.expect(!problem, name + ": schema: " + problem.value_or(""));
                }
            }
        }
        const auto y2 = nlohmann::json::parse(run_cli({"autonomous", "y^2", "--json"}).out);
        f.expect(y2["status"] == "liouvillian" && y2["branch"] == "antiderivative" &&
                     y2["witness"] == nlohmann::json{{"z", "-1/y"}},
                 "autonomous y^2 fields");

        const std::vector<std::pair<std::vector<std::string>, int>> matrix = {
            {{"autonomous", "y^2"}, 0},
            {{"square", "y^2 - 1", "--verify"}, 0},
            {{"antider", "1/x^2", "--verify"}, 0},
            {{"logderiv", "2/x", "--verify"}, 0},
            {{"degbound", "y^3 + x"}, 0},
            {{}, 1},
            {{"autonomous"}, 1},
            {{"autonomous", "y^^2"}, 1},
            {{"square", "1/y"}, 1},
            {{"autonomous", "0"}, 2},
            {{"square", "0"}, 2},
        };
        for (const auto& [args, expected] : matrix) {
            const int code = run_cli(args).code;
            std::string joined;
            for (const auto& a : args)
                joined += " " + a;
            f.expect(code == expected,
                     "liou" + joined + ": exit " + std::to_string(code) + ", expected " + std::to_string(expected));
        }
    });

    const double total = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = total < total_limit_s;
    failures += in_time ? 0 : 1;
    std::cout << (in_time ? "PASS" : "FAIL") << " [total] all criteria within " << total_limit_s << " s (" << total
              << " s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
