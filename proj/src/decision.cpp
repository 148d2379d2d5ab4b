#include "liou/decision.hpp"

#include <utility>

#include "liou/errors.hpp"
#include "liou/render.hpp"

namespace liou {

std::string_view to_string(Status s) noexcept
{
    switch (s) {
    case Status::liouvillian: return "liouvillian";
    case Status::not_liouvillian: return "not_liouvillian";
    case Status::algebraic_only: return "algebraic_only";
    case Status::inconclusive: return "inconclusive";
    case Status::inapplicable: return "inapplicable";
    case Status::unsupported: return "unsupported";
    }
    return "inconclusive";
}

std::string_view to_string(DegreeBound d) noexcept
{
    return d == DegreeBound::inconclusive ? "inconclusive" : "no_solution_in_antiderivative_towers";
}

std::string_view to_string(GammaVerdict::Kind k) noexcept
{
    switch (k) {
    case GammaVerdict::Kind::no: return "no";
    case GammaVerdict::Kind::yes_rational_gamma: return "yes_rational_gamma";
    case GammaVerdict::Kind::yes_algebraic_gamma: return "yes_algebraic_gamma";
    }
    return "no";
}

std::string_view to_string(Outcome o) noexcept
{
    switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::not_evaluated: return "not_evaluated";
    }
    return "not_evaluated";
}

namespace {

void require_verified(const VerificationReport& rep, const std::string& what)
{
    if (!rep.passed)
        throw Error(Errc::internal_inconsistency,
                    what + " failed verification of " + rep.identity + " (residual " + rep.residual + ")");
}

} // namespace

AutonomousVerdict decide_autonomous(const RatFunc& r)
{
    if (r.is_zero())
        throw Error(Errc::zero_input, "R must be nonzero");

    AutonomousVerdict out;
    const RatFunc f = r.inverse();

    if (auto z = has_rational_antiderivative(f)) {
        out.status = Status::liouvillian;
        out.branch = Branch::antiderivative;
        out.witness = AutonomousWitness{std::move(*z), std::nullopt};
        require_verified(verify_autonomous_witness(r, out.branch, out.witness->z, std::nullopt),
                         "antiderivative witness");
        return out;
    }
    out.failure_reasons.push_back(
        {"no_rational_antiderivative",
         "1/R has no rational antiderivative: Hermite remainder " + to_string(hermite_reduce(f).remainder)});

    auto log = is_log_derivative_up_to_constant(f);
    out.certificate = std::move(log.certificate);
    switch (log.kind) {
    case LogDerivativeVerdict::Kind::yes_with_witness:
        out.status = Status::liouvillian;
        out.branch = Branch::log_derivative;
        out.witness = AutonomousWitness{log.witness->z, log.witness->a};
        out.failure_reasons.clear();
        require_verified(verify_autonomous_witness(r, out.branch, out.witness->z, out.witness->a),
                         "log-derivative witness");
        break;
    case LogDerivativeVerdict::Kind::yes_certificate_only:
        out.status = Status::liouvillian;
        out.branch = Branch::log_derivative;
        out.failure_reasons.clear();
        break;
    case LogDerivativeVerdict::Kind::no:
        out.status = Status::not_liouvillian;
        out.failure_reasons.push_back({std::string(to_string(*log.reason)), log.detail});
        break;
    }
    return out;
}

namespace {

Generator antiderivative_generator()
{
    return {"t", GeneratorKind::antiderivative, Var::t, {1, 0}};
}

/// Exponential generator v with v' = sqrt(c)·v; adjoins lambda^2 = c when c
/// is not a rational square.
void use_exponential(TowerWitness& w, const Rat& c)
{
    Generator gen{"v", GeneratorKind::exponential, Var::v, {0, 1}};
    if (auto root = rational_sqrt(c))
        gen.rate = {*root, 0};
    else
        w.quad_ext = QuadExtension{"lambda", c};
    w.generators.push_back(std::move(gen));
}

RatFunc zero_in(Var var)
{
    return RatFunc(var);
}

TowerWitness constant_case(const Rat& c)
{
    // y = sqrt(c)·t
    TowerWitness w{{antiderivative_generator()}, std::nullopt, {zero_in(Var::t), zero_in(Var::t)}, "(y')^2 = P(y)"};
    const RatFunc t = RatFunc::variable(Var::t);
    if (auto root = rational_sqrt(c)) {
        w.expression.re = *root * t;
    } else {
        w.quad_ext = QuadExtension{"lambda", c};
        w.expression.im = t;
    }
    return w;
}

TowerWitness linear_case(const Rat& a, const Rat& b)
{
    // y = (a/4) t^2 - b/a, so y' = (a/2) t and (y')^2 = a y + b.
    TowerWitness w{{antiderivative_generator()}, std::nullopt, {zero_in(Var::t), zero_in(Var::t)}, "(y')^2 = P(y)"};
    w.expression.re = RatFunc(Poly(Var::t, {-b / a, 0, a / 4}));
    return w;
}

TowerWitness quadratic_case(const Rat& c, const Rat& b, const Rat& e)
{
    // P = c((y - m)^2 - d2) with m = -b/(2c), d2 = disc/(4c^2). With
    // v' = sqrt(c)·v, y = m + A v + B/v solves (y')^2 = P(y) iff 4AB = d2.
    TowerWitness w{{}, std::nullopt, {zero_in(Var::v), zero_in(Var::v)}, "(y')^2 = P(y)"};
    use_exponential(w, c);

    const Rat m = -b / (2 * c);
    const Rat disc = b * b - 4 * c * e;
    const RatFunc v = RatFunc::variable(Var::v);
    const RatFunc m_f = RatFunc::constant(Var::v, m);
    if (sgn(disc) == 0) {
        w.expression.re = m_f + v;
        return w;
    }
    const Rat d2 = disc / (4 * c * c);
    Rat A = Rat(1, 2);
    Rat B = d2 / 2;
    if (auto d = rational_sqrt(d2)) {
        A = *d / 2;
        B = *d / 2;
    }
    w.expression.re = m_f + A * v + B * v.inverse();
    return w;
}

} // namespace

SquareVerdict decide_square(const Poly& p)
{
    if (p.is_zero())
        throw Error(Errc::zero_input, "P must be nonzero");

    SquareVerdict out;
    const std::size_t n = p.deg();
    if (n >= 3) {
        if (is_squarefree(p)) {
            out.status = Status::not_liouvillian;
            out.reason = "degree_and_squarefree";
        } else {
            out.status = Status::inapplicable;
            out.reason = "repeated_roots_or_low_degree_unhandled";
        }
        return out;
    }

    switch (n) {
    case 0: out.witness = constant_case(p.coeff(0)); break;
    case 1: out.witness = linear_case(p.coeff(1), p.coeff(0)); break;
    default: out.witness = quadratic_case(p.coeff(2), p.coeff(1), p.coeff(0)); break;
    }
    out.status = Status::liouvillian;
    out.reason = "explicit_construction";
    require_verified(verify_square_witness(p, *out.witness), "square witness");
    return out;
}

DegreeBound degree_bound_check(const PolyOverQx& p)
{
    std::optional<std::size_t> deg;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k)
        if (!p.coeffs[k].is_zero())
            deg = k;
    if (!deg)
        throw Error(Errc::zero_input, "P must be nonzero");
    return *deg >= 3 ? DegreeBound::no_solution_in_antiderivative_towers : DegreeBound::inconclusive;
}

GammaVerdict log_derivative_of_algebraic(const RatFunc& alpha)
{
    GammaVerdict out;
    if (alpha.is_zero()) {
        out.kind = GammaVerdict::Kind::yes_rational_gamma;
        out.gamma = RatFunc::constant(alpha.var(), 1);
        out.detail = "alpha = 0, gamma = 1";
        return out;
    }
    if (!alpha.is_proper()) {
        out.detail = "not proper: polynomial part " + to_string(proper_split(alpha).poly_part);
        return out;
    }
    if (!is_squarefree(alpha.den())) {
        out.detail = "denominator " + to_string(alpha.den()) + " is not squarefree";
        return out;
    }
    out.rt_resultant = rt_resultant(alpha);
    const auto residues = rational_residues(alpha, *out.rt_resultant);
    if (!residues) {
        out.detail = "irrational residues (roots of " + to_string(*out.rt_resultant) + ")";
        return out;
    }
    bool integral = true;
    for (const auto& r : *residues) {
        out.residues.push_back(r.residue);
        integral = integral && r.residue.get_den() == 1;
    }
    if (!integral) {
        out.kind = GammaVerdict::Kind::yes_algebraic_gamma;
        out.detail = "rational non-integer residues: gamma is algebraic but not in Q(x)";
        return out;
    }
    RatFunc gamma = RatFunc::constant(alpha.var(), 1);
    for (const auto& r : *residues)
        gamma *= pow(RatFunc(r.bound_factor), r.residue.get_num().get_si());
    if (diff(gamma) != alpha * gamma)
        throw Error(Errc::internal_inconsistency, "gamma'/gamma != alpha for alpha = " + to_string(alpha));
    out.kind = GammaVerdict::Kind::yes_rational_gamma;
    out.gamma = std::move(gamma);
    out.detail = "integer residues";
    return out;
}

namespace {

HypothesisCheck antiderivative_hypothesis(const std::string& name, const RatFunc& alpha)
{
    HypothesisCheck check{"no x in Q(x) with x' = " + name, Outcome::holds, ""};
    if (auto z = has_rational_antiderivative(alpha)) {
        check.outcome = Outcome::fails;
        check.detail = name + " = d/dx(" + to_string(*z) + ")";
    } else {
        check.detail = name + " = " + to_string(alpha) + " has no rational antiderivative";
    }
    return check;
}

} // namespace

AbelVerdict decide_abel(const std::vector<RatFunc>& coeffs)
{
    if (coeffs.size() < 2)
        throw Error(Errc::malformed_coefficients, "need at least the coefficients a1 and a2");
    for (const auto& c : coeffs)
        if (c.var() != Var::x)
            throw Error(Errc::malformed_coefficients, "coefficients must be rational functions of x");

    AbelVerdict out;
    std::vector<RatFunc> work = coeffs;
    const RatFunc& a1 = coeffs.front();

    HypothesisCheck gamma_check{"gamma in Q(x) with gamma' = a1*gamma", Outcome::holds, ""};
    if (a1.is_zero()) {
        gamma_check.detail = "a1 = 0, gamma = 1";
    } else {
        auto g = log_derivative_of_algebraic(a1);
        gamma_check.detail = std::string(to_string(g.kind)) + ": " + g.detail;
        if (g.kind != GammaVerdict::Kind::yes_rational_gamma) {
            gamma_check.outcome = Outcome::fails;
            out.status = g.kind == GammaVerdict::Kind::no ? Status::inconclusive : Status::unsupported;
            out.hypothesis_report.push_back(std::move(gamma_check));
            const std::string skipped = "not evaluated: a1 cannot be removed by a rational gamma";
            out.hypothesis_report.push_back({"no x in Q(x) with x' = a2", Outcome::not_evaluated, skipped});
            out.hypothesis_report.push_back({"no x in Q(x) with x' = a3", Outcome::not_evaluated, skipped});
            if (g.kind == GammaVerdict::Kind::yes_algebraic_gamma)
                out.part_I_fact = "gamma' = a1*gamma has an algebraic solution, so no z in kbar(y) - kbar has "
                                  "z'/z in kbar for a solution y outside kbar";
            return out;
        }
        // y -> y/gamma turns a_i into gamma^(i-1)·a_i and removes a1.
        RatFunc gp = RatFunc::constant(Var::x, 1);
        for (std::size_t i = 1; i < work.size(); ++i) {
            gp *= *g.gamma;
            work[i] *= gp;
        }
        work[0] = RatFunc(Var::x);
        out.gamma = g.gamma;
        out.scaled_coeffs = work;
    }
    out.hypothesis_report.push_back(std::move(gamma_check));
    out.part_I_fact = "gamma' = a1*gamma with gamma in Q(x): no z in kbar(y) - kbar has z'/z in kbar for a "
                      "solution y outside kbar";

    const RatFunc a3 = work.size() >= 3 ? work[2] : RatFunc(Var::x);
    auto h2 = antiderivative_hypothesis("a2", work[1]);
    auto h3 = antiderivative_hypothesis("a3", a3);
    const bool both = h2.outcome == Outcome::holds && h3.outcome == Outcome::holds;
    if (h2.outcome == Outcome::holds)
        out.part_II_fact = "a solution y outside kbar would give w in kbar(y) - kbar with w' = a2 and v in kbar "
                           "with v' = a3";
    if (both)
        out.part_II_fact += "; a3 has no antiderivative in kbar, so every solution lies in kbar";
    out.hypothesis_report.push_back(std::move(h2));
    out.hypothesis_report.push_back(std::move(h3));
    out.status = both ? Status::algebraic_only : Status::inconclusive;
    return out;
}

} // namespace liou
