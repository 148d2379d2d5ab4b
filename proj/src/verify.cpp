#include "liou/verify.hpp"

#include <utility>

#include "liou/errors.hpp"
#include "liou/render.hpp"

namespace liou {

std::string_view to_string(Branch b) noexcept
{
    switch (b) {
    case Branch::antiderivative: return "antiderivative";
    case Branch::log_derivative: return "log_derivative";
    case Branch::none: return "none";
    }
    return "none";
}

std::string_view to_string(GeneratorKind k) noexcept
{
    return k == GeneratorKind::antiderivative ? "antiderivative" : "exponential";
}

std::string to_string(const QuadConst& c, const std::string& symbol)
{
    if (sgn(c.im) == 0)
        return to_string(c.re);
    const std::string lam = abs(c.im) == 1 ? symbol : to_string(Rat(abs(c.im))) + "*" + symbol;
    if (sgn(c.re) == 0)
        return (sgn(c.im) < 0 ? "-" : "") + lam;
    return to_string(c.re) + (sgn(c.im) < 0 ? " - " : " + ") + lam;
}

std::string to_string(const QuadRatFunc& e, const std::string& symbol)
{
    if (e.im.is_zero())
        return to_string(e.re);
    std::string im = "(" + to_string(e.im) + ")*" + symbol;
    if (e.re.is_zero())
        return im;
    return to_string(e.re) + " + " + im;
}

std::string derivation_rule(const Generator& g, const std::string& symbol)
{
    if (g.kind == GeneratorKind::antiderivative)
        return g.name + "' = 1";
    const std::string rate = to_string(g.rate, symbol);
    if (sgn(g.rate.re) != 0 && sgn(g.rate.im) != 0)
        return g.name + "' = (" + rate + ")*" + g.name;
    if (rate == "1")
        return g.name + "' = " + g.name;
    return g.name + "' = " + rate + "*" + g.name;
}

namespace {

// Q(λ)(g) with λ² = square; pairs re + im·λ.
class QuadField {
public:
    QuadField(Var var, Rat square) : var_(var), square_(std::move(square)) {}

    QuadRatFunc constant(const QuadConst& c) const
    {
        return {RatFunc::constant(var_, c.re), RatFunc::constant(var_, c.im)};
    }
    QuadRatFunc lift(const RatFunc& f) const { return {f, RatFunc(var_)}; }

    QuadRatFunc add(const QuadRatFunc& a, const QuadRatFunc& b) const { return {a.re + b.re, a.im + b.im}; }
    QuadRatFunc sub(const QuadRatFunc& a, const QuadRatFunc& b) const { return {a.re - b.re, a.im - b.im}; }
    QuadRatFunc mul(const QuadRatFunc& a, const QuadRatFunc& b) const
    {
        return {a.re * b.re + square_ * (a.im * b.im), a.re * b.im + a.im * b.re};
    }
    QuadRatFunc diff(const QuadRatFunc& a) const { return {liou::diff(a.re), liou::diff(a.im)}; }

    QuadRatFunc eval(const Poly& p, const QuadRatFunc& at) const
    {
        QuadRatFunc acc = lift(RatFunc(var_));
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            acc = add(mul(acc, at), constant({*it, 0}));
        return acc;
    }

private:
    Var var_;
    Rat square_;
};

VerificationReport report(std::string identity, const RatFunc& residual)
{
    return {std::move(identity), residual.is_zero(), to_string(residual)};
}

} // namespace

VerificationReport verify_autonomous_witness(const RatFunc& r, Branch branch, const RatFunc& z,
                                             const std::optional<Rat>& a)
{
    if (r.var() != z.var())
        throw Error(Errc::malformed_witness, "witness and equation use different variables");
    if (z.is_constant())
        throw Error(Errc::malformed_witness, "witness z must be nonconstant");
    const RatFunc lhs = r * diff(z);
    switch (branch) {
    case Branch::antiderivative:
        return report("R(y)*dz/dy = 1", lhs - RatFunc::constant(r.var(), 1));
    case Branch::log_derivative:
        if (!a || sgn(*a) == 0)
            throw Error(Errc::malformed_witness, "log-derivative witness without a nonzero constant a");
        return report("R(y)*dz/dy = a*z", lhs - *a * z);
    case Branch::none:
        break;
    }
    throw Error(Errc::malformed_witness, "witness without a branch");
}

VerificationReport verify_square_witness(const Poly& p, const TowerWitness& w)
{
    if (w.generators.size() != 1)
        throw Error(Errc::unsupported_tower_shape, "square witnesses use exactly one generator");
    const Generator& gen = w.generators.front();
    if (w.expression.re.var() != gen.var || w.expression.im.var() != gen.var)
        throw Error(Errc::malformed_witness, "witness expression is not over its declared generator");
    if (w.expression.re.is_constant() && w.expression.im.is_constant())
        throw Error(Errc::malformed_witness, "witness y must be nonconstant");

    Rat square = 0;
    if (w.quad_ext) {
        square = w.quad_ext->square;
        if (rational_sqrt(square))
            throw Error(Errc::malformed_extension,
                        "extension " + w.quad_ext->symbol + "^2 = " + to_string(square) + " is not proper");
    } else if (!w.expression.im.is_zero() || sgn(gen.rate.im) != 0) {
        throw Error(Errc::malformed_extension, "witness uses an undeclared quadratic extension");
    }

    const QuadField field(gen.var, square);
    QuadRatFunc gen_prime = field.constant({1, 0});
    if (gen.kind == GeneratorKind::exponential)
        gen_prime = field.mul(field.constant(gen.rate), field.lift(RatFunc::variable(gen.var)));

    const QuadRatFunc& y = w.expression;
    const QuadRatFunc y_prime = field.mul(field.diff(y), gen_prime);
    const QuadRatFunc residual = field.sub(field.mul(y_prime, y_prime), field.eval(p, y));
    const std::string symbol = w.quad_ext ? w.quad_ext->symbol : "lambda";
    return {"(y')^2 = P(y)", residual.re.is_zero() && residual.im.is_zero(), to_string(residual, symbol)};
}

VerificationReport check_leibniz(const RatFunc& f, const RatFunc& g)
{
    return report("(f*g)' = f'*g + f*g'", diff(f * g) - diff(f) * g - f * diff(g));
}

} // namespace liou
