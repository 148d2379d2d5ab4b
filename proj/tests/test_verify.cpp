#include "doctest.h"

#include "liou/errors.hpp"
#include "liou/render.hpp"
#include "liou/verify.hpp"
#include "oracles.hpp"

using namespace liou;
using liou::testing::Rng;

namespace {

Poly Y(std::vector<Rat> cs) { return Poly(Var::y, std::move(cs)); }
RatFunc F(const Poly& n, const Poly& d) { return RatFunc(n, d); }

Errc code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an exception");
    return Errc::internal_inconsistency;
}

TowerWitness t_witness(const RatFunc& re)
{
    return {{{"t", GeneratorKind::antiderivative, Var::t, {1, 0}}}, std::nullopt, {re, RatFunc(Var::t)}, "(y')^2 = P(y)"};
}

TowerWitness v_witness(const RatFunc& re, const Rat& square)
{
    return {{{"v", GeneratorKind::exponential, Var::v, {0, 1}}},
            QuadExtension{"lambda", square},
            {re, RatFunc(Var::v)},
            "(y')^2 = P(y)"};
}

/// Adds delta to one coefficient of the numerator (or denominator) of f.
RatFunc mutate(const RatFunc& f, bool in_den, std::size_t index, const Rat& delta)
{
    std::vector<Rat> num = f.num().coeffs();
    std::vector<Rat> den = f.den().coeffs();
    auto& target = in_den ? den : num;
    if (target.size() <= index)
        target.resize(index + 1, 0);
    target[index] += delta;
    Poly d(f.var(), den);
    if (d.is_zero())
        return f;
    return RatFunc(Poly(f.var(), num), d);
}

RatFunc random_nonconstant(Rng& rng, Var var)
{
    for (;;) {
        RatFunc z = rng.ratfunc(var, 3, false);
        if (!z.is_constant())
            return z;
    }
}

} // namespace

TEST_CASE("autonomous witness examples")
{
    const auto r1 = verify_autonomous_witness(RatFunc(Y({0, 0, 1})), Branch::antiderivative, F(Y({-1}), Y({0, 1})),
                                              std::nullopt);
    CHECK(r1.passed);
    CHECK(r1.residual == "0");
    CHECK(r1.identity == "R(y)*dz/dy = 1");

    const auto r2 =
        verify_autonomous_witness(RatFunc(Y({0, 1, 1})), Branch::log_derivative, F(Y({0, 1}), Y({1, 1})), Rat(1));
    CHECK(r2.passed);

    const auto r3 = verify_autonomous_witness(RatFunc(Y({0, 0, 1})), Branch::antiderivative, F(Y({1}), Y({0, 1})),
                                              std::nullopt);
    CHECK_FALSE(r3.passed);
    CHECK(r3.residual == "-2");

    CHECK(code_of([] {
              verify_autonomous_witness(RatFunc(Y({0, 1})), Branch::log_derivative, RatFunc(Y({0, 1})), std::nullopt);
          }) == Errc::malformed_witness);
    CHECK(code_of([] {
              verify_autonomous_witness(RatFunc(Y({0, 1})), Branch::antiderivative, RatFunc::constant(Var::y, 3),
                                        std::nullopt);
          }) == Errc::malformed_witness);
}

TEST_CASE("square witness examples")
{
    const auto r1 = verify_square_witness(Y({3, 2}), t_witness(RatFunc(Poly(Var::t, {Rat(-3, 2), 0, Rat(1, 2)}))));
    CHECK(r1.passed);
    CHECK(r1.identity == "(y')^2 = P(y)");

    const RatFunc v = RatFunc::variable(Var::v);
    const RatFunc cosine = Rat(1, 2) * (v + v.inverse());
    CHECK(verify_square_witness(Y({1, 0, -1}), v_witness(cosine, -1)).passed);

    const auto r3 = verify_square_witness(Y({3, 2}), t_witness(RatFunc(Poly(Var::t, {0, 0, 1}))));
    CHECK_FALSE(r3.passed);
    CHECK(r3.residual != "0");

    // lambda^2 = 4 is a rational square: the extension is malformed.
    CHECK(code_of([&] { verify_square_witness(Y({1, 0, -1}), v_witness(cosine, 4)); }) == Errc::malformed_extension);

    TowerWitness two = t_witness(RatFunc::variable(Var::t));
    two.generators.push_back({"v", GeneratorKind::exponential, Var::v, {1, 0}});
    CHECK(code_of([&] { verify_square_witness(Y({1}), two); }) == Errc::unsupported_tower_shape);

    TowerWitness undeclared = t_witness(RatFunc(Var::t));
    undeclared.expression.im = RatFunc::variable(Var::t);
    CHECK(code_of([&] { verify_square_witness(Y({-1}), undeclared); }) == Errc::malformed_extension);
}

TEST_CASE("Leibniz check examples")
{
    const RatFunc y = RatFunc::variable(Var::y);
    CHECK(check_leibniz(y, y).passed);
    CHECK(check_leibniz(y.inverse(), y * y).passed);
    CHECK(check_leibniz(F(Y({0, 1}), Y({1, 1})), y.inverse()).passed);
}

TEST_CASE("property: Leibniz check on random pairs")
{
    Rng rng(0x5eed0201);
    for (int i = 0; i < 1000; ++i)
        REQUIRE(check_leibniz(rng.ratfunc(Var::y, 4), rng.ratfunc(Var::y, 4)).passed);
}

// A mutated antiderivative witness z~ satisfies R·z~' = 1 iff z~ - z is a
// constant; a mutated logarithmic witness satisfies R·z~' = a·z~ iff z~/z is
// a constant. These are the only trivial symmetries, and the check below
// asserts that verification passes exactly on them.
TEST_CASE("property: autonomous witnesses verify and mutants fail off the trivial symmetries")
{
    Rng rng(0x5eed0202);
    int mutants = 0;
    int symmetric = 0;
    for (int i = 0; i < 1000; ++i) {
        const RatFunc z = random_nonconstant(rng, Var::y);
        const bool log_branch = rng.coin();
        const Rat a = rng.nonzero_rat();
        const RatFunc r = log_branch ? a * z / diff(z) : diff(z).inverse();
        const Branch branch = log_branch ? Branch::log_derivative : Branch::antiderivative;
        const std::optional<Rat> a_opt = log_branch ? std::optional<Rat>(a) : std::nullopt;
        REQUIRE(verify_autonomous_witness(r, branch, z, a_opt).passed);

        const bool in_den = rng.coin() && !z.den().is_constant();
        const auto& target = in_den ? z.den() : z.num();
        // The monic denominator's leading coefficient is fixed by normalization.
        const std::size_t span = in_den ? target.deg() : target.coeffs().size();
        const auto index = static_cast<std::size_t>(rng.integer(0, static_cast<long>(span) - 1));
        const RatFunc zm = mutate(z, in_den, index, rng.nonzero_rat());
        if (zm == z)
            continue;
        if (zm.is_constant()) {
            REQUIRE(code_of([&] { verify_autonomous_witness(r, branch, zm, a_opt); }) == Errc::malformed_witness);
            continue;
        }
        ++mutants;
        const bool trivial = log_branch ? (zm / z).is_constant() : (zm - z).is_constant();
        symmetric += trivial ? 1 : 0;
        REQUIRE(verify_autonomous_witness(r, branch, zm, a_opt).passed == trivial);

        if (log_branch) {
            const Rat am = a + rng.nonzero_rat();
            if (sgn(am) != 0)
                REQUIRE_FALSE(verify_autonomous_witness(r, branch, z, am).passed);
        }
    }
    CHECK(mutants > 900);
    CHECK(symmetric < mutants / 2);
}

TEST_CASE("property: tower witnesses fail under every single-coefficient mutation")
{
    Rng rng(0x5eed0203);
    int mutants = 0;
    for (int i = 0; i < 1000; ++i) {
        Poly p(Var::y);
        const TowerWitness w = [&] {
            if (rng.coin()) {
                // Degree one: y = (a/4) t^2 - b/a.
                const Rat a = rng.nonzero_rat();
                const Rat b = rng.rat();
                p = Y({b, a});
                return t_witness(RatFunc(Poly(Var::t, {-b / a, 0, a / 4})));
            }
            // Degree two with distinct roots: y = m + A v + B/v, 4AB = d2.
            const Rat c = rng.nonzero_rat();
            const Rat m = rng.rat();
            const Rat d2 = rng.nonzero_rat();
            const Rat A = rng.nonzero_rat();
            const Rat B = d2 / (4 * A);
            p = Poly::constant(Var::y, c) * (pow(Y({-m, 1}), 2) - Y({d2}));
            const RatFunc v = RatFunc::variable(Var::v);
            TowerWitness out = v_witness(RatFunc::constant(Var::v, m) + A * v + B * v.inverse(), c);
            if (auto root = rational_sqrt(c)) {
                out.quad_ext.reset();
                out.generators[0].rate = {*root, 0};
            }
            return out;
        }();
        REQUIRE(verify_square_witness(p, w).passed);

        const RatFunc& re = w.expression.re;
        const auto span = static_cast<long>(re.num().coeffs().size());
        const auto index = static_cast<std::size_t>(rng.integer(0, span));
        TowerWitness wm = w;
        wm.expression.re = mutate(re, false, index, rng.nonzero_rat());
        if (wm.expression.re == re)
            continue;
        ++mutants;
        INFO("P = ", to_string(p), ", y = ", to_string(wm.expression.re));
        // A constant mutant is rejected before substitution.
        const bool constant = wm.expression.re.is_constant();
        if (constant)
            REQUIRE(code_of([&] { verify_square_witness(p, wm); }) == Errc::malformed_witness);
        else
            REQUIRE_FALSE(verify_square_witness(p, wm).passed);
    }
    CHECK(mutants > 900);
}
