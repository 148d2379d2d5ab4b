#include "liou/reduction.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "liou/errors.hpp"
#include "liou/render.hpp"

namespace liou {

HermiteParts hermite_reduce(const RatFunc& f)
{
    const Var var = f.var();
    auto [poly_part, proper] = proper_split(f);
    if (proper.is_zero())
        return {std::move(poly_part), RatFunc(var), RatFunc(var)};

    Poly a = proper.num();
    Poly d = proper.den();
    RatFunc g(var);
    const auto sqf = squarefree_decompose(d);
    for (const auto& [v, mult] : sqf.factors) {
        if (mult < 2)
            continue;
        const Poly u = exact_quotient(d, pow(v, mult));
        const Poly uv_prime = u * diff(v);
        for (std::size_t j = mult - 1; j >= 1; --j) {
            const Rat inv_j(1, static_cast<unsigned long>(j));
            auto [b, c] = solve_diophantine(uv_prime, v, -a * inv_j);
            g += RatFunc(b, pow(v, j));
            a = -(c * Rat(static_cast<unsigned long>(j))) - u * diff(b);
        }
        d = u * v;
    }
    return {std::move(poly_part), std::move(g), RatFunc(std::move(a), std::move(d))};
}

namespace {

void require_log_shape(const RatFunc& h)
{
    if (h.is_zero())
        throw Error(Errc::zero_input, "residue analysis of the zero function");
    if (!h.is_proper())
        throw Error(Errc::nonproper_input, "residue analysis requires a proper fraction, got " + to_string(h));
    if (!is_squarefree(h.den()))
        throw Error(Errc::nonsquarefree_denominator,
                    "residue analysis requires a squarefree denominator, got " + to_string(h.den()));
}

Rat rational_gcd(const std::vector<RationalResidue>& residues)
{
    Int num = 0;
    Int den = 1;
    for (const auto& r : residues) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), r.residue.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.residue.get_den_mpz_t());
    }
    Rat g(num, den);
    g.canonicalize();
    return g;
}

} // namespace

Poly rt_resultant(const RatFunc& h)
{
    require_log_shape(h);
    const Poly& num = h.num();
    const Poly& den = h.den();
    const Poly dden = diff(den);

    BiPoly a{h.var(), Var::t, {}};
    const std::size_t top = std::max(num.coeffs().size(), dden.coeffs().size());
    for (std::size_t k = 0; k < top; ++k)
        a.coeffs.push_back(Poly(Var::t, {num.coeff(k), -dden.coeff(k)}));
    const Poly res = resultant(a, BiPoly::lift(den, Var::t));
    if (res.is_zero() || res.is_constant())
        throw Error(Errc::internal_inconsistency, "degenerate Rothstein-Trager resultant for " + to_string(h));

    Poly s = squarefree_part(res).primitive();
    if (sgn(s.coeff(0)) == 0)
        throw Error(Errc::internal_inconsistency, "zero residue reported for " + to_string(h));
    return s;
}

Poly ratio_poly(const Poly& s)
{
    if (s.is_zero() || s.is_constant())
        throw Error(Errc::constant_input, "ratio polynomial of a constant");
    if (sgn(s.coeff(0)) == 0)
        throw Error(Errc::zero_root_input, "ratio polynomial input has a root at zero");
    if (s.deg() > max_ratio_degree)
        throw Error(Errc::resource_limit,
                    "residue polynomial degree " + std::to_string(s.deg()) + " exceeds " +
                        std::to_string(max_ratio_degree));

    BiPoly plain = BiPoly::lift(s.retagged(Var::t), Var::u);
    BiPoly scaled{Var::t, Var::u, {}};
    for (std::size_t i = 0; i < s.coeffs().size(); ++i)
        scaled.coeffs.push_back(Poly::monomial(Var::u, s.coeffs()[i], i));
    return resultant(plain, scaled);
}

Commensurability commensurable(const Poly& s)
{
    Poly w = ratio_poly(s);
    auto roots = rational_roots_among(w, root_ratio_candidates(s));
    Commensurability out{roots.nonsplit_remainder.is_constant(), {}, std::move(w)};
    for (const auto& r : roots.roots)
        out.ratios.push_back(r.root);
    return out;
}

std::optional<RatFunc> has_rational_antiderivative(const RatFunc& f)
{
    HermiteParts parts = hermite_reduce(f);
    if (!parts.remainder.is_zero())
        return std::nullopt;
    RatFunc z = RatFunc(integrate(parts.poly_part)) + parts.rat_part;
    if (diff(z) != f)
        throw Error(Errc::internal_inconsistency, "antiderivative of " + to_string(f) + " does not differentiate back");
    return z;
}

std::optional<std::vector<RationalResidue>> rational_residues(const RatFunc& h, const Poly& s)
{
    const auto roots = rational_roots(s);
    if (!roots.nonsplit_remainder.is_constant())
        return std::nullopt;
    const Poly dden = diff(h.den());
    std::vector<RationalResidue> out;
    for (const auto& r : roots.roots) {
        Poly factor = gcd(h.den(), h.num() - dden * r.root);
        out.push_back({r.root, std::move(factor)});
    }
    return out;
}

LogWitness log_witness(const RatFunc& h)
{
    require_log_shape(h);
    const Poly s = rt_resultant(h);
    const auto residues = rational_residues(h, s);
    if (!residues)
        throw Error(Errc::nonrational_residue, to_string(h) + " has irrational residues (roots of " + to_string(s) + ")");

    const Rat a = 1 / rational_gcd(*residues);
    RatFunc z = RatFunc::constant(h.var(), 1);
    for (const auto& r : *residues) {
        const Rat e = a * r.residue;
        if (e.get_den() != 1)
            throw Error(Errc::internal_inconsistency, "scaled residue is not an integer");
        z *= pow(RatFunc(r.bound_factor), e.get_num().get_si());
    }
    if (diff(z) != a * z * h)
        throw Error(Errc::internal_inconsistency, "log witness for " + to_string(h) + " failed its identity");
    return {a, std::move(z)};
}

std::string_view to_string(LogDerivativeFailure f) noexcept
{
    switch (f) {
    case LogDerivativeFailure::polynomial_part: return "polynomial_part";
    case LogDerivativeFailure::nonsquarefree_denominator: return "nonsquarefree_denominator";
    case LogDerivativeFailure::incommensurable_residues: return "incommensurable_residues";
    }
    return "unknown";
}

LogDerivativeVerdict is_log_derivative_up_to_constant(const RatFunc& f)
{
    if (f.is_zero())
        throw Error(Errc::zero_input, "log-derivative test of the zero function");

    LogDerivativeVerdict out;
    const auto split = proper_split(f);
    if (!split.poly_part.is_zero()) {
        out.reason = LogDerivativeFailure::polynomial_part;
        out.detail = "nonzero polynomial part " + to_string(split.poly_part);
        return out;
    }
    const auto sqf = squarefree_decompose(f.den());
    for (const auto& [factor, mult] : sqf.factors) {
        if (mult > 1) {
            out.reason = LogDerivativeFailure::nonsquarefree_denominator;
            out.detail = "denominator not squarefree: repeated factor " + to_string(factor) + " (multiplicity " +
                         std::to_string(mult) + ")";
            return out;
        }
    }

    ResidueCertificate cert;
    cert.rt_resultant = rt_resultant(f);
    auto residues = rational_residues(f, cert.rt_resultant);
    const auto comm = commensurable(cert.rt_resultant);
    cert.ratio_poly = comm.ratio_poly;
    cert.commensurable = comm.commensurable;
    if (residues) {
        if (!comm.commensurable)
            throw Error(Errc::internal_inconsistency, "rational residues reported as incommensurable");
        cert.rational_residues = std::move(*residues);
        out.witness = log_witness(f);
        cert.scale_a = out.witness->a;
        out.kind = LogDerivativeVerdict::Kind::yes_with_witness;
    } else if (comm.commensurable) {
        out.kind = LogDerivativeVerdict::Kind::yes_certificate_only;
    } else {
        out.reason = LogDerivativeFailure::incommensurable_residues;
        out.detail = "residues (roots of " + to_string(cert.rt_resultant) + ") have irrational ratios";
    }
    out.certificate = std::move(cert);
    return out;
}

} // namespace liou
