#include "liou/poly.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "liou/errors.hpp"
#include "subresultant.hpp"

namespace liou {

std::string_view var_name(Var v) noexcept
{
    switch (v) {
    case Var::y: return "y";
    case Var::x: return "x";
    case Var::t: return "t";
    case Var::u: return "u";
    case Var::v: return "v";
    }
    return "?";
}

std::optional<Rat> rational_sqrt(const Rat& r)
{
    if (sgn(r) < 0 || mpz_perfect_square_p(r.get_num_mpz_t()) == 0 || mpz_perfect_square_p(r.get_den_mpz_t()) == 0)
        return std::nullopt;
    return Rat(sqrt(r.get_num()), sqrt(r.get_den()));
}

Poly::Poly(Var var, std::vector<Rat> coeffs) : var_(var), coeffs_(std::move(coeffs))
{
    trim();
}

Poly Poly::constant(Var var, const Rat& c)
{
    return Poly(var, {c});
}

Poly Poly::monomial(Var var, const Rat& c, std::size_t exponent)
{
    if (sgn(c) == 0)
        return Poly(var);
    std::vector<Rat> coeffs(exponent + 1);
    coeffs[exponent] = c;
    return Poly(var, std::move(coeffs));
}

void Poly::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

void Poly::require_same_var(const Poly& other) const
{
    if (var_ != other.var_)
        throw Error(Errc::variable_mismatch,
                    "polynomials in " + std::string(var_name(var_)) + " and " +
                        std::string(var_name(other.var_)) + " cannot be combined");
}

std::optional<std::size_t> Poly::degree() const noexcept
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

std::size_t Poly::deg() const
{
    if (coeffs_.empty())
        throw Error(Errc::zero_input, "degree of the zero polynomial");
    return coeffs_.size() - 1;
}

Rat Poly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rat(0);
}

Rat Poly::lc() const
{
    return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Rat Poly::eval(const Rat& at) const
{
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

Poly Poly::monic() const
{
    if (is_zero())
        return *this;
    Poly out = *this;
    const Rat inv = 1 / lc();
    for (auto& c : out.coeffs_)
        c *= inv;
    return out;
}

Poly Poly::primitive() const
{
    if (is_zero())
        return *this;
    Int den_lcm = 1;
    for (const auto& c : coeffs_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Int num_gcd = 0;
    for (const auto& c : coeffs_) {
        const Int scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (sgn(lc()) < 0)
        factor = -factor;
    return *this * factor;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs)
{
    require_same_var(rhs);
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    require_same_var(rhs);
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs)
{
    require_same_var(rhs);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& c)
{
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_)
        a *= c;
    return *this;
}

DivRem divrem(const Poly& a, const Poly& b)
{
    if (a.var() != b.var())
        throw Error(Errc::variable_mismatch, "divrem operands use different variables");
    if (b.is_zero())
        throw Error(Errc::division_by_zero, "division by the zero polynomial");

    std::vector<Rat> rem = a.coeffs();
    const std::size_t db = b.deg();
    if (rem.size() <= db)
        return {Poly(a.var()), a};

    std::vector<Rat> quot(rem.size() - db);
    const Rat inv_lc = 1 / b.lc();
    const auto& bc = b.coeffs();
    for (std::size_t k = rem.size(); k-- > db;) {
        const Rat q = rem[k] * inv_lc;
        quot[k - db] = q;
        if (sgn(q) == 0)
            continue;
        for (std::size_t i = 0; i <= db; ++i)
            rem[k - db + i] -= q * bc[i];
    }
    rem.resize(db);
    return {Poly(a.var(), std::move(quot)), Poly(a.var(), std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b)
{
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw Error(Errc::internal_inconsistency, "exact division left a remainder");
    return q;
}

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.var() != b.var())
        throw Error(Errc::variable_mismatch, "gcd operands use different variables");
    if (a.is_zero() && b.is_zero())
        throw Error(Errc::zero_input, "gcd of two zero polynomials");
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return Poly::constant(a.var(), 1);
    auto chain = detail::subresultant_gcd_chain(a.primitive().coeffs(), b.primitive().coeffs(), Rat(1));
    return Poly(a.var(), std::move(chain)).monic();
}

Bezout solve_diophantine(const Poly& a, const Poly& b, const Poly& c)
{
    // Extended Euclid for 1 = s0·a + t0·b, then reduce s0·c modulo b.
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(a.var(), 1), s1(a.var());
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        Poly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero() || !r0.is_constant())
        throw Error(Errc::internal_inconsistency, "diophantine operands are not coprime");
    const Rat inv = 1 / r0.lc();
    Poly s = divrem(s0 * inv * c, b).remainder;
    Poly t = exact_quotient(c - s * a, b);
    return {std::move(s), std::move(t)};
}

Poly diff(const Poly& p)
{
    if (p.is_constant())
        return Poly(p.var());
    std::vector<Rat> out(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
        out[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    return Poly(p.var(), std::move(out));
}

Poly integrate(const Poly& p)
{
    if (p.is_zero())
        return p;
    std::vector<Rat> out(p.coeffs().size() + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        out[i + 1] = p.coeffs()[i] / static_cast<unsigned long>(i + 1);
    return Poly(p.var(), std::move(out));
}

Poly pow(const Poly& p, std::size_t n)
{
    return detail::power(p, n, Poly::constant(p.var(), 1));
}

bool is_squarefree(const Poly& p)
{
    if (p.is_zero())
        throw Error(Errc::zero_input, "squarefree test of the zero polynomial");
    return gcd(p, diff(p)).is_constant();
}

SquarefreeDecomposition squarefree_decompose(const Poly& p)
{
    if (p.is_zero())
        throw Error(Errc::zero_input, "squarefree decomposition of the zero polynomial");
    SquarefreeDecomposition out{p.lc(), {}};
    if (p.is_constant())
        return out;

    const Poly f = p.monic();
    const Poly df = diff(f);
    const Poly a0 = gcd(f, df);
    Poly b = exact_quotient(f, a0);
    Poly c = exact_quotient(df, a0);
    Poly d = c - diff(b);
    for (std::size_t i = 1; !b.is_constant(); ++i) {
        Poly a = gcd(b, d);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - diff(b);
        if (!a.is_constant())
            out.factors.push_back({std::move(a), i});
    }
    return out;
}

Poly squarefree_part(const Poly& p)
{
    if (p.is_zero())
        throw Error(Errc::zero_input, "squarefree part of the zero polynomial");
    return exact_quotient(p, gcd(p, diff(p))).monic();
}

Rat resultant(const Poly& a, const Poly& b)
{
    if (a.var() != b.var())
        throw Error(Errc::variable_mismatch, "resultant operands use different variables");
    if (a.is_zero() || b.is_zero())
        throw Error(Errc::zero_input, "resultant with a zero polynomial");
    return detail::subresultant_resultant(a.coeffs(), b.coeffs(), Rat(1));
}

BiPoly BiPoly::lift(const Poly& p, Var param)
{
    BiPoly out{p.var(), param, {}};
    out.coeffs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.coeffs.push_back(Poly::constant(param, c));
    return out;
}

Poly resultant(const BiPoly& a, const BiPoly& b)
{
    if (a.main != b.main || a.param != b.param || a.main == a.param)
        throw Error(Errc::variable_mismatch, "unsupported variable configuration for a bivariate resultant");
    auto ac = a.coeffs;
    auto bc = b.coeffs;
    for (const auto* side : {&ac, &bc})
        for (const auto& c : *side)
            if (c.var() != a.param)
                throw Error(Errc::variable_mismatch, "coefficient tagged with the wrong parameter variable");
    detail::trim(ac);
    detail::trim(bc);
    if (ac.empty() || bc.empty())
        throw Error(Errc::zero_input, "resultant with a zero polynomial");
    return detail::subresultant_resultant(std::move(ac), std::move(bc), Poly::constant(a.param, 1));
}

namespace {

// Only the primitive integer form is searched, so every candidate p/q has
// p | trailing and q | leading.
std::vector<Int> integer_coeffs(const Poly& p)
{
    const Poly prim = p.primitive();
    std::vector<Int> out;
    out.reserve(prim.coeffs().size());
    for (const auto& c : prim.coeffs())
        out.push_back(c.get_num());
    return out;
}

struct PrimePower {
    Int prime;
    unsigned exponent;
};

constexpr unsigned long trial_division_limit = 1'000'000;

std::vector<PrimePower> factor_positive(Int n)
{
    std::vector<PrimePower> out;
    auto take = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out.push_back({p, e});
    };
    take(2);
    for (unsigned long d = 3; d <= trial_division_limit; d += 2) {
        const Int dd = d;
        if (dd * dd > n)
            break;
        take(dd);
    }
    if (n > 1) {
        const Int limit = Int(trial_division_limit) * trial_division_limit;
        if (n > limit && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            throw Error(Errc::resource_limit, "coefficient " + n.get_str() + " has no small factors; rational root search aborted");
        out.push_back({n, 1});
    }
    return out;
}

std::size_t divisor_count(const std::vector<PrimePower>& f)
{
    std::size_t count = 1;
    for (const auto& pp : f) {
        count *= pp.exponent + 1;
        if (count > max_root_candidates)
            return max_root_candidates + 1;
    }
    return count;
}

std::vector<Int> divisors(const std::vector<PrimePower>& f)
{
    std::vector<Int> out{1};
    for (const auto& pp : f) {
        const std::size_t base = out.size();
        Int power = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * power);
        }
    }
    return out;
}

bool is_root(const std::vector<Int>& coeffs, const Int& p, const Int& q)
{
    // q^n · P(p/q) evaluated in integers.
    const std::size_t n = coeffs.size() - 1;
    Int acc = 0;
    Int qpow = 1;
    std::vector<Int> qpows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        qpows[i] = qpow;
        qpow *= q;
    }
    for (std::size_t i = n + 1; i-- > 0;)
        acc = acc * p + coeffs[i] * qpows[n - i];
    return acc == 0;
}

} // namespace

RationalRoots rational_roots(const Poly& p)
{
    if (p.is_zero())
        throw Error(Errc::zero_input, "rational roots of the zero polynomial");

    RationalRoots out{{}, p};
    Poly& rest = out.nonsplit_remainder;

    std::size_t zero_mult = 0;
    while (sgn(rest.coeff(0)) == 0 && !rest.is_constant()) {
        rest = exact_quotient(rest, Poly::variable(p.var()));
        ++zero_mult;
    }
    if (zero_mult > 0)
        out.roots.push_back({0, zero_mult});
    if (rest.is_constant())
        return out;

    // Candidates come from the squarefree part, whose coefficients are much
    // smaller when roots repeat; multiplicities are then read off `rest`.
    Poly search = squarefree_part(rest);
    const std::vector<Int> ic = integer_coeffs(search);
    Int lead = abs(ic.back());
    Int trail = abs(ic.front());
    const auto lead_f = factor_positive(lead);
    const auto trail_f = factor_positive(trail);
    const std::size_t candidates = divisor_count(lead_f) * divisor_count(trail_f);
    if (candidates > max_root_candidates / 2)
        throw Error(Errc::resource_limit, "rational root search exceeds the candidate budget");

    const auto qs = divisors(lead_f);
    const auto ps = divisors(trail_f);
    std::vector<Int> current = ic;
    for (const auto& q : qs) {
        for (const auto& pnum : ps) {
            Int g;
            mpz_gcd(g.get_mpz_t(), pnum.get_mpz_t(), q.get_mpz_t());
            if (g != 1)
                continue;
            for (const Int& signed_p : {Int(pnum), Int(-pnum)}) {
                if (search.is_constant())
                    break;
                if (!is_root(current, signed_p, q))
                    continue;
                Rat root(signed_p, q);
                root.canonicalize();
                const Poly linear(p.var(), {-root, 1});
                std::size_t mult = 0;
                for (;;) {
                    auto [quo, rem] = divrem(rest, linear);
                    if (!rem.is_zero())
                        break;
                    rest = std::move(quo);
                    ++mult;
                }
                out.roots.push_back({root, mult});
                search = exact_quotient(search, linear);
                if (!search.is_constant())
                    current = integer_coeffs(search);
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.root < b.root; });
    return out;
}

RationalRoots rational_roots_among(const Poly& p, const std::vector<Rat>& candidates)
{
    if (p.is_zero())
        throw Error(Errc::zero_input, "rational roots of the zero polynomial");
    RationalRoots out{{}, p};
    Poly& rest = out.nonsplit_remainder;
    for (const auto& c : candidates) {
        if (rest.is_constant())
            break;
        const Poly linear(p.var(), {-c, 1});
        std::size_t mult = 0;
        for (;;) {
            auto [quo, rem] = divrem(rest, linear);
            if (!rem.is_zero())
                break;
            rest = std::move(quo);
            ++mult;
        }
        if (mult > 0)
            out.roots.push_back({c, mult});
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.root < b.root; });
    return out;
}

namespace {

unsigned valuation(Int n, const Int& prime)
{
    unsigned v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), prime.get_mpz_t()) != 0) {
        n /= prime;
        ++v;
    }
    return v;
}

/// Valuations at `prime` of the roots of the integer polynomial `ic`: the
/// negated slopes of its lower Newton polygon.
std::vector<Rat> root_valuations(const std::vector<Int>& ic, const Int& prime)
{
    std::vector<std::pair<long, long>> pts;
    for (std::size_t k = 0; k < ic.size(); ++k)
        if (sgn(ic[k]) != 0)
            pts.emplace_back(static_cast<long>(k), static_cast<long>(valuation(abs(ic[k]), prime)));
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // Drop b when it lies on or above the segment a -> pt.
            const long cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
            if (cross > 0)
                break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    std::vector<Rat> out;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        Rat slope(hull[i].second - hull[i - 1].second, hull[i].first - hull[i - 1].first);
        slope.canonicalize();
        out.push_back(-slope);
    }
    return out;
}

} // namespace

std::vector<Rat> root_ratio_candidates(const Poly& s)
{
    if (s.is_constant())
        throw Error(Errc::constant_input, "root ratios of a constant polynomial");
    if (sgn(s.coeff(0)) == 0)
        throw Error(Errc::zero_root_input, "root ratios of a polynomial vanishing at 0");
    const std::vector<Int> ic = integer_coeffs(s);
    // Only primes dividing the leading or constant coefficient give roots a
    // nonzero valuation.
    std::vector<Int> primes;
    for (const Int* n : {&ic.back(), &ic.front()})
        for (const auto& pp : factor_positive(abs(*n)))
            if (std::find(primes.begin(), primes.end(), pp.prime) == primes.end())
                primes.push_back(pp.prime);

    std::vector<Rat> magnitudes{Rat(1)};
    for (const auto& prime : primes) {
        const auto vals = root_valuations(ic, prime);
        std::vector<long> exps;
        for (const auto& a : vals)
            for (const auto& b : vals) {
                const Rat d = a - b;
                if (d.get_den() == 1 && std::find(exps.begin(), exps.end(), d.get_num().get_si()) == exps.end())
                    exps.push_back(d.get_num().get_si());
            }
        if (magnitudes.size() * exps.size() * 2 > max_root_candidates)
            throw Error(Errc::resource_limit, "root ratio search exceeds the candidate budget");
        std::vector<Rat> next;
        for (const auto& m : magnitudes)
            for (long e : exps) {
                Int pw;
                mpz_pow_ui(pw.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
                next.push_back(e < 0 ? Rat(m / pw) : Rat(m * pw));
            }
        magnitudes = std::move(next);
    }
    std::vector<Rat> out;
    for (const auto& m : magnitudes) {
        out.push_back(m);
        out.push_back(-m);
    }
    return out;
}

} // namespace liou
