#pragma once

// Subresultant remainder sequences over an integral domain. Polynomials are
// dense coefficient vectors (low degree first, top entry nonzero) whose
// coefficients are either Rat or Poly; every division performed here is exact
// by the subresultant theorem.

#include <cstddef>
#include <utility>
#include <vector>

#include "liou/errors.hpp"
#include "liou/poly.hpp"

namespace liou::detail {

inline bool is_zero(const Rat& c) { return sgn(c) == 0; }
inline bool is_zero(const Poly& c) { return c.is_zero(); }

inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
inline Poly exact_div(const Poly& a, const Poly& b) { return exact_quotient(a, b); }

template <class C>
void trim(std::vector<C>& p)
{
    while (!p.empty() && is_zero(p.back()))
        p.pop_back();
}

template <class C>
C power(const C& base, std::size_t n, const C& one)
{
    C result = one;
    C b = base;
    while (n > 0) {
        if (n & 1U)
            result = result * b;
        n >>= 1U;
        if (n > 0)
            b = b * b;
    }
    return result;
}

/// lc(b)^(deg a - deg b + 1) · a mod b, with the full power always applied.
template <class C>
std::vector<C> pseudo_remainder(std::vector<C> r, const std::vector<C>& b, const C& one)
{
    const std::size_t db = b.size() - 1;
    const C& lb = b.back();
    std::size_t e = r.size() - b.size() + 1;
    while (!r.empty() && r.size() - 1 >= db) {
        const std::size_t shift = r.size() - 1 - db;
        const C lr = r.back();
        for (auto& c : r)
            c = lb * c;
        for (std::size_t i = 0; i <= db; ++i)
            r[i + shift] = r[i + shift] - lr * b[i];
        trim(r);
        --e;
    }
    if (e > 0 && !r.empty()) {
        const C f = power(lb, e, one);
        for (auto& c : r)
            c = f * c;
    }
    return r;
}

template <class C>
std::vector<C> scaled_down(std::vector<C> p, const C& divisor)
{
    for (auto& c : p)
        c = exact_div(c, divisor);
    return p;
}

/// Res(a, b), Collins' subresultant algorithm.
template <class C>
C subresultant_resultant(std::vector<C> a, std::vector<C> b, const C& one)
{
    const C zero = one - one;
    if (a.empty() || b.empty())
        return zero;

    C sign = one;
    if (a.size() < b.size()) {
        std::swap(a, b);
        if (((a.size() - 1) * (b.size() - 1)) % 2 == 1)
            sign = zero - sign;
    }
    if (b.size() == 1)
        return sign * power(b.back(), a.size() - 1, one);

    C g = one;
    C h = one;
    for (;;) {
        const std::size_t da = a.size() - 1;
        const std::size_t db = b.size() - 1;
        const std::size_t delta = da - db;
        if (da % 2 == 1 && db % 2 == 1)
            sign = zero - sign;

        std::vector<C> r = pseudo_remainder(a, b, one);
        a = std::move(b);
        if (r.empty())
            return zero;
        b = scaled_down(std::move(r), C(g * power(h, delta, one)));
        g = a.back();
        if (delta > 0)
            h = exact_div(power(g, delta, one), power(h, delta - 1, one));

        if (b.size() == 1) {
            const std::size_t n = a.size() - 1;
            h = exact_div(power(b.back(), n, one), power(h, n - 1, one));
            return sign * h;
        }
    }
}

/// Last nonzero member of the subresultant sequence of a and b (both
/// nonzero); proportional to gcd(a, b).
template <class C>
std::vector<C> subresultant_gcd_chain(std::vector<C> a, std::vector<C> b, const C& one)
{
    if (a.size() < b.size())
        std::swap(a, b);
    C g = one;
    C h = one;
    for (;;) {
        const std::size_t delta = a.size() - b.size();
        std::vector<C> r = pseudo_remainder(a, b, one);
        if (r.empty())
            return b;
        if (r.size() == 1)
            return r;
        a = std::move(b);
        b = scaled_down(std::move(r), C(g * power(h, delta, one)));
        g = a.back();
        if (delta > 0)
            h = exact_div(power(g, delta, one), power(h, delta - 1, one));
    }
}

} // namespace liou::detail
