#include "liou/render.hpp"

#include <cstddef>

namespace liou {

std::string to_string(const Rat& r)
{
    return r.get_str();
}

namespace {

std::string monomial(const Rat& magnitude, Var var, std::size_t k)
{
    std::string out;
    if (k == 0)
        return to_string(magnitude);
    if (magnitude != 1)
        out = to_string(magnitude) + "*";
    out += var_name(var);
    if (k > 1)
        out += "^" + std::to_string(k);
    return out;
}

std::size_t term_count(const Poly& p)
{
    std::size_t n = 0;
    for (const auto& c : p.coeffs())
        n += sgn(c) != 0 ? 1 : 0;
    return n;
}

} // namespace

std::string to_string(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    const auto& cs = p.coeffs();
    for (std::size_t k = cs.size(); k-- > 0;) {
        const Rat& c = cs[k];
        if (sgn(c) == 0)
            continue;
        if (out.empty())
            out = sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        out += monomial(abs(c), p.var(), k);
    }
    return out;
}

std::string to_string(const RatFunc& f)
{
    if (f.is_polynomial())
        return to_string(f.num());
    std::string num = to_string(f.num());
    std::string den = to_string(f.den());
    if (term_count(f.num()) > 1)
        num = "(" + num + ")";
    if (term_count(f.den()) > 1)
        den = "(" + den + ")";
    return num + "/" + den;
}

} // namespace liou
