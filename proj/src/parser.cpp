#include "liou/parser.hpp"

#include <cctype>
#include <utility>

#include "liou/errors.hpp"

namespace liou {

std::vector<Token> tokenize(std::string_view input)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < input.size()) {
        const unsigned char ch = static_cast<unsigned char>(input[i]);
        if (std::isspace(ch) != 0) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(ch) != 0) {
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i])) != 0)
                ++i;
            out.push_back({TokenKind::integer, std::string(input.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(ch) != 0 || ch == '_') {
            while (i < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[i])) != 0 || input[i] == '_'))
                ++i;
            out.push_back({TokenKind::identifier, std::string(input.substr(start, i - start)), start});
            continue;
        }
        TokenKind kind{};
        switch (ch) {
        case '+': kind = TokenKind::plus; break;
        case '-': kind = TokenKind::minus; break;
        case '*': kind = TokenKind::star; break;
        case '/': kind = TokenKind::slash; break;
        case '^': kind = TokenKind::caret; break;
        case '(': kind = TokenKind::lparen; break;
        case ')': kind = TokenKind::rparen; break;
        default:
            throw Error(Errc::illegal_character,
                        "illegal character '" + std::string(1, input[i]) + "' at offset " + std::to_string(i), i);
        }
        out.push_back({kind, std::string(1, input[i]), start});
        ++i;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::vector<Token>& tokens, std::size_t input_length)
        : tokens_(tokens), end_offset_(input_length) {}

    SyntaxNode parse_all()
    {
        SyntaxNode root = expr();
        if (pos_ < tokens_.size())
            throw Error(Errc::trailing_input,
                        "unexpected '" + tokens_[pos_].lexeme + "' after a complete expression at offset " +
                            std::to_string(tokens_[pos_].offset),
                        tokens_[pos_].offset);
        return root;
    }

private:
    bool at(TokenKind k) const { return pos_ < tokens_.size() && tokens_[pos_].kind == k; }
    std::size_t offset() const { return pos_ < tokens_.size() ? tokens_[pos_].offset : end_offset_; }

    [[noreturn]] void unexpected(const std::string& expected) const
    {
        const std::string found = pos_ < tokens_.size() ? "'" + tokens_[pos_].lexeme + "'" : "end of input";
        throw Error(Errc::unexpected_token,
                    "expected " + expected + " but found " + found + " at offset " + std::to_string(offset()),
                    offset());
    }

    static SyntaxNode binary(SyntaxNode::Kind kind, std::size_t off, SyntaxNode lhs, SyntaxNode rhs)
    {
        SyntaxNode n{kind, off, 0, {}, 0, {}};
        n.children.push_back(std::move(lhs));
        n.children.push_back(std::move(rhs));
        return n;
    }

    SyntaxNode expr()
    {
        SyntaxNode lhs = term();
        while (at(TokenKind::plus) || at(TokenKind::minus)) {
            const auto kind = at(TokenKind::plus) ? SyntaxNode::Kind::add : SyntaxNode::Kind::sub;
            const std::size_t off = tokens_[pos_++].offset;
            lhs = binary(kind, off, std::move(lhs), term());
        }
        return lhs;
    }

    SyntaxNode term()
    {
        SyntaxNode lhs = unary();
        while (at(TokenKind::star) || at(TokenKind::slash)) {
            const auto kind = at(TokenKind::star) ? SyntaxNode::Kind::mul : SyntaxNode::Kind::div;
            const std::size_t off = tokens_[pos_++].offset;
            lhs = binary(kind, off, std::move(lhs), unary());
        }
        return lhs;
    }

    SyntaxNode unary()
    {
        if (at(TokenKind::minus)) {
            const std::size_t off = tokens_[pos_++].offset;
            SyntaxNode n{SyntaxNode::Kind::negate, off, 0, {}, 0, {}};
            n.children.push_back(unary());
            return n;
        }
        return factor();
    }

    SyntaxNode factor()
    {
        SyntaxNode b = base();
        if (!at(TokenKind::caret))
            return b;
        const std::size_t off = tokens_[pos_++].offset;
        if (!at(TokenKind::integer))
            unexpected("an integer exponent");
        const Token& e = tokens_[pos_++];
        const Int value(e.lexeme);
        if (value > static_cast<unsigned long>(max_exponent))
            throw Error(Errc::resource_limit,
                        "exponent " + e.lexeme + " exceeds " + std::to_string(max_exponent), e.offset);
        if (at(TokenKind::caret))
            throw Error(Errc::unexpected_token,
                        "'^' does not chain; parenthesize the base at offset " + std::to_string(offset()), offset());
        SyntaxNode n{SyntaxNode::Kind::pow, off, 0, {}, value.get_ui(), {}};
        n.children.push_back(std::move(b));
        return n;
    }

    SyntaxNode base()
    {
        if (at(TokenKind::integer)) {
            const Token& tok = tokens_[pos_++];
            return {SyntaxNode::Kind::number, tok.offset, Int(tok.lexeme), {}, 0, {}};
        }
        if (at(TokenKind::identifier)) {
            const Token& tok = tokens_[pos_++];
            return {SyntaxNode::Kind::variable, tok.offset, 0, tok.lexeme, 0, {}};
        }
        if (at(TokenKind::lparen)) {
            ++pos_;
            SyntaxNode inner = expr();
            if (!at(TokenKind::rparen))
                unexpected("')'");
            ++pos_;
            return inner;
        }
        unexpected("a number, variable or '('");
    }

    const std::vector<Token>& tokens_;
    std::size_t end_offset_;
    std::size_t pos_ = 0;
};

template <class Domain>
typename Domain::Value evaluate(const SyntaxNode& n, const Domain& d)
{
    using K = SyntaxNode::Kind;
    switch (n.kind) {
    case K::number: return d.number(n.number);
    case K::variable: return d.variable(n.name, n.offset);
    case K::negate: return d.neg(evaluate(n.children[0], d));
    case K::add: return d.add(evaluate(n.children[0], d), evaluate(n.children[1], d));
    case K::sub: return d.add(evaluate(n.children[0], d), d.neg(evaluate(n.children[1], d)));
    case K::mul: return d.mul(evaluate(n.children[0], d), evaluate(n.children[1], d));
    case K::div: return d.div(evaluate(n.children[0], d), evaluate(n.children[1], d), n.offset);
    case K::pow: {
        auto b = evaluate(n.children[0], d);
        auto acc = d.number(1);
        for (std::size_t i = 0; i < n.exponent; ++i)
            acc = d.mul(std::move(acc), b);
        return acc;
    }
    }
    throw Error(Errc::internal_inconsistency, "unknown syntax node");
}

[[noreturn]] void wrong_variable(const std::string& name, std::size_t offset, std::string_view expected)
{
    throw Error(Errc::wrong_variable,
                "variable '" + name + "' at offset " + std::to_string(offset) + " (expected " +
                    std::string(expected) + ")",
                offset);
}

struct RatFuncDomain {
    using Value = RatFunc;
    Var var;

    Value number(const Int& n) const { return RatFunc::constant(var, Rat(n)); }
    Value variable(const std::string& name, std::size_t offset) const
    {
        if (name != var_name(var))
            wrong_variable(name, offset, var_name(var));
        return RatFunc::variable(var);
    }
    Value neg(Value a) const { return -a; }
    Value add(Value a, const Value& b) const { return a + b; }
    Value mul(Value a, const Value& b) const { return a * b; }
    Value div(Value a, const Value& b, std::size_t offset) const
    {
        if (b.is_zero())
            throw Error(Errc::division_by_zero_expression,
                        "division by an expression equal to zero at offset " + std::to_string(offset), offset);
        return a / b;
    }
};

// Polynomials in y over Q(x), coefficient vectors indexed by the power of y.
struct QxPolyDomain {
    using Value = std::vector<RatFunc>;

    static void trim(Value& v)
    {
        while (!v.empty() && v.back().is_zero())
            v.pop_back();
    }

    Value number(const Int& n) const
    {
        Value v{RatFunc::constant(Var::x, Rat(n))};
        trim(v);
        return v;
    }
    Value variable(const std::string& name, std::size_t offset) const
    {
        if (name == "y")
            return {RatFunc(Var::x), RatFunc::constant(Var::x, 1)};
        if (name == "x")
            return {RatFunc::variable(Var::x)};
        wrong_variable(name, offset, "y or x");
    }
    Value neg(Value a) const
    {
        for (auto& c : a)
            c = -c;
        return a;
    }
    Value add(Value a, const Value& b) const
    {
        if (a.size() < b.size())
            a.resize(b.size(), RatFunc(Var::x));
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i] += b[i];
        trim(a);
        return a;
    }
    Value mul(const Value& a, const Value& b) const
    {
        if (a.empty() || b.empty())
            return {};
        Value out(a.size() + b.size() - 1, RatFunc(Var::x));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] += a[i] * b[j];
        trim(out);
        return out;
    }
    Value div(Value a, const Value& b, std::size_t offset) const
    {
        if (b.empty())
            throw Error(Errc::division_by_zero_expression,
                        "division by an expression equal to zero at offset " + std::to_string(offset), offset);
        if (b.size() > 1)
            throw Error(Errc::unexpected_token,
                        "division by an expression in y at offset " + std::to_string(offset) +
                            " (coefficients may only be rational in x)",
                        offset);
        for (auto& c : a)
            c /= b[0];
        return a;
    }
};

} // namespace

SyntaxNode parse_tree(const std::vector<Token>& tokens, std::size_t input_length)
{
    return Parser(tokens, input_length).parse_all();
}

RatFunc parse(const std::vector<Token>& tokens, std::size_t input_length, Var var)
{
    return evaluate(parse_tree(tokens, input_length), RatFuncDomain{var});
}

RatFunc parse(std::string_view input, Var var)
{
    return parse(tokenize(input), input.size(), var);
}

PolyOverQx parse_poly_over_qx(std::string_view input)
{
    const auto tree = parse_tree(tokenize(input), input.size());
    return {evaluate(tree, QxPolyDomain{})};
}

} // namespace liou
