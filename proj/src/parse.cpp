#include "diffwitt/parse.hpp"

#include <optional>
#include <vector>

namespace diffwitt {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line),
      column_(column)
{
}

namespace {

constexpr std::uint32_t kMaxIndex = 1u << 20;

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

enum class Tok { End, Number, Symbol, Circle, VecHead, PoissonHead, Plus, Minus, Star, Slash, Caret, LParen, RParen,
                 LBracket, RBracket, LBrace, RBrace, Comma, Semicolon };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    char symbol = 0;
    std::uint32_t index = 0;
    Position pos;
};

[[noreturn]] void fail(const std::string& message, Position pos)
{
    throw ParseError(message, pos.line, pos.column);
}

std::uint32_t to_index(std::string_view digits, Position pos)
{
    std::uint64_t v = 0;
    for (char c : digits) {
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > kMaxIndex)
            fail("integer '" + std::string(digits) + "' too large", pos);
    }
    return static_cast<std::uint32_t>(v);
}

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    Position pos;
    std::size_t i = 0;
    auto advance = [&](std::size_t bytes) {
        for (std::size_t k = 0; k < bytes; ++k) {
            if (src[i + k] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else if ((static_cast<unsigned char>(src[i + k]) & 0xC0) != 0x80) {
                ++pos.column;
            }
        }
        i += bytes;
    };
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };

    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            advance(1);
            continue;
        }
        Token t;
        t.pos = pos;
        auto rest = src.substr(i);
        if (rest.starts_with("∘")) {
            t.kind = Tok::Circle;
            out.push_back(t);
            advance(3);
            continue;
        }
        if (rest.starts_with("·")) {
            t.kind = Tok::Star;
            out.push_back(t);
            advance(2);
            continue;
        }
        if (rest.starts_with("−")) {
            t.kind = Tok::Minus;
            out.push_back(t);
            advance(3);
            continue;
        }
        if (is_digit(c)) {
            std::size_t j = i;
            while (j < src.size() && is_digit(src[j]))
                ++j;
            t.kind = Tok::Number;
            t.text = std::string(src.substr(i, j - i));
            out.push_back(t);
            advance(j - i);
            continue;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            std::size_t j = i + 1;
            while (j < src.size() && is_digit(src[j]))
                ++j;
            bool has_index = j > i + 1;
            if (j < src.size() && ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= 'A' && src[j] <= 'Z') || src[j] == '_'))
                fail("unknown identifier starting with '" + std::string(1, c) + "'", pos);
            if (!has_index) {
                if (c == 'o')
                    t.kind = Tok::Circle;
                else if (c == 'V')
                    t.kind = Tok::VecHead;
                else if (c == 'P')
                    t.kind = Tok::PoissonHead;
                else
                    fail("symbol '" + std::string(1, c) + "' needs an index", pos);
            } else {
                if (std::string_view("xyzDeX").find(c) == std::string_view::npos)
                    fail("unknown symbol '" + std::string(src.substr(i, j - i)) + "'", pos);
                t.kind = Tok::Symbol;
                t.symbol = c;
                t.index = to_index(src.substr(i + 1, j - i - 1), pos);
                if (t.index == 0)
                    fail("indices are 1-based", pos);
            }
            out.push_back(t);
            advance(j - i);
            continue;
        }
        switch (c) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case '^': t.kind = Tok::Caret; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '[': t.kind = Tok::LBracket; break;
        case ']': t.kind = Tok::RBracket; break;
        case '{': t.kind = Tok::LBrace; break;
        case '}': t.kind = Tok::RBrace; break;
        case ',': t.kind = Tok::Comma; break;
        case ';': t.kind = Tok::Semicolon; break;
        default: fail("unexpected character '" + std::string(1, c) + "'", pos);
        }
        out.push_back(t);
        advance(1);
    }
    Token end;
    end.pos = pos;
    out.push_back(end);
    return out;
}

struct Expr {
    enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow, Circle, Bracket, Brace, VecLit, PoissonLit };

    Kind kind = Kind::Number;
    Position pos;
    Rational number;
    char symbol = 0;
    std::uint32_t index = 0;
    std::optional<std::vector<std::uint32_t>> theta;
    std::uint32_t exponent = 0;
    std::vector<Expr> args;
};

const char* describe(Tok k)
{
    switch (k) {
    case Tok::End: return "end of input";
    case Tok::Number: return "number";
    case Tok::Symbol: return "symbol";
    case Tok::Circle: return "'o'";
    case Tok::VecHead: return "'V'";
    case Tok::PoissonHead: return "'P'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Semicolon: return "';'";
    }
    return "token";
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    Expr parse_all()
    {
        Expr e = sum();
        if (peek().kind != Tok::End)
            fail(std::string("unexpected ") + describe(peek().kind), peek().pos);
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }
    bool accept(Tok k)
    {
        if (peek().kind != k)
            return false;
        ++pos_;
        return true;
    }
    const Token& expect(Tok k, const char* context)
    {
        if (peek().kind != k)
            fail(std::string("expected ") + describe(k) + " " + context + ", found " + describe(peek().kind),
                 peek().pos);
        return take();
    }

    static Expr node(Expr::Kind kind, Position pos, std::vector<Expr> args)
    {
        Expr e;
        e.kind = kind;
        e.pos = pos;
        e.args = std::move(args);
        return e;
    }

    Expr sum()
    {
        Expr lhs = circle();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& op = take();
            Expr rhs = circle();
            lhs = node(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op.pos, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    Expr circle()
    {
        Expr lhs = product();
        if (peek().kind == Tok::Circle) {
            const Token& op = take();
            Expr rhs = product();
            lhs = node(Expr::Kind::Circle, op.pos, {std::move(lhs), std::move(rhs)});
            if (peek().kind == Tok::Circle)
                fail("chained 'o' needs explicit parentheses", peek().pos);
        }
        return lhs;
    }

    Expr product()
    {
        Expr lhs = unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Token& op = take();
            Expr rhs = unary();
            lhs = node(op.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div, op.pos, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    Expr unary()
    {
        if (peek().kind == Tok::Minus) {
            Position p = take().pos;
            return node(Expr::Kind::Neg, p, {unary()});
        }
        return power();
    }

    Expr power()
    {
        Expr base = atom();
        while (peek().kind == Tok::Caret) {
            Position p = take().pos;
            if (peek().kind == Tok::LParen) {
                if (base.kind != Expr::Kind::Symbol || base.symbol != 'y' || base.theta)
                    fail("a derivative operator '^(...)' can only follow an indeterminate y<k>", p);
                take();
                std::vector<std::uint32_t> idx;
                do {
                    const Token& t = expect(Tok::Number, "in derivative operator");
                    idx.push_back(to_index(t.text, t.pos));
                } while (accept(Tok::Comma));
                expect(Tok::RParen, "closing derivative operator");
                base.theta = std::move(idx);
                continue;
            }
            const Token& t = expect(Tok::Number, "as exponent");
            Expr e = node(Expr::Kind::Pow, p, {std::move(base)});
            e.exponent = to_index(t.text, t.pos);
            base = std::move(e);
        }
        return base;
    }

    Expr atom()
    {
        const Token& t = take();
        switch (t.kind) {
        case Tok::Number: {
            Expr e = node(Expr::Kind::Number, t.pos, {});
            e.number = Rational(mpz_class(t.text));
            return e;
        }
        case Tok::Symbol: {
            Expr e = node(Expr::Kind::Symbol, t.pos, {});
            e.symbol = t.symbol;
            e.index = t.index;
            return e;
        }
        case Tok::LParen: {
            Expr e = sum();
            expect(Tok::RParen, "to close '('");
            return e;
        }
        case Tok::LBracket: {
            Expr a = sum();
            expect(Tok::Comma, "in bracket");
            Expr b = sum();
            expect(Tok::RBracket, "to close '['");
            return node(Expr::Kind::Bracket, t.pos, {std::move(a), std::move(b)});
        }
        case Tok::LBrace: {
            Expr a = sum();
            expect(Tok::Comma, "in Poisson bracket");
            Expr b = sum();
            expect(Tok::RBrace, "to close '{'");
            return node(Expr::Kind::Brace, t.pos, {std::move(a), std::move(b)});
        }
        case Tok::VecHead: {
            expect(Tok::LParen, "after 'V'");
            std::vector<Expr> comps;
            do {
                comps.push_back(sum());
            } while (accept(Tok::Semicolon));
            expect(Tok::RParen, "to close 'V('");
            return node(Expr::Kind::VecLit, t.pos, std::move(comps));
        }
        case Tok::PoissonHead: {
            expect(Tok::LParen, "after 'P'");
            Expr inner = sum();
            expect(Tok::RParen, "to close 'P('");
            return node(Expr::Kind::PoissonLit, t.pos, {std::move(inner)});
        }
        default: fail(std::string("unexpected ") + describe(t.kind), t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

Expr parse_text(std::string_view text)
{
    return Parser(text).parse_all();
}

std::optional<Rational> try_scalar(const Expr& e)
{
    using K = Expr::Kind;
    switch (e.kind) {
    case K::Number: return e.number;
    case K::Neg: {
        auto a = try_scalar(e.args[0]);
        return a ? std::optional<Rational>(-*a) : std::nullopt;
    }
    case K::Add:
    case K::Sub:
    case K::Mul:
    case K::Div: {
        auto a = try_scalar(e.args[0]);
        auto b = try_scalar(e.args[1]);
        if (!a || !b)
            return std::nullopt;
        switch (e.kind) {
        case K::Add: return *a + *b;
        case K::Sub: return *a - *b;
        case K::Mul: return *a * *b;
        default:
            if (*b == 0)
                fail("division by zero", e.pos);
            return *a / *b;
        }
    }
    case K::Pow: {
        auto a = try_scalar(e.args[0]);
        if (!a)
            return std::nullopt;
        Rational r = 1;
        for (std::uint32_t k = 0; k < e.exponent; ++k)
            r *= *a;
        return r;
    }
    default: return std::nullopt;
    }
}

Rational divisor(const Expr& e)
{
    auto d = try_scalar(e);
    if (!d)
        fail("only division by a rational number is supported", e.pos);
    if (*d == 0)
        fail("division by zero", e.pos);
    return *d;
}

// Commutative ring expressions with derivations, evaluated in the
// enveloping ring over m derivations.
EnvElement lower_ring(const Expr& e, std::size_t m)
{
    using K = Expr::Kind;
    switch (e.kind) {
    case K::Number: return EnvElement::coefficient(DiffPoly::scalar(m, e.number));
    case K::Symbol:
        switch (e.symbol) {
        case 'x':
            if (e.index > m)
                fail("x" + std::to_string(e.index) + " out of range: ring has " + std::to_string(m) + " variables",
                     e.pos);
            return EnvElement::coefficient(DiffPoly::constant(Poly::variable(m, e.index)));
        case 'y': {
            DerivOp theta = DerivOp::identity(m);
            if (e.theta) {
                if (e.theta->size() != m)
                    fail("derivative operator has " + std::to_string(e.theta->size()) + " entries, expected " +
                             std::to_string(m),
                         e.pos);
                theta = DerivOp(*e.theta);
            }
            return EnvElement::coefficient(DiffPoly::indeterminate(e.index, theta));
        }
        case 'D':
            if (e.index > m)
                fail("D" + std::to_string(e.index) + " out of range: ring has " + std::to_string(m) + " derivations",
                     e.pos);
            return EnvElement::derivation(m, e.index);
        default:
            fail(std::string("symbol '") + e.symbol + "' is not allowed in a ring expression", e.pos);
        }
    case K::Neg: return -lower_ring(e.args[0], m);
    case K::Add: return lower_ring(e.args[0], m) + lower_ring(e.args[1], m);
    case K::Sub: return lower_ring(e.args[0], m) - lower_ring(e.args[1], m);
    case K::Mul: return lower_ring(e.args[0], m) * lower_ring(e.args[1], m);
    case K::Div: return lower_ring(e.args[0], m) * (Rational(1) / divisor(e.args[1]));
    case K::Pow: {
        EnvElement base = lower_ring(e.args[0], m);
        EnvElement r = EnvElement::coefficient(DiffPoly::scalar(m, 1));
        for (std::uint32_t k = 0; k < e.exponent; ++k)
            r = r * base;
        return r;
    }
    case K::Bracket: {
        EnvElement a = lower_ring(e.args[0], m), b = lower_ring(e.args[1], m);
        return a * b - b * a;
    }
    case K::VecLit: {
        if (e.args.size() != m)
            fail("V(...) has " + std::to_string(e.args.size()) + " components, expected " + std::to_string(m), e.pos);
        EnvElement r(m);
        for (std::size_t k = 0; k < m; ++k)
            r += lower_ring(e.args[k], m) * EnvElement::derivation(m, k + 1);
        return r;
    }
    case K::Circle: fail("'o' is only allowed in free-algebra terms", e.pos);
    case K::Brace: fail("'{,}' is only allowed in Poisson terms", e.pos);
    case K::PoissonLit: fail("'P(...)' is only allowed in Poisson terms", e.pos);
    }
    fail("malformed expression", e.pos);
}

DiffPoly project_diffpoly(const EnvElement& u, const Expr& e)
{
    for (const auto& [theta, r] : u.terms())
        if (!theta.is_identity())
            fail("expression still contains derivation operators", e.pos);
    return u.coefficient_of(DerivOp::identity(u.derivations()));
}

VectorField project_vector_field(const EnvElement& u, const Expr& e)
{
    const std::size_t m = u.derivations();
    std::vector<DiffPoly> comps(m, DiffPoly(m, 0));
    for (const auto& [theta, r] : u.terms()) {
        if (theta.order() != 1)
            fail("not a vector field: term of order " + std::to_string(theta.order()) +
                     "; write V(f1; ...; fm) or f1*D1 + ... + fm*Dm",
                 e.pos);
        for (std::size_t k = 0; k < m; ++k)
            if (theta.index[k] == 1)
                comps[k] = r;
    }
    return VectorField(std::move(comps));
}

bool contains(const Expr& e, bool (*pred)(const Expr&))
{
    if (pred(e))
        return true;
    for (const auto& a : e.args)
        if (contains(a, pred))
            return true;
    return false;
}

bool is_term_syntax(const Expr& e)
{
    using K = Expr::Kind;
    return (e.kind == K::Symbol && e.symbol == 'z') || e.kind == K::VecLit || e.kind == K::PoissonLit ||
           e.kind == K::Circle || e.kind == K::Bracket || e.kind == K::Brace;
}

struct TermLowering {
    Variety v;

    bool poisson() const { return v.kind == VarietyKind::Poisson; }

    // A lowered subexpression is either a bare scalar or a term.
    struct Value {
        std::optional<Rational> scalar;
        FreeTerm term;
    };

    FreeTerm as_term(const Value& x, const Expr& e) const
    {
        if (!x.scalar)
            return x.term;
        if (*x.scalar == 0)
            return FreeTerm::zero();
        fail("a nonzero scalar is not an element here; multiply it with a term", e.pos);
    }

    Value lower(const Expr& e) const
    {
        using K = Expr::Kind;
        if (auto s = try_scalar(e))
            return {s, {}};
        if (poisson() && !contains(e, is_term_syntax)) {
            DiffPoly c = project_diffpoly(lower_ring(e, v.derivations()), e);
            return {std::nullopt, FreeTerm::constant(PoissonElement(std::move(c)))};
        }
        switch (e.kind) {
        case K::Symbol:
            if (e.symbol != 'z')
                fail(std::string("symbol '") + e.symbol + std::to_string(e.index) +
                         "' is not allowed here; wrap constants in V(...)",
                     e.pos);
            return {std::nullopt, FreeTerm::generator(e.index)};
        case K::VecLit:
            if (poisson())
                fail("V(...) constants belong to L/W varieties, not " + v.name(), e.pos);
            return {std::nullopt, FreeTerm::constant(project_vector_field(lower_ring(e, v.m), e))};
        case K::PoissonLit:
            if (!poisson())
                fail("P(...) constants belong to Poisson varieties, not " + v.name(), e.pos);
            return {std::nullopt, FreeTerm::constant(PoissonElement(
                                      project_diffpoly(lower_ring(e.args[0], v.derivations()), e.args[0])))};
        case K::Neg: return {std::nullopt, FreeTerm::scaled(-1, as_term(lower(e.args[0]), e.args[0]))};
        case K::Add:
        case K::Sub: {
            FreeTerm a = as_term(lower(e.args[0]), e.args[0]);
            FreeTerm b = as_term(lower(e.args[1]), e.args[1]);
            return {std::nullopt, e.kind == K::Add ? a + b : a - b};
        }
        case K::Mul: {
            Value a = lower(e.args[0]), b = lower(e.args[1]);
            if (a.scalar)
                return {std::nullopt, FreeTerm::scaled(*a.scalar, b.term)};
            if (b.scalar)
                return {std::nullopt, FreeTerm::scaled(*b.scalar, a.term)};
            if (!poisson())
                fail("'*' between elements is not an operation of " + v.name(), e.pos);
            return {std::nullopt, FreeTerm::poisson_mul(a.term, b.term)};
        }
        case K::Div: {
            Rational d = divisor(e.args[1]);
            return {std::nullopt, FreeTerm::scaled(Rational(1) / d, as_term(lower(e.args[0]), e.args[0]))};
        }
        case K::Pow: {
            if (!poisson())
                fail("powers are not an operation of " + v.name(), e.pos);
            if (e.exponent == 0)
                fail("zeroth power of a term", e.pos);
            FreeTerm base = as_term(lower(e.args[0]), e.args[0]);
            FreeTerm r = base;
            for (std::uint32_t k = 1; k < e.exponent; ++k)
                r = FreeTerm::poisson_mul(r, base);
            return {std::nullopt, r};
        }
        case K::Circle:
            if (v.kind != VarietyKind::LSymWitt)
                fail("'o' is not an operation of " + v.name(), e.pos);
            return {std::nullopt, FreeTerm::lsym(as_term(lower(e.args[0]), e.args[0]),
                                                 as_term(lower(e.args[1]), e.args[1]))};
        case K::Bracket:
            if (poisson())
                fail("'[,]' is not an operation of " + v.name() + "; use '{,}'", e.pos);
            return {std::nullopt, FreeTerm::lie(as_term(lower(e.args[0]), e.args[0]),
                                                as_term(lower(e.args[1]), e.args[1]))};
        case K::Brace:
            if (!poisson())
                fail("'{,}' is not an operation of " + v.name(), e.pos);
            return {std::nullopt, FreeTerm::poisson_bracket(as_term(lower(e.args[0]), e.args[0]),
                                                            as_term(lower(e.args[1]), e.args[1]))};
        case K::Number: break;
        }
        fail("malformed term", e.pos);
    }
};

struct AlgLowering {
    const StructureConstants& alg;

    struct Value {
        std::optional<Rational> scalar;
        AlgTerm term;
    };

    AlgTerm as_term(const Value& x, const Expr& e) const
    {
        if (!x.scalar)
            return x.term;
        if (*x.scalar == 0)
            return AlgTerm::zero();
        fail("a nonzero scalar is not an algebra element; multiply it with a term", e.pos);
    }

    Value lower(const Expr& e) const
    {
        using K = Expr::Kind;
        if (auto s = try_scalar(e))
            return {s, {}};
        switch (e.kind) {
        case K::Symbol:
            if (e.symbol == 'X')
                return {std::nullopt, AlgTerm::unknown(e.index)};
            if (e.symbol == 'e') {
                if (e.index > alg.dim())
                    fail("e" + std::to_string(e.index) + " out of range: algebra has dim " + std::to_string(alg.dim()),
                         e.pos);
                return {std::nullopt, AlgTerm::basis(e.index)};
            }
            fail(std::string("symbol '") + e.symbol + "' is not allowed here; use X<i> and e<k>", e.pos);
        case K::Neg: return {std::nullopt, AlgTerm::scaled(-1, as_term(lower(e.args[0]), e.args[0]))};
        case K::Add:
        case K::Sub: {
            AlgTerm a = as_term(lower(e.args[0]), e.args[0]);
            AlgTerm b = as_term(lower(e.args[1]), e.args[1]);
            return {std::nullopt, e.kind == K::Add ? a + b : a - b};
        }
        case K::Mul: {
            Value a = lower(e.args[0]), b = lower(e.args[1]);
            if (a.scalar)
                return {std::nullopt, AlgTerm::scaled(*a.scalar, b.term)};
            if (b.scalar)
                return {std::nullopt, AlgTerm::scaled(*b.scalar, a.term)};
            return {std::nullopt, AlgTerm::product(a.term, b.term)};
        }
        case K::Div:
            return {std::nullopt, AlgTerm::scaled(Rational(1) / divisor(e.args[1]), as_term(lower(e.args[0]), e.args[0]))};
        case K::Pow: {
            if (e.exponent == 0)
                fail("zeroth power of an algebra element", e.pos);
            AlgTerm base = as_term(lower(e.args[0]), e.args[0]);
            AlgTerm r = base;
            for (std::uint32_t k = 1; k < e.exponent; ++k)
                r = AlgTerm::product(r, base);
            return {std::nullopt, r};
        }
        default: fail("operator not available in structure-constant algebras", e.pos);
        }
    }
};

} // namespace

Poly parse_poly(std::string_view text, std::size_t m)
{
    Expr e = parse_text(text);
    DiffPoly f = project_diffpoly(lower_ring(e, m), e);
    if (!f.is_y_free())
        fail("polynomial contains differential indeterminates", e.pos);
    return f.constant_part();
}

DiffPoly parse_diffpoly(std::string_view text, std::size_t m, std::size_t gen_count)
{
    Expr e = parse_text(text);
    DiffPoly f = project_diffpoly(lower_ring(e, m), e);
    return f.with_gen_count(std::max<std::size_t>(gen_count, f.max_gen_used()));
}

EnvElement parse_env(std::string_view text, std::size_t m)
{
    return lower_ring(parse_text(text), m);
}

VectorField parse_vector_field(std::string_view text, std::size_t m)
{
    Expr e = parse_text(text);
    return project_vector_field(lower_ring(e, m), e);
}

Element parse_element(std::string_view text, const Variety& v)
{
    Expr e = parse_text(text);
    if (v.kind != VarietyKind::Poisson)
        return project_vector_field(lower_ring(e, v.m), e);
    const Expr& body = e.kind == Expr::Kind::PoissonLit ? e.args[0] : e;
    return PoissonElement(project_diffpoly(lower_ring(body, v.derivations()), body));
}

FreeTerm parse_term(std::string_view text, const Variety& v)
{
    Expr e = parse_text(text);
    TermLowering lowering{v};
    return lowering.as_term(lowering.lower(e), e);
}

AlgTerm parse_alg_term(std::string_view text, const StructureConstants& alg)
{
    Expr e = parse_text(text);
    AlgLowering lowering{alg};
    return lowering.as_term(lowering.lower(e), e);
}

} // namespace diffwitt
