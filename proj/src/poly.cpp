#include "diffwitt/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace diffwitt {

Rational make_rational(long numerator, long denominator)
{
    if (denominator == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational factorial(std::uint32_t k)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

std::uint32_t total_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool DegLexGreater::operator()(const Exponent& a, const Exponent& b) const
{
    auto da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da > db;
    return a > b;
}

std::strong_ordering lex_compare(const Exponent& a, const Exponent& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("exponent vectors of different length");
    return a <=> b;
}

Poly::Poly(std::size_t var_count) : var_count_(var_count)
{
    if (var_count == 0)
        throw std::invalid_argument("polynomial ring needs at least one variable");
}

Poly Poly::constant(std::size_t var_count, const Rational& c)
{
    Poly p(var_count);
    p.add_term(Exponent(var_count, 0), c);
    return p;
}

Poly Poly::variable(std::size_t var_count, std::size_t i)
{
    if (i < 1 || i > var_count)
        throw std::out_of_range("variable index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(var_count));
    Exponent e(var_count, 0);
    e[i - 1] = 1;
    return monomial(std::move(e), Rational(1));
}

Poly Poly::monomial(Exponent e, const Rational& c)
{
    Poly p(e.size());
    p.add_term(e, c);
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const
{
    return coefficient(Exponent(var_count_, 0));
}

Rational Poly::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const
{
    if (terms_.empty())
        return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

void Poly::add_term(const Exponent& e, const Rational& c)
{
    if (e.size() != var_count_)
        throw std::invalid_argument("exponent length does not match variable count");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Poly::require_same_ring(const Poly& other) const
{
    if (var_count_ != other.var_count_)
        throw std::invalid_argument("variable-count mismatch: " + std::to_string(var_count_) + " vs " +
                                    std::to_string(other.var_count_));
}

Poly& Poly::operator+=(const Poly& other)
{
    require_same_ring(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    require_same_ring(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    a.require_same_ring(b);
    Poly r(a.var_count_);
    Exponent e(a.var_count_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& other)
{
    *this = *this * other;
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

Poly operator-(Poly a)
{
    for (auto& [e, c] : a.terms_)
        c = -c;
    return a;
}

Rational Poly::evaluate(std::span<const Rational> point) const
{
    if (point.size() != var_count_)
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            for (std::uint32_t p = 0; p < e[k]; ++p)
                term *= point[k];
        }
        sum += term;
    }
    return sum;
}

Poly pow(const Poly& p, std::uint32_t k)
{
    Poly result = Poly::constant(p.var_count(), 1);
    Poly base = p;
    while (k > 0) {
        if (k & 1u)
            result *= base;
        k >>= 1;
        if (k > 0)
            base *= base;
    }
    return result;
}

Poly partial(const Poly& p, std::size_t i)
{
    if (i < 1 || i > p.var_count())
        throw std::out_of_range("derivation index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(p.var_count()));
    Poly r(p.var_count());
    for (const auto& [e, c] : p.terms()) {
        if (e[i - 1] == 0)
            continue;
        Exponent d = e;
        --d[i - 1];
        r.add_term(d, c * e[i - 1]);
    }
    return r;
}

std::string monomial_text(const Exponent& e)
{
    std::string out;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x' + std::to_string(k + 1);
        if (e[k] > 1)
            out += '^' + std::to_string(e[k]);
    }
    return out;
}

std::string to_string(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string mono = monomial_text(e);
        if (mono.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + "*" + mono;
    }
    return out;
}

} // namespace diffwitt
