#include "diffwitt/envelope.hpp"

#include <stdexcept>

namespace diffwitt {

EnvElement::EnvElement(std::size_t derivations) : m_(derivations)
{
    if (derivations == 0)
        throw std::invalid_argument("enveloping ring needs at least one derivation");
}

EnvElement EnvElement::coefficient(const DiffPoly& r)
{
    EnvElement u(r.derivations());
    u.add_term(DerivOp::identity(r.derivations()), r);
    return u;
}

EnvElement EnvElement::operator_term(const DerivOp& theta)
{
    EnvElement u(theta.size());
    u.add_term(theta, DiffPoly::scalar(theta.size(), 1));
    return u;
}

EnvElement EnvElement::derivation(std::size_t m, std::size_t k)
{
    return operator_term(DerivOp::delta(m, k));
}

DiffPoly EnvElement::coefficient_of(const DerivOp& theta) const
{
    auto it = terms_.find(theta);
    return it == terms_.end() ? DiffPoly(m_, 0) : it->second;
}

int EnvElement::order() const
{
    int best = -1;
    for (const auto& [theta, r] : terms_)
        best = std::max(best, static_cast<int>(theta.order()));
    return best;
}

void EnvElement::add_term(const DerivOp& theta, const DiffPoly& r)
{
    if (theta.size() != m_ || r.derivations() != m_)
        throw std::invalid_argument("enveloping term does not match derivation count");
    if (r.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(theta, r);
    if (!inserted) {
        it->second += r;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void EnvElement::require_same_derivations(const EnvElement& other) const
{
    if (m_ != other.m_)
        throw std::invalid_argument("derivation-count mismatch: " + std::to_string(m_) + " vs " +
                                    std::to_string(other.m_));
}

EnvElement& EnvElement::operator+=(const EnvElement& other)
{
    require_same_derivations(other);
    for (const auto& [theta, r] : other.terms_)
        add_term(theta, r);
    return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& other)
{
    require_same_derivations(other);
    for (const auto& [theta, r] : other.terms_)
        add_term(theta, -r);
    return *this;
}

EnvElement& EnvElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [theta, r] : terms_)
        r *= c;
    return *this;
}

EnvElement left_multiply(const DiffPoly& r, const EnvElement& u)
{
    if (r.derivations() != u.derivations())
        throw std::invalid_argument("derivation-count mismatch in left multiplication");
    EnvElement out(u.derivations());
    for (const auto& [theta, c] : u.terms())
        out.add_term(theta, r * c);
    return out;
}

EnvElement left_multiply_derivation(std::size_t k, const EnvElement& u)
{
    EnvElement out(u.derivations());
    for (const auto& [theta, c] : u.terms()) {
        out.add_term(theta.raised(k), c);
        out.add_term(theta, derive(c, k));
    }
    return out;
}

EnvElement operator*(const EnvElement& u, const EnvElement& v)
{
    if (u.derivations() != v.derivations())
        throw std::invalid_argument("derivation-count mismatch: " + std::to_string(u.derivations()) + " vs " +
                                    std::to_string(v.derivations()));
    EnvElement out(u.derivations());
    for (const auto& [theta, r] : u.terms()) {
        // Push the derivations of theta through v one at a time, innermost first.
        EnvElement moved = v;
        for (std::size_t k = theta.size(); k >= 1; --k)
            for (std::uint32_t p = 0; p < theta.index[k - 1]; ++p)
                moved = left_multiply_derivation(k, moved);
        out += left_multiply(r, moved);
    }
    return out;
}

DiffPoly apply(const EnvElement& u, const DiffPoly& f)
{
    if (u.derivations() != f.derivations())
        throw std::invalid_argument("derivation-count mismatch: " + std::to_string(u.derivations()) + " vs " +
                                    std::to_string(f.derivations()));
    DiffPoly out(f.derivations(), f.gen_count());
    for (const auto& [theta, r] : u.terms())
        out += r * apply_operator(f, theta);
    return out;
}

namespace {

std::string operator_text(const DerivOp& theta)
{
    std::string out;
    for (std::size_t k = 0; k < theta.index.size(); ++k) {
        if (theta.index[k] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'D' + std::to_string(k + 1);
        if (theta.index[k] > 1)
            out += '^' + std::to_string(theta.index[k]);
    }
    return out;
}

} // namespace

std::string to_string(const EnvElement& u)
{
    if (u.is_zero())
        return "0";
    std::string out;
    for (const auto& [theta, r] : u.terms()) {
        if (!out.empty())
            out += " + ";
        if (theta.is_identity())
            out += to_string(r); // identity sorts last, so no parentheses needed
        else if (r == DiffPoly::scalar(u.derivations(), 1))
            out += operator_text(theta);
        else
            out += "(" + to_string(r) + ")*" + operator_text(theta);
    }
    return out;
}

} // namespace diffwitt
