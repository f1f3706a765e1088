#include "diffwitt/liealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffwitt {

VectorField::VectorField(std::vector<DiffPoly> components) : components_(std::move(components))
{
    if (components_.empty())
        throw std::invalid_argument("vector field needs at least one component");
    const std::size_t m = components_.size();
    std::size_t context = 0;
    for (const auto& f : components_) {
        if (f.derivations() != m)
            throw std::invalid_argument("vector field with " + std::to_string(m) +
                                        " components needs coefficients over " + std::to_string(m) +
                                        " derivations");
        context = std::max(context, f.gen_count());
    }
    for (auto& f : components_)
        f = f.with_gen_count(context);
}

VectorField VectorField::zero(std::size_t m, std::size_t gen_count)
{
    return VectorField(std::vector<DiffPoly>(m, DiffPoly(m, gen_count)));
}

VectorField VectorField::along(const DiffPoly& f, std::size_t k)
{
    const std::size_t m = f.derivations();
    if (k < 1 || k > m)
        throw std::out_of_range("derivation index out of range");
    std::vector<DiffPoly> c(m, DiffPoly(m, f.gen_count()));
    c[k - 1] = f;
    return VectorField(std::move(c));
}

bool VectorField::is_zero() const
{
    return std::all_of(components_.begin(), components_.end(), [](const DiffPoly& f) { return f.is_zero(); });
}

bool VectorField::is_y_free() const
{
    return std::all_of(components_.begin(), components_.end(), [](const DiffPoly& f) { return f.is_y_free(); });
}

VectorField VectorField::with_gen_count(std::size_t gen_count) const
{
    std::vector<DiffPoly> c;
    c.reserve(components_.size());
    for (const auto& f : components_)
        c.push_back(f.with_gen_count(gen_count));
    return VectorField(std::move(c));
}

void VectorField::require_same_derivations(const VectorField& other) const
{
    if (derivations() != other.derivations())
        throw std::invalid_argument("derivation-count mismatch: " + std::to_string(derivations()) + " vs " +
                                    std::to_string(other.derivations()));
}

VectorField& VectorField::operator+=(const VectorField& other)
{
    require_same_derivations(other);
    for (std::size_t k = 0; k < components_.size(); ++k)
        components_[k] += other.components_[k];
    *this = VectorField(std::move(components_));
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& other)
{
    require_same_derivations(other);
    for (std::size_t k = 0; k < components_.size(); ++k)
        components_[k] -= other.components_[k];
    *this = VectorField(std::move(components_));
    return *this;
}

VectorField& VectorField::operator*=(const Rational& c)
{
    for (auto& f : components_)
        f *= c;
    return *this;
}

VectorField lsym(const VectorField& u, const VectorField& v)
{
    if (u.derivations() != v.derivations())
        throw std::invalid_argument("derivation-count mismatch: " + std::to_string(u.derivations()) + " vs " +
                                    std::to_string(v.derivations()));
    const std::size_t m = u.derivations();
    const std::size_t context = std::max(u.gen_count(), v.gen_count());
    std::vector<DiffPoly> out(m, DiffPoly(m, context));
    for (std::size_t i = 1; i <= m; ++i) {
        const DiffPoly& ui = u.component(i);
        if (ui.is_zero())
            continue;
        for (std::size_t j = 1; j <= m; ++j)
            out[j - 1] += ui * derive(v.component(j), i);
    }
    return VectorField(std::move(out));
}

VectorField wbracket(const VectorField& u, const VectorField& v)
{
    return lsym(u, v) - lsym(v, u);
}

VectorField witt_basis(int k)
{
    if (k < -1)
        throw std::invalid_argument("witt_basis(k) needs k >= -1");
    Poly x = Poly::monomial(Exponent{static_cast<std::uint32_t>(k + 1)}, Rational(1));
    return VectorField::along(DiffPoly::constant(x), 1);
}

PoissonElement::PoissonElement(DiffPoly value) : value_(std::move(value))
{
    if (value_.derivations() % 2 != 0)
        throw std::invalid_argument("Poisson elements need an even number of derivations");
}

namespace {

void require_same_rank(const PoissonElement& a, const PoissonElement& b)
{
    if (a.derivations() != b.derivations())
        throw std::invalid_argument("derivation-count mismatch: " + std::to_string(a.derivations()) + " vs " +
                                    std::to_string(b.derivations()));
}

} // namespace

PoissonElement operator+(const PoissonElement& a, const PoissonElement& b)
{
    require_same_rank(a, b);
    return PoissonElement(a.value_ + b.value_);
}

PoissonElement operator-(const PoissonElement& a, const PoissonElement& b)
{
    require_same_rank(a, b);
    return PoissonElement(a.value_ - b.value_);
}

PoissonElement operator*(const PoissonElement& a, const PoissonElement& b)
{
    require_same_rank(a, b);
    return PoissonElement(a.value_ * b.value_);
}

PoissonElement pbracket(const PoissonElement& f, const PoissonElement& g)
{
    require_same_rank(f, g);
    const auto& a = f.value();
    const auto& b = g.value();
    DiffPoly out(a.derivations(), std::max(a.gen_count(), b.gen_count()));
    for (std::size_t i = 1; i <= f.half_rank(); ++i) {
        out += derive(a, 2 * i - 1) * derive(b, 2 * i);
        out -= derive(a, 2 * i) * derive(b, 2 * i - 1);
    }
    return PoissonElement(std::move(out));
}

std::string to_string(const VectorField& u)
{
    std::string out = "V(";
    for (std::size_t k = 1; k <= u.derivations(); ++k) {
        if (k > 1)
            out += "; ";
        out += to_string(u.component(k));
    }
    return out + ")";
}

std::string to_string(const PoissonElement& f)
{
    return to_string(f.value());
}

} // namespace diffwitt
