#include "diffwitt/diffpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace diffwitt {

DerivOp DerivOp::delta(std::size_t m, std::size_t k)
{
    return identity(m).raised(k);
}

std::uint32_t DerivOp::order() const
{
    return std::accumulate(index.begin(), index.end(), std::uint32_t{0});
}

DerivOp DerivOp::raised(std::size_t k) const
{
    if (k < 1 || k > index.size())
        throw std::out_of_range("derivation index " + std::to_string(k) + " out of range 1.." +
                                std::to_string(index.size()));
    DerivOp r = *this;
    ++r.index[k - 1];
    return r;
}

DerivOp operator+(const DerivOp& a, const DerivOp& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("derivative operators of different length");
    DerivOp r = a;
    for (std::size_t k = 0; k < r.index.size(); ++k)
        r.index[k] += b.index[k];
    return r;
}

DiffMonomial::DiffMonomial(std::vector<DiffIndeterminate> factors) : factors_(std::move(factors))
{
    std::sort(factors_.begin(), factors_.end());
}

DiffMonomial operator*(const DiffMonomial& a, const DiffMonomial& b)
{
    DiffMonomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
               std::back_inserter(r.factors_));
    return r;
}

bool DiffMonomialOrder::operator()(const DiffMonomial& a, const DiffMonomial& b) const
{
    if (a.degree() != b.degree())
        return a.degree() > b.degree();
    return a < b;
}

DiffPoly::DiffPoly(std::size_t derivations, std::size_t gen_count) : m_(derivations), n_(gen_count)
{
    if (derivations == 0)
        throw std::invalid_argument("differential ring needs at least one derivation");
}

DiffPoly DiffPoly::constant(const Poly& c, std::size_t gen_count)
{
    DiffPoly f(c.var_count(), gen_count);
    f.add_term(DiffMonomial(), c);
    return f;
}

DiffPoly DiffPoly::scalar(std::size_t derivations, const Rational& c, std::size_t gen_count)
{
    return constant(Poly::constant(derivations, c), gen_count);
}

DiffPoly DiffPoly::indeterminate(std::uint32_t gen, const DerivOp& theta, std::size_t gen_count)
{
    if (gen == 0)
        throw std::out_of_range("generator indices are 1-based");
    DiffPoly f(theta.size(), std::max<std::size_t>(gen_count, gen));
    f.add_term(DiffMonomial({DiffIndeterminate{gen, theta}}), Poly::constant(theta.size(), 1));
    return f;
}

bool DiffPoly::is_y_free() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Poly DiffPoly::constant_part() const
{
    return coefficient(DiffMonomial());
}

Poly DiffPoly::coefficient(const DiffMonomial& u) const
{
    auto it = terms_.find(u);
    return it == terms_.end() ? Poly(m_) : it->second;
}

std::uint32_t DiffPoly::max_gen_used() const
{
    std::uint32_t g = 0;
    for (const auto& [u, c] : terms_)
        for (const auto& f : u.factors())
            g = std::max(g, f.gen);
    return g;
}

DiffPoly DiffPoly::with_gen_count(std::size_t gen_count) const
{
    if (gen_count < max_gen_used())
        throw std::invalid_argument("generator context smaller than generators in use");
    DiffPoly r = *this;
    r.n_ = gen_count;
    return r;
}

void DiffPoly::add_term(const DiffMonomial& u, const Poly& c)
{
    if (c.var_count() != m_)
        throw std::invalid_argument("coefficient ring does not match derivation count");
    for (const auto& f : u.factors()) {
        if (f.theta.size() != m_)
            throw std::invalid_argument("derivative operator length does not match derivation count");
        n_ = std::max<std::size_t>(n_, f.gen);
    }
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void DiffPoly::require_same_derivations(const DiffPoly& other) const
{
    if (m_ != other.m_)
        throw std::invalid_argument("derivation-count mismatch: " + std::to_string(m_) + " vs " +
                                    std::to_string(other.m_));
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& other)
{
    require_same_derivations(other);
    n_ = std::max(n_, other.n_);
    for (const auto& [u, c] : other.terms_)
        add_term(u, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& other)
{
    require_same_derivations(other);
    n_ = std::max(n_, other.n_);
    for (const auto& [u, c] : other.terms_)
        add_term(u, -c);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [u, coeff] : terms_)
        coeff *= c;
    return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b)
{
    a.require_same_derivations(b);
    DiffPoly r(a.m_, std::max(a.n_, b.n_));
    for (const auto& [ua, ca] : a.terms_)
        for (const auto& [ub, cb] : b.terms_)
            r.add_term(ua * ub, ca * cb);
    return r;
}

DiffPoly derive(const DiffPoly& f, std::size_t k)
{
    if (k < 1 || k > f.derivations())
        throw std::out_of_range("derivation index " + std::to_string(k) + " out of range 1.." +
                                std::to_string(f.derivations()));
    DiffPoly r(f.derivations(), f.gen_count());
    for (const auto& [u, c] : f.terms()) {
        r.add_term(u, partial(c, k));
        const auto& factors = u.factors();
        for (std::size_t i = 0; i < factors.size(); ++i) {
            std::vector<DiffIndeterminate> shifted = factors;
            shifted[i].theta = shifted[i].theta.raised(k);
            r.add_term(DiffMonomial(std::move(shifted)), c);
        }
    }
    return r;
}

DiffPoly apply_operator(const DiffPoly& f, const DerivOp& theta)
{
    if (theta.size() != f.derivations())
        throw std::invalid_argument("derivative operator length does not match derivation count");
    DiffPoly r = f;
    for (std::size_t k = 1; k <= theta.size(); ++k)
        for (std::uint32_t p = 0; p < theta.index[k - 1]; ++p)
            r = derive(r, k);
    return r;
}

DiffPoly substitute(const DiffPoly& f, std::span<const DiffPoly> targets)
{
    if (targets.size() != f.gen_count())
        throw std::invalid_argument("substitution arity mismatch: " + std::to_string(targets.size()) +
                                    " targets for " + std::to_string(f.gen_count()) + " generators");
    std::size_t context = 0;
    for (const auto& t : targets) {
        if (t.derivations() != f.derivations())
            throw std::invalid_argument("substitution target has a different derivation count");
        context = std::max(context, t.gen_count());
    }

    std::map<DiffIndeterminate, DiffPoly> images;
    auto image = [&](const DiffIndeterminate& y) -> const DiffPoly& {
        auto it = images.find(y);
        if (it == images.end())
            it = images.emplace(y, apply_operator(targets[y.gen - 1], y.theta)).first;
        return it->second;
    };

    DiffPoly r(f.derivations(), context);
    for (const auto& [u, c] : f.terms()) {
        DiffPoly term = DiffPoly::constant(c, context);
        for (const auto& y : u.factors()) {
            term = term * image(y);
            if (term.is_zero())
                break;
        }
        r += term;
    }
    return r;
}

Poly x_theta(const DerivOp& theta)
{
    if (theta.size() == 0)
        throw std::invalid_argument("derivative operator of length zero");
    Rational denom = 1;
    for (auto i : theta.index)
        denom *= factorial(i);
    return Poly::monomial(Exponent(theta.index.begin(), theta.index.end()), Rational(1) / denom);
}

namespace {

bool polylinear(const DiffMonomial& u)
{
    const auto& f = u.factors();
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i].gen == f[i - 1].gen)
            return false;
    return true;
}

} // namespace

std::strong_ordering beta_compare(const DiffMonomial& u, const DiffMonomial& v)
{
    if (!polylinear(u) || !polylinear(v))
        throw std::invalid_argument("beta order is defined on polylinear monomials only");
    const auto& a = u.factors();
    const auto& b = v.factors();
    if (a.size() != b.size() ||
        !std::equal(a.begin(), a.end(), b.begin(), [](const auto& p, const auto& q) { return p.gen == q.gen; }))
        throw std::invalid_argument("beta order compares monomials in the same generators");
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto c = a[i].theta <=> b[i].theta;
        if (c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

std::vector<std::uint32_t> generators_used(const DiffPoly& f)
{
    std::vector<std::uint32_t> gens;
    for (const auto& [u, c] : f.terms())
        for (const auto& y : u.factors())
            gens.push_back(y.gen);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

bool is_multilinear(const DiffPoly& f)
{
    auto gens = generators_used(f);
    for (const auto& [u, c] : f.terms()) {
        if (!c.is_constant())
            return false;
        const auto& factors = u.factors();
        if (factors.size() != gens.size())
            return false;
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (factors[i].gen != gens[i])
                return false;
    }
    return true;
}

Separation separate(const DiffPoly& g)
{
    if (g.is_zero())
        throw std::invalid_argument("zero input: separation needs a nonzero polynomial");
    if (!is_multilinear(g))
        throw std::invalid_argument("separation needs a multilinear polynomial with scalar coefficients");

    auto least = g.terms().begin();
    for (auto it = std::next(least); it != g.terms().end(); ++it)
        if (beta_compare(it->first, least->first) < 0)
            least = it;

    const std::size_t m = g.derivations();
    Separation s{least->first, least->second.constant_term(), std::vector<Poly>(g.gen_count(), Poly(m)), Poly(m)};
    for (const auto& y : s.leading.factors())
        s.targets[y.gen - 1] = x_theta(y.theta);

    std::vector<DiffPoly> lifted;
    lifted.reserve(s.targets.size());
    for (const auto& t : s.targets)
        lifted.push_back(DiffPoly::constant(t));
    DiffPoly image = substitute(g, lifted);
    s.witness = image.constant_part();
    return s;
}

std::string to_string(const DerivOp& theta)
{
    std::string out = "(";
    for (std::size_t k = 0; k < theta.index.size(); ++k) {
        if (k > 0)
            out += ',';
        out += std::to_string(theta.index[k]);
    }
    return out + ")";
}

std::string to_string(const DiffMonomial& u)
{
    std::string out;
    const auto& f = u.factors();
    for (std::size_t i = 0; i < f.size();) {
        std::size_t j = i;
        while (j < f.size() && f[j] == f[i])
            ++j;
        if (!out.empty())
            out += '*';
        out += 'y' + std::to_string(f[i].gen);
        if (!f[i].theta.is_identity())
            out += '^' + to_string(f[i].theta);
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string to_string(const DiffPoly& f)
{
    if (f.is_zero())
        return "0";
    struct Piece {
        bool negative;
        std::string body;
    };
    std::vector<Piece> pieces;
    for (const auto& [u, c] : f.terms()) {
        std::string y = to_string(u);
        if (u.is_one()) {
            for (const auto& [e, q] : c.terms()) {
                std::string x = monomial_text(e);
                Rational mag = abs(q);
                if (x.empty())
                    pieces.push_back({q < 0, to_string(mag)});
                else
                    pieces.push_back({q < 0, mag == 1 ? x : to_string(mag) + "*" + x});
            }
        } else if (c.term_count() == 1) {
            const auto& [e, q] = *c.terms().begin();
            std::string x = monomial_text(e);
            Rational mag = abs(q);
            std::string body = mag == 1 ? "" : to_string(mag) + "*";
            if (!x.empty())
                body += x + "*";
            pieces.push_back({q < 0, body + y});
        } else {
            pieces.push_back({false, "(" + to_string(c) + ")*" + y});
        }
    }
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0)
            out += pieces[i].negative ? "-" : "";
        else
            out += pieces[i].negative ? " - " : " + ";
        out += pieces[i].body;
    }
    return out;
}

} // namespace diffwitt
