#include "diffwitt/findim.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffwitt {

StructureConstants::StructureConstants(std::vector<std::vector<std::vector<Rational>>> gamma)
    : dim_(gamma.size())
{
    if (dim_ == 0)
        throw std::invalid_argument("structure constants need dim >= 1");
    gamma_.reserve(dim_ * dim_ * dim_);
    for (const auto& row : gamma) {
        if (row.size() != dim_)
            throw std::invalid_argument("structure constant table is not dim x dim x dim");
        for (const auto& entry : row) {
            if (entry.size() != dim_)
                throw std::invalid_argument("structure constant table is not dim x dim x dim");
            gamma_.insert(gamma_.end(), entry.begin(), entry.end());
        }
    }
}

namespace {

using Table = std::vector<std::vector<std::vector<Rational>>>;

Table empty_table(std::size_t dim)
{
    return Table(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, Rational(0))));
}

// Matrix units e_{ab} indexed through `slot`; e_{ab} e_{cd} = [b == c] e_{ad}.
template <class Slot>
StructureConstants matrix_units(std::size_t k, std::size_t dim, Slot slot)
{
    Table t = empty_table(dim);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t d = 0; d < k; ++d) {
                auto i = slot(a, b), j = slot(b, d), r = slot(a, d);
                if (i < dim && j < dim && r < dim)
                    t[i][j][r] = 1;
            }
    return StructureConstants(std::move(t));
}

} // namespace

StructureConstants StructureConstants::matrix_algebra(std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("matrix algebra needs k >= 1");
    return matrix_units(k, k * k, [k](std::size_t a, std::size_t b) { return a * k + b; });
}

StructureConstants StructureConstants::upper_triangular(std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("triangular algebra needs k >= 1");
    const std::size_t dim = k * (k + 1) / 2;
    // Row a holds k - a entries starting at column a.
    return matrix_units(k, dim, [k, dim](std::size_t a, std::size_t b) {
        if (b < a)
            return dim;
        return a * k - a * (a - 1) / 2 + (b - a);
    });
}

const Rational& StructureConstants::gamma(std::size_t i, std::size_t j, std::size_t k) const
{
    if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
        throw std::out_of_range("structure constant index out of range");
    return gamma_[((i - 1) * dim_ + (j - 1)) * dim_ + (k - 1)];
}

std::vector<std::vector<std::vector<Rational>>> StructureConstants::table() const
{
    Table t = empty_table(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                t[i][j][k] = gamma_[(i * dim_ + j) * dim_ + k];
    return t;
}

bool StructureConstants::is_associative() const
{
    // (e_i e_j) e_l versus e_i (e_j e_l), coordinate r.
    for (std::size_t i = 1; i <= dim_; ++i)
        for (std::size_t j = 1; j <= dim_; ++j)
            for (std::size_t l = 1; l <= dim_; ++l)
                for (std::size_t r = 1; r <= dim_; ++r) {
                    Rational lhs = 0, rhs = 0;
                    for (std::size_t s = 1; s <= dim_; ++s) {
                        lhs += gamma(i, j, s) * gamma(s, l, r);
                        rhs += gamma(j, l, s) * gamma(i, s, r);
                    }
                    if (lhs != rhs)
                        return false;
                }
    return true;
}

bool GenericElement::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](const Poly& p) { return p.is_zero(); });
}

GenericElement operator+(const GenericElement& a, const GenericElement& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch");
    GenericElement r = a;
    for (std::size_t k = 0; k < r.coords.size(); ++k)
        r.coords[k] += b.coords[k];
    return r;
}

GenericElement operator*(const Rational& c, const GenericElement& a)
{
    GenericElement r = a;
    for (auto& p : r.coords)
        p *= c;
    return r;
}

GenericElement multiply(const GenericElement& a, const GenericElement& b, const StructureConstants& alg)
{
    const std::size_t dim = alg.dim();
    if (a.dim() != dim || b.dim() != dim)
        throw std::invalid_argument("dimension mismatch: elements of dim " + std::to_string(a.dim()) + " and " +
                                    std::to_string(b.dim()) + " in an algebra of dim " + std::to_string(dim));
    const std::size_t vars = a.coords.front().var_count();
    GenericElement r{std::vector<Poly>(dim, Poly(vars))};
    for (std::size_t i = 1; i <= dim; ++i) {
        if (a.coords[i - 1].is_zero())
            continue;
        for (std::size_t j = 1; j <= dim; ++j) {
            if (b.coords[j - 1].is_zero())
                continue;
            Poly ab = a.coords[i - 1] * b.coords[j - 1];
            for (std::size_t k = 1; k <= dim; ++k) {
                const Rational& g = alg.gamma(i, j, k);
                if (g != 0)
                    r.coords[k - 1] += g * ab;
            }
        }
    }
    return r;
}

GenericElement generic(std::size_t i, const StructureConstants& alg, std::size_t unknowns)
{
    if (i < 1 || i > unknowns)
        throw std::out_of_range("unknown index " + std::to_string(i) + " out of range 1.." + std::to_string(unknowns));
    const std::size_t dim = alg.dim();
    GenericElement x;
    for (std::size_t j = 1; j <= dim; ++j)
        x.coords.push_back(Poly::variable(unknowns * dim, (i - 1) * dim + j));
    return x;
}

GenericElement constant_element(std::span<const Rational> coords, std::size_t var_count)
{
    GenericElement x;
    for (const auto& c : coords)
        x.coords.push_back(Poly::constant(var_count, c));
    return x;
}

struct AlgTerm::Node {
    Op op = Op::Zero;
    std::size_t index = 0;
    Rational factor = 1;
    AlgTerm left, right;
};

AlgTerm::AlgTerm() = default;

AlgTerm AlgTerm::zero() { return AlgTerm(); }

AlgTerm AlgTerm::unknown(std::size_t i)
{
    if (i == 0)
        throw std::out_of_range("unknown indices are 1-based");
    auto n = std::make_shared<Node>();
    n->op = Op::Unknown;
    n->index = i;
    return AlgTerm(std::move(n));
}

AlgTerm AlgTerm::basis(std::size_t k)
{
    if (k == 0)
        throw std::out_of_range("basis indices are 1-based");
    auto n = std::make_shared<Node>();
    n->op = Op::Basis;
    n->index = k;
    return AlgTerm(std::move(n));
}

AlgTerm AlgTerm::sum(AlgTerm a, AlgTerm b)
{
    auto n = std::make_shared<Node>();
    n->op = Op::Sum;
    n->left = std::move(a);
    n->right = std::move(b);
    return AlgTerm(std::move(n));
}

AlgTerm AlgTerm::scaled(const Rational& c, AlgTerm a)
{
    if (c == 0 || a.op() == Op::Zero)
        return zero();
    if (c == 1)
        return a;
    if (a.op() == Op::Scale)
        return scaled(c * a.factor(), a.left());
    auto n = std::make_shared<Node>();
    n->op = Op::Scale;
    n->factor = c;
    n->left = std::move(a);
    return AlgTerm(std::move(n));
}

bool operator==(const AlgTerm& a, const AlgTerm& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.op() != b.op())
        return false;
    switch (a.op()) {
    case AlgTerm::Op::Zero: return true;
    case AlgTerm::Op::Unknown:
    case AlgTerm::Op::Basis: return a.index() == b.index();
    case AlgTerm::Op::Scale: return a.factor() == b.factor() && a.left() == b.left();
    default: return a.left() == b.left() && a.right() == b.right();
    }
}

AlgTerm AlgTerm::product(AlgTerm a, AlgTerm b)
{
    auto n = std::make_shared<Node>();
    n->op = Op::Product;
    n->left = std::move(a);
    n->right = std::move(b);
    return AlgTerm(std::move(n));
}

AlgTerm::Op AlgTerm::op() const { return node_ ? node_->op : Op::Zero; }

std::size_t AlgTerm::index() const
{
    if (op() != Op::Unknown && op() != Op::Basis)
        throw std::logic_error("node has no index");
    return node_->index;
}

const Rational& AlgTerm::factor() const
{
    if (op() != Op::Scale)
        throw std::logic_error("not a scaling");
    return node_->factor;
}

const AlgTerm& AlgTerm::left() const
{
    if (op() != Op::Scale && op() != Op::Sum && op() != Op::Product)
        throw std::logic_error("node has no children");
    return node_->left;
}

const AlgTerm& AlgTerm::right() const
{
    if (op() != Op::Sum && op() != Op::Product)
        throw std::logic_error("node has no right child");
    return node_->right;
}

std::size_t AlgTerm::max_unknown() const
{
    switch (op()) {
    case Op::Unknown: return index();
    case Op::Zero:
    case Op::Basis: return 0;
    case Op::Scale: return left().max_unknown();
    default: return std::max(left().max_unknown(), right().max_unknown());
    }
}

namespace {

enum Level { kSum, kProduct, kAtom };

Level level_of(const AlgTerm& t)
{
    switch (t.op()) {
    case AlgTerm::Op::Sum: return kSum;
    case AlgTerm::Op::Product: return kProduct;
    case AlgTerm::Op::Scale: return t.factor() == -1 ? kAtom : kProduct;
    default: return kAtom;
    }
}

std::string print_at(const AlgTerm& t, Level needed)
{
    std::string s = to_string(t);
    return level_of(t) >= needed ? s : "(" + s + ")";
}

} // namespace

std::string to_string(const AlgTerm& t)
{
    using Op = AlgTerm::Op;
    switch (t.op()) {
    case Op::Zero: return "0";
    case Op::Unknown: return "X" + std::to_string(t.index());
    case Op::Basis: return "e" + std::to_string(t.index());
    case Op::Sum: {
        const AlgTerm& b = t.right();
        if (b.op() == Op::Scale && b.factor() < 0)
            return print_at(t.left(), kSum) + " - " + print_at(AlgTerm::scaled(-b.factor(), b.left()), kProduct);
        return print_at(t.left(), kSum) + " + " + print_at(b, kProduct);
    }
    case Op::Scale:
        if (t.factor() == -1)
            return "-" + print_at(t.left(), kAtom);
        return to_string(t.factor()) + "*" + print_at(t.left(), kAtom);
    case Op::Product: return print_at(t.left(), kProduct) + "*" + print_at(t.right(), kAtom);
    }
    return {};
}

namespace {

GenericElement eval(const AlgTerm& t, const StructureConstants& alg, std::span<const GenericElement> values,
                    std::size_t vars)
{
    using Op = AlgTerm::Op;
    const std::size_t dim = alg.dim();
    switch (t.op()) {
    case Op::Zero: return GenericElement{std::vector<Poly>(dim, Poly(vars))};
    case Op::Unknown:
        if (t.index() > values.size())
            throw std::out_of_range("unknown X" + std::to_string(t.index()) + " has no value");
        return values[t.index() - 1];
    case Op::Basis: {
        if (t.index() > dim)
            throw std::out_of_range("basis element e" + std::to_string(t.index()) + " out of range 1.." +
                                    std::to_string(dim));
        GenericElement e{std::vector<Poly>(dim, Poly(vars))};
        e.coords[t.index() - 1] = Poly::constant(vars, 1);
        return e;
    }
    case Op::Sum: return eval(t.left(), alg, values, vars) + eval(t.right(), alg, values, vars);
    case Op::Scale: return t.factor() * eval(t.left(), alg, values, vars);
    case Op::Product:
        return multiply(eval(t.left(), alg, values, vars), eval(t.right(), alg, values, vars), alg);
    }
    throw std::logic_error("malformed term");
}

} // namespace

GenericElement evaluate(const AlgTerm& t, const StructureConstants& alg, std::span<const GenericElement> values)
{
    std::size_t vars = 1;
    for (const auto& v : values) {
        if (v.dim() != alg.dim())
            throw std::invalid_argument("value has dim " + std::to_string(v.dim()) + ", algebra has dim " +
                                        std::to_string(alg.dim()));
        if (&v != values.data() && v.coords.front().var_count() != vars)
            throw std::invalid_argument("values live in different coordinate rings");
        vars = v.coords.front().var_count();
    }
    return eval(t, alg, values, vars);
}

std::vector<Poly> flatten(const AlgTerm& t, const StructureConstants& alg, std::size_t unknowns)
{
    if (t.max_unknown() > unknowns)
        throw std::out_of_range("term uses X" + std::to_string(t.max_unknown()) + " but only " +
                                std::to_string(unknowns) + " unknowns are declared");
    unknowns = std::max<std::size_t>(unknowns, 1);
    std::vector<GenericElement> xs;
    for (std::size_t i = 1; i <= unknowns; ++i)
        xs.push_back(generic(i, alg, unknowns));
    return evaluate(t, alg, xs).coords;
}

} // namespace diffwitt
