#include "diffwitt/freealg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace diffwitt {

Variety Variety::parse(std::string_view name)
{
    if (name.size() < 2)
        throw std::invalid_argument("variety must look like L<m>, W<m> or P<m>, got '" + std::string(name) + "'");
    Variety v;
    switch (name.front()) {
    case 'L': v.kind = VarietyKind::LSymWitt; break;
    case 'W': v.kind = VarietyKind::Witt; break;
    case 'P': v.kind = VarietyKind::Poisson; break;
    default: throw std::invalid_argument("unknown variety '" + std::string(name) + "'");
    }
    std::size_t m = 0;
    for (char c : name.substr(1)) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("variety index must be a positive integer in '" + std::string(name) + "'");
        m = m * 10 + static_cast<std::size_t>(c - '0');
        if (m > 64)
            throw std::invalid_argument("variety index too large in '" + std::string(name) + "'");
    }
    if (m == 0)
        throw std::invalid_argument("variety index must be at least 1");
    v.m = m;
    return v;
}

std::string Variety::name() const
{
    char c = kind == VarietyKind::LSymWitt ? 'L' : kind == VarietyKind::Witt ? 'W' : 'P';
    return c + std::to_string(m);
}

std::string to_string(const Element& e)
{
    return std::visit([](const auto& x) { return to_string(x); }, e);
}

bool is_zero(const Element& e)
{
    return std::visit([](const auto& x) { return x.is_zero(); }, e);
}

struct FreeTerm::Node {
    Op op = Op::Zero;
    std::size_t index = 0;
    std::optional<Element> value;
    Rational factor = 1;
    FreeTerm left, right;
};

FreeTerm::FreeTerm() : node_(nullptr) {}

FreeTerm FreeTerm::zero()
{
    return FreeTerm();
}

FreeTerm FreeTerm::generator(std::size_t i)
{
    if (i == 0)
        throw std::out_of_range("generator indices are 1-based");
    auto n = std::make_shared<Node>();
    n->op = Op::Generator;
    n->index = i;
    return FreeTerm(std::move(n));
}

FreeTerm FreeTerm::constant(Element value)
{
    auto n = std::make_shared<Node>();
    n->op = Op::Constant;
    n->value = std::move(value);
    return FreeTerm(std::move(n));
}

FreeTerm FreeTerm::sum(FreeTerm a, FreeTerm b)
{
    auto n = std::make_shared<Node>();
    n->op = Op::Sum;
    n->left = std::move(a);
    n->right = std::move(b);
    return FreeTerm(std::move(n));
}

FreeTerm FreeTerm::scaled(const Rational& c, FreeTerm a)
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
    return FreeTerm(std::move(n));
}

FreeTerm FreeTerm::binary(Op op, FreeTerm a, FreeTerm b)
{
    if (op != Op::LSymProd && op != Op::LieBracket && op != Op::PoissonMul && op != Op::PoissonBracket)
        throw std::invalid_argument("not a binary algebra operation");
    auto n = std::make_shared<Node>();
    n->op = op;
    n->left = std::move(a);
    n->right = std::move(b);
    return FreeTerm(std::move(n));
}

FreeTerm FreeTerm::lsym(FreeTerm a, FreeTerm b) { return binary(Op::LSymProd, std::move(a), std::move(b)); }
FreeTerm FreeTerm::lie(FreeTerm a, FreeTerm b) { return binary(Op::LieBracket, std::move(a), std::move(b)); }
FreeTerm FreeTerm::poisson_mul(FreeTerm a, FreeTerm b) { return binary(Op::PoissonMul, std::move(a), std::move(b)); }
FreeTerm FreeTerm::poisson_bracket(FreeTerm a, FreeTerm b)
{
    return binary(Op::PoissonBracket, std::move(a), std::move(b));
}

FreeTerm::Op FreeTerm::op() const
{
    return node_ ? node_->op : Op::Zero;
}

std::size_t FreeTerm::generator_index() const
{
    if (op() != Op::Generator)
        throw std::logic_error("not a generator");
    return node_->index;
}

const Element& FreeTerm::constant_value() const
{
    if (op() != Op::Constant)
        throw std::logic_error("not a constant");
    return *node_->value;
}

const Rational& FreeTerm::factor() const
{
    if (op() != Op::Scale)
        throw std::logic_error("not a scaling");
    return node_->factor;
}

const FreeTerm& FreeTerm::left() const
{
    if (!node_ || (op() != Op::Scale && op() != Op::Sum && !is_binary_operation()))
        throw std::logic_error("node has no children");
    return node_->left;
}

const FreeTerm& FreeTerm::right() const
{
    if (!node_ || (op() != Op::Sum && !is_binary_operation()))
        throw std::logic_error("node has no right child");
    return node_->right;
}

bool FreeTerm::is_binary_operation() const
{
    auto o = op();
    return o == Op::LSymProd || o == Op::LieBracket || o == Op::PoissonMul || o == Op::PoissonBracket;
}

bool FreeTerm::has_constants() const
{
    switch (op()) {
    case Op::Constant: return true;
    case Op::Zero:
    case Op::Generator: return false;
    case Op::Scale: return left().has_constants();
    default: return left().has_constants() || right().has_constants();
    }
}

std::size_t FreeTerm::max_generator() const
{
    switch (op()) {
    case Op::Generator: return generator_index();
    case Op::Zero:
    case Op::Constant: return 0;
    case Op::Scale: return left().max_generator();
    default: return std::max(left().max_generator(), right().max_generator());
    }
}

bool operator==(const FreeTerm& a, const FreeTerm& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.op() != b.op())
        return false;
    switch (a.op()) {
    case FreeTerm::Op::Zero: return true;
    case FreeTerm::Op::Generator: return a.generator_index() == b.generator_index();
    case FreeTerm::Op::Constant: return a.constant_value() == b.constant_value();
    case FreeTerm::Op::Scale: return a.factor() == b.factor() && a.left() == b.left();
    default: return a.left() == b.left() && a.right() == b.right();
    }
}

namespace {

// Printing levels, loosest to tightest, matching the parser grammar:
// sum, 'o'-product, '*'-product, unary/atom.
enum Level { kSum = 0, kCircle = 1, kProduct = 2, kAtom = 3 };

Level level_of(const FreeTerm& t)
{
    switch (t.op()) {
    case FreeTerm::Op::Sum: return kSum;
    case FreeTerm::Op::LSymProd: return kCircle;
    case FreeTerm::Op::PoissonMul: return kProduct;
    case FreeTerm::Op::Scale: return t.factor() == -1 ? kAtom : kProduct;
    default: return kAtom;
    }
}

std::string print(const FreeTerm& t);

std::string print_at(const FreeTerm& t, Level needed)
{
    std::string s = print(t);
    return level_of(t) >= needed ? s : "(" + s + ")";
}

std::string print(const FreeTerm& t)
{
    using Op = FreeTerm::Op;
    switch (t.op()) {
    case Op::Zero: return "0";
    case Op::Generator: return "z" + std::to_string(t.generator_index());
    case Op::Constant: {
        const auto& e = t.constant_value();
        if (const auto* p = std::get_if<PoissonElement>(&e))
            return "P(" + to_string(*p) + ")";
        return to_string(e);
    }
    case Op::Sum: {
        std::string out = print_at(t.left(), kSum);
        const FreeTerm& b = t.right();
        if (b.op() == Op::Scale && b.factor() < 0)
            return out + " - " + print_at(FreeTerm::scaled(-b.factor(), b.left()), kCircle);
        return out + " + " + print_at(b, kCircle);
    }
    case Op::Scale:
        if (t.factor() == -1)
            return "-" + print_at(t.left(), kAtom);
        return to_string(t.factor()) + "*" + print_at(t.left(), kAtom);
    case Op::LSymProd: return print_at(t.left(), kProduct) + " o " + print_at(t.right(), kProduct);
    case Op::LieBracket: return "[" + print(t.left()) + ", " + print(t.right()) + "]";
    case Op::PoissonMul: return print_at(t.left(), kProduct) + "*" + print_at(t.right(), kAtom);
    case Op::PoissonBracket: return "{" + print(t.left()) + ", " + print(t.right()) + "}";
    }
    return {};
}

const char* op_name(FreeTerm::Op op)
{
    switch (op) {
    case FreeTerm::Op::LSymProd: return "left-symmetric product 'o'";
    case FreeTerm::Op::LieBracket: return "Lie bracket '[,]'";
    case FreeTerm::Op::PoissonMul: return "Poisson product '*'";
    case FreeTerm::Op::PoissonBracket: return "Poisson bracket '{,}'";
    default: return "operation";
    }
}

bool allowed(FreeTerm::Op op, VarietyKind kind)
{
    switch (kind) {
    case VarietyKind::LSymWitt: return op == FreeTerm::Op::LSymProd || op == FreeTerm::Op::LieBracket;
    case VarietyKind::Witt: return op == FreeTerm::Op::LieBracket;
    case VarietyKind::Poisson: return op == FreeTerm::Op::PoissonMul || op == FreeTerm::Op::PoissonBracket;
    }
    return false;
}

} // namespace

std::string to_string(const FreeTerm& t)
{
    return print(t);
}

void validate(const FreeTerm& t, const Variety& v, std::size_t n)
{
    using Op = FreeTerm::Op;
    switch (t.op()) {
    case Op::Zero: return;
    case Op::Generator:
        if (t.generator_index() > n)
            throw std::invalid_argument("generator z" + std::to_string(t.generator_index()) +
                                        " out of range 1.." + std::to_string(n));
        return;
    case Op::Constant: {
        const auto& e = t.constant_value();
        bool poisson = std::holds_alternative<PoissonElement>(e);
        if (poisson != (v.kind == VarietyKind::Poisson))
            throw std::invalid_argument("constant " + to_string(e) + " does not belong to " + v.name());
        std::size_t d = std::visit([](const auto& x) { return x.derivations(); }, e);
        if (d != v.derivations())
            throw std::invalid_argument("constant " + to_string(e) + " has " + std::to_string(d) +
                                        " derivations, " + v.name() + " needs " +
                                        std::to_string(v.derivations()));
        return;
    }
    case Op::Scale: validate(t.left(), v, n); return;
    case Op::Sum: break;
    default:
        if (!allowed(t.op(), v.kind))
            throw std::invalid_argument(std::string(op_name(t.op())) + " is not an operation of " + v.name());
        break;
    }
    validate(t.left(), v, n);
    validate(t.right(), v, n);
}

namespace {

struct Representer {
    Variety v;
    std::size_t n;

    std::size_t context() const { return n * v.slots_per_generator(); }

    Element zero() const
    {
        if (v.kind == VarietyKind::Poisson)
            return PoissonElement(DiffPoly(v.derivations(), context()));
        return VectorField::zero(v.m, context());
    }

    Element generator(std::size_t i) const
    {
        const std::size_t d = v.derivations();
        if (v.kind == VarietyKind::Poisson)
            return PoissonElement(DiffPoly::indeterminate(static_cast<std::uint32_t>(i), DerivOp::identity(d),
                                                          context()));
        std::vector<DiffPoly> c;
        for (std::size_t j = 1; j <= v.m; ++j)
            c.push_back(DiffPoly::indeterminate(static_cast<std::uint32_t>((i - 1) * v.m + j),
                                                DerivOp::identity(d), context()));
        return VectorField(std::move(c));
    }

    Element run(const FreeTerm& t) const
    {
        using Op = FreeTerm::Op;
        switch (t.op()) {
        case Op::Zero: return zero();
        case Op::Generator: return generator(t.generator_index());
        case Op::Constant: return t.constant_value();
        case Op::Scale:
            return std::visit([&](const auto& x) -> Element { return t.factor() * x; }, run(t.left()));
        default: break;
        }
        Element a = run(t.left());
        Element b = run(t.right());
        if (v.kind == VarietyKind::Poisson) {
            const auto& f = std::get<PoissonElement>(a);
            const auto& g = std::get<PoissonElement>(b);
            switch (t.op()) {
            case Op::Sum: return f + g;
            case Op::PoissonMul: return f * g;
            default: return pbracket(f, g);
            }
        }
        const auto& u = std::get<VectorField>(a);
        const auto& w = std::get<VectorField>(b);
        switch (t.op()) {
        case Op::Sum: return u + w;
        case Op::LSymProd: return lsym(u, w);
        default: return wbracket(u, w);
        }
    }
};

} // namespace

Element represent(const FreeTerm& t, const Variety& v, std::size_t n)
{
    validate(t, v, n);
    return Representer{v, n}.run(t);
}

bool is_identity(const FreeTerm& t, const Variety& v)
{
    if (t.has_constants())
        throw std::invalid_argument("identity checks apply to terms without constants");
    return is_zero(represent(t, v, std::max<std::size_t>(1, t.max_generator())));
}

bool free_equal(const FreeTerm& a, const FreeTerm& b, const Variety& v)
{
    return is_identity(a - b, v);
}

namespace {

using Combination = std::map<std::string, std::pair<FreeTerm, Rational>>;

void accumulate(Combination& c, const FreeTerm& tree, const Rational& coeff)
{
    auto [it, inserted] = c.try_emplace(to_string(tree), tree, coeff);
    if (!inserted) {
        it->second.second += coeff;
        if (it->second.second == 0)
            c.erase(it);
    }
}

// Distributes t into a combination of operation trees whose leaves are
// generators and constants.
Combination expand(const FreeTerm& t)
{
    using Op = FreeTerm::Op;
    Combination out;
    switch (t.op()) {
    case Op::Zero: break;
    case Op::Generator:
    case Op::Constant: accumulate(out, t, 1); break;
    case Op::Sum:
        for (const auto& part : {t.left(), t.right()})
            for (const auto& [key, tc] : expand(part))
                accumulate(out, tc.first, tc.second);
        break;
    case Op::Scale:
        for (const auto& [key, tc] : expand(t.left()))
            accumulate(out, tc.first, t.factor() * tc.second);
        break;
    default: {
        Combination a = expand(t.left()), b = expand(t.right());
        for (const auto& [ka, ta] : a)
            for (const auto& [kb, tb] : b)
                accumulate(out, FreeTerm::binary(t.op(), ta.first, tb.first), ta.second * tb.second);
    }
    }
    return out;
}

void count_generators(const FreeTerm& t, std::vector<std::size_t>& degree)
{
    if (t.op() == FreeTerm::Op::Generator) {
        auto i = t.generator_index();
        if (degree.size() < i)
            degree.resize(i, 0);
        ++degree[i - 1];
    } else if (t.is_binary_operation()) {
        count_generators(t.left(), degree);
        count_generators(t.right(), degree);
    }
}

// Replaces occurrences of z_i left to right by labels[i-1][next[i-1]++].
FreeTerm relabel(const FreeTerm& t, const std::vector<std::vector<std::size_t>>& labels,
                 std::vector<std::size_t>& next)
{
    if (t.op() == FreeTerm::Op::Generator) {
        auto i = t.generator_index() - 1;
        return FreeTerm::generator(labels[i][next[i]++]);
    }
    if (t.is_binary_operation()) {
        FreeTerm a = relabel(t.left(), labels, next);
        FreeTerm b = relabel(t.right(), labels, next);
        return FreeTerm::binary(t.op(), std::move(a), std::move(b));
    }
    return t;
}

FreeTerm combination_term(const Combination& c)
{
    FreeTerm out;
    bool first = true;
    for (const auto& [key, tc] : c) {
        FreeTerm piece = FreeTerm::scaled(tc.second, tc.first);
        out = first ? piece : FreeTerm::sum(out, piece);
        first = false;
    }
    return out;
}

// Calls visit(labels) for every product of permutations of the fresh blocks.
template <class Visit>
void for_each_assignment(std::vector<std::vector<std::size_t>>& labels, std::size_t block, Visit&& visit)
{
    if (block == labels.size()) {
        visit(labels);
        return;
    }
    auto& perm = labels[block];
    std::sort(perm.begin(), perm.end());
    do {
        for_each_assignment(labels, block + 1, visit);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace

std::vector<FreeTerm> multilinearize(const FreeTerm& t, std::size_t n)
{
    std::map<std::vector<std::size_t>, Combination> parts;
    for (const auto& [key, tc] : expand(t)) {
        std::vector<std::size_t> degree(std::max(n, t.max_generator()), 0);
        count_generators(tc.first, degree);
        accumulate(parts[degree], tc.first, tc.second);
    }

    auto multilinear = [](const std::vector<std::size_t>& d) {
        return std::all_of(d.begin(), d.end(), [](std::size_t k) { return k <= 1; });
    };
    if (parts.size() == 1 && multilinear(parts.begin()->first))
        return {t};

    std::vector<FreeTerm> out;
    for (const auto& [degree, combination] : parts) {
        if (combination.empty())
            continue;
        if (multilinear(degree)) {
            out.push_back(combination_term(combination));
            continue;
        }
        std::vector<std::vector<std::size_t>> labels(degree.size());
        std::size_t next_label = 1;
        for (std::size_t i = 0; i < degree.size(); ++i)
            for (std::size_t k = 0; k < degree[i]; ++k)
                labels[i].push_back(next_label++);

        Combination polarized;
        for (const auto& [key, tc] : combination) {
            for_each_assignment(labels, 0, [&](const auto& assignment) {
                std::vector<std::size_t> cursor(assignment.size(), 0);
                accumulate(polarized, relabel(tc.first, assignment, cursor), tc.second);
            });
        }
        if (!polarized.empty())
            out.push_back(combination_term(polarized));
    }
    return out;
}

} // namespace diffwitt
