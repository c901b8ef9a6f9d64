#include "hopfkit/vector_fields.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfkit {

std::vector<std::string> VariableSet::names() const
{
    std::vector<std::string> out = state;
    out.insert(out.end(), params.begin(), params.end());
    return out;
}

std::size_t VariableSet::index(const std::string &name) const
{
    for (std::size_t i = 0; i < state.size(); ++i)
        if (state[i] == name)
            return i;
    for (std::size_t i = 0; i < params.size(); ++i)
        if (params[i] == name)
            return state.size() + i;
    throw std::invalid_argument("unknown variable: " + name);
}

PolyVectorField::PolyVectorField(std::size_t dimension, std::size_t nvars)
    : nvars_(nvars), comps_(dimension, RationalPoly(nvars))
{
    if (dimension > nvars)
        throw std::invalid_argument("field dimension exceeds variable count");
}

PolyVectorField::PolyVectorField(std::size_t nvars, std::vector<RationalPoly> components)
    : nvars_(nvars), comps_(std::move(components))
{
    if (comps_.size() > nvars)
        throw std::invalid_argument("field dimension exceeds variable count");
    for (auto &c : comps_) {
        if (c.is_zero())
            c = RationalPoly(nvars);
        else if (c.nvars() != nvars)
            throw std::invalid_argument("component variable count mismatch");
    }
}

bool PolyVectorField::is_zero() const
{
    return std::all_of(comps_.begin(), comps_.end(), [](const RationalPoly &p) { return p.is_zero(); });
}

void PolyVectorField::check(const PolyVectorField &o) const
{
    if (comps_.size() != o.comps_.size() || nvars_ != o.nvars_)
        throw std::invalid_argument("vector field dimension mismatch");
}

PolyVectorField &PolyVectorField::operator+=(const PolyVectorField &o)
{
    if (comps_.empty() && nvars_ == 0)
        return *this = o;
    check(o);
    for (std::size_t i = 0; i < comps_.size(); ++i)
        comps_[i] += o.comps_[i];
    return *this;
}

PolyVectorField &PolyVectorField::operator-=(const PolyVectorField &o)
{
    if (comps_.empty() && nvars_ == 0)
        return *this = o * Rational(-1);
    check(o);
    for (std::size_t i = 0; i < comps_.size(); ++i)
        comps_[i] -= o.comps_[i];
    return *this;
}

PolyVectorField &PolyVectorField::operator*=(const Rational &c)
{
    for (auto &p : comps_)
        p *= c;
    return *this;
}

SparseVector<std::pair<int, Exponents>> PolyVectorField::flatten() const
{
    SparseVector<std::pair<int, Exponents>> v;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        for (const auto &[e, c] : comps_[i].terms())
            v.emplace(std::pair<int, Exponents>{static_cast<int>(i), e}, c);
    return v;
}

RationalPoly derivation_apply(const PolyVectorField &f, const RationalPoly &chi)
{
    if (chi.nvars() != f.nvars() && !chi.is_zero())
        throw std::invalid_argument("derivation and observable have different variables");
    RationalPoly out(f.nvars());
    for (std::size_t j = 0; j < f.dimension(); ++j) {
        if (f[j].is_zero() || chi.degree_in(j) == 0)
            continue;
        out += f[j] * chi.derivative(j);
    }
    return out;
}

PolyVectorField directional(const PolyVectorField &f, const PolyVectorField &g)
{
    if (f.dimension() != g.dimension() || f.nvars() != g.nvars())
        throw std::invalid_argument("vector field dimension mismatch");
    PolyVectorField out(g.dimension(), g.nvars());
    for (std::size_t i = 0; i < g.dimension(); ++i)
        out[i] = derivation_apply(f, g[i]);
    return out;
}

PolyVectorField vf_bracket(const PolyVectorField &f, const PolyVectorField &g)
{
    return directional(f, g) - directional(g, f);
}

std::string to_string(const PolyVectorField &f, const VariableSet &vars)
{
    auto names = vars.names();
    std::string out;
    for (std::size_t i = 0; i < f.dimension(); ++i) {
        if (f[i].is_zero())
            continue;
        std::string p = to_string(f[i], names);
        if (!out.empty())
            out += " + ";
        if (f[i].size() > 1 || p.find('*') != std::string::npos || p[0] == '-')
            p = "(" + p + ")";
        out += p + "*d" + vars.state[i];
    }
    return out.empty() ? "0" : out;
}

DiffOperator DiffOperator::identity(std::size_t dimension, std::size_t nvars)
{
    DiffOperator d(dimension, nvars);
    d.add_term(Exponents(dimension, 0), RationalPoly(nvars, Rational(1)));
    return d;
}

DiffOperator DiffOperator::from_field(const PolyVectorField &f)
{
    DiffOperator d(f.dimension(), f.nvars());
    for (std::size_t j = 0; j < f.dimension(); ++j) {
        Exponents alpha(f.dimension(), 0);
        alpha[j] = 1;
        d.add_term(alpha, f[j]);
    }
    return d;
}

int DiffOperator::order() const
{
    int o = 0;
    for (const auto &[alpha, p] : terms_) {
        int s = 0;
        for (int a : alpha)
            s += a;
        o = std::max(o, s);
    }
    return o;
}

void DiffOperator::add_term(const Exponents &alpha, const RationalPoly &p)
{
    if (p.is_zero())
        return;
    if (alpha.size() != dim_)
        throw std::invalid_argument("operator multi-index has the wrong length");
    auto [it, ins] = terms_.try_emplace(alpha, p);
    if (!ins) {
        it->second += p;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

DiffOperator &DiffOperator::operator+=(const DiffOperator &o)
{
    if (dim_ == 0 && nvars_ == 0) {
        dim_ = o.dim_;
        nvars_ = o.nvars_;
    }
    for (const auto &[a, p] : o.terms_)
        add_term(a, p);
    return *this;
}

DiffOperator &DiffOperator::operator*=(const Rational &c)
{
    if (sgn(c) == 0)
        terms_.clear();
    for (auto &[a, p] : terms_)
        p *= c;
    return *this;
}

namespace {

RationalPoly multi_derivative(RationalPoly p, const Exponents &gamma)
{
    for (std::size_t j = 0; j < gamma.size(); ++j)
        for (int k = 0; k < gamma[j] && !p.is_zero(); ++k)
            p = p.derivative(j);
    return p;
}

Rational binomial(int n, int k)
{
    Rational r(1);
    for (int i = 1; i <= k; ++i)
        r = r * Rational(n - k + i) / Rational(i);
    return r;
}

} // namespace

DiffOperator DiffOperator::compose(const DiffOperator &o) const
{
    if (dim_ != o.dim_)
        throw std::invalid_argument("operator dimension mismatch");
    DiffOperator out(dim_, nvars_);
    for (const auto &[alpha, p] : terms_)
        for (const auto &[beta, q] : o.terms_) {
            // Leibniz: d^alpha (q d^beta) = sum_gamma C(alpha,gamma) (d^gamma q) d^(alpha-gamma+beta)
            Exponents gamma(dim_, 0);
            while (true) {
                RationalPoly dq = multi_derivative(q, gamma);
                if (!dq.is_zero()) {
                    Rational c(1);
                    Exponents rest(dim_);
                    for (std::size_t j = 0; j < dim_; ++j) {
                        c *= binomial(alpha[j], gamma[j]);
                        rest[j] = alpha[j] - gamma[j] + beta[j];
                    }
                    out.add_term(rest, p * dq * c);
                }
                std::size_t j = 0;
                while (j < dim_ && gamma[j] == alpha[j])
                    gamma[j++] = 0;
                if (j == dim_)
                    break;
                ++gamma[j];
            }
        }
    return out;
}

RationalPoly DiffOperator::apply(const RationalPoly &chi) const
{
    RationalPoly out(nvars_);
    for (const auto &[alpha, p] : terms_) {
        RationalPoly d = multi_derivative(chi, alpha);
        if (!d.is_zero())
            out += p * d;
    }
    return out;
}

RationalPoly coordinate(const VariableSet &vars, std::size_t i)
{
    if (i >= vars.dimension())
        throw std::out_of_range("coordinate index");
    return RationalPoly::variable(vars.nvars(), i);
}

namespace {

void check_fields(const Alphabet &alphabet, const VariableSet &vars, const std::vector<PolyVectorField> &fields)
{
    if (static_cast<int>(fields.size()) != alphabet.size())
        throw std::invalid_argument("one field per letter is required");
    for (const auto &f : fields)
        if (f.dimension() != vars.dimension() || f.nvars() != vars.nvars())
            throw std::invalid_argument("letter field does not match the variable set");
}

} // namespace

WordMorphism::WordMorphism(Alphabet alphabet, VariableSet vars, std::vector<PolyVectorField> letter_fields)
    : alphabet_(std::move(alphabet)), vars_(std::move(vars)), fields_(std::move(letter_fields))
{
    check_fields(alphabet_, vars_, fields_);
}

const PolyVectorField &WordMorphism::letter(char c) const
{
    if (!alphabet_.contains(c))
        throw std::invalid_argument(std::string("no field assigned to letter ") + c);
    return fields_[alphabet_.index(c)];
}

RationalPoly WordMorphism::apply(const std::string &word, const RationalPoly &chi) const
{
    RationalPoly r = chi;
    for (auto it = word.rbegin(); it != word.rend() && !r.is_zero(); ++it)
        r = derivation_apply(letter(*it), r);
    return r;
}

PolyVectorField WordMorphism::basis_function(const std::string &word) const
{
    if (word.empty())
        throw std::invalid_argument("the empty word has no basis function");
    auto it = cache_.find(word);
    if (it != cache_.end())
        return it->second;
    PolyVectorField f;
    if (word.size() == 1)
        f = letter(word[0]);
    else
        f = directional(letter(word[0]), basis_function(word.substr(1)));
    return cache_.emplace(word, std::move(f)).first->second;
}

DiffOperator WordMorphism::op(const std::string &word) const
{
    DiffOperator d = DiffOperator::identity(vars_.dimension(), vars_.nvars());
    for (char c : word)
        d = d.compose(DiffOperator::from_field(letter(c)));
    return d;
}

PolyVectorField WordMorphism::image(const WordPoly &p) const
{
    PolyVectorField out(vars_.dimension(), vars_.nvars());
    for (const auto &[w, c] : p)
        if (!w.empty())
            out += basis_function(w) * c;
    return out;
}

TreeMorphism::TreeMorphism(Alphabet alphabet, VariableSet vars, std::vector<PolyVectorField> letter_fields)
    : alphabet_(std::move(alphabet)), vars_(std::move(vars)), fields_(std::move(letter_fields))
{
    check_fields(alphabet_, vars_, fields_);
}

const PolyVectorField &TreeMorphism::elementary_differential(const Tree &t) const
{
    auto it = cache_.find(t);
    if (it != cache_.end())
        return it->second;
    if (!alphabet_.contains(t.root()))
        throw std::invalid_argument(std::string("no field assigned to letter ") + t.root());
    const PolyVectorField &f = fields_[alphabet_.index(t.root())];
    std::vector<const PolyVectorField *> kids;
    for (const auto &c : t.children())
        kids.push_back(&elementary_differential(c));
    std::size_t dim = vars_.dimension(), nv = vars_.nvars();
    PolyVectorField out(dim, nv);
    for (std::size_t i = 0; i < dim; ++i) {
        // (derivative of f^i, product of child components) pairs
        std::vector<std::pair<RationalPoly, RationalPoly>> terms{{f[i], RationalPoly(nv, Rational(1))}};
        for (const auto *k : kids) {
            std::vector<std::pair<RationalPoly, RationalPoly>> next;
            for (const auto &[g, w] : terms)
                for (std::size_t j = 0; j < dim; ++j) {
                    if ((*k)[j].is_zero() || g.degree_in(j) == 0)
                        continue;
                    next.emplace_back(g.derivative(j), w * (*k)[j]);
                }
            terms = std::move(next);
        }
        for (const auto &[g, w] : terms)
            out[i] += g * w;
    }
    return cache_.emplace(t, std::move(out)).first->second;
}

PolyVectorField TreeMorphism::generator_image(const Tree &t) const
{
    return elementary_differential(t) * Rational(1, t.symmetry());
}

PolyVectorField TreeMorphism::image(const TreePoly &p) const
{
    PolyVectorField out(vars_.dimension(), vars_.nvars());
    for (const auto &[t, c] : p)
        out += elementary_differential(t) * c;
    return out;
}

HopfMorphism::HopfMorphism(const GradedLieAlgebra &lie, const HopfData &h, VariableSet vars,
                           std::vector<PolyVectorField> generator_fields)
    : h_(&h), vars_(std::move(vars)), fields_(std::move(generator_fields)), z_(dual_basis(lie, h))
{
    if (static_cast<int>(fields_.size()) != lie.size())
        throw std::invalid_argument("one field per generator is required");
}

RationalPoly HopfMorphism::apply(int j, const RationalPoly &chi) const
{
    const Monomial &m = h_->monomials.at(j);
    RationalPoly out(vars_.nvars());
    for (const auto &[word, c] : z_.at(m)) {
        RationalPoly r = chi;
        for (auto it = word.rbegin(); it != word.rend() && !r.is_zero(); ++it)
            r = derivation_apply(fields_.at(*it), r);
        out += r * c;
    }
    return out;
}

DiffOperator HopfMorphism::op(int j) const
{
    const Monomial &m = h_->monomials.at(j);
    DiffOperator out(vars_.dimension(), vars_.nvars());
    for (const auto &[word, c] : z_.at(m)) {
        DiffOperator d = DiffOperator::identity(vars_.dimension(), vars_.nvars());
        for (int g : word)
            d = d.compose(DiffOperator::from_field(fields_.at(g)));
        d *= c;
        out += d;
    }
    return out;
}

bool HopfMorphism::is_lie_homomorphism(const GradedLieAlgebra &lie) const
{
    int top = lie.max_degree();
    for (int l = 0; l < lie.size(); ++l)
        for (int r = l + 1; r < lie.size(); ++r) {
            if (lie.degree(l) + lie.degree(r) > top)
                continue;
            PolyVectorField lhs(vars_.dimension(), vars_.nvars());
            for (const auto &[t, c] : lie.bracket(l, r))
                lhs += fields_.at(t) * c;
            if (!(lhs == vf_bracket(fields_[l], fields_[r])))
                return false;
        }
    return true;
}

bool KernelQuotient::is_survivor(int index) const
{
    for (const auto &d : degrees)
        if (std::find(d.survivors.begin(), d.survivors.end(), index) != d.survivors.end())
            return true;
    return false;
}

KernelQuotient kernel_quotient(const std::vector<PolyVectorField> &images, const std::vector<int> &degree)
{
    if (images.size() != degree.size())
        throw std::invalid_argument("one degree per image is required");
    std::map<int, EchelonBasis<std::pair<int, Exponents>>> echelon;
    std::map<int, KernelQuotient::Degree> out;
    for (std::size_t k = 0; k < images.size(); ++k) {
        int n = degree[k];
        auto &d = out[n];
        d.degree = n;
        auto dep = echelon[n].insert(images[k].flatten(), static_cast<int>(k));
        if (dep)
            d.relations[static_cast<int>(k)] = *dep;
        else
            d.survivors.push_back(static_cast<int>(k));
    }
    KernelQuotient q;
    for (auto &[n, d] : out)
        q.degrees.push_back(std::move(d));
    return q;
}

GradedVFAlgebra::GradedVFAlgebra(VariableSet vars, std::vector<PolyVectorField> generators, int order,
                                 std::size_t cap)
    : vars_(std::move(vars)), order_(order)
{
    if (order < 1)
        throw std::invalid_argument("closure order must be positive");
    offsets_ = {0, 0};
    echelon_.resize(order + 1);
    for (const auto &g : generators) {
        if (g.dimension() != vars_.dimension() || g.nvars() != vars_.nvars())
            throw std::invalid_argument("generator does not match the variable set");
        int id = size();
        auto dep = echelon_[1].insert(g.flatten(), id);
        if (dep) {
            relations_.push_back({id, -1, *dep});
            continue;
        }
        fields_.push_back(g);
        degrees_.push_back(1);
    }
    offsets_.push_back(size());
    for (int n = 2; n <= order; ++n) {
        auto [g0, g1] = range(1);
        auto [p0, p1] = range(n - 1);
        for (int i = g0; i < g1; ++i)
            for (int j = p0; j < p1; ++j) {
                PolyVectorField f = vf_bracket(fields_[i], fields_[j]);
                int id = size();
                auto dep = echelon_[n].insert(f.flatten(), id);
                if (dep) {
                    relations_.push_back({i, j, *dep});
                    continue;
                }
                fields_.push_back(std::move(f));
                degrees_.push_back(n);
                if (fields_.size() > cap)
                    throw std::length_error("monomial closure exceeds the basis cap at degree " +
                                            std::to_string(n));
            }
        offsets_.push_back(size());
    }
}

std::vector<int> GradedVFAlgebra::dimensions() const
{
    std::vector<int> d;
    for (int n = 1; n <= order_; ++n)
        d.push_back(offsets_[n + 1] - offsets_[n]);
    return d;
}

std::optional<SparseVector<int>> GradedVFAlgebra::express(const PolyVectorField &f, int n) const
{
    if (n < 1 || n > order_)
        return std::nullopt;
    auto combo = echelon_[n].express(f.flatten());
    if (!combo)
        return std::nullopt;
    return SparseVector<int>(combo->begin(), combo->end());
}

const SparseVector<int> &GradedVFAlgebra::bracket(int l, int r) const
{
    auto key = std::pair{l, r};
    auto it = brackets_.find(key);
    if (it != brackets_.end())
        return it->second;
    SparseVector<int> out;
    int n = degree(l) + degree(r);
    if (n <= order_) {
        auto e = express(vf_bracket(fields_[l], fields_[r]), n);
        if (!e)
            throw std::logic_error("bracket escaped the closure");
        out = std::move(*e);
    }
    return brackets_.emplace(key, std::move(out)).first->second;
}

GradedLieAlgebra GradedVFAlgebra::lie_algebra(int order) const
{
    order = std::min(order, order_);
    std::vector<GradedLieAlgebra::Index> idx;
    int top = offsets_[order + 1];
    for (int i = 0; i < top; ++i)
        idx.push_back({"g" + std::to_string(degrees_[i]) + "_" + std::to_string(i - offsets_[degrees_[i]]),
                       degrees_[i]});
    GradedLieAlgebra lie(idx);
    for (int l = 0; l < top; ++l)
        for (int r = 0; r < top; ++r)
            if (l != r && degrees_[l] + degrees_[r] <= order)
                for (const auto &[t, c] : bracket(l, r))
                    lie.add_raw(l, r, t, c);
    return lie;
}

std::vector<std::pair<PolyVectorField, Rational>> monomial_pieces(const PolyVectorField &f)
{
    std::vector<std::pair<PolyVectorField, Rational>> out;
    for (std::size_t i = 0; i < f.dimension(); ++i)
        for (const auto &[e, c] : f[i].terms()) {
            PolyVectorField g(f.dimension(), f.nvars());
            g[i] = RationalPoly::monomial(e, Rational(1));
            out.emplace_back(std::move(g), c);
        }
    return out;
}

namespace {

PolyVectorField lie_image(const LieExpr &e, const WordMorphism &psi)
{
    if (e.is_leaf())
        return psi.letter(e.letter);
    return vf_bracket(lie_image(*e.left, psi), lie_image(*e.right, psi));
}

} // namespace

std::optional<CompressedLie> compress_commutators(const PolyVectorField &target, const WordMorphism &psi, int degree,
                                                  int max_terms)
{
    std::vector<LieExpr> exprs;
    std::vector<SparseVector<std::pair<int, Exponents>>> columns;
    for (const auto &w : lyndon_words(psi.alphabet(), degree)) {
        exprs.push_back(lyndon_bracket(w, psi.alphabet()));
        columns.push_back(lie_image(exprs.back(), psi).flatten());
    }
    auto sol = sparsest_solution(columns, target.flatten(), max_terms);
    if (!sol)
        return std::nullopt;
    CompressedLie out;
    for (const auto &[k, c] : *sol)
        out.terms.emplace_back(c, exprs[k]);
    return out;
}

} // namespace hopfkit
