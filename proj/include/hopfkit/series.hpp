#pragma once

#include "hopfkit/laurent.hpp"
#include "hopfkit/osc.hpp"
#include "hopfkit/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hopfkit {

/// Indexed family of basis symbols with degrees. Ids are assigned in
/// nondecreasing degree order and id 0 is the unit.
class GradedBasis {
public:
    explicit GradedBasis(std::string unit_name = "1");

    int add(const std::string &name, int degree);

    int size() const { return static_cast<int>(names_.size()); }
    int degree(int id) const { return degrees_.at(id); }
    const std::string &name(int id) const { return names_.at(id); }
    int max_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
    /// Ids of degree n (empty beyond max_degree).
    const std::vector<int> &of_degree(int n) const;
    /// -1 when absent.
    int find(const std::string &name) const;
    int id(const std::string &name) const;

    static constexpr int unit = 0;

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> by_degree_;
    std::unordered_map<std::string, int> lookup_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

struct MuEntry {
    int index;
    Rational value;
};

/// mu^j_{j',j''}: <s1 * s2, u_j> = sum mu^j_{j',j''} <s1,u_j'> <s2,u_j''>.
/// Products involving the unit are implicit.
class MuTable {
public:
    MuTable() = default;
    explicit MuTable(BasisPtr basis) : basis_(std::move(basis)) {}

    void add(int left, int right, int target, const Rational &value);
    /// Entries for a non-unit pair; nullptr when the product vanishes.
    const std::vector<MuEntry> *find(int left, int right) const;
    const BasisPtr &basis() const { return basis_; }
    std::size_t pair_count() const { return entries_.size(); }
    template <class F> void for_each(F &&f) const
    {
        for (const auto &[key, list] : entries_)
            f(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu), list);
    }

private:
    static std::uint64_t key(int l, int r) { return (std::uint64_t(l) << 32) | std::uint32_t(r); }
    BasisPtr basis_;
    std::unordered_map<std::uint64_t, std::vector<MuEntry>> entries_;
};

/// Product of H on basis elements: u_j' u_j'' = sum eta^j_{j',j''} u_j,
/// stored for non-unit pairs with j' <= j''.
class EtaTable {
public:
    EtaTable() = default;
    explicit EtaTable(BasisPtr basis) : basis_(std::move(basis)) {}

    void add(int left, int right, int target, const Rational &value);
    const std::vector<MuEntry> *find(int left, int right) const;
    const BasisPtr &basis() const { return basis_; }
    template <class F> void for_each(F &&f) const
    {
        for (const auto &[k, list] : entries_)
            f(k.first, k.second, list);
    }
    /// Entries of degree-sum at most n, grouped by target j.
    std::map<int, std::vector<std::pair<std::pair<int, int>, Rational>>> by_target() const;

private:
    BasisPtr basis_;
    std::map<std::pair<int, int>, std::vector<MuEntry>> entries_;
};

/// Truncated formal series sum_j c_j Z_j with coefficients in R, stored
/// sparsely by basis id. Zero coefficients are never stored.
template <class R> class Series {
public:
    using Terms = std::map<int, R>;

    Series(BasisPtr basis, int order) : basis_(std::move(basis)), order_(order)
    {
        if (!basis_)
            throw std::invalid_argument("series needs a basis");
        if (order_ < 0)
            throw std::invalid_argument("negative truncation order");
    }

    static Series unit(BasisPtr basis, int order)
    {
        Series s(std::move(basis), order);
        s.add(GradedBasis::unit, R(1));
        return s;
    }
    static Series single(BasisPtr basis, int order, int id, const R &c = R(1))
    {
        Series s(std::move(basis), order);
        s.add(id, c);
        return s;
    }

    const BasisPtr &basis() const { return basis_; }
    int order() const { return order_; }
    const Terms &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    R coefficient(int id) const
    {
        auto it = terms_.find(id);
        return it == terms_.end() ? R() : it->second;
    }
    R coefficient(const std::string &name) const { return coefficient(basis_->id(name)); }
    const R *find(int id) const
    {
        auto it = terms_.find(id);
        return it == terms_.end() ? nullptr : &it->second;
    }

    /// Adds c to the coefficient of id; silently ignored above the order.
    void add(int id, const R &c)
    {
        if (basis_->degree(id) > order_ || is_zero_value(c))
            return;
        auto [it, ins] = terms_.try_emplace(id, c);
        if (!ins) {
            it->second += c;
            if (is_zero_value(it->second))
                terms_.erase(it);
        }
    }
    void add(const std::string &name, const R &c) { add(basis_->id(name), c); }

    Series truncated(int order) const
    {
        Series r(basis_, std::min(order, order_));
        for (const auto &[i, c] : terms_)
            if (basis_->degree(i) <= r.order_)
                r.terms_.emplace(i, c);
        return r;
    }
    Series degree_part(int n) const
    {
        Series r(basis_, order_);
        for (const auto &[i, c] : terms_)
            if (basis_->degree(i) == n)
                r.terms_.emplace(i, c);
        return r;
    }

    Series &operator+=(const Series &o)
    {
        merge(o, Rational(1));
        return *this;
    }
    Series &operator-=(const Series &o)
    {
        merge(o, Rational(-1));
        return *this;
    }
    Series &operator*=(const Rational &c)
    {
        if (sgn(c) == 0)
            terms_.clear();
        for (auto &[i, v] : terms_)
            v *= c;
        return *this;
    }
    /// Coefficientwise multiplication by a ring element.
    Series scaled(const R &c) const
    {
        Series r(basis_, order_);
        for (const auto &[i, v] : terms_)
            r.add(i, v * c);
        return r;
    }
    Series operator-() const
    {
        Series r = *this;
        r *= Rational(-1);
        return r;
    }
    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator*(Series a, const Rational &c) { return a *= c; }
    friend Series operator*(const Rational &c, Series a) { return a *= c; }
    friend bool operator==(const Series &a, const Series &b)
    {
        return a.basis_ == b.basis_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    /// Coefficientwise transformation into another ring.
    template <class F> auto map(F &&f) const
    {
        using S = decltype(f(std::declval<const R &>()));
        Series<S> r(basis_, order_);
        for (const auto &[i, v] : terms_)
            r.add(i, f(v));
        return r;
    }

    void check_compatible(const Series &o) const
    {
        if (basis_ != o.basis_)
            throw std::invalid_argument("series basis mismatch");
    }

private:
    static bool is_zero_value(const R &c)
    {
        using hopfkit::is_zero;
        return is_zero(c);
    }
    void merge(const Series &o, const Rational &sign)
    {
        check_compatible(o);
        order_ = std::min(order_, o.order_);
        for (auto it = terms_.begin(); it != terms_.end();)
            it = basis_->degree(it->first) > order_ ? terms_.erase(it) : std::next(it);
        for (const auto &[i, c] : o.terms_) {
            R t = c;
            t *= sign;
            add(i, t);
        }
    }

    BasisPtr basis_;
    int order_;
    Terms terms_;
};

namespace detail {

template <class R> std::vector<std::vector<std::pair<int, const R *>>> by_degree(const Series<R> &s)
{
    std::vector<std::vector<std::pair<int, const R *>>> out(s.order() + 1);
    for (const auto &[i, c] : s.terms())
        out[s.basis()->degree(i)].emplace_back(i, &c);
    return out;
}

template <class R> void check_mu(const Series<R> &s, const MuTable &mu)
{
    if (mu.basis() != s.basis())
        throw std::invalid_argument("mu table belongs to a different basis");
}

} // namespace detail

/// s1 * s2 restricted to output degrees in [lo, hi].
template <class R>
Series<R> star_range(const Series<R> &s1, const Series<R> &s2, const MuTable &mu, int lo, int hi)
{
    s1.check_compatible(s2);
    detail::check_mu(s1, mu);
    int order = std::min(s1.order(), s2.order());
    Series<R> out(s1.basis(), order);
    auto a = detail::by_degree(s1);
    auto b = detail::by_degree(s2);
    hi = std::min(hi, order);
    std::map<int, R> acc;
    for (int n = std::max(lo, 0); n <= hi; ++n)
        for (int p = 0; p <= n; ++p) {
            if (p >= static_cast<int>(a.size()) || n - p >= static_cast<int>(b.size()))
                continue;
            for (const auto &[i, ci] : a[p])
                for (const auto &[j, cj] : b[n - p]) {
                    if (i == GradedBasis::unit) {
                        out.add(j, *ci * *cj);
                        continue;
                    }
                    if (j == GradedBasis::unit) {
                        out.add(i, *ci * *cj);
                        continue;
                    }
                    const auto *list = mu.find(i, j);
                    if (!list)
                        continue;
                    R prod = *ci * *cj;
                    for (const auto &e : *list) {
                        R term = prod;
                        term *= e.value;
                        out.add(e.index, term);
                    }
                }
        }
    return out;
}

template <class R> Series<R> star(const Series<R> &s1, const Series<R> &s2, const MuTable &mu)
{
    return star_range(s1, s2, mu, 0, std::min(s1.order(), s2.order()));
}

template <class R> Series<R> commutator(const Series<R> &x, const Series<R> &y, const MuTable &mu)
{
    return star(x, y, mu) - star(y, x, mu);
}

template <class R> Series<R> exp_series(const Series<R> &beta, const MuTable &mu)
{
    if (beta.find(GradedBasis::unit))
        throw std::invalid_argument("exp_series: nonzero coefficient at the unit");
    Series<R> result = Series<R>::unit(beta.basis(), beta.order());
    Series<R> power = result;
    for (int k = 1; k <= beta.order(); ++k) {
        power = star(power, beta, mu);
        power *= Rational(1, k);
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

template <class R> Series<R> log_series(const Series<R> &gamma, const MuTable &mu)
{
    const R *u = gamma.find(GradedBasis::unit);
    if (!u || !(*u == R(1)))
        throw std::invalid_argument("log_series: unit coefficient must be 1");
    Series<R> x = gamma - Series<R>::unit(gamma.basis(), gamma.order());
    Series<R> result(gamma.basis(), gamma.order());
    Series<R> power = x;
    for (int k = 1; k <= gamma.order() && !power.is_zero(); ++k) {
        Series<R> term = power;
        term *= Rational(k % 2 ? 1 : -1, k);
        result += term;
        power = star(power, x, mu);
    }
    return result;
}

/// Inverse for the star product of a series with unit coefficient 1.
template <class R> Series<R> inverse_series(const Series<R> &gamma, const MuTable &mu)
{
    const R *u = gamma.find(GradedBasis::unit);
    if (!u || !(*u == R(1)))
        throw std::invalid_argument("inverse_series: unit coefficient must be 1");
    Series<R> x = Series<R>::unit(gamma.basis(), gamma.order()) - gamma;
    Series<R> result = Series<R>::unit(gamma.basis(), gamma.order());
    Series<R> power = result;
    for (int k = 1; k <= gamma.order(); ++k) {
        power = star(power, x, mu);
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

namespace detail {

template <class R> bool product_rule(const Series<R> &s, const EtaTable &eta, bool infinitesimal)
{
    if (eta.basis() != s.basis())
        throw std::invalid_argument("eta table belongs to a different basis");
    const auto &basis = *s.basis();
    bool ok = true;
    eta.for_each([&](int l, int r, const std::vector<MuEntry> &list) {
        if (!ok || basis.degree(l) + basis.degree(r) > s.order())
            return;
        R lhs{};
        for (const auto &e : list)
            if (const R *c = s.find(e.index)) {
                R t = *c;
                t *= e.value;
                lhs += t;
            }
        R rhs{};
        if (!infinitesimal)
            rhs = s.coefficient(l) * s.coefficient(r);
        if (!(lhs == rhs))
            ok = false;
    });
    return ok;
}

} // namespace detail

/// Multiplicativity on all basis products of total degree <= order, plus
/// unit coefficient 1.
template <class R> bool is_character(const Series<R> &s, const EtaTable &eta)
{
    if (!(s.coefficient(GradedBasis::unit) == R(1)))
        return false;
    return detail::product_rule(s, eta, false);
}

/// Vanishing on products of non-unit elements, plus zero unit coefficient.
template <class R> bool is_infinitesimal(const Series<R> &s, const EtaTable &eta)
{
    if (s.find(GradedBasis::unit))
        return false;
    return detail::product_rule(s, eta, true);
}

struct SeriesRecord {
    int degree;
    std::string index;
    std::string coefficient;
};

/// Pairs (l, r) of non-unit basis elements with deg l + deg r <= n.
inline std::vector<std::pair<int, int>> product_pairs(const GradedBasis &basis, int n)
{
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a < n; ++a)
        for (int b = 1; a + b <= n; ++b)
            for (int l : basis.of_degree(a))
                for (int r : basis.of_degree(b))
                    out.emplace_back(l, r);
    return out;
}

/// The character (or infinitesimal) product rule on the given pairs, with
/// products u_l u_r = sum value u_index supplied by a callback.
template <class R, class Product>
bool product_rule_on(const Series<R> &s, const std::vector<std::pair<int, int>> &pairs, Product &&product,
                     bool infinitesimal)
{
    if (infinitesimal ? s.find(GradedBasis::unit) != nullptr : !(s.coefficient(GradedBasis::unit) == R(1)))
        return false;
    for (auto [l, r] : pairs) {
        R lhs{};
        for (const MuEntry &e : product(l, r))
            if (const R *c = s.find(e.index)) {
                R t = *c;
                t *= e.value;
                lhs += t;
            }
        R rhs{};
        if (!infinitesimal)
            rhs = s.coefficient(l) * s.coefficient(r);
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

template <class R> std::vector<SeriesRecord> serialize(const Series<R> &s)
{
    std::vector<SeriesRecord> out;
    for (const auto &[i, c] : s.terms())
        out.push_back({s.basis()->degree(i), s.basis()->name(i), to_string(c)});
    return out;
}

template <class R> std::string to_string(const Series<R> &s)
{
    std::string out;
    for (const auto &r : serialize(s))
        out += std::to_string(r.degree) + "\t" + r.index + "\t" + r.coefficient + "\n";
    return out;
}

} // namespace hopfkit
