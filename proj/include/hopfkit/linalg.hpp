#pragma once

#include "hopfkit/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hopfkit {

template <class Key> using SparseVector = std::map<Key, Rational>;

template <class Key> void axpy(SparseVector<Key> &y, const Rational &a, const SparseVector<Key> &x)
{
    if (sgn(a) == 0)
        return;
    for (const auto &[k, v] : x) {
        auto [it, ins] = y.try_emplace(k, a * v);
        if (!ins) {
            it->second += a * v;
            if (sgn(it->second) == 0)
                y.erase(it);
        }
    }
}

/// Incremental exact row echelon form. Each inserted vector carries a tag;
/// dependencies are reported as combinations of previously accepted tags.
template <class Key> class EchelonBasis {
public:
    using Combination = std::map<int, Rational>;

    /// Returns std::nullopt if the vector was independent (and is now part of
    /// the basis), otherwise the combination of accepted tags equal to it.
    std::optional<Combination> insert(const SparseVector<Key> &v, int tag)
    {
        auto [rest, combo] = reduce(v);
        if (rest.empty())
            return combo;
        // combo expresses v - rest; keep the row rest = v - combo
        Combination own;
        own[tag] = Rational(1);
        for (const auto &[t, c] : combo)
            own[t] -= c;
        Row row{rest, rest.begin()->first, std::move(own)};
        rows_.push_back(std::move(row));
        tags_.push_back(tag);
        return std::nullopt;
    }

    /// Coefficients c_tag with v = sum c_tag * original(tag), if v is in the span.
    std::optional<Combination> express(const SparseVector<Key> &v) const
    {
        auto [rest, combo] = reduce(v);
        if (!rest.empty())
            return std::nullopt;
        return combo;
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<int> &accepted_tags() const { return tags_; }

private:
    struct Row {
        SparseVector<Key> vec;
        Key pivot;
        Combination combo; // vec = sum combo[t] * original(t)
    };

    std::pair<SparseVector<Key>, Combination> reduce(SparseVector<Key> v) const
    {
        Combination combo;
        for (const auto &row : rows_) {
            auto it = v.find(row.pivot);
            if (it == v.end())
                continue;
            Rational f = it->second / row.vec.at(row.pivot);
            axpy(v, -f, row.vec);
            for (const auto &[t, c] : row.combo) {
                Rational &slot = combo[t];
                slot += f * c;
            }
        }
        for (auto it = combo.begin(); it != combo.end();)
            it = sgn(it->second) == 0 ? combo.erase(it) : std::next(it);
        return {std::move(v), std::move(combo)};
    }

    std::vector<Row> rows_;
    std::vector<int> tags_;
};

/// Exact solution of sum_c x_c * columns[c] = target with the fewest nonzero
/// x_c (ties broken lexicographically by column order), searching supports up
/// to max_support columns. Returns std::nullopt when no such solution exists.
template <class Key>
std::optional<std::map<int, Rational>> sparsest_solution(const std::vector<SparseVector<Key>> &columns,
                                                        const SparseVector<Key> &target, int max_support)
{
    if (target.empty())
        return std::map<int, Rational>{};
    std::vector<int> usable;
    for (int c = 0; c < static_cast<int>(columns.size()); ++c)
        if (!columns[c].empty())
            usable.push_back(c);
    int n = static_cast<int>(usable.size());
    for (int size = 1; size <= std::min(max_support, n); ++size) {
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i)
            pick[i] = i;
        while (true) {
            EchelonBasis<Key> eb;
            bool independent = true;
            for (int i = 0; i < size && independent; ++i)
                independent = !eb.insert(columns[usable[pick[i]]], i).has_value();
            if (independent) {
                if (auto sol = eb.express(target)) {
                    std::map<int, Rational> out;
                    for (const auto &[t, c] : *sol)
                        out[usable[pick[t]]] = c;
                    if (static_cast<int>(out.size()) == size)
                        return out;
                }
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace hopfkit
