#include "hopfkit/series.hpp"

namespace hopfkit {

GradedBasis::GradedBasis(std::string unit_name)
{
    add(unit_name, 0);
}

int GradedBasis::add(const std::string &name, int degree)
{
    if (degree < 0)
        throw std::invalid_argument("negative degree for " + name);
    if (!names_.empty() && degree == 0)
        throw std::invalid_argument("only the unit has degree 0");
    if (!degrees_.empty() && degree < degrees_.back())
        throw std::invalid_argument("basis symbols must be added by nondecreasing degree");
    if (lookup_.count(name))
        throw std::invalid_argument("duplicate basis symbol " + name);
    int id = size();
    names_.push_back(name);
    degrees_.push_back(degree);
    if (static_cast<int>(by_degree_.size()) <= degree)
        by_degree_.resize(degree + 1);
    by_degree_[degree].push_back(id);
    lookup_.emplace(name, id);
    return id;
}

const std::vector<int> &GradedBasis::of_degree(int n) const
{
    static const std::vector<int> none;
    if (n < 0 || n >= static_cast<int>(by_degree_.size()))
        return none;
    return by_degree_[n];
}

int GradedBasis::find(const std::string &name) const
{
    auto it = lookup_.find(name);
    return it == lookup_.end() ? -1 : it->second;
}

int GradedBasis::id(const std::string &name) const
{
    int i = find(name);
    if (i < 0)
        throw std::out_of_range("unknown basis symbol " + name);
    return i;
}

namespace {

void add_entry(std::vector<MuEntry> &list, int target, const Rational &value)
{
    for (auto it = list.begin(); it != list.end(); ++it)
        if (it->index == target) {
            it->value += value;
            if (sgn(it->value) == 0)
                list.erase(it);
            return;
        }
    if (sgn(value) != 0)
        list.push_back({target, value});
}

void check_grading(const GradedBasis &b, int l, int r, int t)
{
    if (b.degree(t) != b.degree(l) + b.degree(r))
        throw std::invalid_argument("structure constant violates the grading");
}

} // namespace

void MuTable::add(int left, int right, int target, const Rational &value)
{
    if (left == GradedBasis::unit || right == GradedBasis::unit)
        throw std::invalid_argument("unit products are implicit in a mu table");
    check_grading(*basis_, left, right, target);
    auto &list = entries_[key(left, right)];
    add_entry(list, target, value);
    if (list.empty())
        entries_.erase(key(left, right));
}

const std::vector<MuEntry> *MuTable::find(int left, int right) const
{
    auto it = entries_.find(key(left, right));
    return it == entries_.end() ? nullptr : &it->second;
}

void EtaTable::add(int left, int right, int target, const Rational &value)
{
    if (left == GradedBasis::unit || right == GradedBasis::unit)
        throw std::invalid_argument("unit products are implicit in an eta table");
    check_grading(*basis_, left, right, target);
    if (left > right)
        std::swap(left, right);
    auto &list = entries_[{left, right}];
    add_entry(list, target, value);
    if (list.empty())
        entries_.erase({left, right});
}

const std::vector<MuEntry> *EtaTable::find(int left, int right) const
{
    if (left > right)
        std::swap(left, right);
    auto it = entries_.find({left, right});
    return it == entries_.end() ? nullptr : &it->second;
}

std::map<int, std::vector<std::pair<std::pair<int, int>, Rational>>> EtaTable::by_target() const
{
    std::map<int, std::vector<std::pair<std::pair<int, int>, Rational>>> out;
    for (const auto &[k, list] : entries_)
        for (const auto &e : list)
            out[e.index].push_back({k, e.value});
    return out;
}

} // namespace hopfkit
