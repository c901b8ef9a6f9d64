#include "hopfkit/system.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hopfkit {

namespace {

class PolyParser {
public:
    PolyParser(const std::string &text, const std::vector<std::string> &names) : s_(text), names_(names) {}

    RationalPoly parse()
    {
        RationalPoly p = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + " in \"" + s_ +
                                    "\": " + what);
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalPoly expr()
    {
        RationalPoly p(names_.size());
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        RationalPoly t = term();
        p += negative ? -t : t;
        while (true) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                break;
        }
        return p;
    }

    RationalPoly term()
    {
        RationalPoly p = factor();
        while (true) {
            if (eat('*')) {
                p = p * factor();
            } else if (eat('/')) {
                RationalPoly d = factor();
                if (d.size() != 1 || d.terms().begin()->first != Exponents(names_.size(), 0))
                    fail("division by a non-constant");
                p *= Rational(1) / d.terms().begin()->second;
            } else {
                break;
            }
        }
        return p;
    }

    long integer()
    {
        skip();
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("integer expected");
        long v = std::stol(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    RationalPoly power(RationalPoly base)
    {
        if (!eat('^'))
            return base;
        long e = integer();
        if (e >= 0)
            return base.pow(static_cast<int>(e));
        if (base.size() != 1)
            fail("negative power of a non-monomial");
        auto [ex, c] = *base.terms().begin();
        if (sgn(c) == 0)
            fail("negative power of zero");
        Exponents out(ex.size());
        for (std::size_t i = 0; i < ex.size(); ++i)
            out[i] = ex[i] * static_cast<int>(e);
        Rational k(1);
        for (long i = 0; i < -e; ++i)
            k /= c;
        return RationalPoly::monomial(out, k);
    }

    RationalPoly factor()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalPoly p = expr();
            if (!eat(')'))
                fail("')' expected");
            return power(std::move(p));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            Rational v(s_.substr(start, pos_ - start));
            return power(RationalPoly(names_.size(), v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == name)
                    return power(RationalPoly::variable(names_.size(), i));
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected character");
    }

    std::string s_;
    const std::vector<std::string> &names_;
    std::size_t pos_ = 0;
};

Rational json_rational(const nlohmann::json &v)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long>());
    throw std::invalid_argument("rationals must be integers or strings such as \"1/10\"");
}

} // namespace

RationalPoly parse_poly(const std::string &text, const std::vector<std::string> &names)
{
    return PolyParser(text, names).parse();
}

std::string SystemSpec::letters() const
{
    std::string s;
    for (const auto &g : generators)
        s += g.letter;
    return s;
}

std::vector<PolyVectorField> SystemSpec::letter_fields() const
{
    std::vector<PolyVectorField> out;
    for (const auto &g : generators)
        out.push_back(g.field);
    return out;
}

const SystemSpec::Generator &SystemSpec::generator(char letter) const
{
    for (const auto &g : generators)
        if (g.letter == letter)
            return g;
    throw std::invalid_argument(std::string("unknown letter ") + letter);
}

SystemSpec parse_system(const std::string &json_text)
{
    auto j = nlohmann::json::parse(json_text);
    SystemSpec spec;
    spec.name = j.value("name", "");
    spec.vars.state = j.at("variables").get<std::vector<std::string>>();
    if (j.contains("parameters"))
        spec.vars.params = j.at("parameters").get<std::vector<std::string>>();
    if (spec.vars.state.empty())
        throw std::invalid_argument("system needs at least one variable");
    spec.order = j.value("order", 3);
    auto names = spec.vars.names();
    for (const auto &g : j.at("generators")) {
        SystemSpec::Generator gen{0, 0, PolyVectorField(spec.vars.dimension(), spec.vars.nvars()), 0};
        auto letter = g.at("letter").get<std::string>();
        if (letter.size() != 1 || !std::isalpha(static_cast<unsigned char>(letter[0])))
            throw std::invalid_argument("letters must be single characters");
        gen.letter = letter[0];
        gen.harmonic = g.value("harmonic", 0);
        gen.frequency = g.value("frequency", 0);
        if (gen.harmonic < 0)
            throw std::invalid_argument("harmonics must be nonnegative integers");
        auto field = g.value("field", nlohmann::json::object());
        for (const auto &[var, text] : field.items()) {
            std::size_t i = spec.vars.index(var);
            if (i >= spec.vars.dimension())
                throw std::invalid_argument("parameter " + var + " cannot carry a velocity");
            gen.field[i] = parse_poly(text.get<std::string>(), names);
        }
        for (const auto &other : spec.generators)
            if (other.letter == gen.letter)
                throw std::invalid_argument("duplicate letter " + letter);
        spec.generators.push_back(std::move(gen));
    }
    if (spec.generators.empty())
        throw std::invalid_argument("system needs at least one generator");
    if (j.contains("parameter_values"))
        for (const auto &[k, v] : j.at("parameter_values").items()) {
            spec.vars.index(k);
            spec.parameter_values[k] = json_rational(v);
        }
    spec.initial.assign(spec.vars.dimension(), Rational(0));
    if (j.contains("initial"))
        for (const auto &[k, v] : j.at("initial").items()) {
            std::size_t i = spec.vars.index(k);
            if (i >= spec.vars.dimension())
                throw std::invalid_argument("initial value for a parameter");
            spec.initial[i] = json_rational(v);
        }
    return spec;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SystemSpec load_system(const std::string &path) { return parse_system(read_file(path)); }

GradedLieAlgebra parse_lie_algebra(const std::string &json_text)
{
    auto j = nlohmann::json::parse(json_text);
    std::vector<GradedLieAlgebra::Index> indices;
    for (const auto &g : j.at("generators")) {
        int d = g.at("degree").get<int>();
        if (d < 1)
            throw std::invalid_argument("generator degrees must be positive");
        indices.push_back({g.at("name").get<std::string>(), d});
    }
    GradedLieAlgebra lie(std::move(indices));
    auto index = [&](const std::string &name) {
        int i = lie.find(name);
        if (i < 0)
            throw std::invalid_argument("unknown generator " + name);
        return i;
    };
    if (j.contains("brackets"))
        for (const auto &b : j.at("brackets")) {
            int l = index(b.at("left").get<std::string>());
            int r = index(b.at("right").get<std::string>());
            for (const auto &[t, v] : b.at("value").items())
                lie.add_bracket(l, r, index(t), json_rational(v));
        }
    if (!lie.graded())
        throw std::invalid_argument("brackets must respect the grading");
    return lie;
}

} // namespace hopfkit
