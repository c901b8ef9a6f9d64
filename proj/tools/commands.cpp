#include "commands.hpp"

#include "hopfkit/hopf.hpp"
#include "hopfkit/numerics.hpp"
#include "hopfkit/pipelines.hpp"
#include "hopfkit/splitting.hpp"
#include "hopfkit/system.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hopfkit::cli {

using nlohmann::json;

std::string fnv1a(const std::string &bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json RunReport::to_json() const
{
    return {{"schema", report_schema},
            {"command", command},
            {"inputs", {{"digest", "fnv1a64:" + digest}, {"options", inputs}}},
            {"timing", {{"seconds", seconds}}},
            {"exit_code", exit_code},
            {"payload", payload}};
}

namespace {

template <class Entries> json records(const Entries &entries)
{
    json out = json::array();
    for (const auto &e : entries)
        out.push_back({{"degree", e.degree}, {"index", e.label}, {"coefficient", e.coefficient}});
    return out;
}

json serial_records(const std::vector<SeriesRecord> &recs)
{
    json out = json::array();
    for (const auto &r : recs)
        out.push_back({{"degree", r.degree}, {"index", r.index}, {"coefficient", r.coefficient}});
    return out;
}

void print_records(std::ostream &os, const std::string &title, const json &recs)
{
    os << title << " (" << recs.size() << " terms)\n";
    for (const auto &r : recs)
        os << "  " << r["degree"].get<int>() << "  " << r["index"].get<std::string>() << "  "
           << r["coefficient"].get<std::string>() << "\n";
}

json field_json(const PolyVectorField &f, const VariableSet &vars)
{
    json out = json::object();
    auto names = vars.names();
    for (std::size_t i = 0; i < f.dimension(); ++i)
        if (!f[i].is_zero())
            out[vars.state[i]] = to_string(f[i], names);
    return out;
}

json laurent_field_json(const LaurentField &f, const VariableSet &vars)
{
    json out = json::array();
    for (const auto &[k, g] : f)
        out.push_back({{"w_power", k}, {"components", field_json(g, vars)}});
    return out;
}

json predicate_json(const PredicateCheck &p) { return {{"holds", p.holds}, {"scope", p.scope}}; }

void require(const PredicateCheck &p, const std::string &what)
{
    if (!p.holds)
        throw std::logic_error("internal error: " + what + " fails its product rule (" + p.scope + ")");
}

struct Loaded {
    SystemSpec spec;
    int order;
};

Loaded load(const Options &opt)
{
    if (opt.input.empty())
        throw std::invalid_argument(opt.command + " needs a system file");
    auto spec = load_system(opt.input);
    int order = opt.order.value_or(spec.order);
    if (order < 1)
        throw std::invalid_argument("the order must be positive");
    return {std::move(spec), order};
}

void cmd_average(const Options &opt, RunReport &rep)
{
    auto [spec, order] = load(opt);
    auto backend = parse_backend(opt.backend);
    auto mode = parse_mode(opt.mode);
    auto r = run_average(spec, backend, mode, order, opt.cap, opt.seed);
    require(r.predicates, "beta_bar or kappa");
    auto &p = rep.payload;
    p["backend"] = to_string(backend);
    p["mode"] = to_string(mode);
    p["order"] = order;
    p["beta_bar"] = records(r.beta_bar);
    p["kappa"] = records(r.kappa);
    p["field"] = laurent_field_json(r.field, spec.vars);
    p["predicates"] = predicate_json(r.predicates);
    if (backend == Backend::trees) {
        p["survivors"] = r.survivors;
        p["independent"] = r.independent;
    }
    if (!r.compressed.empty())
        p["compressed"] = to_string(r.compressed);
    if (!r.dimensions.empty())
        p["dimensions"] = r.dimensions;

    std::ostringstream os;
    os << "average  backend " << to_string(backend) << "  mode " << to_string(mode) << "  order " << order << "\n";
    print_records(os, "beta_bar", p["beta_bar"]);
    print_records(os, "kappa", p["kappa"]);
    os << "field\n" << to_string(r.field, spec.vars) << "\n";
    if (backend == Backend::trees) {
        os << "survivors:";
        for (const auto &s : r.survivors)
            os << " " << s;
        os << "\nindependent:";
        for (const auto &s : r.independent)
            os << " " << s;
        os << "\n";
    }
    if (!r.compressed.empty())
        os << "compressed: " << to_string(r.compressed) << "\n";
    if (!r.dimensions.empty()) {
        os << "dimensions:";
        for (int d : r.dimensions)
            os << " " << d;
        os << "\n";
    }
    os << "predicates: " << (r.predicates.holds ? "hold" : "FAIL") << " (" << r.predicates.scope << ")\n";
    rep.text = os.str();
}

void cmd_chen(const Options &opt, RunReport &rep)
{
    auto [spec, order] = load(opt);
    auto backend = parse_backend(opt.backend);
    int cap = opt.cap > 0 ? opt.cap : default_cap(backend);
    if (order > cap)
        throw std::length_error("order " + std::to_string(order) + " exceeds the cap " + std::to_string(cap));
    std::optional<OscSeries> chen;
    PredicateCheck pred;
    if (backend == Backend::words) {
        auto wa = make_word_algebra(spec.alphabet(), order);
        chen = chen_series(word_curve(spec, wa), wa.mu, order);
        auto pairs = predicate_pairs(*wa.basis, order, opt.seed, pred.scope);
        pred.holds =
            product_rule_on(*chen, pairs, [&](int l, int r) { return shuffle_entries(*wa.basis, l, r); }, false);
    } else if (backend == Backend::trees) {
        auto ta = make_tree_algebra(spec.alphabet(), order);
        chen = chen_series(tree_curve(spec, ta), ta.mu, order);
        auto pairs = predicate_pairs(*ta.basis, order, opt.seed, pred.scope);
        pred.holds =
            product_rule_on(*chen, pairs, [&](int l, int r) { return forest_entries(*ta.basis, l, r); }, false);
    } else {
        throw std::invalid_argument("chen supports the words and trees backends");
    }
    require(pred, "the Chen series");
    auto &p = rep.payload;
    p["backend"] = to_string(backend);
    p["order"] = order;
    p["chen"] = serial_records(serialize(*chen));
    p["predicates"] = predicate_json(pred);
    std::ostringstream os;
    os << "chen  backend " << to_string(backend) << "  order " << order << "\n";
    print_records(os, "alpha(t)", p["chen"]);
    os << "predicates: hold (" << pred.scope << ")\n";
    rep.text = os.str();
}

std::string vtensor_string(const VTensor &t, const std::vector<std::string> &names)
{
    if (t.empty())
        return "0";
    std::string out;
    for (const auto &[ij, c] : t) {
        if (!out.empty())
            out += " + ";
        out += to_string(c) + "*" + names[ij.first] + "(x)" + names[ij.second];
    }
    return out;
}

void cmd_hopf(const Options &opt, RunReport &rep)
{
    int order = opt.order.value_or(4);
    GradedLieAlgebra lie;
    std::string source;
    if (!opt.builtin.empty()) {
        Alphabet alphabet(opt.alphabet);
        if (opt.builtin == "abelian")
            lie = abelian_algebra();
        else if (opt.builtin == "witt")
            lie = witt_algebra(order);
        else if (opt.builtin == "free-lie")
            lie = free_lie_algebra(alphabet, order);
        else if (opt.builtin == "grossman-larson")
            lie = grossman_larson_algebra(alphabet, order);
        else
            throw std::invalid_argument("unknown builtin '" + opt.builtin +
                                        "' (abelian, witt, free-lie, grossman-larson)");
        source = opt.builtin;
    } else {
        if (opt.input.empty())
            throw std::invalid_argument("hopf needs a structure-constant file or --builtin");
        lie = parse_lie_algebra(read_file(opt.input));
        source = opt.input;
    }
    if (!lie.jacobi(order))
        throw std::invalid_argument("the structure constants violate the Jacobi identity");
    auto h = coproduct_from_lie(lie, order);
    auto a = audit(h, &lie, order);
    if (!a.all()) {
        std::string what = "internal error: Hopf axiom audit failed:";
        for (const auto &f : a.failures)
            what += " " + f;
        throw std::logic_error(what);
    }

    auto &p = rep.payload;
    p["source"] = source;
    p["order"] = order;
    json gens = json::array();
    for (std::size_t i = 0; i < h.names.size(); ++i)
        gens.push_back({{"name", h.names[i]},
                        {"degree", h.degrees[i]},
                        {"hdelta", vtensor_string(h.hdelta.values[i], h.names)},
                        {"delta_bar", to_string(h.delta_bar[i], h.names)},
                        {"dynkin", to_string(h.dynkin[i], h.names)},
                        {"antipode", to_string(h.antipode_generators[i], h.names)}});
    p["generators"] = gens;
    json basis = json::array();
    for (int id = 1; id < h.basis->size(); ++id)
        basis.push_back({{"degree", h.basis->degree(id)}, {"index", h.basis->name(id)}});
    p["basis"] = basis;
    std::vector<std::pair<std::pair<int, int>, const std::vector<MuEntry> *>> mu;
    h.mu.for_each([&](int l, int r, const std::vector<MuEntry> &list) { mu.push_back({{l, r}, &list}); });
    std::sort(mu.begin(), mu.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    json mus = json::array();
    for (const auto &[lr, list] : mu) {
        json entries = json::array();
        for (const auto &e : *list)
            entries.push_back({{"index", h.basis->name(e.index)}, {"value", to_string(e.value)}});
        mus.push_back({{"left", h.basis->name(lr.first)}, {"right", h.basis->name(lr.second)}, {"entries", entries}});
    }
    p["mu"] = mus;
    p["audit"] = {{"coassociative", a.coassociative}, {"counit", a.counit},   {"multiplicative", a.multiplicative},
                  {"antipode", a.antipode},           {"duality", a.duality}, {"rho_identity", a.rho_identity},
                  {"all", a.all()}};

    std::ostringstream os;
    os << "hopf  " << source << "  order " << order << "\n";
    os << "generators (" << gens.size() << ")\n";
    for (const auto &g : gens)
        os << "  " << g["name"].get<std::string>() << "  degree " << g["degree"].get<int>() << "\n"
           << "    hdelta    " << g["hdelta"].get<std::string>() << "\n"
           << "    delta_bar " << g["delta_bar"].get<std::string>() << "\n"
           << "    dynkin    " << g["dynkin"].get<std::string>() << "\n"
           << "    antipode  " << g["antipode"].get<std::string>() << "\n";
    os << "basis: " << basis.size() << " monomials, mu: " << mus.size() << " nonzero pairs\n";
    for (const auto &m : mus) {
        os << "  " << m["left"].get<std::string>() << " * " << m["right"].get<std::string>() << " ->";
        for (const auto &e : m["entries"])
            os << " " << e["value"].get<std::string>() << " " << e["index"].get<std::string>();
        os << "\n";
    }
    os << "audit: coassociative counit multiplicative antipode duality rho = D*id: all pass\n";
    rep.text = os.str();
}

json blocks_json(const std::vector<ResonantBlock> &blocks)
{
    json out = json::array();
    for (const auto &b : blocks)
        out.push_back({{"degree", b.degree}, {"k", b.k}});
    return out;
}

void cmd_split(const Options &opt, RunReport &rep)
{
    auto [spec, order] = load(opt);
    auto wa = make_word_algebra(spec.alphabet(), order);
    std::map<char, int> freq;
    for (const auto &g : spec.generators)
        freq[g.letter] = g.frequency;
    auto action = word_action(*wa.basis, freq);
    SplitSeries bt(wa.basis, order);
    for (const auto &g : spec.generators)
        bt.add(std::string(1, g.letter), SplitCoef(1));
    auto target = strang_character(bt, action, wa.mu);
    auto g = modified_generator(target, action, wa.mu);

    PredicateCheck pred;
    auto pairs = predicate_pairs(*wa.basis, order, opt.seed, pred.scope);
    auto product = [&](int l, int r) { return shuffle_entries(*wa.basis, l, r); };
    pred.holds = product_rule_on(target.alpha, pairs, product, false) && product_rule_on(g.beta, pairs, product, true);
    require(pred, "the Strang character or beta^tau");

    auto &p = rep.payload;
    p["scheme"] = "strang";
    p["order"] = order;
    json table = json::array();
    for (const auto &[id, c] : g.beta.terms())
        table.push_back({{"degree", wa.basis->degree(id)}, {"index", wa.basis->name(id)}, {"coefficient", to_string(c)}});
    p["beta_tau"] = table;
    json first = json::array();
    for (const auto &gen : spec.generators) {
        std::string letter(1, gen.letter);
        const SplitCoef *c = g.beta.find(wa.basis->id(letter));
        SplitCoef value = c ? *c : SplitCoef();
        json e = {{"letter", letter}, {"k", gen.frequency}, {"coefficient", to_string(value)}};
        if (value == degree_one_factor(gen.frequency))
            e["closed_form"] = degree_one_factor_text(gen.frequency);
        first.push_back(e);
    }
    p["degree_one"] = first;
    p["resonance_set"] = blocks_json(g.blocks);
    p["predicates"] = predicate_json(pred);

    std::vector<ResonantBlock> hits;
    if (opt.omega_tau_over_2pi) {
        Rational r = parse_rational(*opt.omega_tau_over_2pi);
        for (const auto &b : g.blocks)
            if (is_resonant(b.k, r))
                hits.push_back(b);
        bool thrown = false;
        try {
            modified_generator(target, action, wa.mu, r);
        } catch (const ResonanceError &) {
            thrown = true;
        }
        if (thrown != !hits.empty())
            throw std::logic_error("internal error: resonance detection disagrees with the resonance set");
        p["omega_tau_over_2pi"] = to_string(r);
        p["resonant"] = blocks_json(hits);
        if (!hits.empty())
            rep.exit_code = resonance;
    }

    bool has_fields = false;
    for (const auto &gen : spec.generators)
        has_fields = has_fields || !gen.field.is_zero();
    json mf = json::array();
    if (has_fields) {
        WordMorphism psi(spec.alphabet(), spec.vars, spec.letter_fields());
        for (const auto &[c, f] : modified_field(g.beta, psi))
            if (!f.is_zero())
                mf.push_back({{"coefficient", to_string(c)}, {"field", field_json(f, spec.vars)}});
        p["modified_field"] = mf;
    }

    std::ostringstream os;
    os << "split  scheme strang  order " << order << "\n";
    os << "beta^tau (" << table.size() << " terms)\n";
    for (const auto &t : table)
        os << "  " << t["degree"].get<int>() << "  " << t["index"].get<std::string>() << "  "
           << t["coefficient"].get<std::string>() << "\n";
    os << "degree one\n";
    for (const auto &e : first) {
        os << "  " << e["letter"].get<std::string>() << "  k=" << e["k"].get<int>() << "  "
           << e["coefficient"].get<std::string>();
        if (e.contains("closed_form"))
            os << "  = " << e["closed_form"].get<std::string>();
        os << "\n";
    }
    os << "resonance set: k*w*tau in 2*pi*Z\\{0} for";
    for (const auto &b : g.blocks)
        os << " (degree " << b.degree << ", k " << b.k << ")";
    os << (g.blocks.empty() ? " no block\n" : "\n");
    if (opt.omega_tau_over_2pi) {
        os << "w*tau/(2*pi) = " << p["omega_tau_over_2pi"].get<std::string>() << ": ";
        if (hits.empty())
            os << "no resonance\n";
        else {
            os << "RESONANCE at";
            for (const auto &b : hits)
                os << " (degree " << b.degree << ", k " << b.k << ")";
            os << "\n";
        }
    }
    if (has_fields) {
        os << "modified field (" << mf.size() << " terms)\n";
        for (const auto &t : mf)
            os << "  " << t["coefficient"].get<std::string>() << " * " << t["field"].dump() << "\n";
    }
    os << "predicates: hold (" << pred.scope << ")\n";
    rep.text = os.str();
}

void cmd_validate(const Options &opt, RunReport &rep)
{
    auto [spec, order] = load(opt);
    auto mode = parse_mode(opt.mode);
    auto v = numerics::validate_averaging(spec, order, mode, opt.omegas, opt.horizon, opt.samples);
    double expected = -(order + 1);
    bool within = std::abs(v.slope - expected) <= opt.slope_tolerance;
    auto &p = rep.payload;
    p["order"] = order;
    p["mode"] = to_string(mode);
    p["horizon"] = opt.horizon;
    p["samples"] = opt.samples;
    json pts = json::array();
    for (const auto &pt : v.points)
        pts.push_back({{"omega", pt.omega}, {"max_error", pt.max_error}});
    p["points"] = pts;
    p["slope"] = v.slope;
    p["expected_slope"] = expected;
    p["tolerance"] = opt.slope_tolerance;
    p["within_tolerance"] = within;
    if (!within)
        rep.exit_code = slope_out_of_tolerance;

    std::ostringstream os;
    os << "validate  order " << order << "  mode " << to_string(mode) << "  horizon " << opt.horizon << "\n";
    for (const auto &pt : v.points) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "  w = %-8g  max error %.6e\n", pt.omega, pt.max_error);
        os << buf;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "slope %.4f, expected %.0f +- %.2f: %s\n", v.slope, expected,
                  opt.slope_tolerance, within ? "ok" : "OUT OF TOLERANCE");
    os << buf;
    rep.text = os.str();
}

json options_json(const Options &opt)
{
    json j = {{"command", opt.command}, {"input", opt.input}, {"mode", opt.mode}, {"backend", opt.backend},
              {"cap", opt.cap}};
    if (opt.order)
        j["order"] = *opt.order;
    if (opt.seed)
        j["seed"] = *opt.seed;
    if (!opt.builtin.empty()) {
        j["builtin"] = opt.builtin;
        j["alphabet"] = opt.alphabet;
    }
    if (opt.omega_tau_over_2pi)
        j["omega_tau_over_2pi"] = *opt.omega_tau_over_2pi;
    if (opt.command == "validate") {
        j["omegas"] = opt.omegas;
        j["horizon"] = opt.horizon;
        j["samples"] = opt.samples;
    }
    return j;
}

} // namespace

RunReport run(const Options &opt)
{
    RunReport rep;
    rep.command = opt.command;
    rep.inputs = options_json(opt);
    rep.payload = json::object();
    std::string data = opt.input.empty() ? "" : read_file(opt.input);
    rep.digest = fnv1a(data + '\n' + rep.inputs.dump());
    auto start = std::chrono::steady_clock::now();
    if (opt.command == "average")
        cmd_average(opt, rep);
    else if (opt.command == "chen")
        cmd_chen(opt, rep);
    else if (opt.command == "hopf")
        cmd_hopf(opt, rep);
    else if (opt.command == "split")
        cmd_split(opt, rep);
    else if (opt.command == "validate")
        cmd_validate(opt, rep);
    else
        throw std::invalid_argument("unknown command '" + opt.command + "'");
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace hopfkit::cli
