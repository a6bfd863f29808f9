#include "optdeg/workbench.hpp"

#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "optdeg/conormal.hpp"
#include "optdeg/formulary.hpp"
#include "optdeg/parse.hpp"
#include "optdeg/tower.hpp"

namespace optdeg {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& message) { throw Error(Errc::schema, message); }

const json& require_key(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) schema_error(where + " must be an object");
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(where + "." + key + " is required");
    return *it;
}

const json* optional_key(const json& obj, const std::string& key) {
    if (!obj.is_object()) return nullptr;
    auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::int64_t as_int(const json& v, const std::string& what) {
    if (!v.is_number_integer()) schema_error(what + " must be an integer");
    return v.get<std::int64_t>();
}

std::int64_t as_int_at_least(const json& v, const std::string& what, std::int64_t lo) {
    auto x = as_int(v, what);
    if (x < lo) schema_error(what + " must be at least " + std::to_string(lo));
    return x;
}

std::string as_string(const json& v, const std::string& what) {
    if (!v.is_string()) schema_error(what + " must be a string");
    return v.get<std::string>();
}

std::vector<std::string> as_strings(const json& v, const std::string& what) {
    if (!v.is_array()) schema_error(what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(as_string(e, what + "[]"));
    return out;
}

std::vector<std::int64_t> as_ints(const json& v, const std::string& what) {
    if (!v.is_array()) schema_error(what + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& e : v) out.push_back(as_int(e, what + "[]"));
    return out;
}

const json& options_of(const json& job) {
    static const json empty = json::object();
    const json* o = optional_key(job, "options");
    if (!o) return empty;
    if (!o->is_object()) schema_error("options must be an object");
    return *o;
}

/// Normalized job: defaults filled in and command-line overrides applied, echoed verbatim into the report.
json normalize(const std::string& command, const json& job, const RunOptions& opts) {
    if (!job.is_object()) schema_error("job must be a JSON object");
    if (const json* v = optional_key(job, "schema_version"); v && as_int(*v, "schema_version") != kSchemaVersion)
        schema_error("unsupported schema_version " + v->dump());
    static const std::set<std::string> known = {"schema_version", "command", "ring",   "variety", "objective",
                                                "options",        "seed",    "trials", "tower"};
    for (const auto& [key, value] : job.items())
        if (!known.count(key)) schema_error("unknown job field '" + key + "'");
    if (const json* c = optional_key(job, "command"); c && as_string(*c, "command") != command)
        schema_error("job declares command '" + c->get<std::string>() + "' but '" + command + "' was requested");

    json out = job;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    if (opts.seed) out["seed"] = *opts.seed;
    if (!out.contains("seed")) out["seed"] = 0;
    if (!out["seed"].is_number_unsigned() && !(out["seed"].is_number_integer() && out["seed"].get<std::int64_t>() >= 0))
        schema_error("seed must be a non-negative integer");
    out["seed"] = out["seed"].get<std::uint64_t>();
    if (opts.trials) out["trials"] = *opts.trials;
    if (!out.contains("trials")) out["trials"] = 2;
    as_int_at_least(out["trials"], "trials", 1);
    if (opts.field) {
        if (!out.contains("ring")) out["ring"] = json::object();
        out["ring"]["field"] = *opts.field;
    }
    if (out.contains("ring")) {
        if (!out["ring"].is_object()) schema_error("ring must be an object");
        if (!out["ring"].contains("field")) out["ring"]["field"] = FieldSpec::prime().to_string();
        out["ring"]["field"] = FieldSpec::parse(as_string(out["ring"]["field"], "ring.field")).to_string();
    }
    if (command == "formula") {
        std::string kind;
        if (opts.formula_kind) kind = *opts.formula_kind;
        if (const json* k = optional_key(options_of(out), "kind")) {
            auto declared = as_string(*k, "options.kind");
            if (!kind.empty() && kind != declared) schema_error("formula kind '" + kind + "' conflicts with options.kind");
            kind = declared;
        }
        if (kind.empty()) schema_error("formula requires a kind");
        out["options"]["kind"] = kind;
    }
    return out;
}

// ---------------------------------------------------------------------------
// formula

std::int64_t option_int(const json& o, const std::string& key, std::int64_t lo = std::numeric_limits<std::int64_t>::min()) {
    return as_int_at_least(require_key(o, key, "options"), "options." + key, lo);
}

json run_formula(const json& job) {
    const json& o = options_of(job);
    const auto kind = o["kind"].get<std::string>();
    json r;
    r["kind"] = kind;
    if (kind == "polar") {
        auto delta = as_ints(require_key(o, "delta", "options"), "options.delta");
        r["value"] = polar_formula(option_int(o, "p"), delta, static_cast<int>(option_int(o, "n")));
    } else if (kind == "chern") {
        r["value"] = chern_formula(option_int(o, "p"), ChernDegrees{as_ints(require_key(o, "chern", "options"), "options.chern")});
    } else if (kind == "polar-from-chern") {
        r["delta"] = polar_from_chern(ChernDegrees{as_ints(require_key(o, "chern", "options"), "options.chern")},
                                      static_cast<int>(option_int(o, "n")));
    } else if (kind == "hypersurface") {
        r["value"] = hypersurface_formula(option_int(o, "d"), static_cast<int>(option_int(o, "n")), option_int(o, "p"));
    } else if (kind == "hypersurface-chern") {
        r["chern"] = hypersurface_chern(option_int(o, "d"), static_cast<int>(option_int(o, "n"))).degs;
    } else if (kind == "ci-bound") {
        r["value"] = ci_bound(as_ints(require_key(o, "degrees", "options"), "options.degrees"),
                              static_cast<int>(option_int(o, "n")), option_int(o, "p"));
    } else if (kind == "toric") {
        r["value"] = toric_formula(option_int(o, "p"), ToricVolumes{as_ints(require_key(o, "volumes", "options"), "options.volumes")});
    } else if (kind == "segre-veronese") {
        const json& f = require_key(o, "factors", "options");
        if (!f.is_array()) schema_error("options.factors must be an array of [n, omega] pairs");
        SegreVeroneseSpec spec;
        for (const auto& pair : f) {
            auto v = as_ints(pair, "options.factors[]");
            if (v.size() != 2) schema_error("options.factors entries must be [n, omega] pairs");
            spec.factors.emplace_back(static_cast<int>(v[0]), static_cast<int>(v[1]));
        }
        r["value"] = segre_veronese_formula(option_int(o, "p"), spec);
    } else if (kind == "veronese") {
        r["value"] = veronese_formula(static_cast<int>(option_int(o, "n")), option_int(o, "omega"), option_int(o, "p"));
    } else if (kind == "segre-p1") {
        r["value"] = segre_p1_formula(static_cast<int>(option_int(o, "n")), option_int(o, "p"));
    } else if (kind == "curve") {
        r["value"] = curve_formula(option_int(o, "d"), option_int(o, "genus"), option_int(o, "p"));
    } else if (kind == "plane-curve-affine") {
        r["value"] = plane_curve_affine_formula(option_int(o, "d"), option_int(o, "p"));
    } else if (kind == "euler") {
        auto mode = as_string(require_key(o, "mode", "options"), "options.mode");
        if (mode != "projective" && mode != "affine") schema_error("options.mode must be 'projective' or 'affine'");
        r["value"] = euler_formula(mode == "projective" ? EulerMode::projective : EulerMode::affine, option_int(o, "p"),
                                   static_cast<int>(option_int(o, "m")), option_int(o, "chi"));
    } else {
        schema_error("unknown formula kind '" + kind + "'");
    }
    return r;
}

// ---------------------------------------------------------------------------
// algebraic commands

template <class F>
struct Session {
    F field;
    RingPtr<F> ring;
    json job;
    GbOptions gb;
    std::uint64_t seed = 0;
    int trials = 2;
    std::vector<std::string> warnings;
    json timings = json::object();

    template <class Fn>
    auto timed(const std::string& stage, Fn&& fn) {
        auto start = std::chrono::steady_clock::now();
        auto result = fn();
        timings[stage] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

    Polynomial<F> poly(const std::string& text, const RingPtr<F>& r) const { return parse_polynomial<F>(text, r); }

    std::vector<Polynomial<F>> polys(const json& v, const std::string& what, const RingPtr<F>& r) const {
        std::vector<Polynomial<F>> out;
        for (const auto& s : as_strings(v, what)) out.push_back(poly(s, r));
        return out;
    }

    typename F::Element element(const std::string& text) const {
        auto rf = parse_rational_function<F>(text, ring);
        if (!rf.num.is_constant() || !rf.den.is_constant()) schema_error("'" + text + "' is not a constant");
        auto num = rf.num.is_zero() ? field.zero() : rf.num.leading_coeff();
        return field.div(num, rf.den.leading_coeff());
    }

    VarietySpec<F> variety() const {
        const json& v = require_key(job, "variety", "job");
        std::optional<int> codim;
        if (const json* c = optional_key(v, "codim")) codim = static_cast<int>(as_int(*c, "variety.codim"));
        if (const json* c = optional_key(v, "codim_override")) {
            if (codim) schema_error("variety.codim and variety.codim_override are mutually exclusive");
            codim = static_cast<int>(as_int(*c, "variety.codim_override"));
        }
        auto gens = polys(require_key(v, "generators", "variety"), "variety.generators", ring);
        if (gens.empty()) schema_error("variety.generators must be non-empty");
        if (const json* s = optional_key(v, "linear_change_seed")) {
            std::vector<std::size_t> all(ring->size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            auto change = random_linear_change(ring, all, static_cast<std::uint64_t>(as_int_at_least(*s, "variety.linear_change_seed", 0)));
            for (auto& g : gens) g = change.apply(g);
        }
        VarietySpec<F> X(ring, std::move(gens), codim);
        if (const json* s = optional_key(v, "singular_ideal"))
            X.singular_ideal = Ideal<F>(ring, polys(*s, "variety.singular_ideal", ring));
        return X;
    }

    unsigned pnorm() const {
        const json& o = require_key(job, "objective", "job");
        const json* p = optional_key(o, "pnorm");
        if (!p) schema_error("objective.pnorm is required for this command");
        return static_cast<unsigned>(as_int_at_least(*p, "objective.pnorm", 1));
    }

    std::optional<unsigned> pnorm_if_present() const {
        const json* o = optional_key(job, "objective");
        if (!o || !optional_key(*o, "pnorm")) return std::nullopt;
        return pnorm();
    }

    ObjectiveSpec<F> objective(const VarietySpec<F>& X) const {
        const json& o = require_key(job, "objective", "job");
        const bool has_p = optional_key(o, "pnorm") != nullptr;
        const json* grad = optional_key(o, "rational_gradient");
        if (has_p == (grad != nullptr)) schema_error("objective needs exactly one of pnorm or rational_gradient");
        if (has_p) return ObjectiveSpec<F>::pnorm(pnorm());
        auto r = data_ring(X);
        std::vector<RationalFunction<F>> g;
        for (const auto& s : as_strings(*grad, "objective.rational_gradient")) g.push_back(parse_rational_function<F>(s, r));
        return ObjectiveSpec<F>::rational(std::move(g));
    }

    std::vector<std::string> formatted(const std::vector<Polynomial<F>>& ps) const {
        std::vector<std::string> out;
        for (const auto& p : ps) out.push_back(format_polynomial(p));
        return out;
    }
};

json degree_report_json(const DegreeReport& r, bool with_timings) {
    json out;
    out["degree"] = r.degree;
    out["agreement"] = r.agreement;
    json trials = json::array();
    for (const auto& t : r.trials) {
        json tj{{"u", t.u}, {"count", t.count}, {"resamples", t.resamples}};
        if (with_timings) tj["seconds"] = t.seconds;
        trials.push_back(std::move(tj));
    }
    out["trials"] = std::move(trials);
    return out;
}

template <class F>
json cmd_degree(Session<F>& s, bool with_timings) {
    auto X = s.variety();
    auto f = s.objective(X);
    const json& o = options_of(s.job);
    if (const json* u = optional_key(o, "u")) {
        auto names = as_strings(*u, "options.u");
        if (names.size() != X.n()) throw Error(Errc::length_mismatch, "options.u must have one entry per variable");
        std::vector<typename F::Element> values;
        for (const auto& t : names) values.push_back(s.element(t));
        auto d = s.timed("degree", [&] { return degree_at(X, f, values, s.gb); });
        if (f.kind == ObjectiveSpec<F>::Kind::pnorm && f.p == 1) s.warnings.push_back("p = 1 is outside paper scope");
        json out{{"degree", d}};
        std::vector<std::string> echoed;
        for (const auto& v : values) echoed.push_back(format_element(s.field, v));
        out["u"] = echoed;
        return out;
    }
    auto report = s.timed("degree", [&] { return algebraic_degree(X, f, s.trials, s.seed, s.gb); });
    for (const auto& w : report.warnings) s.warnings.push_back(w);
    auto out = degree_report_json(report, with_timings);
    if (f.kind == ObjectiveSpec<F>::Kind::pnorm && codimension(X, s.gb) == static_cast<int>(X.generators.size()))
        out["ci_bound_holds"] = ci_degree_bound_check(X, f.p, report);
    return out;
}

template <class F>
json cmd_projective_degree(Session<F>& s, bool with_timings) {
    auto X = s.variety();
    auto p = s.pnorm();
    auto report = s.timed("projective_degree", [&] { return projective_pnorm_degree(X, p, s.trials, s.seed, s.gb); });
    for (const auto& w : report.warnings) s.warnings.push_back(w);
    return degree_report_json(report, with_timings);
}

template <class F>
json cmd_polar(Session<F>& s) {
    auto X = s.variety();
    json out;
    auto delta = s.timed("polar_classes", [&] { return polar_classes(X, s.seed, s.gb); });
    out["polar_classes"] = delta;
    if (auto p = s.pnorm_if_present())
        out["pnorm_degree"] = polar_formula(*p, delta, static_cast<int>(X.n()));
    return out;
}

template <class F>
json cmd_conormal(Session<F>& s) {
    auto X = s.variety();
    const json& o = options_of(s.job);
    unsigned power = 1;
    if (const json* v = optional_key(o, "s")) power = static_cast<unsigned>(as_int_at_least(*v, "options.s", 1));
    else if (auto p = s.pnorm_if_present()) {
        if (*p < 2) throw Error(Errc::invalid_argument, "conormal from pnorm needs p >= 2");
        power = *p - 1;
    }
    auto I = s.timed("conormal_ideal", [&] { return s_conormal_ideal(X, power, s.gb); });
    std::vector<std::string> x, y;
    for (std::size_t i = 0; i < X.n(); ++i) {
        x.push_back(X.ring->name(i));
        y.push_back(I.ring()->name(X.n() + i));
    }
    auto cls = s.timed("bidegree", [&] { return bidegree_class(I, x, y, s.seed, s.gb); });
    json table = json::array();
    for (const auto& [ab, c] : cls.coefficients) table.push_back({{"a", ab.first}, {"b", ab.second}, {"coefficient", c}});
    json out;
    out["s"] = power;
    out["ring"] = I.ring()->names();
    out["generators"] = s.formatted(I.generators());
    out["bidegree"] = std::move(table);
    return out;
}

template <class F>
json cmd_joint(Session<F>& s) {
    auto X = s.variety();
    auto p = s.pnorm();
    auto I = s.timed("joint_ideal", [&] { return joint_correspondence_ideal(X, p, s.gb); });
    json out;
    out["ring"] = I.ring()->names();
    out["generators"] = s.formatted(I.generators());
    out["dimension"] = s.timed("dimension", [&] { return dimension(I, s.gb); });
    return out;
}

template <class F>
json cmd_evolute(Session<F>& s) {
    auto X = s.variety();
    auto p = s.pnorm();
    auto ev = s.timed("evolute", [&] { return evolute_curve(X, p, s.seed, s.gb); });
    for (const auto& w : ev.warnings) s.warnings.push_back(w);
    json out;
    out["principal"] = ev.principal;
    out["polynomial"] = format_polynomial(ev.poly);
    out["ring"] = ev.poly.ring()->names();
    out["total_degree"] = ev.poly.total_degree();
    out["reduced_degree"] = ev.reduced_degree;
    if (!ev.principal) out["generators"] = s.formatted(ev.generators);
    return out;
}

template <class F>
json cmd_gb(Session<F>& s) {
    const json& o = options_of(s.job);
    std::vector<Polynomial<F>> gens;
    if (const json* g = optional_key(o, "ideal")) gens = s.polys(*g, "options.ideal", s.ring);
    else gens = s.variety().generators;
    MonomialOrderSpec order = MonomialOrderSpec::grevlex();
    if (const json* ord = optional_key(o, "order")) {
        if (ord->is_string() && *ord == "grevlex") order = MonomialOrderSpec::grevlex();
        else if (ord->is_string() && *ord == "lex") order = MonomialOrderSpec::lex();
        else if (ord->is_object() && ord->contains("block"))
            order = MonomialOrderSpec::block(as_strings((*ord)["block"], "options.order.block"));
        else schema_error("options.order must be 'grevlex', 'lex' or {\"block\": [...]}");
    }
    auto G = s.timed("groebner", [&] { return groebner_basis(Ideal<F>(s.ring, gens), order, s.gb); });
    json out;
    out["basis"] = s.formatted(G.basis);
    out["dimension"] = dimension(G.ideal(), s.gb);
    return out;
}

template <class F>
json cmd_tower_check(Session<F>& s) {
    const json& t = require_key(s.job, "tower", "job");
    const json& levels = require_key(t, "levels", "tower");
    if (!levels.is_array() || levels.empty()) schema_error("tower.levels must be a non-empty array");
    const auto& base = s.ring->names();
    auto source = tower_source_ring(s.field, base, levels.size());
    std::vector<int> degrees;
    std::vector<RationalFunction<F>> alphas;
    for (const auto& level : levels) {
        degrees.push_back(static_cast<int>(as_int(require_key(level, "degree", "tower.levels[]"), "tower.levels[].degree")));
        alphas.push_back(parse_rational_function<F>(as_string(require_key(level, "alpha", "tower.levels[]"), "tower.levels[].alpha"), source));
    }
    std::optional<TowerBranch> branch;
    if (const json* b = optional_key(t, "branch"))
        branch = TowerBranch{as_strings(require_key(*b, "t0", "tower.branch"), "tower.branch.t0"),
                             as_strings(require_key(*b, "a", "tower.branch"), "tower.branch.a")};
    auto tw = make_tower(source, base.size(), degrees, alphas, branch);
    ParametrizationSpec<F> pz;
    for (const auto& c : as_strings(require_key(t, "parametrization", "tower"), "tower.parametrization"))
        pz.coords.push_back(parse_rational_function<F>(c, source));
    std::optional<VarietySpec<F>> X;
    if (optional_key(s.job, "variety")) X = s.variety();

    auto sys = s.timed("system", [&] { return build_tower_system(tw, pz); });
    auto dim = s.timed("dimension", [&] { return tower_dimension_check(sys, X, s.gb); });
    json out;
    out["ring"] = sys.ring->names();
    out["E"] = s.formatted(sys.E);
    out["G"] = s.formatted(sys.G);
    out["GZ"] = format_polynomial(sys.GZ);
    out["dimension"] = dim.dimension;
    out["expected_dimension"] = dim.expected;
    out["pass"] = dim.pass;
    if (!dim.reason.empty()) out["reason"] = dim.reason;
    if (dim.dimension >= 0) out["jacobian_rank"] = s.timed("jacobian_rank", [&] { return tower_jacobian_rank(tw, pz, X, s.gb); });
    if (branch) out["branch"] = {{"t0", branch->t0}, {"a", branch->a}};
    return out;
}

// Each route either yields a value or a diagnostic; the verdict is AGREE only when every route succeeded and all values match.
template <class F>
json cmd_crossvalidate(Session<F>& s) {
    auto X = s.variety();
    auto p = s.pnorm();
    bool homogeneous = true;
    for (const auto& g : X.generators) homogeneous = homogeneous && g.is_homogeneous();

    json routes = json::array();
    json diagnostics = json::array();
    auto attempt = [&](const std::string& name, const std::function<std::int64_t()>& fn) {
        try {
            auto value = s.timed(name, fn);
            routes.push_back({{"route", name}, {"value", value}});
        } catch (const Error& e) {
            if (e.code() == Errc::budget_exceeded) throw;
            diagnostics.push_back({{"route", name}, {"error", errc_name(e.code())}, {"message", e.what()}});
        }
    };

    const auto n = static_cast<int>(X.n());
    const bool single = X.generators.size() == 1;
    const auto d = X.generators.front().total_degree();
    if (homogeneous) {
        attempt("projective_symbolic", [&] {
            auto r = projective_pnorm_degree(X, p, s.trials, s.seed, s.gb);
            if (!r.agreement) throw Error(Errc::inconsistent_slices, "projective trials disagree");
            return static_cast<std::int64_t>(r.degree);
        });
        attempt("polar_pipeline", [&] { return pnorm_degree_via_polar(X, p, s.seed, s.gb); });
        if (single && n >= 2) attempt("hypersurface_formula", [&] { return hypersurface_formula(d, n, p); });
    } else {
        attempt("affine_symbolic", [&] {
            auto r = algebraic_degree(X, ObjectiveSpec<F>::pnorm(p), s.trials, s.seed, s.gb);
            if (!r.agreement) throw Error(Errc::inconsistent_slices, "affine trials disagree");
            return static_cast<std::int64_t>(r.degree);
        });
        if (single && n == 2) attempt("plane_curve_formula", [&] { return plane_curve_affine_formula(d, p); });
    }
    if (X.codim && *X.codim != codimension(VarietySpec<F>(X.ring, X.generators), s.gb))
        diagnostics.push_back({{"route", "codimension"},
                               {"error", "CodimensionMismatch"},
                               {"message", "declared codim " + std::to_string(*X.codim) + " differs from computed"}});

    std::set<std::int64_t> values;
    for (const auto& r : routes) values.insert(r["value"].get<std::int64_t>());
    const bool agree = diagnostics.empty() && routes.size() >= 2 && values.size() == 1;
    if (routes.size() < 2 && diagnostics.empty()) diagnostics.push_back({{"route", "verdict"}, {"error", "TooFewRoutes"}, {"message", "fewer than two applicable routes"}});
    json out;
    out["mode"] = homogeneous ? "projective" : "affine";
    out["routes"] = std::move(routes);
    out["diagnostics"] = std::move(diagnostics);
    out["verdict"] = agree ? "AGREE" : "DISAGREE";
    return out;
}

template <class F>
json dispatch(const std::string& command, const json& job, const F& field, const RunOptions& opts, json& timings,
              std::vector<std::string>& warnings) {
    Session<F> s{field, nullptr, job, {}, job["seed"].get<std::uint64_t>(), job["trials"].get<int>(), {}, json::object()};
    if (opts.budget) s.gb.step_budget = *opts.budget;
    if (const json* b = optional_key(options_of(job), "budget"); b && !opts.budget)
        s.gb.step_budget = static_cast<std::uint64_t>(as_int_at_least(*b, "options.budget", 1));
    const json& ring = require_key(job, "ring", "job");
    s.ring = Ring<F>::make(field, as_strings(require_key(ring, "variables", "ring"), "ring.variables"));

    json result;
    if (command == "degree") result = cmd_degree(s, opts.timings);
    else if (command == "projective-degree") result = cmd_projective_degree(s, opts.timings);
    else if (command == "polar") result = cmd_polar(s);
    else if (command == "conormal") result = cmd_conormal(s);
    else if (command == "joint") result = cmd_joint(s);
    else if (command == "evolute") result = cmd_evolute(s);
    else if (command == "gb") result = cmd_gb(s);
    else if (command == "tower-check") result = cmd_tower_check(s);
    else if (command == "crossvalidate") result = cmd_crossvalidate(s);
    else schema_error("unknown command '" + command + "'");
    timings = std::move(s.timings);
    warnings = std::move(s.warnings);
    return result;
}

}  // namespace

json run_job(const std::string& command, const json& job, const RunOptions& options) {
    json normalized;
    try {
        normalized = normalize(command, job, options);
    } catch (const json::exception& e) {
        schema_error(e.what());
    }
    json result, timings = json::object();
    std::vector<std::string> warnings;
    auto start = std::chrono::steady_clock::now();
    try {
        if (command == "formula") {
            result = run_formula(normalized);
        } else {
            auto spec = FieldSpec::parse(as_string(require_key(require_key(normalized, "ring", "job"), "field", "ring"), "ring.field"));
            if (spec.kind == FieldSpec::Kind::rational)
                result = dispatch(command, normalized, RationalField{}, options, timings, warnings);
            else
                result = dispatch(command, normalized, PrimeField{spec.modulus}, options, timings, warnings);
        }
    } catch (const json::exception& e) {
        schema_error(e.what());
    } catch (const Error& e) {
        if (e.code() != Errc::schema && exit_code_for(e.code()) == 2)
            schema_error(std::string(errc_name(e.code())) + ": " + e.what());
        throw;
    }
    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = command;
    report["inputs"] = normalized;
    report["result"] = std::move(result);
    report["warnings"] = warnings;
    if (options.timings) {
        timings["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report["timings"] = std::move(timings);
    }
    return report;
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::schema:
        case Errc::syntax:
        case Errc::undeclared_variable:
        case Errc::negative_exponent:
        case Errc::zero_denominator:
            return 2;
        case Errc::budget_exceeded:
            return 4;
        default:
            return 3;
    }
}

json error_document(const Error& e) {
    return {{"schema_version", kSchemaVersion}, {"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
}

}  // namespace optdeg
