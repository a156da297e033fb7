#include "qmb/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "qmb/errors.hpp"
#include "qmb/oracle.hpp"
#include "qmb/rng.hpp"

namespace qmb {
namespace {

std::uint64_t derive_seed(std::uint64_t master, std::string_view label) {
    return master ^ hash_label(label);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json value_witness_json(const char* kind, const ValueWitness& w) {
    return json{{"kind", kind},
                {"x", point_to_json(w.x)},
                {"y", point_to_json(w.y)},
                {"value", w.value}};
}

json triangle_witness_json(const TriangleWitness& w) {
    return json{{"kind", "triangle"},
                {"x", point_to_json(w.x)},
                {"y", point_to_json(w.y)},
                {"z", point_to_json(w.z)},
                {"dXY", w.d_xy},
                {"dXZ", w.d_xz},
                {"dZY", w.d_zy},
                {"defect", w.defect()}};
}

std::optional<json> axiom_failure_json(const AxiomReport& rep) {
    if (!rep.reflexivity_failures.empty())
        return value_witness_json("reflexivity", rep.reflexivity_failures.front());
    if (!rep.negativity_failures.empty())
        return value_witness_json("negativity", rep.negativity_failures.front());
    if (!rep.triangle_failures.empty())
        return triangle_witness_json(rep.triangle_failures.front());
    if (!rep.separation_failures.empty())
        return value_witness_json("separation", rep.separation_failures.front());
    return std::nullopt;
}

json pair_witness_json(const PointValue& x, const PointValue& y, const char* key_a, double a,
                       const char* key_b, double b) {
    return json{{"x", point_to_json(x)}, {"y", point_to_json(y)}, {key_a, a}, {key_b, b}};
}

std::optional<RealMetric> conjugate_metric(RealMetric m) {
    switch (m) {
        case RealMetric::DN:
        case RealMetric::DN1:
        case RealMetric::DPlus:
        case RealMetric::DPlus1:
        case RealMetric::DU:
            return m;
        case RealMetric::RhoU:
            return RealMetric::RhoL;
        case RealMetric::RhoL:
            return RealMetric::RhoU;
        default:
            return std::nullopt;
    }
}

std::optional<RealMetric> symmetrize_metric(RealMetric m) {
    switch (m) {
        case RealMetric::DN:
        case RealMetric::DN1:
        case RealMetric::DPlus:
        case RealMetric::DPlus1:
        case RealMetric::DU:
            return m;
        case RealMetric::RhoU:
        case RealMetric::RhoL:
            return RealMetric::DN;
        default:
            return std::nullopt;
    }
}

std::optional<RealMetric> truncate1_metric(RealMetric m) {
    switch (m) {
        case RealMetric::DN:
            return RealMetric::DN1;
        case RealMetric::DPlus:
            return RealMetric::DPlus1;
        case RealMetric::SorgS:
            return RealMetric::SorgS1;
        case RealMetric::DN1:
        case RealMetric::DPlus1:
        case RealMetric::SorgS1:
            return m;
        default:
            return std::nullopt;
    }
}

json normalize_char_spec(const json& spec) {
    if (!spec.is_object() || !spec.contains("kind"))
        throw ConfigError("charSpec must be an object with a kind");
    const std::string kind = spec.at("kind").get<std::string>();
    if (kind == "relu" || kind == "abs") return json{{"kind", kind}};
    if (kind == "const")
        return json{{"kind", kind}, {"value", spec.at("value").get<double>()}};
    if (kind == "distanceFrom")
        return json{{"kind", kind}, {"point", point_to_json(point_from_json(spec.at("point")))}};
    throw ConfigError("unknown charSpec kind '" + kind + "'");
}

bool interval_base_kind(const std::string& kind) {
    return kind == "symmetric_intervals" || kind == "closed_symmetric" ||
           kind == "lower_rays" || kind == "upper_rays";
}

Interval base_shape(const std::string& kind, std::size_t n) {
    const double v = static_cast<double>(n);
    if (kind == "symmetric_intervals") return Interval::open(-v, v);
    if (kind == "closed_symmetric") return Interval::closed(-v, v);
    if (kind == "lower_rays") return Interval::lower_ray(v);
    return Interval::upper_ray(-v);
}

json normalize_base_spec(const json& spec) {
    if (!spec.is_object() || !spec.contains("kind"))
        throw ConfigError("baseSpec must be an object with a kind");
    const std::string kind = spec.at("kind").get<std::string>();
    if (interval_base_kind(kind)) return json{{"kind", kind}};
    if (kind == "metric_balls")
        return json{{"kind", kind},
                    {"center", point_to_json(point_from_json(spec.at("center")))}};
    if (kind == "attached") {
        json out{{"kind", kind}};
        if (spec.contains("id")) out["id"] = spec.at("id").get<std::string>();
        return out;
    }
    throw ConfigError("unknown baseSpec kind '" + kind + "'");
}

const NamedBornology& pick_bornology(const ZooEntry& entry, const std::string& selector) {
    if (entry.bornologies.empty())
        throw ConfigError("catalog space '" + entry.id + "' carries no bornology");
    if (selector.empty()) return entry.bornologies.front();
    for (const NamedBornology& nb : entry.bornologies)
        if (nb.id == selector) return nb;
    throw ConfigError("catalog space '" + entry.id + "' has no bornology '" + selector + "'");
}

// The config's distance function, rebuilt over a narrower sampling
// window; used where an index scan must stay within budget.
QPSpace windowed_copy(const QPSpace& space, double lo, double hi) {
    DistFn dist = [space](const PointValue& x, const PointValue& y) {
        return space.dist_signed(x, y);
    };
    return QPSpace(space.label(), space.carrier().with_window(lo, hi), std::move(dist));
}

}  // namespace

ComposedSpace compose_space(const json& expr) {
    if (expr.is_string()) {
        const std::string id = expr.get<std::string>();
        const ZooEntry& entry = zoo_entry(id);
        return ComposedSpace{entry.space, id, real_metric_of(id), entry.separating(),
                             json{{"zoo", id}}};
    }
    if (!expr.is_object() || expr.size() != 1)
        throw ConfigError("space expression must be a catalog id or a one-key object: " +
                          expr.dump());
    const std::string op = expr.begin().key();
    const json& arg = expr.begin().value();
    if (op == "zoo") {
        if (!arg.is_string()) throw ConfigError("zoo() takes a catalog id string");
        return compose_space(arg);
    }
    if (op == "conjugate") {
        ComposedSpace inner = compose_space(arg);
        const auto metric =
            inner.real_metric ? conjugate_metric(*inner.real_metric) : std::nullopt;
        return ComposedSpace{conjugate(inner.space), inner.zoo_id, metric, inner.separating,
                             json{{"conjugate", inner.expr}}};
    }
    if (op == "symmetrize") {
        ComposedSpace inner = compose_space(arg);
        const auto metric =
            inner.real_metric ? symmetrize_metric(*inner.real_metric) : std::nullopt;
        return ComposedSpace{symmetrize(inner.space), inner.zoo_id, metric, inner.separating,
                             json{{"symmetrize", inner.expr}}};
    }
    if (op == "truncate") {
        ComposedSpace inner = compose_space(arg.at("of"));
        const double cap = arg.at("cap").get<double>();
        if (!(cap > 0.0) || !std::isfinite(cap))
            throw ConfigError("truncate cap must be positive and finite");
        const auto metric = (cap == 1.0 && inner.real_metric)
                                ? truncate1_metric(*inner.real_metric)
                                : std::nullopt;
        return ComposedSpace{truncate(inner.space, cap), inner.zoo_id, metric, inner.separating,
                             json{{"truncate", {{"of", inner.expr}, {"cap", cap}}}}};
    }
    if (op == "fromChar") {
        ComposedSpace inner = compose_space(arg.at("of"));
        const json cspec = normalize_char_spec(arg.at("char"));
        const CharFunction f = char_from_spec(inner.space, cspec);
        const bool symmetric = arg.value("symmetric", false);
        QPSpace out = symmetric ? metric_from_char(inner.space, f)
                                : quasimetric_from_char(inner.space, f);
        return ComposedSpace{
            std::move(out), inner.zoo_id, std::nullopt, inner.separating,
            json{{"fromChar",
                  {{"of", inner.expr}, {"char", cspec}, {"symmetric", symmetric}}}}};
    }
    if (op == "dg") {
        ComposedSpace inner = compose_space(arg.at("of"));
        const json cspec = normalize_char_spec(arg.at("char"));
        const CharFunction g = char_from_spec(inner.space, cspec);
        return ComposedSpace{dg_from_char(inner.space, g), inner.zoo_id, std::nullopt,
                             inner.separating,
                             json{{"dg", {{"of", inner.expr}, {"char", cspec}}}}};
    }
    if (op == "rhoFromChi") {
        ComposedSpace inner = compose_space(arg.at("of"));
        const json bspec = normalize_base_spec(arg.at("base"));
        const double delta = arg.at("delta").get<double>();
        if (!(delta > 0.0) || !std::isfinite(delta))
            throw ConfigError("rhoFromChi delta must be positive and finite");
        const BaseSequence base = base_from_spec(inner, bspec);
        ChiOptions copt;
        copt.seed = derive_seed(0, "expression-chi");
        const ChiConstruction chi = chi_from_base(inner.space, base, delta, copt);
        return ComposedSpace{
            rho_from_chi(chi), inner.zoo_id, std::nullopt, inner.separating,
            json{{"rhoFromChi", {{"of", inner.expr}, {"base", bspec}, {"delta", delta}}}}};
    }
    if (op == "finite") {
        if (!arg.is_string()) throw ConfigError("finite() takes a digraph file path");
        const std::string path = arg.get<std::string>();
        const FiniteQPSpace space = closure(WeightedDigraph::from_text(slurp(path)));
        return ComposedSpace{as_qpspace(space, "finite:" + path), std::nullopt, std::nullopt,
                             false, json{{"finite", path}}};
    }
    throw ConfigError("unknown space constructor '" + op + "'");
}

CharFunction char_from_spec(const QPSpace& space, const json& spec) {
    const json norm = normalize_char_spec(spec);
    const std::string kind = norm.at("kind").get<std::string>();
    if (kind == "relu" || kind == "abs") {
        if (space.carrier().kind() != CarrierKind::Real)
            throw ConfigError("charSpec '" + kind + "' needs a real carrier");
        if (kind == "relu")
            return CharFunction("relu", [](const PointValue& p) {
                return std::max(p.as_real(), 0.0);
            });
        return CharFunction("abs",
                            [](const PointValue& p) { return std::fabs(p.as_real()); });
    }
    if (kind == "const") {
        const double v = norm.at("value").get<double>();
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ConfigError("const charSpec needs a finite nonnegative value");
        return CharFunction("const", [v](const PointValue&) { return v; });
    }
    const PointValue x0 = point_from_json(norm.at("point"));
    if (!space.carrier().contains(x0))
        throw ConfigError("distanceFrom point lies outside the carrier");
    return forcing_from_point(space, x0);
}

BaseSequence base_from_spec(const ComposedSpace& space, const json& spec) {
    const json norm = normalize_base_spec(spec);
    const std::string kind = norm.at("kind").get<std::string>();
    const Carrier carrier = space.space.carrier();
    if (interval_base_kind(kind)) {
        if (carrier.kind() != CarrierKind::Real)
            throw ConfigError("baseSpec '" + kind + "' needs a real carrier");
        auto shape = [kind](std::size_t n) { return base_shape(kind, n); };
        if (space.real_metric)
            return interval_base(*space.real_metric, carrier, kind, shape);
        return BaseSequence(kind, [carrier, shape](std::size_t n) {
            const Interval iv = shape(n);
            if (iv.is_empty()) return SetDescriptor::empty_set(iv.str());
            return interval_probe(iv, carrier);
        });
    }
    if (kind == "metric_balls") {
        const PointValue center = point_from_json(norm.at("center"));
        if (!carrier.contains(center))
            throw ConfigError("metric_balls center lies outside the carrier");
        const QPSpace d = space.space;
        return BaseSequence("metric_balls", [d, center, carrier](std::size_t n) {
            const std::string label = "ball(" + std::to_string(n) + ")";
            if (n == 0) return SetDescriptor::empty_set(label);
            const double r = static_cast<double>(n);
            SetDescriptor s(label, [d, center, r](const PointValue& p) {
                return d.carrier().shape_ok(p) && d.dist(center, p) < r;
            });
            s.with_sampler([d, center, r, carrier](Rng& rng) {
                for (int attempt = 0; attempt < 64; ++attempt) {
                    const PointValue cand = attempt % 2 == 0
                                                ? carrier.perturb(center, r * 0.5, rng)
                                                : carrier.sample(rng);
                    if (d.dist(center, cand) < r) return cand;
                }
                return center;
            });
            return s;
        });
    }
    if (!space.zoo_id)
        throw ConfigError("attached baseSpec needs a catalog space in the expression");
    const ZooEntry& entry = zoo_entry(*space.zoo_id);
    const NamedBornology& nb = pick_bornology(entry, norm.value("id", std::string()));
    const BaseSequence inner = nb.bornology.base();
    return BaseSequence(
        "shifted:" + inner.label(),
        [inner](std::size_t n) {
            if (n == 0) return SetDescriptor::empty_set("shifted(0)");
            return inner.at(n - 1);
        },
        [inner](std::size_t i, std::size_t j) {
            if (i == 0) return Inclusion::Subset;
            if (j == 0) return Inclusion::Unknown;
            return inner.inclusion(i - 1, j - 1);
        });
}

SuiteConfig SuiteConfig::from_json(const json& j) {
    try {
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        static const std::set<std::string> known = {
            "suite", "target", "second",    "samples", "seed",   "tol",
            "grids", "delta",  "char",      "base",    "bornology", "budgets"};
        for (const auto& item : j.items())
            if (!known.count(item.key()))
                throw ConfigError("unknown config field '" + item.key() + "'");
        SuiteConfig c;
        c.eps_grid = default_dyadic_grid();
        c.delta_grid = default_dyadic_grid();
        if (j.contains("suite")) c.suite = j.at("suite").get<std::string>();
        if (j.contains("target")) c.target = j.at("target");
        if (j.contains("second")) c.second = j.at("second");
        if (j.contains("samples")) {
            c.samples = j.at("samples").get<std::size_t>();
            if (c.samples == 0) throw ConfigError("samples must be positive");
        }
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("tol")) {
            c.tol = j.at("tol").get<double>();
            if (!(c.tol >= 0.0) || !std::isfinite(c.tol))
                throw ConfigError("tol must be finite and nonnegative");
        }
        if (j.contains("grids")) {
            const json& g = j.at("grids");
            auto parse_grid = [](const json& arr, const char* what) {
                std::vector<double> grid = arr.get<std::vector<double>>();
                if (grid.empty()) throw ConfigError(std::string(what) + " grid is empty");
                for (double v : grid)
                    if (!(v > 0.0) || !std::isfinite(v))
                        throw ConfigError(std::string(what) + " grid values must be positive");
                std::sort(grid.rbegin(), grid.rend());
                return grid;
            };
            if (g.is_array()) {
                c.eps_grid = parse_grid(g, "eps");
                c.delta_grid = c.eps_grid;
            } else {
                if (g.contains("eps")) c.eps_grid = parse_grid(g.at("eps"), "eps");
                if (g.contains("delta")) c.delta_grid = parse_grid(g.at("delta"), "delta");
            }
            c.grids_explicit = true;
        }
        if (j.contains("delta")) {
            c.delta = j.at("delta").get<double>();
            if (!(c.delta > 0.0) || !std::isfinite(c.delta))
                throw ConfigError("delta must be positive and finite");
        }
        if (j.contains("char")) c.char_spec = normalize_char_spec(j.at("char"));
        if (j.contains("base")) c.base_spec = normalize_base_spec(j.at("base"));
        if (j.contains("bornology")) c.bornology = j.at("bornology").get<std::string>();
        if (j.contains("budgets")) {
            const json& b = j.at("budgets");
            if (b.contains("index")) c.index_budget = b.at("index").get<std::size_t>();
            if (b.contains("radius")) c.radius_budget = b.at("radius").get<double>();
            if (c.index_budget == 0) throw ConfigError("index budget must be positive");
            if (!(c.radius_budget > 0.0)) throw ConfigError("radius budget must be positive");
        }
        return c;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
}

json SuiteConfig::to_json() const {
    json out;
    out["suite"] = suite;
    out["target"] = target;
    if (!second.is_null()) out["second"] = second;
    out["samples"] = samples;
    out["seed"] = seed;
    out["tol"] = tol;
    out["grids"] = json{{"eps", eps_grid}, {"delta", delta_grid}};
    out["delta"] = delta;
    if (!char_spec.is_null()) out["char"] = char_spec;
    if (!base_spec.is_null()) out["base"] = base_spec;
    if (!bornology.empty()) out["bornology"] = bornology;
    out["budgets"] = json{{"index", index_budget}, {"radius", radius_budget}};
    return out;
}

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {
        "axioms",         "conjugation",        "metrization-4.7",   "metrization-6.5",
        "bornology",      "properness",         "uniform-equivalence", "locally-identical",
        "cb-base-8.5",    "oracle"};
    return ids;
}

namespace {

struct SuiteContext {
    const SuiteConfig& cfg;
    VerificationReport& report;

    std::uint64_t seed(std::string_view check) const {
        return derive_seed(cfg.seed, cfg.suite + ":" + std::string(check));
    }
    Rng rng(std::string_view check) const { return Rng(seed(check)); }
};

// Wraps one check; library errors other than ConfigError mark it aborted
// instead of killing the run.
template <typename Fn>
void guarded(SuiteContext& ctx, const std::string& id, Fn&& body) {
    try {
        body();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        ctx.report.add(CheckResult::aborted(id, json{{"error", e.what()}}));
    }
}

std::vector<std::pair<PointValue, PointValue>> pair_pool(SuiteContext& ctx,
                                                         const Carrier& carrier,
                                                         std::string_view check,
                                                         std::size_t count) {
    Rng rng = ctx.rng(check);
    return sample_pairs(carrier, count, {1.0, 0x1p-4, 0x1p-8}, rng);
}

void add_axiom_checks(SuiteContext& ctx, const AxiomReport& rep, bool separating) {
    const json metrics{{"triples", rep.triples_checked},
                       {"distances", rep.distances_evaluated}};
    auto value_check = [&](const std::string& id, const std::vector<ValueWitness>& fails,
                           const char* kind) {
        if (fails.empty())
            ctx.report.add(CheckResult::pass(id, metrics));
        else
            ctx.report.add(CheckResult::fail(id, value_witness_json(kind, fails.front()),
                                             metrics));
    };
    value_check("reflexivity", rep.reflexivity_failures, "reflexivity");
    value_check("negativity", rep.negativity_failures, "negativity");
    if (rep.triangle_failures.empty())
        ctx.report.add(CheckResult::pass("triangle", metrics));
    else
        ctx.report.add(CheckResult::fail(
            "triangle", triangle_witness_json(rep.triangle_failures.front()), metrics));
    if (separating) value_check("separation", rep.separation_failures, "separation");
}

void suite_axioms(SuiteContext& ctx, const ComposedSpace& cs) {
    AxiomCheckOptions opt;
    opt.samples = ctx.cfg.samples;
    opt.tol = ctx.cfg.tol;
    opt.seed = ctx.seed("axioms");
    opt.require_separation = cs.separating;
    add_axiom_checks(ctx, check_axioms(cs.space, opt), cs.separating);
}

void suite_conjugation(SuiteContext& ctx, const ComposedSpace& cs) {
    const std::size_t count = std::max<std::size_t>(ctx.cfg.samples, 1000);
    const auto pairs = pair_pool(ctx, cs.space.carrier(), "pairs", count);
    const QPSpace conj = conjugate(cs.space);
    const QPSpace conj2 = conjugate(conj);
    const QPSpace sym = symmetrize(cs.space);

    guarded(ctx, "involution", [&] {
        for (const auto& [x, y] : pairs) {
            const double d = cs.space.dist(x, y);
            const double dd = conj2.dist(x, y);
            if (dd != d) {
                ctx.report.add(CheckResult::fail(
                    "involution", pair_witness_json(x, y, "d", d, "doubleConjugate", dd),
                    json{{"pairs", pairs.size()}}));
                return;
            }
        }
        ctx.report.add(CheckResult::pass("involution", json{{"pairs", pairs.size()}}));
    });

    guarded(ctx, "symmetrize", [&] {
        for (const auto& [x, y] : pairs) {
            const double expect = std::max(cs.space.dist(x, y), cs.space.dist(y, x));
            const double got = sym.dist(x, y);
            const double flipped = sym.dist(y, x);
            if (got != expect || got != flipped) {
                ctx.report.add(CheckResult::fail(
                    "symmetrize", pair_witness_json(x, y, "expected", expect, "got", got),
                    json{{"pairs", pairs.size()}}));
                return;
            }
        }
        ctx.report.add(CheckResult::pass("symmetrize", json{{"pairs", pairs.size()}}));
    });

    const bool plain_zoo = cs.expr.contains("zoo");
    if (!plain_zoo || !cs.zoo_id) return;
    const ZooEntry& entry = zoo_entry(*cs.zoo_id);
    if (entry.conjugate_partner) {
        guarded(ctx, "conjugate-partner", [&] {
            const QPSpace partner = zoo_entry(*entry.conjugate_partner).space;
            for (const auto& [x, y] : pairs) {
                const double got = conj.dist(x, y);
                const double expect = partner.dist(x, y);
                if (got != expect) {
                    ctx.report.add(CheckResult::fail(
                        "conjugate-partner",
                        pair_witness_json(x, y, "partner", expect, "conjugate", got),
                        json{{"pairs", pairs.size()}, {"partner", *entry.conjugate_partner}}));
                    return;
                }
            }
            ctx.report.add(CheckResult::pass(
                "conjugate-partner",
                json{{"pairs", pairs.size()}, {"partner", *entry.conjugate_partner}}));
        });
    }
    if (entry.symmetrize_partner) {
        guarded(ctx, "symmetrize-partner", [&] {
            const QPSpace partner = zoo_entry(*entry.symmetrize_partner).space;
            for (const auto& [x, y] : pairs) {
                const double got = sym.dist(x, y);
                const double expect = partner.dist(x, y);
                if (std::fabs(got - expect) > 1e-12) {
                    ctx.report.add(CheckResult::fail(
                        "symmetrize-partner",
                        pair_witness_json(x, y, "partner", expect, "symmetrized", got),
                        json{{"pairs", pairs.size()}, {"partner", *entry.symmetrize_partner}}));
                    return;
                }
            }
            ctx.report.add(CheckResult::pass(
                "symmetrize-partner",
                json{{"pairs", pairs.size()}, {"partner", *entry.symmetrize_partner}}));
        });
    }
}

// Hand-listed interval probes for the bounded-iff-sup-finite contract.
const std::vector<Interval>& probe_intervals() {
    static const std::vector<Interval> probes = {
        Interval::closed(0, 1),
        Interval::closed(-1, 0),
        Interval::open(-5, 5),
        Interval::closed(-100, 100),
        Interval::closed(2, 3),
        Interval::open(-0.5, 0.5),
        Interval::closed(-2000, -1000),
        Interval::closed(700, 900),
        Interval::lower_ray(0),
        Interval::lower_ray(-3),
        Interval::lower_ray(1000),
        Interval::lower_ray(-2000),
        Interval::upper_ray(0),
        Interval::upper_ray(-50),
        Interval::upper_ray(2000),
        Interval::upper_ray(9000),
        Interval::upper_ray(-3000),
        Interval::upper_ray(5, false),
        Interval{-std::numeric_limits<double>::infinity(),
                 std::numeric_limits<double>::infinity(), false, false},
        Interval::closed(-9500, -9000),
    };
    return probes;
}

void suite_metrization_47(SuiteContext& ctx, const ComposedSpace& cs) {
    const json cspec =
        ctx.cfg.char_spec.is_null() ? json{{"kind", "relu"}} : ctx.cfg.char_spec;
    const std::string char_kind = cspec.at("kind").get<std::string>();
    const CharFunction f = char_from_spec(cs.space, cspec);
    const QPSpace base_d = truncate(cs.space, 1.0);
    const QPSpace df = quasimetric_from_char(base_d, f);

    guarded(ctx, "axioms", [&] {
        AxiomCheckOptions opt;
        opt.samples = ctx.cfg.samples;
        opt.tol = ctx.cfg.tol;
        opt.seed = ctx.seed("axioms");
        opt.require_separation = cs.separating;
        const AxiomReport rep = check_axioms(df, opt);
        const json metrics{{"triples", rep.triples_checked},
                           {"distances", rep.distances_evaluated}};
        if (const auto w = axiom_failure_json(rep))
            ctx.report.add(CheckResult::fail("axioms", *w, metrics));
        else
            ctx.report.add(CheckResult::pass("axioms", metrics));
    });

    const bool real_carrier = cs.space.carrier().kind() == CarrierKind::Real;
    if (real_carrier && char_kind != "distanceFrom") {
        guarded(ctx, "bounded-iff-sup-finite", [&] {
            BoundednessOptions opt;
            opt.centers = {PointValue::real(0), PointValue::real(1), PointValue::real(-1),
                           PointValue::real(8), PointValue::real(-8)};
            opt.max_radius = ctx.cfg.radius_budget;
            opt.seed = ctx.seed("bounded-iff-sup-finite");
            std::optional<json> witness;
            bool inconclusive = false;
            std::size_t checked = 0;
            for (const Interval& iv : probe_intervals()) {
                const bool sup_infinite =
                    char_kind == "const"
                        ? false
                        : (char_kind == "relu" ? std::isinf(iv.hi)
                                               : std::isinf(iv.hi) || std::isinf(iv.lo));
                const SetDescriptor probe = interval_probe(iv, cs.space.carrier());
                const BoundednessResult res = is_d_bounded(df, probe, opt);
                ++checked;
                if (res.status == Boundedness::Inconclusive) {
                    inconclusive = true;
                    witness = json{{"interval", iv.str()}, {"status", "inconclusive"},
                                   {"note", res.note}};
                    break;
                }
                const bool bounded = res.status == Boundedness::Bounded;
                if (bounded == sup_infinite) {
                    witness = json{{"interval", iv.str()},
                                   {"supFinite", !sup_infinite},
                                   {"verdict", boundedness_name(res.status)}};
                    break;
                }
            }
            const json metrics{{"probes", checked}};
            if (!witness)
                ctx.report.add(CheckResult::pass("bounded-iff-sup-finite", metrics));
            else if (inconclusive)
                ctx.report.add(
                    CheckResult::inconclusive("bounded-iff-sup-finite", *witness, metrics));
            else
                ctx.report.add(CheckResult::fail("bounded-iff-sup-finite", *witness, metrics));
        });
    }

    if (cs.real_metric == RealMetric::DN && char_kind == "relu") {
        guarded(ctx, "metric-reproduction", [&] {
            const QPSpace mdf = metric_from_char(base_d, f);
            const QPSpace ref = zoo_entry("d_u").space;
            const std::size_t count = std::max<std::size_t>(ctx.cfg.samples, 1000);
            const auto pairs = pair_pool(ctx, cs.space.carrier(), "metric-reproduction", count);
            for (const auto& [x, y] : pairs) {
                const double got = mdf.dist(x, y);
                const double expect = ref.dist(x, y);
                if (got != expect) {
                    ctx.report.add(CheckResult::fail(
                        "metric-reproduction",
                        pair_witness_json(x, y, "reference", expect, "constructed", got),
                        json{{"pairs", pairs.size()}}));
                    return;
                }
            }
            ctx.report.add(
                CheckResult::pass("metric-reproduction", json{{"pairs", pairs.size()}}));
        });
    }

    const json bspec =
        ctx.cfg.base_spec.is_null() ? json{{"kind", "symmetric_intervals"}} : ctx.cfg.base_spec;
    const std::string base_kind = bspec.at("kind").get<std::string>();
    const bool euclidean =
        cs.real_metric &&
        (*cs.real_metric == RealMetric::DN || *cs.real_metric == RealMetric::DN1 ||
         *cs.real_metric == RealMetric::DU || *cs.real_metric == RealMetric::DPlus ||
         *cs.real_metric == RealMetric::DPlus1);
    if (!euclidean || (base_kind != "symmetric_intervals" && base_kind != "closed_symmetric"))
        return;
    const RealMetric m = *cs.real_metric;
    const Carrier carrier = cs.space.carrier();
    PsiOracleFn oracles = [m, carrier](std::size_t n) {
        const double a = static_cast<double>(n);
        SetDescriptor cl = n == 0 ? SetDescriptor::empty_set("closure(0)")
                                  : interval_set(m, Interval::closed(-a, a), carrier);
        const double b = a + 1.0;
        SetDescriptor outer("outside(-" + std::to_string(b) + "," + std::to_string(b) + ")",
                            [b](const PointValue& p) {
                                const double x = p.as_real();
                                return !(x > -b && x < b);
                            });
        outer.with_dist_to([m, b](const PointValue& p) {
            const double x = p.as_real();
            return std::min(interval_dist_to(m, Interval::lower_ray(-b), x),
                            interval_dist_to(m, Interval::upper_ray(b), x));
        });
        return PsiBandOracles{std::move(cl), std::move(outer)};
    };
    const QPSpace psi_space = windowed_copy(cs.space, -32.0, 32.0);
    const CharFunction psi = psi_from_base(psi_space, oracles);

    guarded(ctx, "psi-staircase", [&] {
        Rng rng = ctx.rng("psi-staircase");
        std::vector<PointValue> points = psi_space.carrier().canonical_points(16);
        for (std::size_t i = 0; i < 64; ++i) points.push_back(psi_space.carrier().sample(rng));
        for (const PointValue& p : points) {
            const double v = psi(p);
            if (v < 1.0 - ctx.cfg.tol) {
                ctx.report.add(CheckResult::fail(
                    "psi-staircase",
                    json{{"point", point_to_json(p)}, {"psi", v}, {"floor", 1.0}},
                    json{{"points", points.size()}}));
                return;
            }
        }
        std::size_t sets = 0;
        for (std::size_t n = 1; n <= ctx.cfg.index_budget; ++n) {
            const SetDescriptor set =
                interval_set(m, Interval::closed(-static_cast<double>(n),
                                                 static_cast<double>(n)), carrier);
            ++sets;
            for (std::size_t k = 0; k < 32; ++k) {
                const auto member = set.sample_member(rng);
                if (!member) break;
                const double v = psi(*member);
                if (v > static_cast<double>(n) + 1.0 + ctx.cfg.tol) {
                    ctx.report.add(CheckResult::fail(
                        "psi-staircase",
                        json{{"point", point_to_json(*member)}, {"psi", v},
                             {"ceiling", static_cast<double>(n) + 1.0}, {"index", n}},
                        json{{"points", points.size()}, {"sets", sets}}));
                    return;
                }
            }
        }
        ctx.report.add(CheckResult::pass("psi-staircase",
                                         json{{"points", points.size()}, {"sets", sets}}));
    });

    guarded(ctx, "psi-uniform-continuity", [&] {
        UniformCheckOptions opt;
        opt.eps_grid = ctx.cfg.eps_grid;
        opt.delta_grid = ctx.cfg.delta_grid;
        opt.samples = std::min<std::size_t>(ctx.cfg.samples, 512);
        opt.seed = ctx.seed("psi-uniform-continuity");
        const UniformContinuityResult res = uniform_continuity_check(psi_space, psi, opt);
        const json metrics{{"samples", opt.samples}, {"rows", res.table.size()}};
        if (res.pass) {
            ctx.report.add(CheckResult::pass("psi-uniform-continuity", metrics));
        } else {
            json w;
            if (res.witness) {
                w = json{{"x", point_to_json(res.witness->x)},
                         {"y", point_to_json(res.witness->y)},
                         {"dist", res.witness->dist},
                         {"fDiff", res.witness->f_diff},
                         {"eps", res.witness->eps}};
            }
            ctx.report.add(CheckResult::fail("psi-uniform-continuity", w, metrics));
        }
    });
}

void suite_metrization_65(SuiteContext& ctx, const ComposedSpace& cs) {
    const json bspec =
        ctx.cfg.base_spec.is_null() ? json{{"kind", "symmetric_intervals"}} : ctx.cfg.base_spec;
    const BaseSequence base = base_from_spec(cs, bspec);
    ChiOptions copt;
    copt.seed = ctx.seed("chi-validate");
    const ChiConstruction chi = chi_from_base(cs.space, base, ctx.cfg.delta, copt);
    const double delta = ctx.cfg.delta;

    const bool canonical = cs.real_metric == RealMetric::DN &&
                           bspec.at("kind").get<std::string>() == "symmetric_intervals" &&
                           delta == 1.0;
    if (canonical) {
        guarded(ctx, "chi-frozen-values", [&] {
            const std::vector<std::pair<double, double>> frozen = {
                {0.0, 0.0}, {1.5, 0.5}, {2.5, 1.5}, {-3.25, 2.25}};
            for (const auto& [x, expect] : frozen) {
                const double got = chi.chi(PointValue::real(x));
                if (std::fabs(got - expect) > 1e-12) {
                    ctx.report.add(CheckResult::fail(
                        "chi-frozen-values",
                        json{{"point", x}, {"expected", expect}, {"got", got}},
                        json{{"values", frozen.size()}}));
                    return;
                }
            }
            ctx.report.add(
                CheckResult::pass("chi-frozen-values", json{{"values", frozen.size()}}));
        });
    }

    guarded(ctx, "chi-lipschitz", [&] {
        const auto pool =
            pair_pool(ctx, cs.space.carrier(), "chi-lipschitz", ctx.cfg.samples * 4);
        std::size_t kept = 0;
        for (const auto& [x, y] : pool) {
            const double d = cs.space.dist(x, y);
            if (d >= 1.0) continue;
            ++kept;
            const double rise = chi.chi(y) - chi.chi(x);
            if (rise > (2.0 / delta) * d + ctx.cfg.tol) {
                ctx.report.add(CheckResult::fail(
                    "chi-lipschitz",
                    json{{"x", point_to_json(x)}, {"y", point_to_json(y)}, {"d", d},
                         {"chiRise", rise}, {"bound", (2.0 / delta) * d}},
                    json{{"pairs", kept}}));
                return;
            }
            if (kept >= ctx.cfg.samples) break;
        }
        if (kept < std::min<std::size_t>(ctx.cfg.samples, 100))
            ctx.report.add(CheckResult::inconclusive(
                "chi-lipschitz", json{{"note", "too few sampled pairs with d below 1"}},
                json{{"pairs", kept}}));
        else
            ctx.report.add(CheckResult::pass("chi-lipschitz", json{{"pairs", kept}}));
    });

    const QPSpace rho = rho_from_chi(chi);
    guarded(ctx, "rho-axioms", [&] {
        AxiomCheckOptions opt;
        opt.samples = ctx.cfg.samples;
        opt.tol = ctx.cfg.tol;
        opt.seed = ctx.seed("rho-axioms");
        opt.require_separation = cs.separating;
        const AxiomReport rep = check_axioms(rho, opt);
        const json metrics{{"triples", rep.triples_checked},
                           {"distances", rep.distances_evaluated}};
        if (const auto w = axiom_failure_json(rep))
            ctx.report.add(CheckResult::fail("rho-axioms", *w, metrics));
        else
            ctx.report.add(CheckResult::pass("rho-axioms", metrics));
    });

    guarded(ctx, "rho-local-agreement", [&] {
        const double cap = std::min(1.0, delta);
        const auto pool =
            pair_pool(ctx, cs.space.carrier(), "rho-local-agreement", ctx.cfg.samples * 4);
        std::size_t kept = 0;
        for (const auto& [x, y] : pool) {
            const double d = cs.space.dist(x, y);
            if (d >= cap) continue;
            ++kept;
            const double r = rho.dist(x, y);
            if (r != d) {
                ctx.report.add(CheckResult::fail(
                    "rho-local-agreement", pair_witness_json(x, y, "d", d, "rho", r),
                    json{{"pairs", kept}}));
                return;
            }
            if (kept >= ctx.cfg.samples) break;
        }
        if (kept < std::min<std::size_t>(ctx.cfg.samples, 100))
            ctx.report.add(CheckResult::inconclusive(
                "rho-local-agreement",
                json{{"note", "too few sampled pairs below the agreement threshold"}},
                json{{"pairs", kept}}));
        else
            ctx.report.add(CheckResult::pass("rho-local-agreement", json{{"pairs", kept}}));
    });

    guarded(ctx, "band-consistency", [&] {
        Rng rng = ctx.rng("band-consistency");
        std::vector<PointValue> points = cs.space.carrier().canonical_points(16);
        for (std::size_t i = 0; i < 128; ++i) points.push_back(cs.space.carrier().sample(rng));
        for (const PointValue& p : points) {
            const std::size_t band = chi.band(p);
            const double v = chi.chi(p);
            const bool inside = chi.base().at(band).contains(p);
            const bool outside_prev =
                band < 2 || !chi.base().at(band - 1).contains(p);
            if (!inside || !outside_prev || v < static_cast<double>(band) - 2.0) {
                ctx.report.add(CheckResult::fail(
                    "band-consistency",
                    json{{"point", point_to_json(p)}, {"band", band}, {"chi", v},
                         {"inBand", inside}, {"outsidePrevious", outside_prev}},
                    json{{"points", points.size()}}));
                return;
            }
        }
        ctx.report.add(
            CheckResult::pass("band-consistency", json{{"points", points.size()}}));
    });

    guarded(ctx, "rho-bounded-base", [&] {
        BoundednessOptions opt;
        opt.max_radius = ctx.cfg.radius_budget;
        opt.seed = ctx.seed("rho-bounded-base");
        std::size_t sets = 0;
        for (std::size_t n = 1; n <= ctx.cfg.index_budget; ++n) {
            const SetDescriptor set = base.at(n);
            if (set.is_empty()) continue;
            ++sets;
            const BoundednessResult res = is_d_bounded(rho, set, opt);
            if (res.status == Boundedness::Bounded) continue;
            const json w{{"index", n}, {"status", boundedness_name(res.status)},
                         {"note", res.note}};
            if (res.status == Boundedness::Inconclusive)
                ctx.report.add(
                    CheckResult::inconclusive("rho-bounded-base", w, json{{"sets", sets}}));
            else
                ctx.report.add(CheckResult::fail("rho-bounded-base", w, json{{"sets", sets}}));
            return;
        }
        ctx.report.add(CheckResult::pass("rho-bounded-base", json{{"sets", sets}}));
    });
}

Bornology resolve_bornology(const SuiteContext& ctx, const ComposedSpace& cs) {
    if (cs.zoo_id) {
        const ZooEntry& entry = zoo_entry(*cs.zoo_id);
        if (!entry.bornologies.empty())
            return pick_bornology(entry, ctx.cfg.bornology).bornology;
    }
    if (!ctx.cfg.bornology.empty() && ctx.cfg.bornology != "metric")
        throw ConfigError("no attached bornology '" + ctx.cfg.bornology +
                          "' for this target; only 'metric' is available");
    const auto anchors = cs.space.carrier().canonical_points(1);
    if (anchors.empty()) throw ConfigError("carrier offers no anchor for a metric bornology");
    return metric_bornology(cs.space, anchors.front());
}

void suite_bornology(SuiteContext& ctx, const ComposedSpace& cs) {
    const Bornology bornology = resolve_bornology(ctx, cs);
    const BaseSequence& base = bornology.base();

    guarded(ctx, "base-monotone", [&] {
        Rng rng = ctx.rng("base-monotone");
        std::size_t sampled = 0;
        for (std::size_t n = 0; n < ctx.cfg.index_budget; ++n) {
            const Inclusion incl = base.inclusion(n, n + 1);
            if (incl == Inclusion::Subset || incl == Inclusion::StrictSubset) continue;
            if (incl == Inclusion::NotSubset) {
                ctx.report.add(CheckResult::fail(
                    "base-monotone", json{{"index", n}, {"oracle", "not-subset"}},
                    json{{"indices", ctx.cfg.index_budget}}));
                return;
            }
            const SetDescriptor lo = base.at(n);
            const SetDescriptor hi = base.at(n + 1);
            if (lo.is_empty()) continue;
            for (std::size_t k = 0; k < 32; ++k) {
                const auto member = lo.sample_member(rng);
                if (!member) break;
                ++sampled;
                if (!hi.contains(*member)) {
                    ctx.report.add(CheckResult::fail(
                        "base-monotone",
                        json{{"index", n}, {"member", point_to_json(*member)}},
                        json{{"indices", ctx.cfg.index_budget}, {"sampled", sampled}}));
                    return;
                }
            }
        }
        ctx.report.add(CheckResult::pass(
            "base-monotone",
            json{{"indices", ctx.cfg.index_budget}, {"sampled", sampled}}));
    });

    guarded(ctx, "covers-points", [&] {
        Rng rng = ctx.rng("covers-points");
        std::vector<PointValue> points = cs.space.carrier().canonical_points(16);
        for (std::size_t i = 0; i < 64; ++i) points.push_back(cs.space.carrier().sample(rng));
        for (const PointValue& p : points) {
            const auto idx = bornology.covering_index(p, 16384);
            if (!idx) {
                ctx.report.add(CheckResult::inconclusive(
                    "covers-points",
                    json{{"point", point_to_json(p)},
                         {"note", "not covered within the index budget"}},
                    json{{"points", points.size()}}));
                return;
            }
        }
        ctx.report.add(CheckResult::pass("covers-points", json{{"points", points.size()}}));
    });

    guarded(ctx, "bounded-base-sets", [&] {
        BoundednessOptions opt;
        opt.max_radius = ctx.cfg.radius_budget;
        opt.seed = ctx.seed("bounded-base-sets");
        std::size_t sets = 0;
        for (std::size_t n = 1; n <= ctx.cfg.index_budget; ++n) {
            const SetDescriptor set = base.at(n);
            if (set.is_empty()) continue;
            ++sets;
            const BoundednessResult res = is_d_bounded(cs.space, set, opt);
            if (res.status == Boundedness::Bounded) continue;
            const json w{{"index", n}, {"status", boundedness_name(res.status)},
                         {"note", res.note}};
            if (res.status == Boundedness::Inconclusive)
                ctx.report.add(
                    CheckResult::inconclusive("bounded-base-sets", w, json{{"sets", sets}}));
            else
                ctx.report.add(CheckResult::fail("bounded-base-sets", w, json{{"sets", sets}}));
            return;
        }
        ctx.report.add(CheckResult::pass("bounded-base-sets", json{{"sets", sets}}));
    });

    guarded(ctx, "refine-strict", [&] {
        RefineOptions opt;
        opt.seed = ctx.seed("refine-strict");
        try {
            const RefinedBase refined = refine_base(base, opt);
            for (std::size_t i = 1; i < refined.selected.size(); ++i)
                if (refined.selected[i] <= refined.selected[i - 1]) {
                    ctx.report.add(CheckResult::fail(
                        "refine-strict",
                        json{{"selected", refined.selected},
                             {"note", "selected indices are not strictly increasing"}},
                        json{{"prefix", refined.selected.size()}}));
                    return;
                }
            ctx.report.add(CheckResult::pass(
                "refine-strict", json{{"prefix", refined.selected.size()},
                                      {"lastIndex", refined.selected.empty()
                                                        ? 0
                                                        : refined.selected.back()}}));
        } catch (const BaseRefinementError& e) {
            ctx.report.add(CheckResult::inconclusive(
                "refine-strict", json{{"note", e.what()}}, json{{"prefix", 0}}));
        }
    });
}

void suite_properness(SuiteContext& ctx, const ComposedSpace& cs) {
    const Bornology bornology = resolve_bornology(ctx, cs);
    guarded(ctx, "absorption", [&] {
        PropernessOptions opt;
        if (ctx.cfg.grids_explicit) opt.delta_grid = ctx.cfg.delta_grid;
        opt.index_count = ctx.cfg.index_budget;
        opt.seed = ctx.seed("absorption");
        const PropernessResult res = properness_check(cs.space, bornology, opt);
        const json metrics{{"indices", res.indices_checked},
                           {"bornology", bornology.label()}};
        if (res.pass) {
            json m = metrics;
            m["deltas"] = res.delta_for;
            ctx.report.add(CheckResult::pass("absorption", m));
        } else if (res.failure) {
            ctx.report.add(CheckResult::fail(
                "absorption",
                json{{"index", res.failure->index},
                     {"delta", res.failure->delta},
                     {"witness", point_to_json(res.failure->witness)},
                     {"member", point_to_json(res.failure->member)},
                     {"memberDist", res.failure->member_dist}},
                metrics));
        } else {
            ctx.report.add(CheckResult::inconclusive(
                "absorption", json{{"note", "no verdict within the budget"}}, metrics));
        }
    });
}

void suite_uniform_equivalence(SuiteContext& ctx, const ComposedSpace& first,
                               const ComposedSpace& second) {
    if (!first.space.carrier().compatible(second.space.carrier()))
        throw ConfigError("uniform-equivalence targets live on incompatible carriers");
    guarded(ctx, "uniform-equivalence", [&] {
        UniformCheckOptions opt;
        opt.eps_grid = ctx.cfg.eps_grid;
        opt.delta_grid = ctx.cfg.delta_grid;
        opt.samples = ctx.cfg.samples;
        opt.seed = ctx.seed("uniform-equivalence");
        const UniformEquivalenceResult res =
            uniform_equivalence_check(first.space, second.space, opt);
        const json metrics{{"samples", opt.samples},
                           {"forwardRows", res.forward.size()},
                           {"backwardRows", res.backward.size()}};
        if (res.pass) {
            ctx.report.add(CheckResult::pass("uniform-equivalence", metrics));
            return;
        }
        json w;
        if (res.witness) {
            w = json{{"direction", res.witness->direction == 0 ? "forward" : "backward"},
                     {"eps", res.witness->eps},
                     {"x", point_to_json(res.witness->x)},
                     {"y", point_to_json(res.witness->y)},
                     {"dSource", res.witness->d_source},
                     {"dTarget", res.witness->d_target}};
        }
        ctx.report.add(CheckResult::fail("uniform-equivalence", w, metrics));
    });
}

void suite_locally_identical(SuiteContext& ctx, const ComposedSpace& first,
                             const ComposedSpace& second) {
    if (!first.space.carrier().compatible(second.space.carrier()))
        throw ConfigError("locally-identical targets live on incompatible carriers");
    guarded(ctx, "locally-identical", [&] {
        UniformCheckOptions opt;
        opt.eps_grid = ctx.cfg.eps_grid;
        opt.delta_grid = ctx.cfg.delta_grid;
        opt.samples = ctx.cfg.samples;
        opt.seed = ctx.seed("locally-identical");
        const LocallyIdenticalResult res =
            locally_identical_check(first.space, second.space, opt);
        const json metrics{{"samples", opt.samples}, {"delta", res.delta}};
        if (res.pass) {
            ctx.report.add(CheckResult::pass("locally-identical", metrics));
            return;
        }
        json w;
        if (res.witness) {
            w = json{{"x", point_to_json(res.witness->x)},
                     {"y", point_to_json(res.witness->y)},
                     {"d", res.witness->d},
                     {"rho", res.witness->rho}};
        } else if (res.equivalence.witness) {
            const auto& ew = *res.equivalence.witness;
            w = json{{"direction", ew.direction == 0 ? "forward" : "backward"},
                     {"eps", ew.eps},
                     {"x", point_to_json(ew.x)},
                     {"y", point_to_json(ew.y)},
                     {"dSource", ew.d_source},
                     {"dTarget", ew.d_target}};
        }
        ctx.report.add(CheckResult::fail("locally-identical", w, metrics));
    });
}

void suite_cb_base(SuiteContext& ctx, const ComposedSpace& cs) {
    const Bornology bornology = resolve_bornology(ctx, cs);
    const BaseSequence& family = bornology.base();
    UniformRefineOptions opt;
    opt.prefix_length = ctx.cfg.index_budget;
    opt.seed = ctx.seed("uniform-refinement");
    std::optional<RefinedBase> refined;
    guarded(ctx, "uniform-refinement", [&] {
        try {
            refined = cb_uniform_base(cs.space, family, ctx.cfg.delta, opt);
            ctx.report.add(CheckResult::pass(
                "uniform-refinement", json{{"prefix", refined->selected.size()},
                                           {"selected", refined->selected}}));
        } catch (const DeltaSearchError& e) {
            ctx.report.add(
                CheckResult::fail("uniform-refinement", json{{"note", e.what()}}));
        } catch (const BaseRefinementError& e) {
            ctx.report.add(
                CheckResult::inconclusive("uniform-refinement", json{{"note", e.what()}}));
        }
    });
    if (!refined || refined->selected.size() < 2) return;
    const bool closed_forms = family.at(1).has_dist_from();
    const double half = ctx.cfg.delta / 2.0;

    guarded(ctx, "absorption", [&] {
        if (!closed_forms) {
            ctx.report.add(CheckResult::inconclusive(
                "absorption",
                json{{"note", "family has no closed-form distances to certify against"}}));
            return;
        }
        Rng rng = ctx.rng("absorption");
        std::size_t certified = 0;
        for (std::size_t m = 0; m + 1 < refined->selected.size(); ++m) {
            const SetDescriptor current = refined->base.at(m);
            const SetDescriptor next = refined->base.at(m + 1);
            const auto candidates = sample_neighborhood(cs.space, current, half, 160, rng);
            for (const PointValue& cand : candidates) {
                ++certified;
                if (!next.contains(cand)) {
                    ctx.report.add(CheckResult::fail(
                        "absorption",
                        json{{"slot", m}, {"point", point_to_json(cand)}},
                        json{{"certified", certified}}));
                    return;
                }
            }
        }
        ctx.report.add(CheckResult::pass("absorption", json{{"certified", certified}}));
    });

    guarded(ctx, "covers", [&] {
        if (!closed_forms) {
            ctx.report.add(CheckResult::inconclusive(
                "covers",
                json{{"note", "family has no closed-form distances to certify against"}}));
            return;
        }
        Rng rng = ctx.rng("covers");
        const SetDescriptor last = refined->base.at(refined->selected.size() - 1);
        std::size_t sampled = 0;
        for (std::size_t k = 0; k + 1 < refined->selected.size(); ++k) {
            const SetDescriptor set = family.at(k);
            if (set.is_empty()) continue;
            for (std::size_t i = 0; i < 16; ++i) {
                const auto member = set.sample_member(rng);
                if (!member) break;
                ++sampled;
                if (!last.contains(*member)) {
                    ctx.report.add(CheckResult::fail(
                        "covers",
                        json{{"familyIndex", k}, {"member", point_to_json(*member)}},
                        json{{"sampled", sampled}}));
                    return;
                }
            }
        }
        ctx.report.add(CheckResult::pass("covers", json{{"sampled", sampled}}));
    });
}

void suite_oracle(SuiteContext& ctx) {
    const json& t = ctx.cfg.target;
    std::string path;
    if (t.is_string())
        path = t.get<std::string>();
    else if (t.is_object() && t.contains("finite") && t.at("finite").is_string())
        path = t.at("finite").get<std::string>();
    else
        throw ConfigError("oracle suite needs a digraph file target");
    const WeightedDigraph g = WeightedDigraph::from_text(slurp(path));
    const FiniteQPSpace space = closure(g);

    guarded(ctx, "closure-triangle", [&] {
        const TriangleAuditResult audit = triangle_audit(space);
        const json metrics{{"triples", audit.triples}, {"cappedPairs", space.capped_pairs}};
        if (audit.pass)
            ctx.report.add(CheckResult::pass("closure-triangle", metrics));
        else
            ctx.report.add(CheckResult::fail("closure-triangle",
                                             triangle_witness_json(*audit.witness), metrics));
    });

    guarded(ctx, "closure-idempotent", [&] {
        WeightedDigraph again(space.size);
        for (std::size_t i = 0; i < space.size; ++i)
            for (std::size_t j = 0; j < space.size; ++j)
                if (i != j) again.set_weight(i, j, space.at(i, j));
        const FiniteQPSpace reclosed = closure(again);
        for (std::size_t i = 0; i < space.size; ++i)
            for (std::size_t j = 0; j < space.size; ++j)
                if (reclosed.at(i, j) != space.at(i, j)) {
                    ctx.report.add(CheckResult::fail(
                        "closure-idempotent",
                        json{{"i", i}, {"j", j}, {"first", space.at(i, j)},
                             {"second", reclosed.at(i, j)}},
                        json{{"entries", space.size * space.size}}));
                    return;
                }
        ctx.report.add(CheckResult::pass("closure-idempotent",
                                         json{{"entries", space.size * space.size}}));
    });

    VerificationReport sub = cross_check(space, ctx.seed("cross-check"));
    for (CheckResult& check : sub.checks) ctx.report.add(std::move(check));
}

VerificationReport run_suite_impl(const SuiteConfig& config) {
    const auto& ids = suite_ids();
    if (std::find(ids.begin(), ids.end(), config.suite) == ids.end())
        throw ConfigError("unknown suite '" + config.suite + "'");
    VerificationReport report;
    report.config = config.to_json();
    SuiteContext ctx{config, report};
    if (config.suite == "oracle") {
        suite_oracle(ctx);
        report.sort_checks();
        return report;
    }
    json target = config.target;
    if (target.is_null()) {
        if (config.suite == "metrization-4.7" || config.suite == "metrization-6.5")
            target = "d_n";
        else
            throw ConfigError("suite '" + config.suite + "' needs a target");
    }
    const ComposedSpace cs = compose_space(target);
    if (config.suite == "uniform-equivalence" || config.suite == "locally-identical") {
        if (config.second.is_null())
            throw ConfigError("suite '" + config.suite + "' needs a second target");
        const ComposedSpace partner = compose_space(config.second);
        if (config.suite == "uniform-equivalence")
            suite_uniform_equivalence(ctx, cs, partner);
        else
            suite_locally_identical(ctx, cs, partner);
    } else if (config.suite == "axioms") {
        suite_axioms(ctx, cs);
    } else if (config.suite == "conjugation") {
        suite_conjugation(ctx, cs);
    } else if (config.suite == "metrization-4.7") {
        suite_metrization_47(ctx, cs);
    } else if (config.suite == "metrization-6.5") {
        suite_metrization_65(ctx, cs);
    } else if (config.suite == "bornology") {
        suite_bornology(ctx, cs);
    } else if (config.suite == "properness") {
        suite_properness(ctx, cs);
    } else {
        suite_cb_base(ctx, cs);
    }
    report.sort_checks();
    return report;
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& config) {
    try {
        return run_suite_impl(config);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config value: ") + e.what());
    }
}

json list_zoo() {
    json spaces = json::array();
    for (const ZooEntry& entry : zoo_catalog()) {
        json item;
        item["id"] = entry.id;
        item["class"] = space_class_name(entry.cls);
        item["carrier"] = carrier_kind_name(entry.space.carrier().kind());
        item["notes"] = entry.notes;
        json borns = json::array();
        for (const NamedBornology& nb : entry.bornologies)
            borns.push_back(json{{"id", nb.id}, {"note", nb.note}});
        item["bornologies"] = std::move(borns);
        if (entry.conjugate_partner) item["conjugatePartner"] = *entry.conjugate_partner;
        if (entry.symmetrize_partner) item["symmetrizePartner"] = *entry.symmetrize_partner;
        item["expected"] = json{
            {"axioms", "pass"},
            {"separation", entry.separating() ? "pass" : "not-required"}};
        spaces.push_back(std::move(item));
    }
    return json{{"schema", "qmb-zoo/1"}, {"spaces", std::move(spaces)}};
}

json construct_chi(const std::string& zoo_id, const json& base_spec, double delta) {
    try {
        const ComposedSpace cs = compose_space(json(zoo_id));
        const json bspec =
            base_spec.is_null() ? json{{"kind", "symmetric_intervals"}} : base_spec;
        const BaseSequence base = base_from_spec(cs, bspec);
        ChiOptions copt;
        copt.seed = derive_seed(0, "construct-chi");
        const ChiConstruction chi = chi_from_base(cs.space, base, delta, copt);
        json values = json::array();
        for (const PointValue& p : cs.space.carrier().canonical_points()) {
            values.push_back(json{{"point", point_to_json(p)},
                                  {"band", chi.band(p)},
                                  {"chi", chi.chi(p)}});
        }
        return json{{"schema", "qmb-chi/1"},
                    {"target", zoo_id},
                    {"delta", delta},
                    {"base", normalize_base_spec(bspec)},
                    {"values", std::move(values)}};
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed base spec: ") + e.what());
    }
}

}  // namespace qmb
