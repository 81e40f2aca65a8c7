#include "dlm/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace dlm {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

void check_keys(const json& j, const std::string& path,
                const std::set<std::string>& allowed) {
    for (const auto& [key, _] : j.items()) {
        if (!allowed.count(key)) {
            fail(path.empty() ? key : path + "." + key, "unknown field");
        }
    }
}

const json* find(const json& j, const std::string& key) {
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

double get_double(const json& j, const std::string& path) {
    if (!j.is_number()) {
        fail(path, "expected a number");
    }
    return j.get<double>();
}

double require_double(const json& j, const std::string& parent,
                      const std::string& key) {
    const json* f = find(j, key);
    if (!f) {
        fail(parent + "." + key, "missing required field");
    }
    return get_double(*f, parent + "." + key);
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) {
        fail(path, "expected an integer");
    }
    return j.get<int>();
}

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) {
        fail(path, "expected true or false");
    }
    return j.get<bool>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) {
        fail(path, "expected a string");
    }
    return j.get<std::string>();
}

ModelParams parse_params(const json& j) {
    if (!j.is_object()) {
        fail("params", "expected an object");
    }
    check_keys(j, "params", {"alpha", "c", "beta", "gamma", "L1", "B", "w0", "A"});
    ModelParams p;
    p.alpha = require_double(j, "params", "alpha");
    p.c = require_double(j, "params", "c");
    p.beta = require_double(j, "params", "beta");
    p.gamma = require_double(j, "params", "gamma");
    p.L1 = require_double(j, "params", "L1");
    p.A = find(j, "A") ? get_double(*find(j, "A"), "params.A") : 1.0;
    const json* b = find(j, "B");
    const json* w0 = find(j, "w0");
    if (b && w0) {
        fail("params", "give either B or w0, not both");
    }
    if (!b && !w0) {
        fail("params", "one of B or w0 is required");
    }
    if (b) {
        p.B = get_double(*b, "params.B");
    } else {
        const double anchor = get_double(*w0, "params.w0");
        if (!(anchor > 0.0) || !(p.beta > 0.0)) {
            fail("params.w0", "needs w0 > 0 and beta > 0");
        }
        p.B = p.L1 / std::pow(anchor, p.beta);
    }
    try {
        p.validate();
    } catch (const ValidationError& e) {
        fail("params", e.what());
    }
    return p;
}

SweepSpec parse_sweep(const json& j) {
    check_keys(j, "sweep", {"variable", "min", "max", "n", "spacing"});
    SweepSpec s;
    if (const json* v = find(j, "variable")) {
        const std::string name = get_string(*v, "sweep.variable");
        if (name == "g") {
            s.variable = SweepVariable::g;
        } else if (name == "A") {
            s.variable = SweepVariable::A;
        } else if (name == "L_over_L1") {
            s.variable = SweepVariable::L_over_L1;
        } else {
            fail("sweep.variable", "must be g, A or L_over_L1, got " + name);
        }
    }
    s.min = require_double(j, "sweep", "min");
    s.max = require_double(j, "sweep", "max");
    if (const json* n = find(j, "n")) {
        s.n = get_int(*n, "sweep.n");
    }
    if (const json* sp = find(j, "spacing")) {
        const std::string name = get_string(*sp, "sweep.spacing");
        if (name == "linear") {
            s.spacing = Spacing::linear;
        } else if (name == "log") {
            s.spacing = Spacing::log;
        } else {
            fail("sweep.spacing", "must be linear or log, got " + name);
        }
    }
    if (s.n < 2) {
        fail("sweep.n", "must be at least 2");
    }
    try {
        s.validate();
    } catch (const ValidationError& e) {
        fail("sweep", e.what());
    }
    return s;
}

PlotBlock parse_plot(const json& j) {
    check_keys(j, "plot", {"kind", "approximations"});
    PlotBlock p;
    if (const json* k = find(j, "kind")) {
        const std::string name = get_string(*k, "plot.kind");
        if (name == "phillips") {
            p.kind = PlotKind::phillips;
        } else if (name == "supply_demand") {
            p.kind = PlotKind::supply_demand;
        } else if (name == "wage_paths") {
            p.kind = PlotKind::wage_paths;
        } else {
            fail("plot.kind",
                 "must be phillips, supply_demand or wage_paths, got " + name);
        }
    }
    if (const json* a = find(j, "approximations")) {
        p.approximations = get_bool(*a, "plot.approximations");
    }
    return p;
}

FlattenBlock parse_flatten(const json& j, const std::string& path) {
    check_keys(j, path, {"type", "name", "changes", "grid"});
    FlattenBlock f;
    const json* ch = find(j, "changes");
    if (!ch || !ch->is_object()) {
        fail(path + ".changes", "expected an object");
    }
    check_keys(*ch, path + ".changes", {"c", "gamma", "beta", "B_percent"});
    std::string auto_name;
    const auto grab = [&](const char* key, std::optional<double>& slot) {
        if (const json* v = find(*ch, key)) {
            slot = get_double(*v, path + ".changes." + key);
            auto_name += auto_name.empty() ? key : std::string("_") + key;
        }
    };
    grab("c", f.changes.c);
    grab("gamma", f.changes.gamma);
    grab("beta", f.changes.beta);
    grab("B_percent", f.changes.B_percent);
    if (auto_name.empty()) {
        fail(path + ".changes", "at least one change is required");
    }
    f.name = find(j, "name") ? get_string(*find(j, "name"), path + ".name")
                             : auto_name;
    if (const json* g = find(j, "grid")) {
        check_keys(*g, path + ".grid", {"min", "max", "n"});
        f.grid_min = require_double(*g, path + ".grid", "min");
        f.grid_max = require_double(*g, path + ".grid", "max");
        if (const json* n = find(*g, "n")) {
            f.grid_n = get_int(*n, path + ".grid.n");
        }
    }
    if (!(f.grid_min > 1.0) || !(f.grid_max > f.grid_min) || f.grid_n < 3) {
        fail(path + ".grid", "needs 1 < min < max and n >= 3");
    }
    return f;
}

RatioBlock parse_ratio(const json& j, const std::string& path,
                       double default_beta) {
    check_keys(j, path,
               {"type", "name", "growth_I", "growth_II", "beta", "B_ratio",
                "c_ratio", "equal_ratio_line"});
    RatioBlock r;
    if (const json* n = find(j, "name")) {
        r.name = get_string(*n, path + ".name");
    }
    r.scenario.growth_I = require_double(j, path, "growth_I");
    r.scenario.growth_II = require_double(j, path, "growth_II");
    r.scenario.beta =
        find(j, "beta") ? get_double(*find(j, "beta"), path + ".beta")
                        : default_beta;
    if (!(r.scenario.beta > 0.0)) {
        fail(path + ".beta", "must be positive");
    }
    if (const json* b = find(j, "B_ratio")) {
        if (b->is_array()) {
            for (std::size_t i = 0; i < b->size(); ++i) {
                r.B_ratio_grid.push_back(
                    get_double((*b)[i], path + ".B_ratio[" +
                                            std::to_string(i) + "]"));
            }
        } else if (b->is_object()) {
            check_keys(*b, path + ".B_ratio", {"min", "max", "n"});
            const double lo = require_double(*b, path + ".B_ratio", "min");
            const double hi = require_double(*b, path + ".B_ratio", "max");
            const int n = find(*b, "n")
                              ? get_int(*find(*b, "n"), path + ".B_ratio.n")
                              : 7;
            if (n < 1 || (n > 1 && !(lo < hi))) {
                fail(path + ".B_ratio", "needs min < max and n >= 1");
            }
            for (int i = 0; i < n; ++i) {
                r.B_ratio_grid.push_back(
                    n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
            }
        } else {
            fail(path + ".B_ratio", "expected an array or {min,max,n}");
        }
    } else {
        for (int i = 0; i <= 6; ++i) {
            r.B_ratio_grid.push_back(1.0 + 0.001 * i);
        }
    }
    if (const json* c = find(j, "c_ratio")) {
        check_keys(*c, path + ".c_ratio", {"min", "max", "n"});
        r.c_ratio_min = require_double(*c, path + ".c_ratio", "min");
        r.c_ratio_max = require_double(*c, path + ".c_ratio", "max");
        if (const json* n = find(*c, "n")) {
            r.n_c = get_int(*n, path + ".c_ratio.n");
        }
    }
    if (!(r.c_ratio_min < r.c_ratio_max) || r.n_c < 2) {
        fail(path + ".c_ratio", "needs min < max and n >= 2");
    }
    if (const json* e = find(j, "equal_ratio_line")) {
        r.equal_ratio_line = get_bool(*e, path + ".equal_ratio_line");
    }
    return r;
}

OutputBlock parse_output(const json& j) {
    check_keys(j, "output", {"dir", "formats", "precision"});
    OutputBlock o;
    if (const json* d = find(j, "dir")) {
        o.dir = get_string(*d, "output.dir");
    }
    if (const json* f = find(j, "formats")) {
        if (!f->is_array()) {
            fail("output.formats", "expected an array");
        }
        o.csv = o.svg = false;
        for (const auto& item : *f) {
            const std::string name = get_string(item, "output.formats");
            if (name == "csv") {
                o.csv = true;
            } else if (name == "svg") {
                o.svg = true;
            } else {
                fail("output.formats", "must be csv or svg, got " + name);
            }
        }
        if (!o.csv && !o.svg) {
            fail("output.formats", "at least one format is required");
        }
    }
    if (const json* p = find(j, "precision")) {
        o.precision = get_int(*p, "output.precision");
    }
    if (o.precision < 6 || o.precision > 17) {
        fail("output.precision", "must lie in [6,17]");
    }
    return o;
}

RootOptions parse_solver(const json& j) {
    check_keys(j, "solver", {"rel_tol", "max_iter"});
    RootOptions o;
    if (const json* t = find(j, "rel_tol")) {
        o.rel_tol = get_double(*t, "solver.rel_tol");
        if (!(o.rel_tol > 0.0) || o.rel_tol > 1e-3) {
            fail("solver.rel_tol", "must lie in (0, 1e-3]");
        }
    }
    if (const json* m = find(j, "max_iter")) {
        o.max_iter = get_int(*m, "solver.max_iter");
        if (o.max_iter < 1) {
            fail("solver.max_iter", "must be positive");
        }
    }
    return o;
}

} // namespace

RunConfig parse_config(std::string_view text, std::string_view name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based; count line breaks before it
        std::size_t line = 1;
        const std::size_t upto =
            std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
            }
        }
        throw ConfigError("parse error at line " + std::to_string(line) +
                          ": " + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("top level must be an object");
    }
    check_keys(j, "",
               {"name", "params", "solver", "sweep", "plot", "experiments",
                "output"});
    RunConfig cfg;
    cfg.name = std::string(name);
    if (const json* n = find(j, "name")) {
        cfg.name = get_string(*n, "name");
    }
    if (cfg.name.empty()) {
        throw ConfigError("name: must not be empty");
    }
    const json* params = find(j, "params");
    if (!params) {
        throw ConfigError("params: missing required section");
    }
    cfg.params = parse_params(*params);
    if (const json* s = find(j, "solver")) {
        cfg.solver = parse_solver(*s);
    }
    if (const json* s = find(j, "sweep")) {
        cfg.sweep = parse_sweep(*s);
    }
    if (const json* p = find(j, "plot")) {
        cfg.plot = parse_plot(*p);
    }
    if (const json* ex = find(j, "experiments")) {
        if (!ex->is_array()) {
            throw ConfigError("experiments: expected an array");
        }
        for (std::size_t i = 0; i < ex->size(); ++i) {
            const std::string path = "experiments[" + std::to_string(i) + "]";
            const json& item = (*ex)[i];
            if (!item.is_object()) {
                fail(path, "expected an object");
            }
            const json* type = find(item, "type");
            if (!type) {
                fail(path + ".type", "missing required field");
            }
            const std::string kind = get_string(*type, path + ".type");
            if (kind == "flatten") {
                cfg.flatten.push_back(parse_flatten(item, path));
            } else if (kind == "ratio") {
                cfg.ratio.push_back(
                    parse_ratio(item, path, cfg.params.beta));
            } else {
                fail(path + ".type", "must be flatten or ratio, got " + kind);
            }
        }
    }
    if (const json* o = find(j, "output")) {
        cfg.output = parse_output(*o);
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.stem().string());
}

} // namespace dlm
