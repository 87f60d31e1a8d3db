#include "cli.hpp"

#include "brt/bounds.hpp"
#include "brt/chain.hpp"
#include "brt/hives.hpp"
#include "brt/limits.hpp"
#include "brt/spectrum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <variant>

#ifndef BRT_VERSION_STRING
#define BRT_VERSION_STRING "0.0.0"
#endif

namespace brt::cli {

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<long long, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    char sep = ',';
};

using Notes = std::vector<std::pair<std::string, Cell>>;

std::string format_double(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string cell_text(const Cell& c)
{
    if (auto* i = std::get_if<long long>(&c))
        return std::to_string(*i);
    if (auto* d = std::get_if<double>(&c))
        return format_double(*d);
    return std::get<std::string>(c);
}

json cell_json(const Cell& c)
{
    if (auto* i = std::get_if<long long>(&c))
        return *i;
    if (auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d))
            return format_double(*d);
        return *d;
    }
    return std::get<std::string>(c);
}

std::vector<std::pair<std::string, std::string>> echo_pairs(const RunConfig& cfg)
{
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
    return {
        {"command", cfg.command},
        {"n", opt(cfg.n)},
        {"nA", opt(cfg.nA)},
        {"nB", opt(cfg.nB)},
        {"b", cfg.b},
        {"t", cfg.t ? format_double(*cfg.t) : "-"},
        {"c", format_double(cfg.c)},
        {"samples", std::to_string(cfg.samples)},
        {"seed", std::to_string(cfg.seed)},
        {"epsilon", format_double(cfg.epsilon)},
        {"tol", format_double(cfg.tol)},
        {"p_max", std::to_string(cfg.p_max)},
        {"lambda", cfg.lambda.empty() ? "-" : cfg.lambda},
        {"mu", cfg.mu.empty() ? "-" : cfg.mu},
        {"nu", cfg.nu.empty() ? "-" : cfg.nu},
        {"method", cfg.method},
        {"format", cfg.format},
    };
}

json meta_json(const RunConfig& cfg, const Notes& notes)
{
    json m;
    m["tool"] = "brt";
    m["version"] = version();
    json c = json::object();
    for (const auto& [k, v] : echo_pairs(cfg))
        c[k] = v;
    m["config"] = c;
    m["seed"] = cfg.seed;
    json nj = json::object();
    for (const auto& [k, v] : notes)
        nj[k] = cell_json(v);
    m["notes"] = nj;
    return m;
}

void emit(std::ostream& o, const RunConfig& cfg, const Table& table, const Notes& notes)
{
    if (cfg.format == "json") {
        json doc;
        doc["meta"] = meta_json(cfg, notes);
        doc["columns"] = table.columns;
        json rows = json::array();
        for (const auto& r : table.rows) {
            json row;
            for (std::size_t i = 0; i < r.size(); ++i)
                row[table.columns[i]] = cell_json(r[i]);
            rows.push_back(row);
        }
        doc["rows"] = rows;
        o << doc.dump(2) << '\n';
        return;
    }
    o << "# brt " << version() << '\n';
    o << "# config: " << echo_config(cfg) << '\n';
    o << "# seed: " << cfg.seed << '\n';
    for (const auto& [k, v] : notes)
        o << "# " << k << ": " << cell_text(v) << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        o << (i ? std::string(1, table.sep) : "") << table.columns[i];
    o << '\n';
    for (const auto& r : table.rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            o << (i ? std::string(1, table.sep) : "") << cell_text(r[i]);
        o << '\n';
    }
}

ShuffleParams shuffle_params(const RunConfig& cfg)
{
    Rational b = parse_rational(cfg.b);
    if (cfg.nA || cfg.nB) {
        if (!cfg.nA || !cfg.nB)
            throw InvalidInput("--nA and --nB go together");
        if (cfg.n)
            throw InvalidInput("give either --n or --nA/--nB");
        return ShuffleParams(*cfg.nA, *cfg.nB, b);
    }
    if (!cfg.n)
        throw InvalidInput("missing --n");
    return ShuffleParams::balanced(*cfg.n, b);
}

void require_stochastic(const ShuffleParams& p)
{
    if (!p.stochastic())
        throw InvalidInput("this command needs a balanced split or b = 1");
}

long long integer_time(double t)
{
    if (t < 0 || t != std::floor(t))
        throw InvalidInput("--t must be a nonnegative integer here");
    return static_cast<long long>(t);
}

long long steps_for(const RunConfig& cfg, const ShuffleParams& p)
{
    return cfg.t ? integer_time(*cfg.t) : window_steps(p.N(), p.b(), cfg.c);
}

std::string big(const BigInt& x)
{
    return x.str();
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& o)
{
    ShuffleParams p = shuffle_params(cfg);
    auto entries = full_spectrum(p, cfg.threads);
    Table t{{"lambda", "mu", "nu", "eig_num", "eig_den", "mult"}, {}, ';'};
    BigInt total = 0;
    for (const auto& e : entries) {
        t.rows.push_back({to_string(e.lambda), to_string(e.mu), to_string(e.nu), big(numerator(e.eig)),
                          big(denominator(e.eig)), big(e.mult)});
        total += e.mult;
    }
    emit(o, cfg, t, {{"entries", static_cast<long long>(entries.size())}, {"total_mult", big(total)}});
    return kOk;
}

int cmd_verify_spectrum(const RunConfig& cfg, std::ostream& o)
{
    ShuffleParams p = shuffle_params(cfg);
    if (p.N() > kOracleMaxN)
        throw ResourceLimit("verify-spectrum is limited to N <= " + std::to_string(kOracleMaxN));
    std::vector<double> formula;
    for (const auto& e : full_spectrum(p, cfg.threads)) {
        double v = to_double(e.eig);
        for (BigInt k = 0; k < e.mult; ++k)
            formula.push_back(v);
    }
    std::sort(formula.begin(), formula.end(), std::greater<>());
    std::vector<double> oracle = numeric_spectrum_oracle(p);
    bool ok = formula.size() == oracle.size();
    double worst = 0.0;
    Table t{{"index", "formula", "oracle", "abs_error"}, {}};
    std::size_t m = std::min(formula.size(), oracle.size());
    for (std::size_t i = 0; i < m; ++i) {
        double d = std::abs(formula[i] - oracle[i]);
        worst = std::max(worst, d);
        t.rows.push_back({static_cast<long long>(i), formula[i], oracle[i], d});
    }
    ok = ok && worst <= cfg.tol;
    emit(o, cfg, t,
         {{"formula_count", static_cast<long long>(formula.size())},
          {"oracle_count", static_cast<long long>(oracle.size())},
          {"max_abs_error", worst},
          {"status", std::string(ok ? "PASS" : "FAIL")}});
    return ok ? kOk : kVerificationFailed;
}

int cmd_mix_curve(const RunConfig& cfg, std::ostream& o)
{
    ShuffleParams p = shuffle_params(cfg);
    require_stochastic(p);
    int N = p.N();
    if (N > kEvolveMaxN)
        throw ResourceLimit("exact TV is limited to N <= " + std::to_string(kEvolveMaxN));
    long long T = cfg.t ? integer_time(*cfg.t) : 100;
    L2Curve curve(p, cfg.threads);
    StepMeasure m = step_measure(p);
    Table t{{"t", "tv_exact", "l2_bound", "poisson_lower"}, {}};
    auto lower = [&](long long s) {
        double c = std::log(static_cast<double>(N)) - 2.0 * to_double(p.b()) * static_cast<double>(s) / N;
        return poisson_lower_bound(fix_limit_rate(c, p.b()) - 1.0);
    };
    if (N <= kExactMaxN) {
        ExactWalk walk(m);
        for (long long s = 0; s <= T; ++s) {
            t.rows.push_back({s, walk.tv_to_uniform(), curve.at(static_cast<double>(s)), lower(s)});
            walk.step();
        }
    } else {
        GroupDistribution d = GroupDistribution::point_mass(N, identity_perm(N));
        for (long long s = 0; s <= T; ++s) {
            t.rows.push_back({s, tv_to_uniform(d), curve.at(static_cast<double>(s)), lower(s)});
            d = evolve(d, m, 1);
        }
    }
    emit(o, cfg, t, {{"cutoff_time", cutoff_time(N, p.b())}});
    return kOk;
}

int cmd_l2bound(const RunConfig& cfg, std::ostream& o)
{
    ShuffleParams p = shuffle_params(cfg);
    double time = cfg.t ? *cfg.t : window_time(p.N(), p.b(), cfg.c);
    if (time < 0)
        throw InvalidInput("--t must be nonnegative");
    L2Curve curve(p, cfg.threads);
    Table t{{"t", "l2_bound", "log_sum"}, {}};
    t.rows.push_back({time, curve.at(time), curve.log_sum(time)});
    emit(o, cfg, t, {{"cutoff_time", cutoff_time(p.N(), p.b())}});
    return kOk;
}

int cmd_lr(const RunConfig& cfg, std::ostream& o)
{
    if (cfg.lambda.empty() || cfg.mu.empty() || cfg.nu.empty())
        throw InvalidInput("lr needs --lambda, --mu and --nu");
    Partition la = parse_partition(cfg.lambda), mu = parse_partition(cfg.mu), nu = parse_partition(cfg.nu);
    if (cfg.method != "tableaux" && cfg.method != "hive" && cfg.method != "both")
        throw InvalidInput("--method must be tableaux, hive or both");
    Table t{{"method", "value"}, {}};
    std::optional<BigInt> a, h;
    if (cfg.method != "hive") {
        a = count_lr(la, mu, nu);
        t.rows.push_back({std::string("tableaux"), big(*a)});
    }
    if (cfg.method != "tableaux") {
        h = count_hives(la, mu, nu);
        t.rows.push_back({std::string("hive"), big(*h)});
    }
    bool ok = !(a && h) || *a == *h;
    emit(o, cfg, t, {{"status", std::string(ok ? "PASS" : "FAIL")}});
    return ok ? kOk : kVerificationFailed;
}

int cmd_fixpoints(const RunConfig& cfg, std::ostream& o)
{
    ShuffleParams p = shuffle_params(cfg);
    require_stochastic(p);
    if (cfg.samples == 0)
        throw InvalidInput("--samples must be positive");
    long long K = steps_for(cfg, p);
    auto hist = fixed_point_histogram(p, K, cfg.samples, cfg.seed, cfg.threads);
    double rate = fix_limit_rate(cfg.c, p.b());
    std::size_t last = 0;
    for (std::size_t k = 0; k < hist.size(); ++k)
        if (hist[k])
            last = k;
    std::vector<double> law = poisson_law(rate, last + 1);
    Table t{{"k", "count", "empirical_p", "poisson_p"}, {}};
    double total = static_cast<double>(cfg.samples);
    for (std::size_t k = 0; k < law.size(); ++k) {
        std::uint64_t cnt = k < hist.size() ? hist[k] : 0;
        t.rows.push_back({static_cast<long long>(k), static_cast<long long>(cnt), static_cast<double>(cnt) / total,
                          law[k]});
    }
    emit(o, cfg, t,
         {{"K", K},
          {"poisson_rate", rate},
          {"tv_empirical_poisson", tv_histogram_poisson(hist, rate)},
          {"conjecture_tv_limit", tv_poisson(1.0, rate)}});
    return kOk;
}

int cmd_moments(const RunConfig& cfg, std::ostream& o)
{
    ShuffleParams p = shuffle_params(cfg);
    require_stochastic(p);
    if (cfg.p_max < 1 || cfg.p_max > kMaxMomentOrder)
        throw InvalidInput("--p-max must lie in [1, " + std::to_string(kMaxMomentOrder) + "]");
    long long K = steps_for(cfg, p);
    Table t{{"p", "K", "exact", "limit", "abs_gap"}, {}};
    for (int pw = 1; pw <= cfg.p_max; ++pw) {
        double ex = fix_moment_exact(pw, K, p);
        double lim = fix_moment_limit(pw, cfg.c, p.b());
        t.rows.push_back({static_cast<long long>(pw), K, ex, lim, std::abs(ex - lim)});
    }
    emit(o, cfg, t, {{"poisson_rate", fix_limit_rate(cfg.c, p.b())}});
    return kOk;
}

int cmd_zones(const RunConfig& cfg, std::ostream& o)
{
    Rational br = parse_rational(cfg.b);
    if (br <= 0 || br > 1)
        throw InvalidInput("bias b must lie in (0, 1]");
    double b = to_double(br);
    double eps = cfg.epsilon > 0 ? cfg.epsilon : admissible_epsilon(b);
    bool ok = true;

    json doc;
    json kj;
    KConstants k = kij_constants(b);
    const char* names[] = {"K11", "K12", "K13", "K22", "K23", "K33"};
    auto vals = k.values();
    bool negative = true;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        kj[names[i]] = vals[i];
        negative = negative && vals[i] < 0;
    }
    ok = ok && negative;
    doc["a_star"] = a_star(b);
    doc["K"] = kj;
    doc["K_all_negative"] = negative;

    auto red = red_zone_sequence(b);
    auto blue = blue_zone_sequence(b);
    doc["red_sequence"] = {{"start", 0.7}, {"threshold", 1.0}, {"steps", red.size() - 1}, {"values", red}};
    doc["blue_sequence"] = {
        {"start", 0.0}, {"threshold", a_star(b) - 1.0}, {"steps", blue.size() - 1}, {"values", blue}};

    EpsilonValidity v = epsilon_validity(b, eps);
    doc["epsilon"] = eps;
    doc["epsilon_validity"] = {
        {"blue_i", v.blue_i}, {"blue_ii_slope", v.blue_ii_slope}, {"blue_sequence", v.blue_sequence}};
    ok = ok && v.blue_i && v.blue_ii_slope && v.blue_sequence;

    json maxima = json::array();
    for (const auto& m : function_maxima(b, eps)) {
        maxima.push_back({{"name", m.name}, {"maximum", m.maximum}, {"target", m.target}, {"holds", m.holds}});
        ok = ok && m.holds;
    }
    doc["maxima"] = maxima;
    doc["status"] = ok ? "PASS" : "FAIL";

    json out;
    out["meta"] = meta_json(cfg, {});
    out["report"] = doc;
    o << out.dump(2) << '\n';
    return ok ? kOk : kVerificationFailed;
}

const std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>>& handlers()
{
    static const std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>> h{
        {"spectrum", cmd_spectrum},   {"verify-spectrum", cmd_verify_spectrum},
        {"tv", cmd_mix_curve},        {"mix-curve", cmd_mix_curve},
        {"l2bound", cmd_l2bound},     {"lr", cmd_lr},
        {"fixpoints", cmd_fixpoints}, {"moments", cmd_moments},
        {"zones", cmd_zones},
    };
    return h;
}

}  // namespace

const char* version()
{
    return BRT_VERSION_STRING;
}

const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> names{"spectrum", "verify-spectrum", "tv", "mix-curve", "l2bound",
                                                "lr",       "fixpoints",       "moments", "zones"};
    return names;
}

std::string echo_config(const RunConfig& cfg)
{
    std::string s;
    for (const auto& [k, v] : echo_pairs(cfg))
        s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
}

std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out,
                              std::ostream& err)
{
    CLI::App app{"Spectrum, mixing bounds and fixed-point limits of the biased random transposition shuffle", "brt"};
    app.set_version_flag("--version", std::string("brt ") + version());
    app.require_subcommand(1);

    auto deck = [&](CLI::App* s) {
        s->add_option_function<int>("--n", [&](const int& v) { cfg.n = v; }, "Half-deck size (balanced split)");
        s->add_option_function<int>("--nA", [&](const int& v) { cfg.nA = v; }, "Cards in A");
        s->add_option_function<int>("--nB", [&](const int& v) { cfg.nB = v; }, "Cards in B");
        s->add_option("--b", cfg.b, "Bias b in (0, 1], as p/q or an exact decimal")->capture_default_str();
    };
    auto common = [&](CLI::App* s) {
        s->add_option("--format", cfg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        s->add_option("--output,-o", cfg.output, "Output file (default stdout)");
        s->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
        s->add_option("--seed", cfg.seed, "Seed recorded in the header")->capture_default_str();
    };
    auto time = [&](CLI::App* s, const std::string& help) {
        s->add_option_function<double>("--t", [&](const double& v) { cfg.t = v; }, help);
    };

    auto* spectrum = app.add_subcommand("spectrum", "Full spectrum, one row per LR triple");
    deck(spectrum);
    common(spectrum);

    auto* verify = app.add_subcommand("verify-spectrum", "Compare the spectrum with a numeric eigensolver");
    deck(verify);
    common(verify);
    verify->add_option("--tol", cfg.tol, "Per-eigenvalue tolerance")->capture_default_str();

    for (const char* name : {"tv", "mix-curve"}) {
        auto* s = app.add_subcommand(name, "Exact TV, l2 bound and Poisson lower bound for t = 0..T");
        deck(s);
        common(s);
        time(s, "Last time step (default 100)");
    }

    auto* l2 = app.add_subcommand("l2bound", "l2 upper bound at one time");
    deck(l2);
    common(l2);
    time(l2, "Time (default (N/2b)(log N - c))");
    l2->add_option("--c", cfg.c, "Window offset")->capture_default_str();

    auto* lr = app.add_subcommand("lr", "One Littlewood-Richardson coefficient");
    common(lr);
    lr->add_option("--lambda", cfg.lambda, "Outer partition, e.g. 4,3,2")->required();
    lr->add_option("--mu", cfg.mu, "First inner partition")->required();
    lr->add_option("--nu", cfg.nu, "Second inner partition")->required();
    lr->add_option("--method", cfg.method, "tableaux, hive or both")
        ->check(CLI::IsMember({"tableaux", "hive", "both"}))
        ->capture_default_str();

    auto* fix = app.add_subcommand("fixpoints", "Monte Carlo fixed-point histogram against Poisson");
    deck(fix);
    common(fix);
    time(fix, "Steps (default round((N/2b)(log N - c)))");
    fix->add_option("--c", cfg.c, "Window offset")->capture_default_str();
    fix->add_option("--samples", cfg.samples, "Number of walks")->capture_default_str();

    auto* mom = app.add_subcommand("moments", "Exact fixed-point moments against the Poisson limit");
    deck(mom);
    common(mom);
    time(mom, "Steps (default round((N/2b)(log N - c)))");
    mom->add_option("--c", cfg.c, "Window offset")->capture_default_str();
    mom->add_option("--p-max", cfg.p_max, "Highest moment")->capture_default_str();

    auto* zones = app.add_subcommand("zones", "Zone constants, sequences and function maxima (JSON)");
    zones->add_option("--b", cfg.b, "Bias b in (0, 1]")->capture_default_str();
    zones->add_option("--epsilon", cfg.epsilon, "Zone epsilon (0 = largest admissible)")->capture_default_str();
    zones->add_option("--output,-o", cfg.output, "Output file (default stdout)");
    zones->add_option("--seed", cfg.seed, "Seed recorded in the header")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }
    for (auto* s : app.get_subcommands())
        cfg.command = s->get_name();
    if (cfg.command == "zones")
        cfg.format = "json";
    return std::nullopt;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    auto it = handlers().find(cfg.command);
    if (it == handlers().end()) {
        err << "error: unknown command '" << cfg.command << "'\n";
        return kInvalidInput;
    }
    try {
        if (!cfg.output.empty()) {
            std::ostringstream buf;
            int code = it->second(cfg, buf);
            std::ofstream f(cfg.output, std::ios::binary);
            if (!f)
                throw InvalidInput("cannot open " + cfg.output);
            f << buf.str();
            return code;
        }
        return it->second(cfg, out);
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << '\n';
        return kResourceGuard;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

}  // namespace brt::cli
