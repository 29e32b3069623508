#include "chainmdp/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chainmdp/block.hpp"
#include "chainmdp/json_io.hpp"

namespace chainmdp {

using io::json;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

namespace {

struct Options {
    std::string code, matrix, field_code, ring, element;
    std::string method = "minors", rows = "example", strategy = "exhaustive";
    std::size_t n = 0, k = 0, delta = 0, L = 0, max_j = 0, ell = 0;
    std::size_t max_results = SIZE_MAX;
    std::uint32_t nu = 1, p = 0;
    std::uint64_t budget = kDefaultBudget, seed = 0;
    unsigned threads = 1;
    bool timing = false, reverse = false, with_minors = false;
};

class Session {
public:
    Session(const std::vector<std::string>& args, std::istream& in) : args_(args), in_(in) {
        for (const auto& a : args) digest_input_ += a + '\0';
    }

    json read(const std::string& path) {
        std::string text;
        if (path == "-") {
            text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
        } else {
            std::ifstream f(path, std::ios::binary);
            if (!f) fail(ErrorCode::ParseError, "cannot read '" + path + "'");
            text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
        }
        digest_input_ += text;
        return io::parse(text);
    }

    void warn(std::string w) { warnings_.push_back(std::move(w)); }

    json report(json results) const {
        return {{"schema_version", kReportSchemaVersion},
                {"command", args_},
                {"input_digest", "fnv1a64:" + fnv1a_hex(digest_input_)},
                {"results", std::move(results)},
                {"warnings", warnings_}};
    }

private:
    std::vector<std::string> args_;
    std::istream& in_;
    std::string digest_input_;
    json warnings_ = json::array();
};

/// What a command produced: the document to print and the exit code.
struct Outcome {
    json document;
    int exit_code = 0;
};

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
    std::vector<std::size_t> out(v);
    for (auto& x : out) ++x;
    return out;
}

MdpMethod method_of(const std::string& m) { return m == "distances" ? MdpMethod::Distances : MdpMethod::Minors; }

json mdp_details(const MdpReport& r) {
    json out = {{"holds", r.holds}, {"L", r.L}, {"targets", r.targets}};
    if (!r.distances.empty()) out["distances"] = r.distances;
    if (r.witness) out["dependent_columns"] = one_based(r.witness->columns);
    return out;
}

json code_summary(const ConvCode& code) {
    json out = {{"ring", code.ring().name()}, {"n", code.n()}, {"k", code.k()}, {"encoder", to_string(code.encoder())}};
    out["reduced"] = code.reduced();
    out["delay_free"] = code.delay_free();
    if (code.reduced()) out["delta"] = code.delta();
    return out;
}

// --- commands ----------------------------------------------------------------------

Outcome cmd_ring(Session& s, const Options& o) {
    const ChainRing R = io::ring_from_json(o.ring.front() == '{' ? io::parse(o.ring) : json(o.ring));
    json res = {{"ring", io::ring_to_json(R)}, {"name", R.name()},      {"p", R.p()},
                {"q", R.q()},                  {"nu", R.nu()},          {"size", R.size()},
                {"gamma", io::element_to_json(R.gamma())}};
    if (R.q() <= 4096) {
        json T = json::array();
        for (const auto& t : R.representatives()) T.push_back(io::element_to_json(t));
        res["representatives"] = std::move(T);
    } else {
        s.warn("representative set omitted (q > 4096)");
    }
    if (!o.element.empty()) {
        const Element a = io::element_from_json(R, io::parse(o.element));
        json digits = json::array();
        for (const auto& d : R.gamma_adic_decompose(a)) digits.push_back(io::element_to_json(d));
        res["element"] = {{"value", io::element_to_json(a)},
                          {"valuation", R.valuation(a)},
                          {"unit", R.is_unit(a)},
                          {"gamma_adic_digits", std::move(digits)}};
    }
    return {s.report(std::move(res)), 0};
}

ChainRing ring_option(const std::string& text) {
    return io::ring_from_json(!text.empty() && text.front() == '{' ? io::parse(text) : json(text));
}

Outcome emit_code(Session& s, const PolyMatrix& encoder, json results) {
    const ConvCode code(encoder);
    results["code"] = code_summary(code);
    json doc = io::code_to_json(encoder);
    doc["report"] = s.report(std::move(results));
    return {std::move(doc), 0};
}

Outcome cmd_construct_lift(Session& s, const Options& o) {
    const PolyMatrix field = io::encoder_from_json(s.read(o.field_code));
    const ChainRing R = ring_option(o.ring);
    return emit_code(s, lift_encoder(field, R), {{"construction", "lift"}, {"field_encoder", to_string(field)}});
}

Outcome cmd_construct_binomial(Session& s, const Options& o) {
    const auto b = binomial_encoder(o.n, o.k, o.delta, o.p);
    for (const auto& w : b.warnings) s.warn(w);
    json res = {{"construction", "binomial"}, {"bound", b.bound}, {"bound_satisfied", b.bound_satisfied}};
    const PolyMatrix g = o.ring.empty() ? b.encoder : lift_encoder(b.encoder, ring_option(o.ring));
    return emit_code(s, g, std::move(res));
}

Outcome cmd_construct_superregular(Session& s, const Options& o) {
    const ToeplitzSpec t = io::toeplitz_from_json(s.read(o.matrix));
    const auto convention = o.rows == "formula" ? RowConvention::Formula : RowConvention::Example;
    const auto ex = extract_mdp_blocks(t, o.n, o.k, o.L, convention);
    if (!ex.minors_unit) s.warn("extracted sliding matrix has a non-unit admissible minor");
    json res = {{"construction", "superregular"}, {"rows", o.rows},           {"selected_rows", ex.rows},
                {"selected_cols", ex.cols},        {"minors_unit", ex.minors_unit}};
    PolyMatrix blocks = t.ring.is_field() ? ex.blocks : ex.blocks.project();
    if (!o.ring.empty()) blocks = lift_encoder(blocks, ring_option(o.ring));
    else if (!t.ring.is_field()) blocks = lift_encoder(blocks, t.ring);
    return emit_code(s, blocks, std::move(res));
}

Outcome cmd_check(Session& s, const Options& o, const std::string& property) {
    const PolyMatrix g = io::encoder_from_json(s.read(o.code));
    json res = {{"property", property}};
    bool holds = false;
    if (property == "delay-free") {
        holds = is_delay_free(g);
    } else if (property == "reduced") {
        holds = is_reduced(g);
    } else if (property == "gamma-basis") {
        holds = is_polynomial_gamma_basis(g, std::nullopt, o.budget);
    } else {
        const ConvCode code(g, o.budget);
        res["code"] = code_summary(code);
        std::vector<std::string> methods;
        if (o.method == "both") methods = {"minors", "distances"};
        else methods = {o.method};
        json per = json::object();
        std::optional<bool> first;
        for (const auto& m : methods) {
            bool h = false;
            if (property == "mdp") {
                const MdpReport r = analyze_mdp(code, method_of(m), o.budget, o.threads);
                h = r.holds;
                per[m] = mdp_details(r);
            } else {
                h = is_reverse_mdp(code, method_of(m), o.budget, o.threads);
                per[m] = {{"holds", h}};
            }
            if (first && *first != h)
                fail(ErrorCode::InternalInvariant, "minors and distances methods disagree on this code");
            first = h;
        }
        if (property == "reverse-mdp") res["reverse_encoder"] = to_string(reverse_encoder(code));
        res["methods"] = std::move(per);
        if (methods.size() == 2) res["agree"] = true;
        holds = *first;
    }
    res["holds"] = holds;
    return {s.report(std::move(res)), holds ? 0 : 1};
}

Outcome cmd_distances(Session& s, const Options& o, bool max_j_given) {
    const ConvCode code(io::encoder_from_json(s.read(o.code)), o.budget);
    const std::size_t delta = code.delta();
    const std::uint32_t nu = code.ring().nu();
    const DistanceBounds b = distance_bounds(code.n(), code.k(), delta, nu, std::nullopt);
    const std::size_t max_j = max_j_given ? o.max_j : b.L;
    const DistanceProfile profile = column_distances(code, max_j, o.budget, o.threads);
    const BlockParameters g0 = parameters_of(code.encoder().coeff(0));
    json per_j = json::array();
    bool all_saturated = true;
    for (std::size_t j = 0; j <= max_j; ++j) {
        const long long optimal = optimal_cd_bound(j, code.n(), code.k(), nu);
        const long long from_g0 = column_distance_bound(j, code.n(), g0, code.k());
        const bool saturated = static_cast<long long>(profile.values[j]) == optimal;
        all_saturated = all_saturated && saturated;
        per_j.push_back({{"j", j},
                         {"distance", profile.values[j]},
                         {"optimal_bound", optimal},
                         {"g0_bound", from_g0},
                         {"saturated", saturated}});
    }
    json res = {{"code", code_summary(code)},
                {"profile", profile.values},
                {"per_j", std::move(per_j)},
                {"all_saturated", all_saturated},
                {"L", b.L},
                {"L_closed_form", b.L_closed_form},
                {"generalized_singleton", b.generalized_singleton}};
    return {s.report(std::move(res)), 0};
}

Outcome cmd_bounds(Session& s, const Options& o, bool max_j_given) {
    const DistanceBounds b = distance_bounds(o.n, o.k, o.delta, o.nu, max_j_given ? std::optional(o.max_j) : std::nullopt);
    json res = {{"n", o.n},
                {"k", o.k},
                {"delta", o.delta},
                {"nu", o.nu},
                {"generalized_singleton", b.generalized_singleton},
                {"L", b.L},
                {"L_closed_form", b.L_closed_form},
                {"N", b.N},
                {"optimal_parameters", optimal_parameters(o.k, o.nu).k},
                {"column_distance_bounds", b.per_j}};
    if (!b.L_closed_form) s.warn("nu does not divide k: L found by direct search and the optimal bound may not hold");
    return {s.report(std::move(res)), 0};
}

Outcome cmd_blockcode(Session& s, const Options& o, const std::string& what) {
    const RingMatrix a = io::matrix_from_json(s.read(o.matrix));
    json res = {{"query", what}};
    if (what == "shape") {
        res["mu"] = shape_of(a).mu;
        res["gamma_dimension"] = gamma_dimension(a);
        res["diagonal_exponents"] = diagonal_exponents(a);
    } else if (what == "standard-form") {
        const StandardForm f = standard_form(a);
        res["matrix"] = io::matrix_to_json(f.matrix);
        res["perm"] = one_based(f.perm);
        res["levels"] = f.levels;
        res["params"] = f.params.k;
    } else if (what == "params") {
        const BlockCode code(a);
        res["params"] = code.parameters().k;
        res["converted"] = code.converted();
        res["generator"] = io::matrix_to_json(code.generator());
    } else {
        const BlockCode code(a);
        const std::size_t d = min_distance_block(code, o.budget, o.threads);
        const std::size_t bound = singleton_bound_block(code.n(), code.k(), code.ring().nu());
        res["min_distance"] = d;
        res["singleton_bound"] = bound;
        res["mds"] = d == bound;
    }
    return {s.report(std::move(res)), 0};
}

Outcome cmd_search(Session& s, const Options& o, bool seed_given) {
    SuperregularSearch opts;
    opts.exhaustive = o.strategy == "exhaustive";
    if (!opts.exhaustive && !seed_given) fail(ErrorCode::InvalidParams, "random search needs an explicit --seed");
    opts.seed = o.seed;
    opts.budget = o.budget;
    opts.reverse = o.reverse;
    opts.max_results = o.max_results;
    const auto hits = search_superregular(o.ell, ring_option(o.ring), opts);
    json found = json::array();
    for (const auto& t : hits) found.push_back(io::certificate_to_json(t, o.with_minors));
    json res = {{"ell", o.ell}, {"strategy", o.strategy}, {"reverse", o.reverse}, {"count", hits.size()},
                {"found", std::move(found)}};
    if (!opts.exhaustive) res["seed"] = o.seed;
    return {s.report(std::move(res)), hits.empty() ? 1 : 0};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Construct and verify MDP convolutional codes over finite chain rings", "chainmdp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "chainmdp 1.0");

    const std::vector<std::string> methods{"minors", "distances", "both"};
    auto add_budget = [&](CLI::App* c) {
        c->add_option("--budget", o.budget, "enumeration budget")->capture_default_str();
        c->add_option("--threads", o.threads, "worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
    };
    auto add_timing = [&](CLI::App* c) { c->add_flag("--timing", o.timing, "add wall-clock timing to the report"); };

    CLI::App* ring = app.add_subcommand("ring", "describe a chain ring");
    ring->add_option("--ring", o.ring, "ring shorthand (z121, f7) or JSON descriptor")->required();
    ring->add_option("--element", o.element, "element (JSON) to decompose gamma-adically");

    CLI::App* construct = app.add_subcommand("construct", "build a code; prints a loadable code descriptor");
    construct->require_subcommand(1);
    CLI::App* lift = construct->add_subcommand("lift", "lift a residue-field code");
    lift->add_option("--field-code", o.field_code, "code descriptor over the residue field ('-' for stdin)")->required();
    lift->add_option("--ring", o.ring, "target ring")->required();
    CLI::App* binomial = construct->add_subcommand("binomial", "binomial encoder over F_p");
    binomial->add_option("--n", o.n)->required();
    binomial->add_option("--k", o.k)->required();
    binomial->add_option("--delta", o.delta)->required();
    binomial->add_option("--p", o.p, "prime")->required();
    binomial->add_option("--ring", o.ring, "optional ring to lift into");
    CLI::App* superregular = construct->add_subcommand("superregular", "blocks of a superregular Toeplitz matrix");
    superregular->add_option("--matrix", o.matrix, "Toeplitz descriptor ('-' for stdin)")->required();
    superregular->add_option("--n", o.n)->required();
    superregular->add_option("--k", o.k)->required();
    superregular->add_option("--L", o.L)->required();
    superregular->add_option("--ring", o.ring, "optional ring to lift into");
    superregular->add_option("--rows", o.rows, "row selection")->check(CLI::IsMember({"example", "formula"}))->capture_default_str();
    for (auto* c : {lift, binomial, superregular}) add_timing(c);

    CLI::App* check = app.add_subcommand("check", "test a code property");
    check->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> checks;
    for (const char* name : {"mdp", "reverse-mdp", "delay-free", "reduced", "gamma-basis"}) {
        CLI::App* c = check->add_subcommand(name);
        c->add_option("--code", o.code, "code descriptor ('-' for stdin)")->required();
        if (std::string(name) == "mdp" || std::string(name) == "reverse-mdp")
            c->add_option("--method", o.method)->check(CLI::IsMember(methods))->capture_default_str();
        add_budget(c);
        add_timing(c);
        checks.emplace_back(name, c);
    }

    CLI::App* distances = app.add_subcommand("distances", "column distances against their bounds");
    distances->add_option("--code", o.code, "code descriptor ('-' for stdin)")->required();
    CLI::Option* dist_max_j = distances->add_option("--max-j", o.max_j, "last j (default L)");
    add_budget(distances);
    add_timing(distances);

    CLI::App* bounds = app.add_subcommand("bounds", "distance bounds from parameters");
    bounds->add_option("--n", o.n)->required();
    bounds->add_option("--k", o.k)->required();
    bounds->add_option("--delta", o.delta)->required();
    bounds->add_option("--nu", o.nu)->capture_default_str();
    CLI::Option* bounds_max_j = bounds->add_option("--max-j", o.max_j, "last j (default L)");

    CLI::App* blockcode = app.add_subcommand("blockcode", "block-code structure");
    blockcode->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> blocks;
    for (const char* name : {"shape", "standard-form", "params", "mindist"}) {
        CLI::App* c = blockcode->add_subcommand(name);
        c->add_option("--matrix", o.matrix, "matrix descriptor ('-' for stdin)")->required();
        add_budget(c);
        blocks.emplace_back(name, c);
    }

    CLI::App* search = app.add_subcommand("search", "search for structured matrices");
    search->require_subcommand(1);
    CLI::App* search_sr = search->add_subcommand("superregular", "superregular Toeplitz matrices with a_1 = 1");
    search_sr->add_option("--ell", o.ell, "matrix size")->required();
    search_sr->add_option("--ring", o.ring)->required();
    search_sr->add_option("--strategy", o.strategy)->check(CLI::IsMember({"exhaustive", "random"}))->capture_default_str();
    CLI::Option* seed = search_sr->add_option("--seed", o.seed, "required for the random strategy");
    search_sr->add_flag("--reverse", o.reverse, "require reverse superregularity");
    search_sr->add_option("--max-results", o.max_results);
    search_sr->add_flag("--with-minors", o.with_minors, "list every proper minor with its valuation");
    add_budget(search_sr);
    add_timing(search_sr);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Session session(args, in);
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
        if (ring->parsed()) result = cmd_ring(session, o);
        else if (lift->parsed()) result = cmd_construct_lift(session, o);
        else if (binomial->parsed()) result = cmd_construct_binomial(session, o);
        else if (superregular->parsed()) result = cmd_construct_superregular(session, o);
        else if (distances->parsed()) result = cmd_distances(session, o, dist_max_j->count() > 0);
        else if (bounds->parsed()) result = cmd_bounds(session, o, bounds_max_j->count() > 0);
        else if (search_sr->parsed()) result = cmd_search(session, o, seed->count() > 0);
        for (const auto& [name, c] : checks)
            if (c->parsed()) result = cmd_check(session, o, name);
        for (const auto& [name, c] : blocks)
            if (c->parsed()) result = cmd_blockcode(session, o, name);
    } catch (const Error& e) {
        json doc = session.report(json::object());
        doc["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
        out << doc.dump(2) << '\n';
        err << "chainmdp: " << e.what() << '\n';
        return 2;
    }
    if (o.timing) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json& report = result.document.contains("report") ? result.document["report"] : result.document;
        report["timing"] = {{"seconds", secs}};
    }
    out << result.document.dump(2) << '\n';
    return result.exit_code;
}

}  // namespace chainmdp
