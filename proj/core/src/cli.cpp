#include "octobil/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "octobil/bounds.hpp"
#include "octobil/catalog.hpp"
#include "octobil/restriction.hpp"
#include "octobil/tensor_io.hpp"
#include "octobil/verification.hpp"

namespace octobil::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_vector(const std::string& csv) {
    std::vector<Rational> v;
    std::string tok;
    for (size_t i = 0; i <= csv.size(); ++i) {
        if (i == csv.size() || csv[i] == ',') {
            if (tok.empty()) throw UsageError("empty vector component");
            v.push_back(Rational::parse(tok));
            tok.clear();
        } else {
            tok += csv[i];
        }
    }
    if (v.empty()) throw UsageError("empty vector");
    return v;
}

std::string vector_str(const std::vector<Rational>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].str();
    }
    return out;
}

// Common per-subcommand state.
struct Options {
    std::string map_id;
    std::string a_pattern, b_pattern;
    std::string x_str, y_str, z_str;
    std::string side = "left";
    std::string strategy = "kernel";
    std::string format;  // "json" or "text"; empty = subcommand default
    std::string output_path;
    uint64_t trials = 10000;
    uint64_t samples = 100;
    uint64_t budget = 1000;
    uint64_t seed = kDefaultSeed;
    int64_t bound = 5;
    int restarts = 8;
    int max_iters = 200;
    double tol = 1e-12;
    int query_r = 0, query_s = 0;
    bool list_entries = false;
};

// Resolves --map with optional --a/--b restriction patterns.
MapPtr resolve_map(const Options& opt) {
    if (opt.map_id.empty()) throw UsageError("--map is required");
    MapPtr m;
    try {
        m = builtin(opt.map_id);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (opt.a_pattern.empty() != opt.b_pattern.empty())
        throw UsageError("--a and --b must be given together");
    if (!opt.a_pattern.empty()) {
        try {
            RestrictedMap rm(m, SubspacePattern::parse(opt.a_pattern),
                             SubspacePattern::parse(opt.b_pattern));
            return rm.as_bilinear_map();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return m;
}

class Output {
public:
    explicit Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output path '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

bool use_json(const Options& opt, bool json_default) {
    if (opt.format.empty()) return json_default;
    if (opt.format == "json") return true;
    if (opt.format == "text") return false;
    throw UsageError("--format must be json or text");
}

int emit_report(const VerificationReport& rep, const Options& opt, std::ostream& out_stream) {
    Output out(opt.output_path, out_stream);
    if (use_json(opt, true))
        out.stream() << rep.json_str();
    else
        out.stream() << rep.text();
    return rep.passed() ? 0 : 1;
}

int cmd_list(const Options& opt, std::ostream& os) {
    Output out(opt.output_path, os);
    if (use_json(opt, false)) {
        ordered_json j = ordered_json::array();
        for (const auto& id : builtin_ids()) {
            const auto m = builtin(id);
            j.push_back({{"id", id}, {"r", m->r()}, {"s", m->s()}, {"k", m->k()},
                         {"description", m->description()}});
        }
        out.stream() << j.dump(2) << "\n";
    } else {
        for (const auto& id : builtin_ids()) {
            const auto m = builtin(id);
            out.stream() << std::left << std::setw(16) << id << " " << std::setw(2) << m->r() << " x "
                         << std::setw(2) << m->s() << " -> " << std::setw(2) << m->k() << "  "
                         << m->description() << "\n";
        }
        out.stream() << "parametric: poly_mul(r,s), complex_poly_mul(r,s) with r,s even\n";
    }
    return 0;
}

int cmd_eval(const Options& opt, std::ostream& os) {
    const auto m = resolve_map(opt);
    if (opt.x_str.empty() || opt.y_str.empty()) throw UsageError("eval requires --x and --y");
    const auto x = parse_vector(opt.x_str);
    const auto y = parse_vector(opt.y_str);
    if (static_cast<int>(x.size()) != m->r())
        throw UsageError("--x has " + std::to_string(x.size()) + " components, map needs " +
                         std::to_string(m->r()));
    if (static_cast<int>(y.size()) != m->s())
        throw UsageError("--y has " + std::to_string(y.size()) + " components, map needs " +
                         std::to_string(m->s()));
    const auto v = m->evaluate(x, y);
    Output out(opt.output_path, os);
    if (use_json(opt, false)) {
        ordered_json j;
        j["map"] = m->id();
        j["value"] = ordered_json::array();
        for (const auto& c : v) j["value"].push_back(c.str());
        out.stream() << j.dump(2) << "\n";
    } else {
        out.stream() << vector_str(v) << "\n";
    }
    return 0;
}

int cmd_tensor(const Options& opt, std::ostream& os) {
    const auto m = resolve_map(opt);
    Output out(opt.output_path, os);
    if (use_json(opt, true)) {
        out.stream() << tensor_to_json(m->tensor()).dump(2) << "\n";
    } else {
        const auto& t = m->tensor();
        out.stream() << m->id() << ": " << t.r << " x " << t.s << " -> " << t.k << ", "
                     << t.entries.size() << " nonzero entries\n";
        for (const auto& e : t.entries)
            out.stream() << "  c[" << e.t << "][" << e.i << "][" << e.j << "] = " << e.value.str()
                         << "\n";
    }
    return 0;
}

int cmd_fuzz(const Options& opt, std::ostream& os) {
    const auto m = resolve_map(opt);
    return emit_report(fuzz_nonsingularity(*m, opt.trials, opt.seed, opt.bound), opt, os);
}

int cmd_rank(const Options& opt, std::ostream& os) {
    const auto m = resolve_map(opt);
    Side side;
    if (opt.side == "left") side = Side::Left;
    else if (opt.side == "right") side = Side::Right;
    else throw UsageError("--side must be left or right");
    return emit_report(rank_profile(*m, side, opt.samples, opt.seed, opt.bound), opt, os);
}

int cmd_witness(const Options& opt, std::ostream& os) {
    const auto m = resolve_map(opt);
    WitnessStrategy strategy;
    if (opt.strategy == "diagonal") strategy = WitnessStrategy::Diagonal;
    else if (opt.strategy == "random") strategy = WitnessStrategy::Random;
    else if (opt.strategy == "kernel") strategy = WitnessStrategy::RandomizedKernel;
    else throw UsageError("--strategy must be diagonal, random or kernel");
    return emit_report(witness_report(*m, strategy, opt.budget, opt.seed, opt.bound), opt, os);
}

int cmd_margin(const Options& opt, std::ostream& os) {
    const auto m = resolve_map(opt);
    return emit_report(margin_estimate(*m, opt.restarts, opt.max_iters, opt.tol, opt.seed), opt, os);
}

int cmd_restrict(const Options& opt, std::ostream& os) {
    if (opt.map_id.empty()) throw UsageError("--map is required");
    if (opt.a_pattern.empty() || opt.b_pattern.empty())
        throw UsageError("restrict requires --a and --b patterns");
    MapPtr parent;
    try {
        parent = builtin(opt.map_id);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::optional<RestrictedMap> rm;
    try {
        rm.emplace(parent, SubspacePattern::parse(opt.a_pattern), SubspacePattern::parse(opt.b_pattern));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Output out(opt.output_path, os);
    if (use_json(opt, true)) {
        ordered_json j;
        j["map"] = parent->id();
        j["a"] = rm->a_pattern().str();
        j["b"] = rm->b_pattern().str();
        j["r"] = rm->r();
        j["s"] = rm->s();
        j["k"] = rm->k();
        j["pivots"] = rm->codomain_span().pivots;
        out.stream() << j.dump(2) << "\n";
    } else {
        out.stream() << parent->id() << " restricted to a=" << rm->a_pattern().str()
                     << " b=" << rm->b_pattern().str() << ": " << rm->r() << " x " << rm->s()
                     << " -> " << rm->k() << "\n";
    }
    return 0;
}

int cmd_table_newnbl(const Options& opt, std::ostream& os) {
    const auto rows = newnbl_table();
    Output out(opt.output_path, os);
    if (use_json(opt, false)) {
        ordered_json j = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json e;
            e["row"] = row.row_id;
            e["a"] = row.a_pattern.str();
            e["b"] = row.b_pattern.str();
            e["computed"] = {row.computed_r, row.computed_s, row.computed_k};
            e["claimed"] = {row.claimed_r, row.claimed_s, row.claimed_k};
            e["match"] = row.match;
            if (!row.note.empty()) e["note"] = row.note;
            j.push_back(std::move(e));
        }
        out.stream() << j.dump(2) << "\n";
    } else {
        out.stream() << "row  a-pattern    b-pattern    computed      claimed       match\n";
        for (const auto& row : rows) {
            std::ostringstream comp, claim;
            comp << "(" << row.computed_r << "," << row.computed_s << "," << row.computed_k << ")";
            claim << "(" << row.claimed_r << "," << row.claimed_s << "," << row.claimed_k << ")";
            out.stream() << std::left << std::setw(5) << row.row_id << std::setw(13)
                         << row.a_pattern.str() << std::setw(13) << row.b_pattern.str()
                         << std::setw(14) << comp.str() << std::setw(14) << claim.str()
                         << (row.match ? "yes" : "NO") << "\n";
            if (!row.note.empty()) out.stream() << "     note: " << row.note << "\n";
        }
    }
    return 0;
}

int cmd_bounds(const Options& opt, std::ostream& os) {
    const auto& reg = BoundsRegistry::instance();
    Output out(opt.output_path, os);
    if (opt.list_entries) {
        if (use_json(opt, false)) {
            ordered_json j = ordered_json::array();
            for (const auto& src : reg.sources()) {
                j.push_back({{"source", src.id}, {"r", src.map->r()}, {"s", src.map->s()},
                             {"k", src.map->k()}, {"notes", src.notes}});
            }
            out.stream() << j.dump(2) << "\n";
        } else {
            for (const auto& src : reg.sources())
                out.stream() << std::left << std::setw(36) << src.id << " " << std::setw(2)
                             << src.map->r() << " x " << std::setw(2) << src.map->s() << " -> "
                             << std::setw(2) << src.map->k()
                             << (src.notes.empty() ? "" : "  " + src.notes) << "\n";
        }
        return 0;
    }
    if (opt.query_r < 1 || opt.query_s < 1) throw UsageError("bounds requires --r and --s (or --list)");
    const auto e = reg.best_upper_bound(opt.query_r, opt.query_s);
    if (use_json(opt, false)) {
        ordered_json j;
        j["r"] = e.r;
        j["s"] = e.s;
        j["k"] = e.k;
        j["source"] = e.source;
        if (!e.notes.empty()) j["notes"] = e.notes;
        out.stream() << j.dump(2) << "\n";
    } else {
        out.stream() << e.r << "#" << e.s << " <= " << e.k << " via " << e.source
                     << (e.notes.empty() ? "" : " (" + e.notes + ")") << "\n";
    }
    return 0;
}

int cmd_sections(const Options& opt, std::ostream& os) {
    const auto& reg = BoundsRegistry::instance();
    Output out(opt.output_path, os);
    const auto rows = reg.section_table();
    if (use_json(opt, false)) {
        ordered_json j = ordered_json::array();
        for (const auto& e : rows)
            j.push_back({{"k", e.k}, {"n", e.n}, {"sections", e.s}, {"source", e.source}});
        out.stream() << j.dump(2) << "\n";
    } else {
        for (const auto& e : rows)
            out.stream() << e.k << "xi_" << e.n << " has " << e.s << " independent sections  ("
                         << e.source << ")\n";
    }
    return 0;
}

int cmd_quotient(const Options& opt, std::ostream& os) {
    const auto m = resolve_map(opt);
    if (opt.z_str.empty()) throw UsageError("quotient requires --z");
    auto z = parse_vector(opt.z_str);
    if (static_cast<int>(z.size()) != m->k())
        throw UsageError("--z has " + std::to_string(z.size()) + " components, map codomain is " +
                         std::to_string(m->k()));
    MapPtr q;
    try {
        q = quotient_project(m, std::move(z));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Output out(opt.output_path, os);
    if (use_json(opt, true)) {
        ordered_json j;
        j["map"] = q->id();
        j["tensor"] = tensor_to_json(q->tensor());
        out.stream() << j.dump(2) << "\n";
    } else {
        out.stream() << q->id() << ": " << q->r() << " x " << q->s() << " -> " << q->k() << "\n";
    }
    return 0;
}

int cmd_avoid(const Options& opt, std::ostream& os) {
    const auto m = resolve_map(opt);
    if (opt.z_str.empty()) throw UsageError("avoid requires --z");
    const auto z = parse_vector(opt.z_str);
    if (static_cast<int>(z.size()) != m->k())
        throw UsageError("--z has " + std::to_string(z.size()) + " components, map codomain is " +
                         std::to_string(m->k()));
    return emit_report(verify_not_in_image(*m, z, opt.trials, opt.seed, opt.bound), opt, os);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"octobil: exact workbench for nonsingular bilinear maps built from octonion arithmetic"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* sub, bool with_map) {
        if (with_map) {
            sub->add_option("--map", opt.map_id, "map id (see `list`)");
            sub->add_option("--a", opt.a_pattern, "a-side slot pattern (tokens 0,r,z,q,o,rq,rz,rzq)");
            sub->add_option("--b", opt.b_pattern, "b-side slot pattern");
        }
        sub->add_option("--format", opt.format, "output format: json or text");
        sub->add_option("-o,--output", opt.output_path, "write output to a file");
    };
    auto add_campaign = [&](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "RNG seed (default 0xC0DA)");
        sub->add_option("--bound", opt.bound, "coordinate bound B, samples are uniform in [-B,B]");
    };

    auto* list = app.add_subcommand("list", "list the builtin map catalog");
    add_common(list, false);

    auto* eval = app.add_subcommand("eval", "evaluate a map at exact points");
    add_common(eval, true);
    eval->add_option("--x", opt.x_str, "left argument, comma-separated rationals");
    eval->add_option("--y", opt.y_str, "right argument, comma-separated rationals");

    auto* tensor = app.add_subcommand("tensor", "export structure constants");
    add_common(tensor, true);

    auto* fuzz = app.add_subcommand("fuzz", "sample exact pairs hunting for zeros");
    add_common(fuzz, true);
    add_campaign(fuzz);
    fuzz->add_option("--trials", opt.trials, "number of sampled pairs (default 10000)");

    auto* rank = app.add_subcommand("rank", "exact rank of fixed-argument matrices at sampled points");
    add_common(rank, true);
    add_campaign(rank);
    rank->add_option("--samples", opt.samples, "number of sampled points (default 100)");
    rank->add_option("--side", opt.side, "left (rank in y) or right (rank in x)");

    auto* witness = app.add_subcommand("witness", "search for a kernel pair f(x,y)=0");
    add_common(witness, true);
    add_campaign(witness);
    witness->add_option("--budget", opt.budget, "search budget (default 1000)");
    witness->add_option("--strategy", opt.strategy, "diagonal, random or kernel");

    auto* margin = app.add_subcommand("margin", "estimate min |f(x,y)| over the unit spheres");
    add_common(margin, true);
    margin->add_option("--seed", opt.seed, "RNG seed (default 0xC0DA)");
    margin->add_option("--restarts", opt.restarts, "random restarts (default 8)");
    margin->add_option("--max-iters", opt.max_iters, "iteration cap per restart (default 200)");
    margin->add_option("--tol", opt.tol, "stagnation tolerance (default 1e-12)");

    auto* restrict_cmd = app.add_subcommand("restrict", "restrict a map to coordinate subspaces");
    add_common(restrict_cmd, true);

    auto* table = app.add_subcommand("table-newnbl", "the tabulated restrictions of main_f");
    add_common(table, false);

    auto* bounds = app.add_subcommand("bounds", "best registered upper bound for r#s");
    add_common(bounds, false);
    bounds->add_option("--r", opt.query_r, "left dimension");
    bounds->add_option("--s", opt.query_s, "right dimension");
    bounds->add_flag("--list", opt.list_entries, "list registered sources instead");

    auto* sections = app.add_subcommand("sections", "section counts derived from the restriction table");
    add_common(sections, false);

    auto* quotient = app.add_subcommand("quotient", "project the codomain along a vector");
    add_common(quotient, true);
    quotient->add_option("--z", opt.z_str, "codomain vector, comma-separated rationals");

    auto* avoid = app.add_subcommand("avoid", "check a line is never attained by the image");
    add_common(avoid, true);
    add_campaign(avoid);
    avoid->add_option("--z", opt.z_str, "codomain vector, comma-separated rationals");
    avoid->add_option("--trials", opt.trials, "number of sampled pairs (default 10000)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*list) return cmd_list(opt, out);
        if (*eval) return cmd_eval(opt, out);
        if (*tensor) return cmd_tensor(opt, out);
        if (*fuzz) return cmd_fuzz(opt, out);
        if (*rank) return cmd_rank(opt, out);
        if (*witness) return cmd_witness(opt, out);
        if (*margin) return cmd_margin(opt, out);
        if (*restrict_cmd) return cmd_restrict(opt, out);
        if (*table) return cmd_table_newnbl(opt, out);
        if (*bounds) return cmd_bounds(opt, out);
        if (*sections) return cmd_sections(opt, out);
        if (*quotient) return cmd_quotient(opt, out);
        if (*avoid) return cmd_avoid(opt, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace octobil::cli
