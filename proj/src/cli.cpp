#include "wittdiv/cli.hpp"

#include "wittdiv/labeledconf.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace wittdiv {

namespace {

using nlohmann::ordered_json;

std::optional<mpq_class> parse_q(const std::string& text) {
    if (text.empty() || text == "symbolic") return std::nullopt;
    mpz_class q = parse_integer(text);
    if (q < 2) throw ParseError("--q must be an integer >= 2 or \"symbolic\"");
    return mpq_class(q);
}

std::string q_label(const mpq_class& q) { return "q=" + to_decimal(q); }

LabelScheme resolve_labels(const RunConfig& cfg) {
    if (!cfg.patterns.empty() && !cfg.labels.empty()) throw ParseError("give either --patterns or --labels, not both");
    if (!cfg.patterns.empty()) return LabelScheme::pattern_complement(parse_pattern_set(cfg.patterns));
    if (!cfg.labels.empty()) return parse_label_scheme(cfg.labels);
    throw ParseError("this command needs --labels or --patterns");
}

const PatternSet require_patterns(const RunConfig& cfg) {
    if (cfg.patterns.empty()) throw ParseError("this command needs --patterns");
    return parse_pattern_set(cfg.patterns);
}

ordered_json divisor_json(const WittDivisor& d) { return ordered_json::parse(divisor_to_json(d)); }

std::string render_divisor(const WittDivisor& d, OutputFormat f) {
    std::ostringstream os;
    switch (f) {
        case OutputFormat::Text:
            os << d.to_string() << '\n';
            break;
        case OutputFormat::Csv: {
            os << "exp,coeff\n";
            auto terms = d.body().terms();
            for (auto it = terms.rbegin(); it != terms.rend(); ++it) os << it->first << ',' << to_decimal(it->second) << '\n';
            break;
        }
        case OutputFormat::Json:
            os << divisor_to_json(d, 2) << '\n';
            break;
    }
    return os.str();
}

struct Norm {
    std::string name;
    mpq_class value;
};

// Rows i = 0..rows-1 holding the coefficient of [q^-i], plus optional norm lines.
std::string render_table(const WittDivisor& d, int rows, const std::vector<Norm>& norms, OutputFormat f) {
    std::ostringstream os;
    if (f == OutputFormat::Json) {
        ordered_json j;
        j["coefficients"] = ordered_json::array();
        for (int i = 0; i < rows; ++i) j["coefficients"].push_back(to_decimal(d.coeff(-i)));
        for (const auto& n : norms) j[n.name] = {{"exact", to_decimal(n.value)}, {"decimal", format_significant(n.value)}};
        os << j.dump(2) << '\n';
        return os.str();
    }
    const char sep = f == OutputFormat::Csv ? ',' : '\t';
    os << "i" << sep << (f == OutputFormat::Csv ? "coefficient" : "coefficient of [q^-i]") << '\n';
    for (int i = 0; i < rows; ++i) os << i << sep << to_decimal(d.coeff(-i)) << '\n';
    for (const auto& n : norms) os << n.name << sep << format_significant(n.value) << '\n';
    return os.str();
}

std::string cmd_table1(const RunConfig& cfg) {
    if (cfg.terms < 0) throw ParseError("--terms must be nonnegative");
    WittDivisor lim = density_limit(affine_space(1), LabelScheme::finite_conf(2), cfg.terms);
    return render_table(lim, cfg.terms + 1, {}, cfg.format);
}

std::string cmd_table2(const RunConfig& cfg) {
    if (cfg.d1 < 0 || cfg.d2 < 0) throw ParseError("--d1 and --d2 must be nonnegative");
    const int cutoff = cfg.d1 + cfg.d2;
    WittDivisor d = density_finite(affine_space(1), LabelScheme::finite_conf(2), {cfg.d1, cfg.d2}, cutoff);
    std::vector<Norm> norms;
    if (auto q = parse_q(cfg.q)) {
        norms.push_back({"hadamard_norm(" + q_label(*q) + ")", hadamard_norm(d, *q)});
        norms.push_back({"pc_seminorm_1(" + q_label(*q) + ")", pc_seminorm(d, *q, 1)});
    }
    return render_table(d, cutoff, norms, cfg.format);
}

std::string cmd_mobius(const RunConfig& cfg) {
    PatternSet v = require_patterns(cfg);
    MobiusTable t = mobius_table(v);
    std::ostringstream os;
    if (cfg.format == OutputFormat::Json) {
        ordered_json j;
        j["patterns"] = v.to_string();
        j["M"] = t.total_mass;
        j["e"] = t.min_norm;
        j["support_size"] = t.support_bound;
        j["values"] = ordered_json::array();
        for (const auto& [n, mu] : t.values)
            if (mu != 0) j["values"].push_back({{"n", n}, {"mu", mu}});
        os << j.dump(2) << '\n';
        return os.str();
    }
    const char sep = cfg.format == OutputFormat::Csv ? ',' : '\t';
    auto vec = [](const Exponents& n) {
        std::string s;
        for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
        return s;
    };
    if (cfg.format == OutputFormat::Text) {
        os << "patterns\t" << v.to_string() << '\n';
        os << "M\t" << t.total_mass << '\n' << "e\t" << t.min_norm << '\n' << "|P_V|\t" << t.support_bound << '\n';
    }
    os << "n" << sep << "mu" << '\n';
    for (const auto& [n, mu] : t.values)
        if (mu != 0) os << (cfg.format == OutputFormat::Csv ? "\"" + vec(n) + "\"" : vec(n)) << sep << mu << '\n';
    return os.str();
}

std::string with_norms(const WittDivisor& d, const RunConfig& cfg) {
    std::string body = render_divisor(d, cfg.format);
    auto q = parse_q(cfg.q);
    if (!q || cfg.format != OutputFormat::Text) return body;
    std::ostringstream os;
    os << body;
    os << "hadamard_norm(" << q_label(*q) << ")\t" << format_significant(hadamard_norm(d, *q)) << '\n';
    os << "weight_norm(" << q_label(*q) << ")\t" << format_significant(weight_norm(d, *q)) << '\n';
    return os.str();
}

std::string cmd_density(const RunConfig& cfg) {
    VarietyClass x = variety(cfg.variety);
    LabelScheme a = resolve_labels(cfg);
    if (cfg.d.empty()) throw ParseError("density needs --d");
    Exponents d = parse_vector(cfg.d);
    return with_norms(density_finite(x, a, d, cfg.cutoff), cfg);
}

std::string cmd_limit(const RunConfig& cfg) {
    return with_norms(density_limit(variety(cfg.variety), resolve_labels(cfg), cfg.cutoff), cfg);
}

std::string cmd_theorem_a(const RunConfig& cfg) {
    VarietyClass x = variety(cfg.variety);
    PatternSet v = require_patterns(cfg);
    WittDivisor lim = density_limit(x, LabelScheme::pattern_complement(v), cfg.cutoff);
    WittDivisor closed = orthogonal_limit_closed_form(x, v, cfg.cutoff);
    const bool agree = agree_to(lim, closed, cfg.cutoff);
    std::ostringstream os;
    if (cfg.format == OutputFormat::Json) {
        ordered_json j;
        j["limit"] = divisor_json(lim);
        j["closed_form"] = divisor_json(closed);
        j["agree"] = agree;
        os << j.dump(2) << '\n';
    } else {
        const char sep = cfg.format == OutputFormat::Csv ? ',' : '\t';
        os << "limit" << sep << lim.to_string() << '\n';
        os << "closed_form" << sep << closed.to_string() << '\n';
        os << "agree" << sep << (agree ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string cmd_theorem_b(const RunConfig& cfg) {
    VarietyClass x = variety(cfg.variety);
    PartitionLambda lambda = parse_lambda(cfg.lambda);
    auto q = parse_q(cfg.q);
    TheoremBReport rep = theoremB_check(x, lambda, cfg.degree, cfg.cutoff, q);
    std::ostringstream os;
    if (cfg.format == OutputFormat::Json) {
        ordered_json j;
        j["lambda"] = lambda.to_string();
        j["limit"] = divisor_json(rep.limit);
        j["rows"] = ordered_json::array();
        for (const auto& r : rep.rows) {
            ordered_json row = {{"d", r.d}, {"depth", r.agreement_depth}, {"quotient", divisor_json(r.quotient)}};
            if (r.hadamard_distance) row["hadamard_distance"] = format_significant(*r.hadamard_distance);
            j["rows"].push_back(row);
        }
        j["depth_nondecreasing"] = rep.depth_nondecreasing;
        os << j.dump(2) << '\n';
        return os.str();
    }
    const char sep = cfg.format == OutputFormat::Csv ? ',' : '\t';
    if (cfg.format == OutputFormat::Text) os << "limit\t" << rep.limit.to_string() << '\n';
    os << "d" << sep << "depth";
    if (q) os << sep << "hadamard_distance(" << q_label(*q) << ")";
    os << '\n';
    for (const auto& r : rep.rows) {
        os << r.d << sep << r.agreement_depth;
        if (r.hadamard_distance) os << sep << format_significant(*r.hadamard_distance);
        os << '\n';
    }
    if (cfg.format == OutputFormat::Text) os << "depth_nondecreasing\t" << (rep.depth_nondecreasing ? "true" : "false") << '\n';
    return os.str();
}

std::string cmd_zeta(const RunConfig& cfg) {
    VarietyClass x = variety(cfg.variety);
    if (cfg.special && cfg.sym) throw ParseError("--special and --sym are exclusive");
    WittDivisor d = x.zeta;
    if (cfg.sym) {
        if (*cfg.sym < 0) throw ParseError("--sym must be nonnegative");
        d = sym_power_divisor(x, *cfg.sym);
    }
    if (cfg.special) d = zeta_special_value(x, *cfg.special, cfg.cutoff);
    if (cfg.twist) d = tate_twist(d, *cfg.twist);
    return with_norms(d, cfg);
}

std::string cmd_report(const RunConfig& cfg) {
    VarietyClass x = variety(cfg.variety);
    LabelScheme a = resolve_labels(cfg);
    mpq_class q = parse_q(cfg.q).value_or(mpq_class(2));
    std::vector<Exponents> ds;
    for (int d = 0; d <= cfg.degree; ++d) ds.emplace_back(static_cast<std::size_t>(a.k()), d);
    ConvergenceReport rep = convergence_report(x, a, ds, q, cfg.cutoff);
    std::optional<PatternReport> stats;
    if (a.patterns()) stats = pattern_stats(*a.patterns(), q, x.dim, cfg.finite_label);
    else if (a.kind() == LabelScheme::Kind::FiniteConf && cfg.finite_label) {
        PatternReport r;
        r.finite_label_criterion = mpq_class(a.k()) < pow_q(q, x.dim);
        stats = r;
    }
    auto vec = [](const Exponents& n) {
        std::string s;
        for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
        return s;
    };
    std::ostringstream os;
    if (cfg.format == OutputFormat::Json) {
        ordered_json j;
        j["variety"] = x.name;
        j["labels"] = a.describe();
        j["q"] = to_decimal(q);
        j["limit"] = divisor_json(rep.limit);
        if (stats && a.patterns()) {
            j["criteria"] = {{"orthogonal", stats->orthogonal},  {"nondegenerate", stats->nondegenerate},
                             {"e", stats->e},                    {"M", stats->m},
                             {"support_size", stats->pv_size},   {"threshold", to_decimal(stats->threshold)},
                             {"hadamard_criterion", stats->hadamard_criterion}};
        }
        if (stats && stats->finite_label_criterion) j["finite_label_criterion"] = *stats->finite_label_criterion;
        j["rows"] = ordered_json::array();
        for (const auto& r : rep.rows) {
            ordered_json row = {{"d", r.d},
                                {"depth", r.agreement_depth},
                                {"hadamard_distance", format_significant(r.hadamard_distance)}};
            for (std::size_t i = 0; i < r.pc_gaps.size(); ++i)
                row["pc_gap_" + std::to_string(i + 1)] = format_significant(r.pc_gaps[i]);
            j["rows"].push_back(row);
        }
        os << j.dump(2) << '\n';
        return os.str();
    }
    const char sep = cfg.format == OutputFormat::Csv ? ',' : '\t';
    if (cfg.format == OutputFormat::Text) {
        os << "variety\t" << x.name << '\n' << "labels\t" << a.describe() << '\n' << "q\t" << to_decimal(q) << '\n';
        os << "limit\t" << rep.limit.to_string() << '\n';
        if (stats && a.patterns()) {
            os << "orthogonal\t" << (stats->orthogonal ? "true" : "false") << '\n';
            os << "nondegenerate\t" << (stats->nondegenerate ? "true" : "false") << '\n';
            os << "e\t" << stats->e << '\n' << "M\t" << stats->m << '\n' << "|P_V|\t" << stats->pv_size << '\n';
            os << "threshold\t" << to_decimal(stats->threshold) << '\n';
            os << "hadamard_criterion\t" << (stats->hadamard_criterion ? "true" : "false") << '\n';
        }
        if (stats && stats->finite_label_criterion)
            os << "finite_label_criterion\t" << (*stats->finite_label_criterion ? "true" : "false") << '\n';
    }
    os << "d" << sep << "depth" << sep << "hadamard_distance" << sep << "pc_gap_1" << sep << "pc_gap_2" << sep << "pc_gap_3"
       << '\n';
    for (const auto& r : rep.rows) {
        os << (sep == ',' ? "\"" + vec(r.d) + "\"" : vec(r.d)) << sep << r.agreement_depth << sep
           << format_significant(r.hadamard_distance);
        for (const auto& g : r.pc_gaps) os << sep << format_significant(g);
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string run_command(const RunConfig& cfg) {
    if (cfg.cutoff < 0) throw ParseError("--cutoff must be nonnegative");
    if (cfg.degree < 0) throw ParseError("--degree must be nonnegative");
    const std::string& c = cfg.command;
    if (c == "table1") return cmd_table1(cfg);
    if (c == "table2") return cmd_table2(cfg);
    if (c == "mobius") return cmd_mobius(cfg);
    if (c == "density") return cmd_density(cfg);
    if (c == "limit") return cmd_limit(cfg);
    if (c == "theoremA") return cmd_theorem_a(cfg);
    if (c == "theoremB") return cmd_theorem_b(cfg);
    if (c == "zeta") return cmd_zeta(cfg);
    if (c == "report") return cmd_report(cfg);
    throw ParseError("unknown command: " + c);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact computations in the rational Witt ring of zeta functions", "wittdiv"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--variety", cfg.variety, "variety expression, e.g. A1, Pn:2, GL2, A1xGm");
    app.add_option("--patterns", cfg.patterns, "forbidden patterns, e.g. \"2,1;1,2\"");
    app.add_option("--labels", cfg.labels, "label scheme: full:k, conf:k or explicit:a;b");
    app.add_option("--lambda", cfg.lambda, "partition multiplicities, e.g. \"2,1,1\"");
    app.add_option("--d", cfg.d, "degree vector, e.g. \"3,2\"");
    app.add_option("--cutoff", cfg.cutoff, "exactness horizon");
    app.add_option("--degree", cfg.degree, "largest degree for theoremB and report");
    app.add_option("--q", cfg.q, "integer q >= 2 or \"symbolic\"");
    app.add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", cfg.out_path, "write output to this file");

    auto* t1 = app.add_subcommand("table1", "limiting density of 2-colored configurations on A1");
    t1->add_option("--terms", cfg.terms, "largest i");
    auto* t2 = app.add_subcommand("table2", "finite density of 2-colored configurations on A1");
    t2->add_option("--d1", cfg.d1);
    t2->add_option("--d2", cfg.d2);
    app.add_subcommand("mobius", "local Mobius function of a pattern set");
    app.add_subcommand("density", "finite-degree density divisor");
    app.add_subcommand("limit", "limiting density divisor");
    app.add_subcommand("theoremA", "compare the limit with the orthogonal closed form");
    app.add_subcommand("theoremB", "labeled configuration quotients against their limit");
    auto* zeta = app.add_subcommand("zeta", "zeta divisor of a variety");
    zeta->add_option("--twist", cfg.twist, "Tate twist");
    zeta->add_option("--sym", cfg.sym, "symmetric power");
    zeta->add_option("--special", cfg.special, "Kapranov special value at m");
    auto* report = app.add_subcommand("report", "convergence diagnostics along the diagonal");
    report->add_flag("--finite-label", cfg.finite_label, "also report the finite-label criterion");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "csv" ? OutputFormat::Csv : format == "json" ? OutputFormat::Json : OutputFormat::Text;

    std::string text;
    try {
        if (!cfg.patterns.empty()) {
            const PatternSet ps = parse_pattern_set(cfg.patterns);
            for (const auto& v : ps.removed()) {
                err << "warning: dropping dominated pattern vector ";
                for (std::size_t i = 0; i < v.size(); ++i) err << (i ? "," : "") << v[i];
                err << '\n';
            }
        }
        text = run_command(cfg);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << cfg.out_path << '\n';
            return 3;
        }
        f << text;
    }
    return 0;
}

}  // namespace wittdiv
