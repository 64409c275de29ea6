#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kostka/class_counting.hpp"
#include "kostka/errors.hpp"
#include "kostka/formats.hpp"
#include "kostka/kostka_engine.hpp"
#include "kostka/tableau.hpp"
#include "kostka/text_format.hpp"
#include "kostka/verify.hpp"

namespace kostka::cli {

namespace {

using nlohmann::json;

std::string pretty(const Partition& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

std::string pretty(const Composition& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

json move_json(const CoverMove& m) {
    return {{"kind", m.kind == CoverMove::Kind::AdjacentRow ? "row" : "column"}, {"i", m.i}, {"j", m.j}};
}

SkewShape parse_shape(const CliConfig& c) {
    Partition outer = parse_partition(c.shape, "--shape");
    Partition inner = parse_partition(c.skew_inner, "--skew-inner");
    try {
        return SkewShape(std::move(outer), std::move(inner));
    } catch (const PreconditionError& e) {
        throw ParseError("--skew-inner", e.what());
    }
}

void check_size(const SkewShape& shape, const Composition& content) {
    if (shape.num_cells() != content.size()) {
        throw ParseError("--content", "content sums to " + std::to_string(content.size()) + " but the shape has " +
                                          std::to_string(shape.num_cells()) + " cells");
    }
}

int cmd_compute(const CliConfig& c, std::ostream& out) {
    const SkewShape shape = parse_shape(c);
    const Composition content = parse_composition(c.content, "--content");
    check_size(shape, content);
    const Count k = kostka(shape, content);
    if (c.format == Format::Json) {
        json doc{{"shape", c.shape}, {"skew_inner", to_text(shape.inner())}, {"content", to_text(content)},
                 {"kostka", to_decimal(k)}};
        if (c.show_tableaux) {
            json list = json::array();
            for (const auto& t : enumerate_ssyt(shape, content))
                list.push_back(t.rows());
            doc["tableaux"] = std::move(list);
        }
        out << doc.dump() << '\n';
        return kExitOk;
    }
    out << to_decimal(k) << '\n';
    if (c.show_tableaux) {
        for (const auto& t : enumerate_ssyt(shape, content))
            out << '\n' << render(t);
    }
    return kExitOk;
}

int cmd_matrix(const CliConfig& c, std::ostream& out) {
    if (c.n < 0)
        throw ParseError("--n", "must be non-negative");
    const KostkaMatrix m = kostka_matrix(c.n, c.parallelism);
    switch (c.format) {
    case Format::Csv:
        out << matrix_to_csv(m);
        break;
    case Format::Json:
        out << matrix_to_json(m);
        break;
    case Format::Text:
        out << matrix_to_text(m);
        break;
    }
    return kExitOk;
}

int cmd_covers(const CliConfig& c, std::ostream& out) {
    const Partition mu = parse_partition(c.mu, "--mu");
    const auto list = covers(mu);
    if (c.format == Format::Json) {
        json items = json::array();
        for (const auto& cv : list)
            items.push_back({{"nu", to_text(cv.nu)}, {"move", move_json(cv.move)}});
        out << json{{"mu", to_text(mu)}, {"covers", std::move(items)}}.dump() << '\n';
        return kExitOk;
    }
    for (const auto& cv : list) {
        std::ostringstream move;
        move << cv.move;
        out << pretty(cv.nu) << "  [" << move.str() << "]\n";
    }
    return kExitOk;
}

int cmd_chain(const CliConfig& c, std::ostream& out) {
    const Partition mu = parse_partition(c.mu, "--mu");
    const Partition nu = parse_partition(c.nu, "--nu");
    std::vector<Partition> chain;
    try {
        chain = cover_chain(mu, nu);
    } catch (const SizeMismatchError& e) {
        throw ParseError("--nu", std::string("different size from --mu: ") + e.what());
    } catch (const NotComparableError& e) {
        throw ParseError("--nu", std::string("not comparable: ") + e.what());
    }
    json steps = json::array();
    steps.push_back({{"partition", to_text(chain.front())}});
    if (c.format != Format::Json)
        out << pretty(chain.front()) << '\n';
    for (std::size_t s = 1; s < chain.size(); ++s) {
        const auto options = covers(chain[s - 1]);
        const auto it = std::find_if(options.begin(), options.end(), [&](const Cover& cv) { return cv.nu == chain[s]; });
        const CoverMove move = it->move;
        std::vector<Composition> transfers;
        if (move.kind == CoverMove::Kind::AdjacentColumn)
            transfers = adjacent_transfer_chain(chain[s - 1], move);
        if (c.format == Format::Json) {
            json t = json::array();
            for (const auto& x : transfers)
                t.push_back(to_text(x));
            steps.push_back({{"partition", to_text(chain[s])}, {"move", move_json(move)}, {"transfers", std::move(t)}});
        } else {
            std::ostringstream m;
            m << move;
            out << pretty(chain[s]) << "  [" << m.str() << "]";
            for (const auto& x : transfers)
                out << "  via " << pretty(x);
            out << '\n';
        }
    }
    if (c.format == Format::Json)
        out << json{{"mu", to_text(mu)}, {"nu", to_text(nu)}, {"chain", std::move(steps)}}.dump() << '\n';
    return kExitOk;
}

int cmd_classes(const CliConfig& c, std::ostream& out) {
    const SkewShape shape = parse_shape(c);
    const Composition mu = parse_composition(c.content, "--content");
    check_size(shape, mu);
    if (c.index < 1)
        throw ParseError("--i", "must be at least 1");
    if (mu.part(c.index) == 0)
        throw ParseError("--i", "content part " + std::to_string(c.index) + " is zero, nothing to transfer");
    const Composition nu = transfer(mu, c.index);

    std::map<ClassSignature, int> seen;
    for (const auto& content : {mu, nu})
        for (const auto& t : enumerate_ssyt(shape, content))
            seen.emplace(signature_of(t, c.index), 0);

    Count total_mu = 0, total_nu = 0;
    json rows = json::array();
    std::ostringstream text;
    for (const auto& [sig, unused] : seen) {
        const Count cm = count_in_class(sig, mu);
        const Count cn = count_in_class(sig, nu);
        total_mu += cm;
        total_nu += cn;
        json x = sig.row_counts;
        rows.push_back({{"skeleton", render_skeleton(sig)}, {"d", sig.forced_pairs}, {"x", x},
                        {"count_mu", to_decimal(cm)}, {"count_nu", to_decimal(cn)}});
        text << render_skeleton(sig) << "d=" << sig.forced_pairs << " x=" << pretty(Composition(sig.row_counts))
             << "  mu: " << to_decimal(cm) << "  nu: " << to_decimal(cn) << "\n\n";
    }
    if (c.format == Format::Json) {
        out << json{{"shape", c.shape},         {"skew_inner", to_text(shape.inner())},
                    {"mu", to_text(mu)},        {"nu", to_text(nu)},
                    {"i", c.index},             {"classes", std::move(rows)},
                    {"total_mu", to_decimal(total_mu)}, {"total_nu", to_decimal(total_nu)}}
                   .dump()
            << '\n';
        return kExitOk;
    }
    out << "mu=" << pretty(mu) << " nu=" << pretty(nu) << " i=" << c.index << "  classes: " << seen.size() << "\n\n"
        << text.str() << "total  mu: " << to_decimal(total_mu) << "  nu: " << to_decimal(total_nu) << '\n';
    return kExitOk;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
    if (c.max_n < 0)
        throw ParseError("--max-n", "must be non-negative");
    const auto reports = verify_all(c.max_n, c.parallelism);
    out << (c.format == Format::Json ? reports_to_json(reports) : reports_to_text(reports));
    return exit_code_for(reports);
}

int cmd_bench(const CliConfig& c, std::ostream& out) {
    if (c.samples < 1)
        throw ParseError("--samples", "must be positive");
    if (c.max_cells < 1)
        throw ParseError("--max-cells", "must be positive");
    std::mt19937_64 rng(c.seed);
    std::vector<std::pair<SkewShape, Composition>> workload;
    for (int s = 0; s < c.samples; ++s) {
        const int m = std::uniform_int_distribution<int>(1, c.max_cells)(rng);
        const auto shapes = partitions_of(m);
        SkewShape shape(shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)]);
        // random composition of m: cut points chosen independently
        std::vector<int> parts;
        int run = 1;
        for (int k = 1; k < m; ++k) {
            if (std::bernoulli_distribution(0.5)(rng)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        workload.emplace_back(std::move(shape), Composition(std::move(parts)));
    }

    using clock = std::chrono::steady_clock;
    std::vector<Count> dp, brute;
    const auto t0 = clock::now();
    {
        KostkaEngine engine;
        for (const auto& [shape, content] : workload)
            dp.push_back(engine.kostka(shape, content));
    }
    const auto t1 = clock::now();
    for (const auto& [shape, content] : workload)
        brute.push_back(count_ssyt(shape, content));
    const auto t2 = clock::now();

    std::size_t mismatches = 0;
    for (std::size_t k = 0; k < workload.size(); ++k)
        mismatches += dp[k] != brute[k];
    const double dp_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double brute_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();

    if (c.format == Format::Json) {
        out << json{{"seed", c.seed},       {"samples", c.samples},         {"max_cells", c.max_cells},
                    {"dp_ms", dp_ms},       {"enumeration_ms", brute_ms},  {"mismatches", mismatches}}
                   .dump()
            << '\n';
    } else {
        out << "samples " << c.samples << " (seed " << c.seed << ", up to " << c.max_cells << " cells)\n"
            << "dp           " << dp_ms << " ms\n"
            << "enumeration  " << brute_ms << " ms\n"
            << "mismatches   " << mismatches << '\n';
    }
    return mismatches == 0 ? kExitOk : kExitViolation;
}

} // namespace

int exit_code_for(const std::vector<Report>& reports) {
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
    return ok ? kExitOk : kExitViolation;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
        case Command::Compute:
            return cmd_compute(config, out);
        case Command::Matrix:
            return cmd_matrix(config, out);
        case Command::Covers:
            return cmd_covers(config, out);
        case Command::Chain:
            return cmd_chain(config, out);
        case Command::Classes:
            return cmd_classes(config, out);
        case Command::Verify:
            return cmd_verify(config, out);
        case Command::Bench:
            return cmd_bench(config, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const SizeMismatchError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kostka numbers, dominance order, and exhaustive checks", "kostka"};
    app.require_subcommand(1);
    CliConfig c;

    const std::map<std::string, Format> formats{{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
    const std::map<std::string, Format> no_csv{{"text", Format::Text}, {"json", Format::Json}};
    auto add_format = [&](CLI::App* sub, const std::map<std::string, Format>& allowed) {
        std::string names;
        for (const auto& [name, _] : allowed)
            names += (names.empty() ? "" : "|") + name;
        sub->add_option("--format", c.format, "Output format: " + names)
            ->transform(CLI::CheckedTransformer(allowed, CLI::ignore_case).description(""));
    };
    auto add_shape = [&](CLI::App* sub) {
        sub->add_option("--shape", c.shape, "Outer partition, e.g. 3,2")->required();
        sub->add_option("--skew-inner", c.skew_inner, "Inner partition of a skew shape");
        sub->add_option("--content", c.content, "Content composition, e.g. 1,1,1")->required();
    };

    auto* compute = app.add_subcommand("compute", "Kostka number of a (skew) shape and content");
    add_shape(compute);
    compute->add_flag("--show", c.show_tableaux, "Also print every semistandard tableau");
    add_format(compute, no_csv);

    auto* matrix = app.add_subcommand("matrix", "Kostka matrix over the partitions of n");
    matrix->add_option("--n", c.n, "Size n")->required();
    matrix->add_option("--parallelism", c.parallelism, "Worker threads")->check(CLI::Range(1u, 1024u));
    add_format(matrix, formats);

    auto* cov = app.add_subcommand("covers", "Partitions covered by mu in the dominance order");
    cov->add_option("--mu", c.mu, "Partition, e.g. 3,1")->required();
    add_format(cov, no_csv);

    auto* chain = app.add_subcommand("chain", "Saturated chain of covers from mu down to nu");
    chain->add_option("--mu", c.mu, "Upper partition")->required();
    chain->add_option("--nu", c.nu, "Lower partition")->required();
    add_format(chain, no_csv);

    auto* classes = app.add_subcommand("classes", "Class-by-class counts for an adjacent transfer at i");
    add_shape(classes);
    classes->add_option("--i", c.index, "Transfer index (1-based)")->required();
    add_format(classes, no_csv);

    auto* verify = app.add_subcommand("verify", "Run every exhaustive check up to max-n");
    verify->add_option("--max-n", c.max_n, "Largest size checked (default 6)");
    verify->add_option("--parallelism", c.parallelism, "Worker threads")->check(CLI::Range(1u, 1024u));
    add_format(verify, no_csv);

    auto* bench = app.add_subcommand("bench", "Time the DP against enumeration on a random workload");
    bench->add_option("--seed", c.seed, "Workload seed");
    bench->add_option("--samples", c.samples, "Number of (shape, content) pairs");
    bench->add_option("--max-cells", c.max_cells, "Largest shape size");
    add_format(bench, no_csv);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }

    const std::map<CLI::App*, Command> commands{{compute, Command::Compute}, {matrix, Command::Matrix},
                                                {cov, Command::Covers},      {chain, Command::Chain},
                                                {classes, Command::Classes}, {verify, Command::Verify},
                                                {bench, Command::Bench}};
    for (const auto& [sub, cmd] : commands)
        if (sub->parsed())
            c.command = cmd;
    return run(c, out, err);
}

} // namespace kostka::cli
