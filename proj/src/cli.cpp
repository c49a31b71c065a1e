#include "nfl/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nfl/combinatorics.hpp"
#include "nfl/cup.hpp"
#include "nfl/harness.hpp"
#include "nfl/io.hpp"
#include "nfl/landscape.hpp"

namespace nfl::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::uint64_t cap = Limits{}.enumeration_cap;
    std::string out_path;
    std::size_t hypercube_bits = 0;
    std::uint64_t seed = 1;

    std::size_t x_size = 0, y_size = 0;
    std::size_t x_min = 1, x_max = 7;
    std::vector<std::size_t> y_list{2, 3, 4};
    std::string file;
    std::size_t function_index = 0;
    std::size_t m = 0;
    std::string algorithms = "lexicographic,reverse";
    std::string bound_kind;
    std::string bound;
};

Limits limits_of(const Options& o) {
    Limits l;
    l.enumeration_cap = o.cap;
    return l;
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.out_path);
    f << text;
    if (!f) throw UsageError("failed writing " + o.out_path);
}

FunctionSetFile load(const Options& o) {
    FunctionSetFile doc = read_function_set(o.file);
    if (o.hypercube_bits > 0) {
        auto nb = hypercube_neighborhood(o.hypercube_bits);
        if (nb.domain_size() != doc.functions.signature().domain_size)
            throw UsageError("--hypercube " + std::to_string(o.hypercube_bits) + " gives " +
                             std::to_string(nb.domain_size()) + " points but the file has |X| = " +
                             std::to_string(doc.functions.signature().domain_size));
        doc.neighborhood = std::move(nb);
    }
    return doc;
}

std::string rational_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void cmd_count(const Options& o, std::ostream& out) {
    const SpaceSignature sig(o.x_size, o.y_size);
    const auto limits = limits_of(o);
    out << "signature: " << sig.to_string() << "\n";
    out << "histograms: " << count_histograms(sig) << "\n";
    out << "cup_subsets: " << count_cup_subsets(sig, limits) << "\n";
    out << "all_subsets: " << count_all_subsets(sig, limits) << "\n";
    out << "log10_fraction: " << format_log10(cup_fraction(sig).log10_value) << "\n";
}

void cmd_fraction(const Options& o, std::ostream& out) {
    if (o.x_min == 0 || o.x_max < o.x_min) throw UsageError("need 1 <= --x-min <= --x-max");
    if (o.y_list.empty()) throw UsageError("--y needs at least one codomain size");
    for (auto y : o.y_list)
        if (y == 0) throw UsageError("--y sizes must be positive");
    std::vector<std::size_t> xs;
    for (std::size_t x = o.x_min; x <= o.x_max; ++x) xs.push_back(x);
    std::vector<FractionRow> rows;
    for (const auto& cell : fraction_table(xs, o.y_list)) rows.push_back(to_row(cell));
    write_output(o, emit_fraction_csv(rows), out);
}

void cmd_check(const Options& o, std::ostream& out) {
    const auto doc = load(o);
    const auto verdict = cup_verdict(doc.functions);
    const auto dec = decompose(doc.functions);
    auto describe = [](const BasisClassShare& c) {
        return "class " + c.histogram.to_string() + " " + (c.complete() ? "complete" : "partial") +
               " " + c.member_count.str() + "/" + c.class_size.str();
    };
    out << "c.u.p.: " << (verdict.closed ? "yes" : "no") << (verdict.vacuous ? " (vacuous)" : "");
    // Partial classes are what break closure; name them up front.
    for (const auto& c : dec.classes)
        if (!c.complete()) out << "; " << describe(c);
    out << "; " << dec.complete_count() << "/" << dec.classes.size() << " classes complete\n";
    for (const auto& c : dec.classes) out << describe(c) << "\n";
}

void cmd_closure(const Options& o, std::ostream& out) {
    auto doc = load(o);
    doc.functions = closure(doc.functions, limits_of(o));
    write_output(o, emit_function_set(doc), out);
}

void cmd_orbit(const Options& o, std::ostream& out) {
    auto doc = load(o);
    if (o.function_index >= doc.listed.size())
        throw UsageError("function index " + std::to_string(o.function_index) + " out of range; file lists " +
                         std::to_string(doc.listed.size()) + " functions");
    doc.functions = orbit(doc.listed[o.function_index], limits_of(o));
    write_output(o, emit_function_set(doc), out);
}

std::vector<SearchAlgorithm> parse_algorithms(const Options& o, const FunctionSetFile& doc) {
    std::vector<SearchAlgorithm> algos;
    std::stringstream ss(o.algorithms);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "lexicographic" || item == "lex") {
            algos.emplace_back(Lexicographic{});
        } else if (item == "reverse") {
            algos.emplace_back(ReverseLexicographic{});
        } else if (item == "random") {
            algos.emplace_back(SeededRandom{o.seed});
        } else if (item.rfind("random:", 0) == 0) {
            try {
                std::size_t used = 0;
                const auto seed = std::stoull(item.substr(7), &used, 0);
                if (used != item.size() - 7) throw std::invalid_argument(item);
                algos.emplace_back(SeededRandom{seed});
            } catch (const std::exception&) {
                throw UsageError("bad random seed in '" + item + "'");
            }
        } else if (item == "greedy") {
            if (!doc.neighborhood)
                throw UsageError("greedy needs a neighborhood (file field or --hypercube)");
            algos.emplace_back(GreedyNeighbor{*doc.neighborhood});
        } else if (item == "all") {
            for (auto& a : enumerate_algorithms(doc.functions.signature(), o.m, limits_of(o)))
                algos.push_back(std::move(a));
        } else {
            throw UsageError("unknown algorithm '" + item +
                             "'; expected lexicographic, reverse, random[:seed], greedy or all");
        }
    }
    if (algos.empty()) throw UsageError("no algorithms given");
    return algos;
}

void cmd_nfl(const Options& o, std::ostream& out) {
    const auto doc = load(o);
    const auto& F = doc.functions;
    if (o.m == 0 || o.m > F.signature().domain_size)
        throw UsageError("m must satisfy 1 <= m <= |X| = " + std::to_string(F.signature().domain_size));
    const auto algos = parse_algorithms(o, doc);

    out << "functions: " << F.size() << " over " << F.signature().to_string() << "; m = " << o.m
        << "\n";
    out << "algorithms: " << algos.size() << "\n";
    for (std::size_t i = 0; i < algos.size(); ++i) out << "  [" << i << "] " << algos[i].name() << "\n";

    const std::vector<PerformanceMeasure> measures{PerformanceMeasure::minimum(),
                                                   PerformanceMeasure::value_at(o.m),
                                                   PerformanceMeasure::sum()};
    out << "performance tables (value:count):\n";
    for (std::size_t i = 0; i < algos.size(); ++i)
        for (const auto& c : measures) {
            out << "  [" << i << "] " << c.name() << ":";
            for (const auto& [k, count] : performance_table(algos[i], F, o.m, c))
                out << " " << rational_string(k) << ":" << count;
            out << "\n";
        }

    const auto report = verify_nfl(F, o.m, algos);
    out << "sequence multiset equality (= equal, x differs):\n";
    for (std::size_t i = 0; i < algos.size(); ++i) {
        out << "  " << std::setw(3) << i << " ";
        for (std::size_t j = 0; j < algos.size(); ++j) out << (report.equal[i][j] ? '=' : 'x');
        out << "\n";
    }
    if (report.witness)
        out << "witness: [" << report.witness->first << "] " << algos[report.witness->first].name()
            << " vs [" << report.witness->second << "] " << algos[report.witness->second].name()
            << "\n";
    out << (report.equal_for_all_pairs ? "all pairs equal" : "witness pair found")
        << "; c.u.p.: " << (is_cup(F) ? "yes" : "no") << "\n";
}

void cmd_landscape(const Options& o, std::ostream& out) {
    const auto doc = load(o);
    const auto sig = doc.functions.signature();
    const auto limits = limits_of(o);
    if (!doc.neighborhood)
        throw UsageError("landscape needs a neighborhood (file field or --hypercube)");

    std::optional<ConstraintClass> cc;
    std::string measure_name;
    if (o.bound_kind == "steepness") {
        if (!doc.metric) throw UsageError("steepness bound needs a metric in the file");
        double bound = 0;
        try {
            std::size_t used = 0;
            bound = std::stod(o.bound, &used);
            if (used != o.bound.size()) throw std::invalid_argument(o.bound);
        } catch (const std::exception&) {
            throw UsageError("steepness bound must be a number, got '" + o.bound + "'");
        }
        cc = ConstraintClass::steepness(sig, *doc.neighborhood, *doc.metric, bound);
        measure_name = "steepness";
    } else if (o.bound_kind == "minima") {
        std::size_t bound = 0;
        try {
            std::size_t used = 0;
            bound = std::stoull(o.bound, &used);
            if (used != o.bound.size() || o.bound.find('-') != std::string::npos)
                throw std::invalid_argument(o.bound);
        } catch (const std::exception&) {
            throw UsageError("minima bound must be a non-negative integer, got '" + o.bound + "'");
        }
        cc = ConstraintClass::local_minima(sig, *doc.neighborhood, bound);
        measure_name = "minima";
    } else {
        throw UsageError("bound kind must be 'steepness' or 'minima', got '" + o.bound_kind + "'");
    }

    const FunctionSet F = build_constraint_class(*cc, limits);
    const auto verdict = cup_verdict(F);
    const auto total = count_functions(sig);
    out << "constraint: " << measure_name << " < " << o.bound << " over " << sig.to_string() << ", "
        << doc.neighborhood->edge_count() << " neighbor pairs\n";
    if (BigCount(F.size()) == total) {
        out << "class = full space; c.u.p.: yes\n";
        return;
    }
    out << "class size " << F.size() << "; c.u.p.: " << (verdict.closed ? "yes" : "no");
    if (verdict.vacuous) out << " (vacuous)";
    if (!verdict.closed) {
        try {
            const auto w = witness_not_cup(F, *cc, limits);
            std::ostringstream value;
            value << w.violated_value;
            out << "; witness: g=" << w.g.to_string() << ", π=" << w.p.to_string() << ", "
                << measure_name << "(g∘π)=" << value.str();
        } catch (const PreconditionError& e) {
            out << "; " << e.what();
        }
    }
    out << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact enumeration tools for permutation-closed function classes", "nfl"};
    app.require_subcommand(1);
    app.add_option("--cap", o.cap, "Enumeration cap")->check(CLI::PositiveNumber);

    auto* count = app.add_subcommand("count", "Count histograms and c.u.p. subsets");
    count->add_option("x_size", o.x_size, "|X|")->required()->check(CLI::PositiveNumber);
    count->add_option("y_size", o.y_size, "|Y|")->required()->check(CLI::PositiveNumber);

    auto* fraction = app.add_subcommand("fraction", "Emit the c.u.p. fraction table as CSV");
    fraction->add_option("--x-min", o.x_min, "Smallest |X|")->capture_default_str();
    fraction->add_option("--x-max", o.x_max, "Largest |X|")->capture_default_str();
    fraction->add_option("--y", o.y_list, "Codomain sizes")->delimiter(',')->capture_default_str();
    fraction->add_option("--out", o.out_path, "Output CSV path (default stdout)");

    auto* check = app.add_subcommand("check", "Closure-under-permutation verdict and decomposition");
    check->add_option("file", o.file, "Function set file")->required();

    auto* clos = app.add_subcommand("closure", "Write the permutation closure of a set");
    clos->add_option("file", o.file, "Function set file")->required();
    clos->add_option("--out", o.out_path, "Output path (default stdout)");

    auto* orb = app.add_subcommand("orbit", "Write the orbit of one function");
    orb->add_option("file", o.file, "Function set file")->required();
    orb->add_option("index", o.function_index, "Index of the function in the file")->required();
    orb->add_option("--out", o.out_path, "Output path (default stdout)");

    auto* nfl = app.add_subcommand("nfl", "Compare algorithms over a function set");
    nfl->add_option("file", o.file, "Function set file")->required();
    nfl->add_option("m", o.m, "Number of evaluations")->required();
    nfl->add_option("--algorithms", o.algorithms,
                    "Comma list of lexicographic, reverse, random[:seed], greedy, all")
        ->capture_default_str();
    nfl->add_option("--seed", o.seed, "Seed for 'random'")->capture_default_str();
    nfl->add_option("--hypercube", o.hypercube_bits, "Use the Hamming neighborhood on N bits");

    auto* land = app.add_subcommand("landscape", "Constraint class analysis");
    land->add_option("file", o.file, "Function set file (signature, neighborhood, metric)")->required();
    land->add_option("kind", o.bound_kind, "steepness | minima")->required();
    land->add_option("bound", o.bound, "Strict upper bound on the measure")->required();
    land->add_option("--hypercube", o.hypercube_bits, "Use the Hamming neighborhood on N bits");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (count->parsed()) cmd_count(o, out);
        else if (fraction->parsed()) cmd_fraction(o, out);
        else if (check->parsed()) cmd_check(o, out);
        else if (clos->parsed()) cmd_closure(o, out);
        else if (orb->parsed()) cmd_orbit(o, out);
        else if (nfl->parsed()) cmd_nfl(o, out);
        else if (land->parsed()) cmd_landscape(o, out);
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kSuccess;
}

}  // namespace nfl::cli
