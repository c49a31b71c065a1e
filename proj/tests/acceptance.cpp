// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails. Time limits are wall-clock on a Release build.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "nfl/cli.hpp"
#include "nfl/combinatorics.hpp"
#include "nfl/cup.hpp"
#include "nfl/harness.hpp"
#include "nfl/io.hpp"
#include "nfl/landscape.hpp"
#include "oracles.hpp"

using namespace nfl;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds,
               const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= limit_seconds) {
        o.ok = false;
        o.detail = "too slow";
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %s %s (%.2fs / %.0fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
                limit_seconds, o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
}

FunctionSet from_rows(SpaceSignature sig, const std::set<oracle::Values>& rows) {
    std::vector<FiniteFunction> members;
    for (const auto& r : rows) members.emplace_back(sig, r);
    return FunctionSet(sig, std::move(members));
}

std::vector<oracle::Values> rows_of(const FunctionSet& F) {
    std::vector<oracle::Values> out;
    for (const auto& f : F) out.emplace_back(f.values().begin(), f.values().end());
    return out;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str() + "\x1f" + err.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---------------------------------------------------------------------------

Outcome cup_count_vs_brute_force() {
    Outcome o;
    std::ostringstream summary;
    for (auto [n, m] : {std::pair{1, 2}, {1, 3}, {2, 2}, {3, 2}, {4, 2}, {2, 3}, {2, 4}}) {
        const SpaceSignature sig(n, m);
        const auto brute = oracle::brute_force_cup_count(n, m);
        const auto counted = count_cup_subsets(sig);
        summary << sig.to_string() << "=" << brute << " ";
        o.require(BigCount(brute) == counted, sig.to_string() + ": brute force " +
                                                  std::to_string(brute) + " vs " + counted.str());
    }
    o.require(count_cup_subsets(SpaceSignature(2, 2)) == 7, "(2,2) != 7");
    o.require(count_cup_subsets(SpaceSignature(2, 3)) == 63, "(2,3) != 63");
    if (o.ok) o.detail = summary.str();
    return o;
}

Outcome fraction_table_shape() {
    Outcome o;
    int code = 0;
    const auto text = run_cli({"fraction", "--x-min", "1", "--x-max", "7", "--y", "2,3,4"}, code);
    o.require(code == cli::kSuccess, "fraction exited " + std::to_string(code));
    const auto rows = parse_fraction_csv(text.substr(0, text.find('\x1f')));
    o.require(rows.size() == 21, "expected 21 rows, got " + std::to_string(rows.size()));

    std::map<std::pair<std::size_t, std::size_t>, double> value;
    for (const auto& r : rows) value[{r.x_size, r.y_size}] = std::stod(r.log10_fraction);
    for (std::size_t y : {2, 3, 4})
        for (std::size_t x = 2; x < 7; ++x)
            o.require(value.at({x + 1, y}) < value.at({x, y}),
                      "not decreasing in x at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    for (std::size_t x = 2; x <= 7; ++x)
        for (std::size_t y : {2, 3})
            o.require(value.at({x, y + 1}) < value.at({x, y}),
                      "not decreasing in y at (" + std::to_string(x) + "," + std::to_string(y) + ")");

    // Spot value, tolerance as stated: |log10 - (-74.4)| <= 0.01.
    const double spot = cup_fraction(SpaceSignature(8, 2)).log10_value;
    const double reference = -74.4;
    const double tolerance = 0.01;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "(8,2) log10 = %.6f; |%.6f - (%.1f)| = %.4f vs tolerance %.2f", spot, spot,
                  reference, std::fabs(spot - reference), tolerance);
    o.require(std::fabs(spot - reference) <= tolerance, buf);
    if (o.ok) o.detail = buf;
    return o;
}

Outcome nfl_iff_exhaustive() {
    Outcome o;
    std::ostringstream summary;
    for (auto [n, m, expected_algorithms] : {std::tuple{3, 2, 12}, {2, 3, 2}}) {
        const SpaceSignature sig(n, m);
        const std::size_t depth = n;
        const auto algs = enumerate_algorithms(sig, depth);
        o.require(algs.size() == static_cast<std::size_t>(expected_algorithms),
                  sig.to_string() + ": " + std::to_string(algs.size()) + " algorithms");
        const auto space = oracle::all_value_arrays(n, m);
        std::size_t subsets = 0, exceptions = 0, closed = 0;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << space.size()); ++mask) {
            const auto rows = oracle::subset(space, mask);
            const auto F = from_rows(sig, rows);
            const bool equal = verify_nfl(F, depth, algs).equal_for_all_pairs;
            const bool cup = is_cup(F);
            ++subsets;
            closed += cup;
            if (equal != cup || cup != oracle::closed_under_transpositions(rows, n)) ++exceptions;
        }
        summary << sig.to_string() << " m=" << depth << ": " << subsets << " subsets, " << closed
                << " c.u.p., " << exceptions << " exceptions; ";
        o.require(exceptions == 0, sig.to_string() + ": " + std::to_string(exceptions) + " exceptions");
    }
    if (o.ok) o.detail = summary.str();
    return o;
}

Outcome basis_class_properties() {
    Outcome o;
    // (a) partition and class count, up to (5,3).
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t m = 1; m <= 3; ++m) {
            const SpaceSignature sig(n, m);
            const auto classes = oracle::classes_by_counts(n, m);
            std::set<oracle::Values> seen;
            std::size_t histograms = 0;
            for (auto h : enumerate_histograms(sig)) {
                ++histograms;
                const auto members = rows_of(orbit(h.canonical_function()));
                const std::vector<std::size_t> key(h.counts().begin(), h.counts().end());
                o.require(std::set<oracle::Values>(members.begin(), members.end()) == classes.at(key),
                          "class of " + h.to_string() + " differs");
                for (const auto& v : members)
                    o.require(seen.insert(v).second, "classes overlap at " + sig.to_string());
            }
            o.require(seen.size() == oracle::all_value_arrays(n, m).size(),
                      "classes do not cover " + sig.to_string());
            o.require(histograms == oracle::pascal(n + m - 1, n) && histograms == classes.size(),
                      "class count at " + sig.to_string());
            o.require(count_histograms(sig) == oracle::pascal(n + m - 1, n),
                      "count_histograms at " + sig.to_string());
        }
    // (b) and (c), up to (4,3).
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 1; m <= 3; ++m) {
            const auto space = full_space(SpaceSignature(n, m));
            for (const auto& f : space) {
                const oracle::Values fv(f.values().begin(), f.values().end());
                const auto orb = rows_of(orbit(f));
                o.require(std::set<oracle::Values>(orb.begin(), orb.end()) ==
                              oracle::orbit_by_all_permutations(fv),
                          "orbit of " + f.to_string());
                for (const auto& g : space) {
                    const oracle::Values gv(g.values().begin(), g.values().end());
                    const bool same = oracle::value_counts(fv, m) == oracle::value_counts(gv, m);
                    const auto p = find_permutation(f, g);
                    o.require(p.has_value() == same, "find_permutation existence " + f.to_string() +
                                                         " -> " + g.to_string());
                    if (p) o.require(compose(f, *p) == g, "find_permutation does not verify");
                }
            }
        }
    // (d) every c.u.p. subset is the union of its complete classes, |Y|^|X| <= 16.
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 1; m <= 16; ++m) {
            const auto space = oracle::all_value_arrays(n, m);
            if (space.size() > 16) break;
            const SpaceSignature sig(n, m);
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << space.size()); ++mask) {
                const auto rows = oracle::subset(space, mask);
                if (!oracle::closed_under_transpositions(rows, n)) continue;
                ++checked;
                const auto F = from_rows(sig, rows);
                const auto d = decompose(F);
                std::set<oracle::Values> rebuilt;
                for (const auto& c : d.classes) {
                    o.require(c.complete(), "c.u.p. subset with a partial class");
                    for (const auto& v : rows_of(orbit(c.histogram.canonical_function())))
                        rebuilt.insert(v);
                }
                o.require(rebuilt == rows, "union of complete classes differs from F");
            }
        }
    if (o.ok) o.detail = std::to_string(checked) + " c.u.p. subsets rebuilt from their classes";
    return o;
}

Outcome hypercube_minima() {
    Outcome o;
    std::ostringstream summary;
    for (std::size_t bits = 1; bits <= 3; ++bits) {
        const std::size_t n = std::size_t{1} << bits;
        const auto cube = hypercube_neighborhood(bits);
        const auto matrix = oracle::hypercube_matrix(bits);
        std::size_t best = 0, best_oracle = 0;
        for (auto f : enumerate_functions(SpaceSignature(n, 2))) {
            best = std::max(best, count_local_minima(f, cube));
            best_oracle = std::max(
                best_oracle, oracle::local_minima({f.values().begin(), f.values().end()}, matrix));
        }
        const auto balanced =
            max_minima_over_histogram(Histogram(SpaceSignature(n, 2), {n / 2, n - n / 2}), cube);
        const std::size_t expected = std::size_t{1} << (bits - 1);
        summary << "n=" << bits << ": " << best << " ";
        o.require(best == expected && best_oracle == expected && balanced == expected,
                  "n=" + std::to_string(bits) + ": scan " + std::to_string(best) + ", oracle " +
                      std::to_string(best_oracle) + ", balanced l^max " + std::to_string(balanced) +
                      ", expected " + std::to_string(expected));
    }
    if (o.ok) o.detail = summary.str();
    return o;
}

// Bounds strictly between 0 and the largest value the class itself can
// reach (max range diameter / max l^max over its members).
Outcome constraint_classes_not_cup() {
    Outcome o;
    const auto cycle = hypercube_neighborhood(2);
    std::ostringstream summary;

    auto verify_witness = [&](const FunctionSet& F, const ConstraintClass& cc, const std::string& tag) {
        o.require(!F.empty(), tag + ": class is empty");
        o.require(!is_cup(F), tag + ": class is c.u.p.");
        const auto w = witness_not_cup(F, cc);
        o.require(F.contains(w.g), tag + ": g outside class");
        o.require(compose(w.g, w.p) == w.image, tag + ": image is not g∘π");
        o.require(!cc.admits(w.image), tag + ": g∘π satisfies the bound");
        o.require(!F.contains(w.image), tag + ": g∘π inside class");
    };

    for (std::size_t m : {3, 4}) {
        const SpaceSignature sig(4, m);
        const auto metric = ValueMetric::absolute_difference(m);
        std::size_t qualifying = 0;
        // Class membership only changes at integer bounds; quarter steps
        // also cover the open intervals between them.
        for (double bound = 0.25; bound < static_cast<double>(m - 1); bound += 0.25) {
            const auto cc = ConstraintClass::steepness(sig, cycle, metric, bound);
            const auto F = build_constraint_class(cc);
            double diameter = 0;
            for (const auto& f : F) diameter = std::max(diameter, range_diameter(f, metric));
            if (!(bound < diameter)) continue;
            ++qualifying;
            verify_witness(F, cc, "steepness<" + std::to_string(bound) + " at " + sig.to_string());
        }
        summary << "steepness " << sig.to_string() << ": " << qualifying << " bounds; ";
        o.require(qualifying > 0, "no qualifying steepness bound at " + sig.to_string());
    }
    for (std::size_t m : {2, 3}) {
        const SpaceSignature sig(4, m);
        std::size_t qualifying = 0;
        for (std::size_t bound = 1; bound <= 4; ++bound) {
            const auto cc = ConstraintClass::local_minima(sig, cycle, bound);
            const auto F = build_constraint_class(cc);
            std::size_t lmax = 0;
            for (const auto& f : F) lmax = std::max(lmax, max_minima_over_histogram(histogram_of(f), cycle));
            if (!(bound < lmax)) continue;
            ++qualifying;
            verify_witness(F, cc, "minima<" + std::to_string(bound) + " at " + sig.to_string());
        }
        summary << "minima " << sig.to_string() << ": " << qualifying << " bounds; ";
        o.require(qualifying > 0, "no qualifying minima bound at " + sig.to_string());
    }
    if (o.ok) o.detail = summary.str();
    return o;
}

Outcome noninvariant_permutations() {
    Outcome o;
    std::size_t relations = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<Edge> pairs;
        for (Point a = 0; a < n; ++a)
            for (Point b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            std::vector<Edge> chosen;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) chosen.push_back(pairs[i]);
            const auto nb = Neighborhood::from_edges(n, chosen);
            if (!is_nontrivial(nb)) continue;
            ++relations;
            const auto p = find_noninvariant_permutation(nb);
            // Constructed pair: the lowest non-neighbor pair.
            std::optional<Edge> far;
            for (const auto& e : pairs)
                if (!nb.adjacent(e.first, e.second)) {
                    far = e;
                    break;
                }
            o.require(far && nb.adjacent(p[far->first], p[far->second]),
                      "invariance holds at the constructed pair");
            o.require(invariance_violation(nb, p).has_value(), "permutation preserves the relation");
        }
    }
    if (o.ok) o.detail = std::to_string(relations) + " non-trivial relations";
    return o;
}

Outcome cli_determinism() {
    Outcome o;
    const auto dir = fs::temp_directory_path() / ("nfl_acceptance_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream(dir / name, std::ios::binary) << text;
        return (dir / name).string();
    };
    const auto orbit_file = write("set.json", R"({"domain_size": 4, "codomain_size": 3,
        "functions": [[0,1,1,2],[2,2,0,1],[1,0,0,0]],
        "neighborhood": [[0,1],[0,2],[1,3],[2,3]], "metric": "absolute"})");
    const auto cycle42 = write("c42.json", R"({"domain_size": 4, "codomain_size": 2, "functions": [],
        "neighborhood": [[0,1],[0,2],[1,3],[2,3]]})");

    const std::vector<std::vector<std::string>> commands{
        {"count", "8", "2"},
        {"count", "6", "4"},
        {"fraction"},
        {"check", orbit_file},
        {"closure", orbit_file},
        {"orbit", orbit_file, "0"},
        {"nfl", orbit_file, "3", "--algorithms", "lexicographic,reverse,random,random:5,greedy", "--seed", "99"},
        {"nfl", cycle42, "2", "--algorithms", "all,random:0"},
        {"landscape", orbit_file, "steepness", "2"},
        {"landscape", cycle42, "minima", "2"},
        {"landscape", cycle42, "minima", "2", "--hypercube", "2"},
    };
    std::size_t runs = 0;
    for (const auto& c : commands) {
        int code1 = 0, code2 = 0;
        const auto a = run_cli(c, code1);
        const auto b = run_cli(c, code2);
        runs += 2;
        o.require(code1 == cli::kSuccess, c.front() + " failed");
        o.require(code1 == code2 && a == b, c.front() + " output differs between runs");
    }
    for (const auto& c : std::vector<std::vector<std::string>>{
             {"fraction", "--x-max", "5"}, {"closure", orbit_file}, {"orbit", orbit_file, "1"}}) {
        auto first = c, second = c;
        first.insert(first.end(), {"--out", (dir / "a.out").string()});
        second.insert(second.end(), {"--out", (dir / "b.out").string()});
        int code1 = 0, code2 = 0;
        run_cli(first, code1);
        run_cli(second, code2);
        runs += 2;
        o.require(code1 == cli::kSuccess && code2 == cli::kSuccess, c.front() + " --out failed");
        o.require(slurp(dir / "a.out") == slurp(dir / "b.out") && !slurp(dir / "a.out").empty(),
                  c.front() + " --out files differ");
    }
    fs::remove_all(dir);
    if (o.ok) o.detail = std::to_string(runs) + " runs byte-identical";
    return o;
}

}  // namespace

int main() {
    criterion("AC1", "c.u.p. subset count matches brute force", 10, cup_count_vs_brute_force);
    criterion("AC2", "fraction table shape, monotonicity and (8,2) spot value", 1, fraction_table_shape);
    criterion("AC3", "sequence-multiset equality iff c.u.p., exhaustive", 30, nfl_iff_exhaustive);
    criterion("AC4", "basis class partition, permutation and orbit properties", 60, basis_class_properties);
    criterion("AC5", "hypercube local minima maximum 2^(n-1)", 5, hypercube_minima);
    criterion("AC6", "binding steepness/minima bounds break closure", 10, constraint_classes_not_cup);
    criterion("AC7", "non-trivial neighborhoods admit a non-invariant permutation", 10,
              noninvariant_permutations);
    criterion("AC8", "CLI output is deterministic", 60, cli_determinism);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
