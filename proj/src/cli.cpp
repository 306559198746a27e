#include "tagbar/cli.hpp"

#include "tagbar/constructions.hpp"
#include "tagbar/discrete_morse.hpp"
#include "tagbar/io.hpp"
#include "tagbar/metrics.hpp"
#include "tagbar/scalar_persistence.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <random>

namespace tagbar
{

namespace
{

// Exit codes.
constexpr int ok = 0;
constexpr int invalid = 1;
constexpr int parse_error = 2;

struct Io
{
    std::ostream& out;
    std::ostream& err;
};

std::string betti_line(std::vector<std::size_t> const& betti)
{
    std::string s = "betti";
    for (auto b : betti)
        s += ' ' + std::to_string(b);
    return s;
}

int cmd_validate(Io io, std::string const& path)
{
    std::string const text = read_file(path);
    if (looks_simplicial(text))
    {
        auto const f = parse_simplicial_file(text);
        auto const report = validate_cvf(f.complex, f.field);
        if (!report.ok())
        {
            for (auto const& v : report.violations)
                io.err << "invalid field: " << v << '\n';
            return invalid;
        }
        auto const check = is_gradient_like(f.complex, f.field);
        if (!check.gradient_like)
        {
            io.err << "field has a closed V-path:";
            for (auto const& s : check.cycle)
                io.err << " {" << f.complex.label(s) << '}';
            io.err << '\n';
            return invalid;
        }
        io.out << "valid\n" << betti_line(simplicial_betti(f.complex)) << '\n';
        return ok;
    }
    auto const f = parse_complex_file(text);
    auto const report = validate_complex(f.complex);
    if (!report.ok())
    {
        for (auto const& issue : report.issues)
            io.err << "degree " << issue.degree << ": " << issue.message << '\n';
        return invalid;
    }
    if (f.filter)
        if (auto v = monotonicity_violation(f.filtered()))
        {
            io.err << *v << '\n';
            return invalid;
        }
    if (f.weights || f.filter)
        (void)f.weighted(); // checks the tie precedences
    io.out << "valid\n" << betti_line(betti_numbers(f.complex)) << '\n';
    return ok;
}

WeightedComplex load_weighted(Io io, std::string const& path)
{
    auto const f = parse_complex_file(read_file(path));
    auto const report = validate_complex(f.complex);
    if (!report.ok())
        throw Error("invalid complex: " + report.issues.front().message);
    WeightedComplex w = f.weighted();
    auto const generic = is_generic(w);
    if (!generic.generic && f.order.empty())
        io.err << "warning: input is not generic (" << generic.reason << "); using the default tie order\n";
    return w;
}

int cmd_tagbar(Io io, std::string const& construction, std::string const& path)
{
    WeightedComplex const w = load_weighted(io, path);
    TaggedBarcode const b = construction == "x" ? construction_X(w).barcode : construction_Y(w);
    io.out << serialize_barcode(b);
    return ok;
}

TaggedBarcode load_tagged(std::string const& path)
{
    auto const f = parse_barcode_file(read_file(path));
    if (!f.tagged)
        throw ParseError(path + ": expected a #tagged barcode file");
    return f.tagged_barcode;
}

void dump_matching(Io io, std::size_t degree, MatchingResult const& m)
{
    for (auto const& [a, b] : m.matched)
        io.out << "match " << degree << ' ' << to_string(a) << ' ' << to_string(b) << " cost "
               << format_real(cost(a, b)) << '\n';
    for (auto const& a : m.unmatched_a)
        io.out << "unmatched first " << degree << ' ' << to_string(a) << " weight " << format_real(weight(a)) << '\n';
    for (auto const& b : m.unmatched_b)
        io.out << "unmatched second " << degree << ' ' << to_string(b) << " weight " << format_real(weight(b)) << '\n';
}

int cmd_bottleneck(Io io, std::string const& p1, std::string const& p2, std::optional<std::size_t> degree,
                   bool matching)
{
    TaggedBarcode const a = load_tagged(p1);
    TaggedBarcode const b = load_tagged(p2);
    std::vector<std::size_t> degrees;
    if (degree)
        degrees.push_back(*degree);
    else
    {
        degrees = a.degrees();
        for (auto k : b.degrees())
            if (std::find(degrees.begin(), degrees.end(), k) == degrees.end())
                degrees.push_back(k);
        std::sort(degrees.begin(), degrees.end());
    }
    ExtReal d(0.0);
    std::vector<std::pair<std::size_t, MatchingResult>> results;
    for (auto k : degrees)
    {
        auto m = bottleneck_matching(a.degree(k), b.degree(k));
        d = max(d, m.epsilon);
        results.emplace_back(k, std::move(m));
    }
    io.out << format_real(d) << '\n';
    if (matching)
        for (auto const& [k, m] : results)
            dump_matching(io, k, m);
    return ok;
}

int cmd_dint(Io io, std::string const& p1, std::string const& p2)
{
    io.out << format_real(interleaving_distance(load_tagged(p1), load_tagged(p2))) << '\n';
    return ok;
}

int cmd_morse(Io io, std::string const& path, std::string const& metric, std::optional<std::uint64_t> seed)
{
    if (metric != "barycenter")
        throw ParseError("unknown metric '" + metric + "'");
    auto f = parse_simplicial_file(read_file(path));
    if (seed)
        f.field = greedy_acyclic_matching(f.complex, *seed);
    auto const report = validate_cvf(f.complex, f.field);
    if (!report.ok())
    {
        for (auto const& v : report.violations)
            io.err << "invalid field: " << v << '\n';
        return invalid;
    }
    WeightedComplex const w = morse_weights(f.complex, f.field, barycenter_metric(f.complex));
    io.out << serialize_complex_file(complex_file_of(w));
    return ok;
}

int cmd_persist(Io io, std::string const& path)
{
    auto const f = parse_complex_file(read_file(path));
    io.out << serialize_barcode(persistence_barcode(f.filtered()));
    return ok;
}

int cmd_correspond(Io io, std::string const& path, std::uint64_t seed)
{
    auto const f = parse_complex_file(read_file(path));
    auto const r = verify_correspondence(f.filtered(), seed);
    if (r.ok)
    {
        io.out << "PASS\n";
        return ok;
    }
    io.out << "FAIL\n" << r.diff;
    return invalid;
}

int cmd_subdivide(Io io, std::string const& path, std::size_t iters)
{
    auto f = parse_simplicial_file(read_file(path));
    SimplicialFile out;
    out.complex = f.complex;
    for (std::size_t i = 0; i < iters; ++i)
        out.complex = barycentric_subdivide(out.complex);
    io.out << serialize_simplicial_file(out);
    return ok;
}

int cmd_xi(Io io, std::string const& path)
{
    auto const f = parse_simplicial_file(read_file(path));
    std::vector<std::vector<double>> points;
    for (std::size_t d = 0; d < f.complex.num_dimensions(); ++d)
        for (auto const& s : f.complex.simplices(d))
            if (f.field.pairs.empty() || f.field.is_critical(s))
                points.push_back(f.complex.barycenter(s));
    std::vector<std::vector<double>> table(points.size(), std::vector<double>(points.size(), 0.0));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
        {
            double s = 0.0;
            for (std::size_t c = 0; c < points[i].size(); ++c)
                s += (points[i][c] - points[j][c]) * (points[i][c] - points[j][c]);
            table[i][j] = table[j][i] = std::sqrt(s);
        }
    io.out << format_real(xi(table)) << '\n';
    return ok;
}

bool same_order(WeightedComplex const& x, WeightedComplex const& y)
{
    BasedChainComplex const& c = x.complex();
    std::vector<std::array<std::size_t, 3>> pairs;
    for (std::size_t k = 1; k < c.num_degrees(); ++k)
        for (std::size_t a = 0; a < c.dim(k); ++a)
            for (std::size_t b = 0; b < c.dim(k - 1); ++b)
                pairs.push_back({k, a, b});
    for (auto const& p : pairs)
        for (auto const& q : pairs)
            if (x.precedes(p[0], p[1], p[2], q[0], q[1], q[2]) != y.precedes(p[0], p[1], p[2], q[0], q[1], q[2]))
                return false;
    return true;
}

bool all_positive(WeightedComplex const& w)
{
    for (auto const& block : w.weights())
        for (auto const& row : block)
            for (double x : row)
                if (!(x > 0.0))
                    return false;
    return true;
}

int cmd_perturb(Io io, std::string const& path, double delta, std::size_t trials, std::uint64_t seed)
{
    if (!(delta >= 0.0) || !std::isfinite(delta))
        throw ParseError("--delta must be a non-negative number");
    WeightedComplex const w = load_weighted(io, path);
    SimplificationTrace const trace = run_simplifications(w);
    TaggedBarcode const y0 = construction_Y_barcode(trace);
    bool const x_ok = all_positive(w);
    TaggedBarcode const x0 = x_ok ? construction_X_barcode(trace) : TaggedBarcode{};
    double const n = static_cast<double>(trace.steps.size());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> grid(-1024, 1024);
    std::size_t preserved = 0;
    std::size_t x_skipped = 0;
    ExtReal max_y(0.0);
    ExtReal max_x(0.0);
    double max_phi = 0.0;
    bool bound = true;
    for (std::size_t t = 0; t < trials; ++t)
    {
        PairTable<double> table = w.weights();
        double phi = 0.0;
        for (auto& block : table)
            for (auto& row : block)
                for (double& x : row)
                {
                    double const moved = std::max(0.0, x + delta * grid(rng) / 1024.0);
                    phi = std::max(phi, std::fabs(moved - x));
                    x = moved;
                }
        WeightedComplex const wp = w.with_weights(std::move(table));
        if (!same_order(w, wp))
            continue;
        ++preserved;
        max_phi = std::max(max_phi, phi);
        SimplificationTrace const tp = run_simplifications(wp);
        ExtReal const dy = interleaving_distance(y0, construction_Y_barcode(tp));
        max_y = max(max_y, dy);
        if (ExtReal(phi) < dy)
            bound = false;
        if (x_ok && all_positive(wp))
        {
            ExtReal const dx = interleaving_distance(x0, construction_X_barcode(tp));
            max_x = max(max_x, dx);
            if (ExtReal(n * phi) < dx)
                bound = false;
        }
        else
            ++x_skipped;
    }
    io.out << "trials " << trials << '\n'
           << "order_preserving " << preserved << '\n'
           << "trace_length " << trace.steps.size() << '\n'
           << "max_d_phi " << format_real(max_phi) << '\n'
           << "max_dB_Y " << format_real(max_y) << '\n'
           << "max_dI_X " << format_real(max_x) << '\n';
    if (x_skipped)
        io.out << "x_skipped " << x_skipped << '\n';
    io.out << "bound " << (bound ? "PASS" : "FAIL") << '\n';
    return bound ? ok : invalid;
}

} // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    Io const io{out, err};
    CLI::App app{"Tagged barcodes of weighted chain complexes"};
    app.name("tagbar");
    app.require_subcommand(1);

    std::string file;
    std::string file2;

    auto* validate = app.add_subcommand("validate", "Check a complex or simplicial file");
    validate->add_option("file", file)->required();

    std::string construction = "y";
    auto* tagbar = app.add_subcommand("tagbar", "Tagged barcode of a weighted complex");
    tagbar->add_option("--construction", construction)->check(CLI::IsMember({"x", "y"}));
    tagbar->add_option("file", file)->required();

    std::optional<std::size_t> degree;
    bool matching = false;
    auto* bottleneck_cmd = app.add_subcommand("bottleneck", "Bottleneck distance of two tagged barcodes");
    bottleneck_cmd->add_option("first", file)->required();
    bottleneck_cmd->add_option("second", file2)->required();
    bottleneck_cmd->add_option("--degree", degree);
    bottleneck_cmd->add_flag("--matching", matching, "Print an optimal matching");

    auto* dint = app.add_subcommand("dint", "Interleaving distance of two tagged barcodes");
    dint->add_option("first", file)->required();
    dint->add_option("second", file2)->required();

    std::string metric = "barycenter";
    std::optional<std::uint64_t> greedy_seed;
    auto* morse = app.add_subcommand("morse", "Weighted Morse complex of a simplicial file");
    morse->add_option("file", file)->required();
    morse->add_option("--metric", metric);
    morse->add_option("--greedy-seed", greedy_seed, "Replace the file's pairs by a random greedy gradient field");

    auto* persist = app.add_subcommand("persist", "Persistence barcode of a filtered complex");
    persist->add_option("file", file)->required();

    std::uint64_t seed = 1;
    auto* correspond = app.add_subcommand("correspond", "Compare persistence with construction Y");
    correspond->add_option("file", file)->required();
    correspond->add_option("--seed", seed, "Seed of the random tie order");

    std::size_t iters = 1;
    auto* subdivide = app.add_subcommand("subdivide", "Iterated barycentric subdivision");
    subdivide->add_option("file", file)->required();
    subdivide->add_option("--iters", iters);

    auto* xi_cmd = app.add_subcommand("xi", "General-position gap of critical barycenters or points");
    xi_cmd->add_option("file", file)->required();

    double delta = 0.0;
    std::size_t trials = 100;
    auto* perturb = app.add_subcommand("perturb", "Random weight perturbations against the stability bound");
    perturb->add_option("file", file)->required();
    perturb->add_option("--delta", delta)->required();
    perturb->add_option("--trials", trials);
    perturb->add_option("--seed", seed);

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return ok;
    }
    catch (CLI::CallForAllHelp const&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    }
    catch (CLI::ParseError const& e)
    {
        err << "error: " << e.what() << '\n';
        return parse_error;
    }

    try
    {
        if (*validate)
            return cmd_validate(io, file);
        if (*tagbar)
            return cmd_tagbar(io, construction, file);
        if (*bottleneck_cmd)
            return cmd_bottleneck(io, file, file2, degree, matching);
        if (*dint)
            return cmd_dint(io, file, file2);
        if (*morse)
            return cmd_morse(io, file, metric, greedy_seed);
        if (*persist)
            return cmd_persist(io, file);
        if (*correspond)
            return cmd_correspond(io, file, seed);
        if (*subdivide)
            return cmd_subdivide(io, file, iters);
        if (*xi_cmd)
            return cmd_xi(io, file);
        if (*perturb)
            return cmd_perturb(io, file, delta, trials, seed);
    }
    catch (ParseError const& e)
    {
        err << "parse error: " << e.what() << '\n';
        return parse_error;
    }
    catch (Error const& e)
    {
        err << "error: " << e.what() << '\n';
        return invalid;
    }
    return parse_error;
}

} // namespace tagbar
