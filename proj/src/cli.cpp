#include "mdfold/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mdfold/ddc.hpp"
#include "mdfold/ecc.hpp"
#include "mdfold/experiments.hpp"
#include "mdfold/folding.hpp"
#include "mdfold/pra.hpp"
#include "mdfold/shape_gallery.hpp"
#include "mdfold/sidon.hpp"

namespace mdfold {

namespace {

// A check ran and failed; exit code 1.
struct DomainFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string out_path;
    std::uint64_t seed = 1;

    std::string lattice, shape, dir, region, other, point;
    std::vector<Coord> dims;
    Coord alpha = 0, beta = 0;
    int sides = 0;
    std::string radius = "1", gamma = "1";
    double rotation = 0;
    std::uint64_t p_max = 7;
    std::uint64_t q = 0, n = 0;
    std::vector<std::uint64_t> elements;
    std::vector<std::string> points;
    std::uint32_t m = 0, k = 0, k1 = 0, k2 = 0;
    std::string bits;
    std::size_t count = 0, dim = 2;
    Coord max_volume = 10;
    bool with_count = false;
};

Point parse_point(const std::string& text) {
    Point p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        p.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument("bad point '" + text + "'");
    }
    if (p.empty()) throw std::invalid_argument("empty point");
    return p;
}

Folding load_folding(const Options& o) {
    if (o.lattice.empty() || o.shape.empty() || o.dir.empty()) {
        throw std::invalid_argument("--lattice, --shape and --dir are required");
    }
    const Direction d = Direction::parse(o.dir);
    return require_folding(Tiling(load_lattice(o.lattice), load_shape(o.shape)), d);
}

void note_negation(std::ostream& out, const std::string& text) {
    const Direction d = Direction::parse(text);
    if (d.negated()) out << "# direction negated to canonical form " << d.str() << "\n";
}

BurstCode load_code(const Options& o) {
    if (o.m == 0) throw std::invalid_argument("--m is required");
    if (!o.dims.empty()) return BurstCode::for_box(o.dims, o.m);
    return BurstCode::for_folding(load_folding(o), o.m);
}

void cmd_lattice(const Options& o, std::ostream& out) {
    const Lattice lattice = load_lattice(o.lattice);
    out << "dim " << lattice.dim() << "\nvolume " << lattice.volume() << "\nhermite\n";
    for (const auto& row : lattice.hermite()) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << "\n";
    }
    std::optional<Tiling> tiling;
    if (!o.shape.empty()) {
        const Shape shape = load_shape(o.shape);
        const bool tiles = is_tiling(lattice, shape);
        out << "tiling " << (tiles ? "yes" : "no") << "\n";
        if (tiles) tiling.emplace(lattice, shape);
    }
    if (!o.point.empty()) {
        const Point p = parse_point(o.point);
        out << "residue " << format_point(lattice.residue(p).coords) << "\n";
        if (tiling) out << "center " << format_point(tiling->center_of(p)) << "\n";
    }
}

void cmd_fold(const Options& o, std::ostream& out) {
    note_negation(out, o.dir);
    const Folding f = load_folding(o);
    out << "direction " << f.direction().str() << "\nfolded-row " << f.size() << "\n";
    for (std::size_t i = 0; i < f.size(); ++i) out << i << " " << format_point(f.at(i)) << "\n";
}

void cmd_check(const Options& o, std::ostream& out) {
    const Lattice lattice = load_lattice(o.lattice);
    std::vector<Direction> dirs;
    if (o.dir == "all") {
        dirs = Direction::all(lattice.dim());
    } else {
        note_negation(out, o.dir);
        dirs.push_back(Direction::parse(o.dir));
    }
    const Shape tile = o.shape.empty() ? fundamental_box(lattice) : load_shape(o.shape);
    const Tiling tiling(lattice, tile);
    for (const auto& d : dirs) {
        const bool predicate = is_folding(lattice, d);
        const bool walked = std::holds_alternative<Folding>(walk_folded_row(tiling, d));
        if (predicate != walked) throw std::logic_error("criterion and walk disagree on " + d.str());
        out << d.str() << " folding: " << (predicate ? "yes" : "no") << "\n";
    }
    if (o.with_count) out << "distinct folded-rows: " << count_distinct_folded_rows(tiling) << "\n";
}

void cmd_shape(const std::string& kind, const Options& o, std::ostream& out) {
    if (kind == "plan") {
        const RectanglePlan plan = plan_rectangle(Rational::parse(o.gamma).value(), o.p_max);
        out << "alpha " << plan.alpha << "\nbeta " << plan.beta << "\np " << plan.prime << "\ngamma_target "
            << plan.gamma_target << "\ngamma_achieved " << plan.gamma_achieved << "\n";
        return;
    }
    Shape shape = [&] {
        if (kind == "box") return box_shape(o.dims);
        if (kind == "hexagon") return hexagon_shape(o.alpha, o.beta);
        if (kind == "polygon") return raster_polygon(o.sides, Rational::parse(o.radius), o.rotation);
        if (kind == "circle") return raster_circle(Rational::parse(o.radius));
        if (kind == "compact") return compact_tile(load_lattice(o.lattice));
        // morph
        return morph_shape(load_folding(o), parse_point(o.point));
    }();
    out << "# " << shape.size() << " points\n";
    write_shape(out, shape);
}

void cmd_sidon(const std::string& kind, const Options& o, std::ostream& out) {
    if (kind == "bose") {
        const B2Sequence seq = bose(o.q);
        out << "n " << seq.n << "\nm " << seq.elements.size() << "\nelements";
        for (auto e : seq.elements) out << " " << e;
        out << "\n";
        return;
    }
    const bool ok = verify_b2(o.n, o.elements);
    out << "B2: " << (ok ? "yes" : "no") << "\n";
    if (!ok) throw DomainFailure("not a B2 sequence");
}

B2Sequence marks_for(const Options& o, std::size_t size) {
    if (o.q) return bose(o.q);
    if (o.elements.empty()) throw std::invalid_argument("--q or --elements is required");
    B2Sequence seq{size, o.elements};
    if (!verify_b2(seq.n, seq.elements)) throw DomainFailure("elements are not a B2 sequence mod " + std::to_string(size));
    return seq;
}

void cmd_ddc(const std::string& kind, const Options& o, std::ostream& out) {
    if (kind == "verify") {
        std::vector<Point> dots;
        for (const auto& p : o.points) dots.push_back(parse_point(p));
        const bool ok = verify_ddc(dots);
        out << "ddc: " << (ok ? "yes" : "no") << "\n";
        if (!ok) throw DomainFailure("repeated difference vector");
        return;
    }
    if (kind == "delta") {
        const Intersection best = max_intersection(load_shape(o.shape), load_shape(o.other));
        out << "delta " << best.size << "\noffset " << format_point(best.offset) << "\n";
        return;
    }
    const Folding folding = load_folding(o);
    const B2Sequence marks = marks_for(o, folding.size());
    if (kind == "fold") {
        const DotPattern pattern = fold_b2(folding, marks);
        write_dot_pattern(out, pattern);
        const bool ok = verify_ddc(pattern);
        out << "ddc: " << (ok ? "yes" : "no") << "\n";
        out << "reference sqrt|S| " << std::fixed << std::setprecision(2) << std::sqrt(double(folding.size()))
            << " (asymptotic upper-bound scale)\n";
        if (!ok) throw DomainFailure("folded pattern is not a DDC");
        return;
    }
    // rich
    const Shape region = load_shape(o.region);
    const InfiniteDDC pattern(folding, marks);
    const Intersection delta = max_intersection(folding.shape(), region);
    const RichCopy best = find_rich_copy(pattern, region);
    const std::size_t floor = rich_copy_floor(marks.elements.size(), folding.size(), delta.size);
    out << "delta " << delta.size << "\nfloor " << floor << "\noffset " << format_point(best.offset) << "\ncount "
        << best.count << "\n";
    if (best.count < floor) throw DomainFailure("densest copy falls below the averaging floor");
}

void cmd_ecc(const std::string& kind, const Options& o, std::ostream& out) {
    const BurstCode code = load_code(o);
    if (kind == "build") {
        out << "positions " << code.length() << "\nredundancy " << code.redundancy() << "\nrank " << code.rank()
            << "\ninfo " << code.info_length() << "\nH\n";
        for (const auto& row : code.parity_check_matrix()) out << format_bits(row) << "\n";
    } else if (kind == "encode") {
        out << format_bits(code.encode(parse_bits(o.bits))) << "\n";
    } else if (kind == "decode") {
        const BitVector word = parse_bits(o.bits);
        const ErrorReport report = code.decode(word);
        out << report.str() << "\n";
        if (report.kind == ErrorReport::Kind::Uncorrectable) throw DomainFailure("uncorrectable word");
        out << format_bits(code.correct(word, report)) << "\n";
    } else {
        const VerifyReport v = verify_code(code, o.seed);
        const RedundancyReport r = redundancy_report(code);
        out << v.patterns << " patterns, " << v.distinct_syndromes << " distinct syndromes, decode "
            << (v.decoded_ok == v.patterns ? "OK" : "FAILED") << "\n";
        out << "redundancy " << r.redundancy << ", trivial bound " << r.trivial_bound << "\n";
        if (!v.ok()) throw DomainFailure("exhaustive verification failed");
    }
}

void cmd_pra(const std::string& kind, const Options& o, std::ostream& out) {
    if (kind == "fold") {
        const Folding folding = load_folding(o);
        const MSequence seq = m_sequence(o.k);
        write_binary_pattern(out, fold_sequence(folding, seq.bits));
        return;
    }
    const MSequence seq = m_sequence(o.k1 * o.k2);
    std::optional<Folding> folding;
    if (o.lattice.empty()) {
        // Diagonal folding of the n1 x n2 array.
        const Coord n1 = (Coord{1} << o.k1) - 1;
        const Coord n2 = static_cast<Coord>(seq.bits.size()) / n1;
        folding = require_folding(Tiling(Lattice({{n1, 0}, {0, n2}}), box_shape({n1, n2})), Direction({1, 1}));
    } else {
        folding = load_folding(o);
    }
    const bool ok = check_window_property(fold_sequence(*folding, seq.bits), o.k1, o.k2);
    out << "window " << o.k1 << "x" << o.k2 << ": " << (ok ? "yes" : "no") << "\n";
    if (!ok) throw DomainFailure("window property fails");
}

void cmd_experiment(const std::string& kind, const Options& o, std::ostream& out) {
    if (kind == "minimality") {
        const RowSearchResult r = search_complete_folding_lattices(o.dim, o.max_volume, true);
        out << "checked " << r.lattices_checked << " lattices up to volume " << r.max_volume << "\n";
        if (r.complete.empty()) out << "complete: none\n";
        for (const auto& l : r.complete) {
            out << "complete volume " << l.volume() << ":";
            for (const auto& row : l.basis()) out << " " << format_point(row);
            out << "\n";
        }
    } else if (kind == "equivalence") {
        const EquivalenceStats s = predicate_equivalence(o.dim, o.count, o.max_volume, o.seed);
        out << "lattices " << s.lattices << "\ncases " << s.cases << "\nagreements " << s.agreements << "\nfoldings "
            << s.foldings << "\n";
        if (s.agreements != s.cases) throw DomainFailure("criterion and walk disagree");
    } else if (kind == "morph") {
        const Lattice lattice = hexagon_lattice(o.alpha, o.beta);
        const Shape target = hexagon_shape(o.alpha, o.beta);
        const Point center{2 * o.beta / 3, o.alpha / 2};
        const Shape rectangle = box_shape({o.beta, o.alpha}).translated(zero_point(2) - center);
        const Folding start = require_folding(Tiling(lattice, rectangle), Direction({1, 0}));
        const auto path = morph_toward(start, target);
        const bool reached = path.empty() ? rectangle == target : path.back() == target;
        out << "steps " << path.size() << "\nreached " << (reached ? "yes" : "no") << "\n";
        if (!reached) throw DomainFailure("greedy morph did not reach the hexagon");
    } else {
        const WindowComparison c =
            window_equivalence_experiment(load_lattice(o.lattice), load_shape(o.shape), Direction::parse(o.dir), o.k1, o.k2);
        out << "shape " << (c.shape_ok ? "yes" : "no") << "\narray " << (c.array_ok ? "yes" : "no") << "\n";
        if (!c.agree()) throw DomainFailure("shape and array disagree on the window property");
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Lattice foldings of sequences into multidimensional shapes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", o.out_path, "Write results to this file");
    app.add_option("--seed", o.seed, "Seed for randomized checks");

    auto geometry = [&](CLI::App* c) {
        c->add_option("--lattice", o.lattice, "Lattice file");
        c->add_option("--shape", o.shape, "Shape file");
        c->add_option("--dir", o.dir, "Direction, e.g. 1,-1");
    };

    auto* lattice = app.add_subcommand("lattice", "Volume, Hermite form, residues and centers");
    lattice->add_option("--lattice", o.lattice)->required();
    lattice->add_option("--shape", o.shape);
    lattice->add_option("--point", o.point, "Grid point, e.g. 1,0");

    auto* shape = app.add_subcommand("shape", "Build shapes in the shape file format");
    shape->require_subcommand(1);
    auto* box = shape->add_subcommand("box", "Axis-aligned box, --dims a,b,...");
    box->add_option("--dims", o.dims)->delimiter(',')->required();
    auto* hexagon = shape->add_subcommand("hexagon", "Quasi-hexagon of alpha*beta cells");
    hexagon->add_option("--alpha", o.alpha)->required();
    hexagon->add_option("--beta", o.beta)->required();
    auto* polygon = shape->add_subcommand("polygon", "Raster of a regular polygon");
    polygon->add_option("--n", o.sides)->required();
    polygon->add_option("--radius", o.radius)->required();
    polygon->add_option("--rotation", o.rotation);
    auto* circle = shape->add_subcommand("circle", "Raster of a circle");
    circle->add_option("--radius", o.radius)->required();
    auto* compact = shape->add_subcommand("compact", "Compact tile of a lattice");
    compact->add_option("--lattice", o.lattice)->required();
    auto* plan = shape->add_subcommand("plan", "Rectangle sides for a target aspect ratio");
    plan->add_option("--gamma", o.gamma)->required();
    plan->add_option("--pmax", o.p_max);
    auto* morph = shape->add_subcommand("morph", "Move one cell of a folded shape");
    geometry(morph);
    morph->add_option("--point", o.point)->required();

    auto* fold = app.add_subcommand("fold", "Walk the folded-row");
    geometry(fold);

    auto* check = app.add_subcommand("check", "Folding criterion per direction");
    check->add_option("--lattice", o.lattice)->required();
    check->add_option("--dir", o.dir)->default_val("all");
    check->add_option("--shape", o.shape);
    check->add_flag("--count", o.with_count, "Also count distinct folded-rows");

    auto* sidon = app.add_subcommand("sidon", "B2 sequences");
    sidon->require_subcommand(1);
    auto* sbose = sidon->add_subcommand("bose", "Bose B2 sequence mod q^2-1");
    sbose->add_option("--q", o.q)->required();
    auto* sverify = sidon->add_subcommand("verify", "Check the B2 property");
    sverify->add_option("--n", o.n)->required();
    sverify->add_option("elements", o.elements)->required();

    auto* ddc = app.add_subcommand("ddc", "Distinct difference configurations");
    ddc->require_subcommand(1);
    auto* dfold = ddc->add_subcommand("fold", "Fold a Bose sequence into a shape");
    geometry(dfold);
    dfold->add_option("--q", o.q);
    dfold->add_option("--elements", o.elements)->delimiter(',');
    auto* drich = ddc->add_subcommand("rich", "Search a region for a copy with many dots");
    geometry(drich);
    drich->add_option("--q", o.q);
    drich->add_option("--elements", o.elements)->delimiter(',');
    drich->add_option("--region", o.region)->required();
    auto* dverify = ddc->add_subcommand("verify", "Check distinct differences of points");
    dverify->add_option("points", o.points)->required();
    auto* ddelta = ddc->add_subcommand("delta", "Largest overlap of two shapes under translation");
    ddelta->add_option("--shape", o.shape)->required();
    ddelta->add_option("--other", o.other)->required();

    auto* ecc = app.add_subcommand("ecc", "2-burst-correcting codes");
    ecc->require_subcommand(1);
    for (const char* name : {"build", "encode", "decode", "verify"}) {
        auto* c = ecc->add_subcommand(name, std::string(name) == "verify" ? "Exhaustive syndrome and decode check" : "");
        c->add_option("--box", o.dims)->delimiter(',');
        geometry(c);
        c->add_option("--m", o.m)->required();
        if (std::string(name) == "encode") c->add_option("--info", o.bits)->required();
        if (std::string(name) == "decode") c->add_option("--word", o.bits)->required();
    }

    auto* pra = app.add_subcommand("pra", "Pseudo-random arrays");
    pra->require_subcommand(1);
    auto* pfold = pra->add_subcommand("fold", "Fold an m-sequence into a shape");
    geometry(pfold);
    pfold->add_option("--k", o.k)->required();
    auto* pwindow = pra->add_subcommand("window", "Window check on an F1 array");
    geometry(pwindow);
    pwindow->add_option("--k1", o.k1)->required();
    pwindow->add_option("--k2", o.k2)->required();

    auto* experiment = app.add_subcommand("experiment", "Searches and equivalence checks");
    experiment->require_subcommand(1);
    auto* minimality = experiment->add_subcommand("minimality", "Search small lattices for complete foldings");
    minimality->add_option("--dim", o.dim);
    minimality->add_option("--max-volume", o.max_volume);
    auto* equivalence = experiment->add_subcommand("equivalence", "Criterion against walk on random lattices");
    equivalence->add_option("--dim", o.dim);
    equivalence->add_option("--count", o.count)->default_val(100);
    equivalence->add_option("--max-volume", o.max_volume)->default_val(40);
    auto* emorph = experiment->add_subcommand("morph", "Morph a rectangle into the hexagon");
    emorph->add_option("--alpha", o.alpha)->required();
    emorph->add_option("--beta", o.beta)->required();
    auto* ewindow = experiment->add_subcommand("window", "Window property of a shape and its array");
    geometry(ewindow);
    ewindow->add_option("--k1", o.k1)->required();
    ewindow->add_option("--k2", o.k2)->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::ostringstream buffer;
    int code = 0;
    try {
        auto chosen = [](CLI::App* parent) { return parent->get_subcommands().front()->get_name(); };
        if (lattice->parsed()) cmd_lattice(o, buffer);
        else if (shape->parsed()) cmd_shape(chosen(shape), o, buffer);
        else if (fold->parsed()) cmd_fold(o, buffer);
        else if (check->parsed()) cmd_check(o, buffer);
        else if (sidon->parsed()) cmd_sidon(chosen(sidon), o, buffer);
        else if (ddc->parsed()) cmd_ddc(chosen(ddc), o, buffer);
        else if (ecc->parsed()) cmd_ecc(chosen(ecc), o, buffer);
        else if (pra->parsed()) cmd_pra(chosen(pra), o, buffer);
        else cmd_experiment(chosen(experiment), o, buffer);
    } catch (const DomainFailure& e) {
        err << "error: " << e.what() << "\n";
        code = 1;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        code = 1;
    }

    if (o.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_path);
        if (!file) {
            err << "input error: cannot write " << o.out_path << "\n";
            return 2;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace mdfold
