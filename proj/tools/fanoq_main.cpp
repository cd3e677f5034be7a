#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fanoq/check.hpp"
#include "fanoq/json_io.hpp"

namespace {

using fanoq::Int;
using fanoq::Json;
using fanoq::Rational;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitVerificationFailure = 2;
constexpr int kExitUsage = 64;

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    return out;
}

struct Options {
    std::string input;
    std::string second_input;
    std::string out_path;
    std::string group = "GL";
    Int bound = 3;
    Int k = 1;
    int vertex = -1;
    std::string w_csv, l_csv;
    Int tau = 0;
    std::string residual = "0";
};

std::array<Int, 3> parse_triple(const std::string& csv) {
    std::array<Int, 3> values{};
    std::stringstream ss(csv);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',') && i < 3) values[i++] = std::stoll(item);
    if (i != 3) throw std::invalid_argument("expected three comma-separated integers");
    return values;
}

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
    if (command == "quiver") {
        out << fanoq::to_json(fanoq::build_quiver(fanoq::polygon_from_json(read_json(opt.input))))
                   .dump(2)
            << "\n";
    } else if (command == "block") {
        Json j = read_json(opt.input);
        if (j.contains("vertices"))
            out << fanoq::to_json(fanoq::build_block_quiver(fanoq::polygon_from_json(j))).dump(2)
                << "\n";
        else
            out << fanoq::to_json(fanoq::block(fanoq::quiver_from_json(j))).dump(2) << "\n";
    } else if (command == "refine") {
        out << fanoq::to_json(
                   fanoq::standard_refinement(fanoq::polygon_from_json(read_json(opt.input))))
                   .dump(2)
            << "\n";
    } else if (command == "mutate-polygon") {
        fanoq::FanoPolygon polygon = fanoq::polygon_from_json(read_json(opt.input));
        fanoq::PolygonalQuiver pq = fanoq::build_quiver(polygon);
        if (opt.vertex < 0 || opt.vertex >= pq.quiver.size())
            throw std::invalid_argument("--vertex must name a quiver vertex");
        out << fanoq::to_json(fanoq::mutate_polygon(polygon, pq.normals[opt.vertex])).dump(2)
            << "\n";
    } else if (command == "mutate-quiver") {
        fanoq::DecoratedQuiver quiver = fanoq::quiver_from_json(read_json(opt.input));
        if (opt.vertex < 0 || opt.vertex >= quiver.size())
            throw std::invalid_argument("--vertex must name a quiver vertex");
        out << fanoq::to_json(fanoq::mutate(quiver, opt.vertex, opt.k)).dump(2) << "\n";
    } else if (command == "degree") {
        fanoq::FanoPolygon polygon = fanoq::polygon_from_json(read_json(opt.input));
        out << fanoq::degree_from_quiver(fanoq::build_quiver(polygon)).str() << "\n";
    } else if (command == "content") {
        out << fanoq::to_json(
                   fanoq::singularity_content(fanoq::polygon_from_json(read_json(opt.input))))
                   .dump(2)
            << "\n";
    } else if (command == "markov") {
        fanoq::MarkovPoint point =
            fanoq::markov_point(fanoq::polygon_from_json(read_json(opt.input)));
        out << fanoq::to_json(point).dump(2) << "\n";
        if (point.residual != Rational(0)) return kExitVerificationFailure;
    } else if (command == "reconstruct") {
        fanoq::ReconstructionReport report =
            fanoq::reconstruct_general(fanoq::quiver_from_json(read_json(opt.input)));
        out << fanoq::to_json(report).dump(2) << "\n";
    } else if (command == "feasibility") {
        fanoq::FeasibilityResult result =
            fanoq::triangle_feasibility(parse_triple(opt.w_csv), parse_triple(opt.l_csv), opt.tau,
                                        Rational::parse(opt.residual));
        if (result.g)
            out << "g = " << *result.g << "\n";
        else
            out << "infeasible: " << result.lhs_coefficient << "g = " << result.rhs.str() << "\n";
    } else if (command == "equivalent") {
        fanoq::EquivalenceGroup group =
            opt.group == "SL" ? fanoq::EquivalenceGroup::SL : fanoq::EquivalenceGroup::GL;
        bool same = fanoq::polygons_equivalent(fanoq::polygon_from_json(read_json(opt.input)),
                                               fanoq::polygon_from_json(read_json(opt.second_input)),
                                               group);
        out << (same ? "true" : "false") << "\n";
    } else if (command == "enumerate") {
        std::vector<fanoq::FanoPolygon> corpus = fanoq::enumerate_fano_polygons(opt.bound);
        for (const fanoq::FanoPolygon& polygon : corpus) out << fanoq::to_json(polygon).dump() << "\n";
        out << "count: " << corpus.size() << "\n";
    } else if (command == "complex3") {
        out << fanoq::to_json(
                   fanoq::block_complex3(fanoq::polytope_from_json(read_json(opt.input))))
                   .dump(2)
            << "\n";
    } else if (command == "check") {
        std::uint64_t seed = 20200313;
        if (const char* env = std::getenv("FANOQ_SEED")) seed = std::strtoull(env, nullptr, 10);
        fanoq::CheckSummary summary;
        if (!opt.input.empty()) {
            fanoq::check_polygon(fanoq::polygon_from_json(read_json(opt.input)), summary);
        } else {
            summary = fanoq::check_corpus(opt.bound, seed);
        }
        out << "polygons: " << summary.polygons << "\n";
        out << "checks: " << summary.checks << "\n";
        out << "violations: " << summary.violations.size() << "\n";
        if (summary.sl_class_flips > 0)
            out << "note: " << summary.sl_class_flips
                << " reconstructions matched only up to reflection\n";
        for (const std::string& message : summary.violations) out << "  " << message << "\n";
        if (!summary.ok()) return kExitVerificationFailure;
    } else {
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for Fano polygons and their decorated quivers"};
    app.require_subcommand(0, 1);
    Options opt;
    std::vector<CLI::App*> commands;

    auto add_command = [&](const std::string& name, const std::string& help, bool with_input) {
        CLI::App* cmd = app.add_subcommand(name, help);
        if (with_input) cmd->add_option("input", opt.input, "input JSON file")->required();
        commands.push_back(cmd);
        return cmd;
    };

    add_command("quiver", "decorated quiver of a polygon", true);
    add_command("block", "block quiver of a polygon or quiver", true);
    add_command("refine", "standard refinement of the spanning fan", true);
    auto* mp = add_command("mutate-polygon", "combinatorial mutation at a T-vertex", true);
    mp->add_option("--vertex", opt.vertex, "quiver vertex id")->required();
    auto* mq = add_command("mutate-quiver", "generalized quiver mutation", true);
    mq->add_option("--vertex", opt.vertex, "vertex id")->required();
    mq->add_option("--k", opt.k, "mutation exponent (default 1)");
    add_command("degree", "anticanonical degree from the quiver", true);
    add_command("content", "singularity content (tau, basket)", true);
    add_command("markov", "point on the Markov-type hypersurface", true);
    add_command("reconstruct", "decide block-polygonality and rebuild", true);
    auto* fe = add_command("feasibility", "coprime-width triangle feasibility", false);
    fe->add_option("--w", opt.w_csv, "three widths, comma separated")->required();
    fe->add_option("--l", opt.l_csv, "three local indices, comma separated")->required();
    fe->add_option("--tau", opt.tau, "number of primitive T-cones")->required();
    fe->add_option("--residual", opt.residual, "basket residual sum, e.g. -5/3")->required();
    auto* eq = add_command("equivalent", "unimodular equivalence of two polygons", true);
    eq->add_option("second", opt.second_input, "second polygon JSON")->required();
    eq->add_option("--group", opt.group, "equivalence group (default GL)")
        ->check(CLI::IsMember({"SL", "GL"}));
    auto* en = add_command("enumerate", "Fano polygons in a coordinate box", false);
    en->add_option("--bound", opt.bound, "coordinate bound (default 3)");
    add_command("complex3", "block complex of a 3d Fano polytope", true);
    auto* ck = add_command("check", "verify the structural identities", false);
    ck->add_option("input", opt.input, "optional polygon JSON; otherwise corpus");
    ck->add_option("--bound", opt.bound, "corpus bound (default 3)");

    for (CLI::App* cmd : commands) cmd->add_option("--out", opt.out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (!opt.out_path.empty()) {
            std::ofstream out = open_out(opt.out_path);
            return dispatch(command, opt, out);
        }
        return dispatch(command, opt, std::cout);
    } catch (const fanoq::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
}
