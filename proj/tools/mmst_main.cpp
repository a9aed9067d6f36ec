// Command-line front end: ingestion, validation, construction and
// recognition dispatch, JSON/SVG emission, and a small benchmark table.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mmst/errors.hpp"
#include "mmst/instances.hpp"
#include "mmst/io.hpp"
#include "mmst/oracle.hpp"
#include "mmst/recognition.hpp"
#include "mmst/ummst.hpp"
#include "mmst/ummst2d.hpp"
#include "mmst/xymmst.hpp"
#include "mmst/ymmst.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;

struct BuildArgs {
    std::string input;
    std::string variant;
    std::string direction;
    std::string out;
    std::string svg;
    bool allow_degenerate = false;
};

mmst::PointSetOptions ingest_options(bool allow_degenerate) {
    mmst::PointSetOptions opts;
    opts.allow_degenerate = allow_degenerate;
    return opts;
}

void warn_if_degenerate(const mmst::RootedPointSet& ps) {
    if (const auto bad = mmst::validate_general_position(ps)) {
        std::fprintf(stderr,
                     "warning: points %u,%u,%u are collinear; results are unspecified\n",
                     (*bad)[0], (*bad)[1], (*bad)[2]);
    }
}

int run_build(const BuildArgs& args, bool use_oracle) {
    const mmst::PointSetDocument doc = mmst::load_point_set(args.input);
    const mmst::RootedPointSet ps = doc.to_point_set(ingest_options(args.allow_degenerate));
    if (args.allow_degenerate) warn_if_degenerate(ps);

    mmst::TreeDocument tree_doc;
    if (args.variant == "y") {
        const mmst::Axis axis = mmst::Axis::from_degrees(args.direction);
        const auto tree =
            use_oracle ? mmst::oracle::brute_parent_ymmst(ps, axis) : mmst::ymmst(ps, axis);
        tree_doc = mmst::make_tree_document(tree, doc, axis.slope_degrees(), std::nullopt);
    } else if (args.variant == "xy") {
        const mmst::OrthoSystem sys = mmst::OrthoSystem::from_degrees(args.direction);
        const auto tree =
            use_oracle ? mmst::oracle::brute_xymmst(ps, sys) : mmst::xymmst(ps, sys);
        tree_doc = mmst::make_tree_document(tree, doc, std::nullopt, sys.slope_degrees());
    } else if (args.variant == "uniform") {
        if (use_oracle) {
            const auto res = mmst::oracle::brute_ummst(ps);
            tree_doc =
                mmst::make_tree_document(res.tree, doc, res.axis.slope_degrees(), std::nullopt);
        } else {
            const auto res = mmst::ummst(ps);
            tree_doc =
                mmst::make_tree_document(res.tree, doc, res.axis.slope_degrees(), std::nullopt);
        }
    } else {  // uniform-2d
        if (use_oracle) {
            const auto res = mmst::oracle::brute_ummst2d(ps);
            tree_doc =
                mmst::make_tree_document(res.tree, doc, std::nullopt, res.system.slope_degrees());
        } else {
            const auto res = mmst::ummst2d(ps);
            tree_doc =
                mmst::make_tree_document(res.tree, doc, std::nullopt, res.system.slope_degrees());
        }
    }

    mmst::write_file(args.out, mmst::tree_document_json(tree_doc));
    if (!args.svg.empty()) mmst::write_file(args.svg, mmst::tree_document_svg(tree_doc));
    return kExitOk;
}

int run_recognize(const std::string& input, const std::string& variant,
                  const std::string& direction, bool allow_degenerate) {
    const mmst::GraphDocument doc = mmst::load_graph(input);
    const mmst::GeometricGraph g = doc.to_graph(ingest_options(allow_degenerate));
    if (allow_degenerate) warn_if_degenerate(g.points());

    if (variant == "y") {
        const mmst::Axis axis = mmst::Axis::from_degrees(direction);
        if (mmst::is_rooted_y_monotone(g, axis))
            std::printf("true %.10g\n", axis.slope_degrees());
        else
            std::printf("false\n");
    } else if (variant == "xy") {
        const mmst::OrthoSystem sys = mmst::OrthoSystem::from_degrees(direction);
        if (mmst::is_rooted_xy_monotone(g, sys))
            std::printf("true %.10g\n", sys.slope_degrees());
        else
            std::printf("false\n");
    } else if (variant == "uniform") {
        if (const auto axis = mmst::uniform_monotone_axis(g))
            std::printf("true %.10g\n", axis->slope_degrees());
        else
            std::printf("false\n");
    } else {
        if (const auto sys = mmst::uniform_2d_monotone_system(g))
            std::printf("true %.10g\n", sys->slope_degrees());
        else
            std::printf("false\n");
    }
    return kExitOk;
}

int run_bench(const std::vector<std::size_t>& sizes, const std::vector<std::string>& variants,
              std::uint64_t seed, int reps, bool with_time) {
    using clock = std::chrono::steady_clock;
    std::printf("%-10s %8s %16s %12s %8s\n", "variant", "n", "cost", "time_ms", "ratio");
    for (const std::string& variant : variants) {
        const bool quadratic = variant == "uniform" || variant == "uniform-2d";
        double prev_ms = -1.0;
        for (const std::size_t n : sizes) {
            mmst::instances::Params gen;
            gen.n = n;
            gen.seed = seed;
            gen.avoid_axes = variant == "xy";
            gen.certify_general_position = quadratic;
            const mmst::RootedPointSet ps = mmst::instances::make(gen);

            double best_ms = 0.0;
            double cost = 0.0;
            for (int r = 0; r < reps; ++r) {
                const auto t0 = clock::now();
                if (variant == "y") {
                    cost = mmst::ymmst(ps, mmst::Axis::from_direction(1000003, 314159)).cost();
                } else if (variant == "xy") {
                    cost = mmst::xymmst(ps, mmst::OrthoSystem::from_degrees(90.0)).cost();
                } else if (variant == "uniform") {
                    cost = mmst::ummst(ps).tree.cost();
                } else {
                    cost = mmst::ummst2d(ps).tree.cost();
                }
                const double ms =
                    std::chrono::duration<double, std::milli>(clock::now() - t0).count();
                if (r == 0 || ms < best_ms) best_ms = ms;
            }
            if (with_time) {
                if (prev_ms > 0)
                    std::printf("%-10s %8zu %16.6f %12.3f %8.2f\n", variant.c_str(), n, cost,
                                best_ms, best_ms / prev_ms);
                else
                    std::printf("%-10s %8zu %16.6f %12.3f %8s\n", variant.c_str(), n, cost,
                                best_ms, "-");
            } else {
                std::printf("%-10s %8zu %16.6f %12s %8s\n", variant.c_str(), n, cost, "-", "-");
            }
            prev_ms = best_ms;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rooted monotone minimum spanning trees"};
    app.require_subcommand(1);

    const std::vector<std::string> variants{"y", "xy", "uniform", "uniform-2d"};
    auto variant_check = CLI::IsMember(variants);

    BuildArgs build_args;
    CLI::App* build = app.add_subcommand("build", "construct a monotone minimum spanning tree");
    build->add_option("--input", build_args.input, "point set file (JSON or CSV)")->required();
    build->add_option("--variant", build_args.variant, "y | xy | uniform | uniform-2d")
        ->required()
        ->check(variant_check);
    build->add_option("--direction", build_args.direction,
                      "monotonicity direction in decimal degrees (y and xy variants)");
    build->add_option("--out", build_args.out, "output tree JSON path")->required();
    build->add_option("--svg", build_args.svg, "optional SVG rendering path");
    build->add_flag("--allow-degenerate", build_args.allow_degenerate,
                    "downgrade collinear-input errors to warnings");

    BuildArgs oracle_args;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "construct via the brute-force reference (test tooling)");
    oracle_cmd->add_option("--input", oracle_args.input)->required();
    oracle_cmd->add_option("--variant", oracle_args.variant)->required()->check(variant_check);
    oracle_cmd->add_option("--direction", oracle_args.direction);
    oracle_cmd->add_option("--out", oracle_args.out)->required();
    oracle_cmd->add_option("--svg", oracle_args.svg);
    oracle_cmd->add_flag("--allow-degenerate", oracle_args.allow_degenerate);

    std::string rec_input, rec_variant, rec_direction;
    bool rec_allow_degenerate = false;
    CLI::App* recognize = app.add_subcommand("recognize", "decide rooted monotonicity");
    recognize->add_option("--input", rec_input, "graph file (JSON)")->required();
    recognize->add_option("--variant", rec_variant)->required()->check(variant_check);
    recognize->add_option("--direction", rec_direction);
    recognize->add_flag("--allow-degenerate", rec_allow_degenerate);

    std::vector<std::size_t> bench_sizes{1024, 2048, 4096};
    std::vector<std::string> bench_variants{"y", "xy"};
    std::uint64_t bench_seed = 1;
    int bench_reps = 3;
    bool bench_no_time = false;
    CLI::App* bench = app.add_subcommand("bench", "timing table over generated instances");
    bench->add_option("--sizes", bench_sizes, "instance sizes")->delimiter(',');
    bench->add_option("--variants", bench_variants, "variants to time")
        ->delimiter(',')
        ->check(variant_check);
    bench->add_option("--seed", bench_seed, "instance seed");
    bench->add_option("--reps", bench_reps, "repetitions per case (fastest wins)");
    bench->add_flag("--no-time", bench_no_time,
                    "omit timing columns so reruns are byte-identical");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed() || oracle_cmd->parsed()) {
            const BuildArgs& args = build->parsed() ? build_args : oracle_args;
            const bool needs_direction = args.variant == "y" || args.variant == "xy";
            if (needs_direction && args.direction.empty()) {
                std::fprintf(stderr, "error: --direction is required for variant %s\n",
                             args.variant.c_str());
                return kExitValidation;
            }
            if (!needs_direction && !args.direction.empty()) {
                std::fprintf(stderr, "error: --direction is not accepted for variant %s\n",
                             args.variant.c_str());
                return kExitValidation;
            }
            return run_build(args, oracle_cmd->parsed());
        }
        if (recognize->parsed()) {
            const bool needs_direction = rec_variant == "y" || rec_variant == "xy";
            if (needs_direction && rec_direction.empty()) {
                std::fprintf(stderr, "error: --direction is required for variant %s\n",
                             rec_variant.c_str());
                return kExitValidation;
            }
            return run_recognize(rec_input, rec_variant, rec_direction, rec_allow_degenerate);
        }
        if (bench->parsed())
            return run_bench(bench_sizes, bench_variants, bench_seed, bench_reps, !bench_no_time);
    } catch (const mmst::DegeneracyError& e) {
        std::fprintf(stderr, "degenerate input: %s\n", e.what());
        return kExitValidation;
    } catch (const mmst::InvalidInputError& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return kExitValidation;
    } catch (const mmst::DisconnectedGraphError& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return kExitValidation;
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    return kExitOk;
}
