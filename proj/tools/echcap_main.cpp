// Command line front end: parses region-spec JSON documents, dispatches to
// the engine, and prints exact results as tables or JSON.

#include <echcap/embed.hpp>
#include <echcap/errors.hpp>
#include <echcap/lattice.hpp>
#include <echcap/norm.hpp>
#include <echcap/oracle.hpp>
#include <echcap/region.hpp>
#include <echcap/selftest.hpp>
#include <echcap/spec_io.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using echcap::Rational;
using json = nlohmann::json;

json read_spec(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw echcap::ParseError("cannot open spec file '" + path + "'");
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw echcap::ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string rstr(const Rational& r) { return echcap::rational_to_string(r); }

json rational_json(const Rational& r) {
    return json{{"exact", rstr(r)}, {"approx", echcap::rational_to_double(r)}};
}

void print_plot_data(const echcap::MomentRegion& region,
                     const echcap::CapacitySequence& seq) {
    std::cout << "# region vertices (closed)\n";
    const auto& verts = region.vertices();
    for (std::size_t i = 0; i <= verts.size(); ++i) {
        const auto& p = verts[i % verts.size()];
        std::cout << echcap::rational_to_double(p.x) << " "
                  << echcap::rational_to_double(p.y) << "\n";
    }
    for (std::size_t k = 0; k < seq.witnesses.size(); ++k) {
        std::cout << "\n# witness loop k=" << k << "\n";
        const auto& loop = seq.witnesses[k];
        long long x = loop.base.x, y = loop.base.y;
        std::cout << x << " " << y << "\n";
        for (const auto& e : loop.edges) {
            x += e.dx;
            y += e.dy;
            std::cout << x << " " << y << "\n";
        }
    }
}

struct CapsArgs {
    std::string spec_path;
    int K = 12;
    bool as_json = false;
    bool witness = false;
    bool exact_count = false;
    bool parallel = false;
    bool plot_data = false;
};

int cmd_caps(const CapsArgs& args) {
    const json spec = read_spec(args.spec_path);
    const auto region = echcap::resolve_region_spec(spec).require_convex();
    echcap::CapacityOptions opts;
    opts.exact_count = args.exact_count;
    opts.parallel = args.parallel;
    const auto seq = echcap::capacities(region, args.K, opts);

    if (args.plot_data) {
        print_plot_data(region, seq);
        return 0;
    }
    if (args.as_json) {
        json out;
        out["k_max"] = args.K;
        json values = json::array();
        for (const auto& v : seq.values) values.push_back(rstr(v));
        out["values"] = std::move(values);
        json approx = json::array();
        for (const auto& v : seq.values) approx.push_back(echcap::rational_to_double(v));
        out["values_approx"] = std::move(approx);
        if (args.witness) {
            json wits = json::array();
            for (std::size_t k = 0; k < seq.witnesses.size(); ++k) {
                wits.push_back(echcap::loop_to_json(seq.witnesses[k], seq.values[k]));
            }
            out["witnesses"] = std::move(wits);
        }
        if (seq.exact_count_values) {
            json exact = json::array();
            for (const auto& v : *seq.exact_count_values) exact.push_back(rstr(v));
            out["exact_count_values"] = std::move(exact);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "k\tc_k\n";
    for (std::size_t k = 0; k < seq.values.size(); ++k) {
        std::cout << k << "\t" << rstr(seq.values[k]);
        if (seq.exact_count_values) {
            std::cout << "\t(exact-count: " << rstr((*seq.exact_count_values)[k]) << ")";
        }
        std::cout << "\n";
        if (args.witness) {
            std::cout << "  witness: " << echcap::loop_to_json(seq.witnesses[k], seq.values[k]).dump()
                      << "\n";
        }
    }
    return 0;
}

int cmd_criterion(const std::string& spec_path, bool as_json) {
    const json spec = read_spec(spec_path);
    const auto resolved = echcap::resolve_region_spec(spec);
    const auto report = echcap::criterion_check(resolved.polygon);

    auto axis_json = [](const echcap::AxisVerdict& v) {
        json out;
        out["touched"] = v.touched;
        out["pass"] = v.pass;
        if (v.witness) out["witness_chord"] = rstr(*v.witness);
        return out;
    };
    if (as_json) {
        json out;
        out["axis1"] = axis_json(report.axis1);
        out["axis2"] = axis_json(report.axis2);
        out["pass"] = report.pass();
        std::cout << out.dump(2) << "\n";
    } else {
        auto line = [](const char* name, const echcap::AxisVerdict& v) {
            std::cout << name << ": "
                      << (!v.touched ? "not touched"
                                     : (v.pass ? "pass" : "FAIL at " + rstr(*v.witness)))
                      << "\n";
        };
        line("axis 1 (rho1 = 0)", report.axis1);
        line("axis 2 (rho2 = 0)", report.axis2);
        std::cout << (report.pass() ? "criterion: pass" : "criterion: fail") << "\n";
    }
    return report.pass() ? 0 : 0;
}

int cmd_kernel(const std::string& spec_path, bool as_json) {
    const json spec = read_spec(spec_path);
    const auto resolved = echcap::resolve_region_spec(spec);
    const auto kernel = echcap::star_kernel(resolved.polygon);
    if (as_json) {
        json out;
        out["empty"] = !kernel.has_value();
        if (kernel) out["vertices"] = echcap::vertices_to_json(kernel->vertices());
        std::cout << out.dump(2) << "\n";
    } else if (!kernel) {
        std::cout << "kernel: empty\n";
    } else {
        std::cout << "kernel vertices:\n";
        for (const auto& p : kernel->vertices()) {
            std::cout << "  (" << rstr(p.x) << ", " << rstr(p.y) << ")\n";
        }
    }
    return 0;
}

int cmd_norm(const std::string& spec_path, long long dx, long long dy,
             const std::string& origin_x, const std::string& origin_y, bool as_json) {
    const json spec = read_spec(spec_path);
    const auto region = echcap::resolve_region_spec(spec).require_convex();
    const echcap::Point origin{echcap::parse_rational(origin_x), echcap::parse_rational(origin_y)};
    const echcap::SupportNorm norm(region, origin);
    const echcap::LatticeVector v{dx, dy};
    const Rational value = norm.ell(v);
    const std::size_t vertex = norm.classify_direction(v);
    if (as_json) {
        json out;
        out["vector"] = json::array({dx, dy});
        out["ell"] = rstr(value);
        out["support_vertex_index"] = vertex;
        out["support_vertex"] = echcap::point_to_json(region.vertices()[vertex]);
        std::cout << out.dump(2) << "\n";
    } else {
        const auto& p = region.vertices()[vertex];
        std::cout << "ell((" << dx << ", " << dy << ")) = " << rstr(value)
                  << "  [support vertex " << vertex << " = (" << rstr(p.x) << ", " << rstr(p.y)
                  << ")]\n";
    }
    return 0;
}

int cmd_obstruct(const std::string& src_path, const std::string& tgt_path, int K, bool as_json,
                 bool parallel) {
    const auto src = echcap::resolve_region_spec(read_spec(src_path)).require_convex();
    const auto tgt = echcap::resolve_region_spec(read_spec(tgt_path)).require_convex();
    echcap::CapacityOptions opts;
    opts.parallel = parallel;
    const auto report = echcap::obstruct(src, tgt, K, opts);

    if (as_json) {
        json out;
        out["source_volume"] = rational_json(report.source_volume);
        out["target_volume"] = rational_json(report.target_volume);
        out["volume_ok"] = report.volume_ok;
        out["capacity_ok"] = report.capacity_ok;
        if (report.first_violating_k) out["first_violating_k"] = *report.first_violating_k;
        json per_k = json::array();
        for (int k = 0; k <= report.K; ++k) {
            per_k.push_back(json{{"k", k},
                                 {"source", rstr(report.source_caps[static_cast<std::size_t>(k)])},
                                 {"target", rstr(report.target_caps[static_cast<std::size_t>(k)])}});
        }
        out["per_k"] = std::move(per_k);
        out["verdict"] = report.obstructed() ? "obstructed" : "not-obstructed-up-to-K";
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "volume: " << rstr(report.source_volume) << " vs "
                  << rstr(report.target_volume) << (report.volume_ok ? " (ok)" : " (VIOLATED)")
                  << "\n";
        std::cout << "k\tc_k(source)\tc_k(target)\n";
        for (int k = 0; k <= report.K; ++k) {
            std::cout << k << "\t" << rstr(report.source_caps[static_cast<std::size_t>(k)]) << "\t"
                      << rstr(report.target_caps[static_cast<std::size_t>(k)]) << "\n";
        }
        if (report.obstructed()) {
            std::cout << "verdict: obstructed";
            if (report.first_violating_k) std::cout << " (first k = " << *report.first_violating_k << ")";
            std::cout << "\n";
        } else {
            std::cout << "verdict: not obstructed up to K = " << report.K << "\n";
        }
    }
    return 0;
}

int cmd_ball_bound(const std::string& spec_path, int K, bool as_json, bool parallel) {
    const auto region = echcap::resolve_region_spec(read_spec(spec_path)).require_convex();
    echcap::CapacityOptions opts;
    opts.parallel = parallel;
    const auto bound = echcap::min_ball_bounds(region, K, opts);
    if (as_json) {
        json out;
        out["lower"] = rational_json(bound.lower);
        out["lower_witness_k"] = bound.lower_witness_k;
        out["upper"] = rational_json(bound.upper);
        out["sharp"] = bound.sharp;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "capacity lower bound: " << rstr(bound.lower) << " (witness k = "
                  << bound.lower_witness_k << ")\n";
        std::cout << "inclusion upper bound: " << rstr(bound.upper) << "\n";
        std::cout << "sharp: " << (bound.sharp ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_oracle(const std::string& which, const std::vector<std::string>& params, int K,
               bool as_json) {
    json out;
    if (which == "ellipsoid" || which == "polydisk") {
        if (params.size() != 2) {
            throw echcap::ParseError("oracle " + which + " expects parameters a b");
        }
        const Rational a = echcap::parse_rational(params[0]);
        const Rational b = echcap::parse_rational(params[1]);
        const auto seq = which == "ellipsoid" ? echcap::ellipsoid_sequence(a, b, K)
                                              : echcap::polydisk_sequence(a, b, K);
        if (as_json) {
            json values = json::array();
            for (const auto& v : seq) values.push_back(rstr(v));
            out["kind"] = which;
            out["values"] = std::move(values);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "k\tc_k\n";
            for (std::size_t k = 0; k < seq.size(); ++k) {
                std::cout << k << "\t" << rstr(seq[k]) << "\n";
            }
        }
        return 0;
    }
    if (which == "intersection-r") {
        if (params.size() != 4) {
            throw echcap::ParseError("oracle intersection-r expects parameters a b c d");
        }
        const echcap::IntersectionParams p{
            echcap::parse_rational(params[0]), echcap::parse_rational(params[1]),
            echcap::parse_rational(params[2]), echcap::parse_rational(params[3])};
        const auto r = echcap::intersection_R(p);
        if (as_json) {
            out["R"] = rational_json(r.R);
            out["corner"] = echcap::point_to_json(r.corner);
            out["hypothesis_met"] = r.hypothesis_met;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "R = " << rstr(r.R) << "\n";
            std::cout << "corner = (" << rstr(r.corner.x) << ", " << rstr(r.corner.y) << ")\n";
            std::cout << "hypothesis 2a, 2d >= R: " << (r.hypothesis_met ? "met" : "NOT met")
                      << "\n";
            if (!r.hypothesis_met) {
                std::cout << "note: c_2 = R is only asserted when the hypothesis holds;\n"
                          << "      compute c_2 with `caps` to compare.\n";
            }
        }
        return 0;
    }
    throw echcap::ParseError("unknown oracle '" + which + "'");
}

int cmd_selftest() {
    const auto result = echcap::run_selftest();
    for (const auto& check : result.checks) {
        std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
        if (!check.detail.empty()) std::cout << " — " << check.detail;
        std::cout << "\n";
    }
    if (!result.all_pass()) {
        std::cout << "selftest: FAIL\n";
        return 5;
    }
    std::cout << "selftest: all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ECH capacities of 4-dimensional toric domains, in exact rational arithmetic"};
    app.require_subcommand(1);

    CapsArgs caps_args;
    auto* caps = app.add_subcommand("caps", "Capacity sequence c_0..c_K of a convex region");
    caps->add_option("spec", caps_args.spec_path, "Region-spec JSON file, or '-' for stdin");
    caps->add_option("--k", caps_args.K, "Largest capacity index")->check(CLI::NonNegativeNumber);
    caps->add_flag("--json", caps_args.as_json, "JSON output");
    caps->add_flag("--witness", caps_args.witness, "Include minimizing loops");
    caps->add_flag("--exact-count", caps_args.exact_count,
                   "Also minimize over loops enclosing exactly k+1 points");
    caps->add_flag("--parallel", caps_args.parallel, "Parallel enumeration");
    caps->add_flag("--plot-data", caps_args.plot_data,
                   "Emit region and witness coordinates for external plotting");

    std::string criterion_path;
    bool criterion_json = false;
    auto* criterion = app.add_subcommand("criterion", "Disk-degenerate criterion check");
    criterion->add_option("spec", criterion_path, "Region-spec JSON file, or '-' for stdin");
    criterion->add_flag("--json", criterion_json, "JSON output");

    std::string kernel_path;
    bool kernel_json = false;
    auto* kernel = app.add_subcommand("kernel", "Kernel (set of star-centers) of a polygon");
    kernel->add_option("spec", kernel_path, "Region-spec JSON file, or '-' for stdin");
    kernel->add_flag("--json", kernel_json, "JSON output");

    std::string norm_path, norm_ox = "0", norm_oy = "0";
    long long norm_dx = 0, norm_dy = 0;
    bool norm_json = false;
    auto* norm = app.add_subcommand("norm", "Evaluate the support norm ell on a lattice vector");
    norm->add_option("dx", norm_dx, "Vector x component")->required();
    norm->add_option("dy", norm_dy, "Vector y component")->required();
    norm->add_option("--spec", norm_path, "Region-spec JSON file, or '-' for stdin");
    norm->add_option("--origin-x", norm_ox, "Origin x (rational string)");
    norm->add_option("--origin-y", norm_oy, "Origin y (rational string)");
    norm->add_flag("--json", norm_json, "JSON output");

    std::string obstruct_src, obstruct_tgt;
    int obstruct_k = 12;
    bool obstruct_json = false, obstruct_parallel = false;
    auto* obstruct = app.add_subcommand("obstruct", "Embedding obstruction report source -> target");
    obstruct->add_option("source", obstruct_src, "Source region-spec JSON file")->required();
    obstruct->add_option("target", obstruct_tgt, "Target region-spec JSON file")->required();
    obstruct->add_option("--k", obstruct_k, "Largest capacity index")->check(CLI::NonNegativeNumber);
    obstruct->add_flag("--json", obstruct_json, "JSON output");
    obstruct->add_flag("--parallel", obstruct_parallel, "Parallel enumeration");

    std::string ball_path;
    int ball_k = 12;
    bool ball_json = false, ball_parallel = false;
    auto* ball = app.add_subcommand("ball-bound", "Bounds on the smallest ball admitting the region");
    ball->add_option("spec", ball_path, "Region-spec JSON file, or '-' for stdin");
    ball->add_option("--k", ball_k, "Largest capacity index")->check(CLI::PositiveNumber);
    ball->add_flag("--json", ball_json, "JSON output");
    ball->add_flag("--parallel", ball_parallel, "Parallel enumeration");

    std::string oracle_kind;
    std::vector<std::string> oracle_params;
    int oracle_k = 12;
    bool oracle_json = false;
    auto* oracle = app.add_subcommand("oracle", "Closed-form reference sequences and formulas");
    oracle->add_option("kind", oracle_kind, "ellipsoid | polydisk | intersection-r")->required();
    oracle->add_option("params", oracle_params, "Rational parameters");
    oracle->add_option("--k", oracle_k, "Largest capacity index")->check(CLI::NonNegativeNumber);
    oracle->add_flag("--json", oracle_json, "JSON output");

    auto* selftest = app.add_subcommand("selftest", "Run the built-in reproduction checks");
    (void)selftest;

    try {
        app.parse(argc, argv);
        if (caps->parsed()) return cmd_caps(caps_args);
        if (criterion->parsed()) return cmd_criterion(criterion_path, criterion_json);
        if (kernel->parsed()) return cmd_kernel(kernel_path, kernel_json);
        if (norm->parsed()) {
            return cmd_norm(norm_path, norm_dx, norm_dy, norm_ox, norm_oy, norm_json);
        }
        if (obstruct->parsed()) {
            return cmd_obstruct(obstruct_src, obstruct_tgt, obstruct_k, obstruct_json,
                                obstruct_parallel);
        }
        if (ball->parsed()) return cmd_ball_bound(ball_path, ball_k, ball_json, ball_parallel);
        if (oracle->parsed()) return cmd_oracle(oracle_kind, oracle_params, oracle_k, oracle_json);
        if (selftest->parsed()) return cmd_selftest();
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const echcap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
