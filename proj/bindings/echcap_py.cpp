// Python bindings. All structured inputs and outputs are JSON strings; the
// pure-python package layer converts them to and from dicts.

#include <echcap/embed.hpp>
#include <echcap/errors.hpp>
#include <echcap/lattice.hpp>
#include <echcap/norm.hpp>
#include <echcap/oracle.hpp>
#include <echcap/region.hpp>
#include <echcap/selftest.hpp>
#include <echcap/spec_io.hpp>

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>

#include <string>

namespace py = pybind11;
using json = nlohmann::json;
using namespace echcap;

namespace {

json parse_spec(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

MomentRegion region_from(const std::string& spec) {
    return resolve_region_spec(parse_spec(spec)).require_convex();
}

std::string rstr(const Rational& r) { return rational_to_string(r); }

json sequence_to_json(const CapacitySequence& seq) {
    json out;
    json values = json::array();
    for (const auto& v : seq.values) values.push_back(rstr(v));
    out["values"] = std::move(values);
    json wits = json::array();
    for (std::size_t k = 0; k < seq.witnesses.size(); ++k) {
        wits.push_back(loop_to_json(seq.witnesses[k], seq.values[k]));
    }
    out["witnesses"] = std::move(wits);
    if (seq.exact_count_values) {
        json exact = json::array();
        for (const auto& v : *seq.exact_count_values) exact.push_back(rstr(v));
        out["exact_count_values"] = std::move(exact);
    }
    return out;
}

std::string py_normalize_spec(const std::string& spec) {
    return normalize_region_spec(parse_spec(spec)).dump();
}

std::string py_region_vertices(const std::string& spec) {
    return vertices_to_json(resolve_region_spec(parse_spec(spec)).polygon.vertices()).dump();
}

std::string py_area(const std::string& spec) {
    return rstr(area(resolve_region_spec(parse_spec(spec)).polygon));
}

std::string py_enclosing_ball_radius(const std::string& spec) {
    return rstr(enclosing_ball_radius(region_from(spec)));
}

std::string py_capacities(const std::string& spec, int k, bool exact_count, bool parallel) {
    CapacityOptions opts;
    opts.exact_count = exact_count;
    opts.parallel = parallel;
    return sequence_to_json(capacities(region_from(spec), k, opts)).dump();
}

std::string py_criterion(const std::string& spec) {
    const auto report = criterion_check(resolve_region_spec(parse_spec(spec)).polygon);
    auto axis_json = [](const AxisVerdict& v) {
        json out;
        out["touched"] = v.touched;
        out["pass"] = v.pass;
        if (v.witness) out["witness_chord"] = rational_to_string(*v.witness);
        return out;
    };
    json out;
    out["axis1"] = axis_json(report.axis1);
    out["axis2"] = axis_json(report.axis2);
    out["pass"] = report.pass();
    return out.dump();
}

std::string py_kernel(const std::string& spec) {
    const auto kernel = star_kernel(resolve_region_spec(parse_spec(spec)).polygon);
    json out;
    out["empty"] = !kernel.has_value();
    if (kernel) out["vertices"] = vertices_to_json(kernel->vertices());
    return out.dump();
}

std::string py_ell(const std::string& spec, std::int64_t dx, std::int64_t dy,
                   const std::string& origin_x, const std::string& origin_y) {
    const SupportNorm norm(region_from(spec),
                           {parse_rational(origin_x), parse_rational(origin_y)});
    return rstr(norm.ell({dx, dy}));
}

std::string py_obstruct(const std::string& src, const std::string& tgt, int k, bool parallel) {
    CapacityOptions opts;
    opts.parallel = parallel;
    const auto report = obstruct(region_from(src), region_from(tgt), k, opts);
    json out;
    out["source_volume"] = rstr(report.source_volume);
    out["target_volume"] = rstr(report.target_volume);
    out["volume_ok"] = report.volume_ok;
    out["capacity_ok"] = report.capacity_ok;
    if (report.first_violating_k) out["first_violating_k"] = *report.first_violating_k;
    json src_caps = json::array(), tgt_caps = json::array();
    for (const auto& v : report.source_caps) src_caps.push_back(rstr(v));
    for (const auto& v : report.target_caps) tgt_caps.push_back(rstr(v));
    out["source_caps"] = std::move(src_caps);
    out["target_caps"] = std::move(tgt_caps);
    out["obstructed"] = report.obstructed();
    return out.dump();
}

std::string py_ball_bound(const std::string& spec, int k, bool parallel) {
    CapacityOptions opts;
    opts.parallel = parallel;
    const auto bound = min_ball_bounds(region_from(spec), k, opts);
    json out;
    out["lower"] = rstr(bound.lower);
    out["lower_witness_k"] = bound.lower_witness_k;
    out["upper"] = rstr(bound.upper);
    out["sharp"] = bound.sharp;
    return out.dump();
}

std::string py_ellipsoid_sequence(const std::string& a, const std::string& b, int k) {
    json out = json::array();
    for (const auto& v : ellipsoid_sequence(parse_rational(a), parse_rational(b), k)) {
        out.push_back(rstr(v));
    }
    return out.dump();
}

std::string py_polydisk_sequence(const std::string& a, const std::string& b, int k) {
    json out = json::array();
    for (const auto& v : polydisk_sequence(parse_rational(a), parse_rational(b), k)) {
        out.push_back(rstr(v));
    }
    return out.dump();
}

std::string py_intersection_r(const std::string& a, const std::string& b, const std::string& c,
                              const std::string& d) {
    const auto r = intersection_R(
        {parse_rational(a), parse_rational(b), parse_rational(c), parse_rational(d)});
    json out;
    out["R"] = rstr(r.R);
    out["corner"] = point_to_json(r.corner);
    out["hypothesis_met"] = r.hypothesis_met;
    return out.dump();
}

std::string py_selftest() {
    const auto result = run_selftest();
    json out;
    json checks = json::array();
    for (const auto& c : result.checks) {
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    out["checks"] = std::move(checks);
    out["pass"] = result.all_pass();
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_echcap, m) {
    m.doc() = "ECH capacities of 4-dimensional toric domains (exact rational arithmetic)";

    py::register_exception<ParseError>(m, "SpecParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    m.def("normalize_spec", &py_normalize_spec, py::arg("spec"));
    m.def("region_vertices", &py_region_vertices, py::arg("spec"));
    m.def("area", &py_area, py::arg("spec"));
    m.def("enclosing_ball_radius", &py_enclosing_ball_radius, py::arg("spec"));
    m.def("capacities", &py_capacities, py::arg("spec"), py::arg("k") = 12,
          py::arg("exact_count") = false, py::arg("parallel") = false,
          py::call_guard<py::gil_scoped_release>());
    m.def("criterion", &py_criterion, py::arg("spec"));
    m.def("kernel", &py_kernel, py::arg("spec"));
    m.def("ell", &py_ell, py::arg("spec"), py::arg("dx"), py::arg("dy"),
          py::arg("origin_x") = "0", py::arg("origin_y") = "0");
    m.def("obstruct", &py_obstruct, py::arg("source"), py::arg("target"), py::arg("k") = 12,
          py::arg("parallel") = false, py::call_guard<py::gil_scoped_release>());
    m.def("ball_bound", &py_ball_bound, py::arg("spec"), py::arg("k") = 12,
          py::arg("parallel") = false, py::call_guard<py::gil_scoped_release>());
    m.def("ellipsoid_sequence", &py_ellipsoid_sequence, py::arg("a"), py::arg("b"),
          py::arg("k") = 12);
    m.def("polydisk_sequence", &py_polydisk_sequence, py::arg("a"), py::arg("b"),
          py::arg("k") = 12);
    m.def("intersection_r", &py_intersection_r, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("d"));
    m.def("selftest", &py_selftest, py::call_guard<py::gil_scoped_release>());
}
