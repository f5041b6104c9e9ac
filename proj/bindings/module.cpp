// Python bindings for the exact butterfly-configuration kernel.
#include "butterfly/config.hpp"
#include "butterfly/explorer.hpp"
#include "butterfly/svg.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace butterfly;

namespace {

py::object big_int(const Integer& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::object cast_trace(TraceResult result) {
    return std::visit([](auto&& v) -> py::object { return py::cast(std::move(v)); },
                      std::move(result));
}

std::vector<SymmetryKind> set_items(const SymmetrySet& s) {
    return s.items();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact butterfly-theorem configurations on taxicab and Euclidean circles";

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const std::string& text) { return parse_rational(text); }))
        .def(py::init<long long>())
        .def(py::init([](long long num, long long den) {
                 return Rational(Integer(num), Integer(den));
             }),
             py::arg("numerator"), py::arg("denominator"))
        .def_property_readonly("numerator", [](const Rational& r) { return big_int(r.numerator()); })
        .def_property_readonly("denominator",
                               [](const Rational& r) { return big_int(r.denominator()); })
        .def("is_integer", &Rational::is_integer)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.str())); });
    py::implicitly_convertible<py::str, Rational>();
    py::implicitly_convertible<py::int_, Rational>();

    py::class_<Point>(m, "Point")
        .def(py::init<Rational, Rational>(), py::arg("x"), py::arg("y"))
        .def_readonly("x", &Point::x)
        .def_readonly("y", &Point::y)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__str__", [](const Point& p) { return to_string(p); })
        .def("__repr__", [](const Point& p) { return "Point" + to_string(p); });

    m.def("parse_rational", &parse_rational, py::arg("text"));
    m.def("taxicab_distance", &taxicab_distance, py::arg("p"), py::arg("q"));
    m.def("euclid_sq_distance", &euclid_sq_distance, py::arg("p"), py::arg("q"));
    m.def("midpoint", &midpoint, py::arg("p"), py::arg("q"));
    m.def("collinear", &collinear, py::arg("p"), py::arg("q"), py::arg("r"));

    py::class_<TaxicabCircle>(m, "TaxicabCircle")
        .def(py::init<Point, Rational>(), py::arg("center"), py::arg("radius"))
        .def_readonly("center", &TaxicabCircle::center)
        .def_readonly("radius", &TaxicabCircle::radius)
        .def("east", &TaxicabCircle::east)
        .def("north", &TaxicabCircle::north)
        .def("west", &TaxicabCircle::west)
        .def("south", &TaxicabCircle::south);

    py::class_<EuclideanCircle>(m, "EuclideanCircle")
        .def(py::init<Point, Rational>(), py::arg("center"), py::arg("radius"))
        .def_readonly("center", &EuclideanCircle::center)
        .def_readonly("radius", &EuclideanCircle::radius);

    m.def("on_taxicab_circle", &on_taxicab_circle);
    m.def("on_euclidean_circle", &on_euclidean_circle);
    m.def("strictly_inside_taxicab", &strictly_inside_taxicab);
    m.def("strictly_inside_euclidean", &strictly_inside_euclidean);
    m.def("chord_second_point_taxicab", &chord_second_point_taxicab, py::arg("circle"),
          py::arg("a"), py::arg("through"));
    m.def("chord_second_point_euclid", &chord_second_point_euclid, py::arg("circle"),
          py::arg("a"), py::arg("through"));
    m.def("taxicab_circumference", &taxicab_circumference);
    m.def(
        "boundary_point",
        [](const TaxicabCircle& c, const Rational& t) { return boundary_point(c, t); },
        py::arg("circle"), py::arg("t"));
    m.def(
        "boundary_point",
        [](const EuclideanCircle& c, const Rational& t) { return boundary_point(c, t); },
        py::arg("circle"), py::arg("t"));

    py::enum_<SymmetryKind>(m, "SymmetryKind")
        .value("REFLECT_VERTICAL", SymmetryKind::ReflectVertical)
        .value("REFLECT_HORIZONTAL", SymmetryKind::ReflectHorizontal)
        .value("REFLECT_DIAGONAL", SymmetryKind::ReflectDiagonal)
        .value("REFLECT_ANTIDIAGONAL", SymmetryKind::ReflectAntidiagonal)
        .value("CENTRAL", SymmetryKind::Central);

    m.def("symmetry_image", &symmetry_image, py::arg("circle"), py::arg("kind"), py::arg("p"));
    m.def(
        "symmetries_between",
        [](const TaxicabCircle& c, const Point& u, const Point& v) {
            return symmetries_between(c, u, v).items();
        },
        py::arg("circle"), py::arg("u"), py::arg("v"));

    py::class_<Chord>(m, "Chord")
        .def(py::init<Point, Point>())
        .def_readonly("a", &Chord::a)
        .def_readonly("b", &Chord::b)
        .def(py::self == py::self)
        .def("__repr__", [](const Chord& c) {
            return "Chord(" + to_string(c.a) + ", " + to_string(c.b) + ")";
        });

    py::enum_<EdgePairKind>(m, "EdgePairKind")
        .value("NW_SE", EdgePairKind::NwSe)
        .value("NE_SW", EdgePairKind::NeSw);

    py::class_<EdgePairFamily>(m, "EdgePairFamily")
        .def_readonly("pair", &EdgePairFamily::pair)
        .def_readonly("lo", &EdgePairFamily::lo)
        .def_readonly("hi", &EdgePairFamily::hi)
        .def("chord_at", &EdgePairFamily::chord_at, py::arg("t"));

    py::class_<ChordFamily>(m, "ChordFamily")
        .def_readonly("all_diameters", &ChordFamily::all_diameters)
        .def_readonly("isolated", &ChordFamily::isolated)
        .def_readonly("families", &ChordFamily::families)
        .def("contains", &ChordFamily::contains, py::arg("circle"), py::arg("chord"));

    m.def("chords_with_midpoint", &chords_with_midpoint, py::arg("circle"), py::arg("m"));

    py::class_<ButterflyProblem>(m, "ButterflyProblem")
        .def(py::init([](const TaxicabCircle& c, Point p, Point q, Point a, Point cc) {
                 return ButterflyProblem{c, std::move(p), std::move(q), std::move(a),
                                         std::move(cc)};
             }),
             py::arg("circle"), py::arg("P"), py::arg("Q"), py::arg("A"), py::arg("C"))
        .def(py::init([](const EuclideanCircle& c, Point p, Point q, Point a, Point cc) {
                 return ButterflyProblem{c, std::move(p), std::move(q), std::move(a),
                                         std::move(cc)};
             }),
             py::arg("circle"), py::arg("P"), py::arg("Q"), py::arg("A"), py::arg("C"))
        .def_readonly("P", &ButterflyProblem::P)
        .def_readonly("Q", &ButterflyProblem::Q)
        .def_readonly("A", &ButterflyProblem::A)
        .def_readonly("C", &ButterflyProblem::C)
        .def_property_readonly("is_taxicab",
                               [](const ButterflyProblem& p) {
                                   return geometry_is_taxicab(p.geometry);
                               })
        .def_property_readonly("center",
                               [](const ButterflyProblem& p) {
                                   return geometry_center(p.geometry);
                               })
        .def_property_readonly("radius", [](const ButterflyProblem& p) {
            return geometry_radius(p.geometry);
        });

    py::enum_<ViolationCode>(m, "ViolationCode")
        .value("POINT_OFF_CIRCLE", ViolationCode::PointOffCircle)
        .value("ENDPOINTS_COINCIDE", ViolationCode::EndpointsCoincide)
        .value("SHARED_ENDPOINT", ViolationCode::SharedEndpoint)
        .value("MIDPOINT_NOT_INTERIOR", ViolationCode::MidpointNotInterior)
        .value("WING_CHORDS_COINCIDE", ViolationCode::WingChordsCoincide);

    py::class_<Violation>(m, "Violation")
        .def_readonly("code", &Violation::code)
        .def_readonly("detail", &Violation::detail)
        .def("__repr__", [](const Violation& v) { return "Violation(" + v.detail + ")"; });

    m.def("validate_problem", &validate_problem, py::arg("problem"));

    py::class_<ButterflyTrace>(m, "ButterflyTrace")
        .def_readonly("M", &ButterflyTrace::M)
        .def_readonly("B", &ButterflyTrace::B)
        .def_readonly("D", &ButterflyTrace::D)
        .def_readonly("X", &ButterflyTrace::X)
        .def_readonly("Y", &ButterflyTrace::Y)
        .def_readonly("midXY", &ButterflyTrace::midXY)
        .def_readonly("deviation", &ButterflyTrace::deviation)
        .def_readonly("holds", &ButterflyTrace::holds);

    py::enum_<DegenerateKind>(m, "DegenerateKind")
        .value("WING_AD_PARALLEL_TO_PQ", DegenerateKind::WingAdParallelToPq)
        .value("WING_CB_PARALLEL_TO_PQ", DegenerateKind::WingCbParallelToPq)
        .value("VALIDATION_FAILURE", DegenerateKind::ValidationFailure);

    py::class_<DegenerateReason>(m, "DegenerateReason")
        .def_readonly("kind", &DegenerateReason::kind)
        .def_readonly("detail", &DegenerateReason::detail);

    m.def(
        "trace_butterfly",
        [](const ButterflyProblem& p) { return cast_trace(trace_butterfly(p)); },
        py::arg("problem"),
        "Returns a ButterflyTrace, or a DegenerateReason when the configuration degenerates");

    py::class_<HypothesisReport>(m, "HypothesisReport")
        .def_property_readonly("sym_ac",
                               [](const HypothesisReport& r) { return set_items(r.sym_ac); })
        .def_property_readonly("sym_bd",
                               [](const HypothesisReport& r) { return set_items(r.sym_bd); })
        .def_property_readonly(
            "common_reflections",
            [](const HypothesisReport& r) { return set_items(r.common_reflections); })
        .def_property_readonly(
            "alternate_axis_witnesses",
            [](const HypothesisReport& r) { return set_items(r.alternate_axis_witnesses); })
        .def_property_readonly("pq_stable",
                               [](const HypothesisReport& r) { return set_items(r.pq_stable); })
        .def_readonly("m_is_center", &HypothesisReport::m_is_center)
        .def_readonly("primary_satisfied", &HypothesisReport::primary_satisfied)
        .def_readonly("alternate_satisfied", &HypothesisReport::alternate_satisfied)
        .def_readonly("fully_symmetric", &HypothesisReport::fully_symmetric);

    m.def("hypothesis_report", &hypothesis_report, py::arg("problem"), py::arg("trace"));

    py::enum_<Outcome>(m, "Outcome")
        .value("DEGENERATE", Outcome::Degenerate)
        .value("HOLDS_FULL_SYMMETRY", Outcome::HoldsFullSymmetry)
        .value("HOLDS_CENTER", Outcome::HoldsCenter)
        .value("HOLDS_UNEXPLAINED", Outcome::HoldsUnexplained)
        .value("FAILS_NO_HYPOTHESIS", Outcome::FailsNoHypothesis)
        .value("PAPER_HYPOTHESIS_BUT_FAILS", Outcome::PaperHypothesisButFails);

    m.def(
        "classify_outcome",
        [](const HypothesisReport& r, const ButterflyTrace& t) {
            return classify_outcome(r, TraceResult(t));
        },
        py::arg("report"), py::arg("trace"));
    m.def(
        "classify_outcome",
        [](const HypothesisReport& r, const DegenerateReason& d) {
            return classify_outcome(r, TraceResult(d));
        },
        py::arg("report"), py::arg("reason"));

    py::enum_<GeometryKind>(m, "GeometryKind")
        .value("TAXICAB", GeometryKind::Taxicab)
        .value("EUCLID", GeometryKind::Euclid);

    py::enum_<SampleMode>(m, "SampleMode")
        .value("RANDOM", SampleMode::Random)
        .value("AXIS_SYMMETRIC", SampleMode::AxisSymmetric)
        .value("CENTER", SampleMode::Center)
        .value("PAPER_HYPOTHESIS_ONLY_DIAGONAL", SampleMode::PaperHypothesisOnlyDiagonal);

    py::class_<SampleSpec>(m, "SampleSpec")
        .def(py::init<>())
        .def_readwrite("geometry", &SampleSpec::geometry)
        .def_readwrite("mode", &SampleSpec::mode)
        .def_readwrite("axis", &SampleSpec::axis)
        .def_readwrite("count", &SampleSpec::count)
        .def_readwrite("seed", &SampleSpec::seed)
        .def_readwrite("max_denominator", &SampleSpec::max_denominator)
        .def_readwrite("center", &SampleSpec::center)
        .def_readwrite("radius", &SampleSpec::radius);

    m.def("table1_corpus", &table1_corpus,
          "The five published failure rows on the radius-10 taxicab circle");
    m.def(
        "sample_problem",
        [](const SampleSpec& spec, std::uint64_t index) {
            SplitMix64 rng = sample_stream(spec.seed, index);
            return generate_problem(spec, rng);
        },
        py::arg("spec"), py::arg("index"),
        "The problem that campaign sample `index` of this spec would draw");

    py::class_<CampaignStats>(m, "CampaignStats")
        .def_readonly("spec", &CampaignStats::spec)
        .def("count_for", &CampaignStats::count_for, py::arg("outcome"))
        .def("exemplars_for", &CampaignStats::exemplars_for, py::arg("outcome"))
        .def_property_readonly("counts", [](const CampaignStats& s) {
            py::dict out;
            for (Outcome o : all_outcomes)
                out[py::cast(o)] = s.count_for(o);
            return out;
        });

    m.def("run_campaign", &run_campaign, py::arg("spec"), py::arg("exemplar_cap") = 10);

    m.def("decimal4", &decimal4, py::arg("value"));
    m.def(
        "render_svg",
        [](const ButterflyProblem& p, const ButterflyTrace& t, int size_px) {
            return render_svg(p, TraceResult(t), RenderOptions{size_px});
        },
        py::arg("problem"), py::arg("trace"), py::arg("size_px") = 640);
    m.def(
        "render_svg",
        [](const ButterflyProblem& p, const DegenerateReason& d, int size_px) {
            return render_svg(p, TraceResult(d), RenderOptions{size_px});
        },
        py::arg("problem"), py::arg("reason"), py::arg("size_px") = 640);

    m.def("parse_config_text", &parse_config_text, py::arg("text"));
    m.def("to_config", &to_config, py::arg("problem"));
    m.def(
        "verify_report",
        [](const ButterflyProblem& p, const ButterflyTrace& t) {
            return verify_report(p, TraceResult(t));
        },
        py::arg("problem"), py::arg("trace"));
}
