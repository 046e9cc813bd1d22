#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mdfold/ddc.hpp"
#include "mdfold/ecc.hpp"
#include "mdfold/experiments.hpp"
#include "mdfold/folding.hpp"
#include "mdfold/geometry.hpp"
#include "mdfold/pra.hpp"
#include "mdfold/shape_gallery.hpp"
#include "mdfold/sidon.hpp"

namespace py = pybind11;
using namespace mdfold;

namespace {

// Folding, or None when the walk closes early.
py::object walk(const Lattice& lattice, const Shape& shape, const std::vector<int>& delta) {
    WalkResult r = walk_folded_row(lattice, shape, Direction(delta));
    if (auto* f = std::get_if<Folding>(&r)) return py::cast(std::move(*f));
    return py::none();
}

template <class T, class F>
std::string to_text(const T& value, F write) {
    std::ostringstream out;
    write(out, value);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_mdfold, m) {
    m.doc() = "Lattice foldings of sequences into multidimensional shapes";

    py::class_<Lattice>(m, "Lattice")
        .def(py::init<IntMatrix>(), py::arg("basis"))
        .def_property_readonly("basis", &Lattice::basis)
        .def_property_readonly("hermite", &Lattice::hermite)
        .def_property_readonly("dim", &Lattice::dim)
        .def("volume", &Lattice::volume)
        .def("residue", [](const Lattice& l, const Point& p) { return l.residue(p).coords; })
        .def("contains", &Lattice::contains)
        .def("__repr__", [](const Lattice& l) { return to_text(l, write_lattice); });

    py::class_<Shape>(m, "Shape")
        .def(py::init<std::size_t, std::vector<Point>>(), py::arg("dim"), py::arg("points"))
        .def_property_readonly("points", &Shape::points)
        .def_property_readonly("dim", &Shape::dim)
        .def("__len__", &Shape::size)
        .def("__contains__", &Shape::contains)
        .def("__eq__", [](const Shape& a, const Shape& b) { return a == b; })
        .def("translated", &Shape::translated)
        .def("__repr__", [](const Shape& s) { return to_text(s, write_shape); });

    py::class_<Folding>(m, "Folding")
        .def_property_readonly("lattice", &Folding::lattice)
        .def_property_readonly("shape", &Folding::shape)
        .def_property_readonly("direction", [](const Folding& f) { return f.direction().delta(); })
        .def("__len__", &Folding::size)
        .def("order", &Folding::order)
        .def("at", &Folding::at)
        .def("index", &Folding::index);

    m.def("box_shape", &box_shape, py::arg("dims"));
    m.def("fundamental_box", &fundamental_box);
    m.def("is_tiling", &is_tiling);
    m.def("center_of", py::overload_cast<const Lattice&, const Shape&, const Point&>(&center_of));
    m.def("parse_lattice", [](const std::string& text) {
        std::istringstream in(text);
        return parse_lattice(in);
    });
    m.def("parse_shape", [](const std::string& text) {
        std::istringstream in(text);
        return parse_shape(in);
    });

    m.def("directions", [](std::size_t dim) {
        std::vector<std::vector<int>> out;
        for (const auto& d : Direction::all(dim)) out.push_back(d.delta());
        return out;
    });
    m.def("is_folding", [](const Lattice& l, const std::vector<int>& d) { return is_folding(l, Direction(d)); });
    m.def("walk", &walk, py::arg("lattice"), py::arg("shape"), py::arg("direction"),
          "Walk the folded-row; None if it misses part of the shape.");
    m.def("count_distinct_folded_rows", py::overload_cast<const Lattice&, const Shape&>(&count_distinct_folded_rows));
    m.def("morph_shape", [](const Lattice& l, const Shape& s, const std::vector<int>& d, const Point& p) {
        return morph_shape(l, s, Direction(d), p);
    });

    py::class_<B2Sequence>(m, "B2Sequence")
        .def_readonly("n", &B2Sequence::n)
        .def_readonly("elements", &B2Sequence::elements);
    m.def("bose", py::overload_cast<std::uint64_t>(&bose), py::arg("q"));
    m.def("verify_b2", &verify_b2, py::arg("n"), py::arg("elements"));

    m.def("verify_ddc", py::overload_cast<const std::vector<Point>&>(&verify_ddc), py::arg("dots"));
    m.def("fold_b2", [](const Folding& f, const B2Sequence& s) { return fold_b2(f, s).dots; });

    m.def("hexagon_lattice", &hexagon_lattice, py::arg("alpha"), py::arg("beta"));
    m.def("hexagon_shape", &hexagon_shape, py::arg("alpha"), py::arg("beta"));
    m.def("compact_tile", &compact_tile);
    m.def("raster_circle", [](const std::string& r) { return raster_circle(Rational::parse(r)); });
    m.def("raster_polygon", [](int n, const std::string& r, double rotation) {
        return raster_polygon(n, Rational::parse(r), rotation);
    }, py::arg("sides"), py::arg("radius"), py::arg("rotation") = 0.0);

    py::class_<BurstCode>(m, "BurstCode")
        .def_static("for_box", &BurstCode::for_box, py::arg("dims"), py::arg("m"))
        .def_static("for_folding", &BurstCode::for_folding, py::arg("folding"), py::arg("m"))
        .def("__len__", &BurstCode::length)
        .def("redundancy", &BurstCode::redundancy)
        .def("rank", &BurstCode::rank)
        .def("syndrome", &BurstCode::syndrome)
        .def("encode", &BurstCode::encode)
        .def("decode", [](const BurstCode& c, const BitVector& word) {
            const ErrorReport report = c.decode(word);
            return py::make_tuple(report.str(), c.correct(word, report));
        });
    m.def("verify_code", [](const BurstCode& c, std::uint64_t seed) {
        const VerifyReport v = verify_code(c, seed);
        return py::make_tuple(v.patterns, v.distinct_syndromes, v.decoded_ok);
    }, py::arg("code"), py::arg("seed") = 1);

    m.def("m_sequence", [](std::uint32_t k) { return m_sequence(k).bits; });
    m.def("window_property", [](const Folding& f, const BitVector& bits, std::uint32_t k1, std::uint32_t k2) {
        return check_window_property(fold_sequence(f, bits), k1, k2);
    });

    m.def("search_complete_folding_lattices", [](std::size_t dim, Coord max_volume) {
        return search_complete_folding_lattices(dim, max_volume, true).complete;
    });
}
