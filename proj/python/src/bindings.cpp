#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "qgc/analysis.hpp"
#include "qgc/chaos.hpp"
#include "qgc/cipher.hpp"
#include "qgc/error.hpp"
#include "qgc/keyformat.hpp"
#include "qgc/quasigroup.hpp"

namespace py = pybind11;
using namespace qgc;

namespace {

using ByteArray = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

ImageRGB to_image(const ByteArray& a) {
  if (a.ndim() != 3 || a.shape(2) != 3) throw py::value_error("expected an H x W x 3 uint8 array");
  const auto h = static_cast<std::size_t>(a.shape(0)), w = static_cast<std::size_t>(a.shape(1));
  std::vector<std::uint8_t> data(a.data(), a.data() + h * w * 3);
  return ImageRGB(h, w, std::move(data));
}

ByteArray from_image(const ImageRGB& img) {
  ByteArray out({img.height, img.width, std::size_t{3}});
  std::memcpy(out.mutable_data(), img.data.data(), img.data.size());
  return out;
}

std::vector<std::uint8_t> to_bytes(const py::bytes& b) {
  const std::string s = b;
  return {s.begin(), s.end()};
}

py::array_t<Symbol> table_array(std::span<const Symbol> t, std::size_t n) {
  py::array_t<Symbol> out({n, n});
  std::memcpy(out.mutable_data(), t.data(), t.size() * sizeof(Symbol));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quasigroup / standard-map image cipher";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<KeyFormatError>(m, "KeyFormatError", base.ptr());
  py::register_exception<ImageFormatError>(m, "ImageFormatError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

  // Quasigroups
  py::class_<Quasigroup>(m, "Quasigroup")
      .def_static("from_rows", &Quasigroup::from_rows, py::arg("rows"))
      .def_static("cyclic", &Quasigroup::cyclic, py::arg("order"))
      .def_static("generate", &generate_quasigroup, py::arg("order"), py::arg("seed"))
      .def_property_readonly("order", &Quasigroup::order)
      .def("mul", &Quasigroup::mul)
      .def("ldiv", &Quasigroup::ldiv)
      .def("rdiv", &Quasigroup::rdiv)
      .def("mul_table", [](const Quasigroup& q) { return table_array(q.mul_table(), q.order()); })
      .def("ldiv_table", [](const Quasigroup& q) { return table_array(q.ldiv_table(), q.order()); })
      .def("rdiv_table", [](const Quasigroup& q) { return table_array(q.rdiv_table(), q.order()); })
      .def(py::self == py::self);

  m.def(
      "validate_latin_square",
      [](const std::vector<std::vector<Symbol>>& rows) -> std::optional<std::string> {
        if (auto v = validate_latin_square(rows)) return v->describe();
        return std::nullopt;
      },
      py::arg("rows"), "None for a Latin square, otherwise a description of the first violation.");

  // Standard map
  m.attr("TWO_PI") = kTwoPi;
  m.def("portable_sin", &portable_sin, py::arg("y"));
  m.def("wrap_two_pi", &wrap_two_pi, py::arg("a"));
  py::class_<MapState>(m, "MapState")
      .def(py::init<>())
      .def(py::init([](double x, double y, double k) { return MapState{x, y, k}; }), py::arg("x"), py::arg("y"),
           py::arg("k"))
      .def_readwrite("x", &MapState::x)
      .def_readwrite("y", &MapState::y)
      .def_readwrite("k", &MapState::k)
      .def(py::self == py::self)
      .def("__repr__", [](const MapState& s) {
        return "MapState(x=" + py::repr(py::float_(s.x)).cast<std::string>() +
               ", y=" + py::repr(py::float_(s.y)).cast<std::string>() +
               ", k=" + py::repr(py::float_(s.k)).cast<std::string>() + ")";
      });
  m.def("step", &step, py::arg("state"));
  m.def("skip", &skip, py::arg("state"), py::arg("count"));
  m.def("box_index", &box_index, py::arg("v"), py::arg("extent"));
  m.def(
      "gen_perm_boxes",
      [](MapState s, std::size_t rows, std::size_t cols) {
        auto [b, end] = gen_perm_boxes(s, rows, cols);
        py::dict d;
        d["pr1"] = b.pr1;
        d["pc1"] = b.pc1;
        d["pr2"] = b.pr2;
        d["pc2"] = b.pc2;
        return py::make_tuple(d, end);
      },
      py::arg("state"), py::arg("rows"), py::arg("cols"));

  // Keys
  py::class_<KeyParameters>(m, "KeyParameters")
      .def(py::init<>())
      .def(py::init([](double x0, double y0, double k, std::uint32_t ns, std::uint8_t rounds, std::uint8_t seed1,
                       std::uint8_t seed2) { return KeyParameters{x0, y0, k, ns, rounds, seed1, seed2}; }),
           py::arg("x0"), py::arg("y0"), py::arg("k"), py::arg("ns"), py::arg("rounds"), py::arg("seed1"),
           py::arg("seed2"))
      .def_readwrite("x0", &KeyParameters::x0)
      .def_readwrite("y0", &KeyParameters::y0)
      .def_readwrite("k", &KeyParameters::k)
      .def_readwrite("ns", &KeyParameters::ns)
      .def_readwrite("rounds", &KeyParameters::rounds)
      .def_readwrite("seed1", &KeyParameters::seed1)
      .def_readwrite("seed2", &KeyParameters::seed2)
      .def(py::self == py::self);

  py::class_<SecretKey>(m, "SecretKey")
      .def(py::init([](const KeyParameters& p, const Quasigroup& q) { return SecretKey{p, q}; }), py::arg("params"),
           py::arg("quasigroup"))
      .def_readwrite("params", &SecretKey::params)
      .def_readwrite("quasigroup", &SecretKey::quasigroup)
      .def(py::self == py::self);

  m.def(
      "validate_key",
      [](const SecretKey& k) {
        const KeyReport r = validate_key(k);
        return py::make_tuple(r.violations, r.warnings);
      },
      py::arg("key"), "Returns (violations, warnings).");
  m.def("generate_key", &generate_key, py::arg("seed"), py::arg("rounds") = 2);
  m.def(
      "serialize_key",
      [](const SecretKey& k) {
        const auto b = serialize_key(k);
        return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
      },
      py::arg("key"));
  m.def(
      "parse_key", [](const py::bytes& b) { return parse_key(to_bytes(b)); }, py::arg("data"));

  // Cipher
  m.def(
      "reshape_dims",
      [](std::size_t h, std::size_t w) {
        const auto d = reshape_dims(h, w);
        return py::make_tuple(d.rows, d.cols);
      },
      py::arg("height"), py::arg("width"));
  m.def(
      "encrypt",
      [](const ByteArray& img, const SecretKey& key) {
        const ImageRGB in = to_image(img);
        ImageRGB out;
        {
          py::gil_scoped_release release;
          out = encrypt(in, key);
        }
        return from_image(out);
      },
      py::arg("image"), py::arg("key"));
  m.def(
      "decrypt",
      [](const ByteArray& img, const SecretKey& key) {
        const ImageRGB in = to_image(img);
        ImageRGB out;
        {
          py::gil_scoped_release release;
          out = decrypt(in, key);
        }
        return from_image(out);
      },
      py::arg("image"), py::arg("key"));

  // Metrics
  m.def(
      "entropy",
      [](const ByteArray& a) {
        return entropy(std::span<const std::uint8_t>(a.data(), static_cast<std::size_t>(a.size())));
      },
      py::arg("values"));
  m.def(
      "channel_entropies", [](const ByteArray& a) { return channel_entropies(to_image(a)); }, py::arg("image"));
  m.def(
      "channel_correlations",
      [](const ByteArray& a, const ByteArray& b) { return channel_correlations(to_image(a), to_image(b)); },
      py::arg("plain"), py::arg("cipher"));
  m.def(
      "adjacent_correlations",
      [](const ByteArray& a) {
        const auto r = adjacent_correlations(to_image(a));
        py::dict d;
        d["horizontal"] = r.horizontal;
        d["vertical"] = r.vertical;
        return d;
      },
      py::arg("image"));
  m.def(
      "npcr", [](const ByteArray& a, const ByteArray& b) { return npcr(to_image(a), to_image(b)); }, py::arg("a"),
      py::arg("b"));
  m.def(
      "uaci", [](const ByteArray& a, const ByteArray& b) { return uaci(to_image(a), to_image(b)); }, py::arg("a"),
      py::arg("b"));
  m.def(
      "mutual_information",
      [](const ByteArray& a, const ByteArray& b) { return mutual_information(to_image(a), to_image(b)); },
      py::arg("a"), py::arg("b"));
  m.def("expected_npcr", &expected_npcr, py::arg("bits") = 8);
  m.def("expected_uaci", &expected_uaci, py::arg("bits") = 8);
}
