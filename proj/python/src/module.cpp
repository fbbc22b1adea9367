// Copyright 2026 The bigonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bigonlab/bigon.hpp"
#include "bigonlab/cli.hpp"
#include "bigonlab/constants.hpp"
#include "bigonlab/error.hpp"
#include "bigonlab/vkarea.hpp"

namespace py = pybind11;
using namespace bigonlab;

namespace {

Presentation Load(const std::string& preset_or_text) {
  if (preset_or_text.find(':') == std::string::npos) return ParsePresentation(PresetText(preset_or_text));
  return ParsePresentation(preset_or_text);
}

VertexId Vertex(const GraphBall& ball, const std::string& word) {
  auto v = ball.Find(ball.presentation().ParseWord(word));
  if (!v) Fail(ErrorKind::kInvalidArgument, "'" + word + "' is outside the ball");
  return *v;
}

Band MakeBand(const GraphBall& ball, const std::string& start, const std::string& w0, const std::string& w1) {
  const Presentation& p = ball.presentation();
  VertexId s = Vertex(ball, start);
  return Band{PathFromWord(ball, s, p.ParseWord(w0)), PathFromWord(ball, s, p.ParseWord(w1))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Geodesic bigons, width statistics and area in Cayley graphs";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kRefused || e.kind() == ErrorKind::kPrecondition) {
        PyErr_SetString(PyExc_RuntimeError, e.what());
      } else {
        PyErr_SetString(PyExc_ValueError, e.what());
      }
    }
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::Run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI subcommand; returns (exit_code, stdout, stderr).");

  m.def("preset_text", [](const std::string& name) { return PresetText(name); }, py::arg("name"));

  m.def(
      "free_reduce", [](const std::string& presentation, const std::string& word) {
        Presentation p = Load(presentation);
        return p.Format(FreeReduce(p.ParseWord(word)));
      },
      py::arg("presentation"), py::arg("word"));

  m.def(
      "small_cancellation_ratio",
      [](const std::string& presentation) { return ToString(SmallCancellationRatio(Load(presentation))); },
      py::arg("presentation"));

  m.def(
      "normal_form",
      [](const std::string& presentation, const std::string& word) {
        Presentation p = Load(presentation);
        return p.Format(ChooseStrategy(p).NormalForm(p.ParseWord(word)));
      },
      py::arg("presentation"), py::arg("word"));

  py::class_<GraphBall>(m, "Ball")
      .def(py::init([](const std::string& presentation, int radius, std::optional<int> core) {
             Presentation p = Load(presentation);
             BallOptions options;
             options.core_radius = core;
             py::gil_scoped_release release;
             return BuildBall(p, ChooseStrategy(p), radius, options);
           }),
           py::arg("presentation"), py::arg("radius"), py::arg("core_radius") = py::none())
      .def_property_readonly("vertex_count", &GraphBall::vertex_count)
      .def_property_readonly("radius", &GraphBall::radius)
      .def_property_readonly("core_radius", &GraphBall::core_radius)
      .def_property_readonly("certified", &GraphBall::certified)
      .def("sphere_sizes", &GraphBall::SphereSizes)
      .def(
          "distance",
          [](const GraphBall& b, const std::string& u, const std::string& v) {
            return b.Distance(Vertex(b, u), Vertex(b, v)).value;
          },
          py::arg("u"), py::arg("v"))
      .def(
          "geodesics",
          [](const GraphBall& b, const std::string& u, const std::string& v) {
            std::vector<std::string> words;
            for (const auto& path : EnumerateGeodesics(b, Vertex(b, u), Vertex(b, v)).paths)
              words.push_back(b.presentation().Format(PathWord(b, path)));
            return words;
          },
          py::arg("u"), py::arg("v"), "Geodesic words from u to v.")
      .def(
          "width_profile",
          [](const GraphBall& b, const std::string& w0, const std::string& w1, const std::string& start) {
            return ComputeWidthProfile(b, MakeBand(b, start, w0, w1)).values;
          },
          py::arg("side0"), py::arg("side1"), py::arg("start") = "")
      .def(
          "bigon_count",
          [](const GraphBall& b, int length_cap) {
            BigonOptions options;
            options.length_cap = length_cap;
            std::size_t count = 0;
            py::gil_scoped_release release;
            ForEachBigon(b, options, [&](std::size_t, const Band&) { ++count; });
            return count;
          },
          py::arg("length_cap"))
      .def(
          "sup_exceedance",
          [](const GraphBall& b, int length_cap, const std::vector<int>& xs, int jobs) {
            BigonOptions options;
            options.length_cap = length_cap;
            SupExceedanceResult result;
            {
              py::gil_scoped_release release;
              result = SupExceedance(b, options, xs, jobs);
            }
            py::dict out;
            for (const auto& e : result.entries) out[py::int_(e.x)] = ToString(e.sup);
            return out;
          },
          py::arg("length_cap"), py::arg("xs"), py::arg("jobs") = 1,
          "Map x -> sup exceedance ratio as a 'num/den' string.")
      .def(
          "delta",
          [](const GraphBall& b, int jobs) {
            py::gil_scoped_release release;
            return ToString(GromovDeltaOver(b, b.CoreVertices(), jobs));
          },
          py::arg("jobs") = 1);

  m.def(
      "area",
      [](const std::string& presentation, const std::string& word, std::size_t length_cap, long area_cap) {
        Presentation p = Load(presentation);
        AreaCaps caps;
        caps.length_cap = length_cap;
        caps.area_cap = area_cap;
        AreaResult r;
        {
          py::gil_scoped_release release;
          r = Area(p, p.ParseWord(word), caps);
        }
        py::dict out;
        out["area"] = r.area ? py::object(py::int_(*r.area)) : py::object(py::none());
        out["status"] = ToString(r.status);
        std::vector<std::pair<std::size_t, std::string>> witness;
        for (const auto& move : r.witness) witness.emplace_back(move.position, p.Format(move.relator));
        out["witness"] = witness;
        return out;
      },
      py::arg("presentation"), py::arg("word"), py::arg("length_cap") = 16, py::arg("area_cap") = 64);

  m.def(
      "constants",
      [](long y, const std::string& theta, long z, const std::string& lambda, std::optional<std::string> nu) {
        PipelineOptions options;
        if (nu) options.nu = ParseRational(*nu);
        ConstantBundle b = Pipeline(y, ParseRational(theta), z, ParseRational(lambda), options);
        py::dict out;
        out["epsilon"] = ToString(b.epsilon);
        out["a"] = b.a;
        out["D"] = b.d;
        out["rho"] = ToString(b.rho);
        out["R"] = ToString(b.r);
        std::vector<std::string> seq;
        for (const auto& n : b.n_sequence) seq.push_back(ToString(n));
        out["n_sequence"] = seq;
        out["N"] = ToString(b.n);
        out["mu"] = ToString(b.mu);
        out["K"] = ToString(b.k);
        out["C"] = b.c ? py::object(py::str(ToString(*b.c))) : py::object(py::none());
        out["C_log10"] = b.c_log10;
        return out;
      },
      py::arg("Y"), py::arg("theta"), py::arg("Z"), py::arg("lambda_"), py::arg("nu") = py::none());
}
