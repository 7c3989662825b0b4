// Copyright 2026 The Authors.
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

// Python bindings. Specs cross the boundary as JSON text (the Python side
// serializes dicts); subsets cross as lists of element ids.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coopmat/brute_force.hpp"
#include "coopmat/coloring.hpp"
#include "coopmat/corpus.hpp"
#include "coopmat/errors.hpp"
#include "coopmat/games.hpp"
#include "coopmat/json_io.hpp"
#include "coopmat/matroid.hpp"
#include "coopmat/partition.hpp"

namespace py = pybind11;
using namespace coopmat;

namespace {

Subset to_subset(const std::vector<int>& ids) {
  Subset s;
  for (int e : ids) {
    if (e < 0 || e >= kMaxGroundSize) throw MalformedSpec("element id out of range");
    s.insert(e);
  }
  return s;
}

py::dict certificate_dict(const DeficiencyCertificate& c) {
  py::dict d;
  d["x"] = c.x.elements();
  d["ranks"] = c.ranks;
  d["rank_sum"] = c.rank_sum();
  return d;
}

py::dict outcome_dict(const GameOutcome& o) {
  py::dict d;
  d["winner"] = to_string(o.winner);
  d["explored_states"] = o.explored_states;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Matroid partitioning, cooperative coloring and coloring games";

  // Later registrations are tried first, so subclasses follow the base.
  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<MalformedSpec>(m, "MalformedSpec", base.ptr());
  py::register_exception<LoopDetected>(m, "LoopDetected", base.ptr());
  py::register_exception<OutOfRestriction>(m, "OutOfRestriction", base.ptr());
  py::register_exception<NotIndependent>(m, "NotIndependent", base.ptr());
  py::register_exception<TooLarge>(m, "TooLarge", base.ptr());
  py::register_exception<StateSpaceTooLarge>(m, "StateSpaceTooLarge", base.ptr());
  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", base.ptr());

  py::class_<Matroid>(m, "Matroid")
      .def_property_readonly("ground_size", &Matroid::ground_size)
      .def_property_readonly("kind", [](const Matroid& x) { return to_string(x.kind()); })
      .def_property_readonly("support",
                             [](const Matroid& x) { return x.support().elements(); })
      .def("is_independent",
           [](const Matroid& x, const std::vector<int>& s) {
             return x.is_independent(to_subset(s));
           })
      .def("rank", [](const Matroid& x, const std::vector<int>& s) {
        return rank(x, to_subset(s));
      })
      .def("fundamental_circuit",
           [](const Matroid& x, const std::vector<int>& a, int e)
               -> std::optional<std::vector<int>> {
             auto c = fundamental_circuit(x, to_subset(a), e);
             if (!c) return std::nullopt;
             return c->elements();
           })
      .def("restrict",
           [](const Matroid& x, const std::vector<int>& s) { return restrict(x, to_subset(s)); })
      .def("pullback",
           [](const Matroid& x, const std::vector<int>& image) {
             return pullback(x, Permutation(image));
           })
      .def("spec_json", [](const Matroid& x) -> std::optional<std::string> {
        if (!x.spec()) return std::nullopt;
        return to_json(*x.spec()).dump();
      });

  m.def("build_matroid_json",
        [](const std::string& text) {
          Json j;
          try {
            j = Json::parse(text);
          } catch (const Json::parse_error& e) {
            throw MalformedSpec(e.what());
          }
          return build_matroid(spec_from_json(j));
        },
        py::arg("spec_json"));

  m.def("corpus_json", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const CorpusEntry& e : builtin_corpus()) out.emplace_back(e.name, to_json(e.spec).dump());
    return out;
  });

  m.def("verify_axioms", [](const Matroid& x) {
    const AxiomReport r = verify_matroid_axioms(x);
    py::dict d;
    d["ok"] = r.ok();
    d["description"] = r.describe();
    d["smaller"] = r.smaller.elements();
    d["larger"] = r.larger.elements();
    return d;
  });

  m.def("chromatic_number", &chromatic_number);
  m.def("chromatic_number_formula", [](const Matroid& x) {
    const ChromaticFormula f = chromatic_number_formula_bf(x);
    return py::make_tuple(f.value, f.argmax.elements());
  });

  m.def("is_k_colorable", [](const Matroid& x, int k) {
    py::dict d;
    auto r = is_k_colorable(x, k);
    d["colorable"] = std::holds_alternative<Coloring>(r);
    if (auto* f = std::get_if<Coloring>(&r)) {
      d["coloring"] = f->colors();
    } else {
      d["certificate"] = certificate_dict(std::get<DeficiencyCertificate>(r));
    }
    return d;
  });

  m.def("partition",
        [](const std::vector<Matroid>& ms, const std::vector<int>& target,
           std::optional<std::vector<std::vector<int>>> admissible) {
          MatroidSystem sys = full_system(ms);
          if (admissible) {
            if (admissible->size() != ms.size()) {
              throw MalformedSpec("one admissible set per matroid expected");
            }
            for (std::size_t i = 0; i < ms.size(); ++i) sys[i].admissible = to_subset((*admissible)[i]);
          }
          py::dict d;
          auto r = partition_ground_set(sys, to_subset(target));
          d["ok"] = std::holds_alternative<PartitionState>(r);
          if (auto* s = std::get_if<PartitionState>(&r)) {
            py::list parts;
            for (Subset p : s->parts()) parts.append(p.elements());
            d["parts"] = parts;
          } else {
            d["certificate"] = certificate_dict(std::get<DeficiencyCertificate>(r));
          }
          return d;
        },
        py::arg("matroids"), py::arg("target"), py::arg("admissible") = py::none());

  m.def("union_rank", [](const std::vector<Matroid>& ms, const std::vector<int>& a) {
    return union_rank(full_system(ms), to_subset(a));
  });
  m.def("union_rank_formula", [](const std::vector<Matroid>& ms, const std::vector<int>& a) {
    const UnionRankFormula f = union_rank_formula_bf(full_system(ms), to_subset(a));
    return py::make_tuple(f.value, f.minimizer.elements());
  });

  m.def("coop_list_color",
        [](const std::vector<Matroid>& ns, const std::vector<std::vector<int>>& lists) {
          const int k = lists.empty() ? 1 : static_cast<int>(lists.front().size());
          const ListAssignment la(static_cast<int>(ns.size()), k, lists);
          return coop_list_color(ns, la).colors();
        },
        py::arg("matroids"), py::arg("lists"));
  m.def("cooperative_color",
        [](const std::vector<Matroid>& ms) { return cooperative_color(ms).colors(); });
  m.def("coop_colorable_bf",
        [](const std::vector<Matroid>& ns, const std::vector<std::vector<int>>& lists)
            -> std::optional<std::vector<int>> {
          const int k = lists.empty() ? 1 : static_cast<int>(lists.front().size());
          auto f = bf::coop_colorable_bf(ns, ListAssignment(static_cast<int>(ns.size()), k, lists));
          if (!f) return std::nullopt;
          return f->colors();
        });
  m.def("count_independent_sets", &bf::count_independent_sets);

  m.def("solve_indicated", [](const std::vector<Matroid>& ms) {
    return outcome_dict(solve_indicated(ms));
  });
  m.def("solve_marking",
        [](const std::vector<Matroid>& ms, const std::string& first) {
          return outcome_dict(solve_marking(ms, player_from_string(first)));
        },
        py::arg("matroids"), py::arg("first") = "ann");
  m.def("solve_painting",
        [](const std::vector<Matroid>& ms, int k, const std::string& rules) {
          return outcome_dict(solve_painting(ms, k, rules_from_string(rules)));
        },
        py::arg("matroids"), py::arg("k"), py::arg("rules") = "no-dead-element");
  m.def("two_covering", [](const std::vector<Matroid>& ms) {
    std::vector<std::vector<int>> out;
    for (Subset s : two_covering(ms)) out.push_back(s.elements());
    return out;
  });
}
