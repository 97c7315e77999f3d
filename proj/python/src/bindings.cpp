#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qlef/genfun.hpp"
#include "qlef/hypertail.hpp"
#include "qlef/loc0.hpp"
#include "qlef/quintic_oracle.hpp"
#include "qlef/rational.hpp"
#include "qlef/verify.hpp"

namespace py = pybind11;
using namespace qlef;

namespace {

py::dict series_dict(const RationalSeries& s) {
  py::dict d;
  for (const auto& [k, v] : s.to_ordered_strings()) d[py::str(k)] = v;
  return d;
}

HypertailCaps caps_from(const std::map<std::string, int>& overrides) {
  HypertailCaps caps;
  for (const auto& [k, v] : overrides) {
    if (k == "d1")
      caps.d1 = v;
    else if (k == "d2")
      caps.d2 = v;
    else if (k == "z")
      caps.z = v;
    else if (k == "h")
      caps.h = v;
    else if (k == "lam")
      caps.lam = v;
    else
      throw std::invalid_argument("unknown cap '" + k + "' (expected d1,d2,z,h,lam)");
  }
  return caps;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact-arithmetic localization toolkit for hypersurface Gromov-Witten invariants";

  m.def(
      "fdg",
      [](int d, int g, int order) {
        FdgResult r = F_dg(d, g, order);
        py::dict out;
        out["series"] = series_dict(r.r2);
        out["agree"] = r.agree;
        return out;
      },
      py::arg("d"), py::arg("g"), py::arg("order") = 8,
      "Vertex-contribution series F_{d,g}(z) computed by three routes; returns the series "
      "(as a monomial -> value map of exact strings) and whether the routes agree.");

  m.def(
      "psi_integral",
      [](const std::vector<int>& exponents) { return to_string(psi_integral_M0n(exponents)); },
      py::arg("exponents"),
      "Integral of prod psi_i^{a_i} over the moduli of genus-0 stable curves.");

  m.def(
      "invariant",
      [](int N, int d, const std::vector<std::pair<int, int>>& insertions,
         const std::optional<std::pair<int, std::string>>& twist, int weight_variant) {
        std::optional<TwistSpec> tw;
        if (twist) {
          if (twist->second != "+" && twist->second != "-")
            throw std::invalid_argument("twist sign must be '+' or '-'");
          tw = TwistSpec{twist->first,
                         twist->second == "+" ? TwistSign::Plus : TwistSign::Minus, true};
        }
        std::vector<MarkingInsertion> ins;
        ins.reserve(insertions.size());
        for (const auto& p : insertions)
          ins.push_back(MarkingInsertion::descendant(p.first, p.second));
        InvariantRecord rec = descendant_invariant_record(N, d, ins, tw, default_weights(N, weight_variant));
        py::dict out;
        out["raw"] = rec.raw.str();
        out["value"] = rec.honest.str();
        out["vdim"] = rec.vdim;
        out["lambda_power"] = rec.honest_power;
        return out;
      },
      py::arg("N"), py::arg("d"), py::arg("insertions"), py::arg("twist") = py::none(),
      py::arg("weight_variant") = 0,
      "Genus-0 descendant invariant on P^N by torus localization. insertions are (psi_power, "
      "H_power) pairs; twist is None or (bundle_degree, '+'|'-').");

  m.def(
      "hypertail_dump",
      [](const std::string& locus, const std::map<std::string, int>& caps) {
        HypertailCaps c = caps_from(caps);
        FixedLocus l = locus == "X0" ? FixedLocus::X0 : FixedLocus::Q0;
        HypertailSeries t = extract_hypertail(mirror_transform_small(i_restricted(l, c)), c);
        py::dict out;
        for (const auto& [k, v] : hypertail_dump(t)) out[py::str(k)] = v;
        return out;
      },
      py::arg("locus") = "Q0", py::arg("caps") = std::map<std::string, int>{},
      "Tail coefficients of the restricted I-function, keyed 'd1,d2,zk,hj'.");

  m.def(
      "pipeline",
      [](const std::string& name, bool with_degree2) {
        if (name != "p2" && name != "quintic1")
          throw std::invalid_argument("pipeline name must be 'p2' or 'quintic1'");
        PipelineReport rep =
            name == "p2" ? pipeline_p2_example() : pipeline_quintic_degree1(with_degree2);
        py::dict out;
        out["name"] = rep.name;
        out["value"] = to_string(rep.value);
        out["lambda_power"] = rep.lambda_power;
        py::dict det;
        for (const auto& [k, v] : rep.details) det[py::str(k)] = v;
        out["details"] = det;
        return out;
      },
      py::arg("name"), py::arg("with_degree2") = false,
      "Worked end-to-end localization computations with intermediate values.");

  m.def(
      "quintic_mirror",
      [](int dmax) {
        QuinticNumbers q = quintic_mirror_numbers(dmax);
        py::list N, n;
        for (const auto& v : q.N) N.append(to_string(v));
        for (const auto& v : q.n) n.append(to_string(v));
        py::dict out;
        out["N"] = N;
        out["n"] = n;
        return out;
      },
      py::arg("dmax"),
      "Genus-0 quintic numbers N_d and instanton counts n_d from the hypergeometric series, "
      "indexed by degree (index 0 unused).");

  m.def(
      "verify",
      [](const std::string& suite, unsigned seed) {
        py::list out;
        for (const auto& r : run_acceptance(suite, seed)) {
          py::dict e;
          e["criterion"] = r.id;
          e["description"] = r.description;
          e["expected"] = r.expected;
          e["got"] = r.got;
          e["pass"] = r.pass;
          out.append(e);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("seed") = 1,
      "Runs an acceptance suite and returns one record per criterion.");
}
