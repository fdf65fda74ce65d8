#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "limitrep/borelreps.hpp"
#include "limitrep/certify.hpp"
#include "limitrep/cli.hpp"
#include "limitrep/towers.hpp"

namespace py = pybind11;
using namespace limitrep;

namespace {

chevalley::GroupSpec parse_spec(const std::string& s, std::uint32_t level) {
  return chevalley::GroupSpec::parse(s).at_level(level);
}

principal::TorusCharacter theta_of(const chevalley::GroupSpec& spec,
                                   const std::vector<std::uint64_t>& exps,
                                   const CoeffField& F) {
  if (exps.empty()) return principal::TorusCharacter::trivial(spec, F);
  return principal::TorusCharacter::from_exponents(spec, exps, F);
}

} // namespace

PYBIND11_MODULE(_limitrep, m) {
  m.doc() = "exact workbench for induced modules of finite groups of Lie type";

  py::register_exception<input_error>(m, "InputError");
  py::register_exception<bound_error>(m, "BoundError");

  m.def("conway_polynomial", [](std::uint64_t p, std::uint32_t mdeg) {
    return fields::conway_polynomial(p, mdeg);
  }, py::arg("p"), py::arg("m"), "deterministic modulus of F_{p^m}, low-to-high");

  m.def("field_order", [](std::uint64_t p, std::uint32_t mdeg) {
    return fields::PrimePowerField::get(p, mdeg)->order();
  });

  m.def("group_order", [](const std::string& spec, std::uint32_t level) {
    return parse_spec(spec, level).order().get_str();
  }, py::arg("spec"), py::arg("level") = 1);

  m.def("kl_polynomial", [](const std::string& type, const std::vector<std::uint32_t>& y,
                            const std::vector<std::uint32_t>& w) {
    auto W = weyl::CoxeterSystem::parse(type);
    auto p = weyl::kl_polynomial(W->from_word(y), W->from_word(w));
    std::vector<std::int64_t> coeffs;
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.at(static_cast<size_t>(i)));
    return coeffs;
  }, py::arg("type"), py::arg("y_word"), py::arg("w_word"),
     "coefficients of P_{y,w}, low-to-high");

  m.def("cells", [](const std::string& type, const std::string& kind) {
    auto W = weyl::CoxeterSystem::parse(type);
    weyl::CellKind k = kind == "left"      ? weyl::CellKind::Left
                       : kind == "right"   ? weyl::CellKind::Right
                       : kind == "two_sided" ? weyl::CellKind::TwoSided
                                             : throw input_error("unknown cell kind");
    return weyl::cell_partition(W, k).json();
  }, py::arg("type"), py::arg("kind") = "left", "cell partition as JSON");

  m.def("bruhat_decompose", [](const std::string& spec, std::uint32_t level,
                               const std::string& matrix_json) {
    auto s = parse_spec(spec, level);
    auto Gc = chevalley::group(s);
    auto nf = Gc->bruhat_decompose(chevalley::mat_from_json(s.field(), matrix_json));
    std::ostringstream os;
    os << "{\"schema\":1,\"w\":\"" << nf.w.str() << "\",\"u\":" << nf.u.json()
       << ",\"t\":" << nf.t.json() << ",\"uprime\":" << nf.uprime.json() << "}";
    return os.str();
  }, py::arg("spec"), py::arg("level"), py::arg("matrix_json"));

  m.def("steinberg_report", [](const std::string& spec, std::uint32_t level,
                               const std::string& field) {
    auto s = parse_spec(spec, level);
    CoeffField F = CoeffField::parse(field);
    auto St = principal::steinberg(s, F);
    auto cert = modrep::is_irreducible(St.module);
    bool crit = F.char_zero() ||
                principal::steinberg_criterion(F.characteristic(), s.q, s.level, s.weyl_group());
    std::ostringstream os;
    os << "{\"schema\":1,\"spec\":\"" << s.str() << "\",\"dim\":" << St.module.dim()
       << ",\"irreducible\":" << (cert.irreducible ? "true" : "false")
       << ",\"criterion\":" << (crit ? "true" : "false") << "}";
    return os.str();
  }, py::arg("spec"), py::arg("level") = 1, py::arg("field") = "Q");

  m.def("mtheta_report", [](const std::string& spec, std::uint32_t level,
                            const std::vector<std::uint64_t>& theta, const std::string& field) {
    auto s = parse_spec(spec, level);
    CoeffField F = CoeffField::parse(field);
    auto th = theta_of(s, theta, F);
    auto M = principal::build_M_theta(s, th);
    std::ostringstream os;
    os << "{\"schema\":1,\"spec\":\"" << s.str() << "\",\"dim\":" << M.module.dim();
    if (F.char_zero()) os << ",\"bound_report\":" << principal::composition_bound_check(s, th).json();
    os << "}";
    return os.str();
  }, py::arg("spec"), py::arg("level") = 1, py::arg("theta") = std::vector<std::uint64_t>{},
     py::arg("field") = "Q");

  m.def("ej_report", [](const std::string& spec, std::uint32_t level,
                        const std::vector<std::uint32_t>& J) {
    auto s = parse_spec(spec, level);
    auto Mtr = principal::build_M_theta(
        s, principal::TorusCharacter::trivial(s, CoeffField::rationals()));
    return principal::distinguish_e_j(Mtr, J).json();
  }, py::arg("spec"), py::arg("level") = 1, py::arg("J") = std::vector<std::uint32_t>{});

  m.def("borel_report", [](const std::string& spec, std::uint32_t level,
                           const std::string& field) {
    return borelreps::classify_borel_irreps(parse_spec(spec, level),
                                            CoeffField::parse(field)).json();
  }, py::arg("spec"), py::arg("level") = 1, py::arg("field") = "Q(z_6)");

  m.def("gelfand_graev_report", [](const std::string& spec, std::uint32_t level,
                                   const std::string& field) {
    auto s = parse_spec(spec, level);
    borelreps::UCharacter sigma;
    sigma.spec = s;
    sigma.F = CoeffField::parse(field);
    for (std::uint32_t j = 0; j + 1 < s.n; ++j) sigma.components.push_back(s.field()->one());
    return borelreps::gelfand_graev(s, sigma).json();
  }, py::arg("spec"), py::arg("level") = 1, py::arg("field") = "Q(z_2)");

  m.def("tower_report", [](const std::string& spec, const std::vector<std::uint32_t>& levels,
                           const std::string& field) {
    auto D = towers::steinberg_system(chevalley::GroupSpec::parse(spec), levels,
                                      CoeffField::parse(field));
    return towers::union_irreducibility_certificate(D).json();
  }, py::arg("spec"), py::arg("levels"), py::arg("field") = "Q(z_4)");

  m.def("certify", [](int criterion) {
    if (criterion > 0) {
      auto r = certify::run_criterion(criterion);
      return py::make_tuple(r.pass, r.title, r.details);
    }
    bool all = true;
    std::ostringstream os;
    for (const auto& r : certify::run_all()) {
      os << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.id << ": " << r.title << "\n";
      if (!r.pass) all = false;
    }
    return py::make_tuple(all, std::string("all criteria"), os.str());
  }, py::arg("criterion") = 0);

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "run a CLI invocation in-process; returns (exit_code, stdout, stderr)");

  m.attr("criterion_count") = certify::criterion_count;
}
