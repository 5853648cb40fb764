#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sliclab/cavitation.hpp"
#include "sliclab/crack.hpp"
#include "sliclab/vacuum.hpp"
#include "sliclab/weakform.hpp"

namespace py = pybind11;
using namespace slic;

PYBIND11_MODULE(sliclab, m) {
    m.doc() = "singular self-similar wave fans, mollified residuals, energy balances";

    py::class_<StressLaw1D>(m, "StressLaw1D")
        .def_readonly("label", &StressLaw1D::label)
        .def_readonly("tau_inf", &StressLaw1D::tau_inf)
        .def_readonly("L", &StressLaw1D::L)
        .def("tau", [](const StressLaw1D& s, double u) { return s.tau(u); })
        .def("tau_prime", [](const StressLaw1D& s, double u) { return s.tau_prime(u); })
        .def("W", [](const StressLaw1D& s, double u) { return s.W(u); });
    m.def("make_stress_law", [](const std::string& label) { return make_stress_law(label); });

    py::class_<StoredEnergy3D>(m, "StoredEnergy3D")
        .def_readonly("label", &StoredEnergy3D::label)
        .def_readonly("d", &StoredEnergy3D::d)
        .def_readonly("H", &StoredEnergy3D::H)
        .def_readonly("L", &StoredEnergy3D::L)
        .def_readonly("sublinear", &StoredEnergy3D::sublinear_flag)
        .def("h", [](const StoredEnergy3D& e, double v) { return e.h(v); })
        .def("h_prime", [](const StoredEnergy3D& e, double v) { return e.h_prime(v); });
    m.def("make_stored_energy", &make_stored_energy, py::arg("label"), py::arg("d") = 3);

    py::class_<RadialStress>(m, "RadialStress")
        .def_readonly("Phi1", &RadialStress::Phi1)
        .def_readonly("Phi2", &RadialStress::Phi2);
    m.def("radial_stress", &radial_stress);

    py::class_<Mollifier>(m, "Mollifier")
        .def_readonly("label", &Mollifier::label)
        .def_readonly("phi0_positive", &Mollifier::phi0_positive)
        .def("phi", &Mollifier::phi)
        .def("Phi", &Mollifier::Phi)
        .def("mass", &Mollifier::mass);
    m.def("make_mollifier", &make_mollifier);

    py::class_<CrackFan>(m, "CrackFan")
        .def_readonly("lambda_", &CrackFan::lambda)
        .def_readonly("alpha", &CrackFan::alpha)
        .def_readonly("sigma", &CrackFan::sigma)
        .def_readonly("Y0", &CrackFan::Y0)
        .def_readonly("lax_ok", &CrackFan::lax_ok);
    m.def("solve_fan",
          [](const std::string& label, double lam, double alpha) {
              return solve_fan(make_stress_law(label), lam, alpha);
          },
          py::arg("law"), py::arg("lambda_"), py::arg("alpha"));
    m.def("motion", &motion);

    py::class_<EnergyAudit1D>(m, "EnergyAudit1D")
        .def_readonly("mu_minus", &EnergyAudit1D::mu_minus)
        .def_readonly("mu_plus", &EnergyAudit1D::mu_plus)
        .def_readonly("pc_n", &EnergyAudit1D::pc_n)
        .def_readonly("pc_limit", &EnergyAudit1D::pc_limit)
        .def_readonly("T", &EnergyAudit1D::T)
        .def_readonly("finite_cost", &EnergyAudit1D::finite_cost);
    m.def("energy_audit",
          [](const CrackFan& fan, const Mollifier& phi, double n, double t_ref) {
              return energy_audit(fan, phi, n, t_ref);
          },
          py::arg("fan"), py::arg("phi"), py::arg("n"), py::arg("t_ref") = 1.0);
    m.def("energy_rate_numeric", &energy_rate_numeric);
    m.def("total_rate_closed_form", &total_rate_closed_form);

    py::class_<Extrapolation>(m, "Extrapolation")
        .def_readonly("limit", &Extrapolation::limit)
        .def_readonly("rate", &Extrapolation::rate)
        .def_readonly("valid", &Extrapolation::valid)
        .def_readonly("monotone_tail", &Extrapolation::monotone_tail);
    m.def("extrapolate_limit", &extrapolate_limit);

    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("n_values", &ResidualReport::n_values)
        .def_readonly("residuals", &ResidualReport::residuals)
        .def_readonly("extrapolation", &ResidualReport::extrapolation)
        .def_readonly("target", &ResidualReport::target)
        .def_readonly("pass_", &ResidualReport::pass)
        .def("to_csv", &ResidualReport::to_csv)
        .def("to_json", &ResidualReport::to_json);

    m.def("crack_residual_study",
          [](const std::string& law, double lam, double alpha, const std::string& kernel,
             const std::vector<int>& ns, std::array<double, 2> center,
             std::array<double, 2> halfwidths) {
              auto fan = solve_fan(make_stress_law(law), lam, alpha);
              auto phi = make_mollifier(kernel);
              auto psi = make_bump_test(center, halfwidths);
              const double target = delta_derivative_pairing(fan.Y0, fan.law.L, psi);
              return residual_study(
                  ns,
                  [&](int n) {
                      auto m2 = make_crack_motion(fan, phi, n);
                      return pair_residual_1d(m2, psi);
                  },
                  target, std::max(1e-4, 0.02 * std::abs(target)));
          },
          py::arg("law"), py::arg("lambda_"), py::arg("alpha"), py::arg("kernel"),
          py::arg("n_values"), py::arg("center") = std::array<double, 2>{0.3, 1.0},
          py::arg("halfwidths") = std::array<double, 2>{1.0, 0.8});

    py::class_<SimilarityProfile>(m, "SimilarityProfile")
        .def_readonly("d", &SimilarityProfile::d)
        .def_readonly("lambda_", &SimilarityProfile::lambda)
        .def_readonly("sigma", &SimilarityProfile::sigma)
        .def_readonly("r0", &SimilarityProfile::r0)
        .def_readonly("rh_mismatch", &SimilarityProfile::rh_mismatch)
        .def("r", &SimilarityProfile::r_at)
        .def("r_prime", &SimilarityProfile::rp_at)
        .def("v", &SimilarityProfile::v_at)
        .def("w", &SimilarityProfile::w);
    m.def("shoot_profile",
          [](const std::string& label, double lam, int d) {
              return shoot_profile(make_stored_energy(label, d), lam, d);
          },
          py::arg("energy"), py::arg("lambda_"), py::arg("d") = 3);
    m.def("smallest_cavitating_lambda",
          [](const std::string& label, int d, const std::vector<double>& cands) {
              return smallest_cavitating_lambda(make_stored_energy(label, d), d, cands);
          },
          py::arg("energy"), py::arg("d") = 3,
          py::arg("candidates") = std::vector<double>{1.5, 2.0, 3.0, 4.0});

    py::class_<EnergyAudit3D>(m, "EnergyAudit3D")
        .def_readonly("J", &EnergyAudit3D::J)
        .def_readonly("cavity_term", &EnergyAudit3D::cavity_term)
        .def_readonly("D", &EnergyAudit3D::D)
        .def_readonly("lemma_gap", &EnergyAudit3D::lemma_gap)
        .def_readonly("E_target", &EnergyAudit3D::E_target);
    m.def("energy_fan_3d", &energy_fan_3d);
    m.def("mollified_energy", &mollified_energy);

    py::class_<VacuumFan>(m, "VacuumFan")
        .def_readonly("u_bar", &VacuumFan::u_bar)
        .def_readonly("v_bar", &VacuumFan::v_bar)
        .def_readonly("gamma", &VacuumFan::gamma)
        .def_readonly("w", &VacuumFan::w)
        .def_readonly("xi_F", &VacuumFan::xi_F)
        .def_readonly("delta_mass", &VacuumFan::delta_mass)
        .def("displacement", &VacuumFan::displacement)
        .def("u_ac", &VacuumFan::u_ac)
        .def("v", &VacuumFan::v);
    m.def("make_vacuum_fan", &make_vacuum_fan);
    m.def("vacuum_residual",
          [](const VacuumFan& fan, const std::string& kernel, const std::vector<int>& ns,
             double center, double halfwidth, double tol) {
              auto phi = make_mollifier(kernel);
              return vacuum_residual(fan, phi, ns, Bump1D{center, halfwidth}, tol);
          },
          py::arg("fan"), py::arg("kernel"), py::arg("n_values"), py::arg("center") = 0.0,
          py::arg("halfwidth") = 0.8, py::arg("tol") = 1e-4);
    m.def("vacuum_energy",
          [](const VacuumFan& fan, const std::string& kernel, double xi_bar,
             const std::vector<int>& ns) {
              auto phi = make_mollifier(kernel);
              auto e = vacuum_energy(fan, phi, xi_bar, ns);
              return py::make_tuple(e.extrapolation.limit, e.closed_form, e.rel_error);
          });

    py::register_exception<NoCavitationError>(m, "NoCavitationError");
    py::register_exception<InfiniteEnergyError>(m, "InfiniteEnergyError");
}
