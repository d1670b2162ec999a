// Python bindings for the main operations. Exact structured values cross
// the boundary as JSON strings (the package wrapper turns them into dicts);
// archimedean and global numerics use native complex/float types.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "waldzeta/json_io.hpp"
#include "waldzeta/selfcheck.hpp"

namespace py = pybind11;

namespace {

using waldzeta::Json;

std::string spherical_values_json(const std::string& setup_json, int max_m) {
    waldzeta::LocalSetup ls = waldzeta::local_setup_from_json(Json::parse(setup_json));
    const auto& rep = std::get<waldzeta::UnramifiedPS>(ls.rep);
    auto values = waldzeta::spherical_values_recurrence(ls.field, rep, ls.omega, max_m);
    auto series = waldzeta::spherical_generating_series(ls.field, rep, ls.omega);
    Json out;
    Json a = Json::array();
    for (const auto& v : values) a.push_back(waldzeta::coeff_to_json(v));
    out["A"] = std::move(a);
    out["genfun"] = waldzeta::ratfunc_to_json(series.gen);
    return out.dump();
}

std::string steinberg_table_json(const std::string& setup_json, int max_m) {
    waldzeta::LocalSetup ls = waldzeta::local_setup_from_json(Json::parse(setup_json));
    const auto& rep = std::get<waldzeta::SteinbergTwist>(ls.rep);
    auto table = waldzeta::steinberg_table(ls.field, rep, ls.omega, max_m);
    Json out;
    Json tj = Json::object();
    for (const auto& [label, value] : table.values)
        tj[label.to_string()] = waldzeta::coeff_to_json(value);
    out["table"] = std::move(tj);
    out["normalization"] =
        table.normalization == waldzeta::WaldspurgerTable::Normalization::AtW ? "w" : "u1";
    return out.dump();
}

std::string local_zeta_json(const std::string& setup_json, int order) {
    waldzeta::LocalSetup ls = waldzeta::local_setup_from_json(Json::parse(setup_json));
    if (!ls.pair) throw std::invalid_argument("local zeta needs omega1/omega2");
    waldzeta::LocalZetaResult res;
    bool oracle_ok = false;
    std::string which;
    if (std::holds_alternative<waldzeta::UnramifiedPS>(ls.rep)) {
        const auto& rep = std::get<waldzeta::UnramifiedPS>(ls.rep);
        which = "unramified";
        res = waldzeta::zeta_unramified(ls.field, rep, *ls.pair, ls.omega);
        oracle_ok = waldzeta::series_matches(
            res.closed_form,
            waldzeta::zeta_unramified_direct(ls.field, rep, *ls.pair, ls.omega, order));
    } else {
        const auto& rep = std::get<waldzeta::SteinbergTwist>(ls.rep);
        if (ls.pair->omega1.conductor == 1) {
            which = "steinberg-newform";
            res = waldzeta::zeta_steinberg_newform(ls.field, rep, *ls.pair, ls.omega);
            oracle_ok = waldzeta::series_matches(
                res.closed_form,
                waldzeta::zeta_steinberg_newform_direct(ls.field, rep, *ls.pair, ls.omega, order));
        } else {
            which = "steinberg-oldvector";
            res = waldzeta::zeta_steinberg_oldvector(ls.field, rep, *ls.pair, ls.omega);
            oracle_ok = waldzeta::series_matches(
                waldzeta::times_x(res.closed_form),
                waldzeta::zeta_steinberg_oldvector_direct(ls.field, rep, *ls.pair, ls.omega,
                                                          order));
        }
    }
    Json out;
    out["case"] = which;
    out["closed_form"] = waldzeta::ratfunc_to_json(res.closed_form);
    out["y_factor"] = waldzeta::ratfunc_to_json(res.y_factor);
    out["oracle_ok"] = oracle_ok;
    out["oracle_order"] = order;
    return out.dump();
}

std::complex<double> zeta_infinity_py(int ell, std::int64_t D, std::complex<double> s) {
    waldzeta::arch::ArchParams p;
    p.ell = ell;
    p.ell1 = ell / 2;
    p.ell2 = ell - ell / 2;
    p.D = D;
    p.m_twist = ell;
    return waldzeta::arch::zeta_infinity(p, s);
}

std::vector<std::string> validate_config_py(const std::string& cfg_json) {
    return waldzeta::validate(waldzeta::global_config_from_json(Json::parse(cfg_json)));
}

std::complex<double> global_product_py(const std::string& cfg_json, std::complex<double> s) {
    auto cfg = waldzeta::global_config_from_json(Json::parse(cfg_json));
    return waldzeta::global_product(cfg, s).value;
}

std::string y_table_json(const std::string& cfg_json) {
    auto cfg = waldzeta::global_config_from_json(Json::parse(cfg_json));
    auto table = waldzeta::y_table(cfg);
    Json out = Json::object();
    for (const auto& [p, y] : table.y) out[std::to_string(p)] = waldzeta::ratfunc_to_json(y);
    return out.dump();
}

py::dict inner_product_py(const std::string& cfg_json) {
    auto cfg = waldzeta::global_config_from_json(Json::parse(cfg_json));
    auto res = waldzeta::inner_product_value(cfg);
    py::dict out;
    out["z_at_zero"] = res.z_at_zero;
    out["petersson"] = res.petersson;
    out["vol_gamma0"] = res.vol_gamma0;
    return out;
}

std::vector<std::pair<std::string, bool>> run_verify_py(std::uint64_t seed) {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& r : waldzeta::run_all_checks(seed)) out.emplace_back(r.name, r.ok);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Waldspurger-model values, local zeta factors, and the global product";

    m.def("spherical_values", &spherical_values_json, py::arg("setup_json"), py::arg("max_m") = 10,
          "recurrence values and generating function of the spherical vector (JSON string)");
    m.def("steinberg_table", &steinberg_table_json, py::arg("setup_json"), py::arg("max_m") = 10,
          "new-vector value table for a Steinberg twist (JSON string)");
    m.def("local_zeta", &local_zeta_json, py::arg("setup_json"), py::arg("order") = 50,
          "closed form, Y factor and oracle check for the local zeta integral (JSON string)");

    m.def("cartan_z", &waldzeta::arch::cartan_z, py::arg("x"), py::arg("y"));
    m.def("arch_I", &waldzeta::arch::arch_I, py::arg("k"), py::arg("s"));
    m.def("arch_I_quadrature", &waldzeta::arch::arch_I_quadrature, py::arg("k"), py::arg("s"),
          py::arg("tol") = 1e-10);
    m.def("zeta_infinity", &zeta_infinity_py, py::arg("ell"), py::arg("D"), py::arg("s"));

    m.def("legendre_of_prime", &waldzeta::legendre_of_prime, py::arg("D"), py::arg("p"));
    m.def("is_fundamental_discriminant", &waldzeta::is_fundamental_discriminant, py::arg("D"));
    m.def("volume_gamma0", &waldzeta::volume_gamma0, py::arg("N"));
    m.def("validate_config", &validate_config_py, py::arg("config_json"));
    m.def("global_product", &global_product_py, py::arg("config_json"), py::arg("s"));
    m.def("y_table", &y_table_json, py::arg("config_json"));
    m.def("inner_product", &inner_product_py, py::arg("config_json"));
    m.def(
        "nonvanishing",
        [](std::complex<double> l_half_pi, bool bc_nonzero) {
            waldzeta::LValues lv;
            lv.L_half_pi = l_half_pi;
            lv.L_half_bc_twist_nonzero = bc_nonzero;
            return waldzeta::nonvanishing(lv);
        },
        py::arg("L_half_pi"), py::arg("bc_twist_nonzero"));
    m.def("run_verify", &run_verify_py, py::arg("seed") = 42,
          "run the invariant suite; returns (name, ok) pairs");
}
