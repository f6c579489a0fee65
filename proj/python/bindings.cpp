#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohpol/channels.hpp"
#include "cohpol/metrics.hpp"
#include "cohpol/propagation.hpp"
#include "cohpol/screen.hpp"

namespace py = pybind11;
using namespace cohpol;

namespace {

Slit slit_from_int(int index) {
    if (index != 0 && index != 1) throw InputError("slit must be 0 or 1");
    return index == 0 ? Slit::Q0 : Slit::Q1;
}

PureState pure_from(const std::vector<Complex>& amplitudes) {
    if (amplitudes.size() != kDim) throw InputError("a pure state needs 4 amplitudes (a, b, c, d)");
    return PureState(amplitudes[0], amplitudes[1], amplitudes[2], amplitudes[3]);
}

py::dict columns(const std::vector<std::pair<const char*, std::vector<double>>>& cols) {
    py::dict out;
    for (const auto& [name, values] : cols) out[name] = py::array_t<double>(values.size(), values.data());
    return out;
}

std::vector<PatternSample> samples_from(const std::vector<double>& y, const std::vector<double>& total,
                                        const std::vector<double>& q0, const std::vector<double>& q1) {
    if (total.size() != y.size() || q0.size() != y.size() || q1.size() != y.size()) {
        throw InputError("pattern columns must have equal length");
    }
    std::vector<PatternSample> out;
    out.reserve(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out.push_back({y[i], total[i], q0[i], q1[i]});
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-slit photon density matrices: coherence, polarization, screen patterns and dephasing.";

    auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
    (void)input_error;

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def_static(
            "from_pure", [](const std::vector<Complex>& amplitudes) { return DensityMatrix::from_pure(pure_from(amplitudes)); },
            py::arg("amplitudes"), "Pure state a|H,0> + b|H,1> + c|V,0> + d|V,1>.")
        .def_static(
            "from_mixture",
            [](const std::vector<std::pair<double, std::vector<Complex>>>& components) {
                std::vector<MixtureComponent> parts;
                for (const auto& [w, amps] : components) parts.push_back({w, pure_from(amps)});
                return DensityMatrix::from_mixture(MixtureSpec(std::move(parts)));
            },
            py::arg("components"), "Mixture from (weight, amplitudes) pairs.")
        .def_static("from_matrix", &DensityMatrix::validate, py::arg("matrix"),
                    "Validate a 4x4 complex matrix; raises InputError listing every violation.")
        .def_property_readonly("matrix", &DensityMatrix::matrix)
        .def("eigenvalues", &DensityMatrix::eigenvalues)
        .def("purity", &DensityMatrix::purity)
        .def("trace", &DensityMatrix::trace)
        .def("__getitem__", [](const DensityMatrix& rho, std::pair<int, int> rc) {
            if (rc.first < 0 || rc.first >= kDim || rc.second < 0 || rc.second >= kDim) throw py::index_error();
            return rho(rc.first, rc.second);
        });

    m.def("slit_population", [](const DensityMatrix& rho, int slit) { return slit_population(rho, slit_from_int(slit)); },
          py::arg("rho"), py::arg("slit"));
    m.def(
        "degree_of_coherence",
        [](const DensityMatrix& rho) -> std::optional<Complex> {
            if (auto mu = degree_of_coherence(rho)) return mu->mu;
            return std::nullopt;
        },
        py::arg("rho"), "Complex mu, or None when a slit is unpopulated.");
    m.def(
        "degree_of_polarization",
        [](const DensityMatrix& rho, int slit) -> std::optional<double> {
            if (auto p = degree_of_polarization(rho, slit_from_int(slit))) return p->p;
            return std::nullopt;
        },
        py::arg("rho"), py::arg("slit"), "p at one slit, or None when that slit is unpopulated.");
    m.def(
        "stokes",
        [](const DensityMatrix& rho, int slit) {
            const auto s = stokes(rho, slit_from_int(slit));
            return std::array<double, 4>{s.s0, s.s1, s.s2, s.s3};
        },
        py::arg("rho"), py::arg("slit"));

    py::class_<SlitGeometry>(m, "SlitGeometry")
        .def(py::init([](double d, double L, double k) {
                 SlitGeometry g{d, L, k};
                 g.check();
                 return g;
             }),
             py::arg("slit_separation"), py::arg("screen_distance"), py::arg("wavenumber"))
        .def_readonly("slit_separation", &SlitGeometry::slit_separation)
        .def_readonly("screen_distance", &SlitGeometry::screen_distance)
        .def_readonly("wavenumber", &SlitGeometry::wavenumber);

    m.def(
        "pattern",
        [](const DensityMatrix& rho, const SlitGeometry& g, double y_min, double y_max, int n) {
            std::vector<double> y, total, q0, q1;
            for (const auto& s : pattern(rho, g, y_min, y_max, n)) {
                y.push_back(s.y);
                total.push_back(s.rho_total);
                q0.push_back(s.rho_q0);
                q1.push_back(s.rho_q1);
            }
            return columns({{"y", y}, {"rho_total", total}, {"rho_q0", q0}, {"rho_q1", q1}});
        },
        py::arg("rho"), py::arg("geometry"), py::arg("y_min"), py::arg("y_max"), py::arg("n_points"),
        "Detection density on the screen as a dict of arrays.");
    m.def(
        "extract_visibility",
        [](const std::vector<double>& y, const std::vector<double>& total, const std::vector<double>& q0,
           const std::vector<double>& q1) { return extract_visibility(samples_from(y, total, q0, q1)); },
        py::arg("y"), py::arg("rho_total"), py::arg("rho_q0"), py::arg("rho_q1"));
    m.def(
        "coherence_from_pattern",
        [](const std::vector<double>& y, const std::vector<double>& total, const std::vector<double>& q0,
           const std::vector<double>& q1) { return coherence_from_pattern(samples_from(y, total, q0, q1)); },
        py::arg("y"), py::arg("rho_total"), py::arg("rho_q0"), py::arg("rho_q1"));

    m.def(
        "polarization_curve",
        [](double z1, double z2, double w1_0, double z_max, int n_steps) {
            GaussianBeamPair pair;
            pair.z1 = z1;
            pair.z2 = z2;
            pair.w1_0 = w1_0;
            pair.w2_0 = 1.0 - w1_0;
            std::vector<double> z, w1, w2, p, mu;
            for (const auto& s : polarization_curve(pair, z_max, n_steps)) {
                z.push_back(s.z);
                w1.push_back(s.w1);
                w2.push_back(s.w2);
                p.push_back(s.p);
                mu.push_back(std::abs(s.mu));
            }
            return columns({{"z", z}, {"w1", w1}, {"w2", w2}, {"p", p}, {"abs_mu", mu}});
        },
        py::arg("z1") = 1.0, py::arg("z2") = 2.0, py::arg("w1_0") = 0.5, py::arg("z_max") = 10.0,
        py::arg("n_steps") = 101);

    py::class_<KrausChannel>(m, "KrausChannel")
        .def(py::init<std::vector<Matrix4>, std::string>(), py::arg("operators"), py::arg("label") = "custom")
        .def("apply", &KrausChannel::apply, py::arg("rho"))
        .def_property_readonly("operators", &KrausChannel::operators)
        .def_property_readonly("label", &KrausChannel::label);

    m.def("path_dephasing", &path_dephasing, py::arg("p_interact"));
    m.def("birefringent_dephasing", &birefringent_dephasing, py::arg("p_interact"));
    m.def(
        "evolve_discrete",
        [](const std::string& kind, const DensityMatrix& rho0, double p, long n) {
            const ChannelKind k = parse_channel_kind(kind);
            return evolve_discrete([k](double q) { return make_channel(k, q); }, rho0, p, n);
        },
        py::arg("kind"), py::arg("rho0"), py::arg("p_interact"), py::arg("n"));
    m.def(
        "evolve_continuous",
        [](const std::string& kind, const DensityMatrix& rho0, double gamma, double t) {
            return evolve_continuous(parse_channel_kind(kind), rho0, gamma, t);
        },
        py::arg("kind"), py::arg("rho0"), py::arg("gamma"), py::arg("t"));
    m.def(
        "decay_report",
        [](const std::string& kind, const DensityMatrix& rho0, double gamma, double t_max, int n) {
            std::vector<double> t, mu, p0, p1;
            for (const auto& s : decay_report(rho0, parse_channel_kind(kind), gamma, t_max, n)) {
                t.push_back(s.t);
                mu.push_back(s.abs_mu);
                p0.push_back(s.p0);
                p1.push_back(s.p1);
            }
            return columns({{"t", t}, {"abs_mu", mu}, {"p0", p0}, {"p1", p1}});
        },
        py::arg("kind"), py::arg("rho0"), py::arg("gamma"), py::arg("t_max"), py::arg("n_samples"));
}
