#include "tcorr/charsum.hpp"
#include "tcorr/cli.hpp"
#include "tcorr/lemma_check.hpp"
#include "tcorr/seq.hpp"
#include "tcorr/spectrum.hpp"
#include "tcorr/spectrum_io.hpp"
#include "tcorr/tower.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace tcorr;

namespace {

using Triple = std::array<std::uint32_t, 3>;

class PyTower {
public:
    PyTower(int r, const std::string& dcase) : tower_(build_tower(build_field(r), parse_decimation_case(dcase))) {}

    int r() const { return tower_->r(); }
    int n() const { return tower_->n(); }
    std::uint64_t d() const { return tower_->d(); }
    std::uint32_t u() const { return tower_->u().index(); }
    std::uint32_t c() const { return tower_->c().index(); }
    std::uint32_t size() const { return tower_->size(); }
    std::string dcase() const { return std::string(to_string(tower_->decimation_case())); }

    py::dict checks() const
    {
        const TowerChecks& c = tower_->checks();
        py::dict out;
        out["trace_condition"] = c.trace_condition;
        out["cubic_has_no_root"] = c.cubic_has_no_root;
        out["frobenius_shift"] = c.frobenius_shift;
        out["generator_primitive"] = c.generator_primitive;
        out["exponent_coprime"] = c.exponent_coprime;
        return out;
    }

    Triple coords(std::uint32_t packed) const
    {
        if (packed >= tower_->size())
            throw std::invalid_argument("element index out of range");
        return tower_->unpack(packed);
    }
    std::uint32_t pack(const Triple& x) const { return tower_->pack(check(x)); }
    Triple mul(const Triple& a, const Triple& b) const { return tower_->mul(check(a), check(b)); }

    std::uint32_t rel_trace_xd(const Triple& x) const { return tcorr::rel_trace_xd(*tower_, tower_->coords(pack(x))).index(); }
    std::uint32_t rel_trace_zx(const Triple& z, const Triple& x) const
    {
        return tcorr::rel_trace_zx(*tower_, check(z), check(x));
    }
    int abs_trace_xd(const Triple& x) const { return tcorr::abs_trace_xd(*tower_, check(x)); }
    int abs_trace_zx(const Triple& z, const Triple& x) const { return tcorr::abs_trace_zx(*tower_, check(z), check(x)); }

    std::int64_t weil_brute(const Triple& z) const
    {
        return weil_sum_bruteforce(tower_->tables(), tower_->d(), pack(z)).as_integer();
    }
    std::int64_t weil_reduced(const Triple& z, bool gauss_fast_path) const
    {
        return weil_sum_reduced(*tower_, check(z), ReducedOptions{gauss_fast_path});
    }

    py::list lemma_check(std::uint64_t seed) const
    {
        LemmaCheckOptions opts;
        opts.seed = seed;
        py::list out;
        for (const auto& c : check_trace_identities(*tower_, opts)) {
            py::dict d;
            d["name"] = c.name;
            d["supported"] = c.supported;
            d["exhaustive"] = c.exhaustive;
            d["checked"] = c.checked;
            d["failures"] = c.failures;
            d["passed"] = c.passed();
            out.append(d);
        }
        return out;
    }

private:
    RawCoords check(const Triple& x) const
    {
        for (auto v : x)
            if (v >= tower_->base().size())
                throw std::invalid_argument("coordinate outside the subfield");
        return x;
    }

    std::shared_ptr<const TowerCtx> tower_;
};

py::dict field_info(int m, const std::string& modulus)
{
    const auto f = build_field(m, modulus.empty() ? std::nullopt : std::optional<Poly3>(Poly3::parse(modulus)));
    py::dict out;
    out["m"] = f->degree();
    out["size"] = f->size();
    out["modulus"] = f->modulus().to_string();
    out["generator"] = f->generator().index();
    return out;
}

std::string spectrum_json(int r, const std::string& dcase, const std::string& method, const std::string& domain,
                          unsigned workers, bool gauss_fast_path)
{
    SpectrumOptions opts;
    opts.workers = workers;
    opts.reduced.gauss_fast_path = gauss_fast_path;
    SpectrumReport rep;
    {
        py::gil_scoped_release release;
        rep = full_spectrum(WeilParams::make(r, parse_decimation_case(dcase)), parse_method(method),
                            parse_domain(domain), opts);
    }
    return to_json(rep).dump();
}

std::string table_json(int r, const std::string& dcase, const std::string& variant)
{
    return to_json(closed_form_table(r, parse_decimation_case(dcase), parse_variant(variant))).dump();
}

std::string audit_json(int r, const std::string& dcase, const std::string& variant, const std::string& method)
{
    const DecimationCase dc = parse_decimation_case(dcase);
    SpectrumReport rep;
    {
        py::gil_scoped_release release;
        rep = full_spectrum(WeilParams::make(r, dc), parse_method(method), Domain::E);
    }
    return to_json(audit(rep, closed_form_table(r, dc, parse_variant(variant)))).dump();
}

py::tuple sequences(int r, const std::string& dcase, bool correlation)
{
    const auto tower = build_tower(build_field(r), parse_decimation_case(dcase));
    const LogTables& t = tower->tables();
    const TernarySeq a = m_sequence(t, t.generator);
    const TernarySeq b = decimate(a, tower->d());
    std::vector<std::int64_t> corr;
    if (correlation)
        for (const auto& c : cross_correlation_all(a, b))
            corr.push_back(c.as_integer());
    return py::make_tuple(a.to_string(), b.to_string(), corr);
}

py::tuple quadratic_sum(int r, std::uint32_t a, std::uint32_t b)
{
    const auto f = build_field(r);
    if (a >= f->size() || b >= f->size())
        throw std::invalid_argument("element index out of range");
    const EisensteinInt s = quadratic_weil_sum(f->element(a), f->element(b));
    return py::make_tuple(s.a, s.b);
}

py::tuple run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_tcorr, m)
{
    m.doc() = "Finite-field Weil sums and ternary sequence correlation spectra";

    py::class_<PyTower>(m, "Tower")
        .def(py::init<int, const std::string&>(), py::arg("r"), py::arg("case") = "A")
        .def_property_readonly("r", &PyTower::r)
        .def_property_readonly("n", &PyTower::n)
        .def_property_readonly("d", &PyTower::d)
        .def_property_readonly("u", &PyTower::u)
        .def_property_readonly("c", &PyTower::c)
        .def_property_readonly("size", &PyTower::size)
        .def_property_readonly("case", &PyTower::dcase)
        .def("checks", &PyTower::checks)
        .def("coords", &PyTower::coords, py::arg("index"))
        .def("pack", &PyTower::pack, py::arg("x"))
        .def("mul", &PyTower::mul, py::arg("a"), py::arg("b"))
        .def("rel_trace_xd", &PyTower::rel_trace_xd, py::arg("x"))
        .def("rel_trace_zx", &PyTower::rel_trace_zx, py::arg("z"), py::arg("x"))
        .def("abs_trace_xd", &PyTower::abs_trace_xd, py::arg("x"))
        .def("abs_trace_zx", &PyTower::abs_trace_zx, py::arg("z"), py::arg("x"))
        .def("weil_brute", &PyTower::weil_brute, py::arg("z"))
        .def("weil_reduced", &PyTower::weil_reduced, py::arg("z"), py::arg("gauss_fast_path") = false)
        .def("lemma_check", &PyTower::lemma_check, py::arg("seed") = 1);

    m.def("field_info", &field_info, py::arg("m"), py::arg("modulus") = "");
    m.def("spectrum_json", &spectrum_json);
    m.def("table_json", &table_json);
    m.def("audit_json", &audit_json);
    m.def("sequences", &sequences);
    m.def("quadratic_weil_sum", &quadratic_sum, py::arg("r"), py::arg("a"), py::arg("b"),
          "sum over GF(3^r) of w^{Tr(a x^2 + b x)} as (re, w) Eisenstein coordinates");
    m.def("run_cli", &run_cli, py::arg("args"), "Runs one command line; returns (exit_code, stdout, stderr).");
}
