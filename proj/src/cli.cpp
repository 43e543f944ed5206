#include "tcorr/cli.hpp"

#include "tcorr/charsum.hpp"
#include "tcorr/gf.hpp"
#include "tcorr/lemma_check.hpp"
#include "tcorr/seq.hpp"
#include "tcorr/spectrum.hpp"
#include "tcorr/spectrum_io.hpp"
#include "tcorr/tower.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

namespace tcorr::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int r = 1;
    int m = 1;
    std::string modulus;
    std::string dcase = "A";
    std::string method = "brute";
    std::string domain = "E";
    std::string variant = "moment_consistent";
    std::string format = "json";
    std::uint64_t seed = 1;
    unsigned workers = 1;
    bool timing = false;
    bool gauss_fast_path = false;
    bool correlation = false;
    std::string z;
    std::optional<std::int64_t> tau;
    std::uint64_t samples = 100'000;
};

unsigned default_workers()
{
    if (const char* env = std::getenv(kWorkersEnv)) {
        try {
            const long v = std::stol(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<DecimationCase> cases_of(const RunConfig& cfg)
{
    if (cfg.dcase == "both")
        return {DecimationCase::A, DecimationCase::B};
    return {parse_decimation_case(cfg.dcase)};
}

std::vector<Method> methods_of(const RunConfig& cfg)
{
    if (cfg.method == "all")
        return {Method::brute, Method::reduced, Method::sequence};
    return {parse_method(cfg.method)};
}

std::vector<TableVariant> variants_of(const RunConfig& cfg)
{
    if (cfg.variant == "both")
        return {TableVariant::paper, TableVariant::moment_consistent};
    return {parse_variant(cfg.variant)};
}

void check_r_bounds(const RunConfig& cfg, const std::vector<Method>& methods)
{
    for (Method m : methods)
        if (cfg.r < 1 || cfg.r > max_r(m))
            throw UsageError("method " + std::string(to_string(m)) + " needs 1 <= r <= " + std::to_string(max_r(m)) +
                             ", got " + std::to_string(cfg.r));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json coords_json(const TowerCtx& tower, std::uint32_t packed)
{
    const RawCoords c = tower.unpack(packed);
    return json::array({c[0], c[1], c[2]});
}

json eisenstein_json(const EisensteinInt& v)
{
    if (v.is_rational())
        return v.a;
    return v.to_string();
}

SpectrumOptions spectrum_options(const RunConfig& cfg, std::ostream& err, Method method, DecimationCase dcase)
{
    SpectrumOptions opts;
    opts.workers = cfg.workers;
    opts.reduced.gauss_fast_path = cfg.gauss_fast_path;
    if (cfg.r >= 3 && method != Method::reduced) {
        auto last = std::make_shared<int>(-1);
        opts.progress = [&err, last, method, dcase](std::uint64_t done, std::uint64_t total) {
            const int pct = static_cast<int>(100 * done / total) / 10 * 10;
            if (pct != *last) {
                *last = pct;
                err << "progress " << to_string(method) << " case " << to_string(dcase) << ": " << pct << "%\n";
            }
        };
    }
    return opts;
}

// ---------------------------------------------------------------- field

int cmd_field(const RunConfig& cfg, std::ostream& out)
{
    std::optional<Poly3> modulus;
    if (!cfg.modulus.empty())
        modulus = Poly3::parse(cfg.modulus);
    const auto field = build_field(cfg.m, modulus);
    std::array<std::uint64_t, 3> trace_counts{};
    for (auto v : field->tables().trace)
        ++trace_counts[v];
    const Elt g = field->generator();
    json j = {{"m", field->degree()},
              {"size", field->size()},
              {"modulus", field->modulus().to_string()},
              {"modulus_primitive", is_primitive(field->modulus())},
              {"generator", g.index()},
              {"generator_digits", g.digits()},
              {"trace_counts", trace_counts}};
    if (cfg.format == "json") {
        out << dump(j);
    } else if (cfg.format == "csv") {
        out << "m,size,modulus,generator\n"
            << field->degree() << ',' << field->size() << ",\"" << field->modulus().to_string() << "\"," << g.index()
            << '\n';
    } else {
        out << "GF(3^" << field->degree() << "), " << field->size() << " elements\n"
            << "modulus   " << field->modulus().to_string() << (j["modulus_primitive"].get<bool>() ? " (primitive)" : "")
            << "\ngenerator " << g.index() << "\ntrace counts " << trace_counts[0] << ' ' << trace_counts[1] << ' '
            << trace_counts[2] << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- tower

json tower_json(const TowerCtx& tower)
{
    const TowerChecks& c = tower.checks();
    return {{"r", tower.r()},
            {"n", tower.n()},
            {"case", to_string(tower.decimation_case())},
            {"d", tower.d()},
            {"F_modulus", tower.base().modulus().to_string()},
            {"u", tower.u().index()},
            {"c", tower.c().index()},
            {"generator", coords_json(tower, tower.tables().generator)},
            {"checks",
             {{"trace_condition", c.trace_condition},
              {"cubic_has_no_root", c.cubic_has_no_root},
              {"frobenius_shift", c.frobenius_shift},
              {"generator_primitive", c.generator_primitive},
              {"exponent_coprime", c.exponent_coprime}}},
            {"ok", c.all()}};
}

int cmd_tower(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.r < 1 || cfg.r > kMaxTowerDegree)
        throw UsageError("tower needs 1 <= r <= " + std::to_string(kMaxTowerDegree));
    const auto base = build_field(cfg.r);
    json all = json::array();
    bool ok = true;
    for (auto dc : cases_of(cfg)) {
        const auto tower = build_tower(base, dc);
        all.push_back(tower_json(*tower));
        ok = ok && tower->checks().all();
    }
    if (cfg.format == "json") {
        out << dump(all.size() == 1 ? all[0] : json{{"towers", all}});
    } else if (cfg.format == "csv") {
        out << "r,case,d,u,c,g0,g1,g2,ok\n";
        for (const auto& t : all)
            out << t["r"] << ',' << t["case"].get<std::string>() << ',' << t["d"] << ',' << t["u"] << ',' << t["c"]
                << ',' << t["generator"][0] << ',' << t["generator"][1] << ',' << t["generator"][2] << ','
                << (t["ok"].get<bool>() ? "true" : "false") << '\n';
    } else {
        for (const auto& t : all) {
            out << "tower r=" << t["r"] << " case " << t["case"].get<std::string>() << " d=" << t["d"]
                << "\n  F modulus " << t["F_modulus"].get<std::string>() << "\n  u=" << t["u"] << " c=" << t["c"]
                << "\n  generator " << t["generator"].dump() << '\n';
            for (const auto& [k, v] : t["checks"].items())
                out << "  " << std::left << std::setw(20) << k << (v.get<bool>() ? "ok" : "FAILED") << '\n';
        }
    }
    return ok ? kOk : kFailure;
}

// ---------------------------------------------------------------- lemma-check

int cmd_lemma_check(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.r < 1 || cfg.r > 3)
        throw UsageError("lemma-check needs 1 <= r <= 3");
    const auto base = build_field(cfg.r);
    LemmaCheckOptions opts;
    opts.seed = cfg.seed;
    opts.rel_samples = cfg.samples;
    opts.abs_z_samples = cfg.samples;
    json all = json::array();
    bool ok = true;
    for (auto dc : cases_of(cfg)) {
        const auto tower = build_tower(base, dc);
        json checks = json::array();
        for (const auto& c : check_trace_identities(*tower, opts)) {
            checks.push_back({{"name", c.name},
                              {"supported", c.supported},
                              {"exhaustive", c.exhaustive},
                              {"checked", c.checked},
                              {"failures", c.failures},
                              {"passed", c.passed()}});
            ok = ok && c.passed();
        }
        all.push_back({{"r", cfg.r}, {"case", to_string(dc)}, {"d", tower->d()}, {"seed", cfg.seed}, {"checks", checks}});
    }
    if (cfg.format == "json") {
        out << dump(all.size() == 1 ? all[0] : json{{"results", all}});
    } else if (cfg.format == "csv") {
        out << "case,name,supported,exhaustive,checked,failures\n";
        for (const auto& rec : all)
            for (const auto& c : rec["checks"])
                out << rec["case"].get<std::string>() << ',' << c["name"].get<std::string>() << ','
                    << c["supported"] << ',' << c["exhaustive"] << ',' << c["checked"] << ',' << c["failures"] << '\n';
    } else {
        for (const auto& rec : all) {
            out << "r=" << rec["r"] << " case " << rec["case"].get<std::string>() << " d=" << rec["d"] << '\n';
            for (const auto& c : rec["checks"]) {
                out << "  " << std::left << std::setw(14) << c["name"].get<std::string>();
                if (!c["supported"].get<bool>())
                    out << "not available for this case\n";
                else
                    out << c["checked"] << (c["exhaustive"].get<bool>() ? " (exhaustive)" : " (sampled)") << ", "
                        << c["failures"] << " failures\n";
            }
        }
    }
    return ok ? kOk : kFailure;
}

// ---------------------------------------------------------------- weil

std::uint32_t parse_z(const TowerCtx& tower, const RunConfig& cfg)
{
    if (!cfg.z.empty() && cfg.tau)
        throw UsageError("give either --z or --tau, not both");
    if (cfg.tau) {
        const auto& t = tower.tables();
        const std::int64_t n = t.order;
        return t.exp[static_cast<std::uint32_t>(((*cfg.tau % n) + n) % n)];
    }
    if (cfg.z.empty())
        throw UsageError("weil needs --z x0,x1,x2 or --tau t");
    RawCoords c{};
    std::stringstream ss(cfg.z);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 3)
            throw UsageError("--z takes three comma-separated subfield indices");
        const long v = std::stol(tok);
        if (v < 0 || static_cast<std::uint64_t>(v) >= tower.base().size())
            throw UsageError("--z coordinate " + tok + " outside the subfield");
        c[static_cast<std::size_t>(i++)] = static_cast<std::uint32_t>(v);
    }
    if (i != 3)
        throw UsageError("--z takes three comma-separated subfield indices");
    return tower.pack(c);
}

int cmd_weil(const RunConfig& cfg, std::ostream& out)
{
    const auto methods = methods_of(cfg);
    check_r_bounds(cfg, methods);
    const auto base = build_field(cfg.r);
    json all = json::array();
    bool agree = true;
    for (auto dc : cases_of(cfg)) {
        const auto tower = build_tower(base, dc);
        const std::uint32_t z = parse_z(*tower, cfg);
        json values = json::object();
        std::optional<std::int64_t> first;
        for (Method m : methods) {
            std::optional<std::int64_t> s;
            switch (m) {
            case Method::brute: s = weil_sum_bruteforce(tower->tables(), tower->d(), z).as_integer(); break;
            case Method::reduced:
                s = weil_sum_reduced(*tower, tower->unpack(z), ReducedOptions{cfg.gauss_fast_path});
                break;
            case Method::sequence:
                if (z != 0) {
                    const auto& t = tower->tables();
                    const TernarySeq a = m_sequence(t, t.generator);
                    s = cross_correlation(a, decimate(a, tower->d()), t.log[z]).as_integer() + 1;
                }
                break;
            }
            values[std::string(to_string(m))] = s ? json(*s) : json(nullptr);
            if (s) {
                if (first && *first != *s)
                    agree = false;
                first = first ? first : s;
            }
        }
        json rec = {{"r", cfg.r},
                    {"n", 3 * cfg.r},
                    {"d", tower->d()},
                    {"case", to_string(dc)},
                    {"z", coords_json(*tower, z)},
                    {"S", values}};
        if (z != 0)
            rec["tau"] = tower->tables().log[z];
        all.push_back(rec);
    }
    if (cfg.format == "json") {
        json j = all.size() == 1 ? all[0] : json{{"results", all}};
        j["methods_agree"] = agree;
        out << dump(j);
    } else if (cfg.format == "csv") {
        out << "case,z0,z1,z2,method,S\n";
        for (const auto& rec : all)
            for (const auto& [m, v] : rec["S"].items())
                out << rec["case"].get<std::string>() << ',' << rec["z"][0] << ',' << rec["z"][1] << ',' << rec["z"][2]
                    << ',' << m << ',' << (v.is_null() ? std::string() : v.dump()) << '\n';
    } else {
        for (const auto& rec : all) {
            out << "S_" << rec["d"] << "(z=" << rec["z"].dump() << ") case " << rec["case"].get<std::string>() << '\n';
            for (const auto& [m, v] : rec["S"].items())
                out << "  " << std::left << std::setw(10) << m << (v.is_null() ? "n/a (z = 0)" : v.dump()) << '\n';
        }
    }
    return agree ? kOk : kFailure;
}

// ---------------------------------------------------------------- spectrum / audit

void write_text_report(std::ostream& out, const SpectrumReport& rep)
{
    out << "r=" << rep.params.r << " n=" << rep.params.n << " d=" << rep.params.d << " case "
        << to_string(rep.params.dcase) << " domain " << to_string(rep.domain) << " method " << to_string(rep.method)
        << '\n';
    out << std::right << std::setw(12) << "S" << std::setw(12) << "C" << std::setw(12) << "count" << '\n';
    for (const auto& [s, count] : rep.counts)
        out << std::setw(12) << s << std::setw(12) << s - 1 << std::setw(12) << count << '\n';
    out << "m1=" << to_string(rep.m1) << " m2=" << to_string(rep.m2) << '\n';
}

struct CaseRun {
    std::vector<SpectrumReport> reports;  // one per method, in order
    bool agree = true;
};

CaseRun run_methods(const RunConfig& cfg, const std::shared_ptr<const FieldCtx>& base, DecimationCase dc,
                    const std::vector<Method>& methods, std::ostream& err)
{
    const auto tower = build_tower(base, dc);
    CaseRun run;
    for (Method m : methods)
        run.reports.push_back(full_spectrum(*tower, m, parse_domain(cfg.domain), spectrum_options(cfg, err, m, dc)));
    for (std::size_t i = 1; i < run.reports.size(); ++i) {
        const std::int64_t diff = first_pointwise_difference(run.reports[0], run.reports[i]);
        if (diff >= 0) {
            run.agree = false;
            err << "methods " << to_string(run.reports[0].method) << " and " << to_string(run.reports[i].method)
                << " disagree at z index " << diff << '\n';
        }
    }
    return run;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto methods = methods_of(cfg);
    check_r_bounds(cfg, methods);
    const TableVariant variant = cfg.variant == "both" ? TableVariant::moment_consistent : parse_variant(cfg.variant);
    const auto base = build_field(cfg.r);
    json records = json::array();
    std::ostringstream text;
    bool agree = true;
    for (auto dc : cases_of(cfg)) {
        const CaseRun run = run_methods(cfg, base, dc, methods, err);
        agree = agree && run.agree;
        for (const auto& rep : run.reports) {
            const AuditResult a = audit(rep, closed_form_table(cfg.r, dc, variant));
            records.push_back(to_json(rep, a, cfg.timing));
            if (cfg.format == "csv") {
                if (records.size() > 1 || methods.size() > 1 || cfg.dcase == "both")
                    text << "# case=" << to_string(dc) << " method=" << to_string(rep.method) << '\n';
                text << to_csv(rep);
            } else if (cfg.format == "text") {
                write_text_report(text, rep);
                text << "audit " << to_string(variant) << ": " << to_string(a.verdict) << "\n\n";
            }
        }
    }
    if (cfg.format == "json") {
        if (records.size() == 1)
            out << dump(records[0]);
        else
            out << dump(json{{"reports", records}, {"methods_agree", agree}});
    } else {
        out << text.str();
    }
    return agree ? kOk : kFailure;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto methods = methods_of(cfg);
    check_r_bounds(cfg, methods);
    const auto targets = variants_of(cfg);
    const auto base = build_field(cfg.r);
    json records = json::array();
    std::ostringstream text;
    bool ok = true;
    for (auto dc : cases_of(cfg)) {
        const CaseRun run = run_methods(cfg, base, dc, methods, err);
        ok = ok && run.agree;
        const SpectrumReport& rep = run.reports.front();
        json audits = json::array();
        json tables = json::array();
        // The published variant is always evaluated, targeted or not.
        for (TableVariant v : {TableVariant::paper, TableVariant::moment_consistent}) {
            const bool target = std::find(targets.begin(), targets.end(), v) != targets.end();
            const ClosedFormTable table = closed_form_table(cfg.r, dc, v);
            const AuditResult a = audit(rep, table);
            json aj = to_json(a);
            aj["target"] = target;
            audits.push_back(aj);
            tables.push_back(to_json(table));
            if (target && a.verdict != Verdict::match)
                ok = false;
            if (cfg.format == "text") {
                text << "case " << to_string(dc) << " variant " << to_string(v) << (target ? "" : " (informational)")
                     << ": " << to_string(a.verdict) << "  table total " << a.table_total.to_string()
                     << " vs domain " << a.domain_size << (a.integral ? "" : ", non-integral counts") << '\n';
                for (const auto& mm : a.mismatches)
                    text << "    S=" << mm.s_value << " expected " << mm.expected.to_string() << " observed "
                         << mm.observed << '\n';
            } else if (cfg.format == "csv") {
                for (const auto& mm : a.mismatches)
                    text << to_string(dc) << ',' << to_string(v) << ',' << mm.s_value << ',' << mm.s_value - 1 << ','
                         << mm.expected.to_string() << ',' << mm.observed << '\n';
                if (a.verdict == Verdict::table_inconsistent)
                    text << to_string(dc) << ',' << to_string(v) << ",,,table_inconsistent,\n";
            }
        }
        json rec = to_json(rep, std::nullopt, cfg.timing);
        rec["audits"] = audits;
        rec["tables"] = tables;
        rec["moment_check"] = to_json(moment_check(rep));
        records.push_back(rec);
    }
    if (cfg.format == "json")
        out << dump(records.size() == 1 ? records[0] : json{{"reports", records}});
    else if (cfg.format == "csv")
        out << "case,variant,S,C,expected,observed\n" << text.str();
    else
        out << text.str();
    return ok ? kOk : kFailure;
}

// ---------------------------------------------------------------- seq

int cmd_seq(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.r < 1 || cfg.r > 3)
        throw UsageError("seq needs 1 <= r <= 3");
    const auto base = build_field(cfg.r);
    json all = json::array();
    std::ostringstream text;
    for (auto dc : cases_of(cfg)) {
        const auto tower = build_tower(base, dc);
        const auto& t = tower->tables();
        const TernarySeq a = m_sequence(t, t.generator);
        const TernarySeq b = decimate(a, tower->d());
        json rec = {{"r", cfg.r},
                    {"case", to_string(dc)},
                    {"d", tower->d()},
                    {"N", a.period()},
                    {"generator", coords_json(*tower, t.generator)},
                    {"a", a.to_string()},
                    {"b", b.to_string()}};
        std::vector<EisensteinInt> corr;
        if (cfg.correlation) {
            corr = cross_correlation_all(a, b);
            json cj = json::array();
            for (const auto& c : corr)
                cj.push_back(eisenstein_json(c));
            rec["correlation"] = cj;
        }
        all.push_back(rec);
        if (cfg.format == "csv") {
            if (cfg.correlation) {
                text << "tau,C\n";
                for (std::size_t i = 0; i < corr.size(); ++i)
                    text << i << ',' << (corr[i].is_rational() ? std::to_string(corr[i].a) : corr[i].to_string())
                         << '\n';
            } else {
                text << a.to_string() << '\n' << b.to_string() << '\n';
            }
        } else if (cfg.format == "text") {
            text << "m-sequence (N=" << a.period() << ")\n" << a.to_string() << "\n" << tower->d() << "-decimation\n"
                 << b.to_string() << '\n';
            if (cfg.correlation)
                for (std::size_t i = 0; i < corr.size(); ++i)
                    text << "C(" << i << ") = " << corr[i].to_string() << '\n';
        }
    }
    if (cfg.format == "json")
        out << dump(all.size() == 1 ? all[0] : json{{"sequences", all}});
    else
        out << text.str();
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact cross-correlation spectra of ternary m-sequences under d = 3^r+2 and d = 3^{2r}+2"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.workers = default_workers();

    const std::vector<std::string> case_choices{"A", "B", "both"};
    const std::vector<std::string> format_choices{"json", "csv", "text"};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(format_choices));
    };
    auto add_r_case = [&](CLI::App* sub) {
        sub->add_option("--r", cfg.r, "Subfield degree r (n = 3r)")->required();
        sub->add_option("--case", cfg.dcase, "A: d=3^r+2, B: d=3^{2r}+2")->check(CLI::IsMember(case_choices));
    };
    auto add_compute = [&](CLI::App* sub) {
        sub->add_option("--method", cfg.method, "Evaluation route")
            ->check(CLI::IsMember({"brute", "reduced", "sequence", "all"}));
        sub->add_option("--workers", cfg.workers, "Worker threads (default $" + std::string(kWorkersEnv) + ")")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--gauss-fast-path", cfg.gauss_fast_path, "Closed-form inner sum in the reduced route");
    };

    auto* field = app.add_subcommand("field", "Build and describe GF(3^m)");
    field->add_option("--m", cfg.m, "Extension degree")->required();
    field->add_option("--modulus", cfg.modulus, "Modulus digits, constant term first, e.g. 2,2,0,1");
    add_common(field);

    auto* tower = app.add_subcommand("tower", "Build the cubic tower and report its self-checks");
    add_r_case(tower);
    add_common(tower);

    auto* lemma = app.add_subcommand("lemma-check", "Check the closed trace forms against direct tower traces");
    add_r_case(lemma);
    lemma->add_option("--seed", cfg.seed, "Seed for sampled pairs");
    lemma->add_option("--samples", cfg.samples, "Sample count where enumeration is too large");
    add_common(lemma);

    auto* weil = app.add_subcommand("weil", "Evaluate one S_d(z)");
    add_r_case(weil);
    add_compute(weil);
    weil->add_option("--z", cfg.z, "z as subfield indices x0,x1,x2");
    weil->add_option("--tau", cfg.tau, "z = g^tau for the tower generator g");
    add_common(weil);

    auto* spectrum = app.add_subcommand("spectrum", "Full value distribution of S_d(z)");
    add_r_case(spectrum);
    add_compute(spectrum);
    spectrum->add_option("--domain", cfg.domain, "E or E_star")->check(CLI::IsMember({"E", "E_star"}));
    spectrum->add_option("--variant", cfg.variant, "Table variant for the audit annotation")
        ->check(CLI::IsMember({"paper", "moment_consistent", "both"}));
    spectrum->add_flag("--timing", cfg.timing, "Include elapsed_ms in json output");
    add_common(spectrum);

    auto* audit_cmd = app.add_subcommand("audit", "Compare computed spectra with closed-form tables");
    add_r_case(audit_cmd);
    add_compute(audit_cmd);
    audit_cmd->add_option("--domain", cfg.domain, "E or E_star")->check(CLI::IsMember({"E", "E_star"}));
    audit_cmd->add_option("--variant", cfg.variant, "Table variant(s) deciding the exit code")
        ->check(CLI::IsMember({"paper", "moment_consistent", "both"}));
    audit_cmd->add_flag("--timing", cfg.timing, "Include elapsed_ms in json output");
    add_common(audit_cmd);

    auto* seq = app.add_subcommand("seq", "Emit the m-sequence, its decimation and correlation values");
    add_r_case(seq);
    seq->add_flag("--correlation", cfg.correlation, "Also emit C(tau) for every shift");
    add_common(seq);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }

    try {
        if (*field)
            return cmd_field(cfg, out);
        if (*tower)
            return cmd_tower(cfg, out);
        if (*lemma)
            return cmd_lemma_check(cfg, out);
        if (*weil)
            return cmd_weil(cfg, out);
        if (*spectrum)
            return cmd_spectrum(cfg, out, err);
        if (*audit_cmd)
            return cmd_audit(cfg, out, err);
        if (*seq)
            return cmd_seq(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kFailure;
    }
    return kInvalid;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace tcorr::cli
