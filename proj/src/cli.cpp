#include "kstab/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>

#include "kstab/json_io.h"
#include "kstab/quadrature.h"
#include "kstab/stability.h"

namespace kstab {

namespace {

constexpr const char* kSchemaVersion = "1.0";

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

OrderedJson numeric_approx(double value, const char* method, double error_bound) {
    OrderedJson j;
    j["value"] = value;
    j["method"] = method;
    j["error_bound"] = error_bound;
    return j;
}

OrderedJson verdict_json(const StabilityVerdict& v) {
    OrderedJson j;
    j["classification"] = classification_name(v.classification);
    OrderedJson futaki;
    futaki["value"] = v.futaki;
    futaki["method"] = v.futaki_exact_zero ? "exact_rational" : pairing_method_name(v.futaki_method);
    j["futaki"] = std::move(futaki);
    OrderedJson margin;
    margin["value"] = v.margin;
    margin["method"] = pairing_method_name(v.margin_method);
    j["margin"] = std::move(margin);
    j["tolerance"] = v.tolerance;
    return j;
}

OrderedJson case_json(const CaseData& c) {
    OrderedJson j;
    j["dm_id"] = c.dm_id;
    j["mori_mukai"] = c.mori_mukai;
    OrderedJson poly = polytope_json(c.polytope);
    j["vertices"] = poly["vertices"];
    j["kappa"] = poly["kappa"];
    j["dh_exponent"] = poly["dh_exponent"];
    j["notes"] = c.notes;
    return j;
}

OrderedJson proofs_json(const std::vector<PieceSignProof>& proofs) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& p : proofs) {
        OrderedJson j;
        j["interval"] = OrderedJson::array({to_string(p.lo), to_string(p.hi)});
        j["piece_is_zero"] = p.piece_is_zero;
        OrderedJson roots = OrderedJson::array();
        for (const auto& r : p.roots) {
            OrderedJson rj;
            rj["interval"] = OrderedJson::array({to_string(r.lo), to_string(r.hi)});
            rj["multiplicity"] = r.multiplicity;
            roots.push_back(std::move(rj));
        }
        j["roots"] = std::move(roots);
        j["min_sample_value"] = to_string(p.min_sample_value);
        arr.push_back(std::move(j));
    }
    return arr;
}

void emit(std::ostream& out, const std::string& command, OrderedJson inputs, OrderedJson results,
          std::vector<std::string> provenance) {
    OrderedJson record;
    record["schema_version"] = kSchemaVersion;
    record["command"] = command;
    record["inputs"] = std::move(inputs);
    record["results"] = std::move(results);
    record["provenance"] = std::move(provenance);
    out << record.dump(2) << "\n";
}

int verdict_exit_code(Classification c) {
    switch (c) {
        case Classification::Polystable: return 0;
        case Classification::StrictlySemistable: return 3;
        case Classification::Unstable: return 4;
        case Classification::FutakiNonzero: return 5;
    }
    return 2;
}

std::pair<double, double> parse_bracket(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bracket expects lo,hi");
    auto num = [](const std::string& s) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument("bad bracket number: " + s);
        return v;
    };
    return {num(text.substr(0, comma)), num(text.substr(comma + 1))};
}

void write_plot_csv(const std::string& path, const CaseMeasures& cm, int samples) {
    if (samples < 2) throw std::invalid_argument("plot samples must be >= 2");
    std::ofstream csv(path, std::ios::binary);
    if (!csv) throw std::invalid_argument("cannot open plot file: " + path);
    csv << "y,density_mu,density_nu\n";
    const double lo = to_double(cm.polytope.min_y());
    const double hi = to_double(cm.polytope.max_y());
    for (int i = 0; i < samples; ++i) {
        const double y = lo + (hi - lo) * i / (samples - 1);
        csv << format_double(y) << "," << format_double(cm.mu.density.eval_double(y)) << ","
            << format_double(cm.nu.density.eval_double(y)) << "\n";
    }
}

struct CaseSelector {
    std::string id;
    std::string logpair_t;
    int quadric_n = 0;
    std::string polytope_file;

    int count() const {
        return (id.empty() ? 0 : 1) + (logpair_t.empty() ? 0 : 1) + (quadric_n != 0 ? 1 : 0) +
               (polytope_file.empty() ? 0 : 1);
    }

    CaseMeasures resolve() const {
        if (count() != 1)
            throw std::invalid_argument("select exactly one of: case id, --logpair, --quadric, --polytope-file");
        if (!id.empty()) return resolve_catalog_case(id);
        if (!logpair_t.empty()) return resolve_logpair(parse_rational(logpair_t));
        if (quadric_n != 0) return resolve_quadric(quadric_n);
        return resolve_custom("file:" + polytope_file, load_polytope_file(polytope_file));
    }

    OrderedJson echo() const {
        OrderedJson j;
        if (!id.empty()) j["id"] = id;
        if (!logpair_t.empty()) j["logpair_t"] = logpair_t;
        if (quadric_n != 0) j["quadric_n"] = quadric_n;
        if (!polytope_file.empty()) j["polytope_file"] = polytope_file;
        return j;
    }
};

int cmd_catalog(std::ostream& out, const std::string& id, const std::string& mm) {
    OrderedJson inputs;
    if (!id.empty()) inputs["id"] = id;
    if (!mm.empty()) inputs["mm"] = mm;
    OrderedJson rows = OrderedJson::array();
    if (!id.empty()) {
        rows.push_back(case_json(find_case(id)));
    } else if (!mm.empty()) {
        const auto matches = find_by_mori_mukai(mm);
        if (matches.empty()) throw UnknownCaseError("unknown Mori-Mukai id: " + mm);
        for (const auto* c : matches) rows.push_back(case_json(*c));
    } else {
        for (const auto& c : catalog()) rows.push_back(case_json(c));
    }
    OrderedJson results;
    results["count"] = rows.size();
    results["cases"] = std::move(rows);
    emit(out, "catalog", std::move(inputs), std::move(results),
         {"built-in rank-two catalog; vertices, kappa and DH exponent are exact rationals"});
    return 0;
}

int cmd_measures(std::ostream& out, const CaseSelector& sel, const std::string& plot_csv,
                 int samples) {
    const CaseMeasures cm = sel.resolve();
    OrderedJson inputs = sel.echo();
    if (!plot_csv.empty()) {
        inputs["plot_csv"] = plot_csv;
        inputs["samples"] = samples;
    }
    OrderedJson results;
    results["case"] = cm.label;
    results["support"] = OrderedJson::array(
        {to_string(cm.polytope.min_y()), to_string(cm.polytope.max_y())});
    results["mu"] = piecewise_json(cm.mu.density);
    results["nu"] = piecewise_json(cm.nu.density);
    if (cm.family == CaseFamily::Quadric)
        results["mu_folded_even"] = piecewise_json(quadric_mu_density(cm.quadric_n).density);
    if (!plot_csv.empty()) write_plot_csv(plot_csv, cm, samples);
    emit(out, "measures", std::move(inputs), std::move(results),
         {"densities derived by exact fiberwise integration of x^k over polytope slices",
          "rational coefficients are exact; pieces are listed in ascending powers of y"});
    return 0;
}

int cmd_check(std::ostream& out, const CaseSelector& sel, const std::string& weight_text,
              double tol) {
    const CaseMeasures cm = sel.resolve();
    const WeightSpec g = WeightSpec::parse(weight_text);
    const StabilityVerdict v = classify(cm, g, tol);
    OrderedJson inputs = sel.echo();
    inputs["weight"] = weight_text;
    inputs["tol"] = tol;
    OrderedJson results;
    results["case"] = cm.label;
    results["weight"] = g.describe();
    results["weight_is_even"] = g.is_even();
    results["verdict"] = verdict_json(v);
    emit(out, "check", std::move(inputs), std::move(results),
         {"futaki = nu(g), margin = mu(g); verdict thresholds are relative to the mu mass"});
    return verdict_exit_code(v.classification);
}

int cmd_threshold(std::ostream& out, const std::string& id, const std::string& family,
                  const std::string& bracket_text, double tol) {
    if (family != "cosh") throw std::invalid_argument("only the cosh family has a threshold search");
    ThresholdCase c;
    if (id == "3-2-18")
        c = ThresholdCase::Q3;
    else if (id == "3-2-19")
        c = ThresholdCase::MM2_29;
    else
        throw UnknownCaseError("threshold supports cases 3-2-18 and 3-2-19, got: " + id);
    const std::pair<double, double> bracket = parse_bracket(bracket_text);
    const ThresholdResult r = find_threshold(c, bracket, tol);

    OrderedJson inputs;
    inputs["id"] = id;
    inputs["family"] = family;
    inputs["bracket"] = OrderedJson::array({bracket.first, bracket.second});
    inputs["tol"] = tol;
    OrderedJson results;
    results["a0"] = numeric_approx(r.a0, "closed_form", r.residual);
    results["residual"] = r.residual;
    results["iterations"] = r.iterations;
    results["bracket"] = OrderedJson::array({r.bracket.first, r.bracket.second});
    results["quadrature_cross_check_delta"] = r.cross_check_delta;
    emit(out, "threshold", std::move(inputs), std::move(results),
         {"bisection plus secant on the exact cosh-family margin, cross-checked by quadrature"});
    return 0;
}

int cmd_certify(std::ostream& out, const std::string& id, const std::string& range_text, int grid) {
    const CaseMeasures cm = resolve_catalog_case(id);
    const std::pair<double, double> range_d = parse_bracket(range_text);
    const std::pair<Rational, Rational> range{Rational(range_d.first), Rational(range_d.second)};
    const auto cert = insensitivity_certificate(cm, range, grid);

    OrderedJson inputs;
    inputs["id"] = id;
    inputs["lambda_range"] = OrderedJson::array({to_string(range.first), to_string(range.second)});
    inputs["grid"] = grid;
    OrderedJson results;
    results["case"] = cm.label;
    results["found"] = cert.has_value();
    if (cert) {
        results["lambda"] = to_string(cert->lambda);
        results["combined_density"] = piecewise_json(cert->combined_density);
        results["proofs"] = proofs_json(cert->proofs);
    } else {
        results["message"] = "no certificate found on search set";
        results["search_set"] = "lambda = 0, 2, 2/3, plus the grid over lambda_range";
    }
    emit(out, "certify", std::move(inputs), std::move(results),
         {"certificate = exact nonnegativity of mu + lambda*nu on the full support",
          "absence on the search set is not a proof of weight-sensitivity"});
    return 0;
}

int cmd_logpair(std::ostream& out, double tol) {
    const double t0 = logpair_t0(tol);
    const Polynomial margin = logpair_margin_polynomial();
    const CaseMeasures cm = resolve_logpair(Rational(t0));
    const StabilityVerdict v_const = classify(cm, WeightSpec::constant(Rational(1)));
    const StabilityVerdict v_sech = classify(cm, WeightSpec::sech());

    OrderedJson inputs;
    inputs["tol"] = tol;
    OrderedJson results;
    results["t0"] = numeric_approx(t0, "closed_form", tol);
    results["margin_polynomial_in_t"] = polynomial_json(margin);
    OrderedJson verdicts;
    verdicts["const:1"] = verdict_json(v_const);
    verdicts["sech"] = verdict_json(v_sech);
    results["verdicts_at_t0"] = std::move(verdicts);
    emit(out, "logpair", std::move(inputs), std::move(results),
         {"t0 isolates the unique zero in (0,1) of the exact quartic margin polynomial mu_t(1)"});
    return 0;
}

int cmd_quadric(std::ostream& out, int n, int budget) {
    const CaseMeasures cm = resolve_quadric(n);
    const auto [weight, verdict] = destabilizing_weight(cm, budget);
    const auto* bump = std::get_if<BumpWeight>(&weight.variant());

    OrderedJson inputs;
    inputs["n"] = n;
    OrderedJson results;
    results["case"] = cm.label;
    results["indicator_interval"] =
        OrderedJson::array({to_string(make_rational(n - 2, n - 3)), to_string(Rational(n - 2))});
    results["weight"] = weight.describe();
    if (bump) results["epsilon"] = bump->epsilon;
    results["verdict"] = verdict_json(verdict);
    results["mu_folded_even"] = piecewise_json(quadric_mu_density(n).density);
    emit(out, "quadric", std::move(inputs), std::move(results),
         {"the folded density changes sign at (n-2)/(n-3); a narrow symmetric bump there "
          "destabilizes with exactly vanishing Futaki pairing"});
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"weighted K-stability of rank-two spherical Fano data"};
    app.require_subcommand(1);

    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in cases");
    std::string cat_id, cat_mm;
    catalog_cmd->add_option("--id", cat_id, "single case by catalog id");
    catalog_cmd->add_option("--mm", cat_mm, "filter by Mori-Mukai id");

    auto* measures_cmd = app.add_subcommand("measures", "emit the mu and nu densities");
    CaseSelector m_sel;
    measures_cmd->add_option("id", m_sel.id, "catalog case id");
    measures_cmd->add_option("--logpair", m_sel.logpair_t, "log-pair parameter t in [0,1)");
    measures_cmd->add_option("--quadric", m_sel.quadric_n, "quadric dimension parameter n >= 5");
    measures_cmd->add_option("--polytope-file", m_sel.polytope_file, "JSON polytope description");
    std::string plot_csv;
    int samples = 256;
    measures_cmd->add_option("--plot-csv", plot_csv, "write sampled densities as CSV");
    measures_cmd->add_option("--samples", samples, "CSV sample count (default 256)");

    auto* check_cmd = app.add_subcommand("check", "classify weighted K-stability");
    CaseSelector c_sel;
    check_cmd->add_option("id", c_sel.id, "catalog case id");
    check_cmd->add_option("--logpair", c_sel.logpair_t, "log-pair parameter t in [0,1)");
    check_cmd->add_option("--quadric", c_sel.quadric_n, "quadric dimension parameter n >= 5");
    check_cmd->add_option("--polytope-file", c_sel.polytope_file, "JSON polytope description");
    std::string weight_text;
    double check_tol = 1e-9;
    check_cmd->add_option("--weight", weight_text, "weight spec, e.g. cosh:a=2")->required();
    check_cmd->add_option("--tol", check_tol, "relative verdict tolerance (default 1e-9)");

    auto* threshold_cmd = app.add_subcommand("threshold", "semistable cosh-family threshold");
    std::string t_id, t_family = "cosh", t_bracket = "0.1,4";
    double t_tol = 1e-10;
    threshold_cmd->add_option("id", t_id, "3-2-18 or 3-2-19")->required();
    threshold_cmd->add_option("--family", t_family, "weight family (cosh)");
    threshold_cmd->add_option("--bracket", t_bracket, "search bracket lo,hi (default 0.1,4)");
    threshold_cmd->add_option("--tol", t_tol, "residual tolerance (default 1e-10)");

    auto* certify_cmd = app.add_subcommand("certify", "search a weight-insensitivity certificate");
    std::string cert_id, cert_range = "-10,10";
    int cert_grid = 1000;
    certify_cmd->add_option("id", cert_id, "catalog case id")->required();
    certify_cmd->add_option("--lambda-range", cert_range, "lambda search range lo,hi");
    certify_cmd->add_option("--grid", cert_grid, "grid subdivisions (default 1000)");

    auto* logpair_cmd = app.add_subcommand("logpair", "log-pair threshold t0 and verdicts");
    double lp_tol = 1e-9;
    logpair_cmd->add_option("--tol", lp_tol, "t0 refinement tolerance (default 1e-9)");

    auto* quadric_cmd = app.add_subcommand("quadric", "destabilizing weight for a quadric");
    int q_n = 0;
    int q_budget = 16;
    quadric_cmd->add_option("n", q_n, "dimension parameter n >= 5")->required();
    quadric_cmd->add_option("--budget", q_budget, "epsilon halvings to try (default 16)");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        app.exit(e, err, err);
        return 2;
    }

    try {
        if (app.got_subcommand(catalog_cmd)) return cmd_catalog(out, cat_id, cat_mm);
        if (app.got_subcommand(measures_cmd)) return cmd_measures(out, m_sel, plot_csv, samples);
        if (app.got_subcommand(check_cmd)) return cmd_check(out, c_sel, weight_text, check_tol);
        if (app.got_subcommand(threshold_cmd))
            return cmd_threshold(out, t_id, t_family, t_bracket, t_tol);
        if (app.got_subcommand(certify_cmd)) return cmd_certify(out, cert_id, cert_range, cert_grid);
        if (app.got_subcommand(logpair_cmd)) return cmd_logpair(out, lp_tol);
        if (app.got_subcommand(quadric_cmd)) return cmd_quadric(out, q_n, q_budget);
        err << "error: no subcommand\n";
        return 2;
    } catch (const BracketError& e) {
        err << "error: " << e.what() << "\n";
        return 6;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << " (best estimate " << e.best_estimate << ")\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace kstab
