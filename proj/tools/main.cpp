#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperg/hyperg.hpp"
#include "hyperg/records.hpp"
#include "hyperg/sampling.hpp"

namespace {

using hyperg::JobSpec;
using hyperg::json;
using hyperg::ResultRecord;

enum class ExitClass : int { ok = 0, failure = 1, input = 2 };

// Resolved global defaults; per-job fields override them.
struct Defaults {
    double tol_rel = 1e-10;
    double tol_abs = 1e-12;
    std::int64_t max_terms = 2'000'000;
    double quad_error = 1e-10;
    std::uint64_t seed = 20260816;
    bool auto_transform = false;
    // The CLI defaults to corrected unit-argument sums; --no-tail-correction
    // restores bare partial-sum semantics (the library-level default).
    bool tail_correction = true;
};

struct Failure {
    std::string kind;
    std::string message;
    ExitClass exit;
};

Failure classify(const std::exception& e) {
    using namespace hyperg;
    const std::string msg = e.what();
    if (dynamic_cast<const PreconditionError*>(&e)) return {"precondition", msg, ExitClass::input};
    if (dynamic_cast<const LowerPoleError*>(&e)) return {"lower-pole", msg, ExitClass::input};
    if (dynamic_cast<const PoleError*>(&e)) return {"pole", msg, ExitClass::input};
    if (dynamic_cast<const DivergenceError*>(&e)) return {"divergence", msg, ExitClass::input};
    if (dynamic_cast<const SlowConvergenceError*>(&e))
        return {"slow-convergence", msg, ExitClass::input};
    if (dynamic_cast<const NoValidRepresentationError*>(&e))
        return {"no-valid-representation", msg, ExitClass::input};
    if (dynamic_cast<const ZeroDenominatorError*>(&e))
        return {"zero-denominator", msg, ExitClass::input};
    if (dynamic_cast<const DomainError*>(&e)) return {"domain", msg, ExitClass::input};
    if (dynamic_cast<const AccuracyNotReached*>(&e)) return {"accuracy", msg, ExitClass::failure};
    if (dynamic_cast<const Error*>(&e)) return {"internal", msg, ExitClass::failure};
    return {"input", msg, ExitClass::input};
}

hyperg::Tolerance tol_of(const JobSpec& s, const Defaults& g) {
    return {s.tol_rel.value_or(g.tol_rel), s.tol_abs.value_or(g.tol_abs),
            s.max_terms.value_or(g.max_terms)};
}

hyperg::QuadratureConfig quad_of(const JobSpec& s, const Defaults& g) {
    return {s.quad_error.value_or(g.quad_error), 10};
}

const std::vector<double>& require_params(const JobSpec& s,
                                          std::initializer_list<std::size_t> sizes) {
    if (!s.params) throw hyperg::DomainError("this command requires params");
    for (double v : *s.params)
        if (!std::isfinite(v)) throw hyperg::DomainError("parameters must be finite");
    std::string want;
    for (std::size_t n : sizes) {
        if (s.params->size() == n) return *s.params;
        want += (want.empty() ? "" : " or ") + std::to_string(n);
    }
    throw hyperg::DomainError("expected " + want + " parameters, got " +
                              std::to_string(s.params->size()));
}

void echo_tolerance(ResultRecord& rec, const hyperg::Tolerance& tol) {
    rec.inputs["tol_rel"] = tol.rel;
    rec.inputs["tol_abs"] = tol.abs;
    rec.inputs["max_terms"] = tol.max_terms;
}

void fill_series(ResultRecord& rec, const hyperg::SeriesResult& r) {
    rec.value = r.value;
    rec.diagnostics["terms_used"] = r.terms_used;
    rec.diagnostics["tail_bound"] = r.tail_bound;
    rec.diagnostics["converged"] = r.converged;
    rec.diagnostics["terminated_exactly"] = r.terminated_exactly;
    rec.diagnostics["tail_corrected"] = r.tail_corrected;
}

json prefactor_json(const hyperg::GammaRatio& r) {
    json j = json::object();
    j["numerator_args"] = r.numerator_args;
    j["denominator_args"] = r.denominator_args;
    return j;
}

void cmd_eval(const JobSpec& spec, const Defaults& g, ResultRecord& rec, ExitClass& exit_class) {
    using namespace hyperg;
    const auto& ps = require_params(spec, {3, 5});
    const Tolerance tol = tol_of(spec, g);
    const bool corrected = spec.tail_correction.value_or(g.tail_correction);
    const TailCorrection tc = corrected ? TailCorrection::on : TailCorrection::off;
    rec.inputs["params"] = ps;
    echo_tolerance(rec, tol);
    rec.inputs["tail_correction"] = corrected;

    SeriesResult r;
    if (ps.size() == 3) {
        const double x = spec.x.value_or(1.0);
        rec.inputs["x"] = x;
        r = sum_2f1({ps[0], ps[1], ps[2]}, x, tol, tc);
    } else {
        if (spec.x && *spec.x != 1.0)
            throw DomainError("the five-parameter series is evaluated at unit argument only");
        const Params3F2 p{ps[0], ps[1], ps[2], ps[3], ps[4]};
        const bool auto_t = spec.auto_transform.value_or(g.auto_transform);
        rec.inputs["auto_transform"] = auto_t;
        if (auto_t) {
            const Transformed3F2 t = choose_representation(p);
            rec.diagnostics["representation"] = to_string(t.name);
            if (t.name != Identity3F2::identity) {
                rec.diagnostics["image_params"] = {t.params.a, t.params.b, t.params.c, t.params.d,
                                                   t.params.e};
                rec.diagnostics["prefactor"] = prefactor_json(t.prefactor);
            }
            r = evaluate_transformed(t, tol, tc);
        } else {
            r = sum_3f2_unit(p, tol, tc);
        }
    }
    fill_series(rec, r);
    if (!r.converged) {
        rec.error = "accuracy: series did not converge within the term budget";
        exit_class = ExitClass::failure;
    }
}

void cmd_transform(const JobSpec& spec, const Defaults& g, ResultRecord& rec) {
    using namespace hyperg;
    if (!spec.identity) throw DomainError("transform requires an identity name");
    const std::string& id = *spec.identity;
    (void)g;

    if (id == "euler-second") {
        const auto& ps = require_params(spec, {3});
        rec.inputs["params"] = ps;
        rec.inputs["identity"] = id;
        const Transformed2F1 t = euler_second_map({ps[0], ps[1], ps[2]});
        rec.diagnostics["power_exponent"] = t.power_exponent;
        rec.diagnostics["image_params"] = {t.params.a, t.params.b, t.params.c};
        return;
    }

    const auto& ps = require_params(spec, {5});
    rec.inputs["params"] = ps;
    rec.inputs["identity"] = id;
    const Params3F2 p{ps[0], ps[1], ps[2], ps[3], ps[4]};
    Transformed3F2 t;
    if (id == "thomae")
        t = thomae_map(p);
    else if (id == "kummer")
        t = kummer_map(p);
    else if (id == "choose")
        t = choose_representation(p);
    else
        throw DomainError("unknown identity \"" + id +
                          "\" (expected thomae, kummer, euler-second, or choose)");
    rec.diagnostics["representation"] = to_string(t.name);
    rec.diagnostics["image_params"] = {t.params.a, t.params.b, t.params.c, t.params.d, t.params.e};
    rec.diagnostics["image_excess"] = excess_3f2(t.params);
    rec.diagnostics["prefactor"] = prefactor_json(t.prefactor);
    rec.diagnostics["prefactor_value"] = gamma_ratio_eval(t.prefactor);
}

void cmd_closed_form(const JobSpec& spec, const Defaults& g, ResultRecord& rec) {
    using namespace hyperg;
    (void)g;
    if (!spec.identity) throw DomainError("closed-form requires an identity name");
    const std::string& id = *spec.identity;
    rec.inputs["identity"] = id;
    if (id == "gauss") {
        const auto& ps = require_params(spec, {3});
        rec.inputs["params"] = ps;
        rec.value = gauss_sum({ps[0], ps[1], ps[2]});
        return;
    }
    if (id == "saalschutz") {
        if (!spec.n || !spec.a || !spec.b || !spec.c)
            throw DomainError("saalschutz closed form requires n, a, b, c");
        const Rational a = Rational::parse(*spec.a), b = Rational::parse(*spec.b),
                       c = Rational::parse(*spec.c);
        rec.inputs["n"] = *spec.n;
        rec.inputs["a"] = a.to_string();
        rec.inputs["b"] = b.to_string();
        rec.inputs["c"] = c.to_string();
        const Rational v = saalschutz_sum(*spec.n, a, b, c);
        rec.exact = v.to_string();
        rec.value = v.to_double();
        return;
    }
    throw DomainError("unknown identity \"" + id + "\" (expected gauss or saalschutz)");
}

// Internal evaluation tolerance for verification: comfortably tighter than
// any of the documented comparison thresholds.
hyperg::Tolerance verify_tol(const JobSpec& spec, const Defaults& g) {
    return {1e-12, 1e-13, spec.max_terms.value_or(g.max_terms)};
}

void cmd_verify(const JobSpec& spec, const Defaults& g, ResultRecord& rec,
                ExitClass& exit_class) {
    using namespace hyperg;
    using namespace hyperg::sampling;
    if (!spec.identity) throw DomainError("verify requires an identity name");
    const std::string& id = *spec.identity;
    rec.inputs["identity"] = id;
    const Tolerance tight = verify_tol(spec, g);
    const QuadratureConfig qcfg{std::fmin(1e-9, spec.quad_error.value_or(g.quad_error)), 10};

    json cases = json::array();
    std::int64_t npass = 0, nfail = 0;
    const auto push = [&](json detail, bool ok) {
        detail["pass"] = ok;
        cases.push_back(std::move(detail));
        (ok ? npass : nfail) += 1;
    };

    const auto run_gauss = [&](const Params2F1& p, double thr) {
        const double lhs = sum_2f1({p.a, p.b, p.c}, 1.0, tight, TailCorrection::on).value;
        const double rhs = gauss_sum(p);
        const double rel = std::fabs(lhs - rhs) / std::fabs(rhs);
        json d{{"params", {p.a, p.b, p.c}}, {"series", lhs}, {"closed_form", rhs},
               {"rel_error", rel}};
        push(std::move(d), rel <= thr);
    };
    const auto run_series_identity = [&](const Params3F2& p, double thr, bool thomae) {
        const double lhs = sum_3f2_unit(p, tight, TailCorrection::on).value;
        const Transformed3F2 t = thomae ? thomae_map(p) : kummer_map(p);
        const double rhs = evaluate_transformed(t, tight, TailCorrection::on).value;
        const double rel = std::fabs(lhs - rhs) / std::fabs(rhs);
        json d{{"params", {p.a, p.b, p.c, p.d, p.e}}, {"direct", lhs}, {"transformed", rhs},
               {"rel_error", rel}};
        push(std::move(d), rel <= thr);
    };
    const auto run_euler = [&](const Params2F1& p, const std::vector<double>& xs, double thr) {
        double worst = 0.0;
        const Transformed2F1 t = euler_second_map(p);
        for (double x : xs) {
            const double lhs = sum_2f1(p, x, tight).value;
            const double rhs = std::pow(1.0 - x, t.power_exponent) *
                               sum_2f1(t.params, x, tight).value;
            worst = std::fmax(worst, std::fabs(lhs - rhs) / std::fabs(rhs));
        }
        json d{{"params", {p.a, p.b, p.c}}, {"x", xs}, {"max_rel_error", worst}};
        push(std::move(d), worst <= thr);
    };
    const auto run_saals = [&](const SaalschutzCase& sc) {
        const Params3F2Q p{Rational{-sc.n}, sc.a, sc.b, sc.c,
                           Rational{1} + sc.a + sc.b - sc.c - Rational{sc.n}};
        const Rational lhs = sum_3f2_terminating_exact(p, sc.n);
        const Rational rhs = saalschutz_sum(sc.n, sc.a, sc.b, sc.c);
        json d{{"n", sc.n},
               {"a", sc.a.to_string()},
               {"b", sc.b.to_string()},
               {"c", sc.c.to_string()},
               {"series_exact", lhs.to_string()},
               {"closed_form_exact", rhs.to_string()}};
        push(std::move(d), lhs == rhs);
    };
    const auto run_integral = [&](const Params3F2& p, double thr) {
        const double lhs = euler_integral_3f2(p, qcfg, tight);
        const double rhs = sum_3f2_unit(p, tight, TailCorrection::on).value;
        const double err = std::fabs(lhs - rhs);
        json d{{"params", {p.a, p.b, p.c, p.d, p.e}}, {"integral", lhs}, {"series", rhs},
               {"abs_error", err}};
        push(std::move(d), err <= thr);
    };

    const std::int64_t n_random = spec.random.value_or(0);
    if (spec.random && n_random < 1) throw DomainError("random must be >= 1");
    std::mt19937_64 rng(spec.seed.value_or(g.seed));
    if (n_random > 0) {
        rec.inputs["random"] = n_random;
        rec.inputs["seed"] = spec.seed.value_or(g.seed);
    }

    if (id == "gauss") {
        const double thr = spec.tol_rel.value_or(1e-10);
        rec.inputs["threshold_rel"] = thr;
        if (n_random > 0)
            for (std::int64_t i = 0; i < n_random; ++i) run_gauss(gauss_case(rng), thr);
        else {
            const auto& ps = require_params(spec, {3});
            run_gauss({ps[0], ps[1], ps[2]}, thr);
        }
    } else if (id == "thomae" || id == "kummer") {
        const double thr = spec.tol_rel.value_or(1e-9);
        rec.inputs["threshold_rel"] = thr;
        const bool is_thomae = id == "thomae";
        if (n_random > 0)
            for (std::int64_t i = 0; i < n_random; ++i)
                run_series_identity(is_thomae ? thomae_case(rng) : kummer_case(rng), thr,
                                    is_thomae);
        else {
            const auto& ps = require_params(spec, {5});
            run_series_identity({ps[0], ps[1], ps[2], ps[3], ps[4]}, thr, is_thomae);
        }
    } else if (id == "euler-second") {
        const double thr = spec.tol_rel.value_or(1e-10);
        rec.inputs["threshold_rel"] = thr;
        const std::vector<double> grid(std::begin(euler_x_grid), std::end(euler_x_grid));
        if (n_random > 0)
            for (std::int64_t i = 0; i < n_random; ++i) run_euler(euler_case(rng), grid, thr);
        else {
            const auto& ps = require_params(spec, {3});
            run_euler({ps[0], ps[1], ps[2]},
                      spec.x ? std::vector<double>{*spec.x} : grid, thr);
        }
    } else if (id == "saalschutz") {
        if (n_random > 0)
            for (std::int64_t i = 0; i < n_random; ++i) run_saals(saalschutz_case(rng));
        else {
            if (!spec.n || !spec.a || !spec.b || !spec.c)
                throw DomainError("saalschutz verification requires n, a, b, c");
            run_saals({*spec.n, Rational::parse(*spec.a), Rational::parse(*spec.b),
                       Rational::parse(*spec.c)});
        }
    } else if (id == "integral") {
        const double thr = spec.tol_abs.value_or(1e-8);
        rec.inputs["threshold_abs"] = thr;
        if (n_random > 0)
            for (std::int64_t i = 0; i < n_random; ++i) run_integral(integral_case(rng), thr);
        else {
            const auto& ps = require_params(spec, {5});
            run_integral({ps[0], ps[1], ps[2], ps[3], ps[4]}, thr);
        }
    } else {
        throw DomainError("unknown identity \"" + id +
                          "\" (expected gauss, saalschutz, thomae, kummer, euler-second, or "
                          "integral)");
    }

    rec.diagnostics["cases"] = std::move(cases);
    rec.diagnostics["pass_count"] = npass;
    rec.diagnostics["fail_count"] = nfail;
    rec.pass = nfail == 0;
    if (nfail > 0) exit_class = ExitClass::failure;
}

void cmd_prove(const JobSpec& spec, const Defaults& g, ResultRecord& rec, ExitClass& exit_class) {
    using namespace hyperg;
    const auto& ps = require_params(spec, {5});
    const double chain_tol = spec.tol_abs.value_or(1e-8);
    const Tolerance tol{spec.tol_rel.value_or(1e-12), 1e-13, spec.max_terms.value_or(g.max_terms)};
    const QuadratureConfig qcfg = quad_of(spec, g);
    rec.inputs["params"] = ps;
    rec.inputs["chain_tolerance"] = chain_tol;

    const ProofChainReport rep =
        prove_chain({ps[0], ps[1], ps[2], ps[3], ps[4]}, qcfg, tol, chain_tol);
    json stages = json::array();
    for (const auto& sv : rep.stage_values) stages.push_back({{"label", sv.label},
                                                              {"value", sv.value}});
    rec.diagnostics["stages"] = std::move(stages);
    rec.diagnostics["max_pairwise_discrepancy"] = rep.max_pairwise_discrepancy;
    rec.diagnostics["tolerance"] = rep.tolerance;
    rec.diagnostics["reorder_consistent"] = rep.reorder_consistent;
    rec.diagnostics["notes"] = rep.diagnostics;
    rec.pass = rep.pass;
    if (!rep.pass) exit_class = ExitClass::failure;
}

std::pair<ResultRecord, ExitClass> run_job(const JobSpec& spec, const Defaults& g) {
    ResultRecord rec;
    rec.command = spec.command;
    ExitClass exit_class = ExitClass::ok;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (spec.command == "eval")
            cmd_eval(spec, g, rec, exit_class);
        else if (spec.command == "transform")
            cmd_transform(spec, g, rec);
        else if (spec.command == "verify")
            cmd_verify(spec, g, rec, exit_class);
        else if (spec.command == "prove")
            cmd_prove(spec, g, rec, exit_class);
        else if (spec.command == "closed-form")
            cmd_closed_form(spec, g, rec);
        else
            throw hyperg::DomainError("unknown command \"" + spec.command + "\"");
    } catch (const std::exception& e) {
        const Failure f = classify(e);
        rec.error = f.kind + ": " + f.message;
        exit_class = f.exit;
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return {rec, exit_class};
}

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_params_line(const json& ps) {
    std::string line;
    for (const auto& v : ps) line += (line.empty() ? "" : " ") + fmt15(v.get<double>());
    std::cout << "params = " << line << "\n";
}

void print_text(const ResultRecord& rec) {
    const json& d = rec.diagnostics;
    if (rec.command == "eval") {
        if (rec.value) std::cout << "value = " << fmt15(*rec.value) << "\n";
        if (d.contains("representation"))
            std::cout << "representation = " << d["representation"].get<std::string>() << "\n";
        if (d.contains("terms_used")) {
            std::cout << "terms used = " << d["terms_used"].get<std::int64_t>() << "\n";
            std::cout << "tail bound = " << fmt15(d["tail_bound"].get<double>()) << "\n";
            std::cout << "converged = " << yesno(d["converged"].get<bool>()) << "\n";
            std::cout << "terminated exactly = " << yesno(d["terminated_exactly"].get<bool>())
                      << "\n";
            std::cout << "tail corrected = " << yesno(d["tail_corrected"].get<bool>()) << "\n";
        }
    } else if (rec.command == "transform") {
        if (d.contains("power_exponent")) {
            std::cout << "power exponent on (1-x) = " << fmt15(d["power_exponent"].get<double>())
                      << "\n";
        } else if (d.contains("representation")) {
            std::cout << "representation = " << d["representation"].get<std::string>() << "\n";
        }
        if (d.contains("image_params")) {
            std::string line;
            for (const auto& v : d["image_params"]) line += (line.empty() ? "" : " ") + fmt15(v.get<double>());
            std::cout << "image params = " << line << "\n";
        }
        if (d.contains("image_excess"))
            std::cout << "image excess = " << fmt15(d["image_excess"].get<double>()) << "\n";
        if (d.contains("prefactor")) {
            const auto args = [](const json& a) {
                std::string s;
                for (const auto& v : a) {
                    if (!s.empty()) s += " ";
                    s += "Gamma(";
                    char buf[64];
                    std::snprintf(buf, sizeof buf, "%.15g", v.get<double>());
                    s += buf;
                    s += ")";
                }
                return s.empty() ? std::string("1") : s;
            };
            std::cout << "prefactor = " << args(d["prefactor"]["numerator_args"]) << " / "
                      << args(d["prefactor"]["denominator_args"]) << "\n";
        }
        if (d.contains("prefactor_value"))
            std::cout << "prefactor value = " << fmt15(d["prefactor_value"].get<double>()) << "\n";
    } else if (rec.command == "verify") {
        std::cout << "identity = " << rec.inputs["identity"].get<std::string>() << "\n";
        std::int64_t i = 0;
        if (d.contains("cases"))
            for (const auto& c : d["cases"]) {
                ++i;
                std::cout << "case " << i << ": " << (c["pass"].get<bool>() ? "PASS" : "FAIL");
                if (c.contains("rel_error"))
                    std::cout << " rel error " << fmt15(c["rel_error"].get<double>());
                else if (c.contains("max_rel_error"))
                    std::cout << " max rel error " << fmt15(c["max_rel_error"].get<double>());
                else if (c.contains("abs_error"))
                    std::cout << " abs error " << fmt15(c["abs_error"].get<double>());
                else if (c.contains("series_exact"))
                    std::cout << " exact " << c["series_exact"].get<std::string>();
                std::cout << "\n";
            }
        if (d.contains("pass_count"))
            std::cout << d["pass_count"].get<std::int64_t>() << " pass / "
                      << d["fail_count"].get<std::int64_t>() << " fail\n";
    } else if (rec.command == "prove") {
        if (d.contains("stages")) {
            for (const auto& sv : d["stages"]) {
                char buf[128];
                std::snprintf(buf, sizeof buf, "%-28s %s", sv["label"].get<std::string>().c_str(),
                              fmt15(sv["value"].get<double>()).c_str());
                std::cout << buf << "\n";
            }
            std::cout << "max pairwise discrepancy = "
                      << fmt15(d["max_pairwise_discrepancy"].get<double>()) << "\n";
            std::cout << "tolerance = " << fmt15(d["tolerance"].get<double>()) << "\n";
            for (const auto& note : d["notes"]) std::cout << "note: " << note.get<std::string>() << "\n";
        }
        if (rec.pass) std::cout << (*rec.pass ? "PASS" : "FAIL") << "\n";
    } else if (rec.command == "closed-form") {
        if (rec.exact) std::cout << "exact = " << *rec.exact << "\n";
        if (rec.value) std::cout << "value = " << fmt15(*rec.value) << "\n";
    }
    if (rec.error) std::cout << "error = " << *rec.error << "\n";
}

int emit(const std::pair<ResultRecord, ExitClass>& out, const std::string& format) {
    const auto& [rec, exit_class] = out;
    if (exit_class == ExitClass::input) {
        // Input-class problems produce no result record: one parsable line.
        std::cerr << "error: " << *rec.error << "\n";
        return static_cast<int>(exit_class);
    }
    if (format == "json")
        std::cout << hyperg::to_json(rec).dump() << "\n";
    else
        print_text(rec);
    return static_cast<int>(exit_class);
}

int run_batch(const std::string& in_path, const std::string& out_path, const Defaults& g) {
    std::ifstream fin;
    std::istream* in = &std::cin;
    if (in_path != "-") {
        fin.open(in_path);
        if (!fin) {
            std::cerr << "error: input: cannot open \"" << in_path << "\"\n";
            return static_cast<int>(ExitClass::input);
        }
        in = &fin;
    }
    std::ofstream fout;
    std::ostream* out = &std::cout;
    if (out_path != "-") {
        fout.open(out_path);
        if (!fout) {
            std::cerr << "error: input: cannot open \"" << out_path << "\" for writing\n";
            return static_cast<int>(ExitClass::input);
        }
        out = &fout;
    }

    std::int64_t npass = 0, nfail = 0, lineno = 0;
    std::string line;
    while (std::getline(*in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ResultRecord rec;
        ExitClass ec = ExitClass::ok;
        try {
            const json j = json::parse(line);
            JobSpec spec = hyperg::job_from_json(j);
            if (spec.command == "batch")
                throw hyperg::DomainError("nested batch jobs are not allowed");
            std::tie(rec, ec) = run_job(spec, g);
        } catch (const std::exception& e) {
            rec = ResultRecord{};
            rec.command = "invalid";
            rec.error = std::string("input: line ") + std::to_string(lineno) + ": " + e.what();
            ec = ExitClass::input;
        }
        *out << hyperg::to_json(rec).dump() << "\n";
        (ec == ExitClass::ok ? npass : nfail) += 1;
    }
    if (npass + nfail == 0)
        std::cerr << "0 jobs\n";
    else
        std::cerr << npass << " pass / " << nfail << " fail\n";
    return nfail > 0 ? static_cast<int>(ExitClass::failure) : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "unit-argument hypergeometric series: evaluation, parameter "
        "transformations, closed forms, and identity verification"};
    app.require_subcommand(1);

    Defaults g;
    std::string format = "text";
    bool no_tail_correction = false;
    app.add_option("--tol-rel", g.tol_rel, "relative series tolerance")->capture_default_str();
    auto* opt_tol_abs =
        app.add_option("--tol-abs", g.tol_abs, "absolute series tolerance; for prove, the "
                                               "whole-chain tolerance (default 1e-8 there)")
            ->capture_default_str();
    app.add_option("--max-terms", g.max_terms, "series term budget")->capture_default_str();
    app.add_option("--quad-error", g.quad_error, "quadrature absolute error target")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized verification")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--auto-transform", g.auto_transform,
                 "evaluate through the representation with the largest excess");
    app.add_flag("--no-tail-correction", no_tail_correction,
                 "bare partial sums: do not add the fitted tail estimate");

    std::vector<double> params;
    double x_value = 1.0;
    std::string identity;
    std::int64_t n_value = 0;
    std::string a_str, b_str, c_str;
    std::int64_t random_count = 0;
    std::string in_path = "-", out_path = "-";

    auto* sc_eval = app.add_subcommand("eval", "evaluate a series");
    auto* eval_params = sc_eval->add_option("--params", params,
                                            "3 parameters (a,b,c) or 5 (a,b,c,d,e)")
                            ->delimiter(',')
                            ->required();
    auto* eval_x = sc_eval->add_option("--x", x_value, "argument for the 3-parameter series");

    auto* sc_transform = app.add_subcommand("transform", "print a transformed representation");
    sc_transform->add_option("--identity", identity, "thomae | kummer | euler-second | choose")
        ->required();
    auto* tr_params = sc_transform->add_option("--params", params, "series parameters")
                          ->delimiter(',')
                          ->required();

    auto* sc_verify = app.add_subcommand("verify", "check an identity numerically");
    sc_verify
        ->add_option("--identity", identity,
                     "gauss | saalschutz | thomae | kummer | euler-second | integral")
        ->required();
    auto* vf_params = sc_verify->add_option("--params", params, "explicit case")->delimiter(',');
    auto* vf_x = sc_verify->add_option("--x", x_value, "argument (euler-second only)");
    auto* vf_random = sc_verify->add_option("--random", random_count, "number of sampled cases");
    auto* vf_n = sc_verify->add_option("--n", n_value, "termination index (saalschutz)");
    auto* vf_a = sc_verify->add_option("--a", a_str, "rational parameter (saalschutz)");
    auto* vf_b = sc_verify->add_option("--b", b_str, "rational parameter (saalschutz)");
    auto* vf_c = sc_verify->add_option("--c", c_str, "rational parameter (saalschutz)");

    auto* sc_prove = app.add_subcommand("prove",
                                        "evaluate every stage of the derivation chain");
    auto* pv_params =
        sc_prove->add_option("--params", params, "5 parameters")->delimiter(',')->required();

    auto* sc_closed = app.add_subcommand("closed-form", "evaluate a closed form");
    sc_closed->add_option("--identity", identity, "gauss | saalschutz")->required();
    auto* cf_params = sc_closed->add_option("--params", params, "gauss parameters")->delimiter(',');
    auto* cf_n = sc_closed->add_option("--n", n_value, "termination index");
    auto* cf_a = sc_closed->add_option("--a", a_str, "rational parameter");
    auto* cf_b = sc_closed->add_option("--b", b_str, "rational parameter");
    auto* cf_c = sc_closed->add_option("--c", c_str, "rational parameter");

    auto* sc_batch = app.add_subcommand("batch", "run JSONL jobs; one record per line");
    sc_batch->add_option("--input", in_path, "job file, - for stdin")->capture_default_str();
    sc_batch->add_option("--output", out_path, "record file, - for stdout")
        ->capture_default_str();

    for (auto* sc : {sc_eval, sc_transform, sc_verify, sc_prove, sc_closed, sc_batch})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints usage; 0 for --help/--version
        return code == 0 ? 0 : static_cast<int>(ExitClass::input);
    }
    g.tail_correction = !no_tail_correction;

    if (sc_batch->parsed()) return run_batch(in_path, out_path, g);

    JobSpec spec;
    const auto take_common = [&](CLI::Option* p_opt) {
        if (p_opt && p_opt->count()) spec.params = params;
    };
    if (sc_eval->parsed()) {
        spec.command = "eval";
        take_common(eval_params);
        if (eval_x->count()) spec.x = x_value;
    } else if (sc_transform->parsed()) {
        spec.command = "transform";
        spec.identity = identity;
        take_common(tr_params);
    } else if (sc_verify->parsed()) {
        spec.command = "verify";
        spec.identity = identity;
        take_common(vf_params);
        if (vf_x->count()) spec.x = x_value;
        if (vf_random->count()) spec.random = random_count;
        if (vf_n->count()) spec.n = n_value;
        if (vf_a->count()) spec.a = a_str;
        if (vf_b->count()) spec.b = b_str;
        if (vf_c->count()) spec.c = c_str;
    } else if (sc_prove->parsed()) {
        spec.command = "prove";
        take_common(pv_params);
        if (opt_tol_abs->count()) spec.tol_abs = g.tol_abs;
    } else if (sc_closed->parsed()) {
        spec.command = "closed-form";
        spec.identity = identity;
        take_common(cf_params);
        if (cf_n->count()) spec.n = n_value;
        if (cf_a->count()) spec.a = a_str;
        if (cf_b->count()) spec.b = b_str;
        if (cf_c->count()) spec.c = c_str;
    }
    return emit(run_job(spec, g), format);
}
