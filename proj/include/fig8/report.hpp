#pragma once

#include "fig8/oracle.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

#ifndef FIG8_VERSION
#define FIG8_VERSION "0.1.0"
#endif
#ifndef FIG8_SOURCE_HASH
#define FIG8_SOURCE_HASH "dev"
#endif
#ifndef FIG8_GOLDEN_DIR
#define FIG8_GOLDEN_DIR ""
#endif

namespace fig8 {

struct RunConfig {
    unsigned precision_bits = kDefaultPrecisionBits;
    double tol_residual = 1e-9;
    double tol_dedup = 1e-9;
    double tol_table = 1e-3;
    double tol_round = 1e-6;
    double tol_class = 1e-9;
    std::string output_format = "markdown";  // json | csv | markdown
    std::string cache_dir;                   // empty: caching disabled
    std::string data_dir = FIG8_GOLDEN_DIR;  // golden fixtures location
    bool show_all = false;

    void validate() const {
        if (tol_residual <= 0 || tol_dedup <= 0 || tol_table <= 0 || tol_round <= 0 ||
            tol_class <= 0)
            throw std::invalid_argument("tolerances must be positive");
        if (precision_bits < kMinPrecisionBits)
            throw std::invalid_argument("precision_bits must be >= 53");
        if (output_format != "json" && output_format != "csv" && output_format != "markdown")
            throw std::invalid_argument("output format must be json, csv or markdown");
    }
};

template <class R>
ComputeOptions<R> make_compute_options(const RunConfig& cfg) {
    ComputeOptions<R> opt;
    opt.enumerate.tol_residual = R(cfg.tol_residual);
    opt.tol_dedup = R(cfg.tol_dedup);
    opt.tol_class = R(cfg.tol_class);
    opt.tol_round = R(cfg.tol_round);
    return opt;
}

struct MemberReport {
    std::string s_re, s_im, t_re, t_im;
    std::string branch;  // "+" or "-"
    std::string res_f, res_relator, res_surgery;
};

struct ClassReport {
    std::string classification;
    bool ambiguous = false;
    bool su2_form_ok = false;
    std::string s_re, s_im, t_re, t_im;
    std::string u_re, u_im, kappa_re, kappa_im;
    std::string tau_re, tau_im;
    bool acyclic = false;
    std::string tau_note;
    int conjugate_partner = -1;
    std::vector<MemberReport> members;
};

struct SigmaReport {
    int n = 0;
    int degree = 0;
    std::vector<std::string> coeff_re, coeff_im;  // ascending degree, full precision
    std::vector<std::string> rounded;             // rational strings; empty on failure
    std::string rounding_residual;
    bool all_rounded = false;
};

struct EnumerationReport {
    int n = 0;
    RunConfig config;
    std::string version = FIG8_VERSION;
    std::string source_hash = FIG8_SOURCE_HASH;
    int elimination_degree = 0;
    int flagged_points = 0;
    std::vector<ClassReport> classes;
    SigmaReport sigma;
    CassonReport casson;
    std::map<std::string, double> timings;  // seconds
};

namespace detail {

inline std::string rat_string(const BigRat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace detail

/// Run the full pipeline at one precision and snapshot it into strings.
template <unsigned Bits>
EnumerationReport run_surgery_report(int n, const RunConfig& cfg) {
    using R = RealOf<Bits>;
    using clock = std::chrono::steady_clock;
    auto seconds = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double>(b - a).count();
    };

    EnumerationReport rep;
    rep.n = n;
    rep.config = cfg;
    rep.config.precision_bits = Bits;

    ComputeOptions<R> opt = make_compute_options<R>(cfg);
    auto t0 = clock::now();
    SurgerySpec spec(n);
    EnumerationOutcome<R> outcome = enumerate_solutions<R>(spec, opt.enumerate);
    auto t1 = clock::now();
    std::vector<RepClass<R>> classes = dedup_classes(outcome.accepted, opt.tol_dedup);
    for (auto& cl : classes) classify(cl, opt.tol_class);
    std::sort(classes.begin(), classes.end(), [](const RepClass<R>& a, const RepClass<R>& b) {
        bool sa = a.classification == Classification::su2;
        bool sb = b.classification == Classification::su2;
        if (sa != sb) return sa;
        if (a.u.re != b.u.re) return a.u.re < b.u.re;
        return a.u.im < b.u.im;
    });
    for (size_t i = 0; i < classes.size(); ++i) {
        classes[i].conjugate_partner = -1;
        for (size_t j = 0; j < classes.size(); ++j) {
            if (i == j) continue;
            R tol = opt.tol_dedup;
            if (abs(classes[i].u - conj(classes[j].u)) <= tol * (1 + abs(classes[i].u)) &&
                abs(classes[i].kappa - conj(classes[j].kappa)) <= tol * (1 + abs(classes[i].kappa)))
                classes[i].conjugate_partner = static_cast<int>(j);
        }
    }
    auto t2 = clock::now();
    std::vector<TorsionValue<R>> spectrum = torsion_spectrum(classes);
    TorsionPolynomial<R> sig = sigma(n, spectrum, opt.tol_round);
    CassonReport cas = casson(n, classes);
    auto t3 = clock::now();

    rep.elimination_degree = outcome.elimination_degree;
    rep.flagged_points = static_cast<int>(outcome.flagged.size());
    for (size_t i = 0; i < classes.size(); ++i) {
        const auto& cl = classes[i];
        ClassReport cr;
        cr.classification = to_string(cl.classification);
        cr.ambiguous = cl.ambiguous;
        cr.su2_form_ok = cl.su2_form_ok;
        cr.s_re = to_full_string(cl.s.re);
        cr.s_im = to_full_string(cl.s.im);
        cr.t_re = to_full_string(cl.t.re);
        cr.t_im = to_full_string(cl.t.im);
        cr.u_re = to_full_string(cl.u.re);
        cr.u_im = to_full_string(cl.u.im);
        cr.kappa_re = to_full_string(cl.kappa.re);
        cr.kappa_im = to_full_string(cl.kappa.im);
        cr.tau_re = to_full_string(spectrum[i].value.re);
        cr.tau_im = to_full_string(spectrum[i].value.im);
        cr.acyclic = spectrum[i].acyclic;
        cr.tau_note = spectrum[i].note;
        cr.conjugate_partner = cl.conjugate_partner;
        for (const auto& m : cl.members) {
            MemberReport mr;
            mr.s_re = to_full_string(m.s.re);
            mr.s_im = to_full_string(m.s.im);
            mr.t_re = to_full_string(m.t.re);
            mr.t_im = to_full_string(m.t.im);
            mr.branch = (m.branch == Branch::plus) ? "+" : "-";
            mr.res_f = to_full_string(m.residuals.f_abs);
            mr.res_relator = to_full_string(m.residuals.relator);
            mr.res_surgery = to_full_string(m.residuals.surgery);
            cr.members.push_back(std::move(mr));
        }
        rep.classes.push_back(std::move(cr));
    }
    rep.sigma.n = n;
    rep.sigma.degree = sig.degree;
    for (size_t k = 0; k < sig.complex_coeffs.coeffs.size(); ++k) {
        rep.sigma.coeff_re.push_back(to_full_string(sig.complex_coeffs.coeffs[k].re));
        rep.sigma.coeff_im.push_back(to_full_string(sig.complex_coeffs.coeffs[k].im));
        rep.sigma.rounded.push_back(sig.rounded[k].ok ? detail::rat_string(sig.rounded[k].value)
                                                      : std::string{});
    }
    rep.sigma.rounding_residual = to_full_string(sig.rounding_residual);
    rep.sigma.all_rounded = sig.all_rounded;
    rep.casson = cas;
    rep.timings["enumerate"] = seconds(t0, t1);
    rep.timings["classes"] = seconds(t1, t2);
    rep.timings["torsion"] = seconds(t2, t3);
    rep.timings["total"] = seconds(t0, t3);
    return rep;
}

// ---------------------------------------------------------------------------
// JSON serialization (ordered keys: rendering is byte-stable)
// ---------------------------------------------------------------------------

using ojson = nlohmann::ordered_json;

inline ojson to_json(const RunConfig& c) {
    return ojson{{"precision_bits", c.precision_bits}, {"tol_residual", c.tol_residual},
                 {"tol_dedup", c.tol_dedup},           {"tol_table", c.tol_table},
                 {"tol_round", c.tol_round},           {"tol_class", c.tol_class},
                 {"output_format", c.output_format},   {"show_all", c.show_all}};
}

inline RunConfig config_from_json(const ojson& j) {
    RunConfig c;
    c.precision_bits = j.at("precision_bits").get<unsigned>();
    c.tol_residual = j.at("tol_residual").get<double>();
    c.tol_dedup = j.at("tol_dedup").get<double>();
    c.tol_table = j.at("tol_table").get<double>();
    c.tol_round = j.at("tol_round").get<double>();
    c.tol_class = j.at("tol_class").get<double>();
    c.output_format = j.at("output_format").get<std::string>();
    c.show_all = j.at("show_all").get<bool>();
    return c;
}

inline ojson to_json(const EnumerationReport& r) {
    ojson j;
    j["n"] = r.n;
    j["version"] = r.version;
    j["source_hash"] = r.source_hash;
    j["config"] = to_json(r.config);
    j["elimination_degree"] = r.elimination_degree;
    j["flagged_points"] = r.flagged_points;
    ojson classes = ojson::array();
    for (const auto& c : r.classes) {
        ojson jc{{"classification", c.classification},
                 {"ambiguous", c.ambiguous},
                 {"su2_form_ok", c.su2_form_ok},
                 {"s_re", c.s_re},
                 {"s_im", c.s_im},
                 {"t_re", c.t_re},
                 {"t_im", c.t_im},
                 {"u_re", c.u_re},
                 {"u_im", c.u_im},
                 {"kappa_re", c.kappa_re},
                 {"kappa_im", c.kappa_im},
                 {"tau_re", c.tau_re},
                 {"tau_im", c.tau_im},
                 {"acyclic", c.acyclic},
                 {"tau_note", c.tau_note},
                 {"conjugate_partner", c.conjugate_partner}};
        ojson members = ojson::array();
        for (const auto& m : c.members)
            members.push_back(ojson{{"s_re", m.s_re},
                                    {"s_im", m.s_im},
                                    {"t_re", m.t_re},
                                    {"t_im", m.t_im},
                                    {"branch", m.branch},
                                    {"res_f", m.res_f},
                                    {"res_relator", m.res_relator},
                                    {"res_surgery", m.res_surgery}});
        jc["members"] = std::move(members);
        classes.push_back(std::move(jc));
    }
    j["classes"] = std::move(classes);
    j["sigma"] = ojson{{"n", r.sigma.n},
                       {"degree", r.sigma.degree},
                       {"coeff_re", r.sigma.coeff_re},
                       {"coeff_im", r.sigma.coeff_im},
                       {"rounded", r.sigma.rounded},
                       {"rounding_residual", r.sigma.rounding_residual},
                       {"all_rounded", r.sigma.all_rounded}};
    j["casson"] = ojson{{"n", r.casson.n},
                        {"lambda", r.casson.lambda},
                        {"lambda_sl2c", r.casson.lambda_sl2c},
                        {"observed_su2", r.casson.observed_su2},
                        {"observed_total", r.casson.observed_total},
                        {"consistent", r.casson.consistent}};
    j["timings"] = r.timings;
    return j;
}

inline EnumerationReport report_from_json(const ojson& j) {
    EnumerationReport r;
    r.n = j.at("n").get<int>();
    r.version = j.at("version").get<std::string>();
    r.source_hash = j.at("source_hash").get<std::string>();
    r.config = config_from_json(j.at("config"));
    r.elimination_degree = j.at("elimination_degree").get<int>();
    r.flagged_points = j.at("flagged_points").get<int>();
    for (const auto& jc : j.at("classes")) {
        ClassReport c;
        c.classification = jc.at("classification").get<std::string>();
        c.ambiguous = jc.at("ambiguous").get<bool>();
        c.su2_form_ok = jc.at("su2_form_ok").get<bool>();
        c.s_re = jc.at("s_re").get<std::string>();
        c.s_im = jc.at("s_im").get<std::string>();
        c.t_re = jc.at("t_re").get<std::string>();
        c.t_im = jc.at("t_im").get<std::string>();
        c.u_re = jc.at("u_re").get<std::string>();
        c.u_im = jc.at("u_im").get<std::string>();
        c.kappa_re = jc.at("kappa_re").get<std::string>();
        c.kappa_im = jc.at("kappa_im").get<std::string>();
        c.tau_re = jc.at("tau_re").get<std::string>();
        c.tau_im = jc.at("tau_im").get<std::string>();
        c.acyclic = jc.at("acyclic").get<bool>();
        c.tau_note = jc.at("tau_note").get<std::string>();
        c.conjugate_partner = jc.at("conjugate_partner").get<int>();
        for (const auto& jm : jc.at("members")) {
            MemberReport m;
            m.s_re = jm.at("s_re").get<std::string>();
            m.s_im = jm.at("s_im").get<std::string>();
            m.t_re = jm.at("t_re").get<std::string>();
            m.t_im = jm.at("t_im").get<std::string>();
            m.branch = jm.at("branch").get<std::string>();
            m.res_f = jm.at("res_f").get<std::string>();
            m.res_relator = jm.at("res_relator").get<std::string>();
            m.res_surgery = jm.at("res_surgery").get<std::string>();
            c.members.push_back(std::move(m));
        }
        r.classes.push_back(std::move(c));
    }
    const auto& js = j.at("sigma");
    r.sigma.n = js.at("n").get<int>();
    r.sigma.degree = js.at("degree").get<int>();
    r.sigma.coeff_re = js.at("coeff_re").get<std::vector<std::string>>();
    r.sigma.coeff_im = js.at("coeff_im").get<std::vector<std::string>>();
    r.sigma.rounded = js.at("rounded").get<std::vector<std::string>>();
    r.sigma.rounding_residual = js.at("rounding_residual").get<std::string>();
    r.sigma.all_rounded = js.at("all_rounded").get<bool>();
    const auto& jk = j.at("casson");
    r.casson.n = jk.at("n").get<int>();
    r.casson.lambda = jk.at("lambda").get<long>();
    r.casson.lambda_sl2c = jk.at("lambda_sl2c").get<long>();
    r.casson.observed_su2 = jk.at("observed_su2").get<long>();
    r.casson.observed_total = jk.at("observed_total").get<long>();
    r.casson.consistent = jk.at("consistent").get<bool>();
    r.timings = j.at("timings").get<std::map<std::string, double>>();
    return r;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace detail {

inline std::string sig6(const std::string& full) {
    // re-render a full-precision decimal string with 6 significant digits
    std::istringstream is(full);
    long double v;
    is >> v;
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

inline std::string complex6(const std::string& re, const std::string& im) {
    long double i;
    std::istringstream(im) >> i;
    if (i == 0) return sig6(re);
    std::string out = sig6(re);
    out += (i > 0) ? " + " : " - ";
    std::string ia = sig6(im);
    if (!ia.empty() && ia[0] == '-') ia.erase(0, 1);
    return out + ia + " i";
}

}  // namespace detail

/// Rows shown by default mirror the printed tables: SU(2) classes, one
/// member of each conjugate pair (Im s > 0), and the SL(2,R) class.
inline std::vector<size_t> visible_classes(const EnumerationReport& r, bool show_all) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < r.classes.size(); ++i) {
        const auto& c = r.classes[i];
        if (!show_all && c.conjugate_partner >= 0) {
            long double sim;
            std::istringstream(c.s_im) >> sim;
            if (sim < 0) continue;  // suppressed conjugate
        }
        idx.push_back(i);
    }
    return idx;
}

inline std::string render_markdown(const EnumerationReport& r, bool show_all) {
    std::ostringstream os;
    os << "## n = " << r.n << "  (classes: " << r.classes.size() << ", lambda = "
       << r.casson.lambda << ", lambda_SL2C = " << r.casson.lambda_sl2c
       << (r.casson.consistent ? ", consistent" : ", INCONSISTENT") << ")\n\n";
    os << "| SU(2) | s | u = s + 1/s | tau |\n|:-:|:--|:--|:--|\n";
    for (size_t i : visible_classes(r, show_all)) {
        const auto& c = r.classes[i];
        os << "| " << (c.classification == "SU2" ? "o" : " ") << " | "
           << detail::complex6(c.s_re, c.s_im) << " | " << detail::complex6(c.u_re, c.u_im)
           << " | " << detail::complex6(c.tau_re, c.tau_im);
        if (c.classification == "SL2R") os << " (SL2R)";
        os << " |\n";
    }
    if (r.flagged_points > 0)
        os << "\nnear-threshold points flagged: " << r.flagged_points << "\n";
    return os.str();
}

inline std::string render_csv(const EnumerationReport& r, bool show_all) {
    std::ostringstream os;
    os << "n,su2,sl2r,s_re,s_im,u_re,u_im,tau_re,tau_im\n";
    for (size_t i : visible_classes(r, show_all)) {
        const auto& c = r.classes[i];
        os << r.n << ',' << (c.classification == "SU2" ? 1 : 0) << ','
           << (c.classification == "SL2R" ? 1 : 0) << ',' << c.s_re << ',' << c.s_im << ','
           << c.u_re << ',' << c.u_im << ',' << c.tau_re << ',' << c.tau_im << '\n';
    }
    return os.str();
}

inline std::string render_report(const EnumerationReport& r, const std::string& format,
                                 bool show_all) {
    if (format == "json") return to_json(r).dump(1) + "\n";
    if (format == "csv") return render_csv(r, show_all);
    return render_markdown(r, show_all);
}

/// sigma as a one-line polynomial, exact-rational when rounding succeeded.
inline std::string render_sigma_exact(const SigmaReport& s) {
    std::ostringstream os;
    bool first = true;
    for (int d = s.degree; d >= 0; --d) {
        const std::string& q = s.rounded[static_cast<size_t>(d)];
        if (q.empty() || q == "0") {
            if (q.empty()) return {};  // a coefficient failed to round
            continue;
        }
        bool neg = q[0] == '-';
        std::string mag = neg ? q.substr(1) : q;
        if (first) {
            os << (neg ? "-" : "");
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != "1" || d == 0) os << mag;
        if (d > 0) {
            if (mag != "1") os << ' ';
            os << "t";
            if (d > 1) os << '^' << d;
        }
    }
    if (first) os << "0";
    return os.str();
}

inline std::string render_sigma_scientific(const SigmaReport& s) {
    std::ostringstream os;
    for (int d = s.degree; d >= 0; --d) {
        long double v;
        std::istringstream(s.coeff_re[static_cast<size_t>(d)]) >> v;
        if (v == 0) continue;
        if (d != s.degree) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        std::ostringstream num;
        num.precision(6);
        num << std::scientific << std::fabs(static_cast<double>(v));
        os << num.str();
        if (d > 0) {
            os << " t";
            if (d > 1) os << '^' << d;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Cache
// ---------------------------------------------------------------------------

inline std::string cache_file(const RunConfig& cfg, int n) {
    std::ostringstream os;
    os << cfg.cache_dir << "/fig8-" << FIG8_SOURCE_HASH << "-p" << cfg.precision_bits << "-n" << n
       << ".json";
    return os.str();
}

/// Cached report lookup keyed by (n, precision, source hash); stale entries
/// simply never match because the hash changes with the code.
inline std::optional<EnumerationReport> load_cached_report(const RunConfig& cfg, int n) {
    if (cfg.cache_dir.empty()) return std::nullopt;
    std::ifstream in(cache_file(cfg, n));
    if (!in) return std::nullopt;
    try {
        ojson j;
        in >> j;
        EnumerationReport r = report_from_json(j);
        if (r.source_hash != FIG8_SOURCE_HASH || r.config.precision_bits != cfg.precision_bits)
            return std::nullopt;
        return r;
    } catch (...) {
        return std::nullopt;
    }
}

inline void store_cached_report(const RunConfig& cfg, const EnumerationReport& r) {
    if (cfg.cache_dir.empty()) return;
    std::filesystem::create_directories(cfg.cache_dir);
    std::ofstream out(cache_file(cfg, r.n));
    out << to_json(r).dump(1) << "\n";
}

}  // namespace fig8
