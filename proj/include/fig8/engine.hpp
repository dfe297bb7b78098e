#pragma once

#include "fig8/report.hpp"

namespace fig8 {

/// Per-n verification against the golden fixtures.
struct VerifyOutcome {
    int n = 0;
    bool ok = false;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    EnumerationReport report;
};

template <unsigned Bits>
VerifyOutcome verify_surgery(int n, const RunConfig& cfg) {
    using R = RealOf<Bits>;
    VerifyOutcome out;
    out.n = n;

    std::vector<GoldenRow> rows = golden::load_rows(cfg.data_dir, n);
    for (const auto& p : golden_self_check<R>(rows, n))
        out.failures.push_back("fixture: " + p);

    ComputeOptions<R> opt = make_compute_options<R>(cfg);
    SurgeryComputation<R> comp = compute_surgery<R>(n, opt);

    const long expect_total = 4L * n - 1;
    if (comp.casson_report.observed_total != expect_total)
        out.failures.push_back("class count " + std::to_string(comp.casson_report.observed_total) +
                               " != " + std::to_string(expect_total));
    if (comp.casson_report.observed_su2 != 2L * n)
        out.failures.push_back("SU(2) count " + std::to_string(comp.casson_report.observed_su2) +
                               " != " + std::to_string(2 * n));
    long sl2r = 0;
    for (const auto& c : comp.classes)
        if (c.classification == Classification::sl2r) ++sl2r;
    if (sl2r != 1) out.failures.push_back("SL(2,R) count " + std::to_string(sl2r) + " != 1");
    if (!comp.casson_report.consistent) out.failures.push_back("Casson counts inconsistent");

    TableMatchSummary tbl = verify_tables(comp.classes, rows, cfg.tol_table);
    if (!tbl.all_rows_matched) {
        std::string which;
        for (int i : tbl.unmatched_rows) which += " " + std::to_string(i);
        out.failures.push_back("unmatched table rows:" + which);
    }
    if (!tbl.conjugates_accounted)
        out.failures.push_back("suppressed conjugates not accounted for");
    for (const auto& q : tbl.quirk_notes) out.notes.push_back(q);

    GoldenSigma gs = golden::load_sigma(cfg.data_dir, n);
    SigmaMatchSummary sms = verify_sigma(comp.sigma_poly, gs);
    for (const auto& c : sms.coeffs) {
        if (!c.checked)
            out.notes.push_back("sigma_" + std::to_string(n) + " t^" + std::to_string(c.degree) +
                                " " + c.note + "; computed = " + c.computed);
        else if (!c.ok)
            out.failures.push_back("sigma_" + std::to_string(n) + " t^" +
                                   std::to_string(c.degree) + ": " + c.note + " (printed " +
                                   std::to_string(c.printed) + ", computed " + c.computed + ")");
    }

    out.ok = out.failures.empty();
    return out;
}

inline unsigned dispatch_bits(const RunConfig& cfg) { return effective_precision(cfg.precision_bits); }

inline EnumerationReport run_surgery_report_any(int n, const RunConfig& cfg) {
    RunConfig c = cfg;
    c.precision_bits = dispatch_bits(cfg);
    switch (c.precision_bits) {
        case 128: return run_surgery_report<128>(n, c);
        case 256: return run_surgery_report<256>(n, c);
        case 512: return run_surgery_report<512>(n, c);
        default: throw std::logic_error("unsupported precision");
    }
}

inline VerifyOutcome verify_surgery_any(int n, const RunConfig& cfg) {
    RunConfig c = cfg;
    c.precision_bits = dispatch_bits(cfg);
    switch (c.precision_bits) {
        case 128: return verify_surgery<128>(n, c);
        case 256: return verify_surgery<256>(n, c);
        case 512: return verify_surgery<512>(n, c);
        default: throw std::logic_error("unsupported precision");
    }
}

/// Cache-aware report: byte-identical output on a hit.
inline std::pair<EnumerationReport, bool> report_with_cache(int n, const RunConfig& cfg) {
    RunConfig c = cfg;
    c.precision_bits = dispatch_bits(cfg);
    if (auto hit = load_cached_report(c, n)) return {*hit, true};
    EnumerationReport r = run_surgery_report_any(n, c);
    store_cached_report(c, r);
    return {r, false};
}

}  // namespace fig8
