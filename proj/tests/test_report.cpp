#include "fig8/engine.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

using namespace fig8;

namespace {
RunConfig base_config() {
    RunConfig cfg;
    cfg.data_dir = FIG8_GOLDEN_DIR;
    return cfg;
}
}  // namespace

TEST_CASE("config validation") {
    RunConfig cfg = base_config();
    CHECK_NOTHROW(cfg.validate());
    RunConfig bad = cfg;
    bad.tol_table = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.output_format = "yaml";
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.precision_bits = 32;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("precision dispatch rounds up") {
    CHECK(effective_precision(53) == 128);
    CHECK(effective_precision(128) == 128);
    CHECK(effective_precision(129) == 256);
    CHECK(effective_precision(512) == 512);
    CHECK_THROWS_AS(effective_precision(513), std::invalid_argument);
    CHECK_THROWS_AS(effective_precision(8), std::invalid_argument);
}

TEST_CASE("JSON round trip is field-identical") {
    EnumerationReport rep = run_surgery_report<128>(1, base_config());
    ojson j = to_json(rep);
    EnumerationReport back = report_from_json(j);
    CHECK(to_json(back).dump(1) == j.dump(1));
    CHECK(back.classes.size() == rep.classes.size());
    CHECK(back.sigma.coeff_re == rep.sigma.coeff_re);
    CHECK(back.casson.consistent == rep.casson.consistent);
}

TEST_CASE("renderings carry exactly the visible class count of rows") {
    EnumerationReport rep = run_surgery_report<128>(2, base_config());
    // default view: 3n rows (paper layout); --all: 4n-1 rows
    std::string md = render_markdown(rep, false);
    std::string md_all = render_markdown(rep, true);
    auto count_rows = [](const std::string& text) {
        int rows = 0;
        size_t pos = 0;
        while ((pos = text.find("\n| ", pos)) != std::string::npos) {
            ++rows;
            pos += 3;
        }
        return rows - 1;  // header separator row is not a class
    };
    CHECK(count_rows(md) == 6);
    CHECK(count_rows(md_all) == 7);

    std::string csv = render_csv(rep, false);
    std::string csv_all = render_csv(rep, true);
    auto count_lines = [](const std::string& text) {
        return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
    };
    CHECK(count_lines(csv) == 1 + 6);      // header + rows
    CHECK(count_lines(csv_all) == 1 + 7);  // header + all classes
    CHECK(csv.rfind("n,su2,sl2r,s_re,s_im,u_re,u_im,tau_re,tau_im\n", 0) == 0);
}

TEST_CASE("cache hit returns byte-identical output") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "fig8-cache-test";
    std::filesystem::remove_all(dir);
    RunConfig cfg = base_config();
    cfg.cache_dir = dir.string();
    auto [fresh, was_cached_1] = report_with_cache(1, cfg);
    CHECK_FALSE(was_cached_1);
    auto [cached, was_cached_2] = report_with_cache(1, cfg);
    CHECK(was_cached_2);
    CHECK(render_report(fresh, "json", true) == render_report(cached, "json", true));
    CHECK(render_report(fresh, "markdown", false) == render_report(cached, "markdown", false));
    std::filesystem::remove_all(dir);
}

TEST_CASE("fresh runs are deterministic") {
    RunConfig cfg = base_config();
    EnumerationReport a = run_surgery_report<128>(1, cfg);
    EnumerationReport b = run_surgery_report<128>(1, cfg);
    a.timings.clear();
    b.timings.clear();
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("sigma rendering") {
    EnumerationReport rep = run_surgery_report<128>(1, base_config());
    CHECK(render_sigma_exact(rep.sigma) == "t^3 - 12 t^2 + 20 t - 8");
    std::string sci = render_sigma_scientific(rep.sigma);
    CHECK(sci.find("t^3") != std::string::npos);
    CHECK(sci.find("1.200000e+01 t^2") != std::string::npos);
}

TEST_CASE("verify outcome for n = 1 is clean") {
    VerifyOutcome v = verify_surgery<128>(1, base_config());
    for (const auto& f : v.failures) UNSCOPED_INFO(f);
    CHECK(v.ok);
}

TEST_CASE("verify with absurd table tolerance reports mismatches") {
    RunConfig cfg = base_config();
    cfg.tol_table = 1e-12;  // below the tables' printed precision
    VerifyOutcome v = verify_surgery<128>(1, cfg);
    CHECK_FALSE(v.ok);
}
