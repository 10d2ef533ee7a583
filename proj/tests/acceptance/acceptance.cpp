// Acceptance checks for the simulator. Each criterion prints one PASS/FAIL
// line with the measured quantities; the exit status is non-zero if any
// selected criterion fails.
//
//   wgmsense_acceptance                 run everything
//   wgmsense_acceptance --criterion X   run one
//   wgmsense_acceptance --list

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "wgmsense/kernels.hpp"
#include "wgmsense/noise.hpp"
#include "wgmsense/spectra.hpp"
#include "wgmsense/transmission.hpp"

using namespace wgmsense;

namespace {

constexpr double kAlpha = 0.9997;

struct Verdict {
    bool pass;
    std::string detail;
};

struct Criterion {
    const char* name;
    double time_limit_s;  // 0 = none
    std::function<Verdict()> check;
};

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// Overcoupled side of the headline device at the 1e-5 sweep resolution.
std::vector<double> overcoupled_r() { return linspace(0.999, 0.99969, 70); }

double slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

Verdict identity_suite() {
    const auto rs = linspace(0.0, 0.99999, 50);
    const auto as = linspace(0.01, 0.99999, 50);
    const auto th = linspace(-M_PI, M_PI, 101);
    std::vector<double> c(th.size()), s(th.size());
    for (std::size_t k = 0; k < th.size(); ++k) {
        c[k] = std::cos(th[k]);
        s[k] = std::sin(th[k]);
    }
    std::vector<double> inten(th.size()), re(th.size()), i7(th.size()), i8(th.size()),
        coinc(th.size());

    double worst_diff = 0.0, worst_sum = 0.0, worst_mid = 0.0, worst_out = 0.0,
           worst_coinc = 0.0;
    for (double r : rs) {
        for (double a : as) {
            const ResonatorConfig cfg{r, a};
            kernels::evaluate_lineshape({r, a}, c, s, {inten, re, i7, i8, coinc});
            for (std::size_t k = 0; k < th.size(); ++k) {
                const ComplexAmplitude t = transmission(cfg, Detuning::from_phase(th[k]));
                const double T = std::norm(t);
                const MziOutputs m = classical_mzi_outputs(t);
                worst_diff = std::max({worst_diff, std::abs(m.i7 - m.i8 - t.real()),
                                       std::abs(i7[k] - i8[k] - re[k])});
                worst_sum = std::max({worst_sum, std::abs(m.i7 + m.i8 - (1.0 + T) / 2.0),
                                      std::abs(i7[k] + i8[k] - (1.0 + inten[k]) / 2.0)});
                worst_mid = std::max(worst_mid, std::abs(state_norm(mid_state_amplitudes(t), T) - 1.0));
                const OutputState out = output_state_amplitudes(t);
                worst_out = std::max(worst_out, std::abs(state_norm(out, T) - 1.0));
                worst_coinc = std::max(worst_coinc, std::abs(coinc[k] - coincidence_of(out)));
            }
        }
    }
    const double worst = std::max({worst_diff, worst_sum, worst_mid, worst_out, worst_coinc});
    return {worst <= 1e-12,
            fmt("50x50x101 grid, max |error|: I2-Re t %.2e, I7+I8 %.2e, closure %.2e, "
                "output norm %.2e, coincidence %.2e (tol 1e-12)",
                worst_diff, worst_sum, worst_mid, worst_out, worst_coinc)};
}

Verdict critical_zero() {
    double worst = 0.0;
    for (double a : {0.5, 0.9, 0.99, 0.9997, 0.99999}) {
        const ResonatorConfig cfg{a, a};
        worst = std::max(worst, classical_wgm_intensity(cfg, Detuning::from_phase(0.0)));
        const Spectrum sp = sample_spectrum(cfg, MeasurementCase::ClassicalWgm);
        worst = std::max(worst, sp.values[sp.size() / 2]);
    }
    return {worst <= 1e-12, fmt("max I1(0) at r = alpha: %.2e (tol 1e-12)", worst)};
}

Verdict double_dip() {
    std::string near_detail, far_detail;
    bool near_ok = true, far_ok = true;
    for (double r : linspace(0.9995, 0.9999, 41)) {
        if (r == kAlpha) continue;
        const std::size_t m =
            count_strict_local_minima(sample_spectrum({r, kAlpha}, MeasurementCase::EntangledWgmMzi));
        if (m != 2) {
            near_ok = false;
            near_detail += fmt(" r=%.5f:%zu", r, m);
        }
    }
    for (double r : {0.998, 0.997, 0.995, 0.99, 0.98, 0.95, 0.9}) {
        const std::size_t m =
            count_strict_local_minima(sample_spectrum({r, kAlpha}, MeasurementCase::EntangledWgmMzi));
        far_detail += fmt(" %.4g:%zu", r, m);
        if (m != 1) far_ok = false;
    }
    const std::size_t at_headline = count_strict_local_minima(
        sample_spectrum({0.9996, kAlpha}, MeasurementCase::EntangledWgmMzi));
    return {near_ok && far_ok && at_headline == 2,
            fmt("minima at r=0.9996: %zu; r in [0.9995, 0.9999] all 2: %s%s; r <= 0.998 "
                "(want 1):%s",
                at_headline, near_ok ? "yes" : "no", near_detail.c_str(), far_detail.c_str())};
}

Verdict noise_plateau() {
    NoiseRunConfig run;
    run.photons_per_bin = 1e6;
    const ResonatorConfig cfg{0.9996, kAlpha};
    bool ok = true;
    std::string detail = "N=1e6, jitter 1 fm:";
    for (MeasurementCase c : kHeadlineCases) {
        const double d = simulate_case(cfg, c, run).delta_omega_3sigma_fm;
        ok = ok && std::abs(d - 3.0) <= 0.45;
        detail += fmt(" %s %.3f fm", std::string(to_string(c)).c_str(), d);
    }
    return {ok, detail + " (want 3 +/- 15%)"};
}

Verdict shot_noise_slope() {
    NoiseRunConfig run;
    run.jitter_sigma_fm = 0.0;
    const ResonatorConfig cfg{0.9996, kAlpha};
    const std::vector<double> n{1e2, 3e2, 1e3, 3e3, 1e4};
    std::vector<double> logn;
    for (double v : n) logn.push_back(std::log(v));
    const auto rows = sweep_photon_number(cfg, run, n);
    bool ok = true;
    std::string detail = "jitter 0, slope of log dOmega vs log N:";
    for (std::size_t ci = 0; ci < std::size(kHeadlineCases); ++ci) {
        std::vector<double> logd;
        for (std::size_t j = 0; j < n.size(); ++j)
            logd.push_back(std::log(rows[ci * n.size() + j].result.delta_omega_3sigma_fm));
        const double s = slope(logn, logd);
        ok = ok && std::abs(s + 0.5) <= 0.05;
        detail += fmt(" %s %.3f", std::string(to_string(kHeadlineCases[ci])).c_str(), s);
    }
    return {ok, detail + " (want -0.50 +/- 0.05)"};
}

double peak_enhancement(const std::vector<LinewidthSweepRow>& rows, double ratio, double* at_r) {
    double best = -1.0;
    for (const auto& row : rows) {
        if (row.width_ratio != ratio || row.snr_vs_classical_mzi <= best) continue;
        best = row.snr_vs_classical_mzi;
        *at_r = row.r;
    }
    return best;
}

Verdict headline_enhancement() {
    NoiseRunConfig run;
    const std::vector<double> ratios{0.1, 1.0};
    const auto rows = sweep_linewidth({0.9996, kAlpha}, run, ratios, overcoupled_r());
    double r01 = 0.0, r10 = 0.0;
    const double p01 = peak_enhancement(rows, 0.1, &r01);
    const double p10 = peak_enhancement(rows, 1.0, &r10);
    const bool ok = p01 >= 3.2 && p01 <= 5.0 && p10 >= 0.8 && p10 <= 1.3;
    return {ok, fmt("overcoupled sweep r in [0.999, 0.99969], N=380: width 0.1 peak %.3f at "
                    "r=%.5f (want [3.2, 5.0]); width 1.0 peak %.3f at r=%.5f (want [0.8, 1.3])",
                    p01, r01, p10, r10)};
}

Verdict map_structure() {
    NoiseRunConfig run;
    const auto axis = linspace(0.999, 0.9999, 20);
    const auto cells = sweep_coupling_map({0.9996, kAlpha}, axis, axis, run);
    const std::size_t n = axis.size();

    auto check = [&](auto member, const char* label, std::string& detail) {
        std::size_t best = 0;
        double over = 0.0, under = 0.0;
        std::size_t n_over = 0, n_under = 0;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            const double v = cells[k].*member;
            if (v > cells[best].*member) best = k;
            if (cells[k].r < cells[k].alpha) {
                over += v;
                ++n_over;
            } else if (cells[k].r > cells[k].alpha) {
                under += v;
                ++n_under;
            }
        }
        over /= static_cast<double>(n_over);
        under /= static_cast<double>(n_under);
        const long ia = static_cast<long>(best / n), ir = static_cast<long>(best % n);
        const bool on_diagonal = std::labs(ia - ir) <= 1;
        detail += fmt(" %s: max %.3g at r=%.6f alpha=%.6f (%ld cells off diagonal), mean "
                      "over %.3f vs under %.3f;",
                      label, cells[best].*member, cells[best].r, cells[best].alpha,
                      std::labs(ia - ir), over, under);
        return on_diagonal && over > under;
    };
    std::string detail = "20x20 over [0.999, 0.9999]^2, N=380:";
    const bool a = check(&CouplingMapCell::snr_vs_classical_wgm, "vs wgm", detail);
    const bool b = check(&CouplingMapCell::snr_vs_classical_mzi, "vs mzi", detail);
    return {a && b, detail};
}

Verdict difference_vs_single() {
    const ResonatorConfig cfg{0.9996, kAlpha};
    NoiseRunConfig run;
    const double diff_shot =
        simulate_case(cfg, MeasurementCase::ClassicalWgmMzi, run).delta_omega_3sigma_fm;
    const double single_shot =
        simulate_case(cfg, MeasurementCase::ClassicalWgmMziSingle, run).delta_omega_3sigma_fm;
    run.photons_per_bin = 1e6;
    const double diff_hi =
        simulate_case(cfg, MeasurementCase::ClassicalWgmMzi, run).delta_omega_3sigma_fm;
    const double single_hi =
        simulate_case(cfg, MeasurementCase::ClassicalWgmMziSingle, run).delta_omega_3sigma_fm;
    const double gap = std::abs(diff_hi / single_hi - 1.0);
    return {diff_shot <= single_shot && gap <= 0.10,
            fmt("N=380: difference %.3f fm vs single %.3f fm; N=1e6: %.3f vs %.3f fm "
                "(%.1f%% apart, want <= 10%%)",
                diff_shot, single_shot, diff_hi, single_hi, 100.0 * gap)};
}

Verdict dynamic_range_exclusion_check() {
    const ResonatorConfig cfg{0.9996, kAlpha};
    NoiseRunConfig run;

    // Monochromatic cells one sweep step either side of critical coupling.
    std::string near = "monochromatic |r - alpha| <= 1e-5:";
    bool near_ok = true;
    for (double r : {0.99969, 0.9997, 0.99971}) {
        const NoiseResult e = simulate_case({r, kAlpha}, MeasurementCase::EntangledWgmMzi, run);
        near_ok = near_ok && e.dynamic_range_violation;
        near += fmt(" r=%.5f %s (noise %.4f, range %.4f)", r,
                    e.dynamic_range_violation ? "flagged" : "not flagged",
                    e.delta_omega_3sigma_gamma, e.operating_point.dynamic_range);
    }

    run.width_ratio = 0.1;
    const auto rs = overcoupled_r();
    const std::vector<double> fractions{0.2, 0.4, 0.6, 0.8};
    const auto rows = dynamic_range_exclusion(cfg, run, rs, fractions);
    bool region_ok = true;
    std::size_t in_region = 0;
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& row : rows) {
        if (row.snr_vs_classical_mzi < 3.2) continue;
        ++in_region;
        const double ratio = row.noise_3sigma_gamma / row.dynamic_range_gamma;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        region_ok = region_ok && ratio >= 0.2 && ratio <= 0.8;
    }
    region_ok = region_ok && in_region > 0;
    return {near_ok && region_ok,
            near + fmt("; width 0.1 cells with enhancement >= 3.2: %zu, noise/range in "
                       "[%.3f, %.3f] (want within [0.2, 0.8])",
                       in_region, lo, hi)};
}

Verdict monochromatic_ceiling() {
    NoiseRunConfig run;
    auto rs = overcoupled_r();
    for (double r : linspace(0.99971, 0.9999, 20)) rs.push_back(r);
    double best = 0.0, at = 0.0;
    for (const auto& cell : sweep_coupling_map({0.9996, kAlpha}, std::vector<double>{kAlpha}, rs, run)) {
        if (cell.dynamic_range_violation || cell.snr_vs_classical_mzi <= best) continue;
        best = cell.snr_vs_classical_mzi;
        at = cell.r;
    }
    return {best >= 8.0,
            fmt("width 0, N=380: peak unflagged enhancement vs mzi %.3f at r=%.5f (want >= 8)",
                best, at)};
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {"identity_suite", 10.0, identity_suite},
        {"critical_zero", 0.0, critical_zero},
        {"double_dip", 5.0, double_dip},
        {"noise_plateau", 30.0, noise_plateau},
        {"shot_noise_slope", 60.0, shot_noise_slope},
        {"headline_enhancement", 300.0, headline_enhancement},
        {"map_structure", 600.0, map_structure},
        {"difference_vs_single", 0.0, difference_vs_single},
        {"dynamic_range_exclusion", 0.0, dynamic_range_exclusion_check},
        {"monochromatic_ceiling", 0.0, monochromatic_ceiling},
    };
    return all;
}

bool run_one(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
        v = c.check();
    } catch (const std::exception& e) {
        v = {false, std::string("threw: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s <= 0.0 || elapsed <= c.time_limit_s;
    const bool pass = v.pass && in_time;
    std::printf("%s %s [%.2fs%s] %s\n", pass ? "PASS" : "FAIL", c.name, elapsed,
                c.time_limit_s > 0.0 ? fmt(" of %.0fs", c.time_limit_s).c_str() : "",
                v.detail.c_str());
    std::fflush(stdout);
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> wanted;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--list") == 0) {
            for (const auto& c : criteria()) std::printf("%s\n", c.name);
            return 0;
        }
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            wanted.emplace_back(argv[++i]);
            continue;
        }
        std::fprintf(stderr, "usage: %s [--list] [--criterion NAME]...\n", argv[0]);
        return 2;
    }

    std::printf("kernel variant: %s\n", std::string(to_string(kernels::active_isa())).c_str());
    bool all_pass = true;
    std::size_t ran = 0;
    for (const auto& c : criteria()) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.name) == wanted.end())
            continue;
        ++ran;
        all_pass = run_one(c) && all_pass;
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criterion matched\n");
        return 2;
    }
    return all_pass ? 0 : 1;
}
