#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "wgmsense/errors.hpp"
#include "wgmsense/spectra.hpp"

using namespace wgmsense;
using doctest::Approx;

namespace {

const ResonatorConfig kHeadline{0.9996, 0.9997};

double dynamic_range(double r, double alpha = 0.9997) {
    return find_operating_point(sample_spectrum({r, alpha}, MeasurementCase::EntangledWgmMzi))
        .dynamic_range;
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("case names round trip") {
    for (MeasurementCase c : {MeasurementCase::ClassicalWgm, MeasurementCase::ClassicalWgmMzi,
                              MeasurementCase::EntangledWgmMzi,
                              MeasurementCase::ClassicalWgmMziSingle})
        CHECK(parse_measurement_case(to_string(c)) == c);
    CHECK(parse_measurement_case("entangled") == MeasurementCase::EntangledWgmMzi);
    CHECK_FALSE(parse_measurement_case("quantum").has_value());
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS((DetuningGrid{-5, 5, 10}.validate()), InvalidArgument);
    CHECK_THROWS_AS((DetuningGrid{-2, 2, 4001}.validate()), InvalidArgument);
    CHECK_THROWS_AS((DetuningGrid{5, -5, 4001}.validate()), InvalidArgument);
    const auto pts = DetuningGrid{}.points();
    REQUIRE(pts.size() == 4001);
    CHECK(pts.front() == -5.0);
    CHECK(pts.back() == 5.0);
    CHECK(pts[2000] == 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(pts[i] == -pts[pts.size() - 1 - i]);
}

TEST_CASE("monochromatic spectra are symmetric in detuning") {
    for (MeasurementCase c : kHeadlineCases) {
        const Spectrum s = sample_spectrum(kHeadline, c);
        const std::size_t n = s.size();
        for (std::size_t i = 0; i < n / 2; ++i)
            CHECK(s.values[i] == Approx(s.values[n - 1 - i]).epsilon(1e-13));
    }
}

TEST_CASE("evaluate_case matches the sampled spectrum") {
    const Spectrum s = sample_spectrum(kHeadline, MeasurementCase::EntangledWgmMzi);
    std::vector<double> out(s.size());
    evaluate_case(kHeadline, MeasurementCase::EntangledWgmMzi, s.detunings, out);
    CHECK(out == s.values);
}

TEST_CASE("gaussian kernel is normalized and rejects unresolved widths") {
    const auto k = gaussian_kernel(0.1, 0.0025);
    CHECK(std::accumulate(k.begin(), k.end(), 0.0) == Approx(1.0).epsilon(1e-15));
    CHECK(k.size() % 2 == 1);
    CHECK(k[k.size() / 2] == *std::max_element(k.begin(), k.end()));
    CHECK_THROWS_AS(gaussian_kernel(0.01, 0.0025), GridResolutionError);
}

TEST_CASE("zero-width convolution is the identity") {
    const Spectrum s = sample_spectrum(kHeadline, MeasurementCase::EntangledWgmMzi);
    const Spectrum c = convolve_gaussian(s, 0.0);
    CHECK(c.values == s.values);
    CHECK(c.width_ratio == 0.0);
}

TEST_CASE("convolution preserves the mean and smooths the gradient") {
    // Wide window so the constant edge padding sees nearly flat tails.
    const Spectrum s =
        sample_spectrum(kHeadline, MeasurementCase::ClassicalWgm, DetuningGrid{-40, 40, 32001});
    const Spectrum c = convolve_gaussian(s, 0.3);
    const double before = std::accumulate(s.values.begin(), s.values.end(), 0.0);
    const double after = std::accumulate(c.values.begin(), c.values.end(), 0.0);
    CHECK(after == Approx(before).epsilon(1e-6));
    CHECK(c.width_ratio == Approx(0.3));
    CHECK(std::abs(find_operating_point(c).gradient) <
          std::abs(find_operating_point(s).gradient));
}

TEST_CASE("successive convolutions compose in quadrature") {
    const Spectrum s = sample_spectrum(kHeadline, MeasurementCase::EntangledWgmMzi);
    const Spectrum twice = convolve_gaussian(convolve_gaussian(s, 0.1), 0.2);
    const Spectrum once = convolve_gaussian(s, std::hypot(0.1, 0.2));
    CHECK(twice.width_ratio == Approx(once.width_ratio).epsilon(1e-15));
    double worst = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
        worst = std::max(worst, std::abs(twice.values[i] - once.values[i]));
    CHECK(worst < 1e-3);
}

TEST_CASE("coarse grids refuse narrow source linewidths") {
    const Spectrum s =
        sample_spectrum(kHeadline, MeasurementCase::EntangledWgmMzi, DetuningGrid{-5, 5, 101});
    CHECK_THROWS_AS(convolve_gaussian(s, 0.1), GridResolutionError);
}

TEST_CASE("classical operating point sits at the Lorentzian inflection") {
    const Spectrum s = sample_spectrum({0.9997, 0.9997}, MeasurementCase::ClassicalWgm);
    const OperatingPoint op = find_operating_point(s);
    CHECK(op.detuning < 0.0);
    CHECK(std::abs(std::abs(op.detuning) - 1.0 / std::sqrt(3.0)) <= s.step());
    CHECK(op.dynamic_range == Approx(std::abs(op.detuning)).epsilon(1e-12));
    CHECK(count_strict_local_minima(s) == 1);
    // The half-depth level is taken from the window maximum, so the window
    // must reach far into the tails for the full width to come out as 2.
    const Spectrum wide =
        sample_spectrum({0.9997, 0.9997}, MeasurementCase::ClassicalWgm, DetuningGrid{-60, 60, 48001});
    CHECK(measure_dip_fwhm(wide) == Approx(2.0).epsilon(1e-3));
}

TEST_CASE("operating point is stable under grid refinement") {
    const Spectrum coarse = sample_spectrum(kHeadline, MeasurementCase::EntangledWgmMzi);
    const Spectrum fine =
        sample_spectrum(kHeadline, MeasurementCase::EntangledWgmMzi, DetuningGrid{-5, 5, 16001});
    const OperatingPoint a = find_operating_point(coarse);
    const OperatingPoint b = find_operating_point(fine);
    CHECK(std::abs(a.detuning - b.detuning) <= 2.0 * coarse.step());
    CHECK(a.gradient == Approx(b.gradient).epsilon(1e-3));
    CHECK(std::abs(a.dynamic_range - b.dynamic_range) <= 2.0 * coarse.step());
}

TEST_CASE("flat spectra have no operating point") {
    Spectrum s = sample_spectrum(kHeadline, MeasurementCase::ClassicalWgm);
    std::fill(s.values.begin(), s.values.end(), 0.5);
    CHECK_THROWS_AS(find_operating_point(s), FlatSpectrumError);
    CHECK(stationary_points(s).size() == s.size());
}

TEST_CASE("entangled dynamic range shrinks toward critical coupling") {
    double previous = dynamic_range(0.998);
    for (double r : {0.999, 0.9993, 0.9995, 0.9996, 0.99965, 0.99969}) {
        const double dr = dynamic_range(r);
        CHECK(dr <= previous);
        previous = dr;
    }
    previous = dynamic_range(0.9999);
    for (double r : {0.9998, 0.99975, 0.99972, 0.99971}) {
        const double dr = dynamic_range(r);
        CHECK(dr <= previous);
        previous = dr;
    }
}

TEST_CASE("near-critical entangled spectrum has a double dip") {
    const Spectrum s = sample_spectrum(kHeadline, MeasurementCase::EntangledWgmMzi);
    CHECK(count_strict_local_minima(s) == 2);
}

TEST_CASE("spectrum CSV round trips at nine significant digits") {
    const Spectrum s =
        sample_spectrum(kHeadline, MeasurementCase::EntangledWgmMzi, DetuningGrid{-3, 3, 65});
    std::stringstream ss;
    write_spectrum_csv(ss, s);
    CHECK(ss.str().rfind("detuning_gamma,value\n", 0) == 0);
    const SpectrumTable t = read_spectrum_csv(ss);
    REQUIRE(t.values.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(t.detunings[i] == Approx(s.detunings[i]).epsilon(1e-8));
        CHECK(t.values[i] == Approx(s.values[i]).epsilon(1e-8));
    }
    CHECK(format_number(0.1234567891234) == "0.123456789");

    std::stringstream bad("delta,value\n0,1\n");
    CHECK_THROWS_AS(read_spectrum_csv(bad), InvalidArgument);
    std::stringstream garbled("detuning_gamma,value\n0,abc\n");
    CHECK_THROWS_AS(read_spectrum_csv(garbled), InvalidArgument);
}

}  // TEST_SUITE
