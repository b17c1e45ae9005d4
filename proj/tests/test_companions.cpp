#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"

#include "illusion/companions.hpp"
#include "illusion/errors.hpp"
#include "support/generators.hpp"

using namespace illusion;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

template <typename Fn>
ErrorKind kind_of(Fn fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return static_cast<ErrorKind>(-1);
}

}  // namespace

TEST_CASE("radial transform parameters", "[companions]")
{
    CHECK_THROWS_AS(RadialTransform(0.1, 0.3, 1.0), Error);
    CHECK_THROWS_AS(RadialTransform(0.1, 0.3, 3.0), Error);
    CHECK_THROWS_AS(RadialTransform(0.0, 0.3, 2.0), Error);
    CHECK_THROWS_AS(RadialTransform(0.3, 0.1, 2.0), Error);

    const RadialTransform t(0.1, 0.3, 2.0);
    CHECK_THAT(t.slope(), WithinAbs((0.3 - 0.1) / (0.3 - 0.2), 1e-15));
    CHECK_THAT(t.offset(), WithinAbs((1.0 - 2.0) * 0.3 * 0.1 / (0.3 - 0.2), 1e-15));
}

TEST_CASE("radial map fixed points and branches", "[companions]")
{
    const RadialTransform t(0.1, 0.3, 2.0);
    CHECK(radial_forward(t, 0.0) == 0.0);
    CHECK_THAT(radial_forward(t, 0.2), WithinAbs(0.1, 1e-15));
    CHECK_THAT(t.slope() * 0.2 + t.offset(), WithinAbs(0.1, 1e-12));
    CHECK_THAT(radial_forward(t, 0.3), WithinAbs(0.3, 1e-12));
    CHECK_THAT(radial_inverse(t, 0.1), WithinAbs(0.2, 1e-15));
    CHECK_THAT(radial_inverse(t, 0.3), WithinAbs(0.3, 1e-12));
    CHECK(kind_of([&] { radial_forward(t, 0.31); }) == ErrorKind::Domain);
    CHECK(kind_of([&] { radial_forward(t, -1e-9); }) == ErrorKind::Domain);
    CHECK(kind_of([&] { radial_inverse(t, 0.5); }) == ErrorKind::Domain);
}

TEST_CASE("property: radial map is monotone and invertible", "[companions][property]")
{
    gen::Source src(51);
    for (int trial = 0; trial < 200; ++trial) {
        const double r1 = src.uniform(0.01, 1.0);
        const double q = src.uniform(1.01, 5.0);
        const double r2 = r1 * q * src.uniform(1.01, 3.0);
        const RadialTransform t(r1, r2, q);
        CHECK(t.slope() > 0.0);
        double previous = -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double r = r2 * (i / 100.0);
            const double rp = radial_forward(t, r);
            CHECK(rp > previous);
            previous = rp;
            CHECK(std::abs(radial_inverse(t, rp) - r) < 1e-12);
            CHECK(std::abs(radial_forward(t, radial_inverse(t, r)) - r) < 1e-12);
        }
        // both branches meet at r = R1 q
        CHECK(std::abs((t.slope() * r1 * q + t.offset()) - r1) < 1e-12);
        CHECK(std::abs(radial_forward(t, r2) - r2) < 1e-12);
    }
}

TEST_CASE("strip profile", "[companions]")
{
    CHECK_THROWS_AS(StripProfile(0.0, 1e-3, 1), Error);
    CHECK_THROWS_AS(StripProfile(1.0, 1e-3, 0), Error);

    const double period = 8e-3;
    const StripProfile p(1.7, period, 1);
    CHECK(strip_height(p, 0.0) == 0.0);
    CHECK_THAT(strip_height(p, period / 4), WithinAbs(1.7 * period / (2 * kPi), 1e-15));
    CHECK_THROWS_AS(strip_height(p, NAN), Error);

    gen::Source src(52);
    for (int i = 0; i < 500; ++i) {
        const double x = src.uniform(-0.05, 0.05);
        CHECK(std::abs(strip_height(p, x + period) - strip_height(p, x)) < 1e-12);
        CHECK(std::abs(strip_height(p, -x) + strip_height(p, x)) < 1e-15);
    }
}

TEST_CASE("geometric phase", "[companions]")
{
    const double period = 5e-3;
    for (double a : {0.3, 1.0, 4.0}) {
        const StripProfile plus(a, period, 1), minus(a, period, -1);
        CHECK_THAT(pb_phase(plus, period / 4), WithinAbs(0.0, 1e-15));
        CHECK_THAT(pb_phase(plus, 0.0), WithinAbs(2 * std::atan(a), 1e-12));
        CHECK_THAT(pb_phase(minus, 0.0), WithinAbs(-2 * std::atan(a), 1e-12));

        double lo = 0.0, hi = 0.0;
        for (int i = 0; i <= 10000; ++i) {
            const double x = period * i / 10000.0;
            const double phi = pb_phase(plus, x);
            CHECK(std::abs(phi) <= 2 * std::atan(a) + 1e-15);
            CHECK(pb_phase(minus, x) == -phi);
            lo = std::min(lo, phi);
            hi = std::max(hi, phi);
        }
        CHECK_THAT(hi, WithinAbs(2 * std::atan(a), 1e-12));
        CHECK_THAT(lo, WithinAbs(-2 * std::atan(a), 1e-12));
    }
    CHECK_THAT(std::abs(pb_phase(StripProfile(1e6, period, 1), 0.0)), WithinAbs(kPi, 1e-5));
}

TEST_CASE("grating deflection", "[companions]")
{
    CHECK(grating_angle(0, 1e-3, 2e-3) == 0.0);
    CHECK_THAT(grating_angle(1, 2e-3, 2e-3), WithinAbs(kPi / 2, 1e-15));
    CHECK_THAT(grating_angle(1, 1e-3, 2e-3) * 180 / kPi, WithinAbs(30.0, 1e-9));
    CHECK(kind_of([] { grating_angle(3, 1e-3, 2e-3); }) == ErrorKind::EvanescentOrder);
    CHECK(kind_of([] { grating_angle(1, 0.0, 2e-3); }) == ErrorKind::InvalidInput);

    gen::Source src(53);
    for (int i = 0; i < 200; ++i) {
        const double ratio = src.uniform(0.01, 0.5);
        double previous = -kPi;
        for (int m = -2; m <= 2; ++m) {
            const double t = grating_angle(m, ratio, 1.0);
            CHECK(t > previous);
            previous = t;
            CHECK(grating_angle(-m, ratio, 1.0) == -t);
        }
    }
}
