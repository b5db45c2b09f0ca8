#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bicomplex/harmonic.hpp"
#include "bicomplex/poisson.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bicomplex;
using bicomplex::expr::PiecewiseSpec;
using bicomplex::fixtures::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

BCBoundaryData constant_data(double c1, double c2) { return {PiecewiseSpec::constant(c1), PiecewiseSpec::constant(c2)}; }

}  // namespace

TEST(Kernel, ComplexExamples) {
  EXPECT_DOUBLE_EQ(complex_poisson_kernel(0.0, 1.0), 0.3183098861837907);
  EXPECT_DOUBLE_EQ(complex_poisson_kernel(1.0, 1.0), 1.0 / (2.0 * kPi));
  for (int n = 0; n < 100; ++n) {
    const double x = uniform(-5, 5), y = uniform(1e-3, 5);
    EXPECT_EQ(complex_poisson_kernel(x, y), complex_poisson_kernel(-x, y));
    EXPECT_GT(complex_poisson_kernel(x, y), 0.0);
  }
  EXPECT_EQ(kind_of([] { (void)complex_poisson_kernel(0.0, 0.0); }), ErrorKind::DegenerateKernel);
}

TEST(Kernel, BicomplexExamples) {
  const Hyperbolic a = bc_poisson_kernel(0.0, 1.0, 0.0, 1.0);
  EXPECT_EQ(a.eta1, a.eta2);
  EXPECT_DOUBLE_EQ(a.eta1, 1.0 / kPi);
  const Hyperbolic b = bc_poisson_kernel(UpperHalfPoint(1.0, 1.0, 0.0, 1.0));
  EXPECT_DOUBLE_EQ(b.eta1, 1.0 / (2.0 * kPi));
  EXPECT_DOUBLE_EQ(b.eta2, 1.0 / kPi);
  for (int n = 0; n < 100; ++n) {
    EXPECT_TRUE(is_nonnegative(bc_poisson_kernel(uniform(-3, 3), uniform(0.01, 3), uniform(-3, 3), uniform(0.01, 3))));
  }
  EXPECT_EQ(kind_of([] { (void)bc_poisson_kernel(1.0, 1.0, 0.0, 0.0); }), ErrorKind::DegenerateKernel);
}

TEST(UpperHalfPoint, RejectsLowerHalfPlane) {
  EXPECT_EQ(kind_of([] { (void)UpperHalfPoint(0.0, 0.0, 0.0, 1.0); }), ErrorKind::OutOfHalfPlane);
  EXPECT_EQ(kind_of([] { (void)UpperHalfPoint(0.0, 1.0, 0.0, -2.0); }), ErrorKind::OutOfHalfPlane);
  EXPECT_EQ(kind_of([] { (void)complex_poisson_integral(PiecewiseSpec::constant(1.0), 0.0, 0.0); }),
            ErrorKind::OutOfHalfPlane);
}

TEST(PoissonExtend, StepDataAtOneOneOneOne) {
  const Hyperbolic v = poisson_extend(sign_step_data(), UpperHalfPoint(1.0, 1.0, 1.0, 1.0));
  EXPECT_NEAR(v.eta1, 0.5, 1e-12);
  EXPECT_NEAR(v.eta2, 0.5, 1e-12);
}

TEST(PoissonExtend, KernelNormalization) {
  const BCBoundaryData one = constant_data(1.0, 1.0);
  for (int n = 0; n < 50; ++n) {
    const UpperHalfPoint p(uniform(-10, 10), uniform(1e-3, 10), uniform(-10, 10), uniform(1e-3, 10));
    const Hyperbolic v = poisson_extend(one, p);
    EXPECT_NEAR(v.eta1, 1.0, 1e-12);
    EXPECT_NEAR(v.eta2, 1.0, 1e-12);
  }
}

TEST(PoissonExtend, LorentzianClosedFormConfirmedByTrapezoid) {
  auto lorentz = [](double t) { return 1.0 / (1.0 + t * t); };
  // First establish the closed form with a brute-force oracle.
  for (auto [x, y] : {std::pair{0.0, 1.0}, std::pair{1.5, 0.5}, std::pair{-2.0, 2.0}}) {
    EXPECT_NEAR(oracles::trapezoid_poisson(lorentz, x, y), oracles::lorentzian_extension(x, y), 1e-6);
  }
  EXPECT_DOUBLE_EQ(oracles::lorentzian_extension(0.0, 1.0), 0.5);
  const BCBoundaryData data{PiecewiseSpec::parse({"1/(1+t^2)"}, {}), PiecewiseSpec::constant(0.0)};
  const Hyperbolic v = poisson_extend(data, UpperHalfPoint(0.0, 1.0, 3.0, 1.0));
  EXPECT_NEAR(v.eta1, 0.5, 1e-12);
  EXPECT_EQ(v.eta2, 0.0);
  for (int n = 0; n < 30; ++n) {
    const double x = uniform(-4, 4), y = uniform(0.05, 4);
    EXPECT_NEAR(complex_poisson_integral(data.b1, x, y), oracles::lorentzian_extension(x, y), 1e-10);
  }
}

TEST(PoissonExtend, FactorizesIntoComponentIntegrals) {
  const BCBoundaryData data{PiecewiseSpec::parse({"-1", "t/2", "exp(-t)"}, {-2.0, 1.0}),
                            PiecewiseSpec::parse({"exp(t)", "1/(1+t^2)"}, {0.5})};
  for (int n = 0; n < 20; ++n) {
    const UpperHalfPoint p(uniform(-3, 3), uniform(0.2, 3), uniform(-3, 3), uniform(0.2, 3));
    const Hyperbolic a = poisson_extend(data, p);
    const Hyperbolic b = oracles::kernel_product_extension(data, p);
    EXPECT_NEAR(a.eta1, b.eta1, 1e-12);
    EXPECT_NEAR(a.eta2, b.eta2, 1e-12);
    EXPECT_EQ(a.eta1, complex_poisson_integral(data.b1, p.x1, p.y1));
    EXPECT_EQ(a.eta2, complex_poisson_integral(data.b2, p.x2, p.y2));
  }
}

TEST(PoissonExtend, ComplexReductionIsReal) {
  const PiecewiseSpec b = PiecewiseSpec::parse({"atan(t)", "2", "t^2/(1+t^2)"}, {0.0, 3.0});
  const BCBoundaryData data{b, b};
  for (int n = 0; n < 30; ++n) {
    const double x = uniform(-4, 4), y = uniform(0.05, 4);
    const Hyperbolic v = poisson_extend(data, UpperHalfPoint::diagonal(x, y));
    EXPECT_NEAR(v.eta1, v.eta2, 1e-13);
    EXPECT_TRUE(Bicomplex(v).is_complex());
  }
}

TEST(PoissonExtend, MaximumPrinciple) {
  const BCBoundaryData data{PiecewiseSpec::parse({"-0.5", "t", "0.75"}, {-0.5, 0.75}),
                            PiecewiseSpec::parse({"2", "-3"}, {1.0})};
  for (int n = 0; n < 100; ++n) {
    const Hyperbolic v =
        poisson_extend(data, UpperHalfPoint(uniform(-5, 5), uniform(1e-3, 5), uniform(-5, 5), uniform(1e-3, 5)));
    EXPECT_GE(v.eta1, -0.5);
    EXPECT_LE(v.eta1, 0.75);
    EXPECT_GE(v.eta2, -3.0);
    EXPECT_LE(v.eta2, 2.0);
  }
}

TEST(PoissonExtend, ExtensionIsHarmonic) {
  const BCBoundaryData data{PiecewiseSpec::sign_step(), PiecewiseSpec::parse({"exp(t)", "1/(1+t^2)"}, {0.5})};
  const HyperbolicFnPair u([&](double x, double y) { return complex_poisson_integral(data.b1, x, y); },
                           [&](double x, double y) { return complex_poisson_integral(data.b2, x, y); },
                           Region(Rect::upper_half_plane()));
  const auto rep = is_bc_harmonic(u, GridSpec(PlanarGrid(-2.0, 2.0, 0.5, 2.5, 7, 7)), 1e-3, 1e-4);
  EXPECT_TRUE(rep.verdict) << rep.max_residual.eta1 << " " << rep.max_residual.eta2;
}

TEST(PoissonExtend, QuadratureSettingsValidated) {
  QuadratureConfig q;
  q.panels = 0;
  EXPECT_EQ(kind_of([&] { (void)poisson_extend(sign_step_data(), UpperHalfPoint(0, 1, 0, 1), q); }),
            ErrorKind::InvalidArgument);
}

TEST(TraceCheck, StepDataApproachesOne) {
  const TraceReport r = extension_trace_check(sign_step_data(), 2.0, 2.0, {1.0, 0.1, 0.01}, 5e-3);
  ASSERT_EQ(r.values.size(), 3u);
  for (std::size_t n = 0; n < 3; ++n) {
    const double want = 2.0 / kPi * std::atan(2.0 / r.heights[n]);
    EXPECT_NEAR(r.values[n].eta1, want, 1e-10);
    EXPECT_NEAR(r.values[n].eta2, want, 1e-10);
  }
  EXPECT_GT(r.values[2].eta1, 0.996);
  EXPECT_TRUE(r.monotone);
  EXPECT_TRUE(r.verdict);
}

TEST(TraceCheck, ConstantAndJump) {
  const TraceReport c = extension_trace_check(constant_data(3.0, -1.0), 0.4, -7.0, {1.0, 0.1, 0.01}, 1e-10);
  for (const auto& e : c.errors) {
    EXPECT_LE(e.eta1, 1e-12);
    EXPECT_LE(e.eta2, 1e-12);
  }
  EXPECT_TRUE(c.verdict);
  const TraceReport j = extension_trace_check(sign_step_data(), 0.0, 0.0, {1.0, 0.1, 0.01}, 1e-10);
  for (const auto& v : j.values) {
    EXPECT_NEAR(v.eta1, 0.0, 1e-12);
    EXPECT_NEAR(v.eta2, 0.0, 1e-12);
  }
  EXPECT_EQ(kind_of([] { (void)extension_trace_check(sign_step_data(), 1.0, 1.0, {0.1, 1.0}, 1e-3); }),
            ErrorKind::InvalidArgument);
}

TEST(RepresentSignStep, Examples) {
  const Hyperbolic a = represent_sign_step(UpperHalfPoint(1.0, 1.0, 1.0, 1.0));
  EXPECT_DOUBLE_EQ(a.eta1, 0.5);
  EXPECT_DOUBLE_EQ(a.eta2, 0.5);
  EXPECT_EQ(represent_sign_step(UpperHalfPoint(0.0, 5.0, 0.0, 7.0)), Hyperbolic(0.0));
  const Hyperbolic c = represent_sign_step(UpperHalfPoint(1.0, 1.0, -1.0, 1.0));
  EXPECT_DOUBLE_EQ(c.eta1, 0.5);
  EXPECT_DOUBLE_EQ(c.eta2, -0.5);
  EXPECT_FALSE(Bicomplex(c).is_complex());
  EXPECT_EQ(kind_of([] { (void)represent_sign_step(UpperHalfPoint(1.0, 1.0, 1.0, 1.0), {}, -1.0); }),
            ErrorKind::RepresentationMismatch);
}

TEST(RepresentSignStep, AgreesWithQuadratureOnRandomPoints) {
  for (int n = 0; n < 40; ++n) {
    const UpperHalfPoint p(uniform(-5, 5), uniform(0.01, 5), uniform(-5, 5), uniform(0.01, 5));
    EXPECT_NO_THROW((void)represent_sign_step(p));
  }
}
