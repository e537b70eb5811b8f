#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include <gtest/gtest.h>

#include "wecopt/errors.hpp"
#include "wecopt/hydrodyn/hydro_provider.hpp"
#include "wecopt/objectives/climate.hpp"
#include "wecopt/objectives/design.hpp"
#include "wecopt/objectives/evaluation.hpp"

namespace wecopt {
namespace {

int ClimateErrorLine(const std::string& text) {
  std::istringstream in(text);
  try {
    ReadClimate(in, "c");
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Climate, ParsesRowsInOrder) {
  std::istringstream in("# site: albany\nhs,tp,probability\n2,8,0.3\n\n3,10,0.4\n");
  const WaveClimate c = ReadClimate(in, "c");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.site, "albany");
  EXPECT_EQ(c.states[1].sea, (SeaState{3.0, 10.0}));
  EXPECT_NEAR(c.TotalProbability(), 0.7, 1e-15);

  std::ostringstream out;
  WriteClimate(out, c);
  std::istringstream again(out.str());
  const WaveClimate back = ReadClimate(again, "c");
  EXPECT_EQ(back.states.size(), 2u);
  EXPECT_EQ(back.states[0].probability, 0.3);
}

TEST(Climate, ErrorsNameTheLine) {
  EXPECT_EQ(ClimateErrorLine("hs,tp\n2,8\n"), 1);
  EXPECT_EQ(ClimateErrorLine("hs,tp,probability\n2,8,0.3\n3,10,-0.1\n"), 3);
  EXPECT_EQ(ClimateErrorLine("hs,tp,probability\n2,8,0.7\n3,10,0.4\n"), 3);
  EXPECT_EQ(ClimateErrorLine("hs,tp,probability\n2,8,0.1\n2,8,0.1\n"), 3);
  EXPECT_EQ(ClimateErrorLine("hs,tp,probability\n2,x,0.1\n"), 2);
  EXPECT_EQ(ClimateErrorLine("hs,tp,probability\n2,8\n"), 2);
  EXPECT_EQ(ClimateErrorLine("hs,tp,probability\n"), 0);
  EXPECT_THROW(LoadClimate("/no/such/climate.csv"), ParseError);
}

TEST(DesignSpace, BoundsAndDimension) {
  const DesignSpace s(3);
  ASSERT_EQ(s.dimension(), 10u);
  EXPECT_EQ(s.lower()[0], 5.0);
  EXPECT_EQ(s.upper()[0], 20.0);
  EXPECT_EQ(s.lower()[1], 0.4);
  EXPECT_EQ(s.upper()[3], 80.0);
  for (std::size_t i = 4; i < 10; ++i) {
    EXPECT_EQ(s.lower()[i], 3.0);
    EXPECT_EQ(s.upper()[i], 8.0);
  }
}

DesignVector Reference(std::size_t n) {
  DesignVector d;
  d.radius = 5.5;
  d.aspect_ratio = 1.0;
  d.stiffness.assign(n, 2e5);
  d.damping.assign(n, 1.5e5);
  return d;
}

TEST(DesignSpace, EncodeDecodeRoundTrip) {
  const DesignSpace s(2);
  DesignVector d = Reference(2);
  d.stiffness = {1e3, 3.3e7};
  d.damping = {1e8, 4.2e4};
  const DesignVector back = s.Decode(s.Encode(d));
  EXPECT_EQ(back.radius, d.radius);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_NEAR(back.stiffness[k], d.stiffness[k], 1e-12 * d.stiffness[k]);
    EXPECT_NEAR(back.damping[k], d.damping[k], 1e-12 * d.damping[k]);
  }
  EXPECT_NEAR(s.Encode(d)[4], 3.0, 1e-15);
  EXPECT_THROW(s.Encode(Reference(3)), DomainError);
  EXPECT_THROW(s.Decode(std::vector<double>(5, 1.0)), DomainError);
}

TEST(DesignSpace, CheckNamesTheParameter) {
  const DesignSpace s(1);
  DesignVector d = Reference(1);
  d.radius = 25.0;
  try {
    s.Check(d);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("radius"), std::string::npos);
  }
  d = Reference(1);
  d.damping[0] = 1e9;
  EXPECT_FALSE(s.Contains(d));
  EXPECT_TRUE(s.Contains(Reference(1)));
}

TEST(DesignFile, RoundTripAndLengthCheck) {
  const DesignVector d = Reference(2);
  std::stringstream ss;
  WriteDesign(ss, d);
  EXPECT_EQ(ReadDesign(ss, "d"), d);
  std::istringstream odd("5.5 1 45 45 1e5");
  EXPECT_THROW(ReadDesign(odd, "d"), Error);
  std::istringstream comment("# reference\n5.5 1 45 45\n2e5 1.5e5\n");
  EXPECT_EQ(ReadDesign(comment, "d"), Reference(1));
}

WaveClimate Toy() {
  WaveClimate c;
  c.states = {{{2.0, 8.0}, 0.3}, {{3.0, 10.0}, 0.4}, {{4.0, 12.0}, 0.29}};
  return c;
}

Evaluator MakeEvaluator(WaveClimate c) {
  return Evaluator(std::move(c), std::make_shared<AnalyticHydroProvider>());
}

TEST(Evaluator, BatchAndLoopAgree) {
  const Evaluator ev = MakeEvaluator(Toy());
  DesignVector d = Reference(3);
  d.radius = 9.0;
  d.stiffness = {1e5, 4e5, 2e6};
  d.damping = {3e5, 1e5, 8e5};
  const auto a = ev.Evaluate(d);
  const auto b = ev.EvaluatePerState(d);
  EXPECT_NEAR(a.p_aap, b.p_aap, 1e-10 * b.p_aap);
  EXPECT_NEAR(a.peak_force, b.peak_force, 1e-10 * b.peak_force);
  EXPECT_EQ(a.state_iterations, b.state_iterations);
}

TEST(Evaluator, AnnualPowerIsProbabilityWeighted) {
  const Evaluator ev = MakeEvaluator(Toy());
  const auto r = ev.Evaluate(Reference(3));
  double sum = 0.0;
  for (std::size_t k = 0; k < 3; ++k) sum += Toy().states[k].probability * r.state_power[k];
  EXPECT_NEAR(r.p_aap, sum, 1e-12 * sum);

  WaveClimate half = Toy();
  for (auto& e : half.states) e.probability *= 0.5;
  EXPECT_NEAR(MakeEvaluator(half).AnnualAveragePower(Reference(3)), 0.5 * r.p_aap,
              1e-12 * r.p_aap);
}

TEST(Evaluator, SignificantMassAndLcoe) {
  const Evaluator ev = MakeEvaluator(Toy());
  const auto r = ev.Evaluate(Reference(3));
  const auto [mb, mas] = ev.SignificantMass(Reference(3));
  EXPECT_NEAR(mb, WecGeometry{}.BuoyMass(), 1e-6);
  EXPECT_NEAR(mas, 225e3 / 1.94e6 * r.peak_force, 1e-9 * mas);
  EXPECT_NEAR(r.lcoe, std::pow(8760.0 * r.p_aap / (mb + mas), -0.5), 1e-12 * r.lcoe);
}

TEST(Evaluator, RejectsMismatchedDesigns) {
  const Evaluator ev = MakeEvaluator(Toy());
  EXPECT_THROW(ev.Evaluate(Reference(2)), DomainError);
  DesignVector d = Reference(3);
  d.tether_inclination_deg = 85.0;
  EXPECT_THROW(ev.Evaluate(d), DomainError);
}

TEST(Evaluator, ObjectiveSigns) {
  const Evaluator ev = MakeEvaluator(Toy());
  const std::vector<double> x = ev.space().Encode(Reference(3));
  const auto r = ev.Evaluate(Reference(3));
  EXPECT_NEAR(ev.Objective(x, ObjectiveKind::kPower), -r.p_aap, 1e-9 * r.p_aap);
  EXPECT_NEAR(ev.Objective(x, ObjectiveKind::kLcoe), r.lcoe, 1e-12 * r.lcoe);
  EXPECT_EQ(ReportedValue(r, ObjectiveKind::kPower), r.p_aap);
}

TEST(Evaluator, ReferenceDesignRegression) {
  WaveClimate c;
  c.states = {{{3.0, 8.0}, 1.0}};
  const auto r = MakeEvaluator(c).Evaluate(Reference(1));
  EXPECT_GT(r.p_aap, 0.0);
  EXPECT_TRUE(r.converged());
  EXPECT_NEAR(r.p_aap, 61917.66618370052, 1e-8 * 61917.66618370052);
  EXPECT_NEAR(r.lcoe, 0.02870252131644, 1e-8);
}

TEST(MassModel, AnchorSlope) {
  for (double f : {1.0, 1.94e6, 3.7e7}) {
    EXPECT_NEAR(AnchorMass(f), 225e3 / 1.94e6 * f, 1e-12 * f);
  }
  EXPECT_NEAR(AnchorMass(1.94e6), 225e3, 1e-6);
  EXPECT_NEAR(225e3 / 1.94e6, 0.1160, 5e-5);
}

TEST(MassModel, LcoeQuartering) {
  for (double p : {1.0, 6.8e5, 1.8e6}) {
    for (double m : {1e5, 4.47e5}) {
      EXPECT_EQ(LcoeProxy(4.0 * p, m), 0.5 * LcoeProxy(p, m));
    }
  }
  EXPECT_EQ(LcoeProxy(0.0, 1e5), std::numeric_limits<double>::infinity());
  EXPECT_EQ(LcoeProxy(-1.0, 1e5), std::numeric_limits<double>::infinity());
}

TEST(EvaluationRecord, JsonLineHasStableKeyOrder) {
  EvaluationRecord r;
  r.design = Reference(1);
  r.p_aap = 10.0;
  r.lcoe = std::numeric_limits<double>::infinity();
  r.state_power = {10.0};
  r.state_iterations = {3};
  r.state_converged = {true};
  const std::string line = ToJsonLine(r);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_LT(line.find("\"a\""), line.find("\"aspect_ratio\""));
  EXPECT_LT(line.find("\"p_aap_w\""), line.find("\"lcoe\""));
  EXPECT_NE(line.find("\"lcoe\":null"), std::string::npos);
  EXPECT_EQ(ParseObjectiveKind("lcoe"), ObjectiveKind::kLcoe);
  EXPECT_THROW(ParseObjectiveKind("energy"), ConfigError);
}

}  // namespace
}  // namespace wecopt
