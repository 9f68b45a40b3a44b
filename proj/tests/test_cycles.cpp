#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "enriques/cycles.hpp"

using namespace enriques;

namespace {

std::vector<TorusPoint> all_points(std::int64_t level, PeriodBasis basis = PeriodBasis::Generic) {
  std::vector<TorusPoint> out;
  for (std::int64_t a = 0; a < level; ++a) {
    for (std::int64_t b = 0; b < level; ++b) out.emplace_back(a, b, level, basis);
  }
  return out;
}

ActionSpec bdf(int row, std::int64_t a, std::int64_t b, std::int64_t level) {
  return ActionSpec::bdf(row, TorusPoint(a, b, level, bdf_row(row).basis_f));
}

// Hand-written coordinate matrices for xi acting on (a, b) coordinates.
struct CoordMatrix {
  std::int64_t m00, m01, m10, m11;
};

CoordMatrix oracle_matrix(int d) {
  switch (d) {
    case 2: return {-1, 0, 0, -1};
    case 3: return {-1, -1, 1, 0};  // omega: 1 -> omega, tau=zeta -> omega*zeta = -1
    case 4: return {0, -1, 1, 0};
    default: return {0, -1, 1, 1};  // zeta: 1 -> zeta, zeta -> zeta^2 = zeta - 1
  }
}

struct Coord {
  std::int64_t a, b;
};

std::int64_t mod(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

Coord apply(const CoordMatrix& m, Coord p, std::int64_t n) {
  return {mod(m.m00 * p.a + m.m01 * p.b, n), mod(m.m10 * p.a + m.m11 * p.b, n)};
}

PeriodBasis basis_for(int d) {
  return d == 2 ? PeriodBasis::Generic : (d == 4 ? PeriodBasis::Gauss : PeriodBasis::Eisenstein);
}

RootOfUnity root_for(int d) {
  switch (d) {
    case 2: return RootOfUnity::MinusOne;
    case 3: return RootOfUnity::Omega;
    case 4: return RootOfUnity::I;
    default: return RootOfUnity::Zeta;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// build_action

TEST(BuildAction, RowOneGenerator) {
  const Action a = build_action(bdf(1, 0, 0, 1), {2, 2});
  EXPECT_EQ(a.order, 2);
  for (const auto& e : all_points(2)) {
    for (const auto& f : all_points(2)) {
      EXPECT_EQ(a.generator({e, f}), (ProductPoint{e + make_point(1, 0, 2), -f}));
    }
  }
}

TEST(BuildAction, RowSixHasTwoCommutingOrderThreeGenerators) {
  const Action a = build_action(bdf(6, 0, 0, 1), {9, 3});
  EXPECT_EQ(a.order, 3);
  ASSERT_EQ(a.kernel_generators.size(), 1u);
  const AffineAuto& t = a.kernel_generators.front();
  EXPECT_EQ(auto_order(t, 9, 3), 3);
  EXPECT_EQ(a.generator * t, t * a.generator);
  EXPECT_EQ(a.kernel.size(), 3u);
}

TEST(BuildAction, LiebermanSquareIsIdentity) {
  const Action a = build_action(ActionSpec::lieberman(TorusPoint::origin(), make_point(1, 0, 2)),
                                {2, 2});
  EXPECT_EQ(a.order, 2);
  for (const auto& e : all_points(2)) {
    for (const auto& f : all_points(2)) {
      const ProductPoint p{e, f};
      EXPECT_EQ(a.generator(a.generator(p)), p);
    }
  }
}

TEST(BuildAction, RowTableMatchesShape) {
  const int ds[] = {2, 3, 4, 6, 2, 3, 4};
  const RootOfUnity roots[] = {RootOfUnity::MinusOne, RootOfUnity::Omega, RootOfUnity::I,
                               RootOfUnity::Zeta,     RootOfUnity::MinusOne, RootOfUnity::Omega,
                               RootOfUnity::I};
  for (int row = 1; row <= 7; ++row) {
    EXPECT_EQ(bdf_row(row).d, ds[row - 1]);
    EXPECT_EQ(bdf_row(row).root, roots[row - 1]);
    EXPECT_EQ(bdf_row(row).kernel_generator.has_value(), row >= 5);
  }
  EXPECT_THROW(bdf_row(0), std::out_of_range);
  EXPECT_THROW(bdf_row(8), std::out_of_range);
}

TEST(BuildAction, RejectsIncompatibleLevels) {
  EXPECT_THROW(build_action(bdf(2, 0, 0, 1), {4, 3}), std::invalid_argument);
  EXPECT_THROW(build_action(bdf(1, 1, 0, 4), {2, 2}), std::invalid_argument);
  EXPECT_THROW(build_action(bdf(5, 0, 0, 1), {3, 2}), std::invalid_argument);
  EXPECT_THROW(build_action(bdf(6, 0, 0, 1), {3, 2}), std::invalid_argument);
}

TEST(ActionSpec, RejectsBadInputs) {
  EXPECT_THROW(ActionSpec::bdf(2, make_point(1, 0, 3)), std::invalid_argument);
  EXPECT_THROW(ActionSpec::bdf(3, make_point(1, 0, 2, PeriodBasis::Eisenstein)),
               std::invalid_argument);
  EXPECT_THROW(ActionSpec::lieberman(TorusPoint::origin(), make_point(1, 0, 4)),
               std::invalid_argument);
}

// ---------------------------------------------------------------------------
// cycles

TEST(ZeroCycle, CanonicalStorage) {
  const FiniteSubgroup trivial;
  const ProductPoint x{make_point(1, 0, 3), make_point(0, 1, 2)};
  const ProductPoint y{make_point(2, 2, 3), TorusPoint::origin()};
  EXPECT_EQ(ZeroCycle({x, y, x}, trivial), ZeroCycle({y, x, x}, trivial));
  EXPECT_NE(ZeroCycle({x, y, y}, trivial), ZeroCycle({y, x, x}, trivial));
  EXPECT_EQ(ZeroCycle({x, y, x}, trivial).length(), 3u);
}

TEST(ActOnCycle, IdentityAndOrbitPairs) {
  const Action a = build_action(ActionSpec::lieberman(make_point(1, 0, 4), make_point(1, 0, 2)),
                                {4, 4});
  const FiniteSubgroup& t = a.kernel;
  const ProductPoint x{make_point(1, 2, 4), make_point(3, 1, 4)};
  const ZeroCycle c({x, x + x, -x}, t);
  EXPECT_EQ(act_on_cycle(AffineAuto{}, c, t), c);

  const ZeroCycle pair({x, a.generator(x)}, t);
  EXPECT_EQ(act_on_cycle(a.generator, pair, t), pair);
}

TEST(ActOnCycle, LiebermanSumIdentity) {
  // sum iota(x_i) = (-sum b_i + (n+1)a, sum b'_i + (n+1)a')
  const TorusPoint a_pt = make_point(1, 0, 4);
  const TorusPoint ap = make_point(0, 1, 2);
  const Action a = build_action(ActionSpec::lieberman(a_pt, ap), {4, 4});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> r(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ProductPoint> pts;
    for (int i = 0; i < 4; ++i) {
      pts.push_back({make_point(r(rng), r(rng), 4), make_point(r(rng), r(rng), 4)});
    }
    const ZeroCycle c(pts, a.kernel);
    const ProductPoint s = cycle_sum(c, a.kernel);
    const ProductPoint image_sum = cycle_sum(act_on_cycle(a.generator, c, a.kernel), a.kernel);
    EXPECT_EQ(image_sum, (ProductPoint{-s.e + 4 * a_pt, s.f + 4 * ap}));
  }
}

TEST(CycleSum, Examples) {
  const FiniteSubgroup trivial;
  const ProductPoint x{make_point(1, 2, 5), make_point(3, 1, 4)};
  EXPECT_TRUE(cycle_sum(ZeroCycle({x, -x}, trivial), trivial).is_zero());
  const ProductPoint zero{TorusPoint::origin(), TorusPoint::origin()};
  EXPECT_TRUE(cycle_sum(ZeroCycle(std::vector<ProductPoint>(5, zero), trivial), trivial).is_zero());
}

TEST(CycleSum, IndependentOfSummationOrder) {
  const FiniteSubgroup t = bdf(5, 0, 0, 1).kernel();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> r(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ProductPoint> pts;
    for (int i = 0; i < 5; ++i) pts.push_back({make_point(r(rng), r(rng), 6), make_point(r(rng), r(rng), 6)});
    const ProductPoint s = cycle_sum(ZeroCycle(pts, t), t);
    std::shuffle(pts.begin(), pts.end(), rng);
    ProductPoint fold = t.zero();
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) fold = *it + fold;
    EXPECT_EQ(quotient_rep(fold, t), s);
  }
}

TEST(CycleSum, EquivarianceLaw) {
  // cycle_sum(g.c) = M(cycle_sum(c)) + len * t, exhaustively on small models.
  const std::vector<std::pair<ActionSpec, ModelLevels>> cases = {
      {bdf(1, 1, 0, 2), {2, 2}},
      {bdf(2, 1, 2, 3), {3, 3}},
      {bdf(3, 1, 1, 2), {4, 2}},
      {bdf(5, 1, 0, 2), {2, 2}},
      {bdf(6, 0, 0, 1), {3, 3}},
      {ActionSpec::lieberman(make_point(1, 0, 2), make_point(0, 1, 2)), {2, 2}},
  };
  for (const auto& [spec, levels] : cases) {
    const Action a = build_action(spec, levels);
    const PointModel model = PointModel::full(levels, a.kernel);
    const AffineAuto& g = a.generator;
    const AffineAuto linear(g.linear_e(), g.linear_f(), a.kernel.zero());
    for (std::size_t len = 1; len <= 3; ++len) {
      for_each_multiset(model.size(), len, [&](std::span<const std::size_t> idx) {
        std::vector<ProductPoint> pts;
        for (auto i : idx) pts.push_back(model.points()[i]);
        const ZeroCycle c(pts, a.kernel);
        const ProductPoint lhs = cycle_sum(act_on_cycle(g, c, a.kernel), a.kernel);
        const ProductPoint rhs = quotient_rep(
            linear(cycle_sum(c, a.kernel)) + static_cast<std::int64_t>(len) * g.translation(),
            a.kernel);
        EXPECT_EQ(lhs, rhs) << spec.describe();
        return lhs == rhs;
      });
    }
  }
}

// ---------------------------------------------------------------------------
// enumeration

TEST(ForEachMultiset, CountsMatchBinomials) {
  // C(u + k - 1, k)
  EXPECT_EQ(for_each_multiset(4, 3, [](auto) { return true; }), 20u);
  EXPECT_EQ(for_each_multiset(5, 0, [](auto) { return true; }), 1u);
  EXPECT_EQ(for_each_multiset(8, 6, [](auto) { return true; }), 1716u);
  std::set<std::vector<std::size_t>> seen;
  for_each_multiset(5, 3, [&](std::span<const std::size_t> idx) {
    EXPECT_TRUE(std::is_sorted(idx.begin(), idx.end()));
    EXPECT_TRUE(seen.emplace(idx.begin(), idx.end()).second);
    return true;
  });
  EXPECT_EQ(seen.size(), 35u);
}

TEST(ZeroFiber, CyclicGroupOfOrderTwo) {
  const FiniteSubgroup trivial;
  const PointModel model = PointModel::from_points(
      {{TorusPoint::origin(), TorusPoint::origin()}, {make_point(1, 0, 2), TorusPoint::origin()}},
      trivial);
  EXPECT_EQ(collect_zero_fiber(model, 2).size(), 2u);
  const auto ones = collect_zero_fiber(model, 1);
  ASSERT_EQ(ones.size(), 1u);
  EXPECT_TRUE(ones.front().points().front().is_zero());
}

TEST(ZeroFiber, LengthOneIsOrigin) {
  const Action a = build_action(bdf(6, 0, 0, 1), {3, 3});
  const PointModel model = PointModel::full(a.levels, a.kernel);
  const auto fiber = collect_zero_fiber(model, 1);
  ASSERT_EQ(fiber.size(), 1u);
  EXPECT_TRUE(fiber.front().points().front().is_zero());
}

TEST(ZeroFiber, MatchesPairCountingOracle) {
  for (std::int64_t level : {2, 3, 4}) {
    const FiniteSubgroup trivial;
    const PointModel model = PointModel::full({level, level}, trivial);
    // Unordered pairs {x, y} with x + y = 0: (ordered + diagonal) / 2.
    std::size_t ordered = 0, diagonal = 0;
    for (const auto& x : model.points()) {
      for (const auto& y : model.points()) ordered += (x + y).is_zero();
      diagonal += (x + x).is_zero();
    }
    EXPECT_EQ(collect_zero_fiber(model, 2).size(), (ordered + diagonal) / 2) << level;
  }
}

TEST(ZeroFiber, MatchesTripleLoopOracle) {
  const Action a = build_action(bdf(5, 0, 0, 1), {2, 4});
  const PointModel model = PointModel::full(a.levels, a.kernel);
  const auto& pts = model.points();
  std::size_t expected = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      for (std::size_t k = j; k < pts.size(); ++k) {
        expected += a.kernel.contains(pts[i] + pts[j] + pts[k]);
      }
    }
  }
  const auto fiber = collect_zero_fiber(model, 3);
  EXPECT_EQ(fiber.size(), expected);
  EXPECT_EQ(std::set<ZeroCycle>(fiber.begin(), fiber.end()).size(), fiber.size());
  for (const auto& c : fiber) EXPECT_TRUE(cycle_sum(c, a.kernel).is_zero());
}

// ---------------------------------------------------------------------------
// f-component

TEST(FComponent, Examples) {
  const CyclotomicClass minus(RootOfUnity::MinusOne, PeriodBasis::Generic);
  for (const auto& z : all_points(4)) EXPECT_EQ(f_component(2, minus, 1, z), z);

  const CyclotomicClass omega(RootOfUnity::Omega, PeriodBasis::Eisenstein);
  const TorusPoint gen = make_point(1, 1, 3, PeriodBasis::Eisenstein);
  EXPECT_TRUE(f_component(3, omega, 1, gen).is_zero());
  EXPECT_TRUE(f_component_reduced(3, 1, gen).is_zero());
}

TEST(FComponent, SixCollapsesExhaustively) {
  const CyclotomicClass zeta(RootOfUnity::Zeta, PeriodBasis::Eisenstein);
  for (std::int64_t m = 1; m <= 6; ++m) {
    for (const auto& z : all_points(6 * m, PeriodBasis::Eisenstein)) {
      ASSERT_TRUE(f_component(6, zeta, m, z).is_zero()) << m << " " << format_point(z);
    }
  }
}

TEST(FComponent, ReducedFormsAgree) {
  std::mt19937_64 rng(5);
  for (int d : {2, 3, 4, 6}) {
    const CyclotomicClass xi(root_for(d), basis_for(d));
    for (int trial = 0; trial < 200; ++trial) {
      const std::int64_t level = std::uniform_int_distribution<std::int64_t>(1, 40)(rng);
      std::uniform_int_distribution<std::int64_t> r(0, level - 1);
      const TorusPoint z(r(rng), r(rng), level, basis_for(d));
      const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 9)(rng);
      ASSERT_EQ(f_component(d, xi, m, z), f_component_reduced(d, m, z));
    }
  }
}

TEST(FComponent, OracleFromExplicitOrbitSums) {
  // F-projection of sum_i sum_j g^j(x_i), computed with hand-written
  // coordinate matrices, equals f_component(d, xi, m, z).
  std::mt19937_64 rng(20240612);
  for (int d : {2, 3, 4, 6}) {
    const CoordMatrix mat = oracle_matrix(d);
    const CyclotomicClass xi(root_for(d), basis_for(d));
    for (int trial = 0; trial < 150; ++trial) {
      const std::int64_t n = std::uniform_int_distribution<std::int64_t>(2, 36)(rng);
      std::uniform_int_distribution<std::int64_t> r(0, n - 1);
      const Coord z{r(rng), r(rng)};
      const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 5)(rng);
      Coord total{0, 0};
      for (std::int64_t i = 0; i < m; ++i) {
        Coord f{r(rng), r(rng)};
        for (int j = 0; j < d; ++j) {
          total = {mod(total.a + f.a, n), mod(total.b + f.b, n)};
          const Coord moved = apply(mat, f, n);
          f = {mod(moved.a + z.a, n), mod(moved.b + z.b, n)};
        }
      }
      const TorusPoint expected(total.a, total.b, n, basis_for(d));
      ASSERT_EQ(f_component(d, xi, m, TorusPoint(z.a, z.b, n, basis_for(d))), expected)
          << "d=" << d << " n=" << n << " m=" << m;
    }
  }
}

TEST(FComponent, OracleMatricesMatchLibrary) {
  for (int d : {2, 3, 4, 6}) {
    const CoordMatrix m = oracle_matrix(d);
    const CyclotomicClass xi(root_for(d), basis_for(d));
    for (const auto& p : all_points(7, basis_for(d))) {
      const Coord c = apply(m, {p.a(), p.b()}, 7);
      EXPECT_EQ(cm_apply(xi, p), TorusPoint(c.a, c.b, 7, basis_for(d)));
    }
  }
}

// ---------------------------------------------------------------------------
// invariance

TEST(Invariance, CriterionExamples) {
  EXPECT_TRUE(invariance_criterion(bdf(1, 1, 0, 2), 1));
  EXPECT_FALSE(invariance_criterion(bdf(2, 0, 0, 1), 1));
  EXPECT_TRUE(invariance_criterion(ActionSpec::lieberman(make_point(1, 0, 4), make_point(1, 0, 2)), 3));
  EXPECT_FALSE(invariance_criterion(ActionSpec::lieberman(make_point(1, 0, 4), make_point(1, 0, 2)), 2));
  EXPECT_FALSE(invariance_criterion(bdf(1, 1, 0, 4), 1));
}

TEST(Invariance, BruteForceAgreesWhenCriterionHolds) {
  const std::vector<std::tuple<ActionSpec, int, ModelLevels>> cases = {
      {bdf(1, 1, 0, 2), 1, {2, 2}},
      {bdf(1, 1, 0, 2), 1, {4, 4}},
      {bdf(2, 1, 1, 3), 2, {3, 3}},
      {bdf(3, 1, 3, 4), 3, {4, 4}},
      {bdf(5, 1, 0, 2), 1, {2, 2}},
      {bdf(6, 0, 0, 1), 2, {3, 3}},
      {bdf(4, 0, 0, 1), 5, {6, 1}},
      {ActionSpec::lieberman(make_point(1, 0, 4), make_point(1, 0, 2)), 3, {4, 2}},
  };
  for (const auto& [spec, n, levels] : cases) {
    ASSERT_TRUE(invariance_criterion(spec, n)) << spec.describe();
    const Action a = build_action(spec, levels);
    const InvarianceResult r = invariance_bruteforce(a, n, PointModel::full(levels, a.kernel));
    EXPECT_TRUE(r.invariant) << spec.describe();
    EXPECT_GT(r.cycles_checked, 0u);
  }
}

TEST(Invariance, LiebermanLengthSixOnSubgroupModel) {
  const TorusPoint a_pt = make_point(1, 0, 6);
  const Action a = build_action(ActionSpec::lieberman(a_pt, make_point(1, 0, 2)), {6, 2});
  std::vector<ProductPoint> pts;
  for (std::int64_t k = 0; k < 6; ++k) {
    for (const auto& f : all_points(2)) pts.push_back({k * a_pt, f});
  }
  const PointModel model = PointModel::from_points(pts, a.kernel);
  EXPECT_EQ(model.size(), 24u);
  EXPECT_TRUE(invariance_bruteforce(a, 5, model).invariant);
}

TEST(Invariance, BruteForceFindsCounterexample) {
  const ActionSpec spec = bdf(1, 1, 0, 4);
  const Action a = build_action(spec, {4, 4});
  const InvarianceResult r = invariance_bruteforce(a, 1, PointModel::full(a.levels, a.kernel));
  EXPECT_FALSE(r.invariant);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_TRUE(cycle_sum(*r.counterexample, a.kernel).is_zero());
  EXPECT_FALSE(cycle_sum(act_on_cycle(a.generator, *r.counterexample, a.kernel), a.kernel).is_zero());
}

TEST(Invariance, TrivialGroupIsInvariant) {
  const ActionSpec spec = bdf(1, 0, 0, 1);
  const Action trivial{spec, {2, 2}, AffineAuto{}, {}, spec.kernel(), 1};
  EXPECT_TRUE(invariance_bruteforce(trivial, 2, PointModel::full({2, 2}, spec.kernel())).invariant);
}

// ---------------------------------------------------------------------------
// freeness

TEST(FreenessCriterion, Examples) {
  EXPECT_EQ(freeness_criterion(bdf(1, 1, 0, 2), 1).status, FreenessStatus::FreeByCriterion);
  const FreenessVerdict six = freeness_criterion(bdf(4, 1, 0, 6), 5);
  EXPECT_EQ(six.status, FreenessStatus::NotFree);
  ASSERT_TRUE(six.criterion_value.has_value());
  EXPECT_TRUE(six.criterion_value->is_zero());
  const FreenessVerdict five = freeness_criterion(bdf(5, 1, 0, 2), 1);
  EXPECT_EQ(five.status, FreenessStatus::NotFree);
  EXPECT_EQ(five.element, 1);
}

TEST(FreenessCriterion, NamesConditionAndFlagsConverse) {
  const FreenessVerdict v = freeness_criterion(bdf(2, 1, 0, 3), 2);
  EXPECT_EQ(v.status, FreenessStatus::FreeByCriterion);
  EXPECT_NE(v.condition_fired.find("d=3: T=0"), std::string::npos);
  const FreenessVerdict w = freeness_criterion(bdf(2, 1, 1, 3), 2);
  EXPECT_EQ(w.status, FreenessStatus::NotFree);
  EXPECT_TRUE(std::any_of(w.notes.begin(), w.notes.end(),
                          [](const std::string& s) { return s.find("converse") != std::string::npos; }));
  EXPECT_NE(freeness_criterion(bdf(3, 1, 0, 4), 3).condition_fired.find("d=4: T=0"), std::string::npos);
  EXPECT_NE(freeness_criterion(bdf(7, 1, 0, 4), 3).condition_fired.find("generalized"),
            std::string::npos);
}

TEST(FreenessCriterion, RowThreeReducesToSubgroup) {
  // d=4, T=0: free iff 2mz avoids Z(1+i)/2 (which is 2(1+i)mz != 0).
  for (const auto& z : all_points(4, PeriodBasis::Gauss)) {
    const FreenessVerdict v = freeness_criterion(ActionSpec::bdf(3, z), 3);
    const TorusPoint two_z = 2 * z;
    const bool in_line = two_z.is_zero() || two_z == make_point(1, 1, 2, PeriodBasis::Gauss);
    EXPECT_EQ(v.status == FreenessStatus::FreeByCriterion, !in_line) << format_point(z);
  }
}

TEST(FreenessCriterion, RejectsFailedPreconditions) {
  EXPECT_THROW(freeness_criterion(bdf(2, 0, 0, 1), 1), std::invalid_argument);
  EXPECT_THROW(freeness_criterion(bdf(1, 1, 0, 4), 1), std::invalid_argument);
  EXPECT_THROW(
      freeness_criterion(ActionSpec::lieberman(make_point(1, 0, 2), TorusPoint::origin()), 1),
      std::invalid_argument);
}

TEST(FreenessCriterion, Lieberman) {
  const TorusPoint ap = make_point(1, 0, 2);
  EXPECT_EQ(freeness_criterion(ActionSpec::lieberman(make_point(1, 0, 2), ap), 1).status,
            FreenessStatus::FreeByCriterion);
  EXPECT_EQ(freeness_criterion(ActionSpec::lieberman(make_point(1, 0, 4), ap), 3).status,
            FreenessStatus::FreeByCriterion);
  // a of order 2 with n=3: m*a = 2a = 0.
  EXPECT_EQ(freeness_criterion(ActionSpec::lieberman(make_point(1, 0, 2), ap), 3).status,
            FreenessStatus::NotFree);
  EXPECT_EQ(freeness_criterion(ActionSpec::lieberman(TorusPoint::origin(), ap), 1).status,
            FreenessStatus::NotFree);
}

TEST(FreenessBruteforce, RowFourFindsWitnessAtLevel24) {
  for (const auto& z : all_points(6, PeriodBasis::Eisenstein)) {
    const Action a = build_action(ActionSpec::bdf(4, z), {24, 6});
    const FreenessVerdict v = freeness_bruteforce(a, 5);
    ASSERT_EQ(v.status, FreenessStatus::NotFree) << format_point(z);
    EXPECT_TRUE(verify_witness(a, 5, v));
    EXPECT_EQ(v.witness->length(), 6u);
  }
}

TEST(FreenessBruteforce, RowOneHasNoWitnessAtAnyLevelUpTo8) {
  for (const auto& z : {make_point(1, 0, 2), make_point(0, 1, 2), make_point(1, 1, 2)}) {
    for (std::int64_t le : {2, 4, 6, 8}) {
      for (std::int64_t lf : {2, 4, 6, 8}) {
        const Action a = build_action(ActionSpec::bdf(1, z), {le, lf});
        EXPECT_EQ(freeness_bruteforce(a, 1).status, FreenessStatus::UnknownAtLevel);
      }
    }
  }
}

TEST(FreenessBruteforce, LiebermanWithZeroTranslation) {
  const TorusPoint ap = make_point(1, 0, 2);
  const ActionSpec spec = ActionSpec::lieberman(TorusPoint::origin(), ap);
  const Action a = build_action(spec, default_levels(spec, 1));
  const FreenessVerdict v = freeness_bruteforce(a, 1);
  ASSERT_EQ(v.status, FreenessStatus::NotFree);
  ASSERT_TRUE(verify_witness(a, 1, v));
  const auto& pts = v.witness->points();
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(a.generator(pts[0]), pts[1]);
  EXPECT_EQ(2 * pts[0].f, ap);  // 2b' = -a' = a'
}

TEST(FreenessBruteforce, TamperedWitnessIsRejected) {
  const ActionSpec spec = ActionSpec::bdf(4, make_point(1, 0, 6, PeriodBasis::Eisenstein));
  const Action a = build_action(spec, default_levels(spec, 5));
  FreenessVerdict v = freeness_bruteforce(a, 5);
  ASSERT_TRUE(verify_witness(a, 5, v));

  FreenessVerdict wrong_element = v;
  wrong_element.element = 6;
  EXPECT_FALSE(verify_witness(a, 5, wrong_element));

  auto pts = v.witness->points();
  pts.back() = pts.back() + ProductPoint{make_point(1, 0, 36), TorusPoint::origin(PeriodBasis::Eisenstein)};
  FreenessVerdict moved = v;
  moved.witness = ZeroCycle(pts, a.kernel);
  EXPECT_FALSE(verify_witness(a, 5, moved));
  EXPECT_FALSE(verify_witness(a, 4, v));
}

TEST(FreenessBruteforce, CoherentWithCriterion) {
  // FREE_BY_CRITERION => no witness; NOT_FREE => verified witness at default levels.
  const std::vector<std::pair<int, int>> row_n = {{1, 1}, {1, 3}, {2, 2}, {3, 3}, {4, 5},
                                                  {5, 1}, {5, 3}, {6, 2}, {7, 3}};
  std::size_t free_seen = 0, not_free_seen = 0;
  for (const auto& [row, n] : row_n) {
    for (const auto& entry : scan_z(row, n)) {
      const ActionSpec spec = ActionSpec::bdf(row, entry.z);
      const Action a = build_action(spec, default_levels(spec, n));
      const FreenessVerdict brute = freeness_bruteforce(a, n);
      if (entry.verdict.status == FreenessStatus::FreeByCriterion) {
        ++free_seen;
        EXPECT_EQ(brute.status, FreenessStatus::UnknownAtLevel) << spec.describe() << " n=" << n;
      } else {
        ++not_free_seen;
        ASSERT_EQ(brute.status, FreenessStatus::NotFree) << spec.describe() << " n=" << n;
        EXPECT_TRUE(verify_witness(a, n, brute));
      }
    }
  }
  EXPECT_GT(free_seen, 0u);
  EXPECT_GT(not_free_seen, 0u);
}

TEST(FreenessBruteforce, LiebermanCoherentWithCriterion) {
  const TorusPoint ap = make_point(1, 0, 2);
  for (int n : {1, 3, 5}) {
    for (const auto& a_pt : all_points(n + 1)) {
      const ActionSpec spec = ActionSpec::lieberman(a_pt, ap);
      const FreenessVerdict crit = freeness_criterion(spec, n);
      const Action a = build_action(spec, default_levels(spec, n));
      const FreenessVerdict brute = freeness_bruteforce(a, n);
      if (crit.status == FreenessStatus::FreeByCriterion) {
        EXPECT_EQ(brute.status, FreenessStatus::UnknownAtLevel) << spec.describe();
      } else {
        ASSERT_EQ(brute.status, FreenessStatus::NotFree) << spec.describe();
        EXPECT_TRUE(verify_witness(a, n, brute));
      }
    }
  }
}

TEST(DefaultLevels, RespectsMultiplier) {
  const ActionSpec spec = bdf(6, 1, 0, 3);
  const ModelLevels base = default_levels(spec, 2);
  EXPECT_EQ(base, (ModelLevels{27, 3}));
  EXPECT_EQ(default_levels(spec, 2, 2), (ModelLevels{54, 6}));
  EXPECT_THROW(default_levels(spec, 2, 0), std::invalid_argument);
  const ActionSpec lie = ActionSpec::lieberman(make_point(1, 0, 4), make_point(1, 0, 2));
  EXPECT_EQ(default_levels(lie, 3), (ModelLevels{4, 4}));
}

// ---------------------------------------------------------------------------
// scans and parity

TEST(ScanZ, Examples) {
  const auto count_free = [](const std::vector<ScanEntry>& entries) {
    return std::count_if(entries.begin(), entries.end(), [](const ScanEntry& e) {
      return e.verdict.status == FreenessStatus::FreeByCriterion;
    });
  };
  EXPECT_GT(count_free(scan_z(2, 2)), 0);
  EXPECT_EQ(count_free(scan_z(4, 5)), 0);

  const auto row1 = scan_z(1, 1);
  ASSERT_EQ(row1.size(), 4u);
  for (const auto& e : row1) {
    EXPECT_EQ(e.verdict.status == FreenessStatus::FreeByCriterion, !e.z.is_zero());
  }
  EXPECT_THROW(scan_z(2, 1), std::invalid_argument);
}

TEST(ScanZ, IndependentOfWorkerCount) {
  const auto reference = scan_z(3, 7, 1);
  for (unsigned workers : {2u, 3u, 8u, 64u}) {
    const auto other = scan_z(3, 7, workers);
    ASSERT_EQ(other.size(), reference.size());
    for (std::size_t i = 0; i < other.size(); ++i) {
      EXPECT_EQ(other[i].z, reference[i].z);
      EXPECT_EQ(other[i].verdict.status, reference[i].verdict.status);
      EXPECT_EQ(other[i].verdict.notes, reference[i].verdict.notes);
    }
  }
}

TEST(Q2Hilb, Examples) {
  EXPECT_TRUE(q2hilb_model_check(4, 3));
  EXPECT_FALSE(q2hilb_model_check(4, 2));
  EXPECT_TRUE(q2hilb_model_check(2, 1));
  EXPECT_THROW(q2hilb_model_check(3, 1), std::invalid_argument);
}

TEST(Q2Hilb, FreeExactlyForOddLength) {
  for (int s = 2; s <= 8; s += 2) {
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(q2hilb_model_check(s, n), n % 2 == 1) << s << " " << n;
  }
}

TEST(FixedCycles, RowOneAndRowTwo) {
  const Action one = build_action(bdf(1, 0, 0, 1), {2, 2});
  const FixedCycleReport r1 = fixed_cycle_length_check(one, PointModel::full(one.levels, one.kernel), 4);
  EXPECT_TRUE(r1.divisible);
  EXPECT_EQ(r1.fixed_counts[1], 0u);
  EXPECT_GT(r1.fixed_counts[2], 0u);
  EXPECT_EQ(r1.fixed_counts[3], 0u);
  EXPECT_GT(r1.fixed_counts[4], 0u);

  const Action two = build_action(bdf(2, 0, 0, 1), {3, 3});
  const FixedCycleReport r2 = fixed_cycle_length_check(two, PointModel::full(two.levels, two.kernel), 3);
  EXPECT_TRUE(r2.divisible);
  EXPECT_EQ(r2.fixed_counts[1], 0u);
  EXPECT_EQ(r2.fixed_counts[2], 0u);
  EXPECT_GT(r2.fixed_counts[3], 0u);
}

TEST(FixedCycles, FixedCountEqualsOrbitMultisetCount) {
  // A fixed cycle of length kd is a multiset of k orbits: C(#orbits + k - 1, k).
  const Action one = build_action(bdf(1, 0, 0, 1), {2, 2});
  const FixedCycleReport r = fixed_cycle_length_check(one, PointModel::full(one.levels, one.kernel), 4);
  EXPECT_EQ(r.fixed_counts[2], 8u);   // 16 points, 8 orbits
  EXPECT_EQ(r.fixed_counts[4], 36u);  // C(9, 2)
}
