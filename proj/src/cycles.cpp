#include "enriques/cycles.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace enriques {

// ---------------------------------------------------------------------------
// Point models and cycles

PointModel::PointModel(std::vector<ProductPoint> points, FiniteSubgroup kernel)
    : points_(std::move(points)), kernel_(std::move(kernel)) {}

PointModel PointModel::full(ModelLevels levels, const FiniteSubgroup& kernel) {
  for (const auto& t : kernel.elements()) {
    if (!t.e.lies_in_level(levels.e) || !t.f.lies_in_level(levels.f)) {
      throw std::invalid_argument("kernel does not lie in the level model");
    }
  }
  std::vector<ProductPoint> points;
  for (std::int64_t ea = 0; ea < levels.e; ++ea) {
    for (std::int64_t eb = 0; eb < levels.e; ++eb) {
      for (std::int64_t fa = 0; fa < levels.f; ++fa) {
        for (std::int64_t fb = 0; fb < levels.f; ++fb) {
          ProductPoint p{TorusPoint(ea, eb, levels.e, kernel.basis_e()),
                         TorusPoint(fa, fb, levels.f, kernel.basis_f())};
          if (quotient_rep(p, kernel) == p) points.push_back(std::move(p));
        }
      }
    }
  }
  std::sort(points.begin(), points.end());
  return PointModel(std::move(points), kernel);
}

PointModel PointModel::from_points(std::vector<ProductPoint> points,
                                   const FiniteSubgroup& kernel) {
  for (auto& p : points) p = quotient_rep(p, kernel);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return PointModel(std::move(points), kernel);
}

std::optional<std::size_t> PointModel::index_of(const ProductPoint& reduced) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), reduced);
  if (it == points_.end() || !(*it == reduced)) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

bool PointModel::contains(const ProductPoint& p) const {
  return index_of(quotient_rep(p, kernel_)).has_value();
}

ZeroCycle::ZeroCycle(std::vector<ProductPoint> points, const FiniteSubgroup& kernel)
    : points_(std::move(points)) {
  for (auto& p : points_) p = quotient_rep(p, kernel);
  std::sort(points_.begin(), points_.end());
}

ZeroCycle act_on_cycle(const AffineAuto& g, const ZeroCycle& cycle,
                       const FiniteSubgroup& kernel) {
  std::vector<ProductPoint> image;
  image.reserve(cycle.length());
  for (const auto& p : cycle.points()) image.push_back(g(p));
  return ZeroCycle(std::move(image), kernel);
}

ProductPoint cycle_sum(const ZeroCycle& cycle, const FiniteSubgroup& kernel) {
  ProductPoint sum = kernel.zero();
  for (const auto& p : cycle.points()) sum += p;
  return quotient_rep(sum, kernel);
}

std::size_t for_each_multiset(
    std::size_t universe, std::size_t length,
    const std::function<bool(std::span<const std::size_t>)>& visit) {
  std::vector<std::size_t> idx(length, 0);
  if (length == 0) {
    visit(idx);
    return 1;
  }
  if (universe == 0) return 0;
  std::size_t count = 0;
  while (true) {
    ++count;
    if (!visit(idx)) return count;
    // advance to the next nondecreasing tuple
    std::size_t pos = length;
    while (pos > 0 && idx[pos - 1] + 1 == universe) --pos;
    if (pos == 0) return count;
    const std::size_t v = idx[pos - 1] + 1;
    std::fill(idx.begin() + static_cast<std::ptrdiff_t>(pos - 1), idx.end(), v);
  }
}

std::size_t enumerate_zero_fiber(const PointModel& model, std::size_t length,
                                 const std::function<bool(const ZeroCycle&)>& visit) {
  const auto& points = model.points();
  const auto& kernel = model.kernel();
  if (length == 0) {
    visit(ZeroCycle({}, kernel));
    return 1;
  }
  std::vector<std::size_t> idx(length);
  std::size_t count = 0;
  bool stop = false;

  // The last index is determined by the partial sum; look it up.
  std::function<void(std::size_t, std::size_t, const ProductPoint&)> rec =
      [&](std::size_t pos, std::size_t start, const ProductPoint& partial) {
        if (pos + 1 == length) {
          const auto j = model.index_of(quotient_rep(-partial, kernel));
          if (!j || *j < start) return;
          idx[pos] = *j;
          std::vector<ProductPoint> chosen;
          chosen.reserve(length);
          for (std::size_t k : idx) chosen.push_back(points[k]);
          ++count;
          if (!visit(ZeroCycle(std::move(chosen), kernel))) stop = true;
          return;
        }
        for (std::size_t i = start; i < points.size() && !stop; ++i) {
          idx[pos] = i;
          rec(pos + 1, i, partial + points[i]);
        }
      };
  rec(0, 0, kernel.zero());
  return count;
}

std::vector<ZeroCycle> collect_zero_fiber(const PointModel& model,
                                          std::size_t length) {
  std::vector<ZeroCycle> out;
  enumerate_zero_fiber(model, length, [&](const ZeroCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Actions

namespace {

ProductPoint product(TorusPoint e, TorusPoint f) { return {e, f}; }

const std::array<BdfRow, 7>& bdf_table() {
  using enum RootOfUnity;
  using enum PeriodBasis;
  static const std::array<BdfRow, 7> rows{{
      {1, 2, MinusOne, Generic, std::nullopt},
      {2, 3, Omega, Eisenstein, std::nullopt},
      {3, 4, I, Gauss, std::nullopt},
      {4, 6, Zeta, Eisenstein, std::nullopt},
      // (e, f) -> (e + tau1/2, f + 1/2)
      {5, 2, MinusOne, Generic,
       product(TorusPoint(0, 1, 2, Generic), TorusPoint(1, 0, 2, Generic))},
      // (e, f) -> (e + tau1/3, f + (1 + zeta)/3)
      {6, 3, Omega, Eisenstein,
       product(TorusPoint(0, 1, 3, Generic), TorusPoint(1, 1, 3, Eisenstein))},
      // (e, f) -> (e + tau1/2, f + (1 + i)/2)
      {7, 4, I, Gauss,
       product(TorusPoint(0, 1, 2, Generic), TorusPoint(1, 1, 2, Gauss))},
  }};
  return rows;
}

std::vector<int> prime_divisors(int d) {
  std::vector<int> primes;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      primes.push_back(p);
      while (d % p == 0) d /= p;
    }
  }
  if (d > 1) primes.push_back(d);
  return primes;
}

TorusPoint lift_to(const TorusPoint& p, std::int64_t level, const char* what) {
  if (!p.lies_in_level(level)) {
    throw std::invalid_argument(std::string(what) + " " + format_point(p) +
                                " is not in the level-" + std::to_string(level) +
                                " model");
  }
  return p.reduced().at_level(level);
}

ProductPoint lift_to(const ProductPoint& p, ModelLevels levels) {
  return {lift_to(p.e, levels.e, "translation"), lift_to(p.f, levels.f, "translation")};
}

}  // namespace

const BdfRow& bdf_row(int row) {
  if (row < 1 || row > 7) {
    throw std::out_of_range("bielliptic row must be 1..7, got " + std::to_string(row));
  }
  return bdf_table()[static_cast<std::size_t>(row - 1)];
}

ActionSpec ActionSpec::lieberman(TorusPoint a, TorusPoint a_prime) {
  if (2 % a_prime.order() != 0) {
    throw std::invalid_argument("a' must have order dividing 2, got order " +
                                std::to_string(a_prime.order()));
  }
  if (a.basis() != PeriodBasis::Generic || a_prime.basis() != PeriodBasis::Generic) {
    throw std::invalid_argument("Lieberman points live on generic curves");
  }
  return ActionSpec(LiebermanSpec{a, a_prime});
}

ActionSpec ActionSpec::bdf(int row, TorusPoint z) {
  const BdfRow& r = bdf_row(row);
  if (z.basis() != r.basis_f) {
    throw std::invalid_argument("z is on a " + std::string(to_string(z.basis())) +
                                " basis but row " + std::to_string(row) +
                                " needs " + std::string(to_string(r.basis_f)));
  }
  return ActionSpec(BdfSpec{row, z});
}

int ActionSpec::d() const { return is_lieberman() ? 2 : bdf_row(as_bdf().row).d; }

PeriodBasis ActionSpec::basis_f() const {
  return is_lieberman() ? PeriodBasis::Generic : bdf_row(as_bdf().row).basis_f;
}

std::optional<CyclotomicClass> ActionSpec::xi() const {
  if (is_lieberman()) return std::nullopt;
  const BdfRow& r = bdf_row(as_bdf().row);
  return CyclotomicClass(r.root, r.basis_f);
}

FiniteSubgroup ActionSpec::kernel() const {
  if (is_lieberman()) return FiniteSubgroup(basis_e(), basis_f());
  const BdfRow& r = bdf_row(as_bdf().row);
  std::vector<ProductPoint> gens;
  if (r.kernel_generator) gens.push_back(*r.kernel_generator);
  return FiniteSubgroup(basis_e(), basis_f(), std::move(gens));
}

std::string ActionSpec::describe() const {
  if (is_lieberman()) {
    return "lieberman a=" + format_point(as_lieberman().a) +
           " a'=" + format_point(as_lieberman().a_prime);
  }
  const BdfRow& r = bdf_row(as_bdf().row);
  return "bdf row " + std::to_string(r.row) + " (d=" + std::to_string(r.d) +
         ", xi=" + std::string(to_string(r.root)) + ") z=" + format_point(as_bdf().z);
}

Action build_action(const ActionSpec& spec, ModelLevels levels) {
  if (levels.e < 1 || levels.f < 1) throw std::invalid_argument("levels must be >= 1");
  const FiniteSubgroup kernel = spec.kernel();
  AffineAuto generator;
  if (spec.is_lieberman()) {
    const auto& l = spec.as_lieberman();
    // (b, b') -> (-b + a, b' + a')
    generator = AffineAuto(LinearPart::negation(), LinearPart::identity(),
                           {lift_to(l.a, levels.e, "a"), lift_to(l.a_prime, levels.f, "a'")});
  } else {
    const int d = spec.d();
    if (levels.e % d != 0) {
      throw std::invalid_argument("E level " + std::to_string(levels.e) +
                                  " is not divisible by d=" + std::to_string(d));
    }
    // (e, f) -> (e + 1/d, xi f + z)
    generator = AffineAuto(
        LinearPart::identity(), LinearPart(*spec.xi()),
        {TorusPoint(levels.e / d, 0, levels.e, spec.basis_e()),
         lift_to(spec.as_bdf().z, levels.f, "z")});
  }
  std::vector<AffineAuto> kernel_generators;
  for (const auto& t : kernel.generators()) {
    kernel_generators.push_back(AffineAuto::translation(lift_to(t, levels)));
  }
  for (const auto& t : kernel_generators) {
    if (!(generator * t == t * generator)) {
      throw std::logic_error("generator does not commute with the kernel");
    }
  }
  const int order = auto_order(generator, levels.e, levels.f);
  if (order != spec.d()) {
    throw std::logic_error("generator has order " + std::to_string(order) +
                           " on the model, expected " + std::to_string(spec.d()));
  }
  return Action{spec, levels, generator, std::move(kernel_generators), kernel, order};
}

ModelLevels minimal_levels(const ActionSpec& spec) {
  if (spec.is_lieberman()) {
    return {spec.as_lieberman().a.order(), spec.as_lieberman().a_prime.order()};
  }
  const FiniteSubgroup kernel = spec.kernel();
  return {std::lcm<std::int64_t>(spec.d(), kernel.exponent_e()),
          std::lcm(spec.as_bdf().z.order(), kernel.exponent_f())};
}

ModelLevels default_levels(const ActionSpec& spec, int n, std::int64_t multiplier) {
  if (multiplier < 1) throw std::invalid_argument("level multiplier must be >= 1");
  ModelLevels levels;
  if (spec.is_lieberman()) {
    const auto& l = spec.as_lieberman();
    levels = {std::lcm<std::int64_t>(n + 1, l.a.order()),
              std::lcm<std::int64_t>(4, l.a_prime.order())};
  } else {
    const FiniteSubgroup kernel = spec.kernel();
    const std::int64_t d = spec.d();
    levels = {d * d * kernel.exponent_e(),
              std::lcm(std::lcm<std::int64_t>(n + 1, spec.as_bdf().z.order()),
                       kernel.exponent_f())};
  }
  return {levels.e * multiplier, levels.f * multiplier};
}

std::int64_t level_multiplier_from_env() {
  const char* raw = std::getenv("ENRIQUES_LEVEL_MULTIPLIER");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (*end != '\0' || value < 1 || value > 64) {
    throw std::invalid_argument(std::string("ENRIQUES_LEVEL_MULTIPLIER must be an "
                                            "integer in 1..64, got '") + raw + "'");
  }
  return value;
}

// ---------------------------------------------------------------------------
// Closed forms

TorusPoint f_component(int d, const CyclotomicClass& xi, std::int64_t m,
                       const TorusPoint& z) {
  const LinearPart mult(xi);
  TorusPoint power = m * z;  // xi^{k-1} m z
  TorusPoint sum = TorusPoint::origin(z.basis());
  for (int k = 1; k < d; ++k) {
    sum += (d - k) * power;
    power = mult.apply(power);
  }
  return sum;
}

TorusPoint f_component_reduced(int d, std::int64_t m, const TorusPoint& z) {
  const TorusPoint w = m * z;
  switch (d) {
    case 2:
      return w;
    case 3:
      return 2 * w + cm_apply({RootOfUnity::Omega, z.basis()}, w);
    case 4:
      return 2 * (w + cm_apply({RootOfUnity::I, z.basis()}, w));
    case 6:
      return 6 * cm_apply({RootOfUnity::Zeta, z.basis()}, w);
    default:
      throw std::invalid_argument("no reduced form for d=" + std::to_string(d));
  }
}

bool invariance_criterion(const ActionSpec& spec, int n) {
  if (n < 1) return false;
  const std::int64_t len = n + 1;
  if (spec.is_lieberman()) {
    const auto& l = spec.as_lieberman();
    return n % 2 == 1 && (len * l.a).is_zero() && (len * l.a_prime).is_zero();
  }
  return len % spec.d() == 0 && (len * spec.as_bdf().z).is_zero();
}

InvarianceResult invariance_bruteforce(const Action& action, int n,
                                       const PointModel& model) {
  InvarianceResult result;
  const auto& kernel = model.kernel();
  result.cycles_checked = enumerate_zero_fiber(
      model, static_cast<std::size_t>(n + 1), [&](const ZeroCycle& c) {
        const ZeroCycle image = act_on_cycle(action.generator, c, kernel);
        if (!cycle_sum(image, kernel).is_zero()) {
          result.invariant = false;
          result.counterexample = c;
          return false;
        }
        return true;
      });
  return result;
}

std::string_view to_string(FreenessStatus status) {
  switch (status) {
    case FreenessStatus::FreeByCriterion: return "FREE_BY_CRITERION";
    case FreenessStatus::NotFree: return "NOT_FREE";
    case FreenessStatus::UnknownAtLevel: return "UNKNOWN_AT_LEVEL";
  }
  return "?";
}

namespace {

constexpr const char* kConverseNote =
    "NOT_FREE from the criterion rests on the converse of the freeness theorem "
    "(f-component in T yields a fixed zero-sum cycle because E is divisible); "
    "confirm with --mode bruteforce";

std::string bdf_condition_label(int row, int d) {
  switch (d) {
    case 2:
      return "d=2: mz not in T";
    case 3:
      return row == 2 ? "d=3: T=0 and mz not in Z(1+zeta)/3"
                      : "generalized d=3 with T!=0: (2+omega)mz not in T";
    case 4:
      return row == 3 ? "d=4: T=0 and 2mz not in Z(1+i)/2, via G' of order 2"
                      : "generalized d=4 with T!=0: 2m(1+i)z not in T, via G' of order 2";
    case 6:
      return "d=6: element g^3 of order 2 has f-component (n+1)zeta z = 0, in T";
    default:
      return "?";
  }
}

}  // namespace

FreenessVerdict freeness_criterion(const ActionSpec& spec, int n) {
  if (!invariance_criterion(spec, n)) {
    throw std::invalid_argument("invariance hypotheses fail for " + spec.describe() +
                                " at n=" + std::to_string(n));
  }
  FreenessVerdict verdict;
  const std::int64_t len = n + 1;

  if (spec.is_lieberman()) {
    const auto& l = spec.as_lieberman();
    if (l.a_prime.is_zero()) {
      throw std::invalid_argument("a' = 0: the involution has fixed points on A");
    }
    const std::int64_t m = len / 2;
    const TorusPoint ma = m * l.a;
    verdict.criterion_value = ma;
    verdict.condition_fired = "(n+1)a=0 and (n+1)/2*a != 0";
    if (ma.is_zero()) {
      verdict.status = FreenessStatus::NotFree;
      verdict.element = 1;
      verdict.notes.push_back("m*a = 0: E-component of every fixed cycle vanishes");
      verdict.notes.push_back(kConverseNote);
    } else {
      verdict.status = FreenessStatus::FreeByCriterion;
    }
    return verdict;
  }

  const int d = spec.d();
  const CyclotomicClass xi = *spec.xi();
  const TorusPoint& z = spec.as_bdf().z;
  const FiniteSubgroup kernel = spec.kernel();
  verdict.condition_fired = bdf_condition_label(spec.as_bdf().row, d);
  verdict.notes.push_back("f-component of g: " +
                          format_point(f_component(d, xi, len / d, z)));

  verdict.status = FreenessStatus::FreeByCriterion;
  for (int p : prime_divisors(d)) {
    const int k = d / p;
    // h = g^k acts as (e + 1/p, xi^k f + (1 + xi + ... + xi^{k-1}) z)
    const CyclotomicClass xi_h = *xi.power(k);
    TorusPoint z_h = TorusPoint::origin(z.basis());
    TorusPoint term = z;
    for (int j = 0; j < k; ++j) {
      z_h += term;
      term = cm_apply(xi, term);
    }
    const TorusPoint f = f_component(p, xi_h, len / p, z_h);
    const bool in_t = kernel.projection_f_contains(f);
    verdict.notes.push_back("g^" + std::to_string(k) + " (order " + std::to_string(p) +
                            "): f-component " + format_point(f) +
                            (in_t ? " lies in T" : " avoids T"));
    if (in_t && verdict.status != FreenessStatus::NotFree) {
      verdict.status = FreenessStatus::NotFree;
      verdict.element = k;
      verdict.criterion_value = f;
    }
  }
  if (verdict.status == FreenessStatus::NotFree) verdict.notes.push_back(kConverseNote);
  return verdict;
}

FreenessVerdict freeness_bruteforce(const Action& action, int n) {
  return freeness_bruteforce(action, n, PointModel::full(action.levels, action.kernel));
}

FreenessVerdict freeness_bruteforce(const Action& action, int n,
                                    const PointModel& model) {
  FreenessVerdict verdict;
  verdict.status = FreenessStatus::UnknownAtLevel;
  verdict.levels = action.levels;
  verdict.condition_fired = "exhaustive fixed zero-sum cycle search";
  const auto& points = model.points();
  const auto& kernel = model.kernel();
  const std::size_t len = static_cast<std::size_t>(n + 1);

  for (int p : prime_divisors(action.order)) {
    const int k = action.order / p;
    if (len % static_cast<std::size_t>(p) != 0) {
      verdict.notes.push_back("g^" + std::to_string(k) + ": no fixed cycles, " +
                              std::to_string(p) + " does not divide n+1");
      continue;
    }
    const std::size_t m = len / static_cast<std::size_t>(p);
    const AffineAuto h = action.generator.pow(k);

    // Orbit sums, computed by applying h to each model point.
    std::map<ProductPoint, std::size_t> first_by_sum;
    for (std::size_t i = 0; i < points.size(); ++i) {
      ProductPoint sum = kernel.zero();
      ProductPoint y = points[i];
      for (int j = 0; j < p; ++j) {
        if (j > 0 && y == points[i]) {
          throw std::invalid_argument("g^" + std::to_string(k) +
                                      " has a fixed point on the model");
        }
        sum += y;
        y = quotient_rep(h(y), kernel);
        if (!model.index_of(y)) {
          throw std::invalid_argument("model is not closed under the action");
        }
      }
      first_by_sum.emplace(quotient_rep(sum, kernel), i);
    }
    std::vector<std::pair<ProductPoint, std::size_t>> classes(first_by_sum.begin(),
                                                              first_by_sum.end());

    // Reachable sums of j orbit sums, with back-pointers.
    struct Step {
      ProductPoint previous;
      std::size_t cls;
    };
    std::vector<std::map<ProductPoint, Step>> layers(m + 1);
    layers[0].emplace(kernel.zero(), Step{kernel.zero(), 0});
    for (std::size_t j = 1; j <= m; ++j) {
      for (const auto& [sum, _] : layers[j - 1]) {
        for (std::size_t c = 0; c < classes.size(); ++c) {
          layers[j].emplace(quotient_rep(sum + classes[c].first, kernel), Step{sum, c});
        }
      }
    }
    verdict.notes.push_back("g^" + std::to_string(k) + ": " + std::to_string(points.size()) +
                            " orbit generators, " + std::to_string(classes.size()) +
                            " orbit-sum classes, " + std::to_string(layers[m].size()) +
                            " reachable sums for m=" + std::to_string(m));
    const ProductPoint zero = kernel.zero();
    if (!layers[m].contains(zero)) continue;

    std::vector<ProductPoint> cycle_points;
    ProductPoint cursor = zero;
    for (std::size_t j = m; j > 0; --j) {
      const Step& step = layers[j].at(cursor);
      ProductPoint y = points[classes[step.cls].second];
      for (int r = 0; r < p; ++r) {
        cycle_points.push_back(y);
        y = h(y);
      }
      cursor = step.previous;
    }
    verdict.status = FreenessStatus::NotFree;
    verdict.element = k;
    verdict.witness = ZeroCycle(std::move(cycle_points), kernel);
    verdict.condition_fired = "fixed zero-sum cycle of g^" + std::to_string(k);
    if (!verify_witness(action, n, verdict)) {
      throw std::logic_error("constructed witness failed re-verification");
    }
    return verdict;
  }
  return verdict;
}

bool verify_witness(const Action& action, int n, const FreenessVerdict& verdict) {
  if (verdict.status != FreenessStatus::NotFree || !verdict.witness ||
      !verdict.element) {
    return false;
  }
  const int k = *verdict.element;
  if (k < 1 || k % action.order == 0) return false;
  const ZeroCycle& w = *verdict.witness;
  if (w.length() != static_cast<std::size_t>(n + 1)) return false;
  const AffineAuto h = action.generator.pow(k);
  return act_on_cycle(h, w, action.kernel) == w &&
         cycle_sum(w, action.kernel).is_zero();
}

std::vector<ScanEntry> scan_z(int row, int n, unsigned workers) {
  const BdfRow& r = bdf_row(row);
  const std::int64_t len = n + 1;
  if (n < 1 || len % r.d != 0) {
    throw std::invalid_argument("scan_z needs d | n+1 (d=" + std::to_string(r.d) +
                                ", n=" + std::to_string(n) + ")");
  }
  std::vector<TorusPoint> zs;
  for (std::int64_t a = 0; a < len; ++a) {
    for (std::int64_t b = 0; b < len; ++b) zs.emplace_back(a, b, len, r.basis_f);
  }
  std::vector<std::optional<ScanEntry>> slots(zs.size());
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      slots[i] = ScanEntry{zs[i], freeness_criterion(ActionSpec::bdf(row, zs[i]), n)};
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work(0, zs.size());
  } else {
    std::vector<std::jthread> threads;
    const std::size_t chunk = (zs.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < zs.size(); begin += chunk) {
      threads.emplace_back(work, begin, std::min(zs.size(), begin + chunk));
    }
  }
  std::vector<ScanEntry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

bool q2hilb_model_check(int set_size, int n) {
  if (set_size < 2 || set_size % 2 != 0) {
    throw std::invalid_argument("a free involution needs an even, nonempty set");
  }
  if (n < 0) throw std::invalid_argument("negative multiset size");
  bool free = true;
  std::vector<std::size_t> image;
  for_each_multiset(static_cast<std::size_t>(set_size), static_cast<std::size_t>(n),
                    [&](std::span<const std::size_t> idx) {
                      image.assign(idx.begin(), idx.end());
                      for (auto& x : image) x ^= 1;  // pairs {2k, 2k+1}
                      std::sort(image.begin(), image.end());
                      if (std::equal(image.begin(), image.end(), idx.begin())) {
                        free = false;
                        return false;
                      }
                      return true;
                    });
  return free;
}

FixedCycleReport fixed_cycle_length_check(const Action& action,
                                          const PointModel& model,
                                          std::size_t max_length) {
  const auto& points = model.points();
  std::vector<std::size_t> image(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto j = model.index_of(quotient_rep(action.generator(points[i]), model.kernel()));
    if (!j) throw std::invalid_argument("model is not closed under the action");
    image[i] = *j;
  }
  // G acts freely on the model: no orbit shorter than the group order.
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::size_t y = image[i];
    for (int k = 1; k < action.order; ++k, y = image[y]) {
      if (y == i) throw std::invalid_argument("G does not act freely on the model");
    }
  }

  FixedCycleReport report;
  report.fixed_counts.assign(max_length + 1, 0);
  std::vector<std::size_t> moved;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::size_t fixed = 0;
    for_each_multiset(points.size(), len, [&](std::span<const std::size_t> idx) {
      moved.resize(idx.size());
      for (std::size_t k = 0; k < idx.size(); ++k) moved[k] = image[idx[k]];
      std::sort(moved.begin(), moved.end());
      if (std::equal(moved.begin(), moved.end(), idx.begin())) ++fixed;
      return true;
    });
    report.fixed_counts[len] = fixed;
    if (fixed > 0 && len % static_cast<std::size_t>(action.order) != 0) {
      report.divisible = false;
    }
  }
  return report;
}

}  // namespace enriques
