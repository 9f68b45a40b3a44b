#include "enriques/torsion.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace enriques {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

// Compares x1/n1 with x2/n2 for nonnegative numerators.
std::strong_ordering compare_fraction(std::int64_t x1, std::int64_t n1,
                                      std::int64_t x2, std::int64_t n2) {
  return static_cast<__int128>(x1) * n2 <=> static_cast<__int128>(x2) * n1;
}

void require_same_basis(const TorusPoint& lhs, const TorusPoint& rhs) {
  if (lhs.basis() != rhs.basis()) {
    throw std::invalid_argument("torus points on different period bases: " +
                                std::string(to_string(lhs.basis())) + " vs " +
                                std::string(to_string(rhs.basis())));
  }
}

Mat2 cm_matrix(RootOfUnity root, PeriodBasis basis) {
  switch (root) {
    case RootOfUnity::MinusOne:
      return Mat2::scalar(-1);
    case RootOfUnity::I:
      // i*1 = i, i*i = -1
      if (basis == PeriodBasis::Gauss) return {0, -1, 1, 0};
      break;
    case RootOfUnity::Zeta:
      // zeta*1 = zeta, zeta*zeta = zeta - 1
      if (basis == PeriodBasis::Eisenstein) return {0, -1, 1, 1};
      break;
    case RootOfUnity::Omega:
      // omega = zeta^2: omega*1 = zeta - 1, omega*zeta = -1
      if (basis == PeriodBasis::Eisenstein) return {-1, -1, 1, 0};
      break;
  }
  throw std::invalid_argument("no complex multiplication by " +
                              std::string(to_string(root)) + " on a " +
                              std::string(to_string(basis)) + " period basis");
}

}  // namespace

std::string_view to_string(PeriodBasis basis) {
  switch (basis) {
    case PeriodBasis::Generic: return "generic";
    case PeriodBasis::Gauss: return "gauss";
    case PeriodBasis::Eisenstein: return "eisenstein";
  }
  return "?";
}

std::string_view to_string(RootOfUnity root) {
  switch (root) {
    case RootOfUnity::MinusOne: return "-1";
    case RootOfUnity::Omega: return "omega";
    case RootOfUnity::I: return "i";
    case RootOfUnity::Zeta: return "zeta";
  }
  return "?";
}

// Mat2

Mat2 operator*(const Mat2& l, const Mat2& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
          l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

Mat2 operator+(const Mat2& l, const Mat2& r) {
  return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d};
}

Mat2 operator-(const Mat2& l, const Mat2& r) {
  return {l.a - r.a, l.b - r.b, l.c - r.c, l.d - r.d};
}

Mat2 Mat2::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative matrix power");
  Mat2 result;
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

// CyclotomicClass

CyclotomicClass::CyclotomicClass(RootOfUnity root, PeriodBasis basis)
    : root_(root), basis_(basis), matrix_(cm_matrix(root, basis)) {}

int CyclotomicClass::order() const {
  switch (root_) {
    case RootOfUnity::MinusOne: return 2;
    case RootOfUnity::Omega: return 3;
    case RootOfUnity::I: return 4;
    case RootOfUnity::Zeta: return 6;
  }
  return 0;
}

std::optional<CyclotomicClass> CyclotomicClass::power(int k) const {
  const Mat2 target = matrix_.pow(mod(k, order()));
  if (target == Mat2::identity()) return std::nullopt;
  for (auto root : {RootOfUnity::MinusOne, RootOfUnity::Omega, RootOfUnity::I,
                    RootOfUnity::Zeta}) {
    try {
      CyclotomicClass candidate(root, basis_);
      if (candidate.matrix() == target) return candidate;
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("power of " + std::string(to_string(root_)) +
                              " is not one of -1, omega, i, zeta");
}

// TorusPoint

TorusPoint::TorusPoint(std::int64_t a, std::int64_t b, std::int64_t level,
                       PeriodBasis basis)
    : level_(level), basis_(basis) {
  if (level < 1) {
    throw std::invalid_argument("invalid torsion level " + std::to_string(level));
  }
  a_ = mod(a, level);
  b_ = mod(b, level);
}

TorusPoint make_point(std::int64_t a, std::int64_t b, std::int64_t level,
                      PeriodBasis basis) {
  return TorusPoint(a, b, level, basis);
}

std::int64_t TorusPoint::order() const {
  return level_ / std::gcd(std::gcd(a_, b_), level_);
}

TorusPoint TorusPoint::at_level(std::int64_t level) const {
  if (level < 1 || level % level_ != 0) {
    throw std::invalid_argument("cannot lift level " + std::to_string(level_) +
                                " to level " + std::to_string(level));
  }
  const std::int64_t k = level / level_;
  return TorusPoint(a_ * k, b_ * k, level, basis_);
}

TorusPoint TorusPoint::reduced() const {
  const std::int64_t g = std::gcd(std::gcd(a_, b_), level_);
  return TorusPoint(a_ / g, b_ / g, level_ / g, basis_);
}

bool TorusPoint::lies_in_level(std::int64_t level) const {
  return level >= 1 && level % order() == 0;
}

TorusPoint TorusPoint::transformed(const Mat2& m) const {
  return TorusPoint(m.a * a_ + m.b * b_, m.c * a_ + m.d * b_, level_, basis_);
}

TorusPoint TorusPoint::operator-() const {
  return TorusPoint(-a_, -b_, level_, basis_);
}

TorusPoint operator+(const TorusPoint& lhs, const TorusPoint& rhs) {
  require_same_basis(lhs, rhs);
  if (lhs.level_ == rhs.level_) {
    return TorusPoint(lhs.a_ + rhs.a_, lhs.b_ + rhs.b_, lhs.level_, lhs.basis_);
  }
  const std::int64_t level = std::lcm(lhs.level_, rhs.level_);
  const TorusPoint l = lhs.at_level(level);
  const TorusPoint r = rhs.at_level(level);
  return TorusPoint(l.a_ + r.a_, l.b_ + r.b_, level, lhs.basis_);
}

TorusPoint operator-(const TorusPoint& lhs, const TorusPoint& rhs) {
  return lhs + (-rhs);
}

TorusPoint operator*(std::int64_t k, const TorusPoint& p) {
  const std::int64_t km = mod(k, p.level_);
  return TorusPoint(km * p.a_, km * p.b_, p.level_, p.basis_);
}

bool operator==(const TorusPoint& lhs, const TorusPoint& rhs) {
  if (lhs.basis_ != rhs.basis_) return false;
  if (lhs.level_ == rhs.level_) return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  return compare_fraction(lhs.a_, lhs.level_, rhs.a_, rhs.level_) == 0 &&
         compare_fraction(lhs.b_, lhs.level_, rhs.b_, rhs.level_) == 0;
}

std::strong_ordering operator<=>(const TorusPoint& lhs, const TorusPoint& rhs) {
  if (auto c = lhs.basis_ <=> rhs.basis_; c != 0) return c;
  if (lhs.level_ == rhs.level_) {
    if (auto c = lhs.a_ <=> rhs.a_; c != 0) return c;
    return lhs.b_ <=> rhs.b_;
  }
  if (auto c = compare_fraction(lhs.a_, lhs.level_, rhs.a_, rhs.level_); c != 0) {
    return c;
  }
  return compare_fraction(lhs.b_, lhs.level_, rhs.b_, rhs.level_);
}

TorusPoint cm_apply(const CyclotomicClass& xi, const TorusPoint& p) {
  return LinearPart(xi).apply(p);
}

// Text syntax

std::string format_point(const TorusPoint& p) {
  const std::string n = std::to_string(p.level());
  return std::to_string(p.a()) + "/" + n + "+" + std::to_string(p.b()) + "/" + n +
         "*tau";
}

namespace {

struct Term {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool tau = false;
};

class PointParser {
 public:
  explicit PointParser(std::string_view text) : text_(text) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty point");
    bool first = true;
    while (!at_end()) {
      std::int64_t sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = term();
      t.num *= sign;
      terms.push_back(t);
      first = false;
      skip_space();
    }
    return terms;
  }

 private:
  // term := factor ('*' factor)* ('/' integer)?
  Term term() {
    Term t;
    t.num = 1;
    bool have_factor = false;
    while (true) {
      skip_space();
      if (match_tau()) {
        if (t.tau) fail("tau appears twice in a term");
        t.tau = true;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.num *= integer();
      } else {
        fail("expected a number or 'tau'");
      }
      have_factor = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        get();
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    if (!at_end() && peek() == '/') {
      get();
      skip_space();
      t.den = integer();
      if (t.den == 0) fail("zero denominator");
      skip_space();
      if (!at_end() && peek() == '*') {
        get();
        skip_space();
        if (!match_tau() || t.tau) fail("expected 'tau' after '/q*'");
        t.tau = true;
      }
    }
    return t;
  }

  bool match_tau() {
    if (text_.substr(pos_, 3) == "tau") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected an integer");
    }
    std::int64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (get() - '0');
      if (value > (std::int64_t{1} << 40)) fail("integer too large");
    }
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad point syntax '" + std::string(text_) +
                                "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TorusPoint parse_point(std::string_view text, PeriodBasis basis) {
  const std::vector<Term> terms = PointParser(text).parse();
  std::int64_t level = 1;
  for (const Term& t : terms) level = std::lcm(level, t.den);
  std::int64_t a = 0;
  std::int64_t b = 0;
  for (const Term& t : terms) {
    const std::int64_t scaled = mod(t.num, t.den) * (level / t.den);
    (t.tau ? b : a) += scaled;
  }
  return TorusPoint(a, b, level, basis);
}

// LinearPart

LinearPart::LinearPart(Mat2 m, std::optional<PeriodBasis> basis)
    : matrix_(m), basis_(m.is_scalar() ? std::nullopt : basis) {}

LinearPart::LinearPart(const CyclotomicClass& xi)
    : LinearPart(xi.matrix(), xi.basis()) {}

LinearPart LinearPart::negation() { return LinearPart(Mat2::scalar(-1), std::nullopt); }

TorusPoint LinearPart::apply(const TorusPoint& p) const {
  if (basis_ && *basis_ != p.basis()) {
    throw std::invalid_argument("linear part for a " +
                                std::string(to_string(*basis_)) +
                                " basis applied to a point on a " +
                                std::string(to_string(p.basis())) + " basis");
  }
  return p.transformed(matrix_);
}

LinearPart operator*(const LinearPart& outer, const LinearPart& inner) {
  if (outer.basis_ && inner.basis_ && *outer.basis_ != *inner.basis_) {
    throw std::invalid_argument("composing linear parts on different bases");
  }
  return LinearPart(outer.matrix_ * inner.matrix_,
                    outer.basis_ ? outer.basis_ : inner.basis_);
}

// AffineAuto

AffineAuto::AffineAuto(LinearPart linear_e, LinearPart linear_f,
                       ProductPoint translation)
    : linear_e_(std::move(linear_e)),
      linear_f_(std::move(linear_f)),
      translation_(std::move(translation)) {}

ProductPoint AffineAuto::operator()(const ProductPoint& p) const {
  return {linear_e_.apply(p.e) + translation_.e,
          linear_f_.apply(p.f) + translation_.f};
}

AffineAuto operator*(const AffineAuto& g, const AffineAuto& h) {
  // g(h(p)) = M_g M_h p + M_g t_h + t_g
  return AffineAuto(g.linear_e_ * h.linear_e_, g.linear_f_ * h.linear_f_,
                    g(h.translation_));
}

AffineAuto AffineAuto::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of an automorphism");
  const PeriodBasis be = translation_.e.basis();
  const PeriodBasis bf = translation_.f.basis();
  AffineAuto result({}, {}, {TorusPoint::origin(be), TorusPoint::origin(bf)});
  for (int i = 0; i < k; ++i) result = *this * result;
  return result;
}

int auto_order(const AffineAuto& g, std::int64_t level_e, std::int64_t level_f) {
  if (!g.translation().e.lies_in_level(level_e) ||
      !g.translation().f.lies_in_level(level_f)) {
    throw std::invalid_argument("translation is not in the level model");
  }
  const auto identity_mod = [](const Mat2& m, std::int64_t n) {
    const Mat2 diff = m - Mat2::identity();
    return diff.a % n == 0 && diff.b % n == 0 && diff.c % n == 0 && diff.d % n == 0;
  };
  constexpr int kMaxOrder = 1 << 20;
  AffineAuto power = g;
  for (int k = 1; k <= kMaxOrder; ++k) {
    if (power.translation().is_zero() &&
        identity_mod(power.linear_e().matrix(), level_e) &&
        identity_mod(power.linear_f().matrix(), level_f)) {
      return k;
    }
    power = g * power;
  }
  throw std::domain_error("automorphism has no finite order on the model");
}

// FiniteSubgroup

FiniteSubgroup::FiniteSubgroup(PeriodBasis basis_e, PeriodBasis basis_f)
    : FiniteSubgroup(basis_e, basis_f, {}) {}

FiniteSubgroup::FiniteSubgroup(PeriodBasis basis_e, PeriodBasis basis_f,
                               std::vector<ProductPoint> generators)
    : basis_e_(basis_e), basis_f_(basis_f), generators_(std::move(generators)) {
  std::set<ProductPoint> seen{zero()};
  std::vector<ProductPoint> frontier{zero()};
  while (!frontier.empty()) {
    std::vector<ProductPoint> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators_) {
        const ProductPoint y = x + g;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  // Finite translations generate a group under addition alone.
  elements_.assign(seen.begin(), seen.end());
}

ProductPoint FiniteSubgroup::zero() const {
  return {TorusPoint::origin(basis_e_), TorusPoint::origin(basis_f_)};
}

bool FiniteSubgroup::contains(const ProductPoint& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<TorusPoint> FiniteSubgroup::projection_f() const {
  std::set<TorusPoint> image;
  for (const auto& t : elements_) image.insert(t.f);
  return {image.begin(), image.end()};
}

bool FiniteSubgroup::projection_f_contains(const TorusPoint& f) const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [&](const ProductPoint& t) { return t.f == f; });
}

std::int64_t FiniteSubgroup::exponent_e() const {
  std::int64_t e = 1;
  for (const auto& t : elements_) e = std::lcm(e, t.e.order());
  return e;
}

std::int64_t FiniteSubgroup::exponent_f() const {
  std::int64_t e = 1;
  for (const auto& t : elements_) e = std::lcm(e, t.f.order());
  return e;
}

ProductPoint quotient_rep(const ProductPoint& p, const FiniteSubgroup& kernel) {
  if (kernel.is_trivial()) return p;
  ProductPoint best = p;
  for (const auto& t : kernel.elements()) {
    const ProductPoint candidate = p + t;
    if (candidate < best) best = candidate;
  }
  return best;
}

}  // namespace enriques
