#include "fuchsian/exactfield.hpp"

#include <cmath>
#include <ostream>

#include "fuchsian/error.hpp"

namespace fuchsian {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

void require_same_field(const QuadElement& a, const QuadElement& b) {
  if (a.d() != b.d())
    throw Error(ErrorCode::InvalidArgument,
                "mixing Q(sqrt " + std::to_string(a.d()) + ") and Q(sqrt " + std::to_string(b.d()) + ")");
}

}  // namespace

bool is_square_free(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t p = 2; p <= d / p; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

QuadElement::QuadElement(std::int64_t d, Rational p, Rational q) : d_(d), p_(std::move(p)), q_(std::move(q)) {
  if (d < 2 || !is_square_free(d))
    throw Error(ErrorCode::InvalidArgument, "d must be square-free and >= 2, got " + std::to_string(d));
}

Rational QuadElement::norm() const { return p_ * p_ - Rational(d_) * q_ * q_; }

double QuadElement::to_double() const {
  return p_.to_double() + q_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadElement::to_string() const {
  return p_.to_string() + (q_.sign() < 0 ? " - " : " + ") + (q_.sign() < 0 ? -q_ : q_).to_string() + "*sqrt(" +
         std::to_string(d_) + ")";
}

QuadElement operator+(const QuadElement& a, const QuadElement& b) {
  require_same_field(a, b);
  return {a.d_, a.p_ + b.p_, a.q_ + b.q_};
}

QuadElement operator-(const QuadElement& a, const QuadElement& b) {
  require_same_field(a, b);
  return {a.d_, a.p_ - b.p_, a.q_ - b.q_};
}

QuadElement operator*(const QuadElement& a, const QuadElement& b) {
  require_same_field(a, b);
  return {a.d_, a.p_ * b.p_ + Rational(a.d_) * a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_};
}

QuadElement operator*(const QuadElement& a, const Rational& r) { return {a.d_, a.p_ * r, a.q_ * r}; }

QuadElement operator/(const QuadElement& a, const QuadElement& b) {
  const Rational n = b.norm();
  if (n.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero in Q(sqrt d)");
  return a * galois_conjugate(b) * n.reciprocal();
}

std::ostream& operator<<(std::ostream& os, const QuadElement& x) { return os << x.to_string(); }

QuadElement galois_conjugate(const QuadElement& x) { return {x.d(), x.p(), -x.q()}; }

QuadElement pell_fundamental_unit(std::int64_t d, unsigned max_bits) {
  if (d < 2 || !is_square_free(d))
    throw Error(ErrorCode::InvalidArgument, "pell_fundamental_unit needs square-free d >= 2");
  // sqrt(d) = [a0; a1, a2, ...] via the (m, q, a) recurrence; h/k are the convergents.
  const auto a0 = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(d)));
  std::int64_t root = a0;
  while (root * root > d) --root;
  while ((root + 1) * (root + 1) <= d) ++root;

  BigInt h_prev = 1, h = root;
  BigInt k_prev = 0, k = 1;
  std::int64_t m = 0, q = 1, a = root;
  const BigInt dd = d;
  for (;;) {
    const BigInt n = h * h - dd * k * k;
    if (n == 1) return {d, Rational(h), Rational(k)};
    m = q * a - m;
    q = (d - m * m) / q;
    a = (root + m) / q;
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
    if (boost::multiprecision::msb(h) + 1 > max_bits)
      throw Error(ErrorCode::Overflow, "Pell convergents for d=" + std::to_string(d) + " exceed " +
                                           std::to_string(max_bits) + " bits");
  }
}

QuadElement unit_power(const QuadElement& eps, std::int64_t m) {
  if (eps.norm() != Rational(1)) throw Error(ErrorCode::NormMismatch, "unit_power needs a norm-one unit");
  QuadElement base = m < 0 ? galois_conjugate(eps) : eps;
  std::uint64_t e = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
  QuadElement result(eps.d(), 1);
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

UnitLog unit_log(const QuadElement& x, const QuadElement& eps, std::int64_t bound) {
  if (x.is_rational()) return {0, x.p()};
  const QuadElement eps_inv = galois_conjugate(eps) * eps.norm().reciprocal();
  QuadElement up = x;    // x * eps^-j
  QuadElement down = x;  // x * eps^+j
  for (std::int64_t j = 1; j <= bound; ++j) {
    up = up * eps_inv;
    if (up.is_rational()) return {j, up.p()};
    down = down * eps;
    if (down.is_rational()) return {-j, down.p()};
  }
  throw Error(ErrorCode::NotAUnitMultiple, x.to_string() + " is not a rational multiple of a power of " +
                                               eps.to_string() + " within |k| <= " + std::to_string(bound));
}

TowerElement TowerElement::from_quad(const QuadElement& x) {
  switch (x.d()) {
    case 2: return {x.p(), x.q(), 0, 0};
    case 3: return {x.p(), 0, x.q(), 0};
    case 6: return {x.p(), 0, 0, x.q()};
    default:
      throw Error(ErrorCode::UnsupportedField, "Q(sqrt " + std::to_string(x.d()) + ") is not in Q(sqrt2, sqrt3)");
  }
}

double TowerElement::to_double() const {
  return c1_.to_double() + c2_.to_double() * kSqrt2 + c3_.to_double() * kSqrt3 + c6_.to_double() * kSqrt6;
}

std::string TowerElement::to_string() const {
  std::string s;
  auto term = [&](const Rational& c, const char* unit) {
    if (c.is_zero()) return;
    if (!s.empty()) s += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) s += "-";
    const Rational mag = c.sign() < 0 ? -c : c;
    if (*unit == '\0') {
      s += mag.to_string();
    } else {
      if (mag != Rational(1)) s += mag.to_string() + "*";
      s += unit;
    }
  };
  term(c1_, "");
  term(c2_, "sqrt2");
  term(c3_, "sqrt3");
  term(c6_, "sqrt6");
  return s.empty() ? "0" : s;
}

TowerElement operator+(const TowerElement& a, const TowerElement& b) {
  return {a.c1_ + b.c1_, a.c2_ + b.c2_, a.c3_ + b.c3_, a.c6_ + b.c6_};
}

TowerElement operator-(const TowerElement& a, const TowerElement& b) {
  return {a.c1_ - b.c1_, a.c2_ - b.c2_, a.c3_ - b.c3_, a.c6_ - b.c6_};
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2.
  const Rational two(2), three(3), six(6);
  return {
      a.c1_ * b.c1_ + two * a.c2_ * b.c2_ + three * a.c3_ * b.c3_ + six * a.c6_ * b.c6_,
      a.c1_ * b.c2_ + a.c2_ * b.c1_ + three * (a.c3_ * b.c6_ + a.c6_ * b.c3_),
      a.c1_ * b.c3_ + a.c3_ * b.c1_ + two * (a.c2_ * b.c6_ + a.c6_ * b.c2_),
      a.c1_ * b.c6_ + a.c6_ * b.c1_ + a.c2_ * b.c3_ + a.c3_ * b.c2_,
  };
}

TowerElement operator*(const TowerElement& a, const Rational& r) {
  return {a.c1_ * r, a.c2_ * r, a.c3_ * r, a.c6_ * r};
}

std::ostream& operator<<(std::ostream& os, const TowerElement& x) { return os << x.to_string(); }

}  // namespace fuchsian
