#include "fuchsian/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

#include "fuchsian/error.hpp"

namespace fuchsian {

namespace {

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

bool fits(__int128 v) { return v <= kMax && v >= -kMax; }

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

unsigned __int128 uabs128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt to_big_int(__int128 v) {
  BigInt r = static_cast<std::uint64_t>(uabs128(v) >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(uabs128(v) & 0xFFFFFFFFFFFFFFFFull);
  return v < 0 ? BigInt(-r) : r;
}

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAUnitMultiple: return "NotAUnitMultiple";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::NormMismatch: return "NormMismatch";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::IdentityMatrix: return "IdentityMatrix";
    case ErrorCode::EmptyDomain: return "EmptyDomain";
    case ErrorCode::MaxStepsExceeded: return "MaxStepsExceeded";
    case ErrorCode::SignUndecidable: return "SignUndecidable";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::NotInOrderPattern: return "NotInOrderPattern";
    case ErrorCode::TauNotInterior: return "TauNotInterior";
    case ErrorCode::CollidingPoints: return "CollidingPoints";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::RealAxisSignal: return "RealAxisSignal";
    case ErrorCode::ReductionFailed: return "ReductionFailed";
    case ErrorCode::EmptyConstellation: return "EmptyConstellation";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Rational::Rational(std::int64_t n) {
  if (n == std::numeric_limits<std::int64_t>::min()) {
    *this = from_big(BigRational(n));
  } else {
    num_ = n;
  }
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  *this = from_parts(n, d);
}

Rational::Rational(const BigRational& v) { *this = from_big(v); }

Rational::Rational(const BigInt& v) { *this = from_big(BigRational(v)); }

Rational Rational::from_parts(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  auto g = gcd128(uabs128(n), static_cast<unsigned __int128>(d));
  n /= static_cast<__int128>(g);
  d /= static_cast<__int128>(g);
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return from_big(BigRational(to_big_int(n), to_big_int(d)));
}

Rational Rational::from_big(BigRational v) {
  const auto& n = boost::multiprecision::numerator(v);
  const auto& d = boost::multiprecision::denominator(v);
  const BigInt lim = std::numeric_limits<std::int64_t>::max();
  Rational r;
  if (abs(n) <= lim && d <= lim) {
    r.num_ = n.convert_to<std::int64_t>();
    r.den_ = d.convert_to<std::int64_t>();
  } else {
    r.big_ = std::make_shared<const BigRational>(std::move(v));
  }
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'"); };
  auto slash = text.find('/');
  auto num_part = text.substr(0, slash);
  auto den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  auto valid = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!valid(num_part, true) || !valid(den_part, false)) throw bad();
  std::string n(num_part);
  if (n.front() == '+') n.erase(0, 1);
  BigInt num(n);
  BigInt den{std::string(den_part)};
  if (den == 0) throw bad();
  return Rational(BigRational(num, den));
}

bool Rational::is_integer() const {
  return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
}

int Rational::sign() const noexcept {
  if (big_) return big_->sign();
  return (num_ > 0) - (num_ < 0);
}

BigInt Rational::numerator() const {
  return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_);
}

BigInt Rational::denominator() const {
  return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_);
}

BigRational Rational::to_big() const {
  return big_ ? *big_ : BigRational(BigInt(num_), BigInt(den_));
}

std::optional<std::int64_t> Rational::to_int64() const {
  if (big_ || den_ != 1) return std::nullopt;
  return num_;
}

double Rational::to_double() const {
  if (big_) return big_->convert_to<double>();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "reciprocal of zero");
  if (big_) return from_big(1 / *big_);
  return from_parts(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_big() + b.to_big());
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t s;
    if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
      Rational r;
      r.num_ = s;
      return r;
    }
    return Rational::from_parts(static_cast<__int128>(a.num_) + b.num_, 1);
  }
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const __int128 t = static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * (a.den_ / g);
  if (t == 0) return Rational();
  const auto g2 = static_cast<std::int64_t>(gcd128(uabs128(t) % static_cast<unsigned __int128>(g), g));
  const __int128 n = t / g2;
  const __int128 d = static_cast<__int128>(a.den_ / g) * (b.den_ / g2);
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return Rational::from_parts(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_big() * b.to_big());
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  const auto g1 = static_cast<std::int64_t>(std::gcd(uabs(a.num_), static_cast<std::uint64_t>(b.den_)));
  const auto g2 = static_cast<std::int64_t>(std::gcd(uabs(b.num_), static_cast<std::uint64_t>(a.den_)));
  const __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
  const __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return Rational::from_big(BigRational(to_big_int(n), to_big_int(d)));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;  // canonical forms differ in storage class
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    const auto x = a.to_big();
    const auto y = b.to_big();
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  const __int128 l = static_cast<__int128>(a.num_) * b.den_;
  const __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace fuchsian
