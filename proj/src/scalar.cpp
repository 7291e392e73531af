#include "cuntz/scalar.hpp"

#include <cctype>
#include <ostream>

#include "cuntz/errors.hpp"

namespace cuntz {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  BigInt n = num_ * o.den_;
  BigInt d = den_ * o.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  BigInt num{std::string(num_text)};
  BigInt den{std::string(den_text)};
  if (negative) num = -num;
  return {std::move(num), std::move(den)};
}

Rational Rational::inverse_power(std::int64_t base, int exp) {
  BigInt den = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
  return {BigInt(1), std::move(den)};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.is_zero()) throw DivisionByZero();
  Rational d = o.norm_squared();
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string Gaussian::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  Rational mag = im_.sign() < 0 ? -im_ : im_;
  imag = mag == Rational(1) ? "i" : mag.to_string() + "*i";
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
  return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
}

Gaussian Gaussian::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw DomainError("empty scalar literal");
  if (s.back() != 'i') return Gaussian(Rational::parse(s));

  std::string_view body = s;
  body.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  Rational re;
  std::string_view imag = body;
  if (split != std::string_view::npos) {
    re = Rational::parse(body.substr(0, split));
    imag = body.substr(split);
  }
  if (!imag.empty() && imag.back() == '*') imag.remove_suffix(1);
  Rational im;
  if (imag.empty() || imag == "+") {
    im = 1;
  } else if (imag == "-") {
    im = -1;
  } else {
    im = Rational::parse(imag);
  }
  return {std::move(re), std::move(im)};
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.to_string(); }

}  // namespace cuntz
