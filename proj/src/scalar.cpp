#include "swop/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace swop {

namespace {

mp_bitcnt_t checked_prec(int precision_bits) {
  if (precision_bits < 64)
    throw param_error("float precision must be at least 64 bits");
  return static_cast<mp_bitcnt_t>(precision_bits);
}

const mpq_class& as_rat(const Scalar& s, const char* who) {
  if (!s.is_exact()) throw mode_error(std::string(who) + ": expected exact mode");
  return s.rat();
}

}  // namespace

Scalar Scalar::exact(long n) { return Scalar(mpq_class(n)); }

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw param_error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::exact(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return Scalar(std::move(c));
}

Scalar Scalar::floating(double v, int precision_bits) {
  return Scalar(mpf_class(v, checked_prec(precision_bits)));
}

Scalar Scalar::floating(const mpf_class& f) { return Scalar(mpf_class(f)); }

Scalar Scalar::floating(const mpq_class& q, int precision_bits) {
  mpf_class f(0, checked_prec(precision_bits));
  mpf_set_q(f.get_mpf_t(), q.get_mpq_t());
  return Scalar(std::move(f));
}

int Scalar::precision_bits() const {
  if (is_exact()) throw mode_error("precision_bits: exact-mode value");
  return static_cast<int>(flt().get_prec());
}

Scalar Scalar::of_int(long v) const {
  if (is_exact()) return exact(v);
  return Scalar(mpf_class(v, flt().get_prec()));
}

Scalar Scalar::of_ratio(long num, long den) const {
  if (is_exact()) return exact(num, den);
  if (den == 0) throw param_error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return floating(q, static_cast<int>(flt().get_prec()));
}

Scalar Scalar::of_pow2(long e) const {
  if (is_exact()) {
    mpq_class q(1);
    if (e >= 0)
      mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
      mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return Scalar(std::move(q));
  }
  mpf_class f(1, flt().get_prec());
  if (e >= 0)
    mpf_mul_2exp(f.get_mpf_t(), f.get_mpf_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpf_div_2exp(f.get_mpf_t(), f.get_mpf_t(), static_cast<mp_bitcnt_t>(-e));
  return Scalar(std::move(f));
}

const mpq_class& Scalar::rat() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw mode_error("rat(): floating-mode value");
}

const mpf_class& Scalar::flt() const {
  if (auto* f = std::get_if<mpf_class>(&v_)) return *f;
  throw mode_error("flt(): exact-mode value");
}

int Scalar::sign() const {
  if (is_exact()) return mpq_sgn(rat().get_mpq_t());
  return mpf_sgn(flt().get_mpf_t());
}

bool Scalar::is_integer() const {
  if (is_exact()) return rat().get_den() == 1;
  return mpf_integer_p(flt().get_mpf_t()) != 0;
}

bool Scalar::is_nonpositive_integer() const {
  return is_integer() && sign() <= 0;
}

long Scalar::to_long() const {
  if (!is_integer()) throw param_error("to_long: value is not an integer");
  if (is_exact()) {
    const mpz_class& n = rat().get_num();
    if (!n.fits_slong_p()) throw param_error("to_long: integer out of range");
    return n.get_si();
  }
  if (!flt().fits_slong_p()) throw param_error("to_long: integer out of range");
  return static_cast<long>(flt().get_si());
}

double Scalar::to_double() const {
  return is_exact() ? rat().get_d() : flt().get_d();
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

namespace {

// Float results always carry the larger operand precision.
mpf_class fres(const mpf_class& a, const mpf_class& b) {
  return mpf_class(0, std::max(a.get_prec(), b.get_prec()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw mode_error("operator+: mixed scalar modes");
  if (a.is_exact()) return Scalar::exact(mpq_class(a.rat() + b.rat()));
  mpf_class r = fres(a.flt(), b.flt());
  mpf_add(r.get_mpf_t(), a.flt().get_mpf_t(), b.flt().get_mpf_t());
  return Scalar::floating(r);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw mode_error("operator-: mixed scalar modes");
  if (a.is_exact()) return Scalar::exact(mpq_class(a.rat() - b.rat()));
  mpf_class r = fres(a.flt(), b.flt());
  mpf_sub(r.get_mpf_t(), a.flt().get_mpf_t(), b.flt().get_mpf_t());
  return Scalar::floating(r);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw mode_error("operator*: mixed scalar modes");
  if (a.is_exact()) return Scalar::exact(mpq_class(a.rat() * b.rat()));
  mpf_class r = fres(a.flt(), b.flt());
  mpf_mul(r.get_mpf_t(), a.flt().get_mpf_t(), b.flt().get_mpf_t());
  return Scalar::floating(r);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw mode_error("operator/: mixed scalar modes");
  if (b.is_zero()) throw param_error("operator/: division by zero");
  if (a.is_exact()) return Scalar::exact(mpq_class(a.rat() / b.rat()));
  mpf_class r = fres(a.flt(), b.flt());
  mpf_div(r.get_mpf_t(), a.flt().get_mpf_t(), b.flt().get_mpf_t());
  return Scalar::floating(r);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-rat()));
  mpf_class r(0, flt().get_prec());
  mpf_neg(r.get_mpf_t(), flt().get_mpf_t());
  return Scalar(std::move(r));
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw mode_error("compare: mixed scalar modes");
  if (a.is_exact()) return mpq_cmp(a.rat().get_mpq_t(), b.rat().get_mpq_t());
  return mpf_cmp(a.flt().get_mpf_t(), b.flt().get_mpf_t());
}

std::string Scalar::str() const {
  if (is_exact()) return rat().get_str();
  return decimal_str();
}

std::string Scalar::decimal_str(size_t digits) const {
  if (is_exact()) {
    if (digits == 0) digits = 17;
    mpf_class f(0, 64 + 4 * digits);
    mpf_set_q(f.get_mpf_t(), rat().get_mpq_t());
    return Scalar(std::move(f)).decimal_str(digits);
  }
  mp_exp_t exp = 0;
  std::string mant = flt().get_str(exp, 10, digits);
  if (mant.empty() || mant == "-") return "0";
  bool neg = mant[0] == '-';
  std::string d = neg ? mant.substr(1) : mant;
  std::ostringstream out;
  if (neg) out << '-';
  // value = 0.d1d2... * 10^exp; positional notation for moderate
  // exponents, scientific otherwise.
  if (exp > 0 && exp <= 21) {
    size_t e = static_cast<size_t>(exp);
    std::string intpart = d.substr(0, std::min(d.size(), e));
    if (intpart.size() < e) intpart.append(e - intpart.size(), '0');
    out << intpart;
    if (d.size() > e) out << '.' << d.substr(e);
  } else if (exp <= 0 && exp > -6) {
    out << "0." << std::string(static_cast<size_t>(-exp), '0') << d;
  } else {
    out << d[0];
    if (d.size() > 1) out << '.' << d.substr(1);
    out << 'e' << (exp - 1);
  }
  return out.str();
}

std::string Scalar::hex_str() const {
  const mpf_class& f = flt();
  if (mpf_sgn(f.get_mpf_t()) == 0) return "0x0p0";
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 16, 0);
  bool neg = mant[0] == '-';
  std::string d = neg ? mant.substr(1) : mant;
  std::ostringstream out;
  if (neg) out << '-';
  // value = 0x0.d1d2... * 2^(4*exp)
  out << "0x0." << d << 'p' << 4 * exp;
  return out.str();
}

ModeConfig ModeConfig::exact_config() {
  ModeConfig cfg;
  cfg.mode = ScalarMode::exact;
  cfg.refine_tolerance = Scalar::exact(1).of_pow2(-60);
  return cfg;
}

ModeConfig ModeConfig::floating_config(int precision_bits) {
  ModeConfig cfg;
  cfg.mode = ScalarMode::floating;
  cfg.precision_bits = precision_bits;
  cfg.refine_tolerance = Scalar::floating(1.0, precision_bits).of_pow2(-60);
  cfg.validate();
  return cfg;
}

Scalar ModeConfig::integer(long v) const {
  if (mode == ScalarMode::exact) return Scalar::exact(v);
  return Scalar::floating(static_cast<double>(0), precision_bits).of_int(v);
}

Scalar ModeConfig::ratio(long num, long den) const {
  if (mode == ScalarMode::exact) return Scalar::exact(num, den);
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar::floating(q, precision_bits);
}

namespace {

// Exact parse of "p/q", "-3", "0.25", "1e-6", "2.5e3".
mpq_class parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw param_error("empty numeric literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || s.find('.') != std::string::npos)
      throw param_error("bad rational literal: " + text);
    if (q.get_den() == 0) throw param_error("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
  }

  long e10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    try {
      e10 = std::stol(s.substr(epos + 1));
    } catch (const std::exception&) {
      throw param_error("bad exponent in literal: " + text);
    }
    s = s.substr(0, epos);
  }

  auto dot = s.find('.');
  std::string digits = s;
  if (dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    e10 -= static_cast<long>(s.size() - dot - 1);
  }
  if (digits.empty() || digits == "-" || digits == "+")
    throw param_error("bad numeric literal: " + text);

  mpz_class num;
  if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
    throw param_error("bad numeric literal: " + text);

  mpq_class q(num);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(e10 < 0 ? -e10 : e10));
  if (e10 >= 0)
    q *= mpq_class(p10);
  else
    q /= mpq_class(p10);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar ModeConfig::parse(const std::string& text) const {
  mpq_class q = parse_rational(text);
  if (mode == ScalarMode::exact) return Scalar::exact(q);
  return Scalar::floating(q, precision_bits);
}

void ModeConfig::validate() const {
  if (mode == ScalarMode::floating) {
    if (precision_bits < 64)
      throw param_error("float precision must be at least 64 bits");
    if (refine_tolerance.mode() != ScalarMode::floating)
      throw mode_error("refine_tolerance mode does not match config");
  } else if (refine_tolerance.mode() != ScalarMode::exact) {
    throw mode_error("refine_tolerance mode does not match config");
  }
  if (refine_tolerance.sign() <= 0)
    throw param_error("refine_tolerance must be positive");
}

}  // namespace swop
