#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <variant>

namespace swop {

// Error hierarchy. Everything we throw derives from swop::error.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixing Exact and Float operands, or using a value in the wrong mode.
struct mode_error : error {
  using error::error;
};

// Invalid arguments / contract violations (bad parameters, parity, ranges).
struct param_error : error {
  using error::error;
};

// A Pochhammer factor in a lower parameter vanished, or a shifted
// hypergeometric instance left the terminating regime.
struct pole_error : error {
  using error::error;
};

// A machine check contradicted one of the certified statements
// (root count, squarefreeness, ordering, ...). Never swallowed.
struct certification_error : error {
  using error::error;
};

// The sequential orthogonalization hit a zero norm: the moment functional
// is not quasi-definite up to the requested degree.
struct quasi_definite_error : error {
  quasi_definite_error(const std::string& what, int index)
      : error(what), failing_index(index) {}
  int failing_index;
};

enum class ScalarMode { exact, floating };

// A number in one of two backend modes: an exact rational (arbitrary size,
// always canonical: lowest terms, positive denominator) or an
// arbitrary-precision binary float carrying its own precision.
//
// The two modes never mix: any binary operation on differing modes throws
// mode_error. Values are immutable in practice (all operations return new
// Scalars) and safe to share across threads.
class Scalar {
 public:
  // Exact zero.
  Scalar() : v_(mpq_class(0)) {}

  static Scalar exact(long n);
  static Scalar exact(long num, long den);  // den != 0
  static Scalar exact(const mpq_class& q);  // canonicalized copy
  static Scalar floating(double v, int precision_bits);
  static Scalar floating(const mpf_class& f);
  // Exact rational converted to a float of the given precision.
  static Scalar floating(const mpq_class& q, int precision_bits);

  ScalarMode mode() const {
    return std::holds_alternative<mpq_class>(v_) ? ScalarMode::exact
                                                 : ScalarMode::floating;
  }
  bool is_exact() const { return mode() == ScalarMode::exact; }
  int precision_bits() const;  // floating mode only

  // Constants in the same mode (and precision) as *this.
  Scalar of_int(long v) const;
  Scalar of_ratio(long num, long den) const;
  // 2^e in the same mode as *this.
  Scalar of_pow2(long e) const;

  const mpq_class& rat() const;  // exact mode only
  const mpf_class& flt() const;  // floating mode only

  int sign() const;  // -1, 0, +1
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  bool is_nonpositive_integer() const;
  // Value as a machine integer; requires an integer value that fits.
  long to_long() const;
  double to_double() const;
  Scalar abs() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);  // b != 0
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // Comparisons require matching modes.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const Scalar& a, const Scalar& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const Scalar& a, const Scalar& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const Scalar& a, const Scalar& b) {
    return compare(a, b) >= 0;
  }

  // "p/q" (or "p") in exact mode; round-trippable decimal in float mode.
  std::string str() const;
  // Decimal rendering; digits == 0 picks full precision in float mode and
  // a 17-significant-digit approximation in exact mode.
  std::string decimal_str(size_t digits = 0) const;
  // Lossless hex-float rendering ("0x1.8p-2" style); floating mode only.
  std::string hex_str() const;

 private:
  static int compare(const Scalar& a, const Scalar& b);
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(mpf_class f) : v_(std::move(f)) {}
  std::variant<mpq_class, mpf_class> v_;
};

// Per-invocation arithmetic configuration: the scalar mode, the float
// precision, and the root-refinement width.
struct ModeConfig {
  ScalarMode mode = ScalarMode::exact;
  int precision_bits = 128;  // floating mode only; must be >= 64
  Scalar refine_tolerance;   // > 0, in the active mode

  static ModeConfig exact_config();
  static ModeConfig floating_config(int precision_bits);

  // Constants in the configured mode.
  Scalar integer(long v) const;
  Scalar ratio(long num, long den) const;
  // Accepts "p/q", integers, and decimal strings (optionally with e-notation);
  // parsed exactly, then converted for float mode.
  Scalar parse(const std::string& text) const;

  void validate() const;
};

}  // namespace swop
