#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace dendrikit {

// Every failure mode of the library is a distinct exception type so callers
// can react to the contract they actually violated.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct DenominatorZero : Error { using Error::Error; };
struct InfiniteField : Error { using Error::Error; };
struct InvalidField : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };
struct InvalidDatum : Error { using Error::Error; };
struct InvalidBimodule : Error { using Error::Error; };
struct InvalidMatchedPair : Error { using Error::Error; };
struct InvalidCocycleSystem : Error { using Error::Error; };
struct InvalidNonabelianSystem : Error { using Error::Error; };
struct NotAnExtension : Error { using Error::Error; };
struct WrongVDim : Error { using Error::Error; };
struct ZeroH0 : Error { using Error::Error; };
struct InvalidFlag : Error { using Error::Error; };
struct NotASplitting : Error { using Error::Error; };
struct NotAComplement : Error { using Error::Error; };
struct InvalidDeformation : Error { using Error::Error; };
struct SingularDelta : Error { using Error::Error; };
struct UnknownTable : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };

enum class FieldKind { Rationals, PrimeField };

bool is_prime(unsigned n);

/// The coefficient field: the rationals, or a prime field GF(p) with p <= 97.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  unsigned p = 0;

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec gf(unsigned p);

  bool operator==(const FieldSpec&) const = default;

  std::string str() const;  // "q" or "gf:<p>"
  static FieldSpec parse(const std::string& text);
};

/// An exact field element: a reduced rational or a residue mod p, tagged by
/// its field. Arithmetic across different fields is a hard error.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), v_(std::int64_t{0}) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  /// Embeds an integer (reduced mod p over a prime field).
  static Scalar of(const FieldSpec& f, long value);
  /// Embeds num/den; over GF(p) this is num * den^-1.
  static Scalar fraction(const FieldSpec& f, long num, long den);

  const FieldSpec& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // DivisionByZero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;  // DivisionByZero on 0

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order used only for canonical (lexicographically minimal) forms.
  int cmp(const Scalar& o) const;

  /// Square root within the field, when one exists.
  std::optional<Scalar> sqrt() const;

  /// Canonical text form: "n" or "n/d" in lowest terms, or a residue "r".
  std::string str() const;
  static Scalar parse(const std::string& text, const FieldSpec& f);

  /// Residue value in [0, p); PrimeField only.
  long residue() const;
  /// Underlying rational; Rationals only.
  const mpq_class& rational() const;

 private:
  Scalar(FieldSpec f, std::int64_t residue) : field_(f), v_(residue) {}
  Scalar(FieldSpec f, mpq_class q) : field_(f), v_(std::move(q)) {}
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::variant<std::int64_t, mpq_class> v_;
};

/// All p elements of GF(p) as 0,1,...,p-1. InfiniteField over the rationals.
std::vector<Scalar> enumerate_field(const FieldSpec& f);

/// The p-1 nonzero elements of GF(p), ascending.
std::vector<Scalar> enumerate_field_units(const FieldSpec& f);

}  // namespace dendrikit
