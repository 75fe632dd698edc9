#include "dendrikit/scalar.hpp"

#include <cctype>

namespace dendrikit {

namespace {

constexpr unsigned kMaxPrime = 97;

std::int64_t mod_reduce(long v, unsigned p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return r;
}

std::int64_t mod_inverse(std::int64_t a, unsigned p) {
  // Extended Euclid on (a, p); p is prime and a != 0 mod p.
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return t;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::gf(unsigned p) {
  if (!is_prime(p)) throw InvalidField("GF(" + std::to_string(p) + "): modulus is not prime");
  if (p > kMaxPrime)
    throw InvalidField("GF(" + std::to_string(p) + "): primes above " + std::to_string(kMaxPrime) +
                       " are not supported");
  return {FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
  return kind == FieldKind::Rationals ? "q" : "gf:" + std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    const std::string rest = text.substr(3);
    if (!all_digits(rest) || rest.size() > 3)  // supported primes have at most two digits
      throw ParseError("bad field spec: " + text);
    return gf(static_cast<unsigned>(std::stoul(rest)));
  }
  throw ParseError("bad field spec: " + text + " (expected \"q\" or \"gf:p\")");
}

Scalar Scalar::zero(const FieldSpec& f) { return of(f, 0); }

Scalar Scalar::one(const FieldSpec& f) { return of(f, 1); }

Scalar Scalar::of(const FieldSpec& f, long value) {
  if (f.kind == FieldKind::PrimeField) return Scalar(f, mod_reduce(value, f.p));
  return Scalar(f, mpq_class(value));
}

Scalar Scalar::fraction(const FieldSpec& f, long num, long den) {
  if (den == 0) throw DenominatorZero("fraction with zero denominator");
  if (f.kind == FieldKind::PrimeField) {
    Scalar d = of(f, den);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes mod " + std::to_string(f.p));
    return of(f, num) / d;
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(f, std::move(q));
}

bool Scalar::is_zero() const {
  if (field_.kind == FieldKind::PrimeField) return std::get<std::int64_t>(v_) == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.kind == FieldKind::PrimeField) return std::get<std::int64_t>(v_) == 1;
  return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("scalar arithmetic across fields " + field_.str() + " and " +
                        o.field_.str());
}

Scalar Scalar::operator-() const {
  if (field_.kind == FieldKind::PrimeField)
    return Scalar(field_, mod_reduce(-std::get<std::int64_t>(v_), field_.p));
  return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.kind == FieldKind::PrimeField)
    return Scalar(field_, (std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_)) % field_.p);
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (field_.kind == FieldKind::PrimeField)
    return Scalar(field_, mod_reduce(std::get<std::int64_t>(v_) - std::get<std::int64_t>(o.v_),
                                     field_.p));
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.kind == FieldKind::PrimeField)
    return Scalar(field_, (std::get<std::int64_t>(v_) * std::get<std::int64_t>(o.v_)) % field_.p);
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (field_.kind == FieldKind::PrimeField)
    return Scalar(field_, mod_inverse(std::get<std::int64_t>(v_), field_.p));
  return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  if (field_.kind == FieldKind::PrimeField)
    return std::get<std::int64_t>(v_) == std::get<std::int64_t>(o.v_);
  return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

int Scalar::cmp(const Scalar& o) const {
  check_same_field(o);
  if (field_.kind == FieldKind::PrimeField) {
    const auto a = std::get<std::int64_t>(v_), b = std::get<std::int64_t>(o.v_);
    return a < b ? -1 : a > b ? 1 : 0;
  }
  return ::cmp(std::get<mpq_class>(v_), std::get<mpq_class>(o.v_));
}

std::optional<Scalar> Scalar::sqrt() const {
  if (field_.kind == FieldKind::PrimeField) {
    for (std::int64_t r = 0; r < field_.p; ++r)
      if ((r * r) % field_.p == std::get<std::int64_t>(v_)) return Scalar(field_, r);
    return std::nullopt;
  }
  const mpq_class& q = std::get<mpq_class>(v_);
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
    mpq_class root;
    mpz_sqrt(root.get_num_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(root.get_den_mpz_t(), q.get_den_mpz_t());
    root.canonicalize();
    return Scalar(field_, std::move(root));
  }
  return std::nullopt;
}

std::string Scalar::str() const {
  if (field_.kind == FieldKind::PrimeField) return std::to_string(std::get<std::int64_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
  if (f.kind == FieldKind::PrimeField) {
    if (!all_digits(text)) throw ParseError("bad GF(p) scalar: \"" + text + "\"");
    std::int64_t v = 0;
    for (char c : text) {
      v = v * 10 + (c - '0');
      v %= f.p;  // keep small; input length is unbounded
    }
    return Scalar(f, v);
  }
  std::string num = text, den;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) throw ParseError("bad rational: \"" + text + "\"");
  }
  std::string digits = num;
  if (!digits.empty() && digits[0] == '-') digits = digits.substr(1);
  if (!all_digits(digits)) throw ParseError("bad rational: \"" + text + "\"");
  mpq_class q;
  if (den.empty()) {
    q = mpq_class(num);
  } else {
    mpz_class d(den);
    if (sgn(d) == 0) throw DenominatorZero("zero denominator in \"" + text + "\"");
    q = mpq_class(mpz_class(num), d);
  }
  q.canonicalize();
  return Scalar(f, std::move(q));
}

long Scalar::residue() const {
  if (field_.kind != FieldKind::PrimeField) throw InvalidInput("residue() on a rational scalar");
  return static_cast<long>(std::get<std::int64_t>(v_));
}

const mpq_class& Scalar::rational() const {
  if (field_.kind != FieldKind::Rationals) throw InvalidInput("rational() on a GF(p) scalar");
  return std::get<mpq_class>(v_);
}

std::vector<Scalar> enumerate_field(const FieldSpec& f) {
  if (f.kind != FieldKind::PrimeField)
    throw InfiniteField("cannot enumerate the rationals");
  std::vector<Scalar> out;
  out.reserve(f.p);
  for (long r = 0; r < static_cast<long>(f.p); ++r) out.push_back(Scalar::of(f, r));
  return out;
}

std::vector<Scalar> enumerate_field_units(const FieldSpec& f) {
  auto all = enumerate_field(f);
  return {all.begin() + 1, all.end()};
}

}  // namespace dendrikit
