#include "heegner/polynomial.hpp"

#include "heegner/error.hpp"

namespace heegner {

FamilyParams::FamilyParams(BigInt z, BigInt k_, HeegnerNumber h)
    : Z(std::move(z)), k(std::move(k_)), H(h) {
  if (sgn(Z) < 0 || sgn(k) < 0) {
    throw Error(ErrorCode::DomainError, "Z and k must be nonnegative");
  }
}

std::string QuadraticPolynomial::to_string() const {
  std::string out = "n^2";
  if (sgn(a_) > 0) {
    out += " - " + (a_ == 1 ? std::string() : a_.get_str()) + "n";
  } else if (sgn(a_) < 0) {
    const BigInt mag = -a_;
    out += " + " + (mag == 1 ? std::string() : mag.get_str()) + "n";
  }
  out += " + " + b_.get_str();
  return out;
}

QuadraticPolynomial construct_from_zk(const BigInt& zk, HeegnerNumber h) {
  if (!h.integral_constant()) {
    throw Error(ErrorCode::NonIntegralConstant,
                "H = " + std::to_string(h.value()) +
                    " gives (A^2 + H)/4 non-integral; only H = 3 mod 4 is constructible");
  }
  if (sgn(zk) < 0) throw Error(ErrorCode::DomainError, "Zk must be nonnegative");
  BigInt a = 2 * zk - 1;
  BigInt numerator = a * a + h.value();
  BigInt b = numerator / 4;
  return QuadraticPolynomial(std::move(a), std::move(b), h);
}

QuadraticPolynomial construct(const FamilyParams& params) {
  return construct_from_zk(params.zk(), params.H);
}

BigInt evaluate(const QuadraticPolynomial& poly, const BigInt& n) {
  return n * (n - poly.A()) + poly.B();
}

Rational axis_of_symmetry(const QuadraticPolynomial& poly) {
  Rational axis(poly.A(), 2);
  axis.canonicalize();
  return axis;
}

BigInt mirror_index(const QuadraticPolynomial& poly, const BigInt& n) { return poly.A() - n; }

ComplexRootPair complex_roots(const QuadraticPolynomial& poly) {
  return ComplexRootPair{axis_of_symmetry(poly), BigInt(poly.H().value())};
}

std::pair<Rational, Rational> ComplexRootPair::substitute(const QuadraticPolynomial& poly) const {
  // r = x + i y sqrt(H) with x = real_part, y = 1/2.
  // r^2 = x^2 - y^2 H + 2 x y sqrt(H) i.
  const Rational x = real_part;
  const Rational y(1, 2);
  const Rational radicand(imag_radicand);
  const Rational a(poly.A());
  const Rational b(poly.B());
  Rational re = x * x - y * y * radicand - a * x + b;
  Rational im = 2 * x * y - a * y;
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

BigInt euler_rabinowitsch(const BigInt& delta, const BigInt& q, const BigInt& alpha,
                          const BigInt& x) {
  if (sgn(q) <= 0) throw Error(ErrorCode::DomainError, "q must be positive");
  const BigInt shift = alpha - 1;
  const BigInt numerator = shift * shift * q - delta;
  const BigInt denominator = 4 * q;
  BigInt constant;
  BigInt remainder;
  mpz_fdiv_qr(constant.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
              denominator.get_mpz_t());
  if (remainder != 0) {
    throw Error(ErrorCode::NonIntegralConstant,
                "((alpha-1)^2 q - Delta) = " + numerator.get_str() + " is not divisible by 4q = " +
                    denominator.get_str());
  }
  return q * x * x + shift * q * x + constant;
}

std::vector<CatalogEntry> famous_catalog() {
  struct Row {
    const char* name;
    int zk;
    int h;
  };
  // Zk = 0 gives A = -1, i.e. n^2 + n + (1 + H)/4.
  static constexpr Row rows[] = {
      {"Euler", 0, 163},      {"Legendre", 0, 67},     {"Ribenboim", 40, 163},
      {"Euler-Heegner-43", 0, 43}, {"Euler-Heegner-19", 0, 19}, {"Euler-Heegner-11", 0, 11},
      {"Euler-Heegner-7", 0, 7},  {"Euler-Heegner-3", 0, 3},
  };
  std::vector<CatalogEntry> out;
  for (const auto& row : rows) {
    FamilyParams params(BigInt(1), BigInt(row.zk), HeegnerNumber(row.h));
    out.push_back(CatalogEntry{row.name, params, construct(params)});
  }
  return out;
}

}  // namespace heegner
