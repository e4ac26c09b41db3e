#pragma once

#include <string>
#include <vector>

#include "heegner/bigint.hpp"
#include "heegner/heegner_number.hpp"

namespace heegner {

struct FamilyParams {
  BigInt Z;
  BigInt k;
  HeegnerNumber H;

  /// Throws Error(DomainError) when Z or k is negative.
  FamilyParams(BigInt z, BigInt k_, HeegnerNumber h);

  BigInt zk() const { return Z * k; }
};

/// f(n) = n^2 - A n + B with A = 2Zk - 1 and B = (A^2 + H) / 4.
///
/// Instances are only produced by construct(), which guarantees A odd and
/// 4B = A^2 + H. The discriminant is therefore -H and f has no real roots.
class QuadraticPolynomial {
 public:
  const BigInt& A() const noexcept { return a_; }
  const BigInt& B() const noexcept { return b_; }
  HeegnerNumber H() const noexcept { return h_; }

  BigInt discriminant() const { return a_ * a_ - 4 * b_; }

  /// "n^2 - 159n + 6361" style rendering.
  std::string to_string() const;

  friend bool operator==(const QuadraticPolynomial&, const QuadraticPolynomial&) = default;

 private:
  friend QuadraticPolynomial construct(const FamilyParams& params);
  friend QuadraticPolynomial construct_from_zk(const BigInt& zk, HeegnerNumber h);

  QuadraticPolynomial(BigInt a, BigInt b, HeegnerNumber h)
      : a_(std::move(a)), b_(std::move(b)), h_(h) {}

  BigInt a_;
  BigInt b_;
  HeegnerNumber h_;
};

/// Roots A/2 +- i sqrt(H)/2, held exactly: the real part as a rational and
/// the imaginary part by its radicand.
struct ComplexRootPair {
  Rational real_part;
  BigInt imag_radicand;  // H; imaginary parts are +-sqrt(H)/2

  /// Exact value of f at real_part + i sqrt(H)/2, returned as
  /// (real, coefficient of sqrt(H) in the imaginary part).
  std::pair<Rational, Rational> substitute(const QuadraticPolynomial& poly) const;
};

/// Throws Error(NonIntegralConstant) for H in {1, 2}.
QuadraticPolynomial construct(const FamilyParams& params);

/// Same polynomial as construct({1, zk, h}); only the product Zk matters.
QuadraticPolynomial construct_from_zk(const BigInt& zk, HeegnerNumber h);

BigInt evaluate(const QuadraticPolynomial& poly, const BigInt& n);

Rational axis_of_symmetry(const QuadraticPolynomial& poly);

/// A - n; f(n) = f(A - n) for every integer n.
BigInt mirror_index(const QuadraticPolynomial& poly, const BigInt& n);

ComplexRootPair complex_roots(const QuadraticPolynomial& poly);

/// q x^2 + (alpha - 1) q x + ((alpha - 1)^2 q - delta) / (4q).
/// Throws Error(NonIntegralConstant) when 4q does not divide the numerator
/// and Error(DomainError) when q <= 0.
BigInt euler_rabinowitsch(const BigInt& delta, const BigInt& q, const BigInt& alpha,
                          const BigInt& x);

struct CatalogEntry {
  std::string name;
  FamilyParams params;
  QuadraticPolynomial poly;
};

/// Historical members of the family: Euler, Legendre, Ribenboim and the
/// other H = 3 mod 4 analogues of Euler's polynomial.
std::vector<CatalogEntry> famous_catalog();

}  // namespace heegner
