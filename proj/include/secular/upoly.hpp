#pragma once

#include <secular/rational.hpp>

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace secular {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored lowest degree first and always trimmed, so the
/// leading coefficient is nonzero; the zero polynomial has no coefficients
/// and degree -1.
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::initializer_list<Rat> coeffs);
  explicit UPoly(std::vector<Rat> coeffs);

  static UPoly constant(const Rat& c);
  /// x - root
  static UPoly linear_root(const Rat& root);
  /// The monomial c * x^k.
  static UPoly monomial(const Rat& c, unsigned k);
  static UPoly x() { return monomial(Rat(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  Rat coeff(int k) const;
  const Rat& leading() const;

  Rat operator()(const Rat& x) const;
  double eval(double x) const;
  std::complex<double> eval(std::complex<double> x) const;

  UPoly derivative() const;
  UPoly monic() const;
  /// Positive rational multiple with coprime integer coefficients. Sign of
  /// the polynomial is preserved, which Sturm chains rely on.
  UPoly primitive() const;
  /// p(-x)
  UPoly reflect() const;
  /// p(x + shift)
  UPoly taylor_shift(const Rat& shift) const;

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  UPoly& operator*=(const UPoly& rhs);
  UPoly& operator*=(const Rat& c);

  friend UPoly operator+(UPoly lhs, const UPoly& rhs) { return lhs += rhs; }
  friend UPoly operator-(UPoly lhs, const UPoly& rhs) { return lhs -= rhs; }
  friend UPoly operator*(UPoly lhs, const UPoly& rhs) { return lhs *= rhs; }
  friend UPoly operator*(UPoly lhs, const Rat& c) { return lhs *= c; }
  friend UPoly operator*(const Rat& c, UPoly rhs) { return rhs *= c; }
  UPoly operator-() const;

  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Human-readable form, e.g. "-x^3+4x^2-3x".
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct DivRem {
  UPoly quotient;
  UPoly remainder;
};

/// Euclidean division; throws PreconditionError on a zero divisor.
DivRem divrem(const UPoly& p, const UPoly& q);

/// True when q divides p exactly (q nonzero).
bool divides(const UPoly& q, const UPoly& p);

/// Exact quotient p / q; throws InternalError if the remainder is nonzero.
UPoly exact_div(const UPoly& p, const UPoly& q);

UPoly pow(const UPoly& p, unsigned k);

/// Monic gcd. gcd(0, 0) is a PreconditionError.
UPoly gcd(const UPoly& p, const UPoly& q);

struct Bezout {
  UPoly gcd;  // monic
  UPoly s;
  UPoly t;    // s*p + t*q = gcd
};
Bezout xgcd(const UPoly& p, const UPoly& q);

/// Inverse of a modulo m; a and m must be coprime.
UPoly inverse_mod(const UPoly& a, const UPoly& m);

struct PolyPower {
  UPoly factor;
  int exponent = 0;
  friend bool operator==(const PolyPower&, const PolyPower&) = default;
};

/// Yun's square-free decomposition. Factors are monic, pairwise coprime and
/// square-free; their product with exponents equals monic(p). Constants give
/// an empty list.
std::vector<PolyPower> squarefree_decompose(const UPoly& p);

/// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);

/// Expands a factor list back into a polynomial.
UPoly expand(const std::vector<PolyPower>& factors);

}  // namespace secular
