#include <secular/error.hpp>
#include <secular/upoly.hpp>

#include <algorithm>
#include <sstream>

namespace secular {

UPoly::UPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

UPoly::UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rat& c) { return UPoly({c}); }

UPoly UPoly::linear_root(const Rat& root) { return UPoly({Rat(-root), Rat(1)}); }

UPoly UPoly::monomial(const Rat& c, unsigned k) {
  std::vector<Rat> coeffs(k + 1);
  coeffs[k] = c;
  return UPoly(std::move(coeffs));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rat& UPoly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rat UPoly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double UPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::complex<double> UPoly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly out = *this;
  Rat inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  BigInt den_lcm(1);
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInt content(0);
  for (const auto& c : coeffs_) {
    BigInt scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat factor(den_lcm, content);
  factor.canonicalize();
  return *this * factor;
}

UPoly UPoly::reflect() const {
  UPoly out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
  return out;
}

UPoly UPoly::taylor_shift(const Rat& shift) const {
  // Horner in polynomial arithmetic: p(x + s)
  UPoly acc;
  const UPoly step({shift, Rat(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += constant(*it);
  }
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> prod(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string UPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool negative = c < 0;
    Rat mag = abs(c);
    if (negative)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    bool unit = mag == 1;
    if (k == 0 || !unit) {
      if (mag.get_den() == 1)
        os << mag.get_num().get_str();
      else
        os << '(' << format_rat(mag) << ')';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

DivRem divrem(const UPoly& p, const UPoly& q) {
  if (q.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rat> rem = p.coeffs();
  const int dq = q.degree();
  const int dp = p.degree();
  if (dp < dq) return {UPoly{}, p};
  std::vector<Rat> quot(static_cast<std::size_t>(dp - dq + 1));
  const Rat inv_lead = 1 / q.leading();
  const auto& qc = q.coeffs();
  for (int k = dp - dq; k >= 0; --k) {
    Rat c = rem[static_cast<std::size_t>(k + dq)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(k + j)] -= c * qc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dq));
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

bool divides(const UPoly& q, const UPoly& p) { return divrem(p, q).remainder.is_zero(); }

UPoly exact_div(const UPoly& p, const UPoly& q) {
  auto [quot, rem] = divrem(p, q);
  if (!rem.is_zero())
    throw InternalError("expected exact division of " + p.to_string() + " by " + q.to_string());
  return quot;
}

UPoly pow(const UPoly& p, unsigned k) {
  UPoly result = UPoly::constant(Rat(1));
  for (unsigned i = 0; i < k; ++i) result *= p;
  return result;
}

UPoly gcd(const UPoly& p, const UPoly& q) {
  if (p.is_zero() && q.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  UPoly a = p.monic();
  UPoly b = q.monic();
  while (!b.is_zero()) {
    UPoly r = divrem(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Bezout xgcd(const UPoly& p, const UPoly& q) {
  if (p.is_zero() && q.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  UPoly r0 = p, r1 = q;
  UPoly s0 = UPoly::constant(Rat(1)), s1;
  UPoly t0, t1 = UPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [quot, rem] = divrem(r0, r1);
    r0 = std::exchange(r1, std::move(rem));
    s0 = std::exchange(s1, s0 - quot * s1);
    t0 = std::exchange(t1, t0 - quot * t1);
  }
  Rat inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  auto bz = xgcd(a, m);
  if (bz.gcd.degree() != 0) throw PreconditionError("inverse_mod: arguments are not coprime");
  return divrem(bz.s, m).remainder;
}

std::vector<PolyPower> squarefree_decompose(const UPoly& p) {
  if (p.is_zero()) throw PreconditionError("square-free decomposition of the zero polynomial");
  std::vector<PolyPower> out;
  if (p.degree() == 0) return out;
  UPoly f = p.monic();
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = exact_div(f, a);
  UPoly c = exact_div(fp, a);
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UPoly g = d.is_zero() ? b.monic() : gcd(b, d);
    b = exact_div(b, g);
    if (g.degree() > 0) out.push_back({g, i});
    if (b.degree() <= 0) break;
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw PreconditionError("square-free part of the zero polynomial");
  if (p.degree() <= 0) return UPoly::constant(Rat(1));
  return exact_div(p, gcd(p, p.derivative())).monic();
}

UPoly expand(const std::vector<PolyPower>& factors) {
  UPoly out = UPoly::constant(Rat(1));
  for (const auto& f : factors) out *= pow(f.factor, static_cast<unsigned>(f.exponent));
  return out;
}

}  // namespace secular
