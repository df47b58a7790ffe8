#include <secular/error.hpp>
#include <secular/factor.hpp>
#include <secular/real_roots.hpp>

#include <algorithm>
#include <map>
#include <optional>

namespace secular {
namespace {

// Upper bound on divisor-combination leaves explored for one degree.
constexpr double kMaxCombinations = 5e7;

// Positive divisors of |v| (v != 0). Empty optional when |v| cannot be fully
// factored by trial division plus a primality test.
std::optional<std::vector<BigInt>> positive_divisors(BigInt v) {
  v = abs(v);
  std::vector<std::pair<BigInt, int>> primes;
  for (BigInt p = 2; p * p <= v && p <= 1000000; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e > 0) primes.emplace_back(p, e);
  }
  if (v > 1) {
    if (v > BigInt(1000000) * BigInt(1000000) && mpz_probab_prime_p(v.get_mpz_t(), 30) == 0)
      return std::nullopt;
    primes.emplace_back(v, 1);
  }
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

BigInt eval_int(const std::vector<BigInt>& coeffs, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<BigInt> integer_coeffs(const UPoly& primitive) {
  std::vector<BigInt> out;
  for (const auto& c : primitive.coeffs()) out.push_back(c.get_num());
  return out;
}

// Newton interpolation through (xs[i], ys[i]), expanded to monomial form.
UPoly interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  const std::size_t m = xs.size();
  std::vector<Rat> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  UPoly result;
  UPoly basis = UPoly::constant(Rat(1));
  for (std::size_t i = 0; i < m; ++i) {
    result += basis * dd[i];
    basis *= UPoly({Rat(-xs[i]), Rat(1)});
  }
  return result;
}

struct SamplePoint {
  BigInt x;
  BigInt value;
  std::vector<BigInt> divisors;
};

// Looks for a divisor of exact degree d of the primitive integer polynomial f.
std::optional<UPoly> find_factor_of_degree(const UPoly& f, int d) {
  const auto coeffs = integer_coeffs(f);
  const BigInt lead = abs(coeffs.back());

  std::vector<SamplePoint> pool;
  for (int x = 0; x <= 40; ++x) {
    for (int sgnx : {1, -1}) {
      if (x == 0 && sgnx == -1) continue;
      BigInt bx = x * sgnx;
      BigInt v = eval_int(coeffs, bx);
      if (v == 0) {
        // integer root: (x - bx) is a degree-1 factor
        if (d == 1) return UPoly::linear_root(Rat(bx));
        continue;
      }
      auto divs = positive_divisors(v);
      if (!divs) continue;
      pool.push_back({bx, v, std::move(*divs)});
    }
  }
  if (static_cast<int>(pool.size()) < d + 1)
    throw PreconditionError("kronecker_factor: cannot find enough factorable sample values");
  std::stable_sort(pool.begin(), pool.end(), [](const SamplePoint& a, const SamplePoint& b) {
    return a.divisors.size() < b.divisors.size();
  });
  pool.resize(static_cast<std::size_t>(d + 1));

  double combos = 1;
  for (std::size_t i = 0; i < pool.size(); ++i)
    combos *= static_cast<double>(pool[i].divisors.size()) * (i == 0 ? 1 : 2);
  if (combos > kMaxCombinations)
    throw PreconditionError("kronecker_factor: divisor combinations exceed cost guard");

  std::vector<BigInt> xs, ys(pool.size());
  for (const auto& s : pool) xs.push_back(s.x);

  std::optional<UPoly> found;
  // Depth-first over divisor choices; g(x_i) - g(x_j) must be divisible by
  // x_i - x_j for an integer polynomial g.
  auto dfs = [&](auto&& self, std::size_t j) -> void {
    if (found) return;
    if (j == pool.size()) {
      UPoly g = interpolate(xs, ys);
      if (g.degree() != d) return;
      for (const auto& c : g.coeffs())
        if (c.get_den() != 1) return;
      if (lead % abs(g.leading().get_num()) != 0) return;
      if (divides(g, f)) found = g;
      return;
    }
    for (const auto& dv : pool[j].divisors) {
      for (int s : {1, -1}) {
        if (j == 0 && s == -1) continue;
        BigInt t = dv * s;
        bool ok = true;
        for (std::size_t i = 0; i < j && ok; ++i) {
          BigInt diff = t - ys[i];
          BigInt gap = xs[j] - xs[i];
          ok = (diff % gap) == 0;
        }
        if (!ok) continue;
        ys[j] = t;
        self(self, j + 1);
        if (found) return;
      }
    }
  };
  dfs(dfs, 0);
  return found;
}

// Splits a square-free polynomial without rational roots into irreducibles.
void split_irreducible(const UPoly& f, std::vector<UPoly>& out) {
  if (f.degree() <= 0) return;
  UPoly prim = f.primitive();
  for (int d = 2; 2 * d <= prim.degree(); ++d) {
    if (auto g = find_factor_of_degree(prim, d)) {
      UPoly rest = exact_div(prim, *g);
      split_irreducible(*g, out);
      split_irreducible(rest, out);
      return;
    }
  }
  out.push_back(f.monic());
}

bool poly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // monic factors of equal degree; descending subleading terms put linear factors in root order
  for (int k = a.degree() - 1; k >= 0; --k)
    if (a.coeff(k) != b.coeff(k)) return a.coeff(k) > b.coeff(k);
  return false;
}

}  // namespace

std::vector<Rat> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw PreconditionError("rational_roots: zero polynomial");
  std::vector<Rat> out;
  for (const auto& r : sturm_isolate(p, Rat(1)))
    if (r.exact) out.push_back(r.value);
  return out;
}

std::vector<PolyPower> kronecker_factor(const UPoly& p, int degree_cap) {
  if (p.is_zero()) throw PreconditionError("kronecker_factor: zero polynomial");
  if (p.degree() > degree_cap)
    throw PreconditionError("kronecker_factor: degree " + std::to_string(p.degree()) +
                            " exceeds cap " + std::to_string(degree_cap));
  std::vector<PolyPower> out;
  for (const auto& [factor, exponent] : squarefree_decompose(p)) {
    UPoly rest = factor;
    std::vector<UPoly> pieces;
    for (const auto& r : rational_roots(factor)) {
      UPoly lin = UPoly::linear_root(r);
      pieces.push_back(lin);
      rest = exact_div(rest, lin);
    }
    split_irreducible(rest, pieces);
    for (auto& piece : pieces) out.push_back({piece.monic(), exponent});
  }
  std::sort(out.begin(), out.end(), [](const PolyPower& a, const PolyPower& b) {
    if (a.factor == b.factor) return a.exponent < b.exponent;
    return poly_less(a.factor, b.factor);
  });
  return out;
}

bool is_irreducible(const UPoly& p) {
  if (p.degree() <= 0) return false;
  if (p.degree() == 1) return true;
  UPoly prim = p.primitive();
  for (int d = 1; 2 * d <= prim.degree(); ++d)
    if (find_factor_of_degree(prim, d)) return false;
  return true;
}

}  // namespace secular
