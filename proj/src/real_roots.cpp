#include <secular/error.hpp>
#include <secular/real_roots.hpp>

#include <algorithm>
#include <stack>
#include <utility>

namespace secular {

RealRoot RealRoot::make_exact(const Rat& v, int multiplicity) {
  RealRoot r;
  r.exact = true;
  r.value = v;
  r.lo = v;
  r.hi = v;
  r.defining = UPoly::linear_root(v);
  r.multiplicity = multiplicity;
  return r;
}

Rat RealRoot::midpoint() const {
  if (exact) return value;
  Rat m = (lo + hi) / 2;
  return m;
}

Rat default_root_width() {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 30);
  return Rat(BigInt(1), den);
}

std::vector<UPoly> sturm_chain(const UPoly& squarefree) {
  std::vector<UPoly> chain;
  if (squarefree.is_zero()) return chain;
  chain.push_back(squarefree.primitive());
  UPoly d = squarefree.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive());
  while (true) {
    UPoly r = divrem(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back((-r).primitive());
  }
  return chain;
}

int sign_variations(const std::vector<UPoly>& chain, const Rat& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int count_roots(const std::vector<UPoly>& chain, const Rat& a, const Rat& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Rat cauchy_bound(const UPoly& p) {
  if (p.degree() <= 0) return Rat(1);
  Rat worst(0);
  const Rat lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) worst = std::max(worst, Rat(abs(p.coeff(k)) / lead));
  return worst + 1;
}

namespace {

// Bisect (lo, hi) on a polynomial with exactly one simple root inside and
// nonzero endpoint values. Returns true if a midpoint hit the root exactly.
bool bisect_once(const UPoly& f, Rat& lo, Rat& hi, Rat& hit) {
  Rat mid = (lo + hi) / 2;
  int sm = sgn(f(mid));
  if (sm == 0) {
    hit = mid;
    return true;
  }
  if (sm == sgn(f(lo)))
    lo = mid;
  else
    hi = mid;
  return false;
}

RealRoot finish_isolated(const UPoly& factor, int multiplicity, Rat lo, Rat hi,
                         const Rat& target_width) {
  // Any rational root r of the primitive integer polynomial has lead * r in Z.
  const UPoly prim = factor.primitive();
  const Rat lead = abs(prim.leading());
  Rat hit;
  while ((hi - lo) * lead >= 1) {
    if (bisect_once(factor, lo, hi, hit)) return RealRoot::make_exact(hit, multiplicity);
  }
  {
    Rat a = lo * lead;
    Rat b = hi * lead;
    BigInt m;
    mpz_cdiv_q(m.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    if (m == a) m += 1;
    if (Rat(m) < b) {
      Rat candidate = Rat(m) / lead;
      if (factor(candidate) == 0) return RealRoot::make_exact(candidate, multiplicity);
    }
  }
  while (hi - lo >= target_width) {
    if (bisect_once(factor, lo, hi, hit)) return RealRoot::make_exact(hit, multiplicity);
  }
  RealRoot r;
  r.exact = false;
  r.lo = lo;
  r.hi = hi;
  r.defining = factor;
  r.multiplicity = multiplicity;
  return r;
}

}  // namespace

std::vector<RealRoot> sturm_isolate(const UPoly& p, const Rat& target_width) {
  if (p.is_zero()) throw PreconditionError("sturm_isolate: zero polynomial");
  if (target_width <= 0) throw PreconditionError("sturm_isolate: width must be positive");
  std::vector<RealRoot> out;
  if (p.degree() == 0) return out;

  const auto factors = squarefree_decompose(p);
  UPoly q = expand([&] {
    std::vector<PolyPower> ones;
    for (const auto& f : factors) ones.push_back({f.factor, 1});
    return ones;
  }());
  const auto chain = sturm_chain(q);
  const Rat bound = cauchy_bound(q);

  struct Work {
    Rat lo, hi;
    int count;
  };
  std::stack<Work> work;
  work.push({-bound, bound, count_roots(chain, -bound, bound)});
  std::vector<std::pair<Rat, Rat>> isolated;
  while (!work.empty()) {
    Work w = work.top();
    work.pop();
    if (w.count == 0) continue;
    if (w.count == 1) {
      isolated.emplace_back(w.lo, w.hi);
      continue;
    }
    Rat mid = (w.lo + w.hi) / 2;
    while (q(mid) == 0) mid = (w.lo + mid) / 2;
    int left = count_roots(chain, w.lo, mid);
    work.push({mid, w.hi, w.count - left});
    work.push({w.lo, mid, left});
  }

  for (auto& [lo, hi] : isolated) {
    const PolyPower* owner = nullptr;
    for (const auto& f : factors) {
      if (sgn(f.factor(lo)) * sgn(f.factor(hi)) < 0) {
        owner = &f;
        break;
      }
    }
    if (owner == nullptr) throw InternalError("sturm_isolate: isolated root has no owning factor");
    out.push_back(finish_isolated(owner->factor, owner->exponent, lo, hi, target_width));
  }
  std::sort(out.begin(), out.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.lower() < b.lower(); });
  return out;
}

std::vector<RealRoot> sturm_isolate(const UPoly& p) { return sturm_isolate(p, default_root_width()); }

RealRoot refine_root(const RealRoot& root, const Rat& width) {
  if (root.exact || root.width() <= width) return root;
  RealRoot r = root;
  Rat hit;
  while (r.hi - r.lo > width) {
    if (bisect_once(r.defining, r.lo, r.hi, hit)) return RealRoot::make_exact(hit, r.multiplicity);
  }
  return r;
}

int total_multiplicity(const std::vector<RealRoot>& roots) {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

}  // namespace secular
