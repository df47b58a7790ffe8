#include <secular/determinant.hpp>
#include <secular/error.hpp>
#include <secular/invariants.hpp>
#include <secular/reference.hpp>

#include <exception>
#include <string>

namespace secular {
namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

UPoly minor_of(const PMatrix& p, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
  PMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = p(rows[i], cols[j]);
  return reference::det_pencil(sub);
}

UPoly gcd_accumulate(const std::vector<UPoly>& minors) {
  UPoly g;
  for (const auto& m : minors) {
    if (m.is_zero()) continue;
    g = g.is_zero() ? m.monic() : gcd(g, m);
    if (g.degree() == 0) break;
  }
  if (g.is_zero()) throw SingularPencilError();
  return g;
}

MinorGcdChain chain_impl(const PMatrix& p, bool parallel) {
  if (!p.is_square()) throw PreconditionError("minor_gcd_chain: matrix is not square");
  const std::size_t n = p.rows();
  if (n > kMaxMinorChainSize)
    throw PreconditionError("minor_gcd_chain: size " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxMinorChainSize));
  UPoly det = parallel ? det_pencil(p) : reference::det_pencil(p);
  if (det.is_zero()) throw SingularPencilError();

  MinorGcdChain chain;
  for (std::size_t k = 1; k < n; ++k) {
    const auto combos = subsets(n, k);
    const long total = static_cast<long>(combos.size() * combos.size());
    std::vector<UPoly> minors(static_cast<std::size_t>(total));
    if (parallel) {
      std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
      for (long idx = 0; idx < total; ++idx) {
        const auto r = static_cast<std::size_t>(idx) / combos.size();
        const auto c = static_cast<std::size_t>(idx) % combos.size();
        try {
          minors[static_cast<std::size_t>(idx)] = minor_of(p, combos[r], combos[c]);
        } catch (...) {
#pragma omp critical
          failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
    } else {
      for (long idx = 0; idx < total; ++idx) {
        const auto r = static_cast<std::size_t>(idx) / combos.size();
        const auto c = static_cast<std::size_t>(idx) % combos.size();
        minors[static_cast<std::size_t>(idx)] = minor_of(p, combos[r], combos[c]);
      }
    }
    chain.deltas.push_back(gcd_accumulate(minors));
  }
  chain.deltas.push_back(det.monic());
  return chain;
}

int multiplicity_in(const UPoly& factor, UPoly p) {
  int k = 0;
  while (!p.is_zero() && p.degree() >= factor.degree()) {
    auto [q, r] = divrem(p, factor);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++k;
  }
  return k;
}

}  // namespace

MinorGcdChain minor_gcd_chain(const PMatrix& p) { return chain_impl(p, true); }

namespace reference {
MinorGcdChain minor_gcd_chain(const PMatrix& p) { return chain_impl(p, false); }
}  // namespace reference

InvariantFactors invariant_factors(const MinorGcdChain& chain) {
  InvariantFactors inv;
  UPoly prev = UPoly::constant(Rat(1));
  for (const auto& delta : chain.deltas) {
    auto [q, r] = divrem(delta, prev);
    if (!r.is_zero()) throw InternalError("minor-gcd chain is not a divisibility chain");
    inv.factors.push_back(q.monic());
    prev = delta;
  }
  for (std::size_t k = 1; k < inv.factors.size(); ++k)
    if (!divides(inv.factors[k - 1], inv.factors[k]))
      throw InternalError("invariant factors do not form a divisibility chain");
  return inv;
}

ElementaryDivisors elementary_divisors(const InvariantFactors& inv, int degree_cap) {
  ElementaryDivisors ed;
  for (const auto& f : inv.factors) {
    if (f.degree() <= 0) continue;
    for (auto& piece : kronecker_factor(f, degree_cap)) ed.divisors.push_back(std::move(piece));
  }
  return ed;
}

DiagonalizabilityReport is_diagonalizable(const Pencil& pencil) {
  if (!(pencil.B == QMatrix::identity(pencil.size())))
    throw PreconditionError("is_diagonalizable expects the lambda*I - A form (B = I)");
  const PMatrix c = pencil.characteristic_matrix();
  const auto chain = minor_gcd_chain(c);
  const auto inv = invariant_factors(chain);

  DiagonalizabilityReport report;
  report.divisors = elementary_divisors(inv);
  report.diagonalizable = true;
  for (const auto& d : report.divisors.divisors)
    if (d.exponent != 1) report.diagonalizable = false;

  const std::size_t n = pencil.size();
  const UPoly& charpoly = chain.deltas.back();
  const UPoly below = n >= 2 ? chain.deltas[n - 2] : UPoly::constant(Rat(1));
  for (const auto& [factor, mult] : kronecker_factor(charpoly)) {
    if (mult < 2) continue;
    MultipleRootWitness w;
    w.factor = factor;
    w.multiplicity = mult;
    w.order_in_minors = multiplicity_in(factor, below);
    w.annihilates = w.order_in_minors >= mult - 1;
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

namespace {

std::vector<Rat> darboux_sequence(const std::vector<Rat>& leading) {
  std::vector<Rat> seq(leading.rbegin(), leading.rend());
  seq.emplace_back(1);
  return seq;
}

void require_symmetric(const QMatrix& m, const char* what) {
  if (!m.is_symmetric()) throw PreconditionError(std::string(what) + ": matrix is not symmetric");
}

}  // namespace

InertiaReport inertia_by_minors(const QMatrix& m) {
  require_symmetric(m, "inertia");
  InertiaReport report;
  report.method = InertiaMethod::kMinorFormula;
  report.minor_sequence = darboux_sequence(leading_principal_minors(m));
  for (const auto& d : report.minor_sequence)
    if (d == 0) throw PreconditionError("inertia: a leading principal minor vanishes");
  for (std::size_t i = 0; i + 1 < report.minor_sequence.size(); ++i)
    if (sgn(report.minor_sequence[i]) == sgn(report.minor_sequence[i + 1])) ++report.positives;
  report.negatives = static_cast<int>(m.rows()) - report.positives;
  return report;
}

InertiaReport inertia_by_congruence(const QMatrix& m) {
  require_symmetric(m, "inertia");
  InertiaReport report;
  report.method = InertiaMethod::kCongruenceFallback;
  report.minor_sequence = darboux_sequence(leading_principal_minors(m));

  QMatrix a = m;
  const std::size_t n = a.rows();
  auto swap_sym = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  auto add_sym = [&](std::size_t dst, std::size_t src, const Rat& f) {
    // row_dst += f row_src, then col_dst += f col_src
    for (std::size_t c = 0; c < n; ++c) a(dst, c) += f * a(src, c);
    for (std::size_t r = 0; r < n; ++r) a(r, dst) += f * a(r, src);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n && pivot == n; ++i)
      if (a(i, i) != 0) pivot = i;
    if (pivot == n) {
      // no usable diagonal: the 2x2 off-diagonal trick
      for (std::size_t i = k; i < n && pivot == n; ++i)
        for (std::size_t j = i + 1; j < n && pivot == n; ++j)
          if (a(i, j) != 0) {
            add_sym(i, j, Rat(1));
            pivot = i;
          }
    }
    if (pivot == n) break;  // trailing block is zero
    swap_sym(k, pivot);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      add_sym(r, k, Rat(-a(r, k) / a(k, k)));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    int s = sgn(a(i, i));
    if (s > 0)
      ++report.positives;
    else if (s < 0)
      ++report.negatives;
    else
      ++report.zeros;
  }
  return report;
}

InertiaReport inertia(const QMatrix& m) {
  require_symmetric(m, "inertia");
  for (const auto& d : leading_principal_minors(m))
    if (d == 0) return inertia_by_congruence(m);
  return inertia_by_minors(m);
}

std::vector<SignatureStep> darboux_signature_steps(const QMatrix& m) {
  require_symmetric(m, "darboux_signature_steps");
  const std::size_t n = m.rows();
  const UPoly charpoly = det_pencil(Pencil::standard(m).characteristic_matrix());
  const auto roots = sturm_isolate(charpoly);

  auto positives_at = [&](const Rat& x) { return inertia(m - x * QMatrix::identity(n)).positives; };

  std::vector<Rat> separators;  // separators[i] lies strictly between roots i-1 and i
  if (!roots.empty()) separators.push_back(roots.front().lower() - 1);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    separators.push_back((roots[i].upper() + roots[i + 1].lower()) / 2);
  if (!roots.empty()) separators.push_back(roots.back().upper() + 1);

  std::vector<SignatureStep> steps;
  for (std::size_t i = 0; i < roots.size(); ++i)
    steps.push_back({roots[i], positives_at(separators[i + 1]) - positives_at(separators[i])});
  return steps;
}

}  // namespace secular
