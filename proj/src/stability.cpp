#include <secular/error.hpp>
#include <secular/oscillate.hpp>

namespace secular {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kStable: return "stable";
    case Verdict::kUnstable: return "unstable";
    case Verdict::kConditional: return "conditional";
  }
  return "conditional";
}

namespace {

// Sign of a root; isolating intervals are narrowed until they exclude 0.
bool is_positive(RealRoot r) {
  if (r.exact) return r.value > 0;
  while (r.lo < 0 && r.hi > 0) r = refine_root(r, r.width() / 4);
  return r.lo >= 0;
}

}  // namespace

StabilityVerdict classify_stability(const MechModel& model) {
  const std::size_t n = model.size();
  const Pencil pencil = model.pencil();
  const UPoly f = characteristic_polynomial(pencil);
  if (f.is_zero()) throw SingularPencilError();

  StabilityVerdict v;
  v.roots = sturm_isolate(f);
  // A singular A lowers the degree; the missing roots count as non-real here.
  v.nonreal_roots = static_cast<int>(n) - total_multiplicity(v.roots);

  // Lagrange's rho^2 is -K, so his "real negative" roots are K > 0.
  int negative_simple = 0, negative_equal = 0;
  for (const auto& r : v.roots) {
    if (!is_positive(r)) continue;
    if (r.multiplicity == 1)
      ++negative_simple;
    else
      negative_equal += r.multiplicity;
  }
  if (negative_simple == static_cast<int>(n)) {
    v.historical = Verdict::kStable;
    v.historical_rule = "Lagrange 1766 case 1: all roots real, negative and unequal";
  } else if (negative_simple + negative_equal == 0) {
    v.historical = Verdict::kUnstable;
    v.historical_rule = "Lagrange 1766 case 2: no real negative root (positive or imaginary roots only)";
  } else {
    v.historical = Verdict::kConditional;
    v.historical_rule =
        "Lagrange 1766 case 3: roots partly real negative, partly equal, positive or imaginary; "
        "equal roots are taken to bring secular terms";
  }

  bool decided = false;
  if (pencil.is_symmetric()) {
    QMatrix A = model.A, B = model.B;
    if (is_positive_definite(-A)) {
      A = -A;
      B = -B;
    }
    if (is_positive_definite(A)) {
      decided = true;
      if (is_positive_definite(B)) {
        v.corrected = Verdict::kStable;
        v.corrected_rule =
            "Weierstrass 1858: symmetric pair with both forms definite; all K real and positive and the "
            "motion is a sum of sines whether or not the roots are distinct";
      } else {
        v.corrected = Verdict::kUnstable;
        v.corrected_rule =
            "symmetric pair with A definite but B not positive definite: a root K <= 0 gives drift or "
            "exponential growth";
      }
    }
  }
  if (!decided) {
    bool real_positive = v.nonreal_roots == 0;
    for (const auto& r : v.roots)
      if (!is_positive(r)) real_positive = false;
    bool diagonalizable = false;
    if (real_positive) {
      const QMatrix k = inverse(model.A) * model.B;
      diagonalizable = poly_at(squarefree_part(f), k).is_zero();
    }
    if (real_positive && diagonalizable) {
      v.corrected = Verdict::kStable;
      v.corrected_rule = "general pair: all K real and positive and A^-1 B diagonalizable";
    } else {
      v.corrected = Verdict::kUnstable;
      v.corrected_rule = real_positive ? "general pair: A^-1 B not diagonalizable, secular terms in t"
                                       : "general pair: a root K is non-real or not positive";
    }
  }
  v.agreement = v.historical == v.corrected;
  return v;
}

}  // namespace secular
