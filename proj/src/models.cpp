#include <secular/error.hpp>
#include <secular/oscillate.hpp>

namespace secular {

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kLoadedString: return "loaded-string";
    case ModelKind::kDalembertTwoMass: return "dalembert-two-mass";
    case ModelKind::kYvonVillarceau2Dof: return "yvon-villarceau-2dof";
    case ModelKind::kCoupledSprings: return "coupled-springs";
    case ModelKind::kCustom: return "custom";
  }
  return "custom";
}

ModelKind parse_model_kind(std::string_view text) {
  for (auto k : {ModelKind::kLoadedString, ModelKind::kDalembertTwoMass, ModelKind::kYvonVillarceau2Dof,
                 ModelKind::kCoupledSprings, ModelKind::kCustom})
    if (text == to_string(k)) return k;
  throw ParseError("unknown model kind '" + std::string(text) + "'");
}

namespace {

const Rat& param(const Parameters& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw PreconditionError("model parameter '" + name + "' is missing");
  return it->second;
}

const Rat& positive(const Parameters& p, const std::string& name) {
  const Rat& v = param(p, name);
  if (v <= 0) throw PreconditionError("model parameter '" + name + "' must be positive");
  return v;
}

// Weights numbered from the free (lower) end; the thread above weight j
// carries the j weights below it, so with unit weight and gravity its
// tension is j.
void loaded_string(std::size_t n, const Rat& a, QMatrix& A, QMatrix& B) {
  A = QMatrix::identity(n);
  B = QMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const long j = static_cast<long>(i) + 1;
    B(i, i) = Rat(2 * j - 1) / a;
    if (i + 1 < n) {
      B(i, i + 1) = Rat(-j) / a;
      B(i + 1, i) = Rat(-j) / a;
    }
  }
}

}  // namespace

MechModel build_model(ModelKind kind, const Parameters& parameters) {
  MechModel m;
  m.kind = kind;
  m.parameters = parameters;
  switch (kind) {
    case ModelKind::kLoadedString: {
      const Rat& n = positive(parameters, "n");
      if (n.get_den() != 1) throw PreconditionError("model parameter 'n' must be an integer");
      if (n > 64) throw PreconditionError("loaded string: at most 64 weights");
      loaded_string(n.get_num().get_ui(), positive(parameters, "a"), m.A, m.B);
      break;
    }
    case ModelKind::kDalembertTwoMass: {
      // x'' = -(2/T^2)(2x - y), y'' = -(2/T^2)(2y - 2x); the first row is
      // doubled to make the pair symmetric.
      const Rat& T = positive(parameters, "T");
      const Rat c = Rat(2) / (T * T);
      m.A = QMatrix{{2, 0}, {0, 1}};
      m.B = QMatrix{{4 * c, -2 * c}, {-2 * c, 2 * c}};
      break;
    }
    case ModelKind::kYvonVillarceau2Dof: {
      const Rat& g = positive(parameters, "g");
      const Rat& f = positive(parameters, "f");
      const Rat& a = param(parameters, "a");
      const Rat& c = positive(parameters, "c");
      if (g * f - a * a <= 0) throw PreconditionError("yvon-villarceau-2dof: need g f - a^2 > 0");
      m.A = QMatrix{{g, a}, {a, f}};
      m.B = QMatrix{{c, 0}, {0, c}};
      break;
    }
    case ModelKind::kCoupledSprings: {
      const Rat& mass = positive(parameters, "m");
      const Rat& k = positive(parameters, "k");
      const Rat& k0 = positive(parameters, "k0");
      m.A = QMatrix{{mass, 0}, {0, mass}};
      m.B = QMatrix{{k0 + k, -k}, {-k, k0 + k}};
      break;
    }
    case ModelKind::kCustom:
      throw PreconditionError("custom models take explicit matrices");
  }
  m.A.mark_symmetric();
  m.B.mark_symmetric();
  return m;
}

MechModel custom_model(QMatrix A, QMatrix B) {
  if (!A.is_square() || !B.is_square() || A.rows() != B.rows() || A.rows() == 0)
    throw PreconditionError("custom model: A and B must be square and of equal size");
  MechModel m;
  m.kind = ModelKind::kCustom;
  m.A = std::move(A);
  m.B = std::move(B);
  return m;
}

QMatrix first_order_form(const MechModel& model) {
  const std::size_t n = model.size();
  const QMatrix k = inverse(model.A) * model.B;
  QMatrix M(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    M(i, n + i) = 1;
    for (std::size_t j = 0; j < n; ++j) M(n + i, j) = -k(i, j);
  }
  return M;
}

}  // namespace secular
