#include <secular/error.hpp>
#include <secular/io.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace secular::io {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

const Json& field(const Json& doc, const char* key, const char* what) {
  if (!doc.is_object() || !doc.contains(key))
    throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  return doc.at(key);
}

QVector vector_from_json(const Json& doc, const char* what) {
  if (!doc.is_array()) throw ParseError(std::string(what) + ": expected an array");
  QVector v;
  for (const auto& x : doc) v.push_back(rat_from_json(x));
  return v;
}

}  // namespace

Rat rat_from_json(const Json& value) {
  if (value.is_string()) return parse_rat(value.get<std::string>());
  if (value.is_number_integer()) return Rat(BigInt(value.dump(), 10));
  if (value.is_number_float()) {
    const double x = value.get<double>();
    if (!std::isfinite(x)) throw ParseError("non-finite number");
    return parse_rat(shortest(x));
  }
  throw ParseError("expected a rational (string or number), got " + value.dump());
}

Json to_json(const Rat& value) { return format_rat(value); }

QMatrix matrix_from_json(const Json& doc) {
  if (doc.is_array()) {
    const std::size_t rows = doc.size();
    const std::size_t cols = rows == 0 ? 0 : doc[0].size();
    std::vector<Rat> entries;
    for (const auto& row : doc) {
      if (!row.is_array() || row.size() != cols) throw ParseError("matrix: ragged rows");
      for (const auto& x : row) entries.push_back(rat_from_json(x));
    }
    return QMatrix(rows, cols, std::move(entries));
  }
  const Json& rows_j = field(doc, "rows", "matrix");
  const Json& cols_j = field(doc, "cols", "matrix");
  if (!rows_j.is_number_unsigned() || !cols_j.is_number_unsigned())
    throw ParseError("matrix: rows and cols must be non-negative integers");
  const auto rows = rows_j.get<std::size_t>();
  const auto cols = cols_j.get<std::size_t>();
  const Json& entries_j = field(doc, "entries", "matrix");
  if (!entries_j.is_array() || entries_j.size() != rows * cols)
    throw ParseError("matrix: expected " + std::to_string(rows * cols) + " entries");
  std::vector<Rat> entries;
  for (const auto& x : entries_j) entries.push_back(rat_from_json(x));
  QMatrix m(rows, cols, std::move(entries));
  if (doc.contains("symmetric") && doc.at("symmetric").is_boolean() && doc.at("symmetric").get<bool>())
    m.mark_symmetric();
  return m;
}

Json to_json(const QMatrix& m) {
  Json entries = Json::array();
  for (const auto& x : m.entries()) entries.push_back(format_rat(x));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"symmetric", m.is_symmetric()}, {"entries", entries}};
}

Json to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rat(x));
  return out;
}

Json to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const UPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(format_rat(c));
  return Json{{"text", p.to_string()}, {"coefficients", coeffs}};
}

UPoly poly_from_json(const Json& doc) {
  const Json& c = doc.is_object() ? field(doc, "coefficients", "polynomial") : doc;
  return UPoly(vector_from_json(c, "polynomial coefficients"));
}

Json to_json(const RealRoot& root) {
  Json j{{"multiplicity", root.multiplicity}, {"exact", root.exact}, {"approx", root.approx()}};
  if (root.exact) {
    j["value"] = format_rat(root.value);
  } else {
    j["interval"] = Json::array({format_rat(root.lo), format_rat(root.hi)});
    j["defining_polynomial"] = to_json(root.defining);
  }
  return j;
}

Pencil pencil_from_json(const Json& doc) {
  if (doc.is_object() && doc.contains("A") && doc.contains("B")) {
    Orientation o = Orientation::kSAMinusB;
    if (doc.contains("orientation")) {
      const std::string s = doc.at("orientation").get<std::string>();
      if (s == "sA-B")
        o = Orientation::kSAMinusB;
      else if (s == "A-sB")
        o = Orientation::kAMinusSB;
      else
        throw ParseError("pencil: orientation must be \"sA-B\" or \"A-sB\"");
    }
    return Pencil(matrix_from_json(doc.at("A")), matrix_from_json(doc.at("B")), o);
  }
  const Json& m = doc.is_object() && doc.contains("M") ? doc.at("M") : doc;
  return Pencil::standard(matrix_from_json(m));
}

Json to_json(const Pencil& pencil) {
  return Json{{"A", to_json(pencil.A)},
              {"B", to_json(pencil.B)},
              {"orientation", pencil.orientation == Orientation::kSAMinusB ? "sA-B" : "A-sB"}};
}

QuadPair quad_pair_from_json(const Json& doc) {
  return QuadPair::make(matrix_from_json(field(doc, "Phi", "quadratic pair")),
                        matrix_from_json(field(doc, "Psi", "quadratic pair")));
}

MechModel model_from_json(const Json& doc) {
  const Json& kind_j = field(doc, "kind", "model");
  if (!kind_j.is_string()) throw ParseError("model: kind must be a string");
  const ModelKind kind = parse_model_kind(kind_j.get<std::string>());
  if (kind == ModelKind::kCustom)
    return custom_model(matrix_from_json(field(doc, "A", "model")), matrix_from_json(field(doc, "B", "model")));
  Parameters params;
  if (doc.contains("parameters")) {
    if (!doc.at("parameters").is_object()) throw ParseError("model: parameters must be an object");
    for (const auto& [k, v] : doc.at("parameters").items()) params[k] = rat_from_json(v);
  }
  return build_model(kind, params);
}

Scenario scenario_from_json(const Json& doc) {
  Scenario s;
  s.model = model_from_json(field(doc, "model", "scenario"));
  const std::size_t n = s.model.size();
  if (doc.contains("initial_conditions")) {
    const Json& ic = doc.at("initial_conditions");
    s.ic.Y = ic.contains("Y") ? vector_from_json(ic.at("Y"), "Y") : QVector(n, Rat(0));
    s.ic.V = ic.contains("V") ? vector_from_json(ic.at("V"), "V") : QVector(n, Rat(0));
  } else {
    s.ic.Y = QVector(n, Rat(0));
    s.ic.V = QVector(n, Rat(0));
  }
  if (s.ic.Y.size() != n || s.ic.V.size() != n)
    throw ParseError("scenario: initial conditions must have " + std::to_string(n) + " entries");
  if (doc.contains("t_grid")) {
    const Json& g = doc.at("t_grid");
    if (g.contains("t_max")) s.grid.t_max = to_double(rat_from_json(g.at("t_max")));
    if (g.contains("steps")) {
      if (!g.at("steps").is_number_integer()) throw ParseError("scenario: steps must be an integer");
      s.grid.steps = g.at("steps").get<int>();
    }
  }
  return s;
}

Json provenance(const std::string& algorithm, const std::string& source) {
  return Json{{"algorithm", algorithm}, {"source", source}};
}

std::string trajectory_csv(const Trajectory& tr) {
  std::ostringstream out;
  out.precision(17);
  out << "t";
  for (Eigen::Index j = 0; j < tr.values.cols(); ++j) out << ",y" << (j + 1);
  out << "\n";
  for (std::size_t i = 0; i < tr.t.size(); ++i) {
    out << tr.t[i];
    for (Eigen::Index j = 0; j < tr.values.cols(); ++j) out << "," << tr.values(static_cast<Eigen::Index>(i), j);
    out << "\n";
  }
  return out.str();
}

}  // namespace secular::io
