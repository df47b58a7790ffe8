#pragma once

#include <secular/invariants.hpp>
#include <secular/matrix.hpp>
#include <secular/oscillate.hpp>
#include <secular/real_roots.hpp>
#include <secular/weierstrass.hpp>

#include <json.hpp>

#include <string>

namespace secular::io {

using Json = nlohmann::json;

/// Reads and parses a JSON file; ParseError on I/O or syntax problems.
Json read_json_file(const std::string& path);
/// Two-space indented, keys sorted, trailing newline.
std::string dump(const Json& doc);

/// A rational given as "p/q", a decimal string, or a JSON number. Floating
/// numbers go through their shortest decimal form, so 0.1 means 1/10.
Rat rat_from_json(const Json& value);
Json to_json(const Rat& value);

/// {"rows", "cols", "symmetric", "entries": row-major}; a nested array of
/// rows is accepted as well.
QMatrix matrix_from_json(const Json& doc);
Json to_json(const QMatrix& m);
Json to_json(const Eigen::MatrixXd& m);
Json to_json(const QVector& v);
Json to_json(const Eigen::VectorXd& v);

/// {"text", "coefficients": lowest degree first}
Json to_json(const UPoly& p);
UPoly poly_from_json(const Json& doc);

Json to_json(const RealRoot& root);

/// {"A", "B", "orientation": "sA-B" | "A-sB"}, or a bare matrix M read as
/// the classical M - sI.
Pencil pencil_from_json(const Json& doc);
Json to_json(const Pencil& pencil);

/// {"Phi", "Psi"}
QuadPair quad_pair_from_json(const Json& doc);

struct Scenario {
  MechModel model;
  InitialConditions ic;
  TimeGrid grid;
};

/// {"model": {"kind", "parameters", "A"?, "B"?},
///  "initial_conditions": {"Y", "V"}, "t_grid": {"t_max", "steps"}}
Scenario scenario_from_json(const Json& doc);
MechModel model_from_json(const Json& doc);

Json provenance(const std::string& algorithm, const std::string& source);

/// "t,y1,...,yn" header, one row per grid point, 17 significant digits.
std::string trajectory_csv(const Trajectory& tr);

}  // namespace secular::io
