#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patlas/bracket.hpp"
#include "patlas/matrix.hpp"

namespace patlas {

struct AutoDecl {
  std::string name;
  SubstitutionMap map;
};

struct EmbedDecl {
  std::string name;
  SubstitutionMap map;  // sub variables -> file variables
};

struct ModuleDecl {
  std::string name;
  Point point;
  std::vector<Matrix> actions;  // one per variable
};

/// Parsed presentation file.
///
///   vars x, y, z laurent(z);
///   bracket exact f = z^2 - x*y;
///   bracket scaled a = 2*z; f = x*y + z + z^-1;
///   bracket table { [x,y] = 2*z; [y,z] = -y; };
///   bracket kirillov-kostant { [e,f] = h; [h,e] = 2*e; };
///   relation f - 4;
///   point (0, 0, 1);
///   auto phi { x -> x; y -> -y; z -> -z; };
///   embed sub(u, v, w) { u -> x^2/8; v -> y^2/8; w -> z/2; };
///   module m point (0, 0, 0) { z = [[1/2, 0], [0, -1/2]]; };
///   grading z;
///
/// `#` starts a comment. Scalars are integers, p/q and sqrt(d);
/// exponents may be negative on Laurent variables.
struct PresentationFile {
  PoissonPresentation presentation;
  std::vector<Point> points;
  std::vector<AutoDecl> autos;
  std::vector<EmbedDecl> embeds;
  std::vector<ModuleDecl> modules;
  std::optional<std::string> grading;
};

/// Throws ParseError with a line:column location; Jacobi and other semantic
/// checks run after the syntax is accepted and are reported the same way.
PresentationFile parse_presentation(std::string_view text);
PresentationFile load_presentation(const std::string& path);

/// Text that parse_presentation reads back to the same structure.
std::string serialize(const PresentationFile& file);

LaurentPoly parse_polynomial(const VarSetPtr& vars, std::string_view text);
Scalar parse_scalar(std::string_view text);
Point parse_point(const VarSetPtr& vars, std::string_view text);

/// Human-readable bracket clause for a presentation, e.g. "exact f = z^2 - x*y".
std::string bracket_clause(const BracketSpec& spec);

}  // namespace patlas
