#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "detrep/detrep.hpp"

namespace detrep::cli {

using json = nlohmann::json;

/// Malformed input file; the message names the offending field or line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Either kind of polynomial a file may hold.
using AnyPolynomial = std::variant<BivariatePolynomial, MatrixBivariatePolynomial>;

json load_json(const std::filesystem::path& path);
void write_json(const json& doc, const std::filesystem::path& path);
/// Pretty-printed with 17 significant digits.
std::string dump(const json& doc);

json to_json(Complex z);
Complex complex_from_json(const json& j, const std::string& where);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const std::string& where);

json to_json(const BivariatePolynomial& p);
json to_json(const MatrixBivariatePolynomial& p);
/// Matrix polynomial when "block_size" is present, scalar otherwise.
AnyPolynomial polynomial_from_json(const json& j, const std::string& where = "polynomial");
BivariatePolynomial scalar_polynomial_from_json(const json& j,
                                                const std::string& where = "polynomial");

json to_json(const Pencil& pencil);
Pencil pencil_from_json(const json& j, const std::string& where = "pencil");

json to_json(const MonomialTree& tree);
MonomialTree monomial_tree_from_json(const json& j, const std::string& where = "tree");

json to_json(const LinearForm& f);
LinearForm linear_form_from_json(const json& j, const std::string& where);
json to_json(const RepresentationTree& tree);
RepresentationTree representation_tree_from_json(const json& j,
                                                 const std::string& where = "tree");

json to_json(const AffineSubstitution& s);
json to_json(const SubstitutionRecord& r);

json to_json(const RootRecord& r);
RootRecord root_from_json(const json& j, const std::string& where = "root");
json roots_to_json(const std::vector<RootRecord>& roots);
std::vector<RootRecord> roots_from_json(const json& j);

json to_json(const DeltaTriple& d);

/// Polynomial system file: {"p": ..., "q": ..., "options": {...}}.
struct SystemFile {
  BivariatePolynomial p;
  BivariatePolynomial q;
  SolveOptions options;
};

SystemFile system_from_json(const json& j);
json to_json(const SystemFile& s);

}  // namespace detrep::cli
