#pragma once

// The "phinlab/1" JSON schema. Scalars are "num/den" strings (plain integers
// are accepted on input); objects use sorted keys so output is canonical.

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "phinlab/family.hpp"
#include "phinlab/module.hpp"
#include "phinlab/pairing.hpp"
#include "phinlab/refinement.hpp"

namespace phinlab {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "phinlab/1";

Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);
Json to_json(const std::vector<Scalar>& v);
std::vector<Scalar> scalars_from_json(const Json& j);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, int rows, int cols);
Json to_json(const SemilinearScalar& x);
Json to_json(const DualScalar& x);
Json to_json(const FieldContext& ctx);
FieldContext context_from_json(const Json& j);

struct ModuleFile {
  FilteredPhiNModule module;
  std::vector<Refinement> refinements;
};

Json module_to_json(const FilteredPhiNModule& d, const std::vector<Refinement>& refinements = {});
/// Throws ParseError on malformed input. When refinements are present the
/// module must be valid and each flag is checked against it.
ModuleFile module_from_json(const Json& j);

struct FamilyFile {
  FieldContext ctx;
  TriangulationFamily characters;
  std::optional<std::vector<Scalar>> L;
  std::optional<int> s;
  std::optional<int> t;
};

Json family_to_json(const FamilyFile& fam);
FamilyFile family_from_json(const Json& j);

Json class_to_json(const UnramifiedClass& x);
Json class_to_json(const KummerClass& y);
UnramifiedClass unramified_from_json(const Json& j);
KummerClass kummer_from_json(const Json& j);

/// Reads and parses a JSON file; throws ParseError.
Json read_json_file(const std::string& path);
std::string dump_canonical(const Json& j);

}  // namespace phinlab
