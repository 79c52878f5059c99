#pragma once

// JSON file formats. Every loader revalidates what it reads; ParseError for
// malformed files, ValidationError for invariant violations.
//
// Matrices are lists of rows whose entries are integers or "a/b" strings.
// A complex is {"lo": n, "dims": [...], "d": {"n": matrix}}; chain maps are
// {"n": matrix} with missing degrees zero.

#include <filesystem>
#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "synco/absolute.hpp"
#include "synco/godement.hpp"
#include "synco/spectral.hpp"

namespace synco {

using Json = nlohmann::ordered_json;

Json read_json(const std::filesystem::path& path);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);
Vector vector_from_json(const Json& j, std::size_t size);
Json to_json(const Vector& v);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
Json to_json(const Matrix& m);

Complex complex_from_json(const Json& j);
Json to_json(const Complex& c);
ChainMap chain_map_from_json(const Json& j, const Complex& source, const Complex& target);
Json to_json(const ChainMap& f);

/// {"n": {"trivial": level}} or {"n": [{"level": i, "basis": [columns]}]}.
FilteredComplex filtered_from_json(const Json& j);
Json to_json(const FilteredComplex& fc);

/// {"rig": {"complex", "phi"}, "dr": {"complex", "filtration"}, "k": complex, "c": map, "s": map}
PHodgeComplex phc_from_json(const Json& j, const CoefficientFrame& frame);
Json to_json(const PHodgeComplex& m);
PHMorphism morphism_components_from_json(const Json& j, const PHodgeComplex& source, const PHodgeComplex& target);

CoefficientFrame frame_from_json(const Json& j);

GeometricDatum datum_from_json(const Json& j);
Json to_json(const GeometricDatum& x);
ProperMap proper_map_from_json(const Json& j);

DoubleComplex double_complex_from_json(const Json& j);
Json to_json(const DoubleComplex& dc);

FiniteSite site_from_json(const Json& j);
Json to_json(const FiniteSite& site);
Sheaf sheaf_from_json(const Json& j, const FiniteSite& site);
Json to_json(const Sheaf& f);

/// A loaded object of any kind, keyed by the "type" field of its file.
using Loaded = std::variant<PHodgeComplex, PHMorphism, GeometricDatum, ProperMap, DoubleComplex, FiniteSite,
                            FilteredComplex, Json>;

/// Named registry of loaded objects; names are unique.
class Workspace {
public:
    /// Loads and validates a file under `name` (the file stem when empty).
    const Loaded& load(const std::filesystem::path& path, std::string name = {});
    const Loaded& get(const std::string& name) const;
    bool contains(const std::string& name) const { return objects_.count(name) > 0; }
    std::vector<std::string> names() const;

private:
    std::map<std::string, Loaded> objects_;
};

/// Reads any corpus file; sheaves need their site and are returned as raw JSON.
Loaded load_file(const std::filesystem::path& path);

}  // namespace synco
