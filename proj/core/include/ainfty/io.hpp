#pragma once

#include "ainfty/constructions.hpp"
#include "ainfty/dga.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace ainfty {

// JSON file formats. Coefficients are strings "p/q" or "p"; linear
// combinations are lists of {"basis": label, "coeff": string}.
//
//   DGA:      {"degrees": {"0": [labels], ...},
//              "differential": [{"from": label, "to": [terms]}],
//              "product": [{"left": label, "right": label, "result": [terms]}],
//              "unit": label | [terms],            (optional)
//              "gram": {"n": [[coeff, ...], ...]}} (optional, identity default)
//   Complex:  {"vertices": [labels], "simplices": [[labels], ...]}
//   Lie:      {"dim": n, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}]}  (1-based)

enum class FileKind { dga, simplicial_complex, lie_structure };

/// Parses, then validates unless asked not to. Throws ParseError or
/// ValidationError.
DGA parse_dga(std::string_view text, bool validate = true);
std::string dga_to_json(const DGA& dga);

/// Closure under faces is computed on load. Throws ParseError.
SimplicialComplex parse_complex(std::string_view text);
std::string complex_to_json(const SimplicialComplex& k);

/// Throws ParseError.
LieStructure parse_lie(std::string_view text);
std::string lie_to_json(const LieStructure& g);

/// Detects the file kind from its top-level keys. Throws ParseError.
FileKind detect_kind(std::string_view text);

/// Any of the three formats, turned into a DGA (validated unless asked not
/// to). Throws ParseError, ValidationError, InvalidComplex or JacobiFailure.
DGA load_dga(std::string_view text, bool validate = true);

/// Throws ParseError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace ainfty
