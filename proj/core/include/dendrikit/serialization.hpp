#pragma once

#include <string>

#include "dendrikit/deformation.hpp"
#include "dendrikit/flag.hpp"

namespace dendrikit {

/// JSON forms. Scalars serialize to their canonical text ("n", "n/d", or a
/// residue), fields to "q" / "gf:p". Output is deterministic: keys are
/// emitted in sorted order and scalars in canonical form, so identical
/// objects produce byte-identical text. Parsers throw ParseError on
/// malformed input.

std::string to_json(const DendriformAlgebra& alg, bool pretty = false);
DendriformAlgebra algebra_from_json(const std::string& text);

std::string to_json(const InducedAlgebra& alg, bool pretty = false);

std::string to_json(const DendriformBimodule& m, bool pretty = false);
DendriformBimodule bimodule_from_json(const std::string& text);

std::string to_json(const ExtendingDatum& w, bool pretty = false);
ExtendingDatum datum_from_json(const std::string& text);

std::string to_json(const FlagDatum& fd, bool pretty = false);
FlagDatum flag_from_json(const std::string& text);

std::string to_json(const Extension& ext, bool pretty = false);
Extension extension_from_json(const std::string& text);

std::string to_json(const LinMap& map, bool pretty = false);
LinMap linmap_from_json(const std::string& text, const FieldSpec& field);

}  // namespace dendrikit
