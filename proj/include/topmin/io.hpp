// JSON file formats and report serialization.
//
// Complex:       {"name": string, "facets": [[vertex, ...], ...]}
//                vertices are integers or strings; output sorts vertices in
//                each facet and facets lexicographically (integers first).
// Configuration: {"tets": N, "gluings": [[tA, fA, tB, fB, [p0, p1, p2]], ...],
//                 "pieces": [[tet, "KIND", multiplicity], ...]}
#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "topmin/additivity.hpp"
#include "topmin/cubical.hpp"
#include "topmin/homology.hpp"
#include "topmin/join_calculus.hpp"
#include "topmin/lemma_lab.hpp"
#include "topmin/piece_catalog.hpp"
#include "topmin/simplicial_complex.hpp"
#include "topmin/surface_width.hpp"

namespace topmin {

/// Malformed input; the message names the file position or JSON field.
class ParseError : public TopologyError {
 public:
  using TopologyError::TopologyError;
};

using Json = nlohmann::ordered_json;

SimplicialComplex complex_from_json(const Json& doc);
Json complex_to_json(const SimplicialComplex& k);
/// Canonical one-line text form (plus trailing newline).
std::string serialize_complex(const SimplicialComplex& k);
SimplicialComplex parse_complex_text(const std::string& text);
SimplicialComplex parse_complex(const std::filesystem::path& path);
void write_complex(const SimplicialComplex& k, const std::filesystem::path& path);

SurfaceConfiguration configuration_from_json(const Json& doc);
Json configuration_to_json(const SurfaceConfiguration& config);
SurfaceConfiguration parse_configuration(const std::filesystem::path& path);

Json to_json(const AbelianGroup& g);
Json to_json(const HomologyProfile& p);
Json to_json(const HomologyIndex& idx);
Json to_json(const MilnorReport& r);
Json to_json(const LocalPiece& piece);
Json to_json(const IndexSumReport& r);
Json to_json(const MatchingVerdict& v);
Json to_json(const DichotomyWitness& w);
Json to_json(const Width& w);
Json to_json(const CubicalComplex& k);
Json to_json(const CellPoset& p);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace topmin
