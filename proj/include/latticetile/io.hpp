#ifndef LATTICETILE_IO_HPP
#define LATTICETILE_IO_HPP

#include <string>

#include <json.hpp>

#include "latticetile/domains.hpp"
#include "latticetile/matching.hpp"
#include "latticetile/uniform.hpp"
#include "latticetile/verify.hpp"

namespace latticetile {

using Json = nlohmann::json;

// Lattice files: {"dim": d, "flavor": "exact"|"approx", "basis": [...]} with
// basis vectors as the rows of the array. Exact entries are "p/q" strings
// (or integers), approximate entries are numbers.
Json toJson(const Lattice& lattice);
Lattice latticeFromJson(const Json& j);

Json toJson(const FundamentalDomainSet& fd);
FundamentalDomainSet fdFromJson(const Json& j);

// Equidecompositions are stored as a top-level array of pieces.
Json toJson(const std::vector<Piece>& pieces);
std::vector<Piece> piecesFromJson(const Json& j);

Json toJson(const TilingReport& report);
Json toJson(const WindowReport& report);
Json toJson(const GUniformityReport& report);

// Plain matrix file: array of rows, entries "p/q" strings or numbers.
Matrix<double> doubleMatrixFromJson(const Json& j);

Json readJsonFile(const std::string& path);
void writeJsonFile(const std::string& path, const Json& j);

} // namespace latticetile

#endif
