#include "latticetile/io.hpp"

#include <fstream>

#include "latticetile/errors.hpp"

namespace latticetile {

namespace {

Json rationalToJson(const Rational& q) { return toString(q); }

Rational rationalFromJson(const Json& j) {
    if (j.is_string()) return parseRational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    throw MalformedInputError("exact entries must be \"p/q\" strings or integers, got " + j.dump());
}

Json rvectorToJson(const RVector& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(rationalToJson(q));
    return out;
}

RVector rvectorFromJson(const Json& j) {
    if (!j.is_array()) throw MalformedInputError("expected an array of rationals");
    RVector out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(rationalFromJson(e));
    return out;
}

Json zvectorToJson(const ZVector& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(toString(z));
    return out;
}

ZVector zvectorFromJson(const Json& j) {
    if (!j.is_array()) throw MalformedInputError("expected an array of integers");
    ZVector out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_number_integer()) {
            out.emplace_back(static_cast<long>(e.get<long long>()));
        } else if (e.is_string()) {
            Rational q = parseRational(e.get<std::string>());
            if (!isInteger(q)) throw MalformedInputError("expected an integer, got " + e.dump());
            out.push_back(q.get_num());
        } else {
            throw MalformedInputError("expected an integer, got " + e.dump());
        }
    }
    return out;
}

// rows of the array are basis vectors; internal convention is columns
Json basisRowsToJson(const RMatrix& basisColumns) {
    Json rows = Json::array();
    for (std::size_t j = 0; j < basisColumns.cols(); ++j) {
        Json row = Json::array();
        for (std::size_t i = 0; i < basisColumns.rows(); ++i)
            row.push_back(rationalToJson(basisColumns(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RMatrix basisRowsFromJson(const Json& j) {
    if (!j.is_array() || j.empty()) throw MalformedInputError("basis must be a nonempty array of rows");
    const std::size_t d = j.size();
    RMatrix cols(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        if (!j[r].is_array() || j[r].size() != d)
            throw MalformedInputError("basis must be a square array");
        for (std::size_t c = 0; c < d; ++c) cols(c, r) = rationalFromJson(j[r][c]);
    }
    return cols;
}

std::string conventionName(Convention c) {
    return c == Convention::Cornered ? "cornered" : "centered";
}

Convention conventionFromName(const std::string& s) {
    if (s == "cornered") return Convention::Cornered;
    if (s == "centered") return Convention::Centered;
    throw MalformedInputError("unknown cell convention '" + s + "'");
}

Json slabToJson(const Slab& s) {
    return Json{{"normal", rvectorToJson(s.normal)},
                {"lo", rationalToJson(s.lo)},
                {"hi", rationalToJson(s.hi)}};
}

Slab slabFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("normal") || !j.contains("lo") || !j.contains("hi"))
        throw MalformedInputError("constraint must have normal/lo/hi");
    return Slab{rvectorFromJson(j["normal"]), rationalFromJson(j["lo"]), rationalFromJson(j["hi"])};
}

Json pieceToJson(const Piece& p) {
    Json constraints = Json::array();
    for (const auto& s : p.constraints) constraints.push_back(slabToJson(s));
    return Json{{"g_latticeCoords", zvectorToJson(p.gLatticeCoords)},
                {"l", rvectorToJson(p.l)},
                {"m", rvectorToJson(p.m)},
                {"constraints", std::move(constraints)}};
}

Piece pieceFromJson(const Json& j) {
    if (!j.is_object()) throw MalformedInputError("piece must be an object");
    Piece p;
    p.gLatticeCoords = zvectorFromJson(j.at("g_latticeCoords"));
    p.l = rvectorFromJson(j.at("l"));
    p.m = rvectorFromJson(j.at("m"));
    if (!j.at("constraints").is_array()) throw MalformedInputError("constraints must be an array");
    for (const auto& s : j.at("constraints")) p.constraints.push_back(slabFromJson(s));
    return p;
}

} // namespace

Json toJson(const Lattice& lattice) {
    Json j;
    j["dim"] = lattice.dim();
    if (lattice.isExact()) {
        j["flavor"] = "exact";
        j["basis"] = basisRowsToJson(lattice.basis());
    } else {
        j["flavor"] = "approx";
        Json rows = Json::array();
        const auto& b = lattice.approxBasis();
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Json row = Json::array();
            for (std::size_t i = 0; i < b.rows(); ++i) row.push_back(b(i, c));
            rows.push_back(std::move(row));
        }
        j["basis"] = std::move(rows);
    }
    return j;
}

Lattice latticeFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("basis")) throw MalformedInputError("lattice file needs a basis");
    std::string flavor = j.value("flavor", std::string("exact"));
    const Json& rows = j["basis"];
    if (!rows.is_array() || rows.empty()) throw MalformedInputError("basis must be a nonempty array");
    const std::size_t d = rows.size();
    if (j.contains("dim") && j["dim"].get<std::size_t>() != d)
        throw MalformedInputError("dim field disagrees with basis shape");
    if (flavor == "exact") {
        return Lattice::fromExactBasis(basisRowsFromJson(rows));
    }
    if (flavor != "approx") throw MalformedInputError("flavor must be \"exact\" or \"approx\"");
    Matrix<double> cols(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        if (!rows[r].is_array() || rows[r].size() != d)
            throw MalformedInputError("basis must be a square array");
        for (std::size_t c = 0; c < d; ++c) {
            const Json& e = rows[r][c];
            if (e.is_number()) {
                cols(c, r) = e.get<double>();
            } else if (e.is_string()) {
                cols(c, r) = parseRational(e.get<std::string>()).get_d();
            } else {
                throw MalformedInputError("approximate entries must be numbers");
            }
        }
    }
    return Lattice::fromApproxBasis(cols);
}

Json toJson(const FundamentalDomainSet& fd) {
    Json j;
    if (fd.baseCell) {
        j["baseCellBasis"] = basisRowsToJson(fd.baseCell->basis);
        j["baseCellConvention"] = conventionName(fd.baseCell->convention);
        bool anchorZero = true;
        for (const auto& q : fd.baseCell->anchor)
            if (q != 0) anchorZero = false;
        if (!anchorZero) j["baseCellAnchor"] = rvectorToJson(fd.baseCell->anchor);
    } else {
        j["baseCellBasis"] = nullptr;
        j["baseCellConvention"] = "cornered";
    }
    Json offsets = Json::array();
    for (const auto& f : fd.offsets) offsets.push_back(rvectorToJson(f));
    j["offsets"] = std::move(offsets);
    Json pieces = Json::array();
    for (const auto& p : fd.pieces) pieces.push_back(pieceToJson(p));
    j["pieces"] = std::move(pieces);
    return j;
}

FundamentalDomainSet fdFromJson(const Json& j) {
    if (!j.is_object()) throw MalformedInputError("fundamental domain file must be an object");
    FundamentalDomainSet fd;
    if (j.contains("baseCellBasis") && !j["baseCellBasis"].is_null()) {
        RMatrix basis = basisRowsFromJson(j["baseCellBasis"]);
        Convention conv = conventionFromName(j.value("baseCellConvention", std::string("cornered")));
        RVector anchor(basis.rows(), Rational(0));
        if (j.contains("baseCellAnchor")) anchor = rvectorFromJson(j["baseCellAnchor"]);
        fd.baseCell = makeCell(basis, conv, anchor);
    }
    if (j.contains("offsets"))
        for (const auto& o : j["offsets"]) fd.offsets.push_back(rvectorFromJson(o));
    if (j.contains("pieces"))
        for (const auto& p : j["pieces"]) fd.pieces.push_back(pieceFromJson(p));
    return fd;
}

Json toJson(const std::vector<Piece>& pieces) {
    Json j = Json::array();
    for (const auto& p : pieces) j.push_back(pieceToJson(p));
    return j;
}

std::vector<Piece> piecesFromJson(const Json& j) {
    if (!j.is_array()) throw MalformedInputError("equidecomposition file must be an array of pieces");
    std::vector<Piece> out;
    out.reserve(j.size());
    for (const auto& p : j) out.push_back(pieceFromJson(p));
    return out;
}

Json toJson(const TilingReport& report) {
    Json histogram = Json::object();
    for (const auto& [mult, count] : report.histogram) histogram[std::to_string(mult)] = count;
    Json witnesses = Json::array();
    for (const auto& w : report.witnesses) witnesses.push_back(rvectorToJson(w));
    return Json{{"mode", report.mode == TilingReport::Mode::Exact ? "exact" : "montecarlo"},
                {"verdict", report.tiles ? "tiles" : "fails"},
                {"histogram", std::move(histogram)},
                {"witnesses", std::move(witnesses)},
                {"sampleCount", report.sampleCount},
                {"seed", report.seed},
                {"evidence", report.evidence},
                {"disjoint", report.disjoint},
                {"volumeMatches", report.volumeMatches}};
}

Json toJson(const WindowReport& report) {
    Json points = Json::array();
    for (const auto& p : report.f1Points) points.push_back(p);
    return Json{{"R", report.radius},
                {"margin", report.margin},
                {"bottleneck", report.bottleneck},
                {"deficiency", report.deficiency},
                {"sourceCount", report.sourceCount},
                {"targetCount", report.targetCount},
                {"F1_points", std::move(points)},
                {"bound_check", Json{{"limit", report.boundLimit}, {"max_observed", report.maxObserved}}}};
}

Json toJson(const GUniformityReport& report) {
    Json density = Json::object();
    for (const auto& [k, v] : report.minDensity) density[std::to_string(k)] = v;
    Json gens = Json::array();
    for (const auto& g : report.generators) gens.push_back(g);
    return Json{{"kValues", report.kValues}, {"minDensity", std::move(density)},
                {"samples", report.samples}, {"seed", report.seed},
                {"generators", std::move(gens)}, {"rank", report.rank}};
}

Matrix<double> doubleMatrixFromJson(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw MalformedInputError("matrix file must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    Matrix<double> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw MalformedInputError("matrix rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& e = j[r][c];
            if (e.is_number()) {
                m(r, c) = e.get<double>();
            } else if (e.is_string()) {
                m(r, c) = parseRational(e.get<std::string>()).get_d();
            } else {
                throw MalformedInputError("matrix entries must be numbers or rational strings");
            }
        }
    }
    return m;
}

Json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw MalformedInputError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void writeJsonFile(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw MalformedInputError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace latticetile
