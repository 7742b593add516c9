#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "latticetile/equidecompose.hpp"
#include "latticetile/errors.hpp"
#include "latticetile/io.hpp"
#include "latticetile/render.hpp"

namespace lt = latticetile;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerdictFails = 3;

std::uint64_t defaultSeed() {
    if (const char* env = std::getenv("LATTICETILE_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw lt::MalformedInputError("LATTICETILE_SEED must be an unsigned integer");
        }
    }
    return 0;
}

void emit(const lt::Json& j, const std::string& outPath) {
    if (outPath.empty())
        std::cout << j.dump(2) << std::endl;
    else
        lt::writeJsonFile(outPath, j);
}

lt::Lattice loadLattice(const std::string& path) {
    return lt::latticeFromJson(lt::readJsonFile(path));
}

std::vector<double> parseDoubleList(const std::string& s) {
    std::vector<double> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(std::stod(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stod(cur));
    return out;
}

struct RenderObject {
    enum class Kind { Lattice, Domain, Pieces } kind;
    lt::Lattice lattice{lt::Lattice::standard(2)};
    lt::FundamentalDomainSet domain;
    std::vector<lt::Piece> pieces;
};

RenderObject sniffRenderObject(const lt::Json& j) {
    RenderObject obj{RenderObject::Kind::Lattice};
    if (j.is_array()) {
        obj.kind = RenderObject::Kind::Pieces;
        obj.pieces = lt::piecesFromJson(j);
        return obj;
    }
    if (j.is_object() && (j.contains("baseCellBasis") || j.contains("offsets") || j.contains("pieces"))) {
        obj.kind = RenderObject::Kind::Domain;
        obj.domain = lt::fdFromJson(j);
        return obj;
    }
    if (j.is_object() && j.contains("basis")) {
        obj.kind = RenderObject::Kind::Lattice;
        obj.lattice = lt::latticeFromJson(j);
        return obj;
    }
    throw lt::MalformedInputError("cannot determine object type for rendering");
}

int runCli(int argc, char** argv) {
    CLI::App app{"Bounded common fundamental domains of full-rank lattice pairs: "
                 "exact constructions, windowed matchings, tiling verification, SVG figures"};
    app.require_subcommand(1);

    // info
    auto* info = app.add_subcommand("info", "Volume and canonical basis of a lattice");
    std::string infoPath;
    info->add_option("lattice", infoPath, "lattice JSON file")->required();

    // sum / intersect
    std::string binA, binB, binOut;
    auto* sumCmd = app.add_subcommand("sum", "Lattice generated by both inputs");
    auto* intCmd = app.add_subcommand("intersect", "Common sublattice of both inputs");
    for (auto* cmd : {sumCmd, intCmd}) {
        cmd->add_option("A", binA, "first lattice JSON")->required();
        cmd->add_option("B", binB, "second lattice JSON")->required();
        cmd->add_option("-o,--output", binOut, "output file (stdout otherwise)");
    }

    // common-fd
    auto* cfd = app.add_subcommand("common-fd", "Bounded common fundamental domain (exact pair)");
    std::string cfdA, cfdB, cfdOut;
    cfd->add_option("A", cfdA)->required();
    cfd->add_option("B", cfdB)->required();
    cfd->add_option("-o,--output", cfdOut, "output fd JSON (stdout otherwise)");

    // equidecompose
    auto* eq = app.add_subcommand("equidecompose", "Exact equidecomposition of two cells");
    std::string eqA, eqB, eqOut, eqConvention = "centered";
    eq->add_option("A", eqA)->required();
    eq->add_option("B", eqB)->required();
    eq->add_option("-o,--output", eqOut, "output pieces JSON (stdout otherwise)");
    eq->add_option("--convention", eqConvention, "cell convention: centered|cornered")
        ->check(CLI::IsMember({"centered", "cornered"}));

    // fd-from-eq
    auto* ffe = app.add_subcommand("fd-from-eq", "Assemble a common fundamental domain from pieces");
    std::string ffeIn, ffeOut;
    ffe->add_option("pieces", ffeIn)->required();
    ffe->add_option("-o,--output", ffeOut, "output fd JSON (stdout otherwise)");

    // verify
    auto* ver = app.add_subcommand("verify", "Verify that a candidate set tiles under a lattice");
    std::string verFd, verLattice, verOut;
    std::size_t verMc = 0, verSamples = 10000;
    std::uint64_t verSeed = 0;
    bool verSeedSet = false;
    ver->add_option("set", verFd, "fundamental-domain JSON")->required();
    ver->add_option("lattice", verLattice, "lattice JSON")->required();
    ver->add_option("--mc", verMc, "Monte Carlo mode with this many samples");
    ver->add_option("--samples", verSamples, "exact-mode sample count");
    ver->add_option("--seed", verSeed)->each([&](const std::string&) { verSeedSet = true; });
    ver->add_option("-o,--output", verOut, "report file (stdout otherwise)");

    // match
    auto* match = app.add_subcommand("match", "Windowed bounded-bijection constructions");
    std::string matchA, matchB, matchOut;
    std::vector<std::string> splitFiles;
    double matchRadius = 4, matchMargin = -1;
    bool requireEqual = false;
    match->add_option("A", matchA, "source lattice JSON");
    match->add_option("B", matchB, "target lattice JSON");
    match->add_option("--radius", matchRadius, "window half-width")->required();
    match->add_option("--margin", matchMargin, "target window padding (default 2x max column norm)");
    match->add_option("--split-form", splitFiles,
                      "block matrices B.json C.json for the lower-triangular split construction")
        ->expected(2);
    match->add_flag("--require-equal-volumes", requireEqual, "enforce the volume precondition");
    match->add_option("-o,--output", matchOut, "report file (stdout otherwise)");

    // probe-uniform
    auto* probe = app.add_subcommand("probe-uniform", "Orbit-density probe on a torus");
    std::vector<std::string> probeGenerators;
    std::string probeTorus, probeCenter, probeOut, probeKs = "20,40,80";
    double probeRadius = 0.45;
    std::size_t probeSamples = 200, probeDim = 2;
    std::uint64_t probeSeed = 0;
    bool probeSeedSet = false;
    probe->add_option("--generator", probeGenerators, "generator, e.g. \"0.7549,0.5699\" (repeatable)")
        ->required();
    probe->add_option("--torus", probeTorus, "torus lattice JSON (default Z^d)");
    probe->add_option("--dim", probeDim, "dimension when no torus file is given");
    probe->add_option("--radius", probeRadius, "ball radius of the target set");
    probe->add_option("--center", probeCenter, "ball center, e.g. \"0.5,0.5\"");
    probe->add_option("--ks", probeKs, "comma-separated orbit depths");
    probe->add_option("--samples", probeSamples, "sample count");
    probe->add_option("--seed", probeSeed)->each([&](const std::string&) { probeSeedSet = true; });
    probe->add_option("-o,--output", probeOut, "report file (stdout otherwise)");

    // render
    auto* render = app.add_subcommand("render", "Render 2-d objects to SVG");
    std::vector<std::string> renderInputs;
    std::string renderOut, renderViewbox;
    bool renderArrows = false;
    render->add_option("objects", renderInputs, "JSON files (lattice, fd, pieces)")->required();
    render->add_option("-o,--output", renderOut, "output SVG file")->required();
    render->add_option("--viewbox", renderViewbox, "xmin,ymin,xmax,ymax (auto otherwise)");
    render->add_flag("--arrows", renderArrows, "draw translation arrows for pieces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitMalformed;
    }

    if (info->parsed()) {
        lt::Lattice l = loadLattice(infoPath);
        lt::Json j;
        j["dim"] = l.dim();
        j["flavor"] = l.isExact() ? "exact" : "approx";
        if (l.isExact()) {
            j["volume"] = lt::toString(lt::volume(l));
            lt::Json rows = lt::Json::array();
            lt::RMatrix cb = lt::canonicalBasis(l);
            for (std::size_t c = 0; c < cb.cols(); ++c) {
                lt::Json row = lt::Json::array();
                for (std::size_t i = 0; i < cb.rows(); ++i) row.push_back(lt::toString(cb(i, c)));
                rows.push_back(row);
            }
            j["canonicalBasis"] = rows;
        } else {
            j["volume"] = lt::volumeApprox(l);
        }
        emit(j, "");
        return kExitOk;
    }

    if (sumCmd->parsed() || intCmd->parsed()) {
        lt::Lattice a = loadLattice(binA), b = loadLattice(binB);
        lt::Lattice out = sumCmd->parsed() ? lt::sum(a, b) : lt::intersect(a, b);
        emit(lt::toJson(out), binOut);
        return kExitOk;
    }

    if (cfd->parsed()) {
        lt::Lattice a = loadLattice(cfdA), b = loadLattice(cfdB);
        if (!a.isExact() || !b.isExact())
            throw lt::FlavorMismatchError(
                "common-fd needs exact lattices; use `match` for approximate input");
        emit(lt::toJson(lt::commonFDCommensurable(a, b)), cfdOut);
        return kExitOk;
    }

    if (eq->parsed()) {
        lt::Lattice a = loadLattice(eqA), b = loadLattice(eqB);
        lt::Convention conv =
            eqConvention == "cornered" ? lt::Convention::Cornered : lt::Convention::Centered;
        lt::Equidecomposition e = lt::equidecompose(a, b, conv);
        emit(lt::toJson(e.pieces), eqOut);
        return kExitOk;
    }

    if (ffe->parsed()) {
        auto pieces = lt::piecesFromJson(lt::readJsonFile(ffeIn));
        emit(lt::toJson(lt::commonFDFromEquidecomposition(pieces)), ffeOut);
        return kExitOk;
    }

    if (ver->parsed()) {
        lt::FundamentalDomainSet fd = lt::fdFromJson(lt::readJsonFile(verFd));
        lt::Lattice lat = loadLattice(verLattice);
        std::uint64_t seed = verSeedSet ? verSeed : defaultSeed();
        lt::TilingReport report = verMc > 0 ? lt::verifyMonteCarloTiling(fd, lat, verMc, seed)
                                            : lt::verifyExactTiling(fd, lat, verSamples, seed);
        emit(lt::toJson(report), verOut);
        return report.tiles ? kExitOk : kExitVerdictFails;
    }

    if (match->parsed()) {
        lt::WindowReport report;
        if (!splitFiles.empty()) {
            auto blockB = lt::doubleMatrixFromJson(lt::readJsonFile(splitFiles[0]));
            auto blockC = lt::doubleMatrixFromJson(lt::readJsonFile(splitFiles[1]));
            report = lt::splitFormCommonFDWindow(blockB, blockC, matchRadius, matchMargin);
        } else {
            if (matchA.empty() || matchB.empty())
                throw lt::MalformedInputError("match needs two lattice files or --split-form");
            lt::Lattice a = loadLattice(matchA), b = loadLattice(matchB);
            report = lt::directSumCommonFDWindow(a, b, matchRadius, matchMargin,
                                                 lt::kMatchingCap, requireEqual);
        }
        emit(lt::toJson(report), matchOut);
        return kExitOk;
    }

    if (probe->parsed()) {
        lt::Lattice torus =
            probeTorus.empty() ? lt::Lattice::standard(probeDim) : loadLattice(probeTorus);
        std::vector<lt::DVector> generators;
        for (const auto& g : probeGenerators) generators.push_back(parseDoubleList(g));
        lt::DVector center(torus.dim(), 0.5);
        if (!probeCenter.empty()) center = parseDoubleList(probeCenter);
        std::vector<std::size_t> ks;
        for (double k : parseDoubleList(probeKs)) ks.push_back(std::size_t(k));
        std::uint64_t seed = probeSeedSet ? probeSeed : defaultSeed();
        auto report = lt::gUniformProbe(lt::torusBall(torus, center, probeRadius), torus,
                                        generators, ks, probeSamples, seed);
        emit(lt::toJson(report), probeOut);
        return kExitOk;
    }

    if (render->parsed()) {
        std::vector<RenderObject> objects;
        for (const auto& path : renderInputs) objects.push_back(sniffRenderObject(lt::readJsonFile(path)));

        lt::RenderSpec spec;
        if (!renderViewbox.empty()) {
            auto v = parseDoubleList(renderViewbox);
            if (v.size() != 4) throw lt::MalformedInputError("--viewbox needs 4 numbers");
            spec = lt::RenderSpec{v[0], v[1], v[2], v[3]};
        } else {
            bool found = false;
            double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
            auto fold = [&](const lt::BBox& box) {
                if (box.empty) return;
                double bxmin = box.lo[0].get_d(), bymin = box.lo[1].get_d();
                double bxmax = box.hi[0].get_d(), bymax = box.hi[1].get_d();
                if (!found) {
                    xmin = bxmin; ymin = bymin; xmax = bxmax; ymax = bymax;
                    found = true;
                } else {
                    xmin = std::min(xmin, bxmin); ymin = std::min(ymin, bymin);
                    xmax = std::max(xmax, bxmax); ymax = std::max(ymax, bymax);
                }
            };
            for (const auto& obj : objects) {
                if (obj.kind == RenderObject::Kind::Domain) fold(obj.domain.boundingBox());
                if (obj.kind == RenderObject::Kind::Pieces)
                    for (const auto& p : obj.pieces) fold(lt::bboxOfSlabs(p.constraints));
            }
            if (!found) { xmin = -3; ymin = -3; xmax = 3; ymax = 3; }
            double padX = 0.15 * (xmax - xmin) + 0.2, padY = 0.15 * (ymax - ymin) + 0.2;
            spec = lt::RenderSpec{xmin - padX, ymin - padY, xmax + padX, ymax + padY};
        }

        lt::SvgScene scene(spec);
        const std::vector<std::string> latticeColors = {"#2a4d9b", "#b03a3a", "#3a7d44"};
        std::size_t latticeIdx = 0;
        for (const auto& obj : objects) {
            switch (obj.kind) {
            case RenderObject::Kind::Lattice:
                scene.addLattice(obj.lattice, latticeColors[latticeIdx++ % latticeColors.size()]);
                break;
            case RenderObject::Kind::Domain:
                scene.addFundamentalDomain(obj.domain, "#4878cf", "#1f3b73");
                break;
            case RenderObject::Kind::Pieces:
                scene.addEquidecompositionPieces(obj.pieces, renderArrows);
                break;
            }
        }
        std::ofstream out(renderOut);
        if (!out) throw lt::MalformedInputError("cannot write '" + renderOut + "'");
        out << scene.document();
        return kExitOk;
    }

    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return runCli(argc, argv);
    } catch (const lt::MalformedInputError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitMalformed;
    } catch (const lt::MathError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return kExitPrecondition;
    }
}
