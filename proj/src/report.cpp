#include "nakayama/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace nakayama {

AnalysisReport analyze(const KupischSeries& ks, const AnalysisOptions& opts) {
    AnalysisReport r;
    r.input = render(ks);
    r.series = ks;
    r.normalized = normalize(ks);
    r.selfinjective = isSelfinjective(ks);
    r.quiver = resolutionQuiver(ks);
    r.quiverCycles = cycles(r.quiver, ks);
    r.finiteGlobalDimension = r.quiverCycles.componentCount == 1 && r.quiverCycles.weight == 1;
    r.gorenstein = r.finiteGlobalDimension ||
                   std::all_of(r.quiverCycles.cycles.begin(), r.quiverCycles.cycles.end(),
                               [](const CycleData& c) { return c.black; });

    if (opts.withOracle) {
        OracleSection o;
        for (std::int64_t i = 1; i <= ks.n(); ++i) {
            o.pd.push_back(projDim(ks, SerialModule{i, 1}));
            o.id.push_back(injDim(ks, SerialModule{i, 1}));
        }
        o.globalDimension = globalDim(ks);
        o.gorenstein = isGorensteinOracle(ks);
        r.oracle = std::move(o);
    }
    if (opts.withCartan) {
        CartanSection c;
        c.matrix = cartanMatrix(ks);
        c.det = determinant(c.matrix);
        const auto snf = smithNormalForm(c.matrix);
        c.rank = snf.rank;
        c.snfDiagonal = snf.diagonal;
        r.cartan = std::move(c);
    }
    if (opts.withRetraction) {
        RetractionSection s;
        s.chain = retractionChain(ks);
        s.terminalSimple = terminalIsSimple(s.chain);
        r.retraction = std::move(s);
    }
    return r;
}

namespace {

using Json = nlohmann::ordered_json;

const char* shapeName(Shape s) { return s == Shape::Cyclic ? "cyclic" : "linear"; }

Json dimToJson(const HomDimension& d) {
    if (d.isFinite()) return Json(d.value());
    return Json("inf");
}

Json matrixToJson(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::int64_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::int64_t j = 0; j < m.cols(); ++j)
            row.push_back(static_cast<std::int64_t>(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json bigToJson(const BigInt& v) {
    // Cartan data stays far inside 64 bits for any valid series; fall back
    // to a decimal string rather than truncate if a caller exceeds it.
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

Json cyclesToJson(const QuiverCycles& qc) {
    Json arr = Json::array();
    for (const auto& c : qc.cycles) {
        Json one;
        one["vertices"] = c.vertices;
        one["size"] = c.size;
        one["weight"] = c.weight;
        one["black"] = c.black;
        arr.push_back(std::move(one));
    }
    return arr;
}

Json reportToJson(const AnalysisReport& r) {
    Json j;
    j["input"] = r.input;
    j["n"] = r.series.n();
    j["shape"] = shapeName(r.series.shape);
    j["series"] = r.series.c;
    j["selfinjective"] = r.selfinjective;
    j["normalized"] = {{"series", r.normalized.series.c},
                       {"rotationOffset", r.normalized.rotationOffset}};
    j["resolutionQuiver"] = {{"succ", r.quiver.succ},
                             {"componentCount", r.quiverCycles.componentCount},
                             {"weight", r.quiverCycles.weight},
                             {"cycles", cyclesToJson(r.quiverCycles)}};
    j["decisions"] = {{"finiteGlobalDimension", r.finiteGlobalDimension},
                      {"gorenstein", r.gorenstein}};
    if (r.oracle) {
        Json o;
        o["pd"] = Json::array();
        o["id"] = Json::array();
        for (const auto& d : r.oracle->pd) o["pd"].push_back(dimToJson(d));
        for (const auto& d : r.oracle->id) o["id"].push_back(dimToJson(d));
        o["globalDim"] = dimToJson(r.oracle->globalDimension);
        o["gorenstein"] = r.oracle->gorenstein;
        j["oracle"] = std::move(o);
    }
    if (r.cartan) {
        Json c;
        c["matrix"] = matrixToJson(r.cartan->matrix);
        c["determinant"] = bigToJson(r.cartan->det);
        c["rank"] = r.cartan->rank;
        c["snfDiagonal"] = Json::array();
        for (const auto& d : r.cartan->snfDiagonal) c["snfDiagonal"].push_back(bigToJson(d));
        j["cartan"] = std::move(c);
    }
    if (r.retraction) {
        Json s;
        s["chain"] = Json::array();
        for (const auto& step : r.retraction->chain.steps)
            s["chain"].push_back(
                {{"series", step.series.c}, {"rotationOffset", step.rotationOffset}});
        s["terminal"] = r.retraction->chain.terminal.c;
        s["terminalIsSimple"] = r.retraction->terminalSimple;
        j["retraction"] = std::move(s);
    }
    return j;
}

std::string boolName(bool b) { return b ? "true" : "false"; }

} // namespace

std::string toStructured(const AnalysisReport& r) { return reportToJson(r).dump(); }

std::string toText(const AnalysisReport& r) {
    std::ostringstream os;
    os << "input: " << r.input << '\n';
    os << "n: " << r.series.n() << '\n';
    os << "shape: " << shapeName(r.series.shape) << '\n';
    os << "selfinjective: " << boolName(r.selfinjective) << '\n';
    os << "normalized: " << render(r.normalized.series) << " (offset "
       << r.normalized.rotationOffset << ")\n";
    os << "resolution quiver:\n";
    os << "  succ:";
    for (std::int64_t i = 1; i <= r.quiver.n; ++i) os << ' ' << i << "->" << r.quiver.at(i);
    os << '\n';
    os << "  components: " << r.quiverCycles.componentCount << '\n';
    os << "  weight: " << r.quiverCycles.weight << '\n';
    for (const auto& c : r.quiverCycles.cycles) {
        os << "  cycle: {";
        for (std::size_t k = 0; k < c.vertices.size(); ++k) {
            if (k) os << ',';
            os << c.vertices[k];
        }
        os << "} size=" << c.size << " weight=" << c.weight << " black=" << boolName(c.black)
           << '\n';
    }
    os << "decisions:\n";
    os << "  finite global dimension: " << boolName(r.finiteGlobalDimension) << '\n';
    os << "  gorenstein: " << boolName(r.gorenstein) << '\n';
    if (r.oracle) {
        os << "oracle:\n";
        os << "  pd:";
        for (const auto& d : r.oracle->pd) os << ' ' << d.str();
        os << '\n';
        os << "  id:";
        for (const auto& d : r.oracle->id) os << ' ' << d.str();
        os << '\n';
        os << "  global dimension: " << r.oracle->globalDimension.str() << '\n';
        os << "  gorenstein: " << boolName(r.oracle->gorenstein) << '\n';
    }
    if (r.cartan) {
        os << "cartan:\n";
        for (std::int64_t i = 0; i < r.cartan->matrix.rows(); ++i) {
            os << "  row:";
            for (std::int64_t j = 0; j < r.cartan->matrix.cols(); ++j)
                os << ' ' << r.cartan->matrix.at(i, j);
            os << '\n';
        }
        os << "  determinant: " << r.cartan->det << '\n';
        os << "  rank: " << r.cartan->rank << '\n';
        os << "  snf diagonal:";
        for (const auto& d : r.cartan->snfDiagonal) os << ' ' << d;
        os << '\n';
    }
    if (r.retraction) {
        os << "retraction:\n";
        for (const auto& step : r.retraction->chain.steps)
            os << "  step: " << render(step.series) << " (offset " << step.rotationOffset
               << ")\n";
        os << "  terminal: " << render(r.retraction->chain.terminal) << '\n';
        os << "  terminal is simple: " << boolName(r.retraction->terminalSimple) << '\n';
    }
    return os.str();
}

namespace {

Json censusToJson(const CensusReport& r, const CensusConfig& cfg) {
    Json j;
    j["config"] = {{"nMax", cfg.nMax},
                   {"cMax", cfg.cMax},
                   {"budget", cfg.budget},
                   {"jobs", cfg.jobs},
                   {"checks", cfg.checks.empty() ? allCheckIds() : cfg.checks}};
    j["algebrasChecked"] = r.algebrasChecked;
    Json per;
    for (const auto& [id, st] : r.perCheck) {
        Json s;
        s["passes"] = st.passes;
        s["failures"] = st.failures;
        s["skips"] = st.skips;
        if (st.firstCounterexample) {
            s["firstCounterexample"] = {{"series", st.firstCounterexample->series},
                                        {"detail", st.firstCounterexample->detail}};
        }
        per[id] = std::move(s);
    }
    j["perCheck"] = std::move(per);
    Json findings = Json::array();
    for (const auto& f : r.findings)
        findings.push_back({{"check", f.check}, {"series", f.series}, {"detail", f.detail}});
    j["findings"] = std::move(findings);
    j["elapsedSeconds"] = r.elapsedSeconds;
    return j;
}

} // namespace

std::string toStructured(const CensusReport& r, const CensusConfig& cfg) {
    return censusToJson(r, cfg).dump();
}

std::string toText(const CensusReport& r, const CensusConfig& cfg) {
    std::ostringstream os;
    os << "census: n <= " << cfg.nMax << ", c <= " << cfg.cMax << ", budget " << cfg.budget
       << '\n';
    os << "algebras checked: " << r.algebrasChecked << '\n';
    for (const auto& [id, st] : r.perCheck) {
        os << "check " << id << ": " << st.passes << " passed, " << st.failures << " failed, "
           << st.skips << " skipped\n";
        if (st.firstCounterexample)
            os << "  first counterexample: (" << st.firstCounterexample->series << ") "
               << st.firstCounterexample->detail << '\n';
    }
    if (!r.findings.empty()) {
        os << "findings:\n";
        for (const auto& f : r.findings)
            os << "  " << f.check << " (" << f.series << "): " << f.detail << '\n';
    } else {
        os << "findings: none\n";
    }
    os << "elapsed: " << r.elapsedSeconds << "s\n";
    os << "result: " << (r.allPassed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

} // namespace nakayama
