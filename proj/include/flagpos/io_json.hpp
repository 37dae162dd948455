#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "flagpos/flags.hpp"
#include "flagpos/matrix.hpp"
#include "flagpos/strata.hpp"

namespace flagpos {

using Json = nlohmann::ordered_json;

// ---- matrices: array of arrays of exact "p/q" strings ----

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat mat_from_json(const Json& j) {
    if (!j.is_array()) throw ArgumentError("matrix JSON: expected an array of arrays");
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw ArgumentError("matrix JSON: expected an array of arrays");
        std::vector<Rat> r;
        for (const auto& cell : row) {
            if (!cell.is_string()) throw ArgumentError("matrix JSON: entries must be \"p/q\" strings");
            r.push_back(parse_rat(cell.get<std::string>()));
        }
        rows.push_back(std::move(r));
    }
    return Mat::from_rows(rows);
}

// ---- flags: {n, K, rep} ----

inline Json flag_to_json(const Flag& f) {
    Json j;
    j["n"] = f.n;
    j["K"] = f.K;
    j["rep"] = mat_to_json(f.rep);
    return j;
}

inline Flag flag_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("K") || !j.contains("rep"))
        throw ArgumentError("flag JSON: need fields n, K, rep");
    return Flag(j["n"].get<int>(), j["K"].get<std::vector<int>>(), mat_from_json(j["rep"]));
}

// ---- Plucker vectors: map "1,2,4" -> integer string ----

inline Json plucker_to_json(const PluckerVector& p) {
    Json j = Json::object();
    for (const auto& [I, z] : p.coords) j[I.str()] = z.str();
    return j;
}

// ---- permutations and cells ----

inline Json perm_to_json(const Perm& p) { return Json(p.one_line()); }

inline Perm perm_from_json(const Json& j) { return Perm(j.get<std::vector<int>>()); }

inline const char* plucker_class_name(PluckerClass c) {
    switch (c) {
        case PluckerClass::kPositive: return "PLUCKER_POSITIVE";
        case PluckerClass::kNonnegNotPositive: return "PLUCKER_NONNEG_NOT_POSITIVE";
        case PluckerClass::kNotNonneg: return "NOT_PLUCKER_NONNEG";
    }
    return "?";
}

inline const char* lusztig_status_name(LusztigStatus s) {
    switch (s) {
        case LusztigStatus::kPositiveWithWitness: return "POSITIVE_WITH_WITNESS";
        case LusztigStatus::kNotPositive: return "NOT_POSITIVE";
        case LusztigStatus::kNotTnnWithCertificate: return "NOT_TNN_WITH_CERTIFICATE";
        case LusztigStatus::kUndecided: return "UNDECIDED";
    }
    return "?";
}

inline Json certificate_to_json(const ObstructionCertificate& cert) {
    Json j;
    if (cert.kind == CertificateKind::kNegativeCoordinate) {
        j["kind"] = "negative_coordinate";
        j["level"] = cert.level;
        j["positive_subset"] = cert.positive_subset.str();
        j["positive_value"] = cert.positive_value.str();
        j["negative_subset"] = cert.negative_subset.str();
        j["negative_value"] = cert.negative_value.str();
    } else {
        j["kind"] = "restriction_pattern";
        j["k"] = cert.level_lo;
        j["l"] = cert.level_hi;
        j["m"] = cert.m;
        j["c"] = rat_str(cert.c);
        j["restricted_k"] = mat_to_json(cert.restricted_lo);
        j["restricted_l"] = mat_to_json(cert.restricted_hi);
    }
    return j;
}

inline Json positivity_to_json(const PositivityClass& pc) {
    Json j;
    j["plucker"] = plucker_class_name(pc.plucker);
    if (pc.lusztig) j["lusztig"] = lusztig_status_name(*pc.lusztig);
    if (pc.witness) j["witness"] = mat_to_json(*pc.witness);
    if (pc.certificate) j["certificate"] = certificate_to_json(*pc.certificate);
    return j;
}

// ---- stratification reports ----

inline Json injectivity_report_to_json(const InjectivityReport& r) {
    Json j;
    j["n"] = r.n;
    j["K"] = r.K;
    j["cell_count"] = r.cell_count;
    j["stratum_count"] = r.stratum_count;
    j["injective"] = r.injective;
    Json collisions = Json::array();
    for (const auto& [a, b] : r.collisions) {
        Json pair;
        pair["first"] = {{"v", perm_to_json(a.v)}, {"w", perm_to_json(a.w)}};
        pair["second"] = {{"v", perm_to_json(b.v)}, {"w", perm_to_json(b.w)}};
        collisions.push_back(std::move(pair));
    }
    j["collisions"] = std::move(collisions);
    return j;
}

inline std::string injectivity_report_to_csv(const InjectivityReport& r) {
    std::ostringstream out;
    out << "n,K,cell_count,stratum_count,injective\n";
    out << r.n << ",";
    for (std::size_t i = 0; i < r.K.size(); ++i) out << (i ? " " : "") << r.K[i];
    out << "," << r.cell_count << "," << r.stratum_count << "," << (r.injective ? "true" : "false") << "\n";
    out << "collision_v_a,collision_w_a,collision_v_b,collision_w_b\n";
    for (const auto& [a, b] : r.collisions)
        out << a.v.str() << "," << a.w.str() << "," << b.v.str() << "," << b.w.str() << "\n";
    return out.str();
}

inline Json polytope_to_json(const LatticePolytope& p) {
    Json j;
    j["dim"] = p.dim;
    Json verts = Json::array();
    for (const auto& v : p.vertices) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.str());
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    return j;
}

inline std::string polytope_to_csv(const LatticePolytope& p) {
    std::ostringstream out;
    for (int i = 1; i <= p.dim; ++i) out << (i > 1 ? "," : "") << "x" << i;
    out << "\n";
    for (const auto& v : p.vertices) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].str();
        out << "\n";
    }
    return out.str();
}

}  // namespace flagpos
