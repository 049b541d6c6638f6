#include "ndpoly/json_io.hpp"

#include <sstream>

namespace ndpoly {

json polygon_to_json(const LatticePolygon& p) {
    json verts = json::array();
    for (auto v : p.vertices()) verts.push_back({v.x, v.y});
    return json{{"vertices", verts}};
}

LatticePolygon polygon_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("polygon JSON: expected {\"vertices\": [[x,y],...]}");
    std::vector<LatticePoint> pts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
            throw std::invalid_argument("polygon JSON: vertices must be integer pairs");
        pts.push_back({v[0].get<Coord>(), v[1].get<Coord>()});
    }
    Hull h = convex_hull(std::move(pts));
    if (h.kind() != Hull::Kind::Polygon)
        throw std::invalid_argument("polygon JSON: points are degenerate (not 2-dimensional)");
    return h.polygon();
}

json report_to_json(const PolygonReport& r) {
    json j{{"genus", r.genus},
           {"r", r.r},
           {"r1", r.r1},
           {"g1", r.g1},
           {"c", r.c},
           {"m", r.m},
           {"dim_aut", r.dim_aut},
           {"dim_M_Delta_upper", r.dim_M_Delta_upper}};
    j["is_maximal"] = r.is_maximal.has_value() ? json(*r.is_maximal) : json(nullptr);
    j["is_hyperelliptic"] =
        r.is_hyperelliptic.has_value() ? json(*r.is_hyperelliptic) : json(nullptr);
    if (r.koelman_dim) j["koelman_dim"] = *r.koelman_dim;
    return j;
}

json loop_to_json(const LegalLoop& l) {
    json vecs = json::array();
    for (auto v : l.vectors()) vecs.push_back({v.x, v.y});
    return json{{"vectors", vecs}};
}

LegalLoop loop_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vectors") || !j["vectors"].is_array())
        throw std::invalid_argument("loop JSON: expected {\"vectors\": [[x,y],...]}");
    std::vector<LatticePoint> vecs;
    for (const auto& v : j["vectors"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
            throw std::invalid_argument("loop JSON: vectors must be integer pairs");
        vecs.push_back({v[0].get<Coord>(), v[1].get<Coord>()});
    }
    return LegalLoop{std::move(vecs)};
}

json twelve_to_json(const TwelveCheck& t) {
    return json{{"length", t.length},
                {"dual_length", t.dual_length},
                {"winding", t.winding},
                {"holds", t.holds}};
}

json moduli_row_to_json(const ModuliRow& row) {
    json witnesses = json::array();
    for (const auto& w : row.witnesses) witnesses.push_back(polygon_to_json(w));
    json j{{"g", row.g},
           {"hyperelliptic_dim", row.hyperelliptic_dim},
           {"claimed_dim", row.claimed_dim},
           {"witnesses", witnesses}};
    j["max_m_maximal_nonhyp"] =
        row.max_m_maximal_nonhyp.has_value() ? json(*row.max_m_maximal_nonhyp) : json(nullptr);
    return j;
}

std::string moduli_table_text(const std::vector<ModuliRow>& rows) {
    std::ostringstream os;
    os << "  g | max m (maximal nonhyp) | hyperelliptic | claimed | #witnesses\n";
    os << "----+------------------------+---------------+---------+-----------\n";
    for (const auto& r : rows) {
        os.width(3);
        os << r.g << " | ";
        os.width(22);
        if (r.max_m_maximal_nonhyp) os << *r.max_m_maximal_nonhyp;
        else os << "-";
        os << " | ";
        os.width(13);
        os << r.hyperelliptic_dim << " | ";
        os.width(7);
        os << r.claimed_dim << " | ";
        os << r.witnesses.size() << "\n";
    }
    return os.str();
}

std::string corpus_to_jsonl(const GenusCorpus& corpus) {
    std::string out;
    for (const auto& p : corpus.classes) out += polygon_to_json(p).dump() + "\n";
    return out;
}

}  // namespace ndpoly
