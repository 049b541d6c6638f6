#include "ndpoly/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ndpoly {

namespace {

std::string strip_ws(const std::string& s) {
    std::string r;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) r += c;
    return r;
}

std::int64_t parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("polynomial parse: empty integer");
    std::size_t pos = 0;
    std::int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("polynomial parse: bad integer '" + s + "'");
    return v;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(const std::string& text) {
    std::string s = strip_ws(text);
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(item);
    if (parts.empty() || parts[0].rfind("p=", 0) != 0)
        throw std::invalid_argument("polynomial parse: expected leading 'p=<prime>;'");
    std::int64_t p = parse_int(parts[0].substr(2));
    LaurentPolynomial f(p);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].empty()) continue;
        auto colon = parts[i].find(':');
        auto comma = parts[i].find(',', colon == std::string::npos ? 0 : colon);
        if (colon == std::string::npos || comma == std::string::npos)
            throw std::invalid_argument("polynomial parse: bad term '" + parts[i] + "'");
        std::int64_t c = parse_int(parts[i].substr(0, colon));
        std::int64_t ix = parse_int(parts[i].substr(colon + 1, comma - colon - 1));
        std::int64_t iy = parse_int(parts[i].substr(comma + 1));
        f.add_term({ix, iy}, c);
    }
    return f;
}

std::string LaurentPolynomial::to_text() const {
    std::string out = "p=" + std::to_string(p()) + ";";
    for (const auto& [e, c] : terms_)
        out += " " + std::to_string(c) + ":" + std::to_string(e.x) + "," + std::to_string(e.y) + ";";
    return out;
}

Hull newton_polytope(const LaurentPolynomial& f) {
    if (f.empty()) throw std::invalid_argument("newton_polytope: zero polynomial");
    return convex_hull(f.support());
}

std::vector<Face> faces_of(const LatticePolygon& delta) {
    std::vector<Face> out;
    for (auto v : delta.vertices()) out.push_back(Face::vertex(v));
    for (std::size_t i = 0; i < delta.size(); ++i)
        out.push_back(Face::edge(delta.vertex(i), delta.vertex(i + 1)));
    out.push_back(Face::full(delta.vertices()));
    return out;
}

LaurentPolynomial face_restriction(const LaurentPolynomial& f, const Face& tau) {
    Hull h = newton_polytope(f);
    if (h.kind() != Hull::Kind::Polygon)
        throw std::invalid_argument("face_restriction: Newton polytope is not 2-dimensional");
    const LatticePolygon& delta = h.polygon();

    LaurentPolynomial r(f.p());
    switch (tau.kind) {
        case Face::Kind::Vertex: {
            LatticePoint v = tau.points.at(0);
            if (std::find(delta.vertices().begin(), delta.vertices().end(), v) ==
                delta.vertices().end())
                throw std::invalid_argument("face_restriction: not a vertex of the Newton polytope");
            r.add_term(v, f.coeff(v));
            return r;
        }
        case Face::Kind::Edge: {
            LatticeSegment e{tau.points.at(0), tau.points.at(1)};
            bool found = false;
            for (std::size_t i = 0; i < delta.size(); ++i) {
                auto de = delta.edge(i);
                if ((de.a == e.a && de.b == e.b) || (de.a == e.b && de.b == e.a)) found = true;
            }
            if (!found)
                throw std::invalid_argument("face_restriction: not an edge of the Newton polytope");
            for (const auto& [exp, c] : f.terms())
                if (segment_contains(e, exp)) r.add_term(exp, c);
            return r;
        }
        case Face::Kind::Full:
            return f;
    }
    throw std::logic_error("face_restriction: unknown face kind");
}

LaurentPolynomial apply_map(const UnimodularAffineMap& m, const LaurentPolynomial& f) {
    LaurentPolynomial g(f.p());
    for (const auto& [e, c] : f.terms()) g.add_term(m(e), c);
    return g;
}

}  // namespace ndpoly
