#pragma once

#include <vector>

#include "ndpoly/hull_analysis.hpp"
#include "ndpoly/polygon.hpp"

namespace ndpoly {

// (v,w) is a legal move when conv{0,v,w} is a 2-dimensional triangle whose
// only nonzero lattice points lie on the edge from v to w; equivalently
// gcd(v)=gcd(w)=1 and |det(v,w)| = gcd(w-v) != 0.
bool is_legal_move(LatticePoint v, LatticePoint w);

// Signed length det(v w); |length| is one less than the number of lattice
// points on the edge from v to w. Rejects illegal moves.
Coord move_length(LatticePoint v, LatticePoint w);

// Cyclic chain of legal moves with no three consecutive vectors collinear.
class LegalLoop {
  public:
    explicit LegalLoop(std::vector<LatticePoint> vectors);

    const std::vector<LatticePoint>& vectors() const { return vecs_; }
    std::size_t size() const { return vecs_.size(); }

    friend bool operator==(const LegalLoop&, const LegalLoop&) = default;

  private:
    std::vector<LatticePoint> vecs_;
};

Coord loop_length(const LegalLoop& l);

// w_i = (v_{i+1} - v_i) / len(v_i, v_{i+1}); the division is exact.
LegalLoop dual_loop(const LegalLoop& l);

// Winding number around the origin: exact signed crossings of the positive
// x-ray with the half-open vertex rule.
Coord winding_number(const LegalLoop& l);

// The loop q_i = p_i^(-1) - p_i over the CCW vertices p_i of the interior
// hull. Requires a maximal polygon with 2-dimensional interior hull.
LegalLoop loop_of_polytope(const LatticePolygon& p);

struct TwelveCheck {
    Coord length = 0;
    Coord dual_length = 0;
    Coord winding = 0;
    bool holds = false;  // length + dual_length == 12 * winding
};

TwelveCheck verify_twelve(const LegalLoop& l);

}  // namespace ndpoly
