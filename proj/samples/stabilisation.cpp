// Stabilising a Legendrian knot by surgery on its meridian: a contact (+1)
// on a Legendrian unknot followed by contact (-1) on a once-stabilised
// push-off leaves S^3 unchanged but shifts tb by -1 and rot by +-1.

#include "surgeon/surgeon.hpp"

#include <iostream>

int main() {
  using namespace surgeon;
  for (int rot2 : {1, -1}) {
    SurgeryDiagram d;
    d.components = {{"L1", -1, 0, ContactCoefficient::plus_one()}, {"L2", -2, rot2, ContactCoefficient::minus_one()}};
    d.linking = {{0, -1}, {-1, 0}};
    d.knots = {{"L0", LegendrianKnotData{-1, 0}, {1, 1}}};

    const InvariantReport r = compute_invariants(d, "L0");
    std::cout << "rot(L2) = " << rot2 << ": H1 = " << homology(build_q(d)).str()
              << ", tb_M = " << to_string(*r.tb) << ", rot_M = " << to_string(r.rot->value)
              << ", d3 = " << to_string(*d3_closed_form(d)) << '\n';
  }
}
