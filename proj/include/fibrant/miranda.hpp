#pragma once

#include "fibrant/weierstrass.hpp"

#include <string>

namespace fibrant::miranda {

using wnf::DualGraph;
using wnf::KodairaType;

class NotOnList : public Error {
public:
    using Error::Error;
};

// Fiber over a node of the reduced discriminant where two branches meet.
struct MirandaFiber {
    KodairaType first, second;  // ordered as in the table row
    std::string row;            // "I+I", "I+I* even", "I+I* odd", "II+IV", ..., or "I0+X"
    DualGraph graph;
    // Type reported for the collision. For the even I+I* row this is the star
    // type of index M2 + M1/2, which differs from kodaira_label.
    std::string label;
    std::string kodaira_label;  // the Kodaira type the fiber is a contraction of
    std::string contracted;
};

MirandaFiber collide(const KodairaType& k1, const KodairaType& k2);

}  // namespace fibrant::miranda
