#pragma once

#include "fibrant/report.hpp"
#include "fibrant/sl2z.hpp"

#include <map>
#include <string>
#include <vector>

namespace fibrant::monodromy {

struct Relation {
    enum class Kind { Node, Cusp };
    Kind kind = Kind::Node;
    std::string first, second;  // generator names
    // "g1 g3 = g3 g1" or "g1 g2 g1 = g2 g1 g2"
    std::string text() const;
};

// Local relations of the complement of the residual discriminant component, with
// one generator per sheet of the projection and one relation per node or cusp.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relation> relations;
    std::string base_point;
    std::map<std::string, SL2ZMatrix> assignment;

    int count(Relation::Kind k) const;
    // Throws if a relation names an unknown generator.
    void validate() const;
    // Every assigned matrix is conjugate to T and every relation holds.
    bool assignment_satisfies(long bound = 25) const;
};

// Generators g1..gd for the degree d of the residual component. Cusp relations join
// neighbours (g_i, g_{i+1}); node relations join (g_i, g_{i+2}). The assignment
// alternates T and [[1,0],[-1,1]], so cusps see distinct matrices and nodes equal ones.
Presentation build_presentation(const miranda::ClassificationReport& report);

struct NormalFormCertificate {
    long bound = 0;
    std::vector<SL2ZMatrix> node_solutions;
    std::vector<SL2ZMatrix> cusp_solutions;  // B != T
    std::vector<SL2ZMatrix> normal_forms;    // distinct normal forms of cusp_solutions
};

NormalFormCertificate certify_monodromy(long bound);

}  // namespace fibrant::monodromy
