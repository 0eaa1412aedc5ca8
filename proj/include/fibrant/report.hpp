#pragma once

#include "fibrant/blowup.hpp"

#include <string>
#include <vector>

namespace fibrant::miranda {

using poly::Rational;

struct ClassificationReport {
    std::optional<Rational> alpha;
    std::string quintic;  // residual discriminant component, as text
    int quintic_degree = 0;
    std::vector<blowup::DivisorRecord> divisors;
    std::vector<blowup::CollisionRecord> collisions;
    std::vector<blowup::CenterRecord> centers;
    std::vector<wnf::TotalSpaceSingularity> total_space_singularities;
    std::vector<std::string> notes;
    int blow_ups = 0;
    // Singular points of the residual component by kind.
    int nodes = 0;
    int cusps = 0;

    // Sorted summary with center names replaced by their kind where those names
    // depend on the parameters. Equal inventories mean structurally equal reports.
    std::vector<std::string> inventory() const;
};

ClassificationReport analyze_fibration(const wnf::WeierstrassFibration& fib,
                                       const blowup::RegularizeOptions& options);

// Rejects non-generic alpha with wnf::GenericityError before any computation.
ClassificationReport analyze_lagrange_family(const Rational& alpha, int budget = blowup::default_budget());

}  // namespace fibrant::miranda
