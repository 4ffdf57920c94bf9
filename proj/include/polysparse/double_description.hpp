#pragma once

#include "polysparse/rational.hpp"

#include <vector>

namespace polysparse {

/// Generators of a polyhedral cone: lineality basis plus extreme rays (mod lineality).
struct ConeGenerators {
    std::vector<QVector> lineality;
    std::vector<QVector> rays;
};

/**
 * Double description method for {z in R^dim : h . z <= 0 for every h}.
 *
 * Constraints are inserted one at a time in the given order starting from the
 * whole space. New rays come from adjacent pairs of opposite sign, with adjacency
 * decided combinatorially on zero sets. Every generator is scaled to a primitive
 * integer vector.
 */
ConeGenerators cone_generators(const std::vector<QVector>& constraints, std::size_t dim);

} // namespace polysparse
