#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fanoq/reconstruction.hpp"

namespace fanoq {

struct CheckSummary {
    int polygons = 0;
    int checks = 0;
    std::vector<std::string> violations;
    int sl_class_flips = 0;  // reconstructions equivalent only up to reflection

    bool ok() const { return violations.empty(); }
};

// Every structural identity the library promises, run against one polygon:
// volume and balancing identities, block/Hamiltonian structure, degree and
// Markov relations, mutation invariants and the reconstruction round trip.
void check_polygon(const FanoPolygon& polygon, CheckSummary& summary);

// check_polygon over the whole enumeration corpus, plus seeded random
// mutation-closure probes on the corpus quivers.
CheckSummary check_corpus(Int bound, std::uint64_t seed);

}  // namespace fanoq
