#pragma once

#include <optional>
#include <string>

#include "qorb/invariants.hpp"
#include "qorb/qrat.hpp"

namespace qorb {

// Relative orbital integrals for the diagonal GL2 acting on a pair
// (gamma_1, gamma_2), against the unit of the spherical algebra. The value
// is the size of the intersection of the two fixed-point sets on the tree,
// configured by invariant-level data.

enum class RelativeCase { A, B, C, D, E, F, G, H };

std::string to_string(RelativeCase c);

// How the two hyperbolic apartments relate when both factors are split.
enum class CoreRelation { Generic, EqualApartments, SharedRay };

struct RelativeConfig {
    GammaInvariants inv1, inv2;
    // Distance between the fixed-set cores (apartments or ball centers).
    // Parity discipline: integer for vertex-vertex, half-integer when
    // exactly one core is a midpoint.
    HalfInt delta;
    // Case B only: number of shared apartment vertices.
    std::optional<long> overlap_r;
    CoreRelation core = CoreRelation::Generic;
};

struct RelativeResult {
    bool divergent = false;
    QRat value;  // meaningful iff not divergent
};

RelativeCase detect_case(const RelativeConfig& config);

RelativeResult relative_orbital(const RelativeConfig& config);

}  // namespace qorb
