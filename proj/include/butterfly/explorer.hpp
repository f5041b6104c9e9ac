// Seeded generation of butterfly problems in targeted regimes, batch
// campaigns with classification statistics, and the five published failure
// configurations on the radius-10 circle.
#pragma once

#include "butterfly/engine.hpp"
#include "butterfly/rng.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace butterfly {

enum class GeometryKind { Taxicab, Euclid };

enum class SampleMode {
    Random,                     // four independent boundary samples
    AxisSymmetric,              // C = s(A), M on the axis of s, PQ the s-stable chord
    Center,                     // M is the center: Q is P's antipode
    PaperHypothesisOnlyDiagonal // M on a diagonal axis, PQ an asymmetric family chord
};

struct SampleSpec {
    GeometryKind geometry = GeometryKind::Taxicab;
    SampleMode mode = SampleMode::Random;
    // Reflection parameter for AxisSymmetric (any of the four) and
    // PaperHypothesisOnlyDiagonal (diagonal kinds only).
    SymmetryKind axis = SymmetryKind::ReflectVertical;
    std::uint32_t count = 0;
    std::uint64_t seed = 0;
    // Sampled rationals are k/n with n <= max_denominator; keeps coordinates
    // small enough for fast exact arithmetic and readable reports.
    std::uint32_t max_denominator = 32;
    Point center{0, 0};
    Rational radius{10};
};

/// Throws std::invalid_argument on inconsistent specs (Euclidean geometry
/// only supports Random; the paper-hypothesis mode needs a diagonal axis;
/// max_denominator must be at least 2).
void validate_spec(const SampleSpec& spec);

/// One problem in the spec's regime, drawn from rng. Every returned problem
/// validates cleanly and traces without degeneracy, so campaign verdicts are
/// always defined. Throws std::runtime_error if the rejection loop exhausts
/// its retry cap.
ButterflyProblem generate_problem(const SampleSpec& spec, SplitMix64& rng);

/// The five published failure rows, in table order, on the taxicab circle of
/// radius 10 centered at the origin.
std::vector<ButterflyProblem> table1_corpus();

struct CampaignStats {
    SampleSpec spec; // echoed, seed included
    std::array<std::uint32_t, all_outcomes.size()> counts{};
    std::array<std::vector<ButterflyProblem>, all_outcomes.size()> exemplars;

    std::uint32_t count_for(Outcome o) const {
        return counts[static_cast<std::size_t>(o)];
    }
    const std::vector<ButterflyProblem>& exemplars_for(Outcome o) const {
        return exemplars[static_cast<std::size_t>(o)];
    }
};

/// Generates, traces and classifies spec.count problems. Deterministic for a
/// fixed spec: sample i draws from substream i, and the retained exemplars
/// are the lowest-index samples per category (at most exemplar_cap each).
CampaignStats run_campaign(const SampleSpec& spec, std::size_t exemplar_cap = 10);

} // namespace butterfly
