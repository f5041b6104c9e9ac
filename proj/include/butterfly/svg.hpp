// Deterministic SVG rendering of butterfly configurations. Identical input
// produces byte-identical output, so figures are golden-testable.
#pragma once

#include "butterfly/engine.hpp"

#include <string>

namespace butterfly {

struct RenderOptions {
    int size_px = 640; // width and height attributes of the document
};

/// Fixed 4-decimal rendering with round-half-even ties; used for every
/// geometric attribute in the SVG.
std::string decimal4(const Rational& r);

/// SVG 1.1 document: frame, circle outline (diamond polygon or circle
/// element), chords AB/CD, dashed wings AD/CB, emphasized chord PQ, labeled
/// markers P,Q,A,B,C,D,M plus X,Y and a distinct midXY marker when the trace
/// exists and midXY != M. The view box is a square of side 2.4 * radius
/// centered on the circle, y-axis flipped; every marker carries exact
/// rational coordinates as data attributes. Throws std::invalid_argument on
/// an invalid problem.
std::string render_svg(const ButterflyProblem& problem, const TraceResult& trace,
                       const RenderOptions& options = {});

} // namespace butterfly
