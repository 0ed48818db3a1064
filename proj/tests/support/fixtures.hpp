#pragma once

#include <array>
#include <vector>

#include "braidsong/geometry.hpp"
#include "braidsong/skeleton.hpp"

namespace braidsong::fixtures {

// Quaternary conducting pattern on the 4-arrow cycle B1->B2->B3->B4->B1.
// The planar shape overlaps itself three times; small z-lifts put the later
// passage of the tour on top at every overlap, so the closed curve is
// ascending and therefore unknotted.
Gesture conducting();

// The three vertex positions shared by the cyclic 3-vertex bodies below
// (on the radius-3 circle, computed once from the torus-curve formula).
std::array<Point3, 3> cyclic3_vertices();

// (2,3) torus curve (2+cos 3s)(cos 2s, sin 2s), sin 3s split into three
// arcs over the cyclic 3-vertex skeleton; closes to a trefoil.
// mirrored negates z. Each arc carries segments_per_arc+1 samples. The
// curve crosses itself at arc fractions 1/4 and 3/4, so segments_per_arc
// must not be divisible by 4: a crossing falling exactly on a sample makes
// the straight-down projection non-generic.
Gesture trefoil(bool mirrored = false, int segments_per_arc = 159);

// Planar radius-3 circle traversed clockwise over the same skeleton with
// the same sample counts; closes to a round unknot.
Gesture round_unknot(int segments_per_arc = 159);

// Two disjoint circles through each other's span, generically projectable
// with two crossings: linking number +-1 (the two linked "hands").
std::vector<SampledCurve> linked_rings(int samples = 96);

// Coplanar version of the two rings whose straight-down projection is
// degenerate (the second ring flattens onto a segment); exercises the
// seeded-rotation retry path.
std::vector<SampledCurve> flat_linked_rings(int samples = 96);

// n straight strands from y=0 to y=1 at x = 0..n-1, z = 0.
std::vector<SampledCurve> parallel_strands(int n, int samples = 65);

// Closes two braided strands into closed curves with rectangular return
// arcs routed left of the braid region, one nesting lane per strand.
// Valid for braids whose permutation is the identity (each strand ends
// above its own start); other words would route an arc through a lane
// already in use.
std::vector<SampledCurve> close_two_strands(
    const std::vector<SampledCurve>& strands);

// Single-arrow gesture p -> q realized as a straight segment.
Gesture segment_gesture(const Point3& from, const Point3& to,
                        int samples = 9);

}  // namespace braidsong::fixtures
