#pragma once

#include <string>
#include <vector>

#include "tiling/complex.hpp"
#include "tiling/finfield.hpp"
#include "tiling/grope.hpp"
#include "tiling/trimat.hpp"

// Builders for the shipped corpus under fixtures/. The JSON files are
// generated from these (`tilingproof export-fixtures`) and the tests check
// that the two stay in sync.
namespace tiling::fixtures {

std::string path(const std::string &relative);

// Bijective labels with p(zero_edge) = 1 and l(marked) = 1; the other edges,
// then the vertices, take points in order; the other faces, then the edges,
// take lines in order.
Labeling canonical_labeling(const DeltaComplex &K, int marked, int zero_edge);

IncidenceMatrix q_points(int q);
IncidenceMatrix warmup();
IncidenceMatrix fano();
IncidenceMatrix incidence_axiom(); // the 3x3 M'
IncidenceMatrix hexagon6();        // impossible 6-gon: P1..P6, D, E
IncidenceMatrix hexagon6_aux();    // plus C, A, B and the line DE
IncidenceMatrix pappus9x9();

Configuration fano_plane();   // Fano configuration for fano() over GF(2)
Configuration hexagon6_f3();  // the GF(3) counterexample for hexagon6()

std::vector<AuxKind> pappus_aux_steps(); // 9x9 -> 16x10

MarkedComplex one_line_sphere();
MarkedComplex pappus_torus();          // Case 1 labels
MarkedComplex pappus_torus_case2();    // Case 2 labels, target (14, 8)
MarkedComplex pappus_torus_bijective();
Grope ninegon_grope_shape();
MarkedComplex ninegon_grope();
Grope two_stage_grope_shape();
MarkedComplex two_stage_grope();
MarkedComplex non_grope();
MarkedComplex unreal_hexagon(); // labels refer to hexagon6_aux()

} // namespace tiling::fixtures
