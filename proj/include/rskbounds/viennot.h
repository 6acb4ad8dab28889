// Copyright 2026 The rskbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RSKBOUNDS_VIENNOT_H
#define RSKBOUNDS_VIENNOT_H

#include <string>
#include <vector>

#include "rskbounds/partitions.h"
#include "rskbounds/rsk.h"

// Viennot's shadow-line picture of RSK.
//
// A word with distinct letters becomes the points (i, w_i). A point lies on
// jump line j when the longest chain of points running up and to the right
// that ends at it has length j. Points on one line run down and to the right,
// and the line is the staircase boundary of the union of their northeast
// quadrants. Its northeast corners form the skeleton, which is again a point
// set with distinct coordinates, so the construction can be iterated.
namespace rskbounds {

struct Point {
    int x;
    int y;
    bool operator==(const Point &other) const = default;
};

/// Points with pairwise distinct x and pairwise distinct y coordinates.
using PointSet = std::vector<Point>;

struct JumpLine {
    /// Points on the line, increasing x (so decreasing y).
    std::vector<Point> points;
    /// Northeast corners (x_{i+1}, y_i) between consecutive points.
    std::vector<Point> corners;
};

struct JumpLineDiagram {
    PointSet white_points;
    /// Lines in sweep order: line 1 is the southwest-most.
    std::vector<JumpLine> lines;
    /// All corners, sorted by x.
    PointSet skeleton;
};

/// Throws std::invalid_argument on a repeated x or y coordinate.
JumpLineDiagram build_diagram(const PointSet &points);
/// The diagram of the points (i, w_i). Throws on repeated letters.
JumpLineDiagram build_diagram(const Word &w);

/// Skeleton y values read in increasing x.
Word skeleton_word(const JumpLineDiagram &diagram);

/// Number of jump lines at each skeleton iteration, until the skeleton is empty.
YoungDiagram iterated_shape(const Word &w);

/// True iff the staircase paths of distinct lines share no lattice point and
/// each line's points run strictly down and to the right.
bool lines_non_crossing(const JumpLineDiagram &diagram);

/// Plain-text picture, top row first: 'o' white point, '*' skeleton point,
/// '1'..'9','a'..'z' the path of a jump line, '.' empty.
std::string diagram_text(const JumpLineDiagram &diagram);
/// {"white": [[x,y],...], "lines": [{"points": ..., "corners": ...}], "skeleton": ...}
std::string diagram_json(const JumpLineDiagram &diagram);

}  // namespace rskbounds

#endif
