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

#include "rskbounds/viennot.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace rskbounds {

namespace {

void require_distinct_coordinates(const PointSet &points) {
    std::set<int> xs;
    std::set<int> ys;
    for (const auto &p : points) {
        if (!xs.insert(p.x).second || !ys.insert(p.y).second) {
            throw std::invalid_argument("build_diagram: points must have distinct x and distinct y coordinates");
        }
    }
}

struct Box {
    int max_x = 0;
    int max_y = 0;
};

Box bounding_box(const JumpLineDiagram &diagram) {
    Box box;
    for (const auto &p : diagram.white_points) {
        box.max_x = std::max(box.max_x, p.x);
        box.max_y = std::max(box.max_y, p.y);
    }
    return box;
}

// Lattice points of a line's staircase, clipped to one unit past the box:
// down from the top edge to the first point, then alternately right and down,
// then right to the edge.
std::vector<Point> staircase(const JumpLine &line, const Box &box) {
    std::vector<Point> path;
    const auto &pts = line.points;
    for (int y = box.max_y + 1; y > pts.front().y; y--) {
        path.push_back({pts.front().x, y});
    }
    for (size_t i = 0; i < pts.size(); i++) {
        int next_x = i + 1 < pts.size() ? pts[i + 1].x : box.max_x + 2;
        for (int x = pts[i].x; x < next_x; x++) {
            path.push_back({x, pts[i].y});
        }
        if (i + 1 < pts.size()) {
            for (int y = pts[i].y; y > pts[i + 1].y; y--) {
                path.push_back({next_x, y});
            }
        }
    }
    return path;
}

}  // namespace

JumpLineDiagram build_diagram(const PointSet &points) {
    require_distinct_coordinates(points);
    JumpLineDiagram out;
    out.white_points = points;
    std::sort(out.white_points.begin(), out.white_points.end(),
              [](const Point &a, const Point &b) { return a.x < b.x; });
    const auto &pts = out.white_points;
    // level[i] = length of the longest up-right chain ending at point i.
    std::vector<size_t> level(pts.size(), 1);
    size_t num_lines = 0;
    for (size_t i = 0; i < pts.size(); i++) {
        for (size_t j = 0; j < i; j++) {
            if (pts[j].y < pts[i].y) {
                level[i] = std::max(level[i], level[j] + 1);
            }
        }
        num_lines = std::max(num_lines, level[i]);
    }
    out.lines.resize(num_lines);
    for (size_t i = 0; i < pts.size(); i++) {
        out.lines[level[i] - 1].points.push_back(pts[i]);
    }
    for (auto &line : out.lines) {
        for (size_t i = 0; i + 1 < line.points.size(); i++) {
            Point corner{line.points[i + 1].x, line.points[i].y};
            line.corners.push_back(corner);
            out.skeleton.push_back(corner);
        }
    }
    std::sort(out.skeleton.begin(), out.skeleton.end(), [](const Point &a, const Point &b) { return a.x < b.x; });
    return out;
}

JumpLineDiagram build_diagram(const Word &w) {
    if (!w.has_distinct_letters()) {
        throw std::invalid_argument("build_diagram: word must have distinct letters; standardize it first");
    }
    PointSet points;
    points.reserve(w.size());
    for (size_t i = 0; i < w.size(); i++) {
        points.push_back({static_cast<int>(i + 1), w[i]});
    }
    return build_diagram(points);
}

Word skeleton_word(const JumpLineDiagram &diagram) {
    std::vector<int> letters;
    int alphabet = 1;
    for (const auto &p : diagram.skeleton) {
        letters.push_back(p.y);
        alphabet = std::max(alphabet, p.y);
    }
    return Word(std::move(letters), alphabet);
}

YoungDiagram iterated_shape(const Word &w) {
    std::vector<int> rows;
    JumpLineDiagram diagram = build_diagram(w);
    while (!diagram.lines.empty()) {
        rows.push_back(static_cast<int>(diagram.lines.size()));
        diagram = build_diagram(diagram.skeleton);
    }
    return YoungDiagram(std::move(rows));
}

bool lines_non_crossing(const JumpLineDiagram &diagram) {
    Box box = bounding_box(diagram);
    std::set<std::pair<int, int>> used;
    for (const auto &line : diagram.lines) {
        if (line.points.empty()) {
            return false;
        }
        for (size_t i = 0; i + 1 < line.points.size(); i++) {
            if (!(line.points[i + 1].x > line.points[i].x && line.points[i + 1].y < line.points[i].y)) {
                return false;
            }
        }
        for (const auto &p : staircase(line, box)) {
            if (!used.insert({p.x, p.y}).second) {
                return false;
            }
        }
    }
    return true;
}

std::string diagram_text(const JumpLineDiagram &diagram) {
    Box box = bounding_box(diagram);
    int width = box.max_x + 2;
    int height = box.max_y + 2;
    std::vector<std::string> grid(static_cast<size_t>(height), std::string(static_cast<size_t>(width), '.'));
    auto cell = [&](int x, int y) -> char & { return grid[static_cast<size_t>(y)][static_cast<size_t>(x)]; };
    static const std::string kLineMarks = "123456789abcdefghijklmnopqrstuvwxyz";
    for (size_t j = 0; j < diagram.lines.size(); j++) {
        char mark = kLineMarks[j % kLineMarks.size()];
        for (const auto &p : staircase(diagram.lines[j], box)) {
            if (p.x < width && p.y < height) {
                cell(p.x, p.y) = mark;
            }
        }
    }
    for (const auto &p : diagram.skeleton) {
        cell(p.x, p.y) = '*';
    }
    for (const auto &p : diagram.white_points) {
        cell(p.x, p.y) = 'o';
    }
    std::string out;
    for (int y = height - 1; y >= 1; y--) {
        out += grid[static_cast<size_t>(y)].substr(1);
        out += '\n';
    }
    return out;
}

std::string diagram_json(const JumpLineDiagram &diagram) {
    auto points_json = [](const std::vector<Point> &points) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &p : points) {
            arr.push_back({p.x, p.y});
        }
        return arr;
    };
    nlohmann::json lines = nlohmann::json::array();
    for (const auto &line : diagram.lines) {
        lines.push_back({{"points", points_json(line.points)}, {"corners", points_json(line.corners)}});
    }
    nlohmann::json out = {
        {"white", points_json(diagram.white_points)},
        {"lines", lines},
        {"skeleton", points_json(diagram.skeleton)},
    };
    return out.dump();
}

}  // namespace rskbounds
