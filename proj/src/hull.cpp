#include "tri/hull.hpp"

#include <algorithm>
#include <map>

namespace tri {

HullLoop HullLoop::from_cycle(std::vector<PointId> ccw) {
    if (ccw.size() < 3) {
        throw MalformedBoundary("hull loop needs at least 3 vertices");
    }
    auto smallest = std::min_element(ccw.begin(), ccw.end());
    std::rotate(ccw.begin(), smallest, ccw.end());
    HullLoop loop;
    loop.order_ = std::move(ccw);
    for (std::size_t i = 0; i < loop.order_.size(); ++i) {
        if (!loop.pos_.emplace(loop.order_[i], i).second) {
            throw MalformedBoundary("hull loop visits a vertex twice");
        }
    }
    return loop;
}

PointId HullLoop::at(std::ptrdiff_t k) const {
    std::ptrdiff_t n = static_cast<std::ptrdiff_t>(order_.size());
    return order_[static_cast<std::size_t>(((k % n) + n) % n)];
}

PointId HullLoop::successor(PointId x) const {
    auto it = pos_.find(x);
    if (it == pos_.end()) {
        throw MalformedBoundary("vertex not on the hull loop");
    }
    return at(static_cast<std::ptrdiff_t>(it->second) + 1);
}

HullLoop build_hull_loop(const Triangulation& t) {
    const PointTable& table = t.table();
    // Direct each boundary edge so the opposite vertex of its unique triangle
    // is on the left; then the interior is on the left throughout the loop.
    std::map<PointId, PointId> next;
    std::size_t boundary_count = 0;
    for (const Edge& e : t.boundary_edges()) {
        ++boundary_count;
        PointId c = 0;
        for (const OrientedTriangle& tr : t.triangles()) {
            if (tr.has_vertex(e.a) && tr.has_vertex(e.b)) {
                for (Idx3 i : {Idx3(0), Idx3(1), Idx3(2)}) {
                    if (tr.vertex(i) != e.a && tr.vertex(i) != e.b) {
                        c = tr.vertex(i);
                    }
                }
                break;
            }
        }
        Orientation o = orient(table[e.a], table[e.b], table[c]);
        if (o == Orientation::Collinear) {
            throw MalformedBoundary("degenerate boundary triangle");
        }
        PointId from = o == Orientation::CounterClockwise ? e.a : e.b;
        PointId to = o == Orientation::CounterClockwise ? e.b : e.a;
        if (!next.emplace(from, to).second) {
            throw MalformedBoundary("two boundary edges leave one vertex");
        }
    }
    if (boundary_count < 3) {
        throw MalformedBoundary("fewer than 3 boundary edges");
    }
    // Chain into a single cycle covering all boundary vertices.
    std::vector<PointId> cycle;
    cycle.reserve(boundary_count);
    PointId start = next.begin()->first;
    PointId cur = start;
    do {
        cycle.push_back(cur);
        auto it = next.find(cur);
        if (it == next.end()) {
            throw MalformedBoundary("boundary chain breaks off");
        }
        cur = it->second;
    } while (cur != start && cycle.size() <= boundary_count);
    if (cycle.size() != boundary_count) {
        throw MalformedBoundary("boundary edges form more than one cycle");
    }
    HullLoop loop = HullLoop::from_cycle(std::move(cycle));
    // All other points strictly left of every hull edge.
    for (std::size_t k = 0; k < loop.size(); ++k) {
        PointId x = loop.at(static_cast<std::ptrdiff_t>(k));
        PointId fx = loop.at(static_cast<std::ptrdiff_t>(k) + 1);
        for (PointId p = 0; p < table.size(); ++p) {
            if (p == x || p == fx) continue;
            if (orient(table[x], table[fx], table[p]) !=
                Orientation::CounterClockwise) {
                throw MalformedBoundary(
                    "point " + std::to_string(p) +
                    " not strictly left of boundary edge [" +
                    std::to_string(x) + "," + std::to_string(fx) + "]");
            }
        }
    }
    return loop;
}

std::vector<EdgeColor> classify_hull_edges(const HullLoop& loop,
                                           const Triangulation& t,
                                           const Point& d) {
    if (t.find_containing(d)) {
        throw InsidePoint("query point lies inside the triangulation");
    }
    std::vector<EdgeColor> colors;
    colors.reserve(loop.size());
    for (std::size_t k = 0; k < loop.size(); ++k) {
        Edge e(loop.at(static_cast<std::ptrdiff_t>(k)),
               loop.at(static_cast<std::ptrdiff_t>(k) + 1));
        colors.push_back(t.edge_is_red(e, d) ? EdgeColor::Red
                                             : EdgeColor::Blue);
    }
    return colors;
}

PurpleReport purple_points(const HullLoop& loop, const Triangulation& t,
                           const Point& d) {
    std::vector<EdgeColor> colors = classify_hull_edges(loop, t, d);
    const std::size_t n = colors.size();
    std::size_t red_count = 0;
    std::size_t changes = 0;
    std::size_t run_start = n;  // position k with colors[k-1] blue, colors[k] red
    for (std::size_t k = 0; k < n; ++k) {
        if (colors[k] == EdgeColor::Red) ++red_count;
        if (colors[k] != colors[(k + n - 1) % n]) {
            ++changes;
            if (colors[k] == EdgeColor::Red) run_start = k;
        }
    }
    if (red_count == 0 || changes != 2) {
        throw ContiguityViolation(
            "red boundary edges do not form one nonempty contiguous arc");
    }
    PurpleReport report;
    report.p1 = loop.at(static_cast<std::ptrdiff_t>(run_start));
    report.run_length = red_count;
    report.p2 = loop.at(static_cast<std::ptrdiff_t>(run_start + red_count));
    return report;
}

HullLoop hull_oracle(const PointTable& table) {
    if (table.size() < 3) throw DegenerateInput("hull of fewer than 3 points");
    // Gift wrapping from the lexicographically smallest point.
    PointId start = 0;
    for (PointId p = 1; p < table.size(); ++p) {
        if (table[p].x < table[start].x ||
            (table[p].x == table[start].x && table[p].y < table[start].y)) {
            start = p;
        }
    }
    std::vector<PointId> cycle;
    PointId cur = start;
    do {
        cycle.push_back(cur);
        PointId candidate = cur == 0 ? 1 : 0;
        for (PointId p = 0; p < table.size(); ++p) {
            if (p == cur || p == candidate) continue;
            Orientation o = orient(table[cur], table[candidate], table[p]);
            if (o == Orientation::Collinear) {
                throw DegenerateInput("collinear points in hull construction");
            }
            if (o == Orientation::Clockwise) candidate = p;
        }
        cur = candidate;
        if (cycle.size() > table.size()) {
            throw DegenerateInput("gift wrapping failed to close the hull");
        }
    } while (cur != start);
    return HullLoop::from_cycle(std::move(cycle));
}

}  // namespace tri
