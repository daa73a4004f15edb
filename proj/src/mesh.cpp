#include "subdiff/mesh.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace subdiff {

namespace {

int vertex_id(int m, int i, int j) { return j * (m + 1) + i; }
int lower_tri(int m, int i, int j) { return 2 * (j * m + i); }
int upper_tri(int m, int i, int j) { return 2 * (j * m + i) + 1; }

// Edge numbering: horizontal block, then vertical, then diagonal.
int horizontal_edge(int m, int i, int j) { return j * m + i; }
int vertical_edge(int m, int i, int j) { return m * (m + 1) + j * (m + 1) + i; }
int diagonal_edge(int m, int i, int j) { return 2 * m * (m + 1) + j * m + i; }

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

Mesh build_uniform_mesh(int subdivisions) {
    if (subdivisions < 1) {
        throw std::invalid_argument("mesh subdivisions must be a positive integer");
    }
    const int m = subdivisions;
    Mesh mesh;
    mesh.subdivisions = m;

    mesh.vertices.reserve((m + 1) * (m + 1));
    mesh.vertex_on_boundary.assign((m + 1) * (m + 1), 0);
    for (int j = 0; j <= m; ++j) {
        for (int i = 0; i <= m; ++i) {
            mesh.vertices.push_back({static_cast<double>(i) / m, static_cast<double>(j) / m});
            if (i == 0 || j == 0 || i == m || j == m) {
                mesh.vertex_on_boundary[vertex_id(m, i, j)] = 1;
            }
        }
    }

    mesh.triangles.reserve(2 * m * m);
    mesh.triangle_edges.reserve(2 * m * m);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            const int v00 = vertex_id(m, i, j);
            const int v10 = vertex_id(m, i + 1, j);
            const int v01 = vertex_id(m, i, j + 1);
            const int v11 = vertex_id(m, i + 1, j + 1);
            // Lower triangle, then upper; edge k opposite local vertex k.
            mesh.triangles.push_back({v00, v10, v11});
            mesh.triangle_edges.push_back({vertical_edge(m, i + 1, j), diagonal_edge(m, i, j),
                                           horizontal_edge(m, i, j)});
            mesh.triangles.push_back({v00, v11, v01});
            mesh.triangle_edges.push_back({horizontal_edge(m, i, j + 1), vertical_edge(m, i, j),
                                           diagonal_edge(m, i, j)});
        }
    }

    mesh.edges.assign(3 * m * m + 2 * m, Edge{});
    for (int j = 0; j <= m; ++j) {
        for (int i = 0; i < m; ++i) {
            Edge& e = mesh.edges[horizontal_edge(m, i, j)];
            e.a = vertex_id(m, i, j);
            e.b = vertex_id(m, i + 1, j);
            const int below = (j > 0) ? upper_tri(m, i, j - 1) : -1;
            const int above = (j < m) ? lower_tri(m, i, j) : -1;
            if (below >= 0 && above >= 0) {
                e.tri = {below, above};  // below has the lower index
                e.normal = {0.0, 1.0};
            } else if (above >= 0) {
                e.tri = {above, -1};
                e.boundary = true;
                e.normal = {0.0, -1.0};
            } else {
                e.tri = {below, -1};
                e.boundary = true;
                e.normal = {0.0, 1.0};
            }
        }
    }
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i <= m; ++i) {
            Edge& e = mesh.edges[vertical_edge(m, i, j)];
            e.a = vertex_id(m, i, j);
            e.b = vertex_id(m, i, j + 1);
            const int left = (i > 0) ? lower_tri(m, i - 1, j) : -1;
            const int right = (i < m) ? upper_tri(m, i, j) : -1;
            if (left >= 0 && right >= 0) {
                e.tri = {left, right};
                e.normal = {1.0, 0.0};
            } else if (right >= 0) {
                e.tri = {right, -1};
                e.boundary = true;
                e.normal = {-1.0, 0.0};
            } else {
                e.tri = {left, -1};
                e.boundary = true;
                e.normal = {1.0, 0.0};
            }
        }
    }
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            Edge& e = mesh.edges[diagonal_edge(m, i, j)];
            e.a = vertex_id(m, i, j);
            e.b = vertex_id(m, i + 1, j + 1);
            e.tri = {lower_tri(m, i, j), upper_tri(m, i, j)};
            e.normal = {-kInvSqrt2, kInvSqrt2};
        }
    }
    return mesh;
}

Mesh refine(const Mesh& mesh) {
    const int m = mesh.subdivisions;
    Mesh fine = build_uniform_mesh(2 * m);
    fine.level = mesh.level + 1;
    fine.parent_triangle.resize(fine.triangle_count());
    for (int j = 0; j < 2 * m; ++j) {
        for (int i = 0; i < 2 * m; ++i) {
            const int coarse_lower = lower_tri(m, i / 2, j / 2);
            const int di = i & 1;
            const int dj = j & 1;
            // The fine diagonal is parallel to the coarse one, so each quarter
            // cell lands entirely in one coarse triangle except the two
            // diagonal quarters, which split compatibly.
            fine.parent_triangle[lower_tri(2 * m, i, j)] =
                (dj > di) ? coarse_lower + 1 : coarse_lower;
            fine.parent_triangle[upper_tri(2 * m, i, j)] =
                (di > dj) ? coarse_lower : coarse_lower + 1;
        }
    }
    return fine;
}

QuadratureRule quadrature(int degree) {
    QuadratureRule rule;
    switch (degree) {
        case 1:
            rule.points = {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}};
            rule.weights = {1.0};
            rule.degree = 1;
            break;
        case 2:
            rule.points = {{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}};
            rule.weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
            rule.degree = 2;
            break;
        case 3:
        case 4: {
            // Six-point rule, exact to degree 4; used for degree-3 requests as
            // well since the classical 4-point rule has a negative weight.
            const double a1 = 0.816847572980459, b1 = 0.091576213509771;
            const double a2 = 0.108103018168070, b2 = 0.445948490915965;
            const double w1 = 0.109951743655322, w2 = 0.223381589678011;
            rule.points = {{a1, b1, b1}, {b1, a1, b1}, {b1, b1, a1},
                           {a2, b2, b2}, {b2, a2, b2}, {b2, b2, a2}};
            rule.weights = {w1, w1, w1, w2, w2, w2};
            rule.degree = 4;
            break;
        }
        case 5: {
            const double a1 = 0.797426985353087, b1 = 0.101286507323456;
            const double a2 = 0.059715871789770, b2 = 0.470142064105115;
            const double w1 = 0.125939180544827, w2 = 0.132394152788506;
            rule.points = {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
                           {a1, b1, b1}, {b1, a1, b1}, {b1, b1, a1},
                           {a2, b2, b2}, {b2, a2, b2}, {b2, b2, a2}};
            rule.weights = {0.225, w1, w1, w1, w2, w2, w2};
            rule.degree = 5;
            break;
        }
        case 6: {
            const double a1 = 0.873821971016996, b1 = 0.063089014491502;
            const double a2 = 0.501426509658179, b2 = 0.249286745170910;
            const double a3 = 0.636502499121399, b3 = 0.310352451033785;
            const double c3 = 0.053145049844816;
            const double w1 = 0.050844906370207, w2 = 0.116786275726379;
            const double w3 = 0.082851075618374;
            rule.points = {{a1, b1, b1}, {b1, a1, b1}, {b1, b1, a1},
                           {a2, b2, b2}, {b2, a2, b2}, {b2, b2, a2},
                           {a3, b3, c3}, {a3, c3, b3}, {b3, a3, c3},
                           {b3, c3, a3}, {c3, a3, b3}, {c3, b3, a3}};
            rule.weights = {w1, w1, w1, w2, w2, w2, w3, w3, w3, w3, w3, w3};
            rule.degree = 6;
            break;
        }
        default:
            throw std::invalid_argument("quadrature degree must lie in 1..6");
    }
    return rule;
}

PointLocation locate(const Mesh& mesh, Vec2 p) {
    const int m = mesh.subdivisions;
    constexpr double tol = 1e-12;
    if (p.x < -tol || p.x > 1.0 + tol || p.y < -tol || p.y > 1.0 + tol) {
        throw std::invalid_argument("point lies outside the closed unit square");
    }
    const double s = p.x * m;
    const double t = p.y * m;

    auto candidates = [m](double v) {
        const int base = std::min(std::max(static_cast<int>(std::floor(v)), 0), m - 1);
        std::array<int, 2> c{base, -1};
        // On (or within rounding of) a grid line the neighboring cell also
        // contains the point; include it so the lowest-index rule can apply.
        if (base >= 1 && std::abs(v - base) <= tol) c[1] = base - 1;
        return c;
    };
    const auto ci = candidates(s);
    const auto cj = candidates(t);

    int best = -1;
    double best_xi = 0.0, best_eta = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const int i = ci[a];
            const int j = cj[b];
            if (i < 0 || j < 0) continue;
            const double xi = s - i;
            const double eta = t - j;
            if (xi < -tol || xi > 1.0 + tol || eta < -tol || eta > 1.0 + tol) continue;
            if (xi >= eta - tol) {  // lower triangle
                const int tri = lower_tri(m, i, j);
                if (best < 0 || tri < best) {
                    best = tri;
                    best_xi = xi;
                    best_eta = eta;
                }
            }
            if (xi <= eta + tol) {  // upper triangle
                const int tri = upper_tri(m, i, j);
                if (best < 0 || tri < best) {
                    best = tri;
                    best_xi = xi;
                    best_eta = eta;
                }
            }
        }
    }

    PointLocation loc;
    loc.triangle = best;
    if (best % 2 == 0) {
        loc.bary = {1.0 - best_xi, best_xi - best_eta, best_eta};
    } else {
        loc.bary = {1.0 - best_eta, best_xi, best_eta - best_xi};
    }
    return loc;
}

double locate_and_evaluate(const Mesh& mesh, Vec2 p,
                           std::span<const std::array<double, 3>> affine) {
    const PointLocation loc = locate(mesh, p);
    const auto& c = affine[loc.triangle];
    return c[0] + c[1] * p.x + c[2] * p.y;
}

void write_mesh(std::ostream& os, const Mesh& mesh) {
    os << "M " << mesh.subdivisions << "\n";
    os.precision(17);
    for (const auto& v : mesh.vertices) {
        os << "v " << v.x << " " << v.y << "\n";
    }
    for (const auto& t : mesh.triangles) {
        os << "t " << t[0] << " " << t[1] << " " << t[2] << "\n";
    }
    for (const auto& e : mesh.edges) {
        os << "e " << e.a << " " << e.b << " " << e.tri[0] << " " << e.tri[1] << " "
           << (e.boundary ? 1 : 0) << "\n";
    }
}

}  // namespace subdiff
