#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace subdiff {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct Edge {
    int a = -1;                    // vertex indices, a < b
    int b = -1;
    std::array<int, 2> tri{-1, -1};  // adjacent triangles; tri[1] == -1 on the boundary
    Vec2 normal;                     // unit normal: lower -> higher adjacent triangle, outward on the boundary
    bool boundary = false;
};

/// Uniform right-triangle triangulation of the unit square with M subdivisions
/// per side. Every cell is split along its lower-left -> upper-right diagonal,
/// so a mesh of parameter 2M contains every vertex of the parameter-M mesh.
struct Mesh {
    int subdivisions = 0;  // M
    int level = 0;         // refinement level relative to the mesh it was refined from
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> triangles;       // counterclockwise vertex triples
    std::vector<std::array<int, 3>> triangle_edges;  // edge k is opposite local vertex k
    std::vector<Edge> edges;
    std::vector<std::uint8_t> vertex_on_boundary;
    std::vector<int> parent_triangle;  // set by refine(): coarse parent of each triangle

    double h() const { return 1.0 / subdivisions; }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    std::array<Vec2, 3> triangle_points(int t) const {
        const auto& tri = triangles[t];
        return {vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]};
    }
    double signed_area(int t) const {
        auto p = triangle_points(t);
        return 0.5 * cross(p[1] - p[0], p[2] - p[0]);
    }
};

Mesh build_uniform_mesh(int subdivisions);

/// Uniform refinement: parameter 2M, same diagonal convention, level+1.
/// parent_triangle maps every fine triangle to the coarse triangle containing it.
Mesh refine(const Mesh& mesh);

/// Symmetric quadrature rule on the reference triangle, barycentric points,
/// weights summing to 1 (scale by the physical triangle area on use).
struct QuadratureRule {
    std::vector<std::array<double, 3>> points;
    std::vector<double> weights;
    int degree = 0;  // highest polynomial degree integrated exactly
};

/// Positive-weight rule exact to at least the requested degree (1..6).
QuadratureRule quadrature(int degree);

struct PointLocation {
    int triangle = -1;
    std::array<double, 3> bary{};  // barycentric coordinates in that triangle
};

/// Containing triangle of a point in the closed unit square, by direct index
/// arithmetic. Points on shared edges or vertices resolve to the incident
/// triangle with the lowest index.
PointLocation locate(const Mesh& mesh, Vec2 p);

/// Locate `p` and evaluate per-triangle affine data (a + b*x + c*y per triangle).
double locate_and_evaluate(const Mesh& mesh, Vec2 p,
                           std::span<const std::array<double, 3>> affine);

/// Plain-text dump: "M <int>", then "v x y", "t i j k",
/// "e a b tri1 tri2|-1 boundary01" lines.
void write_mesh(std::ostream& os, const Mesh& mesh);

}  // namespace subdiff
