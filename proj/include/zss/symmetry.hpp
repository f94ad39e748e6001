#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "zss/matrix.hpp"

namespace zss {

// Spatial transforms that map an n x m grid onto itself. The four in the
// first row are valid for any shape; the rest need rows == cols.
enum class Spatial : std::uint8_t {
    identity, rot180, flip_horizontal, flip_vertical,
    rot90, rot270, transpose, anti_transpose,
};

inline const char* to_string(Spatial s) {
    switch (s) {
        case Spatial::identity: return "identity";
        case Spatial::rot180: return "rot180";
        case Spatial::flip_horizontal: return "flip-horizontal";
        case Spatial::flip_vertical: return "flip-vertical";
        case Spatial::rot90: return "rot90";
        case Spatial::rot270: return "rot270";
        case Spatial::transpose: return "transpose";
        case Spatial::anti_transpose: return "anti-transpose";
    }
    return "?";
}

inline bool spatial_valid_for(Spatial s, int rows, int cols) {
    switch (s) {
        case Spatial::identity:
        case Spatial::rot180:
        case Spatial::flip_horizontal:
        case Spatial::flip_vertical:
            return true;
        default:
            return rows == cols;
    }
}

// One symmetry: a spatial transform optionally composed with entrywise negation.
struct SymmetryElement {
    Spatial spatial = Spatial::identity;
    bool negate = false;

    friend bool operator==(const SymmetryElement&, const SymmetryElement&) = default;
};

// The full group for the shape: 16 elements for squares, 8 otherwise.
// Deterministic order: spatial transforms in enum order, plain before negated.
inline std::vector<SymmetryElement> symmetry_group(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("symmetry_group: shape must be >= 1x1");
    const Spatial all[] = {Spatial::identity,  Spatial::rot180, Spatial::flip_horizontal,
                           Spatial::flip_vertical, Spatial::rot90, Spatial::rot270,
                           Spatial::transpose, Spatial::anti_transpose};
    std::vector<SymmetryElement> g;
    for (Spatial s : all) {
        if (!spatial_valid_for(s, rows, cols)) continue;
        g.push_back({s, false});
        g.push_back({s, true});
    }
    return g;
}

inline BinaryMatrix apply(const SymmetryElement& g, const BinaryMatrix& m) {
    if (!spatial_valid_for(g.spatial, m.rows(), m.cols()))
        throw std::invalid_argument("apply: transform needs a square matrix");
    BinaryMatrix r = m;
    switch (g.spatial) {
        case Spatial::identity: break;
        case Spatial::rot180: r = rotated180(m); break;
        case Spatial::flip_horizontal: r = reflected_horizontal(m); break;
        case Spatial::flip_vertical: r = reflected_vertical(m); break;
        case Spatial::rot90: r = rotated90cw(m); break;
        case Spatial::rot270: r = rotated90ccw(m); break;
        case Spatial::transpose: r = transposed(m); break;
        case Spatial::anti_transpose: r = anti_transposed(m); break;
    }
    return g.negate ? negated(r) : r;
}

// Lexicographically smallest image over the full group for the shape.
// Idempotent and constant on orbits.
inline BinaryMatrix canonical_form(const BinaryMatrix& m) {
    BinaryMatrix best = m;
    for (const SymmetryElement& g : symmetry_group(m.rows(), m.cols())) {
        BinaryMatrix img = apply(g, m);
        if (img < best) best = std::move(img);
    }
    return best;
}

// One representative (the canonical form) per orbit, sorted lexicographically.
inline std::vector<BinaryMatrix> dedup(const std::vector<BinaryMatrix>& ms) {
    if (ms.empty()) return {};
    const int rows = ms.front().rows();
    const int cols = ms.front().cols();
    std::set<BinaryMatrix> reps;
    for (const BinaryMatrix& m : ms) {
        if (m.rows() != rows || m.cols() != cols)
            throw std::invalid_argument("dedup: mixed shapes");
        reps.insert(canonical_form(m));
    }
    return {reps.begin(), reps.end()};
}

}  // namespace zss
