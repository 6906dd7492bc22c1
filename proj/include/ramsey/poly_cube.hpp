#pragma once

#include "ramsey/bigint.hpp"
#include "ramsey/hales_jewett.hpp"
#include "ramsey/seqsets.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

namespace ramsey {

// Shape of the cube Q(N) = [q]^N x [q]^(N^2) x ... x [q]^(N^d). Points are
// stored as one flat coordinate vector, level 1 first; within a level the
// index tuple (i_1..i_j) is row-major with i_1 most significant.
struct PhjShape {
    int q = 0, N = 0, d = 0;
    std::vector<std::uint64_t> level_size;    // N^j for j = 1..d
    std::vector<std::uint64_t> level_offset;  // start of level j in the flat vector
    std::uint64_t total_coords = 0;

    PhjShape() = default;
    PhjShape(int q, int N, int d);

    // q^total_coords; throws ResourceCapExceeded past the cap.
    std::uint64_t point_count(std::uint64_t cap) const;
};

// Point of Q(N): flat coordinates, values in [1..q].
struct PhjPoint {
    std::vector<std::uint8_t> coords;
};

// Nonempty subset of [N], sorted ascending, 1-based.
using VarSet = std::vector<int>;

// Flat ranks governed by gamma^j at every level, precomputed once per
// (shape, gamma) pair.
struct GammaIndex {
    std::vector<std::vector<std::uint64_t>> level_ranks;  // offsets into the flat vector
    GammaIndex(const PhjShape& shape, const VarSet& gamma);
};

// b = a with all gamma^j-indexed coordinates of level j set to xs[j-1].
PhjPoint phj_oplus(const PhjShape& shape, const PhjPoint& a, const VarSet& gamma,
                   const std::vector<int>& xs);
void phj_oplus_into(const PhjShape& shape, const PhjPoint& a, const GammaIndex& gi,
                    const std::vector<int>& xs, PhjPoint& out);

// Multilinear monomials of the generators, per level:
// mono[j-1][rank(i_1..i_j)] = x_{i_1} * ... * x_{i_j}.
struct MonomialTable {
    std::vector<BigInt> flat;  // aligned with the flat coordinate vector
    MonomialTable(const PhjShape& shape, const GenSeq& xs);
};

// The multilinear embedding of a point: sum over all coordinates of
// coord value times the coordinate's generator monomial.
BigInt embed_point(const PhjShape& shape, const PhjPoint& a, const MonomialTable& table);

// Same sum with every gamma-governed coordinate masked to zero.
BigInt embed_point_masked(const PhjShape& shape, const PhjPoint& a, const GammaIndex& gi,
                          const MonomialTable& table);

struct EmbeddedPattern {
    BigInt base;   // masked embedding of a
    BigInt value;  // embedding of a (+) c_1 gamma (+) ... (+) c_d gamma^d
};

// value = base + sum_j c_j * s^j with s the gamma-subset sum of the
// generators; both sides are computed independently by the caller's tests.
EmbeddedPattern embedded_pattern(const PhjShape& shape, const PhjPoint& a, const VarSet& gamma,
                                 const GenSeq& xs, const std::vector<BigInt>& coeffs);

struct PhjWitness {
    PhjPoint a;
    VarSet gamma;
};

struct PhjInstance {
    PhjShape shape;
    CubePointColoring coloring;
};

// First (gamma, a) pair in canonical order (gamma by size then lex, a lex)
// whose pattern {a (+) x_1 gamma (+) ... (+) x_d gamma^d : 1 <= x_i <= q}
// is monochromatic.
std::optional<PhjWitness> phj_search(const PhjInstance& inst, const SearchCaps& caps = {},
                                     int workers = 0);

// Cube coloring file: header `hj t N r` or `phj q N d r`, then colors in
// row-major canonical point order or a `rule:` line.
using CubeFile = std::variant<HjInstance, PhjInstance>;
CubeFile parse_cube_coloring(std::istream& in, const SearchCaps& caps = {});

std::uint64_t phj_point_rank(const PhjShape& shape, const PhjPoint& a);
PhjPoint phj_point_from_rank(const PhjShape& shape, std::uint64_t rank);
std::vector<VarSet> all_varsets(int N);  // ordered by size, then lex

}  // namespace ramsey
