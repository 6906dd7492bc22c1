#include "ramsey/poly_cube.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <atomic>
#include <istream>
#include <sstream>

namespace ramsey {

PhjShape::PhjShape(int q, int N, int d) : q(q), N(N), d(d) {
    if (q < 1 || N < 1 || d < 1) throw std::invalid_argument("PhjShape: need q, N, d >= 1");
    std::uint64_t size = 1;
    for (int j = 1; j <= d; ++j) {
        if (size > (std::uint64_t(1) << 40) / std::uint64_t(N))
            throw ResourceCapExceeded("PhjShape: coordinate space too large");
        size *= std::uint64_t(N);
        level_offset.push_back(total_coords);
        level_size.push_back(size);
        total_coords += size;
    }
}

std::uint64_t PhjShape::point_count(std::uint64_t cap) const {
    std::uint64_t count = 1;
    for (std::uint64_t i = 0; i < total_coords; ++i) {
        count *= std::uint64_t(q);
        if (count > cap) throw ResourceCapExceeded("PHJ point space exceeds cap");
    }
    return count;
}

GammaIndex::GammaIndex(const PhjShape& shape, const VarSet& gamma) {
    if (gamma.empty()) throw std::invalid_argument("VarSet: must be nonempty");
    for (int i : gamma)
        if (i < 1 || i > shape.N) throw std::invalid_argument("VarSet: index outside [1..N]");
    if (!std::is_sorted(gamma.begin(), gamma.end()) ||
        std::adjacent_find(gamma.begin(), gamma.end()) != gamma.end())
        throw std::invalid_argument("VarSet: must be sorted and duplicate-free");

    level_ranks.resize(std::size_t(shape.d));
    // gamma^j ranks by odometer over j slots, each running through gamma
    for (int j = 1; j <= shape.d; ++j) {
        auto& out = level_ranks[std::size_t(j) - 1];
        std::vector<std::size_t> pick(std::size_t(j), 0);
        while (true) {
            std::uint64_t rank = 0;
            for (std::size_t s = 0; s < pick.size(); ++s)
                rank = rank * std::uint64_t(shape.N) + std::uint64_t(gamma[pick[s]] - 1);
            out.push_back(shape.level_offset[std::size_t(j) - 1] + rank);
            std::size_t s = pick.size();
            while (s > 0 && pick[s - 1] + 1 == gamma.size()) pick[--s] = 0;
            if (s == 0) break;
            ++pick[s - 1];
        }
        std::sort(out.begin(), out.end());
    }
}

PhjPoint phj_oplus(const PhjShape& shape, const PhjPoint& a, const VarSet& gamma,
                   const std::vector<int>& xs) {
    GammaIndex gi(shape, gamma);
    PhjPoint out;
    phj_oplus_into(shape, a, gi, xs, out);
    return out;
}

void phj_oplus_into(const PhjShape& shape, const PhjPoint& a, const GammaIndex& gi,
                    const std::vector<int>& xs, PhjPoint& out) {
    if (a.coords.size() != shape.total_coords)
        throw std::invalid_argument("phj_oplus: point has wrong shape");
    if (xs.size() != std::size_t(shape.d))
        throw std::invalid_argument("phj_oplus: need one value per level");
    for (int x : xs)
        if (x < 1 || x > shape.q)
            throw std::invalid_argument("phj_oplus: value " + std::to_string(x) + " outside [1..q]");
    out.coords = a.coords;
    for (int j = 0; j < shape.d; ++j)
        for (std::uint64_t r : gi.level_ranks[std::size_t(j)])
            out.coords[r] = std::uint8_t(xs[std::size_t(j)]);
}

MonomialTable::MonomialTable(const PhjShape& shape, const GenSeq& xs) {
    if (xs.size() != std::size_t(shape.N))
        throw std::invalid_argument("MonomialTable: need exactly N generators");
    flat.resize(shape.total_coords);
    // level 1: the generators themselves
    for (int i = 0; i < shape.N; ++i) flat[std::size_t(i)] = xs.xs[std::size_t(i)];
    // level j+1 monomials extend level j by one more factor
    for (int j = 2; j <= shape.d; ++j) {
        const std::uint64_t prev_off = shape.level_offset[std::size_t(j) - 2];
        const std::uint64_t prev_sz = shape.level_size[std::size_t(j) - 2];
        const std::uint64_t off = shape.level_offset[std::size_t(j) - 1];
        for (std::uint64_t p = 0; p < prev_sz; ++p)
            for (int i = 0; i < shape.N; ++i)
                flat[off + p * std::uint64_t(shape.N) + std::uint64_t(i)] =
                    flat[prev_off + p] * xs.xs[std::size_t(i)];
    }
}

BigInt embed_point(const PhjShape& shape, const PhjPoint& a, const MonomialTable& table) {
    if (a.coords.size() != shape.total_coords)
        throw std::invalid_argument("embed_point: point has wrong shape");
    BigInt sum = 0;
    for (std::uint64_t c = 0; c < shape.total_coords; ++c) sum += table.flat[c] * int(a.coords[c]);
    return sum;
}

BigInt embed_point_masked(const PhjShape& shape, const PhjPoint& a, const GammaIndex& gi,
                          const MonomialTable& table) {
    BigInt sum = embed_point(shape, a, table);
    // subtract the gamma-governed contributions instead of copying the point
    for (int j = 0; j < shape.d; ++j)
        for (std::uint64_t r : gi.level_ranks[std::size_t(j)]) sum -= table.flat[r] * int(a.coords[r]);
    return sum;
}

EmbeddedPattern embedded_pattern(const PhjShape& shape, const PhjPoint& a, const VarSet& gamma,
                                 const GenSeq& xs, const std::vector<BigInt>& coeffs) {
    if (coeffs.size() != std::size_t(shape.d))
        throw std::invalid_argument("embedded_pattern: need one coefficient per level");
    GammaIndex gi(shape, gamma);
    MonomialTable table(shape, xs);
    EmbeddedPattern out;
    out.base = embed_point_masked(shape, a, gi, table);
    out.value = out.base;
    // the gamma^j coordinates all carry c_j, and their monomials sum to s^j
    for (int j = 0; j < shape.d; ++j) {
        BigInt level = 0;
        for (std::uint64_t r : gi.level_ranks[std::size_t(j)]) level += table.flat[r];
        out.value += coeffs[std::size_t(j)] * level;
    }
    return out;
}

std::uint64_t phj_point_rank(const PhjShape& shape, const PhjPoint& a) {
    std::uint64_t rank = 0;
    for (std::uint64_t c = 0; c < shape.total_coords; ++c) {
        if (a.coords[c] < 1 || int(a.coords[c]) > shape.q)
            throw std::invalid_argument("phj_point_rank: coordinate outside [1..q]");
        rank = rank * std::uint64_t(shape.q) + std::uint64_t(a.coords[c] - 1);
    }
    return rank;
}

PhjPoint phj_point_from_rank(const PhjShape& shape, std::uint64_t rank) {
    PhjPoint a;
    a.coords.assign(shape.total_coords, 1);
    for (std::uint64_t c = shape.total_coords; c-- > 0;) {
        a.coords[c] = std::uint8_t(rank % std::uint64_t(shape.q) + 1);
        rank /= std::uint64_t(shape.q);
    }
    return a;
}

std::vector<VarSet> all_varsets(int N) {
    std::vector<VarSet> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << N); ++mask) {
        VarSet g;
        for (int i = 0; i < N; ++i)
            if (mask & (std::uint32_t(1) << i)) g.push_back(i + 1);
        out.push_back(std::move(g));
    }
    std::stable_sort(out.begin(), out.end(), [](const VarSet& a, const VarSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::optional<PhjWitness> phj_search(const PhjInstance& inst, const SearchCaps& caps, int workers) {
    const PhjShape& shape = inst.shape;
    const std::uint64_t points = shape.point_count(caps.dense_points_cap);
    if (workers <= 0) workers = omp_get_max_threads();

    // all value vectors (x_1..x_d) in [1..q]^d
    std::vector<std::vector<int>> xvecs;
    {
        std::vector<int> x(std::size_t(shape.d), 1);
        while (true) {
            xvecs.push_back(x);
            int j = shape.d - 1;
            while (j >= 0 && x[std::size_t(j)] == shape.q) x[std::size_t(j--)] = 1;
            if (j < 0) break;
            ++x[std::size_t(j)];
        }
    }

    for (const VarSet& gamma : all_varsets(shape.N)) {
        GammaIndex gi(shape, gamma);
        std::atomic<std::uint64_t> best{points};

        const std::uint64_t chunk =
            std::max<std::uint64_t>(64, points / (std::uint64_t(workers) * 16));
        const std::uint64_t nchunks = (points + chunk - 1) / chunk;

#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (std::uint64_t ci = 0; ci < nchunks; ++ci) {
            const std::uint64_t lo = ci * chunk;
            if (lo >= best.load(std::memory_order_relaxed)) continue;
            const std::uint64_t hi = std::min(points, lo + chunk);
            PhjPoint a = phj_point_from_rank(shape, lo);
            PhjPoint b;
            std::vector<int> coords(shape.total_coords);
            for (std::uint64_t rank = lo; rank < hi; ++rank) {
                int pat_color = -1;
                bool mono = true;
                for (const auto& x : xvecs) {
                    phj_oplus_into(shape, a, gi, x, b);
                    for (std::uint64_t c = 0; c < shape.total_coords; ++c)
                        coords[c] = b.coords[c];
                    int col = inst.coloring.color(phj_point_rank(shape, b), coords);
                    if (pat_color < 0)
                        pat_color = col;
                    else if (col != pat_color) {
                        mono = false;
                        break;
                    }
                }
                if (mono) {
                    std::uint64_t cur = best.load(std::memory_order_relaxed);
                    while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
                    }
                    break;
                }
                // odometer step to the next point in lex order
                for (std::uint64_t c = shape.total_coords; c-- > 0;) {
                    if (int(a.coords[c]) < shape.q) {
                        ++a.coords[c];
                        break;
                    }
                    a.coords[c] = 1;
                }
            }
        }

        const std::uint64_t w = best.load();
        if (w < points) return PhjWitness{phj_point_from_rank(shape, w), gamma};
    }
    return std::nullopt;
}

CubeFile parse_cube_coloring(std::istream& in, const SearchCaps& caps) {
    std::string kind;
    if (!(in >> kind)) throw std::invalid_argument("cube coloring: missing header");
    auto read_colors = [&](std::uint64_t points, int r) {
        std::string tag;
        if (!(in >> tag)) throw std::invalid_argument("cube coloring: missing colors or rule");
        if (tag == "rule:") {
            std::string expr;
            std::getline(in, expr);
            std::string stripped;
            for (char ch : expr)
                if (!std::isspace(static_cast<unsigned char>(ch))) stripped.push_back(ch);
            if (stripped.rfind("coord:", 0) == 0)
                return CubePointColoring::coord_rule(points, r, std::stoi(stripped.substr(6)));
            return CubePointColoring::natural_rule(points, r, parse_rule_coloring(stripped));
        }
        std::vector<std::uint8_t> colors;
        colors.reserve(points);
        colors.push_back(std::uint8_t(std::stoi(tag)));
        int c;
        while (colors.size() < points && in >> c) colors.push_back(std::uint8_t(c));
        return CubePointColoring::dense(points, r, std::move(colors));
    };

    if (kind == "hj") {
        int t, N, r;
        if (!(in >> t >> N >> r)) throw std::invalid_argument("cube coloring: bad hj header");
        std::uint64_t points = 1;
        for (int i = 0; i < N; ++i) {
            points *= std::uint64_t(t);
            if (points > caps.dense_points_cap)
                throw ResourceCapExceeded("cube coloring: point space exceeds cap");
        }
        return HjInstance{t, N, read_colors(points, r)};
    }
    if (kind == "phj") {
        int q, N, d, r;
        if (!(in >> q >> N >> d >> r)) throw std::invalid_argument("cube coloring: bad phj header");
        PhjShape shape(q, N, d);
        return PhjInstance{shape, read_colors(shape.point_count(caps.dense_points_cap), r)};
    }
    throw std::invalid_argument("cube coloring: unknown header '" + kind + "'");
}

}  // namespace ramsey
