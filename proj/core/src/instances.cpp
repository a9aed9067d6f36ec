#include "mmst/instances.hpp"

#include <set>
#include <utility>
#include <vector>

namespace mmst::instances {
namespace {

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

RootedPointSet make(const Params& params) {
    SplitMix rng{params.seed * 0x2545f4914f6cdd1dull + params.n};
    std::vector<std::array<std::int64_t, 2>> pts;
    std::set<std::pair<std::int64_t, std::int64_t>> used;
    auto draw = [&]() -> std::array<std::int64_t, 2> {
        for (;;) {
            const std::int64_t x = rng.range(-params.coord_range, params.coord_range);
            const std::int64_t y = rng.range(-params.coord_range, params.coord_range);
            if (params.avoid_axes && (x == pts[0][0] || y == pts[0][1])) continue;
            if (used.insert({x, y}).second) return {x, y};
        }
    };
    pts.push_back({0, 0});
    used.insert({0, 0});
    while (pts.size() < params.n) pts.push_back(draw());

    if (params.certify_general_position) {
        while (const auto bad = find_collinear_triple(pts)) {
            const std::size_t victim = std::max({(*bad)[0], (*bad)[1], (*bad)[2]});
            used.erase({pts[victim][0], pts[victim][1]});
            pts[victim] = draw();
        }
    }

    PointSetOptions opts;
    opts.full_check_limit = 0;  // generated sets are validated here, not on ingestion
    opts.sample_checks = 0;
    return RootedPointSet::from_integers(pts, 0, opts);
}

}  // namespace mmst::instances
