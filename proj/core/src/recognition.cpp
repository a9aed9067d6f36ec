#include "mmst/recognition.hpp"

#include <cassert>
#include <set>

#include "mmst/errors.hpp"
#include "mmst/xymmst.hpp"

namespace mmst {
namespace {

void require_connected(const GeometricGraph& g) {
    if (!g.connected()) throw DisconnectedGraphError("recognition requires a connected graph");
}

bool bfs_all_reached(const GeometricGraph& g, auto traversable) {
    const std::size_t n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> stack{g.root()};
    seen[g.root()] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (const std::uint32_t u : g.adjacent(v)) {
            if (!seen[u] && traversable(v, u)) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

}  // namespace

bool is_rooted_y_monotone(const GeometricGraph& g, const Axis& a) {
    require_connected(g);
    std::vector<int128> proj(g.size());
    for (std::uint32_t i = 0; i < g.size(); ++i) proj[i] = projection_value(g.points().exact(i), a);
    return bfs_all_reached(g, [&](std::uint32_t v, std::uint32_t u) {
        // drop edges across the root line, walk toward larger |projection|
        if ((proj[v] < 0 && proj[u] > 0) || (proj[v] > 0 && proj[u] < 0)) return false;
        return abs128(proj[v]) <= abs128(proj[u]);
    });
}

bool is_rooted_y_monotone_counting(const GeometricGraph& g, const Axis& a) {
    require_connected(g);
    const std::uint32_t r = g.root();
    const std::size_t n = g.size();
    std::vector<int128> proj(n);
    for (std::uint32_t i = 0; i < n; ++i) proj[i] = projection_value(g.points().exact(i), a);

    std::vector<char> inB(n, 0);
    std::size_t b_count = 0;
    for (std::uint32_t p = 0; p < n; ++p) {
        if (p == r) continue;
        for (const std::uint32_t q : g.adjacent(p)) {
            const bool same_side = !((proj[p] < 0 && proj[q] > 0) || (proj[p] > 0 && proj[q] < 0));
            if (same_side && abs128(proj[q]) < abs128(proj[p])) {
                inB[p] = 1;
                ++b_count;
                break;
            }
        }
    }
    std::size_t c_count = 0;
    for (std::uint32_t p = 0; p < n; ++p) {
        if (p == r || inB[p]) continue;
        for (const std::uint32_t q : g.adjacent(p)) {
            if (q != r && proj[q] == proj[p] && inB[q]) {
                ++c_count;
                break;
            }
        }
    }

    std::optional<std::uint32_t> zero_point;
    for (std::uint32_t p = 0; p < n; ++p) {
        if (p != r && proj[p] == 0) {
            if (zero_point)
                throw DegeneracyError("two points project onto the root along this axis");
            zero_point = p;
        }
    }
    if (zero_point) return g.has_edge(r, *zero_point) && b_count + c_count == n - 2;
    return b_count + c_count == n - 1;
}

bool is_rooted_xy_monotone(const GeometricGraph& g, const OrthoSystem& sys) {
    require_connected(g);
    const std::size_t n = g.size();
    std::vector<uint128> ax(n), ay(n);
    std::vector<std::uint8_t> mask(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto& p = g.points().exact(i);
        const int128 x = sys.x_value(p), y = sys.y_value(p);
        ax[i] = abs128(x);
        ay[i] = abs128(y);
        mask[i] = detail::quadrant_mask(sign128(x), sign128(y));
    }
    return bfs_all_reached(g, [&](std::uint32_t v, std::uint32_t u) {
        return (mask[v] & mask[u]) != 0 && ax[v] <= ax[u] && ay[v] <= ay[u];
    });
}

bool is_rooted_xy_monotone_counting(const GeometricGraph& g, const OrthoSystem& sys) {
    require_connected(g);
    const std::uint32_t r = g.root();
    const std::size_t n = g.size();
    std::vector<uint128> ax(n), ay(n);
    std::vector<std::uint8_t> mask(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto& p = g.points().exact(i);
        const int128 x = sys.x_value(p), y = sys.y_value(p);
        ax[i] = abs128(x);
        ay[i] = abs128(y);
        mask[i] = detail::quadrant_mask(sign128(x), sign128(y));
    }
    std::size_t b_count = 0;
    for (std::uint32_t p = 0; p < n; ++p) {
        if (p == r) continue;
        for (const std::uint32_t q : g.adjacent(p)) {
            if ((mask[q] & mask[p]) != 0 && ax[q] <= ax[p] && ay[q] <= ay[p]) {
                ++b_count;
                break;
            }
        }
    }
    return b_count == n - 1;
}

namespace {

// Incremental witness-set state shared by the two uniform sweeps. A[p] holds
// the admissible neighbors of p under the current direction; B counts points
// with non-empty A.
struct WitnessState {
    std::vector<std::set<std::uint32_t>> A;
    std::vector<char> inB;
    std::size_t b_count = 0;

    explicit WitnessState(std::size_t n) : A(n), inB(n, 0) {}

    template <typename Member>
    void sync(std::uint32_t p, std::uint32_t q, Member member) {
        const bool want = member(q, p);
        const auto it = A[p].find(q);
        if (want && it == A[p].end()) {
            A[p].insert(q);
            if (!inB[p]) {
                inB[p] = 1;
                ++b_count;
            }
        } else if (!want && it != A[p].end()) {
            A[p].erase(it);
            if (A[p].empty() && inB[p]) {
                inB[p] = 0;
                --b_count;
            }
        }
    }
};

}  // namespace

std::optional<Axis> uniform_monotone_axis(const GeometricGraph& g) {
    require_connected(g);
    const std::uint32_t r = g.root();
    const std::size_t n = g.size();
    if (n == 1) return Axis::from_direction(0, 1);

    const CriticalAxes crit = recognition_axes(g);
    WitnessState st(n);

    std::size_t index = 0;
    auto member = [&](std::uint32_t q, std::uint32_t p) {
        // q admissible for p: same closed side, strictly smaller |projection|
        if (p == r) return false;
        const Axis& axis = crit.axes[index];
        const int128 pp = projection_value(g.points().exact(p), axis);
        const int128 pq = projection_value(g.points().exact(q), axis);
        if ((pp < 0 && pq > 0) || (pp > 0 && pq < 0)) return false;
        return abs128(pq) < abs128(pp);
    };

    for (const Edge& e : g.edges()) {
        st.sync(e.first, e.second, member);
        st.sync(e.second, e.first, member);
    }

    for (index = 0; index < crit.axes.size(); ++index) {
        const std::size_t ev = index / 2;
        if (index > 0) {
            if (const auto q0 = crit.root_point[ev]) {
                for (const std::uint32_t u : g.adjacent(*q0)) {
                    st.sync(*q0, u, member);
                    st.sync(u, *q0, member);
                }
            }
            for (const Edge& e : crit.tie_pairs[ev]) {
                st.sync(e.first, e.second, member);
                st.sync(e.second, e.first, member);
            }
        }

        if (index % 2 == 0) {
            // C: points outside B connected to a B point through an edge
            // perpendicular to this axis. Non-root tie edges only; at most
            // one equal-projection neighbor exists per point.
            std::size_t c_count = 0;
            for (const Edge& e : crit.tie_pairs[ev]) {
                if (!st.inB[e.first] && st.inB[e.second]) ++c_count;
                if (!st.inB[e.second] && st.inB[e.first]) ++c_count;
            }
            if (const auto q0 = crit.root_point[ev]) {
                if (g.has_edge(r, *q0) && st.b_count + c_count == n - 2) return crit.axes[index];
            } else {
                if (st.b_count + c_count == n - 1) return crit.axes[index];
            }
        } else {
            if (st.b_count == n - 1) return crit.axes[index];
        }
    }
    return std::nullopt;
}

std::optional<OrthoSystem> uniform_2d_monotone_system(const GeometricGraph& g) {
    require_connected(g);
    const std::uint32_t r = g.root();
    const std::size_t n = g.size();
    if (n == 1) return OrthoSystem::from_direction(1, 0);

    const CriticalSystems crit = recognition_systems(g);
    WitnessState st(n);
    std::vector<std::uint8_t> mask(n);

    std::size_t index = 0;
    auto recompute_mask = [&](std::uint32_t p) {
        const OrthoSystem& sys = crit.systems[index];
        const auto& e = g.points().exact(p);
        mask[p] = detail::quadrant_mask(sign128(sys.x_value(e)), sign128(sys.y_value(e)));
    };
    auto member = [&](std::uint32_t q, std::uint32_t p) {
        if (p == r) return false;
        if ((mask[q] & mask[p]) == 0) return false;
        const OrthoSystem& sys = crit.systems[index];
        const auto& eq = g.points().exact(q);
        const auto& ep = g.points().exact(p);
        return abs128(sys.x_value(eq)) <= abs128(sys.x_value(ep)) &&
               abs128(sys.y_value(eq)) <= abs128(sys.y_value(ep));
    };

    for (std::uint32_t p = 0; p < n; ++p) recompute_mask(p);
    for (const Edge& e : g.edges()) {
        st.sync(e.first, e.second, member);
        st.sync(e.second, e.first, member);
    }

    for (index = 0; index < crit.systems.size(); ++index) {
        const std::size_t ev = index / 2;
        if (index > 0) {
            for (const std::uint32_t q : crit.root_points[ev]) {
                recompute_mask(q);
                for (const std::uint32_t u : g.adjacent(q)) {
                    st.sync(q, u, member);
                    st.sync(u, q, member);
                }
            }
            for (const Edge& e : crit.tie_pairs[ev]) {
                st.sync(e.first, e.second, member);
                st.sync(e.second, e.first, member);
            }
        }
        if (st.b_count == n - 1) return crit.systems[index];
    }
    return std::nullopt;
}

}  // namespace mmst
