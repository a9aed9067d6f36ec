#include "mmst/ummst2d.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "mmst/errors.hpp"

namespace mmst {
namespace {
constexpr double kMinSlack = 1e-12;
}

Ummst2dSweep::Ummst2dSweep(const RootedPointSet& ps)
    : ps_(ps), systems_(critical_systems_detail(ps)) {
    const std::size_t n = ps_.size();
    const std::uint32_t root = ps_.root();
    const OrthoSystem& sys0 = systems_.systems[0];

    mask_.assign(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto& p = ps_.exact(i);
        mask_[i] = detail::quadrant_mask(sign128(sys0.x_value(p)), sign128(sys0.y_value(p)));
    }

    RootedTree t0 = detail::xymmst_impl(ps_, sys0, BoundaryRule::both_sides);
    parent_ = t0.parents();
    cost_ = t0.cost();

    pd_.resize(n);
    std::vector<std::uint32_t> cands;
    for (std::uint32_t p = 0; p < n; ++p) {
        if (p == root) continue;
        cands.clear();
        for (std::uint32_t q = 0; q < n; ++q)
            if (q != p && dominates(q, p)) cands.push_back(q);
        pd_[p].bind(&ps_.exacts(), p, n);
        pd_[p].load(cands);
        assert(pd_[p].live_size() > 0);
        assert(pd_[p].min() == parent_[p]);
    }
    min_cost_ = cost_;
    min_index_ = 0;
}

bool Ummst2dSweep::dominates(std::uint32_t q, std::uint32_t p) const {
    if ((mask_[q] & mask_[p]) == 0) return false;
    const OrthoSystem& sys = systems_.systems[index_];
    const auto& eq = ps_.exact(q);
    const auto& ep = ps_.exact(p);
    return abs128(sys.x_value(eq)) <= abs128(sys.x_value(ep)) &&
           abs128(sys.y_value(eq)) <= abs128(sys.y_value(ep));
}

void Ummst2dSweep::reparent(std::uint32_t p) {
    const std::uint32_t np = pd_[p].min();
    if (np != parent_[p]) {
        cost_ -= ps_.distance(p, parent_[p]);
        parent_[p] = np;
        cost_ += ps_.distance(p, np);
    }
}

void Ummst2dSweep::sync_dir(std::uint32_t child, std::uint32_t cand) {
    if (child == ps_.root() || child == cand) return;
    const bool want = dominates(cand, child);
    const bool have = pd_[child].contains(cand);
    if (want && !have) {
        pd_[child].insert(cand);
        reparent(child);
    } else if (!want && have) {
        pd_[child].erase(cand);
        if (parent_[child] == cand) reparent(child);
    }
}

void Ummst2dSweep::apply_pair_event(std::uint32_t a, std::uint32_t b) {
    if (a == ps_.root() || b == ps_.root())
        throw InvalidInputError("pair event must not contain the root");
    ++stats_.pair_syncs;
    sync_dir(a, b);
    sync_dir(b, a);
}

void Ummst2dSweep::apply_root_event(std::uint32_t q, bool enter) {
    const OrthoSystem& sys = systems_.systems[index_];
    const auto& eq = ps_.exact(q);
    const std::uint8_t fresh =
        detail::quadrant_mask(sign128(sys.x_value(eq)), sign128(sys.y_value(eq)));
    const std::uint8_t old = mask_[q];
    if (fresh == old) throw InvalidInputError("root event without a membership change");
    const std::uint8_t changed = enter ? (fresh & ~old) : (old & ~fresh);
    if (std::popcount(changed) != 1 || (enter ? std::popcount(fresh) != 2 : std::popcount(fresh) != 1))
        throw InvalidInputError("root event membership change is not a single quadrant");
    mask_[q] = fresh;
#ifndef NDEBUG
    if (enter) assert(pd_[q].live_size() == 1 && pd_[q].min() == ps_.root());
#endif
    for (std::uint32_t p = 0; p < ps_.size(); ++p) {
        if (p == q || p == ps_.root()) continue;
        if ((mask_[p] & changed) == 0) continue;
        sync_dir(p, q);
        sync_dir(q, p);
    }
    if (enter)
        ++stats_.root_enters;
    else
        ++stats_.root_leaves;
}

RootedTree Ummst2dSweep::tree() const { return RootedTree(ps_, parent_); }

bool Ummst2dSweep::advance() {
    if (index_ + 1 >= systems_.systems.size()) return false;
    ++index_;
    const std::size_t ev = index_ / 2;
    const bool even = index_ % 2 == 0;
    for (const std::uint32_t q : systems_.root_points[ev]) apply_root_event(q, even);
    for (const Edge& e : systems_.tie_pairs[ev]) apply_pair_event(e.first, e.second);
    if (cost_ < min_cost_ - kMinSlack) {
        min_cost_ = cost_;
        min_index_ = index_;
    }
    return true;
}

Ummst2dResult ummst2d(const RootedPointSet& ps) {
    if (ps.size() < 2) throw InvalidInputError("ummst2d requires |P| >= 2");
    Ummst2dSweep sweep(ps);
    while (sweep.advance()) {
    }
    const OrthoSystem winner = sweep.min_system();
    RootedTree tree = detail::xymmst_impl(ps, winner, BoundaryRule::both_sides);
    return Ummst2dResult{winner, std::move(tree), sweep.min_system_index()};
}

}  // namespace mmst
