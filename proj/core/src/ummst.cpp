#include "mmst/ummst.hpp"

#include <algorithm>
#include <cassert>

#include "mmst/errors.hpp"

namespace mmst {
namespace {
constexpr double kMinSlack = 1e-12;
}

UmmstSweep::UmmstSweep(const RootedPointSet& ps)
    : ps_(ps), axes_(critical_axes_detail(ps)) {
    const std::size_t n = ps_.size();

    auto halves = detail::ymmst_with_sequences(ps_, axes_.axes[0], BoundaryRule::both_sides);
    parent_ = halves.tree.parents();
    cost_ = halves.tree.cost();
    seq_[0] = std::move(halves.seq_minus);
    seq_[1] = std::move(halves.seq_plus);

    pos_[0].assign(n, kAbsent);
    pos_[1].assign(n, kAbsent);
    for (int h = 0; h < 2; ++h)
        for (std::uint32_t j = 0; j < seq_[h].size(); ++j) pos_[h][seq_[h][j]] = j;

    // PD(p): every predecessor of p in its half sequence, ordered by exact
    // squared distance then index.
    pd_.resize(n);
    std::vector<char> built(n, 0);
    std::vector<std::uint32_t> prefix;
    for (int h = 0; h < 2; ++h) {
        const auto& seq = seq_[h];
        for (std::uint32_t j = 1; j < seq.size(); ++j) {
            const std::uint32_t p = seq[j];
            if (built[p]) continue;  // boundary point already built in the other half
            built[p] = 1;
            prefix.assign(seq.begin(), seq.begin() + j);
            pd_[p].bind(&ps_.exacts(), p, n);
            pd_[p].load(prefix);
            assert(pd_[p].min() == parent_[p]);
        }
    }
    // Axis 0's events are realized by the from-scratch build itself: its tie
    // pairs settle inside the half construction and a boundary point starts
    // out in both halves. Count them as processed.
    stats_.even_pair_checks += axes_.tie_pairs[0].size();
    if (axes_.root_point[0]) ++stats_.root_enters;
    min_cost_ = cost_;
    min_index_ = 0;
}

RootedTree UmmstSweep::tree() const { return RootedTree(ps_, parent_); }

void UmmstSweep::reparent(std::uint32_t p) {
    const std::uint32_t np = pd_[p].min();
    if (np != parent_[p]) {
        cost_ -= ps_.distance(p, parent_[p]);
        parent_[p] = np;
        cost_ += ps_.distance(p, np);
    }
}

int UmmstSweep::locate_pair(std::uint32_t a, std::uint32_t b, std::uint32_t& front,
                            std::uint32_t& rear) const {
    const std::uint32_t r = ps_.root();
    if (a == r || b == r) throw InvalidInputError("tie pair must not contain the root");
    int half = -1;
    for (int h = 0; h < 2; ++h)
        if (pos_[h][a] != kAbsent && pos_[h][b] != kAbsent) half = h;
    if (half < 0) throw InvalidInputError("tie pair endpoints are in different halves");
    const std::uint32_t pa = pos_[half][a], pb = pos_[half][b];
    if (pa + 1 != pb && pb + 1 != pa)
        throw InvalidInputError("sweep bookkeeping: tie pair is not adjacent in its half");
    front = pa < pb ? a : b;
    rear = pa < pb ? b : a;
    return half;
}

void UmmstSweep::do_swap(int half, std::uint32_t front, std::uint32_t rear) {
    const std::uint32_t jf = pos_[half][front];
    seq_[half][jf] = rear;
    seq_[half][jf + 1] = front;
    pos_[half][rear] = jf;
    pos_[half][front] = jf + 1;
    // The moved-up point leaves the moved-down point's shadow: transfer the
    // single predecessor entry between the two PD structures.
    pd_[front].insert(rear);
    pd_[rear].erase(front);
    reparent(front);
    reparent(rear);
}

void UmmstSweep::apply_swap_event(std::uint32_t a, std::uint32_t b) {
    std::uint32_t front, rear;
    const int half = locate_pair(a, b, front, rear);
    ++stats_.even_pair_checks;
    // Distance of the rear point to the prefix before the pair; the front
    // point is its immediate predecessor and must not count.
    const uint128 rear_d = pd_[rear].key(pd_[rear].min_excluding(front));
    const uint128 front_d = pd_[front].key(pd_[front].min());
    if (std::pair{rear_d, rear} < std::pair{front_d, front}) {
        do_swap(half, front, rear);
        ++stats_.even_swaps;
    }
}

void UmmstSweep::apply_order_restore(std::uint32_t a, std::uint32_t b) {
    std::uint32_t front, rear;
    const int half = locate_pair(a, b, front, rear);
    ++stats_.odd_pair_checks;
    const Axis& ax = axes_.axes[index_];
    const uint128 pf = abs128(projection_value(ps_.exact(front), ax));
    const uint128 pr = abs128(projection_value(ps_.exact(rear), ax));
    assert(pf != pr);  // bisectors are validated tie-free
    if (pf > pr) {
        do_swap(half, front, rear);
        ++stats_.odd_swaps;
    }
}

void UmmstSweep::apply_root_event(std::uint32_t q) {
    const int from = pos_[0][q] != kAbsent ? 0 : 1;
    const int to = 1 - from;
    if (pos_[to][q] != kAbsent) throw InvalidInputError("root event point already in both halves");
    // Continuity: approaching the perpendicular of its root line, q has the
    // smallest |projection| of its half, so it sits right after the root and
    // its PD holds only the root.
    assert(pos_[from][q] == 1);
    assert(pd_[q].live_size() == 1);

    auto& seq = seq_[to];
    seq.insert(seq.begin() + 1, q);
    for (std::uint32_t j = 1; j < seq.size(); ++j) pos_[to][seq[j]] = j;
    for (std::uint32_t j = 2; j < seq.size(); ++j) {
        const std::uint32_t p = seq[j];
        pd_[p].insert(q);
        reparent(p);
    }
    ++stats_.root_enters;
}

void UmmstSweep::leave_root_event(std::uint32_t q) {
    if (pos_[0][q] == kAbsent || pos_[1][q] == kAbsent)
        throw InvalidInputError("leave event point is not in both halves");
    const int s = sign128(projection_value(ps_.exact(q), axes_.axes[index_]));
    assert(s != 0);
    const int leave = s > 0 ? 0 : 1;  // stays on its strict side
    assert(pos_[leave][q] == 1);

    auto& seq = seq_[leave];
    seq.erase(seq.begin() + pos_[leave][q]);
    pos_[leave][q] = kAbsent;
    for (std::uint32_t j = 1; j < seq.size(); ++j) pos_[leave][seq[j]] = j;
    for (std::uint32_t j = 1; j < seq.size(); ++j) {
        const std::uint32_t p = seq[j];
        pd_[p].erase(q);
        if (parent_[p] == q) reparent(p);
    }
    ++stats_.root_leaves;
}

bool UmmstSweep::advance() {
    if (index_ + 1 >= axes_.axes.size()) return false;
    ++index_;
    const std::size_t ev = index_ / 2;  // even axis 2*ev, or the one just departed

    // Tie pairs in ascending half-sequence position; the sequence tie rule is
    // inductive over positions, so earlier pairs must settle first. Nearly
    // every axis carries a single pair, which needs no ordering work.
    const std::vector<Edge>& pairs = axes_.tie_pairs[ev];
    const Edge* begin = pairs.data();
    const Edge* end = begin + pairs.size();
    if (pairs.size() > 1) {
        scratch_pairs_ = pairs;
        auto pos_of = [&](const Edge& e) {
            for (int h = 0; h < 2; ++h)
                if (pos_[h][e.first] != kAbsent && pos_[h][e.second] != kAbsent)
                    return std::pair{h, std::min(pos_[h][e.first], pos_[h][e.second])};
            throw InvalidInputError("tie pair endpoints are in different halves");
        };
        std::sort(scratch_pairs_.begin(), scratch_pairs_.end(),
                  [&](const Edge& l, const Edge& r) { return pos_of(l) < pos_of(r); });
        begin = scratch_pairs_.data();
        end = begin + scratch_pairs_.size();
    }

    if (index_ % 2 == 0) {
        if (axes_.root_point[ev]) apply_root_event(*axes_.root_point[ev]);
        for (const Edge* e = begin; e != end; ++e) apply_swap_event(e->first, e->second);
    } else {
        if (axes_.root_point[ev]) leave_root_event(*axes_.root_point[ev]);
        for (const Edge* e = begin; e != end; ++e) apply_order_restore(e->first, e->second);
    }

    if (cost_ < min_cost_ - kMinSlack) {
        min_cost_ = cost_;
        min_index_ = index_;
    }
    return true;
}

UmmstResult ummst(const RootedPointSet& ps) {
    if (ps.size() < 2) throw InvalidInputError("ummst requires |P| >= 2");
    UmmstSweep sweep(ps);
    while (sweep.advance()) {
    }
    const Axis winner = sweep.min_axis();
    // Rebuild from scratch at the winner; even axes may carry a boundary
    // point, which the closed-half rule places in both halves.
    RootedTree tree = detail::ymmst_with_sequences(ps, winner, BoundaryRule::both_sides).tree;
    return UmmstResult{winner, std::move(tree), sweep.min_axis_index()};
}

}  // namespace mmst
