#include "zz/zigzag.hpp"

#include <algorithm>
#include <tuple>

namespace zz {

namespace {

// within-face successor: the next directed edge of the same face in the
// zigzag sense (this is exactly D_F on oriented edges)
State within_face_next(State st) {
    Side s = state_side(st);
    int d = state_dir(st);
    Face f = face_of(s);
    int i = slot_of(s);
    if (d == 0) return make_state(side_at(f, (i + 1) % 3), 0);
    return make_state(side_at(f, (i + 2) % 3), 1);
}

std::tuple<int, int, int, int> state_key(const SurfaceMap& map, State st) {
    Side s = state_side(st);
    return {map.edge_of(s), map.canonical_dir(s, state_dir(st)), face_of(s), st};
}

Zigzag rotate_to_min(const SurfaceMap& map, std::vector<State> states) {
    int best = 0;
    auto best_key = state_key(map, states[0]);
    for (int i = 1; i < static_cast<int>(states.size()); ++i) {
        auto k = state_key(map, states[i]);
        if (k < best_key) {
            best_key = k;
            best = i;
        }
    }
    std::rotate(states.begin(), states.begin() + best, states.end());
    return Zigzag{std::move(states)};
}

}  // namespace

State zig_next(const SurfaceMap& map, State st) {
    State w = within_face_next(st);
    Side ws = state_side(w);
    return make_state(map.glue(ws), map.translate_dir(ws, state_dir(w)));
}

State zig_prev(const SurfaceMap& map, State st) {
    Side s = state_side(st);
    Side p = map.glue(s);
    int d = map.translate_dir(s, state_dir(st));
    Face f = face_of(p);
    int j = slot_of(p);
    if (d == 0) return make_state(side_at(f, (j + 2) % 3), 0);
    return make_state(side_at(f, (j + 1) % 3), 1);
}

State zig_reverse(const SurfaceMap& map, State st) {
    (void)map;
    State w = within_face_next(st);
    return w ^ 1;
}

DirectedEdgeRef state_directed_edge(const SurfaceMap& map, State st) {
    Side s = state_side(st);
    Corner a = first_corner(s), b = second_corner(s);
    if (state_dir(st) == 1) std::swap(a, b);
    return {map.edge_of(s), map.vertex_at(a), map.vertex_at(b)};
}

ZigzagSet all_zigzags(const SurfaceMap& map) {
    const int ns = 6 * map.face_count();
    std::vector<int> orbit_of(ns, -1);
    std::vector<std::vector<State>> orbits;
    for (State st = 0; st < ns; ++st) {
        if (orbit_of[st] >= 0) continue;
        int id = static_cast<int>(orbits.size());
        std::vector<State> orb;
        State x = st;
        do {
            orb.push_back(x);
            orbit_of[x] = id;
            x = zig_next(map, x);
        } while (x != st);
        orbits.push_back(std::move(orb));
    }

    std::vector<Zigzag> canon;
    canon.reserve(orbits.size());
    for (auto& o : orbits) canon.push_back(rotate_to_min(map, std::move(o)));

    std::vector<int> partner(orbits.size());
    for (int i = 0; i < static_cast<int>(canon.size()); ++i) {
        partner[i] = orbit_of[zig_reverse(map, canon[i].states[0])];
        if (partner[i] == i)
            throw InvariantViolation("self-reversed zigzag found (orbit " + std::to_string(i) + ")");
    }

    struct Entry {
        int fwd, rev;
    };
    std::vector<Entry> entries;
    std::vector<char> taken(canon.size(), 0);
    for (int i = 0; i < static_cast<int>(canon.size()); ++i) {
        if (taken[i]) continue;
        int j = partner[i];
        taken[i] = taken[j] = 1;
        if (state_key(map, canon[j].states[0]) < state_key(map, canon[i].states[0]))
            entries.push_back({j, i});
        else
            entries.push_back({i, j});
    }
    std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
        return state_key(map, canon[a.fwd].states[0]) < state_key(map, canon[b.fwd].states[0]);
    });

    ZigzagSet zs;
    zs.locate_.resize(ns);
    for (int p = 0; p < static_cast<int>(entries.size()); ++p) {
        ZigzagSet::Pair pr{canon[entries[p].fwd], canon[entries[p].rev]};
        for (int pos = 0; pos < pr.fwd.length(); ++pos)
            zs.locate_[pr.fwd.states[pos]] = {p, 0, pos};
        for (int pos = 0; pos < pr.rev.length(); ++pos)
            zs.locate_[pr.rev.states[pos]] = {p, 1, pos};
        zs.pairs_.push_back(std::move(pr));
    }
    return zs;
}

Zigzag trace_zigzag(const SurfaceMap& map, Edge e1, Edge e2) {
    if (e1 < 0 || e2 < 0 || e1 >= map.edge_count() || e2 >= map.edge_count() || e1 == e2)
        throw EdgesNotCofacial("seed must be two distinct edges");
    // find the seed state: a traversal of e1 whose within-face successor is e2
    for (Side s : {map.sides_of(e1).first, map.sides_of(e1).second}) {
        for (int d = 0; d < 2; ++d) {
            State st = make_state(s, d);
            if (map.edge_of(state_side(within_face_next(st))) == e2) {
                std::vector<State> orb;
                State x = st;
                do {
                    orb.push_back(x);
                    x = zig_next(map, x);
                } while (x != st);
                return Zigzag{std::move(orb)};
            }
        }
    }
    throw EdgesNotCofacial("edges " + std::to_string(e1) + " and " + std::to_string(e2) +
                           " do not lie on a common face");
}

bool is_z_knotted(const SurfaceMap& map) { return all_zigzags(map).k() == 1; }

}  // namespace zz
