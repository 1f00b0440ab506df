#pragma once

#include <cstdint>
#include <vector>

#include "zz/surface_map.hpp"

namespace zz {

// A zigzag state is a directed edge paired with the face in which it and the
// next edge lie: state = 2*side + dir, dir 0 = first corner -> second corner.
// There are 6F = 4E states and the step map is a bijection on them.
using State = int;

inline Side state_side(State st) { return st >> 1; }
inline int state_dir(State st) { return st & 1; }
inline State make_state(Side s, int dir) { return 2 * s + dir; }

State zig_next(const SurfaceMap& map, State st);
State zig_prev(const SurfaceMap& map, State st);
/// reversal involution: orbit of zig_reverse(st) is the reversed zigzag
State zig_reverse(const SurfaceMap& map, State st);

struct DirectedEdgeRef {
    Edge edge;
    Vertex tail;
    Vertex head;
};
DirectedEdgeRef state_directed_edge(const SurfaceMap& map, State st);

/// Cyclic state sequence with minimal period, rotated to a canonical start.
struct Zigzag {
    std::vector<State> states;
    int length() const { return static_cast<int>(states.size()); }
};

/// All zigzags of a map, grouped into reversal pairs in canonical order.
class ZigzagSet {
public:
    struct Pair {
        Zigzag fwd;  // canonical orientation of the pair
        Zigzag rev;
    };
    struct StateLoc {
        int pair;
        int orient;  // 0 = fwd, 1 = rev
        int pos;
    };

    int k() const { return static_cast<int>(pairs_.size()); }
    const std::vector<Pair>& pairs() const { return pairs_; }
    const Zigzag& oriented(int pair, int orient) const {
        return orient ? pairs_[pair].rev : pairs_[pair].fwd;
    }
    const StateLoc& locate(State st) const { return locate_[st]; }

private:
    friend ZigzagSet all_zigzags(const SurfaceMap& map);
    std::vector<Pair> pairs_;
    std::vector<StateLoc> locate_;
};

ZigzagSet all_zigzags(const SurfaceMap& map);

/// Unique zigzag through the ordered seed (e1, e2); presented starting at e1.
Zigzag trace_zigzag(const SurfaceMap& map, Edge e1, Edge e2);

bool is_z_knotted(const SurfaceMap& map);

}  // namespace zz
