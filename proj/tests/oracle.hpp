#pragma once

// Test-only zigzag oracle, independent of the flag machinery: works directly
// on vertex triples, so it is valid exactly for simple (strict) maps. Used to
// cross-check orbit structure computed by the library.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

struct TriMap {
    std::vector<std::array<std::string, 3>> faces;
    // unordered edge -> the (exactly two) faces containing it
    std::map<std::pair<std::string, std::string>, std::vector<int>> edge_faces;

    explicit TriMap(std::vector<std::array<std::string, 3>> fs) : faces(std::move(fs)) {
        for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            for (int i = 0; i < 3; ++i) {
                auto e = key(faces[f][i], faces[f][(i + 1) % 3]);
                edge_faces[e].push_back(f);
            }
        for (auto& [e, fs2] : edge_faces)
            if (fs2.size() != 2) throw std::runtime_error("oracle: not a closed surface");
    }

    static std::pair<std::string, std::string> key(std::string a, std::string b) {
        if (b < a) std::swap(a, b);
        return {a, b};
    }

    std::string third(int f, const std::string& u, const std::string& v) const {
        for (const auto& x : faces[f])
            if (x != u && x != v) return x;
        throw std::runtime_error("oracle: edge not on face");
    }

    int other_face(const std::string& u, const std::string& v, int f) const {
        const auto& fs2 = edge_faces.at(key(u, v));
        return fs2[0] == f ? fs2[1] : fs2[0];
    }

    // state: directed edge (u -> v) inside face f; the next edge is (v -> w)
    struct State {
        std::string u, v;
        int f;
        bool operator<(const State& o) const {
            return std::tie(u, v, f) < std::tie(o.u, o.v, o.f);
        }
        bool operator==(const State& o) const = default;
    };

    State step(const State& s) const {
        std::string w = third(s.f, s.u, s.v);
        return {s.v, w, other_face(s.v, w, s.f)};
    }

    // multiset of zigzag lengths, one entry per reversal pair
    std::vector<int> pair_lengths() const {
        std::set<State> seen;
        std::vector<int> lens;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            for (int i = 0; i < 3; ++i) {
                for (int d = 0; d < 2; ++d) {
                    State s0{faces[f][d ? (i + 1) % 3 : i], faces[f][d ? i : (i + 1) % 3], f};
                    if (seen.count(s0)) continue;
                    int len = 0;
                    State s = s0;
                    do {
                        seen.insert(s);
                        s = step(s);
                        ++len;
                    } while (!(s == s0));
                    lens.push_back(len);
                }
            }
        }
        // orbits come in reversal pairs of equal length
        std::sort(lens.begin(), lens.end());
        std::vector<int> out;
        for (std::size_t i = 0; i + 1 < lens.size(); i += 2) {
            if (lens[i] != lens[i + 1]) throw std::runtime_error("oracle: unpaired orbit");
            out.push_back(lens[i]);
        }
        return out;
    }
};

}  // namespace oracle
