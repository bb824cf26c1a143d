#ifndef ATLASGRAPH_PI1_HPP
#define ATLASGRAPH_PI1_HPP

#include <utility>
#include <vector>

#include "atlasgraph/cycles.hpp"
#include "atlasgraph/graph.hpp"

namespace atlasgraph {

// Word in a free group: (generator index, exponent +1/-1) letters.
struct GroupWord {
    std::vector<std::pair<int, int>> letters;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

// Free presentation of the fundamental group of a connected labeled graph.
// One generator per non-tree edge of the multigraph expansion; each generator
// is realized by a closed walk through the spanning tree and that edge. The
// relator set is empty.
struct FreeGroupPresentation {
    Multigraph multigraph;                  // expansion the walks live in
    std::vector<EdgeWalk> generator_walks;  // closed walks at the basepoint
    int basepoint = 0;

    int generator_count() const { return static_cast<int>(generator_walks.size()); }

    friend bool operator==(const FreeGroupPresentation&, const FreeGroupPresentation&) = default;
};

// Requires g connected and 0 <= basepoint < |V|; throws DisconnectedError or
// BadBasepointError. Generators follow the ascending order of non-tree edges
// in the deterministic spanning tree.
FreeGroupPresentation presentation(const LabeledGraph& g, int basepoint);

// Unique freely reduced form: no letter is followed by its inverse.
GroupWord reduce_word(const GroupWord& w);

int group_rank(const FreeGroupPresentation& p);

bool is_trivial(const FreeGroupPresentation& p);

}  // namespace atlasgraph

#endif
