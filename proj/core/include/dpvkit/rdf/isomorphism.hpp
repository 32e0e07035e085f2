#pragma once

#include <cstddef>

#include "dpvkit/error.hpp"
#include "dpvkit/rdf/graph.hpp"

namespace dpvkit::rdf {

class BlankNodeLimitError : public Error {
public:
    BlankNodeLimitError(std::size_t count, std::size_t limit);

    std::size_t count() const noexcept { return count_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t count_;
    std::size_t limit_;
};

/// True iff some bijection over blank node labels makes the triple sets
/// equal. Exact backtracking search, pruned by blank-node signatures; meant
/// for fixture-scale graphs. Throws BlankNodeLimitError when either graph
/// has more than `max_blank_nodes` blank nodes.
bool graph_isomorphic(const Graph& a, const Graph& b, std::size_t max_blank_nodes = 64);

}  // namespace dpvkit::rdf
