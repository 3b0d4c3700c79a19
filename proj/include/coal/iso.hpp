#pragma once

#include <string>

#include "coal/graph.hpp"

namespace coal {

// Certificate of the isomorphism class: the graph6 encoding of the
// lexicographically minimal upper-triangle bit string over all vertex
// orderings that sort degrees ascending. Equal certificates <=> isomorphic.
std::string canonical_certificate(const Graph& g, int cap = kDefaultIsoCap);

// The graph the certificate decodes to (the class representative).
Graph canonical_form(const Graph& g, int cap = kDefaultIsoCap);

bool are_isomorphic(const Graph& a, const Graph& b, int cap = kDefaultIsoCap);

}  // namespace coal
