#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motdt/covers.hpp"
#include "motdt/spectrum.hpp"

namespace motdt {

enum class DivisorKind { Exceptional, Strict };

struct Divisor {
    std::string id;
    DivisorKind kind = DivisorKind::Exceptional;
    long long mult = 1;
    friend bool operator==(const Divisor&, const Divisor&) = default;
};

// Decorated dual graph of an embedded resolution. For dim = 1 the graph is a
// single point of multiplicity m (the monomial x^m).
struct ResolutionGraph {
    int dim = 2;
    std::vector<Divisor> divisors;
    std::vector<std::pair<std::string, std::string>> points;  // multi-edges allowed

    const Divisor* find(const std::string& id) const;
};

ResolutionGraph point_graph(long long m);

// Throws InvalidGraph.
void validate(const ResolutionGraph& g);

// equal up to listing order of divisors and points
bool same_graph(const ResolutionGraph& x, const ResolutionGraph& y);

struct ExceptionalStratum {
    CoverData cover;
    BranchSpec branches;            // multiplicities of the crossing divisors
    std::vector<long long> removed;  // gcd(m, m_j) per crossing point
};
std::map<std::string, ExceptionalStratum> exceptional_strata(const ResolutionGraph& g);

FracRat integrate_local(const ResolutionGraph& g);
bool thom_sebastiani_check(const ResolutionGraph& g1, const ResolutionGraph& g2, const ResolutionGraph& g12);

}  // namespace motdt
