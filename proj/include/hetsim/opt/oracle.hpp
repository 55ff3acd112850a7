#pragma once

#include "hetsim/opt/builder.hpp"

namespace hetsim::opt {

/// Objective to score a complete assignment with. `up` is the resolved
/// priority vector; `prioritized` selects which PF objective shape applies;
/// psi > 0 additionally rejects assignments whose normal users fall below
/// the floor.
struct OracleObjective {
    Approach approach = Approach::WSRMax;
    bool prioritized = false;
    std::vector<double> up;
    double psi = 0.0;
};

struct OracleResult {
    bool feasible = false;
    double objective = 0.0;
    std::vector<std::uint8_t> x;  // [k][n][b] bitmap
    std::vector<double> sinr;     // per user
    std::uint64_t assignments_examined = 0;
};

/// Upper bound on the enumeration: (K+1)^(N*B).
double oracle_search_space(const net::Scenario& s);

/// Ground truth by exhaustive enumeration of every assignment satisfying
/// the service, exclusivity and power constraints, scored with exact SINRs
/// and the true logarithm (no piecewise error). Ties resolve to the
/// lexicographically smallest assignment list (earliest (k, n, b) triples
/// first). Throws std::invalid_argument when the search space exceeds 1e7.
OracleResult oracle_assign(const net::Scenario& s, const net::ChannelRealization& ch,
                           const OracleObjective& objective);

}  // namespace hetsim::opt
