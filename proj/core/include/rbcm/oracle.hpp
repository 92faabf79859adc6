#pragma once

// Definition-level enumeration of balanced regular Cayley maps on a finite
// abelian p-group, one record per isomorphism class.
//
// A map is determined up to isomorphism by an anchor w_1 and the automorphism
// sigma extending rho. Writing t for the first index with <w_1..w_t> = G, the
// pair is encoded by the relation lattice of (w_1..w_t) in Hermite form and the
// coordinates of w_{t+1} = sigma(w_t). Every such pair is enumerated once; the
// class representative is the pair whose encoding is least over all anchors.

#include <vector>

#include "rbcm/cayley.hpp"
#include "rbcm/structure.hpp"

namespace rbcm {

inline constexpr Int kDefaultOracleBudget = 128;

/// Group-order cap: RBCM_ORACLE_BUDGET when set, else 128.
Int oracle_budget();

struct OracleOptions {
  Int budget = 0;  // 0: oracle_budget()
  int jobs = 1;
};

/// Type I maps of valence `valence` (= 2n) or, on elementary abelian 2-groups,
/// type II maps of valence `valence` (= n).
std::vector<CayleyMapRecord> brute_force_rbcms(const AbelianType& group, int valence,
                                               const OracleOptions& opts = {});

}  // namespace rbcm
