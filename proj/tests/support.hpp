#pragma once

#include "ldp/core.hpp"

#include <array>
#include <mutex>
#include <vector>

namespace ldp {
struct CandidateRecord;
}

namespace ldp::test {

inline WeightSystem ws(Int a, Int b, Int c, Int d) { return WeightSystem::normalize({a, b, c, d}); }
inline Candidate cand(std::array<Int, 4> w, Int d) { return Candidate::make(WeightSystem::normalize(w), d); }

// Full index 1..10 enumeration at the default weight bound, computed once per process.
const std::vector<CandidateRecord>& full_enumeration();

}  // namespace ldp::test
