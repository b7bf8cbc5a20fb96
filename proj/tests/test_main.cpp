#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "ldp/search.hpp"

#include <thread>

namespace ldp::test {

const std::vector<CandidateRecord>& full_enumeration()
{
    static const std::vector<CandidateRecord> records = [] {
        SearchOptions o;
        o.threads = std::max(1U, std::thread::hardware_concurrency());
        return brute_force_enumerate(1, 10, kDefaultMaxWeight, o);
    }();
    return records;
}

}  // namespace ldp::test
