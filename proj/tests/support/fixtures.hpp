#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "latinrect/common.hpp"

namespace fixtures {

/// (k, n) -> reduced count, as frozen from the brute-force oracle.
inline std::map<std::pair<unsigned, unsigned>, latinrect::BigInt> reduced_counts()
{
    std::ifstream in(std::string(LATINRECT_FIXTURE_DIR) + "/reduced_counts.csv");
    if (!in) throw std::runtime_error("missing fixture reduced_counts.csv");
    std::map<std::pair<unsigned, unsigned>, latinrect::BigInt> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'k') continue;
        std::stringstream row(line);
        std::string k, n, v;
        std::getline(row, k, ',');
        std::getline(row, n, ',');
        std::getline(row, v, ',');
        out[{static_cast<unsigned>(std::stoul(k)), static_cast<unsigned>(std::stoul(n))}] = latinrect::BigInt(v);
    }
    return out;
}

}  // namespace fixtures
