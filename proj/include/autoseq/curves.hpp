#pragma once

#include <string>
#include <utility>
#include <vector>

#include "autoseq/folding.hpp"

namespace autoseq {

struct Point {
    long long x = 0, y = 0;
    bool operator==(const Point&) const = default;
};

// Path on Z^2: starts at the origin, first edge along +x, then one turn per letter.
struct LatticePath {
    std::vector<Point> vertices;
    std::size_t edges() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    bool closed() const { return vertices.size() > 1 && vertices.front() == vertices.back(); }
};

LatticePath path_from_turns(const Word& w);
bool is_self_avoiding(const LatticePath& p);
double diameter(const LatticePath& p, std::size_t L);          // first L edges
double sausage_area(const LatticePath& p, std::size_t L, double eps);
// Monte-Carlo estimate of the same area, for cross-checking
double sausage_area_mc(const LatticePath& p, std::size_t L, double eps, std::size_t samples, unsigned seed);

struct DimensionEstimate {
    std::vector<std::size_t> lengths;
    std::vector<double> values;   // log area / log diameter
    double estimate = 0;          // min over the last three values
};
DimensionEstimate dimension_estimate(const LatticePath& p, const std::vector<std::size_t>& schedule, double eps);

struct PartialSumCheck {
    std::vector<int> s, t;   // x increment of edge 2k, y increment of edge 2k+1
    long long max_s = 0, max_t = 0;
    double bound = 0;        // (2 + sqrt 2) sqrt(N/2)
    bool holds = false;
};
// dragon path with N edges
PartialSumCheck rs_partial_sum_check(const SignSpec& signs, std::size_t N);

std::string to_svg(const LatticePath& p, double stroke = 0.25, const std::string& colour = "black");

}  // namespace autoseq
