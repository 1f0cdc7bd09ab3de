#include "autoseq/curves.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "autoseq/parallel.hpp"

namespace autoseq {

LatticePath path_from_turns(const Word& w) {
    LatticePath p;
    long long x = 0, y = 0, dx = 1, dy = 0;
    p.vertices.reserve(w.size() + 2);
    p.vertices.push_back({0, 0});
    x += dx;
    p.vertices.push_back({x, y});
    for (Symbol t : w) {
        if (t == 0) {  // L
            std::swap(dx, dy);
            dx = -dx;
        } else {
            std::swap(dx, dy);
            dy = -dy;
        }
        x += dx;
        y += dy;
        p.vertices.push_back({x, y});
    }
    return p;
}

bool is_self_avoiding(const LatticePath& p) {
    std::set<std::pair<std::pair<long long, long long>, std::pair<long long, long long>>> seen;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        auto a = std::make_pair(p.vertices[i].x, p.vertices[i].y);
        auto b = std::make_pair(p.vertices[i + 1].x, p.vertices[i + 1].y);
        if (b < a) std::swap(a, b);
        if (!seen.insert({a, b}).second) return false;
    }
    return true;
}

namespace {

long long cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Point> hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

long long dist2(const Point& a, const Point& b) {
    return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
}

double seg_dist2(double px, double py, const Point& a, const Point& b) {
    double vx = double(b.x - a.x), vy = double(b.y - a.y);
    double wx = px - a.x, wy = py - a.y;
    double len2 = vx * vx + vy * vy;
    double t = len2 > 0 ? std::clamp((wx * vx + wy * vy) / len2, 0.0, 1.0) : 0.0;
    double dx = wx - t * vx, dy = wy - t * vy;
    return dx * dx + dy * dy;
}

}  // namespace

double diameter(const LatticePath& p, std::size_t L) {
    if (L > p.edges()) throw std::invalid_argument("L exceeds the number of edges");
    std::vector<Point> pts(p.vertices.begin(), p.vertices.begin() + L + 1);
    auto h = hull(pts);
    if (h.size() == 1) return 0.0;
    if (h.size() == 2) return std::sqrt(double(dist2(h[0], h[1])));
    // rotating calipers over the counter-clockwise hull
    long long best = 0;
    std::size_t n = h.size(), j = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t ni = (i + 1) % n;
        while (std::llabs(cross(h[i], h[ni], h[(j + 1) % n])) > std::llabs(cross(h[i], h[ni], h[j])))
            j = (j + 1) % n;
        best = std::max({best, dist2(h[i], h[j]), dist2(h[ni], h[j])});
    }
    return std::sqrt(double(best));
}

double sausage_area(const LatticePath& p, std::size_t L, double eps) {
    if (!(eps > 0 && eps <= 0.4)) throw std::invalid_argument("eps must be in (0, 0.4]");
    if (L > p.edges()) throw std::invalid_argument("L exceeds the number of edges");
    if (L == 0) return 0.0;
    long long minx = p.vertices[0].x, maxx = minx, miny = p.vertices[0].y, maxy = miny;
    for (std::size_t i = 0; i <= L; ++i) {
        minx = std::min(minx, p.vertices[i].x); maxx = std::max(maxx, p.vertices[i].x);
        miny = std::min(miny, p.vertices[i].y); maxy = std::max(maxy, p.vertices[i].y);
    }
    const double pitch = eps / 8;
    const double ox = minx - eps, oy = miny - eps;
    const std::size_t W = static_cast<std::size_t>(std::ceil((maxx - minx + 2 * eps) / pitch)) + 1;
    const std::size_t Hh = static_cast<std::size_t>(std::ceil((maxy - miny + 2 * eps) / pitch)) + 1;
    std::vector<std::uint8_t> grid(W * Hh, 0);
    const double e2 = eps * eps;
    for (std::size_t i = 0; i < L; ++i) {
        const Point &a = p.vertices[i], &b = p.vertices[i + 1];
        double x0 = std::min(a.x, b.x) - eps, x1 = std::max(a.x, b.x) + eps;
        double y0 = std::min(a.y, b.y) - eps, y1 = std::max(a.y, b.y) + eps;
        std::size_t c0 = static_cast<std::size_t>(std::max(0.0, std::floor((x0 - ox) / pitch)));
        std::size_t c1 = std::min(W - 1, static_cast<std::size_t>(std::ceil((x1 - ox) / pitch)));
        std::size_t r0 = static_cast<std::size_t>(std::max(0.0, std::floor((y0 - oy) / pitch)));
        std::size_t r1 = std::min(Hh - 1, static_cast<std::size_t>(std::ceil((y1 - oy) / pitch)));
        for (std::size_t r = r0; r <= r1; ++r) {
            double cy = oy + (r + 0.5) * pitch;
            for (std::size_t c = c0; c <= c1; ++c) {
                auto& cell = grid[r * W + c];
                if (cell) continue;
                double cx = ox + (c + 0.5) * pitch;
                if (seg_dist2(cx, cy, a, b) <= e2) cell = 1;
            }
        }
    }
    std::size_t count = 0;
    for (auto v : grid) count += v;
    return static_cast<double>(count) * pitch * pitch;
}

double sausage_area_mc(const LatticePath& p, std::size_t L, double eps, std::size_t samples, unsigned seed) {
    if (L == 0) return 0.0;
    long long minx = p.vertices[0].x, maxx = minx, miny = p.vertices[0].y, maxy = miny;
    for (std::size_t i = 0; i <= L; ++i) {
        minx = std::min(minx, p.vertices[i].x); maxx = std::max(maxx, p.vertices[i].x);
        miny = std::min(miny, p.vertices[i].y); maxy = std::max(maxy, p.vertices[i].y);
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(minx - eps, maxx + eps), uy(miny - eps, maxy + eps);
    std::size_t hit = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        double x = ux(rng), y = uy(rng);
        for (std::size_t i = 0; i < L; ++i)
            if (seg_dist2(x, y, p.vertices[i], p.vertices[i + 1]) <= eps * eps) {
                ++hit;
                break;
            }
    }
    double box = (maxx - minx + 2 * eps) * (maxy - miny + 2 * eps);
    return box * static_cast<double>(hit) / static_cast<double>(samples);
}

DimensionEstimate dimension_estimate(const LatticePath& p, const std::vector<std::size_t>& schedule, double eps) {
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1]) throw std::invalid_argument("schedule must be increasing");
    DimensionEstimate d;
    d.lengths = schedule;
    d.values.resize(schedule.size());
    parallel_for(schedule.size(), [&](std::size_t i) {
        double area = sausage_area(p, schedule[i], eps);
        double diam = diameter(p, schedule[i]);
        d.values[i] = std::log(area) / std::log(diam);
    });
    std::size_t from = d.values.size() > 3 ? d.values.size() - 3 : 0;
    d.estimate = d.values.empty() ? 0.0 : *std::min_element(d.values.begin() + from, d.values.end());
    return d;
}

PartialSumCheck rs_partial_sum_check(const SignSpec& signs, std::size_t N) {
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    auto path = path_from_turns(paperfold_sequence(signs, N - 1));
    PartialSumCheck c;
    long long sx = 0, sy = 0;
    for (std::size_t k = 0; 2 * k + 1 < N; ++k) {
        int s = static_cast<int>(path.vertices[2 * k + 1].x - path.vertices[2 * k].x);
        int t = static_cast<int>(path.vertices[2 * k + 2].y - path.vertices[2 * k + 1].y);
        c.s.push_back(s);
        c.t.push_back(t);
        sx += s;
        sy += t;
        c.max_s = std::max(c.max_s, std::llabs(sx));
        c.max_t = std::max(c.max_t, std::llabs(sy));
    }
    c.bound = (2 + std::sqrt(2.0)) * std::sqrt(static_cast<double>(N) / 2);
    c.holds = c.max_s <= c.bound && c.max_t <= c.bound;
    return c;
}

std::string to_svg(const LatticePath& p, double stroke, const std::string& colour) {
    long long minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (auto& v : p.vertices) {
        minx = std::min(minx, v.x); maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y); maxy = std::max(maxy, v.y);
    }
    std::ostringstream out;
    double pad = 1;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << minx - pad << ' '
        << -(maxy + pad) << ' ' << (maxx - minx + 2 * pad) << ' ' << (maxy - miny + 2 * pad) << "\">\n"
        << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << stroke
        << "\" stroke-linejoin=\"round\" points=\"";
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) out << ' ';
        out << p.vertices[i].x << ',' << -p.vertices[i].y;  // SVG y points down
    }
    out << "\"/>\n</svg>\n";
    return out.str();
}

}  // namespace autoseq
