#include <echcap/lattice.hpp>

#include <echcap/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace echcap {

namespace {

using std::int64_t;
using std::size_t;

int64_t icross(const LatticeVector& a, const LatticeVector& b) {
    return a.dx * b.dy - a.dy * b.dx;
}

int64_t idot(const LatticeVector& a, const LatticeVector& b) {
    return a.dx * b.dx + a.dy * b.dy;
}

LatticeVector primitive_of(const LatticeVector& v) {
    const int64_t g = std::gcd(std::abs(v.dx), std::abs(v.dy));
    return {v.dx / g, v.dy / g};
}

// Clockwise angular order starting from (0,1).
bool clockwise_less(const LatticeVector& a, const LatticeVector& b) {
    auto half = [](const LatticeVector& v) {
        return (v.dx > 0 || (v.dx == 0 && v.dy > 0)) ? 0 : 1;
    };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return icross(a, b) < 0;
}

bool lex_less_edges(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(), [](const LatticeVector& u, const LatticeVector& v) {
            return u.dx < v.dx || (u.dx == v.dx && u.dy < v.dy);
        });
}

// Walks the edge list from (0,0); returns vertices (loop start repeated is
// omitted) plus the bounding box minimum.
struct Walk {
    std::vector<LatticePoint> vertices;
    int64_t minx = 0;
    int64_t miny = 0;
};

Walk walk_edges(const std::vector<LatticeVector>& edges) {
    Walk w;
    int64_t x = 0, y = 0;
    w.vertices.push_back({0, 0});
    for (const LatticeVector& e : edges) {
        x += e.dx;
        y += e.dy;
        w.minx = std::min(w.minx, x);
        w.miny = std::min(w.miny, y);
        w.vertices.push_back({x, y});
    }
    w.vertices.pop_back();  // closing vertex duplicates the start
    return w;
}

int64_t twice_area_abs(const std::vector<LatticeVector>& edges) {
    int64_t x = 0, y = 0, s = 0;
    for (const LatticeVector& e : edges) {
        // cross of consecutive vertices (x,y) and (x+dx, y+dy)
        s += x * (y + e.dy) - (x + e.dx) * y;
        x += e.dx;
        y += e.dy;
    }
    return std::abs(s);
}

int64_t boundary_points(const std::vector<LatticeVector>& edges) {
    int64_t b = 0;
    for (const LatticeVector& e : edges) {
        b += std::gcd(std::abs(e.dx), std::abs(e.dy));
    }
    return b;
}

int64_t count_from_edges(const std::vector<LatticeVector>& edges) {
    if (edges.empty()) return 1;
    return (twice_area_abs(edges) + boundary_points(edges)) / 2 + 1;
}

std::vector<LatticeVector> lex_min_rotation(std::vector<LatticeVector> edges) {
    if (edges.size() < 2) return edges;
    std::vector<LatticeVector> best = edges;
    for (size_t r = 1; r < edges.size(); ++r) {
        std::rotate(edges.begin(), edges.begin() + 1, edges.end());
        if (lex_less_edges(edges, best)) best = edges;
    }
    return best;
}

}  // namespace

void validate_loop(const ConvexLoop& loop) {
    int64_t sx = 0, sy = 0;
    for (const LatticeVector& e : loop.edges) {
        if (e.dx == 0 && e.dy == 0) {
            throw PreconditionError("ConvexLoop: zero edge vector");
        }
        sx += e.dx;
        sy += e.dy;
    }
    if (sx != 0 || sy != 0) {
        throw PreconditionError("ConvexLoop: edges do not close");
    }
    if (loop.edges.empty()) return;

    // Collapse to cyclically-distinct primitive direction runs.
    std::vector<LatticeVector> runs;
    for (const LatticeVector& e : loop.edges) {
        const LatticeVector p = primitive_of(e);
        if (runs.empty() || !(runs.back() == p)) runs.push_back(p);
    }
    if (runs.size() > 1 && runs.front() == runs.back()) runs.pop_back();

    std::set<std::pair<int64_t, int64_t>> seen;
    for (const LatticeVector& r : runs) {
        if (!seen.insert({r.dx, r.dy}).second) {
            throw PreconditionError("ConvexLoop: direction runs are not contiguous");
        }
    }
    if (runs.size() == 1) {
        throw PreconditionError("ConvexLoop: edges do not close");
    }
    for (size_t i = 0; i < runs.size(); ++i) {
        const LatticeVector& a = runs[i];
        const LatticeVector& b = runs[(i + 1) % runs.size()];
        const int64_t c = icross(a, b);
        if (c > 0 || (c == 0 && idot(a, b) > 0)) {
            throw PreconditionError("ConvexLoop: edges are not in clockwise convex order");
        }
    }
}

ConvexLoop canonical_loop(ConvexLoop loop) {
    validate_loop(loop);
    const Walk before = walk_edges(loop.edges);
    const int64_t ox = loop.base.x + before.minx;
    const int64_t oy = loop.base.y + before.miny;
    loop.edges = lex_min_rotation(std::move(loop.edges));
    const Walk after = walk_edges(loop.edges);
    loop.base = {ox - after.minx, oy - after.miny};
    return loop;
}

std::int64_t enclosed_count(const ConvexLoop& loop) {
    validate_loop(loop);
    return count_from_edges(loop.edges);
}

namespace {

// Region support function with integer values: vertices shifted to an
// interior origin (the vertex centroid) and scaled by the common denominator
// Q, so every ell value of an integer vector is an integer and positive.
struct ScaledNorm {
    std::vector<std::pair<int64_t, int64_t>> pts;
    Int Q;

    int64_t ell(int64_t dx, int64_t dy) const {
        int64_t best = std::numeric_limits<int64_t>::min();
        for (const auto& [px, py] : pts) {
            best = std::max(best, dx * px + dy * py);
        }
        return best;
    }
};

ScaledNorm make_scaled_norm(const MomentRegion& r) {
    const auto& verts = r.vertices();
    Rational cx = 0, cy = 0;
    for (const Point& p : verts) {
        cx += p.x;
        cy += p.y;
    }
    cx /= static_cast<int>(verts.size());
    cy /= static_cast<int>(verts.size());

    Int q = 1;
    for (const Point& p : verts) {
        q = lcm(q, denominator(p.x - cx));
        q = lcm(q, denominator(p.y - cy));
    }
    ScaledNorm norm;
    norm.Q = q;
    const Int limit = Int(1) << 40;
    for (const Point& p : verts) {
        const Rational sx = (p.x - cx) * q;
        const Rational sy = (p.y - cy) * q;
        const Int ix = numerator(sx);
        const Int iy = numerator(sy);
        if (abs(ix) > limit || abs(iy) > limit) {
            throw ResourceError("capacities: region coordinates too large for exact search");
        }
        norm.pts.emplace_back(ix.convert_to<int64_t>(), iy.convert_to<int64_t>());
    }
    return norm;
}

// Largest s (in scaled units) with the axis-aligned square of half-side s
// around the origin inside the region; every edge then costs >= s |v|_1.
Rational inscribed_square_half_side(const ScaledNorm& norm) {
    Rational best = -1;
    const size_t n = norm.pts.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& [ax, ay] = norm.pts[i];
        const auto& [bx, by] = norm.pts[(i + 1) % n];
        const int64_t nx = by - ay;        // outward normal of a CCW edge
        const int64_t ny = -(bx - ax);
        const int64_t c = nx * ax + ny * ay;
        const Rational s = Rational(c, std::abs(nx) + std::abs(ny));
        if (best < 0 || s < best) best = s;
    }
    return best;
}

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

struct SearchState {
    int K = 0;
    bool exact = false;
    std::vector<int64_t> best;            // scaled min cost, count >= k+1
    std::vector<ConvexLoop> wit;
    std::vector<int64_t> best_exact;      // scaled min cost, count == k+1

    explicit SearchState(int k, bool exact_flag)
        : K(k), exact(exact_flag), best(static_cast<size_t>(k) + 1, kInf),
          wit(static_cast<size_t>(k) + 1),
          best_exact(exact_flag ? static_cast<size_t>(k) + 1 : 0, kInf) {}

    int64_t prune_bound() const {
        int64_t b = best[static_cast<size_t>(K)];
        for (const int64_t e : best_exact) b = std::max(b, e);
        return b;
    }

    void consider(int64_t cost, const std::vector<LatticeVector>& edges) {
        const int64_t count = count_from_edges(edges);
        std::vector<LatticeVector> canon;
        bool have_canon = false;
        const int64_t kmax = std::min<int64_t>(K, count - 1);
        for (int64_t k = 0; k <= kmax; ++k) {
            auto& b = best[static_cast<size_t>(k)];
            if (cost > b) continue;
            if (!have_canon) {
                canon = lex_min_rotation(edges);
                have_canon = true;
            }
            if (cost < b || lex_less_edges(canon, wit[static_cast<size_t>(k)].edges)) {
                b = cost;
                const Walk w = walk_edges(canon);
                wit[static_cast<size_t>(k)] = {{-w.minx, -w.miny}, canon};
            }
        }
        if (exact && count - 1 <= K) {
            auto& e = best_exact[static_cast<size_t>(count - 1)];
            e = std::min(e, cost);
        }
    }

    void merge(const SearchState& o) {
        for (size_t k = 0; k < best.size(); ++k) {
            if (o.best[k] < best[k] ||
                (o.best[k] == best[k] && lex_less_edges(o.wit[k].edges, wit[k].edges))) {
                best[k] = o.best[k];
                wit[k] = o.wit[k];
            }
        }
        for (size_t k = 0; k < best_exact.size(); ++k) {
            best_exact[k] = std::min(best_exact[k], o.best_exact[k]);
        }
    }
};

// Point, segment and rectangle loops: cheap feasible upper bounds for every
// k <= K, so the enumeration always has a finite budget to prune against.
void seed_rectangles(SearchState& st, int64_t w1, int64_t w2) {
    const int K = st.K;
    std::vector<LatticeVector> edges;
    for (int m = 0; m <= K; ++m) {
        for (int n = 0; n <= K; ++n) {
            edges.clear();
            for (int i = 0; i < n; ++i) edges.push_back({0, 1});
            for (int i = 0; i < m; ++i) edges.push_back({1, 0});
            for (int i = 0; i < n; ++i) edges.push_back({0, -1});
            for (int i = 0; i < m; ++i) edges.push_back({-1, 0});
            st.consider(m * w1 + n * w2, edges);
        }
    }
}

struct DfsContext {
    const ScaledNorm* norm = nullptr;
    const std::vector<LatticeVector>* dirs = nullptr;
    const std::vector<int64_t>* ell = nullptr;
    std::atomic<std::uint64_t>* nodes = nullptr;
    std::uint64_t budget = 0;
};

void dfs(const DfsContext& ctx, SearchState& st, size_t j0, int64_t sx, int64_t sy,
         int64_t cost, std::vector<LatticeVector>& edges) {
    if (ctx.nodes->fetch_add(1, std::memory_order_relaxed) >= ctx.budget) {
        throw ResourceError("capacities: enumeration budget exceeded");
    }
    if (sx == 0 && sy == 0) st.consider(cost, edges);

    const auto& dirs = *ctx.dirs;
    for (size_t j = j0; j < dirs.size(); ++j) {
        const LatticeVector d = dirs[j];
        const int64_t ej = (*ctx.ell)[j];
        int64_t nsx = sx, nsy = sy, ncost = cost;
        size_t pushed = 0;
        while (true) {
            nsx += d.dx;
            nsy += d.dy;
            ncost += ej;
            const int64_t lb = (nsx == 0 && nsy == 0) ? 0 : ctx.norm->ell(-nsx, -nsy);
            // cost + lb is nondecreasing in the multiplicity, so break.
            if (ncost + lb > st.prune_bound()) break;
            edges.push_back(d);
            ++pushed;
            dfs(ctx, st, j + 1, nsx, nsy, ncost, edges);
        }
        edges.resize(edges.size() - pushed);
    }
}

}  // namespace

CapacitySequence capacities(const MomentRegion& r, int K, const CapacityOptions& opts) {
    if (K < 0) {
        throw PreconditionError("capacities: K must be nonnegative");
    }
    const ScaledNorm norm = make_scaled_norm(r);
    const int64_t w1 = norm.ell(1, 0) + norm.ell(-1, 0);
    const int64_t w2 = norm.ell(0, 1) + norm.ell(0, -1);

    SearchState seed(K, opts.exact_count);
    seed_rectangles(seed, w1, w2);
    const int64_t bound0 = seed.prune_bound();

    // Any edge of a useful loop costs <= bound0 and >= s |v|_1.
    const Rational s = inscribed_square_half_side(norm);
    const Int radius_int = (Int(bound0) * denominator(s) + numerator(s) - 1) / numerator(s);
    if (radius_int > 1'000'000) {
        throw ResourceError("capacities: direction radius exceeds enumeration budget");
    }
    const int64_t radius = radius_int.convert_to<int64_t>();

    std::vector<LatticeVector> dirs;
    for (int64_t dx = -radius; dx <= radius; ++dx) {
        const int64_t rem = radius - std::abs(dx);
        for (int64_t dy = -rem; dy <= rem; ++dy) {
            if (dx == 0 && dy == 0) continue;
            if (std::gcd(std::abs(dx), std::abs(dy)) != 1) continue;
            if (norm.ell(dx, dy) > bound0) continue;
            dirs.push_back({dx, dy});
            if (dirs.size() > opts.max_directions) {
                throw ResourceError("capacities: direction set exceeds enumeration budget");
            }
        }
    }
    std::sort(dirs.begin(), dirs.end(), clockwise_less);

    std::vector<int64_t> ell_cache;
    ell_cache.reserve(dirs.size());
    for (const LatticeVector& d : dirs) ell_cache.push_back(norm.ell(d.dx, d.dy));

    std::atomic<std::uint64_t> nodes{0};
    DfsContext ctx{&norm, &dirs, &ell_cache, &nodes, opts.node_budget};

    SearchState result = seed;
    if (!opts.parallel || dirs.size() < 2) {
        std::vector<LatticeVector> edges;
        dfs(ctx, result, 0, 0, 0, 0, edges);
    } else {
        // Partition on the first used direction; each task owns its state and
        // the merge below is a fixed-order min-reduction, so the outcome is
        // identical to the serial run.
        std::vector<SearchState> task_states(dirs.size(), seed);
        std::atomic<size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        const unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&]() {
                try {
                    std::vector<LatticeVector> edges;
                    for (size_t j = next.fetch_add(1); j < dirs.size(); j = next.fetch_add(1)) {
                        SearchState& st = task_states[j];
                        const LatticeVector d = dirs[j];
                        const int64_t ej = ell_cache[j];
                        int64_t nsx = 0, nsy = 0, ncost = 0;
                        edges.clear();
                        while (true) {
                            nsx += d.dx;
                            nsy += d.dy;
                            ncost += ej;
                            const int64_t lb =
                                (nsx == 0 && nsy == 0) ? 0 : norm.ell(-nsx, -nsy);
                            if (ncost + lb > st.prune_bound()) break;
                            edges.push_back(d);
                            dfs(ctx, st, j + 1, nsx, nsy, ncost, edges);
                        }
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
        for (const SearchState& st : task_states) result.merge(st);
    }

    CapacitySequence seq;
    for (int k = 0; k <= K; ++k) {
        const int64_t c = result.best[static_cast<size_t>(k)];
        seq.values.emplace_back(Int(c), norm.Q);
        seq.witnesses.push_back(result.wit[static_cast<size_t>(k)]);
    }
    if (opts.exact_count) {
        std::vector<Rational> exact;
        for (int k = 0; k <= K; ++k) {
            exact.emplace_back(Int(result.best_exact[static_cast<size_t>(k)]), norm.Q);
        }
        seq.exact_count_values = std::move(exact);
    }
    return seq;
}

namespace {

// Exhaustive enumeration of clockwise convex loops with x-extent <= W and
// y-extent <= H (up to translation). `prune` may cut a multiplicity run, but
// only when the run provably cannot improve the running minimum.
void enumerate_box_loops(
    int64_t W, int64_t H,
    const std::function<bool(const std::vector<LatticeVector>&, const Rational&)>& visit,
    const SupportNorm& norm,
    const std::function<bool(const Rational&)>& hopeless) {
    std::vector<LatticeVector> dirs;
    for (int64_t dx = -W; dx <= W; ++dx) {
        for (int64_t dy = -H; dy <= H; ++dy) {
            if (dx == 0 && dy == 0) continue;
            if (std::gcd(std::abs(dx), std::abs(dy)) != 1) continue;
            dirs.push_back({dx, dy});
        }
    }
    std::sort(dirs.begin(), dirs.end(), clockwise_less);
    std::vector<Rational> ell_cache;
    ell_cache.reserve(dirs.size());
    for (const LatticeVector& d : dirs) ell_cache.push_back(norm.ell(d));

    std::vector<LatticeVector> edges;
    // posx/negx: total positive / negative x displacement, similarly y.
    std::function<void(size_t, int64_t, int64_t, int64_t, int64_t, const Rational&)> rec =
        [&](size_t j0, int64_t posx, int64_t negx, int64_t posy, int64_t negy,
            const Rational& cost) {
            if (posx == negx && posy == negy) {
                if (!visit(edges, cost)) return;
            }
            for (size_t j = j0; j < dirs.size(); ++j) {
                const LatticeVector d = dirs[j];
                int64_t px = posx, nx = negx, py = posy, ny = negy;
                Rational c = cost;
                size_t pushed = 0;
                while (true) {
                    px += std::max<int64_t>(d.dx, 0);
                    nx += std::max<int64_t>(-d.dx, 0);
                    py += std::max<int64_t>(d.dy, 0);
                    ny += std::max<int64_t>(-d.dy, 0);
                    if (px > W || nx > W || py > H || ny > H) break;
                    c += ell_cache[j];
                    // ell >= 0 with an interior origin, so the cost along a
                    // branch only grows; cutting a hopeless run is exhaustive
                    // for the minimum.
                    if (hopeless(c)) break;
                    edges.push_back(d);
                    ++pushed;
                    rec(j + 1, px, nx, py, ny, c);
                }
                edges.resize(edges.size() - pushed);
            }
        };
    rec(0, 0, 0, 0, 0, Rational(0));
}

Point region_centroid(const MomentRegion& r) {
    Rational cx = 0, cy = 0;
    for (const Point& p : r.vertices()) {
        cx += p.x;
        cy += p.y;
    }
    const int n = static_cast<int>(r.vertices().size());
    return {cx / n, cy / n};
}

}  // namespace

CapacitySequence brute_force_capacities(const MomentRegion& r, int K, int N) {
    if (K < 0 || N <= 0) {
        throw PreconditionError("brute_force_capacities: K >= 0 and N > 0 required");
    }
    // Interior origin makes every ell value nonnegative, so the running cost
    // is nondecreasing along a branch and min-pruning stays exhaustive.
    const SupportNorm norm(r, region_centroid(r));
    const int64_t extent = 2 * static_cast<int64_t>(N);

    std::vector<Rational> best(static_cast<size_t>(K) + 1, Rational(-1));
    std::vector<ConvexLoop> wit(static_cast<size_t>(K) + 1);

    auto visit = [&](const std::vector<LatticeVector>& edges, const Rational& cost) {
        const int64_t count = count_from_edges(edges);
        std::vector<LatticeVector> canon;
        bool have_canon = false;
        const int64_t kmax = std::min<int64_t>(K, count - 1);
        for (int64_t k = 0; k <= kmax; ++k) {
            auto& b = best[static_cast<size_t>(k)];
            if (b >= 0 && cost > b) continue;
            if (!have_canon) {
                canon = lex_min_rotation(edges);
                have_canon = true;
            }
            if (b < 0 || cost < b || lex_less_edges(canon, wit[static_cast<size_t>(k)].edges)) {
                b = cost;
                const Walk w = walk_edges(canon);
                wit[static_cast<size_t>(k)] = {{-w.minx, -w.miny}, canon};
            }
        }
        // Keep enumerating siblings; the caller's multiplicity loop is cut
        // separately when the cost can no longer matter.
        const Rational& bk = best[static_cast<size_t>(K)];
        return !(bk >= 0 && cost > bk);
    };
    auto hopeless = [&](const Rational& cost) {
        const Rational& bk = best[static_cast<size_t>(K)];
        return bk >= 0 && cost > bk;
    };

    // Visit the axis-aligned loops first; they are members of the box and
    // give the pruning a finite budget from the start.
    const int64_t side = std::min<int64_t>(extent, K);
    for (int64_t m = 0; m <= side; ++m) {
        for (int64_t n = 0; n <= side; ++n) {
            std::vector<LatticeVector> edges;
            for (int64_t i = 0; i < n; ++i) edges.push_back({0, 1});
            for (int64_t i = 0; i < m; ++i) edges.push_back({1, 0});
            for (int64_t i = 0; i < n; ++i) edges.push_back({0, -1});
            for (int64_t i = 0; i < m; ++i) edges.push_back({-1, 0});
            visit(edges, norm.loop_length(edges));
        }
    }
    enumerate_box_loops(extent, extent, visit, norm, hopeless);

    CapacitySequence seq;
    for (int k = 0; k <= K; ++k) {
        seq.values.push_back(best[static_cast<size_t>(k)]);
        seq.witnesses.push_back(wit[static_cast<size_t>(k)]);
    }
    return seq;
}

std::pair<ConvexLoop, Rational> minimal_witness_in_unit_square(const MomentRegion& r) {
    const SupportNorm norm(r, region_centroid(r));
    Rational best = -1;
    ConvexLoop best_loop;
    auto visit = [&](const std::vector<LatticeVector>& edges, const Rational& cost) {
        if (count_from_edges(edges) < 3) return true;
        if (best < 0 || cost < best) {
            best = cost;
            const auto canon = lex_min_rotation(edges);
            const Walk w = walk_edges(canon);
            best_loop = {{-w.minx, -w.miny}, canon};
        } else if (cost == best) {
            const auto canon = lex_min_rotation(edges);
            if (lex_less_edges(canon, best_loop.edges)) {
                const Walk w = walk_edges(canon);
                best_loop = {{-w.minx, -w.miny}, canon};
            }
        }
        return true;
    };
    enumerate_box_loops(1, 1, visit, norm, [](const Rational&) { return false; });
    return {best_loop, best};
}

}  // namespace echcap
