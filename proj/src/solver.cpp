#include "lambda_lab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "lambda_lab/errors.hpp"

namespace lambda_lab {

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::dsatur: return "dsatur";
        case Ordering::grid_sweep: return "grid-sweep";
        case Ordering::input_order: return "input-order";
    }
    return "dsatur";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::backtrack: return "backtrack";
        case Method::square_coloring: return "square-coloring";
        case Method::brute_force: return "brute-force";
    }
    return "backtrack";
}

Ordering parse_ordering(const std::string& s) {
    if (s == "dsatur") return Ordering::dsatur;
    if (s == "grid-sweep") return Ordering::grid_sweep;
    if (s == "input-order") return Ordering::input_order;
    throw ParseError("unknown ordering '" + s + "' (dsatur|grid-sweep|input-order)");
}

namespace {

using Mask = std::uint64_t;
constexpr int kMaxSpan = 63;

struct Constraint {
    Vertex other;
    std::uint8_t gap_index;  // 0: distance one (h), 1: distance two (k)
};

/// Distance-1/2 constraint structure of a graph plus static tie-break keys.
struct Model {
    std::size_t n = 0;
    int gaps[2] = {0, 0};
    std::vector<std::vector<Constraint>> cons;
    std::vector<std::size_t> square_degree;
    std::vector<Vertex> static_order;  // used by the non-dsatur orderings

    Model(const Graph& g, int h, int k, Ordering ordering) : n(g.vertex_count()), gaps{h, k} {
        cons.resize(n);
        square_degree.resize(n);
        for (Vertex v = 0; v < n; ++v) {
            if (h > 0)
                for (Vertex w : g.neighbors(v)) cons[v].push_back({w, 0});
            auto two = distance_two_neighbors(g, v);
            if (k > 0)
                for (Vertex w : two) cons[v].push_back({w, 1});
            square_degree[v] = g.degree(v) + two.size();
        }
        static_order.resize(n);
        for (Vertex v = 0; v < n; ++v) static_order[v] = v;
        if (ordering == Ordering::grid_sweep) {
            if (!g.has_coords()) throw InvalidArgument("grid-sweep ordering needs grid coordinates");
            std::stable_sort(static_order.begin(), static_order.end(), [&](Vertex a, Vertex b) {
                auto ca = g.coord(a), cb = g.coord(b);
                return std::pair(ca.j, ca.i) < std::pair(cb.j, cb.i);
            });
        }
    }
};

/// Shared node/time accounting across the layers and workers of one solve.
class Budget {
  public:
    explicit Budget(const SearchConfig& cfg)
        : node_limit_(cfg.node_limit),
          deadline_(cfg.time_limit ? std::optional(std::chrono::steady_clock::now() + *cfg.time_limit)
                                   : std::nullopt) {}

    bool charge() {
        auto used = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_limit_ && used > *node_limit_) return exhaust();
        if (deadline_ && (used & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_)
            return exhaust();
        return !exhausted_.load(std::memory_order_relaxed);
    }
    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t nodes() const { return nodes_.load(); }

  private:
    bool exhaust() {
        exhausted_.store(true);
        return false;
    }
    std::optional<std::uint64_t> node_limit_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
};

using Decisions = std::vector<std::pair<Vertex, int>>;

/// Forward-checking backtracking search for one span.
class Engine {
  public:
    Engine(const Model& model, int span, Ordering ordering, bool rename, bool reflect, Budget& budget,
           const std::atomic<bool>* stop)
        : model_(model),
          span_(span),
          ordering_(ordering),
          rename_(rename),
          reflect_(reflect),
          budget_(budget),
          stop_(stop) {
        const Mask full = span_ >= kMaxSpan ? ~Mask{0} : (Mask{1} << (span_ + 1)) - 1;
        domain_.assign(model.n, full);
        label_.assign(model.n, -1);
        for (int g = 0; g < 2; ++g) {
            ban_[g].resize(span_ + 1);
            for (int c = 0; c <= span_; ++c) {
                Mask m = 0;
                for (int x = 0; x <= span_; ++x)
                    if (std::abs(x - c) < model.gaps[g]) m |= Mask{1} << x;
                ban_[g][c] = m;
            }
        }
    }

    /// Applies a decision with propagation; false on a wipe-out.
    bool apply(Vertex v, int c) {
        if (label_[v] >= 0) return label_[v] == c;
        if (c < 0 || c > span_ || !(domain_[v] >> c & 1)) return false;
        return assign(v, c);
    }

    bool search() { return dfs(); }
    bool aborted() const { return aborted_; }
    std::vector<int> solution() const { return label_; }

    /// All consistent decision prefixes reaching `depth` further branchings.
    void expand(int depth, Decisions& prefix, std::vector<Decisions>& out) {
        if (depth == 0 || assigned_ == model_.n) {
            out.push_back(prefix);
            return;
        }
        Vertex v = select();
        for (int c : candidates(v)) {
            auto mark = mark_now();
            int prev_max = max_used_;
            if (assign(v, c)) {
                prefix.emplace_back(v, c);
                expand(depth - 1, prefix, out);
                prefix.pop_back();
            }
            undo(mark);
            max_used_ = prev_max;
        }
    }

  private:
    struct Mark {
        std::size_t trail;
        std::size_t assigned;
    };

    Mark mark_now() const { return {trail_.size(), stack_.size()}; }

    bool assign(Vertex v, int c) {
        trail_.emplace_back(v, domain_[v]);
        domain_[v] = Mask{1} << c;
        label_[v] = c;
        stack_.push_back(v);
        ++assigned_;
        max_used_ = std::max(max_used_, c);
        for (const auto& con : model_.cons[v]) {
            Vertex w = con.other;
            if (label_[w] >= 0) {
                if (std::abs(label_[w] - c) < model_.gaps[con.gap_index]) return false;
                continue;
            }
            Mask nd = domain_[w] & ~ban_[con.gap_index][c];
            if (nd != domain_[w]) {
                trail_.emplace_back(w, domain_[w]);
                domain_[w] = nd;
                if (nd == 0) return false;
            }
        }
        return true;
    }

    void undo(Mark m) {
        while (trail_.size() > m.trail) {
            auto [v, d] = trail_.back();
            trail_.pop_back();
            domain_[v] = d;
        }
        while (stack_.size() > m.assigned) {
            label_[stack_.back()] = -1;
            stack_.pop_back();
            --assigned_;
        }
    }

    Vertex select() const {
        if (ordering_ != Ordering::dsatur) {
            for (Vertex v : model_.static_order)
                if (label_[v] < 0) return v;
        }
        Vertex best = 0;
        int best_size = 1 << 30;
        std::size_t best_deg = 0;
        for (Vertex v = 0; v < model_.n; ++v) {
            if (label_[v] >= 0) continue;
            int size = std::popcount(domain_[v]);
            auto deg = model_.square_degree[v];
            if (size < best_size || (size == best_size && deg > best_deg)) {
                best = v;
                best_size = size;
                best_deg = deg;
            }
        }
        return best;
    }

    std::vector<int> candidates(Vertex v) const {
        Mask m = domain_[v];
        if (rename_) {
            // label values are interchangeable: a fresh label is only ever the next unused one
            int cap = max_used_ + 1;
            if (cap < kMaxSpan) m &= (Mask{1} << (cap + 1)) - 1;
        } else if (assigned_ == 0 && reflect_) {
            // l -> span - l maps labelings to labelings
            m &= (Mask{1} << (span_ / 2 + 1)) - 1;
        }
        std::vector<int> out;
        while (m) {
            out.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return out;
    }

    bool dfs() {
        if (assigned_ == model_.n) return true;
        Vertex v = select();
        for (int c : candidates(v)) {
            if (!budget_.charge()) {
                aborted_ = true;
                return false;
            }
            if (stop_ && stop_->load(std::memory_order_relaxed)) return false;
            auto mark = mark_now();
            int prev_max = max_used_;
            if (assign(v, c) && dfs()) return true;
            undo(mark);
            max_used_ = prev_max;
            if (aborted_) return false;
        }
        return false;
    }

    const Model& model_;
    int span_;
    Ordering ordering_;
    bool rename_;
    bool reflect_;
    Budget& budget_;
    const std::atomic<bool>* stop_;
    std::vector<Mask> domain_;
    std::vector<int> label_;
    std::vector<Mask> ban_[2];
    std::vector<std::pair<Vertex, Mask>> trail_;
    std::vector<Vertex> stack_;
    std::size_t assigned_ = 0;
    int max_used_ = -1;
    bool aborted_ = false;
};

/// Label permutations preserve validity exactly when every gap is 0 or 1.
bool permutation_symmetric(int h, int k) { return h <= 1 && k <= 1; }

struct LayerOutcome {
    bool feasible = false;
    bool aborted = false;
    std::vector<int> labels;
};

LayerOutcome run_layer(const Model& model, int span, const SearchConfig& cfg, Precoloring fixed,
                       Budget& budget) {
    const bool free = fixed.empty();
    const bool rename = free && permutation_symmetric(model.gaps[0], model.gaps[1]);
    const Ordering ordering = cfg.ordering;

    auto make_engine = [&](const std::atomic<bool>* stop) {
        return Engine(model, span, ordering, rename, free && !rename, budget, stop);
    };

    LayerOutcome out;
    Engine root = make_engine(nullptr);
    for (auto [v, c] : fixed)
        if (!root.apply(v, c)) return out;

    if (cfg.threads <= 1) {
        out.feasible = root.search();
        out.aborted = root.aborted();
        if (out.feasible) out.labels = root.solution();
        return out;
    }

    // Parallel mode: split the top of the tree into independent prefixes.
    std::vector<Decisions> tasks;
    for (int depth = 1; depth <= static_cast<int>(model.n); ++depth) {
        tasks.clear();
        Decisions prefix;
        root.expand(depth, prefix, tasks);
        if (tasks.size() >= 4 * cfg.threads || tasks.empty()) break;
    }
    std::atomic<bool> found{false};
    std::atomic<std::size_t> next{0};
    std::atomic<bool> aborted{false};
    std::mutex mu;
    auto worker = [&] {
        for (;;) {
            auto t = next.fetch_add(1);
            if (t >= tasks.size() || found.load()) return;
            Engine e = make_engine(&found);
            bool ok = true;
            for (auto [v, c] : fixed) ok = ok && e.apply(v, c);
            for (auto [v, c] : tasks[t]) ok = ok && e.apply(v, c);
            if (!ok) continue;
            if (e.search()) {
                std::lock_guard lock(mu);
                if (!found.exchange(true)) out.labels = e.solution();
                return;
            }
            if (e.aborted()) {
                aborted = true;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < cfg.threads; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    out.feasible = found.load();
    out.aborted = !out.feasible && aborted.load();
    return out;
}

void require_solvable(const Graph& g, int h, int k) {
    if (g.empty()) throw InvalidSize("graph has no vertices");
    if (h < 0 || k < 0) throw InvalidArgument("gaps must be non-negative");
}

int seed_lower_bound(const Graph& g, int h, int k) {
    if (h >= k) return star_lower_bound(g, h, k);
    const auto delta = static_cast<int>(g.max_degree());
    if (delta == 0) return 0;
    return std::max((delta - 1) * k, h);
}

void check_witness(const Graph& g, const Labeling& lab, int h, int k, int span) {
    if (!verify(g, lab, h, k).empty() || lab.span() > span)
        throw std::logic_error("solver produced an invalid witness");
}

}  // namespace

Labeling greedy_labeling(const Graph& g, int h, int k) {
    Model model(g, h, k, Ordering::input_order);
    std::vector<Vertex> order(model.n);
    for (Vertex v = 0; v < model.n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return model.square_degree[a] > model.square_degree[b];
    });
    std::vector<int> label(model.n, -1);
    for (Vertex v : order) {
        for (int c = 0;; ++c) {
            bool ok = true;
            for (const auto& con : model.cons[v]) {
                int lw = label[con.other];
                if (lw >= 0 && std::abs(lw - c) < model.gaps[con.gap_index]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                label[v] = c;
                break;
            }
        }
    }
    return Labeling(std::move(label));
}

Decision decide(const Graph& g, int h, int k, int span, const SearchConfig& cfg, Precoloring fixed) {
    require_solvable(g, h, k);
    if (span < 0 || span > kMaxSpan) throw InvalidArgument("span must lie in [0, 63]");
    for (auto [v, c] : fixed)
        if (v >= g.vertex_count()) throw OutOfRange("precolored vertex out of range");
    Model model(g, h, k, cfg.ordering);
    Budget budget(cfg);
    auto layer = run_layer(model, span, cfg, fixed, budget);
    if (layer.aborted) throw ResourceLimit(0, std::nullopt, budget.nodes());
    Decision d;
    d.feasible = layer.feasible;
    d.nodes_explored = budget.nodes();
    if (layer.feasible) {
        d.witness = Labeling(std::move(layer.labels));
        check_witness(g, *d.witness, h, k, span);
    }
    return d;
}

LambdaResult solve_exact(const Graph& g, int h, int k, const SearchConfig& cfg) {
    require_solvable(g, h, k);
    auto start = std::chrono::steady_clock::now();
    Model model(g, h, k, cfg.ordering);
    Budget budget(cfg);

    LambdaResult r;
    r.h = h;
    r.k = k;
    r.method = Method::backtrack;
    r.lower_bound = seed_lower_bound(g, h, k);

    Labeling upper = greedy_labeling(g, h, k);
    int ceiling = upper.span();
    if (cfg.target_span) ceiling = std::min(ceiling, *cfg.target_span);

    int lower = r.lower_bound;
    for (int s = lower; s <= ceiling && s < upper.span(); ++s) {
        auto layer = run_layer(model, s, cfg, {}, budget);
        if (layer.aborted) throw ResourceLimit(s, upper.span(), budget.nodes());
        if (layer.feasible) {
            r.span = s;
            r.witness = Labeling(std::move(layer.labels));
            break;
        }
        lower = s + 1;
    }
    if (r.witness.size() == 0) {
        if (upper.span() > ceiling) throw Infeasible(ceiling, budget.nodes());
        r.span = upper.span();
        r.witness = upper;
    }
    check_witness(g, r.witness, h, k, r.span);
    r.nodes_explored = budget.nodes();
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

LambdaResult solve_via_square(const Graph& g, const SearchConfig& cfg) {
    auto r = solve_exact(square_graph(g), 1, 0, cfg);
    check_witness(g, r.witness, 1, 1, r.span);
    r.k = 1;
    r.method = Method::square_coloring;
    return r;
}

LambdaResult brute_force(const Graph& g, int h, int k, int max_span) {
    require_solvable(g, h, k);
    if (g.vertex_count() > kBruteForceMaxVertices)
        throw InvalidSize("brute force is capped at " + std::to_string(kBruteForceMaxVertices) +
                          " vertices, got " + std::to_string(g.vertex_count()));
    if (max_span < 0 || max_span > kBruteForceMaxSpan)
        throw InvalidArgument("brute force max_span must lie in [0, " + std::to_string(kBruteForceMaxSpan) + "]");
    auto start = std::chrono::steady_clock::now();

    struct Pair {
        std::size_t u, v;
        int gap;
    };
    std::vector<Pair> pairs;
    const auto n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
        auto dist = distances_from(g, u);
        for (Vertex v = u + 1; v < n; ++v) {
            int gap = dist[v] == 1 ? h : dist[v] == 2 ? k : 0;
            if (gap > 0) pairs.push_back({u, v, gap});
        }
    }

    std::uint64_t visited = 0;
    for (int s = 0; s <= max_span; ++s) {
        std::vector<int> lab(n, 0);
        for (;;) {
            ++visited;
            bool ok = true;
            for (const auto& p : pairs)
                if (std::abs(lab[p.u] - lab[p.v]) < p.gap) {
                    ok = false;
                    break;
                }
            if (ok) {
                LambdaResult r;
                r.h = h;
                r.k = k;
                r.span = s;
                r.witness = Labeling(lab);
                r.method = Method::brute_force;
                r.nodes_explored = visited;
                r.elapsed = std::chrono::steady_clock::now() - start;
                // smaller spans were exhausted, so the witness uses s exactly
                check_witness(g, r.witness, h, k, s);
                return r;
            }
            std::size_t t = 0;
            while (t < n && lab[t] == s) lab[t++] = 0;
            if (t == n) break;
            ++lab[t];
        }
    }
    throw Infeasible(max_span, visited);
}

}  // namespace lambda_lab
