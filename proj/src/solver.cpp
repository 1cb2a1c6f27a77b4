#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "distinguo/errors.hpp"
#include "distinguo/game.hpp"
#include "solver_detail.hpp"

namespace distinguo {

namespace detail {

void canonical_word(const std::uint8_t* colors, int n, const std::uint8_t* packed,
                    std::size_t order, std::uint8_t* best) {
  std::array<std::uint8_t, kMaxVertices> cur{};
  for (std::size_t e = 0; e < order; ++e) {
    const std::uint8_t* p = packed + e * static_cast<std::size_t>(n);
    std::array<std::uint8_t, 256> rename{};
    std::uint8_t next = 1;
    int cmp = e == 0 ? -1 : 0;
    bool worse = false;
    for (int v = 0; v < n; ++v) {
      const std::uint8_t x = colors[p[v]];
      std::uint8_t y = 0;
      if (x != 0) {
        if (rename[x] == 0) rename[x] = next++;
        y = rename[x];
      }
      if (cmp == 0) {
        if (y < best[v]) {
          cmp = -1;
        } else if (y > best[v]) {
          worse = true;
          break;
        }
      }
      cur[v] = y;
    }
    if (!worse && cmp < 0) std::copy_n(cur.begin(), n, best);
  }
}

StateKey canonical_key(const std::uint8_t* colors, int n, const std::uint8_t* packed,
                       std::size_t order, std::uint8_t to_move) {
  std::array<std::uint8_t, kMaxVertices> best{};
  canonical_word(colors, n, packed, order, best.data());
  StateKey key;
  key.to_move = to_move;
  for (int v = 0; v < n; ++v) {
    key.words[v / 16] |= std::uint64_t{best[v]} << (4 * (v % 16));
  }
  return key;
}

}  // namespace detail

namespace {

struct Cancelled {};

class Memo {
 public:
  explicit Memo(std::size_t budget) : budget_(budget) {}

  int find(const StateKey& k) {
    Shard& s = shard(k);
    std::lock_guard lock(s.mutex);
    const auto it = s.map.find(k);
    return it == s.map.end() ? -1 : static_cast<int>(it->second);
  }

  void insert(const StateKey& k, bool gentle_wins) {
    Shard& s = shard(k);
    std::lock_guard lock(s.mutex);
    if (s.map.emplace(k, gentle_wins).second) {
      if (++count_ > budget_) {
        throw ResourceError("memo budget of " + std::to_string(budget_) + " positions exhausted");
      }
    }
  }

  std::size_t size() const noexcept { return count_.load(); }

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    std::mutex mutex;
    std::unordered_map<StateKey, bool, StateKeyHash> map;
  };
  Shard& shard(const StateKey& k) { return shards_[StateKeyHash{}(k) % kShards]; }

  std::array<Shard, kShards> shards_;
  std::atomic<std::size_t> count_{0};
  std::size_t budget_;
};

using Colors = std::array<std::uint8_t, kMaxVertices>;

class Solver {
 public:
  Solver(const AutGroup& aut, int budget, Player first, const SolveOptions& options)
      : n_(aut.degree()),
        budget_(budget),
        first_(first),
        options_(options),
        order_(aut.order()),
        packed_(aut.packed().data()),
        inverse_(aut.packed_inverse().data()),
        memo_(options.memo_budget) {}

  bool gentle_to_move(int colored) const {
    return (colored % 2 == 0 ? first_ : opponent(first_)) == Player::Gentle;
  }

  /// Value of the position with symmetry reductions and memoization.
  /// `alive` lists the non-identity elements not yet broken by the coloring.
  bool reduced(Colors& col, int colored, const std::vector<std::uint32_t>& alive) {
    if (stop_.load(std::memory_order_relaxed)) throw Cancelled{};
    count_node();
    if (alive.empty()) return true;
    if (colored == n_) return false;

    const StateKey key = detail::canonical_key(col.data(), n_, packed_, order_,
                                               static_cast<std::uint8_t>(colored % 2));
    if (const int hit = memo_.find(key); hit >= 0) {
      memo_hits_.fetch_add(1, std::memory_order_relaxed);
      return hit == 1;
    }

    const bool gentle = gentle_to_move(colored);
    std::vector<Move> moves = candidate_moves(col, alive);
    std::vector<int> kills(moves.size(), 0);
    for (std::size_t i = 0; i < moves.size(); ++i) kills[i] = kill_count(col, alive, moves[i]);
    std::vector<std::size_t> idx(moves.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return gentle ? kills[a] > kills[b] : kills[a] < kills[b];
    });

    bool result = !gentle;
    std::vector<std::uint32_t> next;
    for (const std::size_t i : idx) {
      const Move m = moves[i];
      survivors(col, alive, m, next);
      col[m.vertex] = static_cast<std::uint8_t>(m.color);
      bool child = false;
      try {
        child = reduced(col, colored + 1, next);
      } catch (...) {
        col[m.vertex] = 0;
        throw;
      }
      col[m.vertex] = 0;
      if (child == gentle) {
        result = gentle;
        break;
      }
    }
    memo_.insert(key, result);
    return result;
  }

  /// Plain minimax over every legal move; no reductions, no memo.
  bool plain(Colors& col, int colored) {
    count_node();
    if (colored == n_) return distinguishing(col);
    const bool gentle = gentle_to_move(colored);
    for (int v = 0; v < n_; ++v) {
      if (col[v] != 0) continue;
      for (int c = 1; c <= budget_; ++c) {
        col[v] = static_cast<std::uint8_t>(c);
        const bool child = plain(col, colored + 1);
        col[v] = 0;
        if (child == gentle) return gentle;
      }
    }
    return !gentle;
  }

  std::vector<std::uint32_t> initial_alive(const Colors& col) const {
    std::vector<std::uint32_t> alive;
    for (std::size_t e = 1; e < order_; ++e) {
      const std::uint8_t* p = row(packed_, e);
      bool ok = true;
      for (int v = 0; v < n_ && ok; ++v) {
        ok = col[v] == 0 || col[p[v]] == 0 || col[p[v]] == col[v];
      }
      if (ok) alive.push_back(static_cast<std::uint32_t>(e));
    }
    return alive;
  }

  /// Moves at the root in heuristic order, for parallel evaluation.
  std::vector<Move> root_moves(const Colors& col, const std::vector<std::uint32_t>& alive,
                               bool gentle) const {
    std::vector<Move> moves = candidate_moves(col, alive);
    std::vector<std::pair<int, std::size_t>> order;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const int k = kill_count(col, alive, moves[i]);
      order.emplace_back(gentle ? -k : k, i);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Move> sorted;
    for (const auto& [k, i] : order) sorted.push_back(moves[i]);
    return sorted;
  }

  void survivors(const Colors& col, const std::vector<std::uint32_t>& alive, Move m,
                 std::vector<std::uint32_t>& out) const {
    out.clear();
    const auto c = static_cast<std::uint8_t>(m.color);
    for (const std::uint32_t e : alive) {
      const std::uint8_t a = col[row(packed_, e)[m.vertex]];
      const std::uint8_t b = col[row(inverse_, e)[m.vertex]];
      if ((a == 0 || a == c) && (b == 0 || b == c)) out.push_back(e);
    }
  }

  void request_stop() { stop_.store(true); }

  SolveStats stats() const {
    return {nodes_.load(), memo_hits_.load(), memo_.size()};
  }

 private:
  const std::uint8_t* row(const std::uint8_t* base, std::size_t e) const {
    return base + e * static_cast<std::size_t>(n_);
  }

  void count_node() {
    const auto seen = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (options_.node_budget != 0 && seen > options_.node_budget) {
      throw ResourceError("node budget of " + std::to_string(options_.node_budget) + " exhausted");
    }
  }

  bool distinguishing(const Colors& col) const {
    for (std::size_t e = 1; e < order_; ++e) {
      const std::uint8_t* p = row(packed_, e);
      bool preserved = true;
      for (int v = 0; v < n_ && preserved; ++v) preserved = col[p[v]] == col[v];
      if (preserved) return false;
    }
    return true;
  }

  /// One representative per orbit of the coloring's stabilizer, and among
  /// the unused colors only the smallest.
  std::vector<Move> candidate_moves(const Colors& col,
                                    const std::vector<std::uint32_t>& alive) const {
    std::vector<std::uint32_t> stab;
    for (const std::uint32_t e : alive) {
      const std::uint8_t* p = row(packed_, e);
      bool fixes = true;
      for (int v = 0; v < n_ && fixes; ++v) fixes = col[p[v]] == col[v];
      if (fixes) stab.push_back(e);
    }
    std::uint32_t used = 0;
    for (int v = 0; v < n_; ++v) used |= 1U << col[v];
    int fresh = 0;
    for (int c = 1; c <= budget_; ++c) {
      if (!((used >> c) & 1U)) {
        fresh = c;
        break;
      }
    }
    std::vector<Move> moves;
    for (int v = 0; v < n_; ++v) {
      if (col[v] != 0) continue;
      bool rep = true;
      for (const std::uint32_t e : stab) {
        if (row(packed_, e)[v] < v) {
          rep = false;
          break;
        }
      }
      if (!rep) continue;
      for (int c = 1; c <= budget_; ++c) {
        if (((used >> c) & 1U) || c == fresh) moves.push_back({v, c});
      }
    }
    return moves;
  }

  int kill_count(const Colors& col, const std::vector<std::uint32_t>& alive, Move m) const {
    int kills = 0;
    const auto c = static_cast<std::uint8_t>(m.color);
    for (const std::uint32_t e : alive) {
      const std::uint8_t a = col[row(packed_, e)[m.vertex]];
      const std::uint8_t b = col[row(inverse_, e)[m.vertex]];
      if ((a != 0 && a != c) || (b != 0 && b != c)) ++kills;
    }
    return kills;
  }

  int n_;
  int budget_;
  Player first_;
  SolveOptions options_;
  std::size_t order_;
  const std::uint8_t* packed_;
  const std::uint8_t* inverse_;
  Memo memo_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> memo_hits_{0};
  std::atomic<bool> stop_{false};
};

bool solve_parallel(Solver& solver, Colors col, int colored,
                    const std::vector<std::uint32_t>& alive, int threads) {
  const bool gentle = solver.gentle_to_move(colored);
  const std::vector<Move> moves = solver.root_moves(col, alive, gentle);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> decided{false};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    Colors local = col;
    std::vector<std::uint32_t> child_alive;
    for (;;) {
      if (decided.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= moves.size()) return;
      const Move m = moves[i];
      solver.survivors(local, alive, m, child_alive);
      local[m.vertex] = static_cast<std::uint8_t>(m.color);
      try {
        const bool child = solver.reduced(local, colored + 1, child_alive);
        if (child == gentle) {
          decided.store(true);
          solver.request_stop();
        }
      } catch (const Cancelled&) {
        return;
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        decided.store(true);
        solver.request_stop();
        return;
      }
      local[m.vertex] = 0;
    }
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return decided.load() ? gentle : !gentle;
}

void validate_start(const Graph& g, const AutGroup& aut, const GameState& start,
                    const SolveOptions& options) {
  if (aut.degree() != g.order() || start.order() != g.order()) {
    throw InvalidArgument("graph, group and position sizes differ");
  }
  if (options.memoize && start.budget() > kMaxSolverBudget) {
    throw InvalidArgument("the memoized solver supports at most " +
                          std::to_string(kMaxSolverBudget) + " colors");
  }
  if (options.threads < 1) throw InvalidArgument("threads must be >= 1");
}

}  // namespace

SolveResult solve_from(const Graph& g, const AutGroup& aut, const GameState& start,
                       const SolveOptions& options) {
  validate_start(g, aut, start, options);
  Solver solver(aut, start.budget(), start.first_player(), options);
  Colors col{};
  const auto raw = start.coloring().raw();
  std::copy(raw.begin(), raw.end(), col.begin());
  const int colored = start.coloring().colored_count();

  bool gentle = false;
  if (!options.memoize) {
    gentle = solver.plain(col, colored);
  } else {
    const auto alive = solver.initial_alive(col);
    if (options.threads > 1 && !alive.empty() && colored < g.order()) {
      gentle = solve_parallel(solver, col, colored, alive, options.threads);
    } else {
      gentle = solver.reduced(col, colored, alive);
    }
  }
  return {gentle ? Player::Gentle : Player::Rascal, solver.stats()};
}

SolveResult solve(const Graph& g, const AutGroup& aut, int budget, Player first,
                  const SolveOptions& options) {
  return solve_from(g, aut, GameState(g.order(), budget, first), options);
}

SolveResult solve(const Graph& g, int budget, Player first, const SolveOptions& options) {
  return solve(g, automorphism_group(g), budget, first, options);
}

std::optional<InfinityCertificate> infinity_certificate(const Graph& g, const AutGroup& aut,
                                                        Player first) {
  const bool parity_ok = (g.order() % 2 == 0) == (first == Player::Gentle);
  if (!parity_ok) return std::nullopt;
  for (const auto& p : aut.elements()) {
    if (!p.is_identity() && element_order(p) == 2) {
      InfinityCertificate cert;
      cert.kind = CertificateKind::Involution;
      cert.first_player = first;
      cert.witness = p;
      cert.fixed = fixed_points(p);
      return cert;
    }
  }
  return std::nullopt;
}

std::optional<InfinityCertificate> infinity_certificate(const Graph& g, Player first) {
  return infinity_certificate(g, automorphism_group(g), first);
}

bool check_certificate(const Graph& g, const InfinityCertificate& cert) {
  if (cert.kind == CertificateKind::ColorSaturation) {
    if (cert.saturation_budget < g.order()) return false;
    return solve(g, cert.saturation_budget, cert.first_player).winner == Player::Rascal;
  }
  if (!cert.witness || cert.witness->size() != g.order()) return false;
  const Permutation& p = *cert.witness;
  if (p.is_identity() || !(p * p).is_identity()) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
  if (cert.fixed != fixed_points(p)) return false;
  return (g.order() % 2 == 0) == (cert.first_player == Player::Gentle);
}

GameResult game_distinguishing_number(const Graph& g, Player first, int d_max,
                                      const SolveOptions& options) {
  if (d_max < 1) throw InvalidArgument("d_max must be >= 1");
  const AutGroup aut = automorphism_group(g);
  GameResult result;
  if (auto cert = infinity_certificate(g, aut, first)) {
    result.kind = GameResult::Kind::InfiniteCertified;
    result.certificate = std::move(cert);
    return result;
  }
  const int limit = std::min(d_max, kMaxSolverBudget);
  for (int d = 1; d <= limit; ++d) {
    const SolveResult r = solve(g, aut, d, first, options);
    result.stats.nodes_expanded += r.stats.nodes_expanded;
    result.stats.memo_hits += r.stats.memo_hits;
    result.stats.memo_entries += r.stats.memo_entries;
    if (r.winner == Player::Gentle) {
      result.kind = GameResult::Kind::Finite;
      result.value = d;
      return result;
    }
    if (d >= g.order()) {
      InfinityCertificate cert;
      cert.kind = CertificateKind::ColorSaturation;
      cert.first_player = first;
      cert.saturation_budget = d;
      result.kind = GameResult::Kind::InfiniteCertified;
      result.certificate = std::move(cert);
      return result;
    }
  }
  result.kind = GameResult::Kind::UnknownAtLeast;
  result.value = limit + 1;
  return result;
}

}  // namespace distinguo
