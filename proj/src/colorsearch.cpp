#include "ramfac/colorsearch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace ramfac {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::BadColoringFound: return "bad-coloring-found";
    case SearchStatus::NoBadColoring: return "no-bad-coloring";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

void ColoringProblem::validate() const {
  if (r < 1) throw DomainError("coloring problem needs r >= 1");
  if (r > 64) throw DomainError("coloring problem supports at most 64 colors");
  if (!labels.empty() && labels.size() != ground_size)
    throw DomainError("label count does not match ground size");
  std::vector<std::size_t> stamp(ground_size, SIZE_MAX);
  for (std::size_t c = 0; c < copies.size(); ++c)
    for (const auto& fib : copies[c].fibers)
      for (auto e : fib) {
        if (e >= ground_size) throw DomainError("copy element out of range");
        if (stamp[e] == c) throw DomainError("element repeated inside a copy");
        stamp[e] = c;
      }
}

bool is_bad_coloring(const ColoringProblem& problem, const std::vector<std::uint32_t>& coloring) {
  if (coloring.size() != problem.ground_size) return false;
  for (auto c : coloring)
    if (c >= problem.r) return false;
  for (const auto& copy : problem.copies) {
    bool defeated = false;
    for (const auto& fib : copy.fibers) {
      for (auto e : fib)
        if (coloring[e] != coloring[fib.front()]) {
          defeated = true;
          break;
        }
      if (defeated) break;
    }
    if (!defeated) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetHit {};

struct Shared {
  const SearchOptions* opts;
  Clock::time_point start;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
};

class Searcher {
 public:
  Searcher(const ColoringProblem& pb, Shared& shared) : pb_(pb), sh_(shared) {
    const std::size_t n = pb.ground_size;
    memb_.resize(n);
    copy_alive_.assign(pb.copies.size(), 0);
    copy_fibers_.resize(pb.copies.size());
    for (std::size_t c = 0; c < pb.copies.size(); ++c)
      for (const auto& f : pb.copies[c].fibers) {
        if (f.size() < 2) continue;
        const auto id = static_cast<std::uint32_t>(fib_.size());
        fib_.push_back({static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(f.size()), 0, 0, false, &f});
        copy_fibers_[c].push_back(id);
        ++copy_alive_[c];
        for (auto e : f) memb_[e].push_back(id);
      }
    color_.assign(n, 0);
    forbidden_.assign(n, 0);
    full_ = pb.r == 64 ? ~0ull : ((1ull << pb.r) - 1);
  }

  bool trivially_unsat() const {
    return std::find(copy_alive_.begin(), copy_alive_.end(), 0u) != copy_alive_.end();
  }

  // Returns false on conflict; the assignment must be undone either way.
  bool assign(std::uint32_t e, std::uint32_t c) {
    frames_.push_back({mixed_trail_.size(), forbid_trail_.size()});
    color_[e] = c;
    bool ok = true;
    for (auto id : memb_[e]) {
      auto& f = fib_[id];
      if (++f.assigned == 1) {
        f.first = c;
      } else if (!f.mixed && c != f.first) {
        f.mixed = true;
        mixed_trail_.push_back(id);
      }
      if (f.assigned == f.size && !f.mixed && --copy_alive_[f.copy] == 0) ok = false;
    }
    if (!ok) return false;
    for (auto id : memb_[e]) {
      const auto cp = fib_[id].copy;
      if (copy_alive_[cp] != 1) continue;
      for (auto fid : copy_fibers_[cp]) {
        const auto& f = fib_[fid];
        if (f.mixed) break;
        if (f.assigned == f.size) continue;
        // f is the only live fiber and still monochromatic so far. Elements
        // are assigned in index order, so its last free slot is the member > e.
        if (f.size - f.assigned == 1 && f.assigned > 0) {
          for (auto u : *f.members)
            if (u > e) {
              const std::uint64_t bit = 1ull << f.first;
              if (!(forbidden_[u] & bit)) {
                forbid_trail_.push_back({u, forbidden_[u]});
                forbidden_[u] |= bit;
                if ((forbidden_[u] & full_) == full_) ok = false;
              }
              break;
            }
        }
        break;
      }
      if (!ok) return false;
    }
    return true;
  }

  void unassign(std::uint32_t e) {
    const auto fr = frames_.back();
    frames_.pop_back();
    while (forbid_trail_.size() > fr.forbid) {
      forbidden_[forbid_trail_.back().first] = forbid_trail_.back().second;
      forbid_trail_.pop_back();
    }
    for (auto it = memb_[e].rbegin(); it != memb_[e].rend(); ++it) {
      auto& f = fib_[*it];
      if (f.assigned == f.size && !f.mixed) ++copy_alive_[f.copy];
      --f.assigned;
    }
    while (mixed_trail_.size() > fr.mixed) {
      auto& f = fib_[mixed_trail_.back()];
      f.mixed = false;
      mixed_trail_.pop_back();
    }
  }

  bool dfs(std::uint32_t pos, std::uint32_t used) {
    if (pos == pb_.ground_size) return true;
    const std::uint32_t hi = std::min(used, pb_.r - 1);
    for (std::uint32_t c = 0; c <= hi; ++c) {
      if (forbidden_[pos] & (1ull << c)) continue;
      tick();
      const bool ok = assign(pos, c);
      if (ok && dfs(pos + 1, c == used ? used + 1 : used)) return true;
      unassign(pos);
    }
    return false;
  }

  // Enumerates consistent prefixes of the given depth in lexicographic order.
  void prefixes(std::uint32_t pos, std::uint32_t used, std::uint32_t depth,
                std::vector<std::uint32_t>& cur, std::vector<std::vector<std::uint32_t>>& out) {
    if (pos == depth) {
      out.push_back(cur);
      return;
    }
    const std::uint32_t hi = std::min(used, pb_.r - 1);
    for (std::uint32_t c = 0; c <= hi; ++c) {
      if (forbidden_[pos] & (1ull << c)) continue;
      tick();
      if (assign(pos, c)) {
        cur.push_back(c);
        prefixes(pos + 1, c == used ? used + 1 : used, depth, cur, out);
        cur.pop_back();
      }
      unassign(pos);
    }
  }

  // Replays a prefix; returns the resulting "used" count, or nullopt on conflict.
  std::optional<std::uint32_t> replay(const std::vector<std::uint32_t>& prefix) {
    std::uint32_t used = 0;
    for (std::uint32_t i = 0; i < prefix.size(); ++i) {
      if (!assign(i, prefix[i])) return std::nullopt;
      if (prefix[i] == used) ++used;
    }
    return used;
  }

  const std::vector<std::uint32_t>& coloring() const { return color_; }

  // Lets a prefix worker abandon its subtree once an earlier prefix has a witness.
  void watch(const std::atomic<std::size_t>* best, std::size_t index) {
    best_ = best;
    index_ = index;
  }

 private:
  struct FiberState {
    std::uint32_t copy;
    std::uint32_t size;
    std::uint32_t assigned;
    std::uint32_t first;
    bool mixed;
    const Fiber* members;
  };
  struct Frame {
    std::size_t mixed;
    std::size_t forbid;
  };

  void tick() {
    const auto n = ++local_nodes_;
    // flush in batches, but exactly once the node budget would be crossed
    if ((n & 4095) == 0 || sh_.nodes.load(std::memory_order_relaxed) + (n - flushed_) > sh_.opts->budget.max_nodes)
      flush();
  }

  void flush() {
    const auto total = sh_.nodes.fetch_add(local_nodes_ - flushed_) + (local_nodes_ - flushed_);
    flushed_ = local_nodes_;
    const auto& b = sh_.opts->budget;
    const double secs = std::chrono::duration<double>(Clock::now() - sh_.start).count();
    if (total > b.max_nodes || secs > b.max_seconds || sh_.out_of_budget.load()) {
      sh_.out_of_budget = true;
      throw BudgetHit{};
    }
    if (best_ && best_->load() < index_) throw BudgetHit{};
  }

 public:
  void finish() {
    sh_.nodes += local_nodes_ - flushed_;
    flushed_ = local_nodes_;
  }

 private:
  const ColoringProblem& pb_;
  Shared& sh_;
  std::vector<FiberState> fib_;
  std::vector<std::vector<std::uint32_t>> memb_;
  std::vector<std::vector<std::uint32_t>> copy_fibers_;
  std::vector<std::uint32_t> copy_alive_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint64_t> forbidden_;
  std::uint64_t full_ = 0;
  std::vector<std::uint32_t> mixed_trail_;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> forbid_trail_;
  std::vector<Frame> frames_;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t flushed_ = 0;
  const std::atomic<std::size_t>* best_ = nullptr;
  std::size_t index_ = 0;
};

SearchOutcome finish_outcome(Shared& sh, SearchStatus st,
                             std::optional<std::vector<std::uint32_t>> witness) {
  SearchOutcome out;
  out.status = st;
  out.witness = std::move(witness);
  out.stats.nodes = sh.nodes.load();
  out.stats.seconds = std::chrono::duration<double>(Clock::now() - sh.start).count();
  return out;
}

}  // namespace

SearchOutcome exists_bad_coloring(const ColoringProblem& problem, const SearchOptions& opts) {
  problem.validate();
  Shared sh;
  sh.opts = &opts;
  sh.start = Clock::now();

  Searcher root(problem, sh);
  if (root.trivially_unsat()) return finish_outcome(sh, SearchStatus::NoBadColoring, std::nullopt);

  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || problem.ground_size < 4) {
    try {
      const bool found = root.dfs(0, 0);
      root.finish();
      if (found) return finish_outcome(sh, SearchStatus::BadColoringFound, root.coloring());
      return finish_outcome(sh, SearchStatus::NoBadColoring, std::nullopt);
    } catch (const BudgetHit&) {
      root.finish();
      return finish_outcome(sh, SearchStatus::BudgetExhausted, std::nullopt);
    }
  }

  // Split on prefixes; the earliest prefix (lexicographically) holding a
  // witness wins, so the result does not depend on scheduling.
  std::vector<std::vector<std::uint32_t>> work;
  try {
    std::uint32_t depth = 1;
    while (true) {
      work.clear();
      std::vector<std::uint32_t> cur;
      root.prefixes(0, 0, depth, cur, work);
      if (work.size() >= 4 * jobs || depth + 1 >= problem.ground_size || depth >= 24) break;
      ++depth;
    }
    root.finish();
  } catch (const BudgetHit&) {
    root.finish();
    return finish_outcome(sh, SearchStatus::BudgetExhausted, std::nullopt);
  }

  enum class R : std::uint8_t { Pending, None, Found, Budget };
  std::vector<R> result(work.size(), R::Pending);
  std::vector<std::vector<std::uint32_t>> witness(work.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{SIZE_MAX};
  std::mutex mu;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next++;
      if (i >= work.size()) return;
      if (i > best.load()) {
        result[i] = R::None;
        continue;
      }
      Searcher s(problem, sh);
      s.watch(&best, i);
      R res = R::None;
      try {
        auto used = s.replay(work[i]);
        if (used) {
          if (s.dfs(static_cast<std::uint32_t>(work[i].size()), *used)) {
            res = R::Found;
            std::lock_guard lk(mu);
            witness[i] = s.coloring();
            std::size_t b = best.load();
            while (i < b && !best.compare_exchange_weak(b, i)) {
            }
          }
        }
      } catch (const BudgetHit&) {
        res = i > best.load() ? R::None : R::Budget;
      }
      s.finish();
      result[i] = res;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < work.size(); ++i) {
    if (result[i] == R::Budget) return finish_outcome(sh, SearchStatus::BudgetExhausted, std::nullopt);
    if (result[i] == R::Found) return finish_outcome(sh, SearchStatus::BadColoringFound, witness[i]);
  }
  return finish_outcome(sh, SearchStatus::NoBadColoring, std::nullopt);
}

NaiveResult naive_bad_coloring(const ColoringProblem& problem, kernels::Isa isa,
                               std::uint64_t max_colorings) {
  problem.validate();
  const std::size_t n = problem.ground_size;
  NaiveResult out;
  if (problem.r == 2 && n <= 63) {
    const std::uint64_t total = 1ull << n;
    if (total > max_colorings) throw BudgetError("naive oracle: 2^N colorings over budget");
    // Element i is bit N-1-i, so integer order is lexicographic order.
    kernels::TwoColorLayout layout;
    for (const auto& copy : problem.copies) {
      std::vector<std::uint64_t> masks;
      for (const auto& f : copy.fibers) {
        std::uint64_t m = 0;
        for (auto e : f) m |= 1ull << (n - 1 - e);
        masks.push_back(m);
      }
      layout.add_copy(masks);
    }
    const std::uint64_t c = kernels::scan(0, total, layout, isa);
    out.colorings_checked = c == total ? total : c + 1;
    if (c != total) {
      out.found = true;
      out.witness.resize(n);
      for (std::size_t i = 0; i < n; ++i) out.witness[i] = (c >> (n - 1 - i)) & 1u;
    }
    return out;
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > max_colorings / problem.r) throw BudgetError("naive oracle: r^N colorings over budget");
    total *= problem.r;
  }
  std::vector<std::uint32_t> col(n, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    ++out.colorings_checked;
    if (is_bad_coloring(problem, col)) {
      out.found = true;
      out.witness = col;
      return out;
    }
    std::size_t i = n;
    while (i > 0 && col[i - 1] == problem.r - 1) col[--i] = 0;
    if (i > 0) ++col[i - 1];
  }
  return out;
}

}  // namespace ramfac
