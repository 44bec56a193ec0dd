#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ramfac/boolmat.hpp"
#include "ramfac/colorsearch.hpp"
#include "ramfac/ffmat.hpp"
#include "ramfac/orders.hpp"

namespace ramfac {

namespace {

// Copies with more than this many element slots in total are refused.
constexpr std::size_t kMaxSlots = 20'000'000;

std::string join(const std::vector<std::uint32_t>& v, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string encode(const PrimeFieldMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ',';
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::to_string(m.at(i, j));
  }
  return s;
}

std::string encode(const BooleanMatrix& b) {
  std::string s;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    if (j) s += '|';
    s += '{';
    auto mem = b.column_members(j);
    for (std::size_t i = 0; i < mem.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(mem[i]);
    }
    s += '}';
  }
  return s;
}

class SlotCounter {
 public:
  void add(std::size_t n) {
    total_ += n;
    if (total_ > kMaxSlots) throw BudgetError("instance too large to build");
  }

 private:
  std::size_t total_ = 0;
};

// Groups (key, element) pairs into fibers, ordered by key.
template <class Key>
Copy fibered(std::map<Key, std::set<std::uint32_t>>& groups) {
  Copy c;
  for (auto& [k, els] : groups) c.fibers.emplace_back(els.begin(), els.end());
  return c;
}

void dedupe_copies(ColoringProblem& pb) {
  std::set<std::vector<std::vector<std::uint32_t>>> seen;
  std::vector<Copy> kept;
  for (auto& c : pb.copies) {
    auto key = c.fibers;
    for (auto& f : key) std::sort(f.begin(), f.end());
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) kept.push_back(std::move(c));
  }
  pb.copies = std::move(kept);
}

}  // namespace

ColoringProblem drt_instance(std::size_t kR, std::size_t kS, std::size_t n, std::uint32_t r) {
  if (kR < 1 || kR >= kS || kS > n) throw DomainError("drt_instance: need 1 <= kR < kS <= n");
  ColoringProblem pb;
  pb.r = r;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (const auto& f : enumerate_epi(n, kR)) {
    index.emplace(f.map(), static_cast<std::uint32_t>(pb.labels.size()));
    pb.labels.push_back(join(f.map()));
  }
  pb.ground_size = pb.labels.size();
  const auto inner = enumerate_epi(kS, kR);
  SlotCounter slots;
  for (const auto& g : enumerate_epi(n, kS)) {
    slots.add(inner.size());
    std::set<std::uint32_t> els;
    for (const auto& s : inner) els.insert(index.at(compose_epi(g, s).map()));
    pb.copies.push_back(Copy{{Fiber(els.begin(), els.end())}});
  }
  dedupe_copies(pb);
  return pb;
}

ColoringProblem glr_instance(std::uint32_t p, std::size_t k, std::size_t m, std::size_t n,
                             std::uint32_t r) {
  if (k < 1 || k >= m || m > n) throw DomainError("glr_instance: need 1 <= k < m <= n");
  ColoringProblem pb;
  pb.r = r;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (const auto& a : enumerate_grassmannian(p, k, n)) {
    index.emplace(a.entries(), static_cast<std::uint32_t>(pb.labels.size()));
    pb.labels.push_back(encode(a));
  }
  pb.ground_size = pb.labels.size();
  const auto inner = enumerate_grassmannian(p, k, m);
  SlotCounter slots;
  for (const auto& R : enumerate_grassmannian(p, m, n)) {
    slots.add(inner.size());
    std::set<std::uint32_t> els;
    for (const auto& a : inner) els.insert(index.at(rcef_decompose(R * a).red.entries()));
    pb.copies.push_back(Copy{{Fiber(els.begin(), els.end())}});
  }
  dedupe_copies(pb);
  return pb;
}

ColoringProblem ff_factor_instance(std::uint32_t p, std::size_t k, std::size_t m, std::size_t n,
                                   std::uint32_t r) {
  if (k < 1 || k > m || m > n) throw DomainError("ff_factor_instance: need 1 <= k <= m <= n");
  ColoringProblem pb;
  pb.r = r;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (const auto& a : enumerate_full_rank(p, n, k)) {
    index.emplace(a.entries(), static_cast<std::uint32_t>(pb.labels.size()));
    pb.labels.push_back(encode(a));
  }
  pb.ground_size = pb.labels.size();
  const auto inner = enumerate_full_rank(p, m, k);
  std::vector<std::vector<std::uint32_t>> inner_tau;
  for (const auto& a : inner) inner_tau.push_back(rcef_decompose(a).tau.matrix().entries());
  SlotCounter slots;
  for (const auto& R : enumerate_grassmannian(p, m, n)) {
    slots.add(inner.size());
    std::map<std::vector<std::uint32_t>, std::set<std::uint32_t>> groups;
    for (std::size_t i = 0; i < inner.size(); ++i)
      groups[inner_tau[i]].insert(index.at((R * inner[i]).entries()));
    pb.copies.push_back(fibered(groups));
  }
  dedupe_copies(pb);
  return pb;
}

ColoringProblem bool_factor_instance(std::size_t k, std::size_t m, std::size_t n, std::uint32_t r) {
  if (k < 1 || k > m || m > n) throw DomainError("bool_factor_instance: need 1 <= k <= m <= n");
  if (n > 64) throw DomainError("bool_factor_instance: n <= 64");
  ColoringProblem pb;
  pb.r = r;
  std::map<BooleanMatrix, std::uint32_t> index;
  for (const auto& b : enumerate_ba(n, k)) {
    index.emplace(b, static_cast<std::uint32_t>(pb.labels.size()));
    pb.labels.push_back(encode(b));
  }
  pb.ground_size = pb.labels.size();
  const auto inner = enumerate_ba(m, k);
  SlotCounter slots;
  for (const auto& R : enumerate_oba(n, m)) {
    slots.add(inner.size());
    std::map<std::vector<std::uint32_t>, std::set<std::uint32_t>> groups;
    for (const auto& b : inner) groups[pi(b).values()].insert(index.at(R * b));
    pb.copies.push_back(fibered(groups));
  }
  dedupe_copies(pb);
  return pb;
}

ColoringProblem gowers_instance(std::size_t k, std::size_t m, std::size_t n, std::uint32_t r) {
  if (k < 1 || m < 1) throw DomainError("gowers_instance: need k, m >= 1");
  if (n > 20) throw BudgetError("gowers_instance: n too large");
  ColoringProblem pb;
  pb.r = r;
  const auto fin = enumerate_fin(k, n);
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  std::vector<std::uint64_t> supp;
  for (const auto& f : fin) {
    index.emplace(f.values(), static_cast<std::uint32_t>(pb.labels.size()));
    pb.labels.push_back(join(f.values(), ' '));
    std::uint64_t s = 0;
    for (auto i : f.support()) s |= 1ull << i;
    supp.push_back(s);
  }
  pb.ground_size = pb.labels.size();
  SlotCounter slots;
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::size_t> pick;
  // Ordered m-tuples of pairwise disjointly supported blocks.
  auto rec = [&](auto&& self, std::uint64_t used) -> void {
    if (pick.size() == m) {
      std::vector<FinMap> blocks;
      for (auto i : pick) blocks.push_back(fin[i]);
      std::vector<std::uint32_t> els;
      for (const auto& g : combinatorial_space(blocks, k)) els.push_back(index.at(g.values()));
      std::sort(els.begin(), els.end());
      els.erase(std::unique(els.begin(), els.end()), els.end());
      if (seen.insert(els).second) {
        slots.add(els.size());
        pb.copies.push_back(Copy{{Fiber(els.begin(), els.end())}});
      }
      return;
    }
    for (std::size_t i = 0; i < fin.size(); ++i) {
      if (supp[i] & used) continue;
      pick.push_back(i);
      self(self, used | supp[i]);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return pb;
}

ColoringProblem sq_factor_instance(std::uint32_t p, std::size_t k, std::size_t m, std::size_t n,
                                   std::uint32_t r) {
  if (k != 1) throw DomainError("sq_factor_instance: only k = 1 is supported");
  if (n > 4) throw BudgetError("sq_factor_instance: n <= 4");
  if (m < k || m > n) throw DomainError("sq_factor_instance: need k <= m <= n");
  ColoringProblem pb;
  pb.r = r;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  // Rank-1 n×n matrices.
  std::set<PrimeFieldMatrix> ground;
  const auto cols = enumerate_full_rank(p, n, 1);
  for (const auto& u : cols)
    for (const auto& v : cols) ground.insert(u * v.transpose());
  for (const auto& a : ground) {
    index.emplace(a.entries(), static_cast<std::uint32_t>(pb.labels.size()));
    pb.labels.push_back(encode(a));
  }
  pb.ground_size = pb.labels.size();
  std::set<PrimeFieldMatrix> inner_set;
  const auto mcols = enumerate_full_rank(p, m, 1);
  for (const auto& u : mcols)
    for (const auto& v : mcols) inner_set.insert(u * v.transpose());
  std::vector<PrimeFieldMatrix> inner(inner_set.begin(), inner_set.end());
  std::vector<std::vector<std::uint32_t>> key;
  for (const auto& a : inner) key.push_back(tau2(a).gamma.matrix().entries());
  const auto E = enumerate_grassmannian(p, m, n);
  SlotCounter slots;
  for (const auto& R : E)
    for (const auto& S : E) {
      slots.add(inner.size());
      std::map<std::vector<std::uint32_t>, std::set<std::uint32_t>> groups;
      for (std::size_t i = 0; i < inner.size(); ++i)
        groups[key[i]].insert(index.at((R * inner[i] * S.transpose()).entries()));
      pb.copies.push_back(fibered(groups));
    }
  dedupe_copies(pb);
  return pb;
}

Family parse_family(const std::string& tag) {
  if (tag == "drt") return Family::Drt;
  if (tag == "glr") return Family::Glr;
  if (tag == "ff-factor") return Family::FfFactor;
  if (tag == "bool-factor") return Family::BoolFactor;
  if (tag == "gowers") return Family::Gowers;
  if (tag == "sq-factor") return Family::SqFactor;
  throw DomainError("unknown instance family '" + tag + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Drt: return "drt";
    case Family::Glr: return "glr";
    case Family::FfFactor: return "ff-factor";
    case Family::BoolFactor: return "bool-factor";
    case Family::Gowers: return "gowers";
    case Family::SqFactor: return "sq-factor";
  }
  return "?";
}

ColoringProblem build_instance(Family f, const FamilyParams& q, std::size_t n) {
  switch (f) {
    case Family::Drt: return drt_instance(q.k, q.m, n, q.r);
    case Family::Glr: return glr_instance(q.p, q.k, q.m, n, q.r);
    case Family::FfFactor: return ff_factor_instance(q.p, q.k, q.m, n, q.r);
    case Family::BoolFactor: return bool_factor_instance(q.k, q.m, n, q.r);
    case Family::Gowers: return gowers_instance(q.k, q.m, n, q.r);
    case Family::SqFactor: return sq_factor_instance(q.p, q.k, q.m, n, q.r);
  }
  throw DomainError("unknown family");
}

std::size_t family_min_n(Family, const FamilyParams& q) { return std::max<std::size_t>(q.m, 1); }

MinNResult min_n(Family f, const FamilyParams& params, std::size_t n_min, std::size_t n_max,
                 const SearchOptions& opts) {
  MinNResult out;
  for (std::size_t n = std::max(n_min, family_min_n(f, params)); n <= n_max; ++n) {
    ColoringProblem pb;
    try {
      pb = build_instance(f, params, n);
    } catch (const BudgetError&) {
      out.budget_hit = true;
      return out;
    }
    MinNStep step{n, pb.ground_size, pb.copies.size(), exists_bad_coloring(pb, opts)};
    const auto st = step.outcome.status;
    out.steps.push_back(std::move(step));
    if (st == SearchStatus::BudgetExhausted) {
      out.budget_hit = true;
      return out;
    }
    if (st == SearchStatus::NoBadColoring) {
      out.n = n;
      return out;
    }
  }
  return out;
}

}  // namespace ramfac
