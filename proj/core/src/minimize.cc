// Copyright 2026 The Trigscan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Quine-McCluskey over bit-packed truth tables.

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <unordered_set>

#include "trigscan/formula.h"

namespace trigscan {

namespace {

constexpr size_t kMaxImplicants = 200000;
constexpr size_t kMaxCoverNodes = 200000;

// Truth table over n variables, one bit per row.
class Table {
 public:
  explicit Table(size_t n)
      : rows_(size_t{1} << n), words_((rows_ + 63) / 64, 0) {}

  static Table Const(size_t n, bool value) {
    Table t(n);
    if (value) {
      std::fill(t.words_.begin(), t.words_.end(), ~uint64_t{0});
      t.Trim();
    }
    return t;
  }

  static Table Var(size_t n, size_t i) {
    Table t(n);
    for (size_t r = 0; r < t.rows_; ++r) {
      if ((r >> i) & 1) t.words_[r / 64] |= uint64_t{1} << (r % 64);
    }
    return t;
  }

  bool Get(size_t r) const { return (words_[r / 64] >> (r % 64)) & 1; }
  size_t rows() const { return rows_; }

  void And(const Table& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  }
  void Or(const Table& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }
  void Invert() {
    for (auto& w : words_) w = ~w;
    Trim();
  }

 private:
  void Trim() {
    if (rows_ < 64) words_[0] &= (uint64_t{1} << rows_) - 1;
  }

  size_t rows_;
  std::vector<uint64_t> words_;
};

Table Evaluate(const Formula& f, const std::map<uint64_t, size_t>& index,
               size_t n) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return Table::Const(n, true);
    case Formula::Kind::kFalse:
      return Table::Const(n, false);
    case Formula::Kind::kAtom: {
      Table t = Table::Var(n, index.at(f.atom()));
      if (!f.positive()) t.Invert();
      return t;
    }
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      const bool is_and = f.kind() == Formula::Kind::kAnd;
      Table acc = Table::Const(n, is_and);
      for (const auto& c : f.children()) {
        Table t = Evaluate(c, index, n);
        if (is_and) {
          acc.And(t);
        } else {
          acc.Or(t);
        }
      }
      return acc;
    }
  }
  return Table::Const(n, false);
}

struct Implicant {
  uint32_t value;
  uint32_t mask;  // don't-care positions
  bool operator==(const Implicant&) const = default;
  bool Covers(uint32_t minterm) const { return (minterm & ~mask) == value; }
  int Literals(size_t n) const {
    return static_cast<int>(n) - std::popcount(mask);
  }
};

struct ImplicantHash {
  size_t operator()(const Implicant& i) const {
    return (size_t{i.mask} << 32) ^ i.value;
  }
};

std::optional<std::vector<Implicant>> PrimeImplicants(
    const std::vector<uint32_t>& minterms, size_t n) {
  std::vector<Implicant> primes;
  std::unordered_set<Implicant, ImplicantHash> level;
  for (uint32_t m : minterms) level.insert({m, 0});
  size_t generated = level.size();
  while (!level.empty()) {
    std::unordered_set<Implicant, ImplicantHash> next;
    std::unordered_set<Implicant, ImplicantHash> merged;
    for (const Implicant& imp : level) {
      for (size_t b = 0; b < n; ++b) {
        const uint32_t bit = uint32_t{1} << b;
        if ((imp.mask & bit) || (imp.value & bit)) continue;
        Implicant partner{imp.value | bit, imp.mask};
        if (!level.count(partner)) continue;
        next.insert({imp.value, imp.mask | bit});
        merged.insert(imp);
        merged.insert(partner);
      }
    }
    for (const Implicant& imp : level) {
      if (!merged.count(imp)) primes.push_back(imp);
    }
    generated += next.size();
    if (generated > kMaxImplicants) return std::nullopt;
    level = std::move(next);
  }
  std::sort(primes.begin(), primes.end(), [](const auto& a, const auto& b) {
    return std::tie(a.mask, a.value) < std::tie(b.mask, b.value);
  });
  return primes;
}

// Minimum cover by (implicant count, literal count): essential primes, a
// greedy upper bound, then branch and bound within a node budget.
class CoverSearch {
 public:
  CoverSearch(const std::vector<Implicant>& primes,
              const std::vector<uint32_t>& minterms, size_t n)
      : primes_(primes), n_(n), covers_(primes.size()),
        covering_(minterms.size()) {
    for (size_t t = 0; t < minterms.size(); ++t) {
      for (size_t p = 0; p < primes.size(); ++p) {
        if (primes[p].Covers(minterms[t])) {
          covering_[t].push_back(p);
          covers_[p].push_back(t);
        }
      }
    }
  }

  // `exact` is cleared when the search stopped on its budget.
  std::vector<size_t> Run(bool* exact) {
    std::vector<int> covered(covering_.size(), 0);
    std::vector<size_t> chosen;
    for (const auto& options : covering_) {
      if (options.size() == 1 && !Contains(chosen, options[0])) {
        chosen.push_back(options[0]);
        Apply(options[0], covered, +1);
      }
    }
    std::vector<int> greedy_covered = covered;
    best_ = chosen;
    Greedy(greedy_covered, best_);
    best_cost_ = Cost(best_);
    Search(covered, chosen);
    *exact = nodes_ <= kMaxCoverNodes;
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  static bool Contains(const std::vector<size_t>& v, size_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  }

  std::pair<size_t, int> Cost(const std::vector<size_t>& chosen) const {
    int literals = 0;
    for (size_t p : chosen) literals += primes_[p].Literals(n_);
    return {chosen.size(), literals};
  }

  void Apply(size_t p, std::vector<int>& covered, int delta) const {
    for (size_t t : covers_[p]) covered[t] += delta;
  }

  void Greedy(std::vector<int>& covered, std::vector<size_t>& chosen) const {
    while (true) {
      size_t best = primes_.size();
      size_t best_gain = 0;
      for (size_t p = 0; p < primes_.size(); ++p) {
        size_t gain = 0;
        for (size_t t : covers_[p]) gain += covered[t] == 0;
        if (gain > best_gain ||
            (gain == best_gain && gain > 0 &&
             primes_[p].Literals(n_) < primes_[best].Literals(n_))) {
          best = p;
          best_gain = gain;
        }
      }
      if (best_gain == 0) break;
      chosen.push_back(best);
      Apply(best, covered, +1);
    }
    for (size_t i = chosen.size(); i-- > 0;) {
      bool redundant = true;
      for (size_t t : covers_[chosen[i]]) {
        if (covered[t] == 1) {
          redundant = false;
          break;
        }
      }
      if (redundant) {
        Apply(chosen[i], covered, -1);
        chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  void Search(std::vector<int>& covered, std::vector<size_t>& chosen) {
    if (++nodes_ > kMaxCoverNodes) return;
    if (Cost(chosen) >= best_cost_) return;
    size_t pick = covering_.size();
    for (size_t t = 0; t < covering_.size(); ++t) {
      if (covered[t] > 0) continue;
      if (pick == covering_.size() ||
          covering_[t].size() < covering_[pick].size()) {
        pick = t;
      }
    }
    if (pick == covering_.size()) {
      best_ = chosen;
      best_cost_ = Cost(chosen);
      return;
    }
    if (chosen.size() + 1 > best_cost_.first) return;
    for (size_t p : covering_[pick]) {
      chosen.push_back(p);
      Apply(p, covered, +1);
      Search(covered, chosen);
      Apply(p, covered, -1);
      chosen.pop_back();
      if (nodes_ > kMaxCoverNodes) return;
    }
  }

  const std::vector<Implicant>& primes_;
  size_t n_;
  std::vector<std::vector<size_t>> covers_;    // prime -> minterm indices
  std::vector<std::vector<size_t>> covering_;  // minterm -> prime indices
  std::vector<size_t> best_;
  std::pair<size_t, int> best_cost_{0, 0};
  size_t nodes_ = 0;
};

}  // namespace

std::vector<bool> TruthTable(const Formula& formula,
                             const std::vector<uint64_t>& vars) {
  std::map<uint64_t, size_t> index;
  for (size_t i = 0; i < vars.size(); ++i) index[vars[i]] = i;
  Table t = Evaluate(formula, index, vars.size());
  std::vector<bool> out(t.rows());
  for (size_t r = 0; r < t.rows(); ++r) out[r] = t.Get(r);
  return out;
}

MinimizeResult Minimize(const Formula& formula, size_t atom_cap) {
  const std::set<uint64_t> atom_set = formula.Atoms();
  if (atom_set.empty()) return {formula, false};
  if (atom_set.size() > atom_cap || atom_set.size() > 24) {
    return {SimplifyAlgebraic(formula), true};
  }
  const std::vector<uint64_t> vars(atom_set.begin(), atom_set.end());
  const std::vector<bool> full = TruthTable(formula, vars);

  // Keep only the variables the function depends on.
  std::vector<size_t> support;
  for (size_t i = 0; i < vars.size(); ++i) {
    const size_t bit = size_t{1} << i;
    for (size_t r = 0; r < full.size(); ++r) {
      if (!(r & bit) && full[r] != full[r | bit]) {
        support.push_back(i);
        break;
      }
    }
  }
  const size_t n = support.size();
  std::vector<uint32_t> minterms;
  for (uint32_t r = 0; r < (uint32_t{1} << n); ++r) {
    size_t full_row = 0;
    for (size_t i = 0; i < n; ++i) {
      if ((r >> i) & 1) full_row |= size_t{1} << support[i];
    }
    if (full[full_row]) minterms.push_back(r);
  }
  if (minterms.empty()) return {Formula::False(), false};
  if (minterms.size() == (size_t{1} << n)) return {Formula::True(), false};

  auto primes = PrimeImplicants(minterms, n);
  if (!primes) return {SimplifyAlgebraic(formula), true};
  CoverSearch search(*primes, minterms, n);
  bool exact = true;
  std::vector<size_t> cover = search.Run(&exact);

  std::vector<Formula> terms;
  for (size_t p : cover) {
    const Implicant& imp = (*primes)[p];
    std::vector<Formula> literals;
    for (size_t i = 0; i < n; ++i) {
      const uint32_t bit = uint32_t{1} << i;
      if (imp.mask & bit) continue;
      literals.push_back(Formula::Atom(vars[support[i]], (imp.value & bit) != 0));
    }
    terms.push_back(Formula::And(std::move(literals)));
  }
  return {Formula::Or(std::move(terms)), !exact};
}

}  // namespace trigscan
