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

#ifndef TRIGSCAN_FORMULA_H_
#define TRIGSCAN_FORMULA_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace trigscan {

// Immutable boolean formula over atoms identified by integer keys. Built
// only through the smart constructors, which keep n-ary And/Or flattened,
// deduplicated and canonically ordered, and fold constants and directly
// complementary atoms (x & !x, x | !x).
class Formula {
 public:
  enum class Kind { kTrue, kFalse, kAtom, kAnd, kOr };

  Formula() : Formula(Kind::kTrue) {}

  static Formula True() { return Formula(Kind::kTrue); }
  static Formula False() { return Formula(Kind::kFalse); }
  static Formula Atom(uint64_t key, bool positive = true);
  static Formula And(std::vector<Formula> children);
  static Formula Or(std::vector<Formula> children);
  static Formula And(Formula a, Formula b) { return And({std::move(a), std::move(b)}); }
  static Formula Or(Formula a, Formula b) { return Or({std::move(a), std::move(b)}); }
  // Negation pushed to the atoms.
  static Formula Not(const Formula& f);

  Kind kind() const { return kind_; }
  bool is_true() const { return kind_ == Kind::kTrue; }
  bool is_false() const { return kind_ == Kind::kFalse; }
  uint64_t atom() const { return atom_; }
  bool positive() const { return positive_; }
  const std::vector<Formula>& children() const;

  // Total number of nodes.
  size_t NodeCount() const { return node_count_; }
  // Number of atom occurrences.
  size_t Size() const;
  std::set<uint64_t> Atoms() const;
  // True when Atom(key, positive) occurs anywhere in the formula.
  bool ContainsLiteral(uint64_t key, bool positive) const;
  bool ContainsAtom(uint64_t key) const;

  bool Evaluate(const std::function<bool(uint64_t)>& assignment) const;

  // `namer` maps an atom key to its display name; defaults to "c<key>".
  // Negation is "!", conjunction " & ", disjunction " | ".
  std::string ToString(
      const std::function<std::string(uint64_t)>& namer = nullptr) const;

  std::strong_ordering operator<=>(const Formula& other) const;
  bool operator==(const Formula& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

 private:
  explicit Formula(Kind kind) : kind_(kind) {}

  Kind kind_;
  uint64_t atom_ = 0;
  bool positive_ = true;
  std::shared_ptr<const std::vector<Formula>> children_;
  size_t node_count_ = 1;
};

struct MinimizeResult {
  Formula formula;
  // Set when the input had more distinct atoms than the cap (or the exact
  // cover search ran out of budget) and only algebraic rules were applied.
  bool partial = false;
};

// Exact two-level minimization (prime implicants plus minimum cover) for
// formulas over at most `atom_cap` distinct atoms; algebraic rewriting
// (absorption, adjacency merging) above it.
MinimizeResult Minimize(const Formula& formula, size_t atom_cap = 16);

// Rewrites with absorption and adjacency merging only.
Formula SimplifyAlgebraic(const Formula& formula);

// Truth table of `formula` over `vars` (bit i of the row index is vars[i]).
std::vector<bool> TruthTable(const Formula& formula,
                             const std::vector<uint64_t>& vars);

}  // namespace trigscan

#endif  // TRIGSCAN_FORMULA_H_
