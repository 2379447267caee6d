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

#include "trigscan/formula.h"

#include <algorithm>

namespace trigscan {

namespace {

const std::vector<Formula>& NoChildren() {
  static const std::vector<Formula> kEmpty;
  return kEmpty;
}

}  // namespace

const std::vector<Formula>& Formula::children() const {
  return children_ ? *children_ : NoChildren();
}

Formula Formula::Atom(uint64_t key, bool positive) {
  Formula f(Kind::kAtom);
  f.atom_ = key;
  f.positive_ = positive;
  return f;
}

namespace {

// Shared body of And/Or: `unit` is the identity, `zero` the annihilator.
std::vector<Formula> FlattenChildren(std::vector<Formula> children,
                                     Formula::Kind self, Formula::Kind unit,
                                     Formula::Kind zero, bool* annihilated) {
  std::vector<Formula> flat;
  flat.reserve(children.size());
  for (auto& c : children) {
    if (c.kind() == unit) continue;
    if (c.kind() == zero) {
      *annihilated = true;
      return {};
    }
    if (c.kind() == self) {
      flat.insert(flat.end(), c.children().begin(), c.children().end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  // Sorted atoms of one key are adjacent, positive first.
  for (size_t i = 0; i + 1 < flat.size(); ++i) {
    if (flat[i].kind() == Formula::Kind::kAtom &&
        flat[i + 1].kind() == Formula::Kind::kAtom &&
        flat[i].atom() == flat[i + 1].atom()) {
      *annihilated = true;
      return {};
    }
  }
  return flat;
}

}  // namespace

Formula Formula::And(std::vector<Formula> children) {
  bool annihilated = false;
  auto flat = FlattenChildren(std::move(children), Kind::kAnd, Kind::kTrue,
                              Kind::kFalse, &annihilated);
  if (annihilated) return False();
  if (flat.empty()) return True();
  if (flat.size() == 1) return flat[0];
  Formula f(Kind::kAnd);
  for (const auto& c : flat) f.node_count_ += c.node_count_;
  f.children_ = std::make_shared<const std::vector<Formula>>(std::move(flat));
  return f;
}

Formula Formula::Or(std::vector<Formula> children) {
  bool annihilated = false;
  auto flat = FlattenChildren(std::move(children), Kind::kOr, Kind::kFalse,
                              Kind::kTrue, &annihilated);
  if (annihilated) return True();
  if (flat.empty()) return False();
  if (flat.size() == 1) return flat[0];
  Formula f(Kind::kOr);
  for (const auto& c : flat) f.node_count_ += c.node_count_;
  f.children_ = std::make_shared<const std::vector<Formula>>(std::move(flat));
  return f;
}

Formula Formula::Not(const Formula& f) {
  switch (f.kind_) {
    case Kind::kTrue:
      return False();
    case Kind::kFalse:
      return True();
    case Kind::kAtom:
      return Atom(f.atom_, !f.positive_);
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<Formula> negated;
      for (const auto& c : f.children()) negated.push_back(Not(c));
      return f.kind_ == Kind::kAnd ? Or(std::move(negated))
                                   : And(std::move(negated));
    }
  }
  return f;
}

size_t Formula::Size() const {
  if (kind_ == Kind::kAtom) return 1;
  size_t n = 0;
  for (const auto& c : children()) n += c.Size();
  return n;
}

std::set<uint64_t> Formula::Atoms() const {
  std::set<uint64_t> out;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->kind_ == Kind::kAtom) out.insert(f->atom_);
    for (const auto& c : f->children()) stack.push_back(&c);
  }
  return out;
}

bool Formula::ContainsLiteral(uint64_t key, bool positive) const {
  if (kind_ == Kind::kAtom) return atom_ == key && positive_ == positive;
  for (const auto& c : children()) {
    if (c.ContainsLiteral(key, positive)) return true;
  }
  return false;
}

bool Formula::ContainsAtom(uint64_t key) const {
  return ContainsLiteral(key, true) || ContainsLiteral(key, false);
}

bool Formula::Evaluate(const std::function<bool(uint64_t)>& assignment) const {
  switch (kind_) {
    case Kind::kTrue:
      return true;
    case Kind::kFalse:
      return false;
    case Kind::kAtom:
      return assignment(atom_) == positive_;
    case Kind::kAnd:
      for (const auto& c : children()) {
        if (!c.Evaluate(assignment)) return false;
      }
      return true;
    case Kind::kOr:
      for (const auto& c : children()) {
        if (c.Evaluate(assignment)) return true;
      }
      return false;
  }
  return false;
}

std::string Formula::ToString(
    const std::function<std::string(uint64_t)>& namer) const {
  switch (kind_) {
    case Kind::kTrue:
      return "true";
    case Kind::kFalse:
      return "false";
    case Kind::kAtom: {
      std::string name = namer ? namer(atom_) : "c" + std::to_string(atom_);
      return positive_ ? name : "!" + name;
    }
    case Kind::kAnd:
    case Kind::kOr: {
      const char* sep = kind_ == Kind::kAnd ? " & " : " | ";
      std::string out;
      for (size_t i = 0; i < children().size(); ++i) {
        const Formula& c = children()[i];
        if (i > 0) out += sep;
        bool wrap = c.kind_ == Kind::kAnd || c.kind_ == Kind::kOr;
        out += wrap ? "(" + c.ToString(namer) + ")" : c.ToString(namer);
      }
      return out;
    }
  }
  return "";
}

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  if (auto c = kind_ <=> other.kind_; c != 0) return c;
  if (kind_ == Kind::kAtom) {
    if (auto c = atom_ <=> other.atom_; c != 0) return c;
    // positive before negative
    return other.positive_ <=> positive_;
  }
  if (children_ == other.children_) return std::strong_ordering::equal;
  const auto& a = children();
  const auto& b = other.children();
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

// ---------------------------------------------------------------------------
// Algebraic simplification

namespace {

// The conjuncts (for an Or child) or disjuncts (for an And child) of `f`
// viewed from a parent of the dual kind.
std::vector<Formula> Parts(const Formula& f, Formula::Kind inner) {
  if (f.kind() == inner) return f.children();
  return {f};
}

Formula Rebuild(Formula::Kind inner, std::vector<Formula> parts) {
  return inner == Formula::Kind::kAnd ? Formula::And(std::move(parts))
                                      : Formula::Or(std::move(parts));
}

bool IsSubset(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Absorption and adjacency merging over the children of an n-ary node of
// kind `outer` whose children are (viewed as) sorted sets of kind `inner`.
std::vector<Formula> Reduce(std::vector<std::vector<Formula>> sets,
                            Formula::Kind inner) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < sets.size() && !changed; ++i) {
      for (size_t j = 0; j < sets.size() && !changed; ++j) {
        if (i == j) continue;
        // Absorption: the smaller set subsumes the larger one.
        if (IsSubset(sets[i], sets[j])) {
          sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
        // Adjacency: S+x and S+!x merge into S.
        if (sets[i].size() != sets[j].size()) continue;
        std::vector<Formula> only_i;
        std::vector<Formula> only_j;
        std::set_difference(sets[i].begin(), sets[i].end(), sets[j].begin(),
                            sets[j].end(), std::back_inserter(only_i));
        std::set_difference(sets[j].begin(), sets[j].end(), sets[i].begin(),
                            sets[i].end(), std::back_inserter(only_j));
        if (only_i.size() == 1 && only_j.size() == 1 &&
            only_i[0].kind() == Formula::Kind::kAtom &&
            only_j[0].kind() == Formula::Kind::kAtom &&
            only_i[0].atom() == only_j[0].atom()) {
          std::vector<Formula> common;
          std::set_intersection(sets[i].begin(), sets[i].end(),
                                sets[j].begin(), sets[j].end(),
                                std::back_inserter(common));
          sets[i] = std::move(common);
          sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
  }
  std::vector<Formula> out;
  for (auto& s : sets) out.push_back(Rebuild(inner, std::move(s)));
  return out;
}

}  // namespace

Formula SimplifyAlgebraic(const Formula& formula) {
  if (formula.kind() != Formula::Kind::kAnd &&
      formula.kind() != Formula::Kind::kOr) {
    return formula;
  }
  const bool is_or = formula.kind() == Formula::Kind::kOr;
  const Formula::Kind inner = is_or ? Formula::Kind::kAnd : Formula::Kind::kOr;
  std::vector<Formula> kids;
  for (const auto& c : formula.children()) kids.push_back(SimplifyAlgebraic(c));
  Formula rebuilt = is_or ? Formula::Or(kids) : Formula::And(kids);
  if (rebuilt.kind() != formula.kind()) return rebuilt;
  std::vector<std::vector<Formula>> sets;
  for (const auto& c : rebuilt.children()) sets.push_back(Parts(c, inner));
  auto reduced = Reduce(std::move(sets), inner);
  return is_or ? Formula::Or(std::move(reduced))
               : Formula::And(std::move(reduced));
}

}  // namespace trigscan
