#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "posetdim/errors.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

/**
 * Realizer: a family of full linear extensions whose intersection is the
 * order. Orders are stored as raw sequences; verify_realizer checks the
 * invariant rather than the constructor, so unverified candidates can be
 * represented and then rejected.
 */
struct Realizer {
  std::vector<std::vector<int>> orders;
};

/**
 * Extensional boolean function on {0,1}^arity. bits is indexed with alpha_1
 * as the most significant bit, i.e. in lexicographic order of the tuple
 * (alpha_1,...,alpha_d); the text format writes bits in exactly this order.
 */
struct TruthTable {
  int arity = 0;
  std::vector<bool> bits;

  static constexpr int kMaxArity = 20;

  static TruthTable of_arity(int d) {
    if (d < 0) throw BadParameter("truth table arity < 0");
    if (d > kMaxArity) throw ArityTooLarge("truth table arity > " + std::to_string(kMaxArity));
    return TruthTable{d, std::vector<bool>(std::size_t{1} << d, false)};
  }

  static std::size_t index_of(const std::vector<bool>& alpha) {
    std::size_t idx = 0;
    for (bool b : alpha) idx = (idx << 1) | static_cast<std::size_t>(b);
    return idx;
  }

  bool eval(const std::vector<bool>& alpha) const { return bits[index_of(alpha)]; }

  int ones() const { return static_cast<int>(std::count(bits.begin(), bits.end(), true)); }
};

/**
 * φ = α_1 ∧ (α_2 ∨ α_3) ∧ ... ∧ (α_2t ∨ α_2t+1), the shape produced by the
 * width-3 conversion. Stored structurally: its arity 1+2t routinely exceeds
 * any representable extensional table.
 */
struct GuardedConjunction {
  int guard_pairs = 0;

  int arity() const { return 1 + 2 * guard_pairs; }

  bool eval(const std::vector<bool>& alpha) const {
    if (!alpha[0]) return false;
    for (int i = 0; i < guard_pairs; ++i)
      if (!alpha[1 + 2 * i] && !alpha[2 + 2 * i]) return false;
    return true;
  }
};

using BooleanFormula = std::variant<TruthTable, GuardedConjunction>;

inline int formula_arity(const BooleanFormula& phi) {
  if (std::holds_alternative<TruthTable>(phi)) return std::get<TruthTable>(phi).arity;
  return std::get<GuardedConjunction>(phi).arity();
}

inline bool formula_eval(const BooleanFormula& phi, const std::vector<bool>& alpha) {
  if (std::holds_alternative<TruthTable>(phi)) return std::get<TruthTable>(phi).eval(alpha);
  return std::get<GuardedConjunction>(phi).eval(alpha);
}

/**
 * Boolean realizer: d linear orders (not necessarily extensions) and a
 * d-ary formula, with x <= y iff φ((x <=_1 y),...,(x <=_d y)).
 */
struct BooleanRealizer {
  std::vector<std::vector<int>> orders;
  BooleanFormula phi;

  int arity() const { return static_cast<int>(orders.size()); }
};

/**
 * Local realizer: a multiset of partial linear extensions, with
 * x <= y iff no member puts x above y. The multiset is canonicalized
 * (sorted) on construction so serialization is deterministic.
 */
struct LocalRealizer {
  std::vector<PartialLinearExtension> ples;

  LocalRealizer() = default;
  explicit LocalRealizer(std::vector<PartialLinearExtension> p) : ples(std::move(p)) {
    std::sort(ples.begin(), ples.end());
  }
};

/** Width: the maximum number of occurrences of any single element. */
inline int local_width(const LocalRealizer& lr) {
  int top = -1;
  for (const auto& ple : lr.ples)
    for (int x : ple.seq) top = std::max(top, x);
  if (top < 0) return 0;
  std::vector<int> occ(top + 1, 0);
  int w = 0;
  for (const auto& ple : lr.ples)
    for (int x : ple.seq) w = std::max(w, ++occ[x]);
  return w;
}

namespace detail {
inline bool explain(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
  return false;
}
}  // namespace detail

/**
 * True iff every order is a full linear extension of p and every incomparable
 * pair occurs in both relative orders across the family, equivalently the
 * intersection of the orders is exactly p (given at least one order; the
 * empty family verifies only for n <= 1).
 */
inline bool verify_realizer(const Poset& p, const Realizer& r, std::string* why = nullptr) {
  int n = p.size();
  if (r.orders.empty())
    return n <= 1 || detail::explain(why, "empty realizer of a poset with n >= 2");
  std::vector<std::vector<int>> pos;
  pos.reserve(r.orders.size());
  for (const auto& order : r.orders) pos.push_back(order_positions(order, n, "realizer order"));
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p.less(x, y) && pos[i][x] > pos[i][y])
          return detail::explain(why, "order " + std::to_string(i) + " does not extend " +
                                          p.label(x) + " < " + p.label(y));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!p.incomparable(x, y)) continue;
      bool xy = false, yx = false;
      for (const auto& pi : pos) (pi[x] < pi[y] ? xy : yx) = true;
      if (!xy || !yx)
        return detail::explain(why, "incomparable pair " + p.label(x) + "," + p.label(y) +
                                        " is not reversed both ways");
    }
  return true;
}

/** Eq. (1) left-hand side for one ordered pair: φ((x <=_1 y),...,(x <=_d y)). */
inline bool eval_boolean_relation(const BooleanRealizer& br, int x, int y) {
  int d = br.arity();
  if (formula_arity(br.phi) != d) throw ArityMismatch("formula arity != number of orders");
  int n = 0;
  for (const auto& order : br.orders) n = std::max(n, static_cast<int>(order.size()));
  std::vector<bool> alpha(d);
  for (int i = 0; i < d; ++i) {
    auto pos = order_positions(br.orders[i], n, "boolean realizer order");
    alpha[i] = x == y || pos[x] < pos[y];
  }
  return formula_eval(br.phi, alpha);
}

/** True iff Eq. (1) holds for every ordered pair, including x = y. */
inline bool verify_boolean_realizer(const Poset& p, const BooleanRealizer& br,
                                    std::string* why = nullptr) {
  int n = p.size();
  int d = br.arity();
  if (formula_arity(br.phi) != d) throw ArityMismatch("formula arity != number of orders");
  std::vector<std::vector<int>> pos;
  pos.reserve(br.orders.size());
  for (const auto& order : br.orders)
    pos.push_back(order_positions(order, n, "boolean realizer order"));
  std::vector<bool> alpha(d);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int i = 0; i < d; ++i) alpha[i] = x == y || pos[i][x] < pos[i][y];
      if (formula_eval(br.phi, alpha) != p.leq(x, y))
        return detail::explain(why, "Eq. (1) fails at (" + p.label(x) + "," + p.label(y) + ")");
    }
  return true;
}

/**
 * True iff Eq. (2) holds: x <= y exactly when no member puts x above y.
 * Each ple must be a linear extension of p restricted to its support;
 * one that is not throws NotAnExtension (it is not even a candidate part).
 */
inline bool verify_local_realizer(const Poset& p, const LocalRealizer& lr,
                                  std::string* why = nullptr) {
  int n = p.size();
  std::vector<Bits> above(n, Bits(n));  // above[x].test(y): some ple has x above y
  for (const auto& ple : lr.ples) {
    std::vector<char> seen(n, 0);
    for (int x : ple.seq) {
      if (x < 0 || x >= n) throw MalformedOrder("ple id out of range");
      if (seen[x]) throw MalformedOrder("ple repeats an element");
      seen[x] = 1;
    }
    for (std::size_t i = 0; i < ple.seq.size(); ++i)
      for (std::size_t j = i + 1; j < ple.seq.size(); ++j) {
        if (p.leq(ple.seq[j], ple.seq[i]))
          throw NotAnExtension("ple puts " + p.label(ple.seq[j]) + " above " +
                               p.label(ple.seq[i]));
        above[ple.seq[j]].set(ple.seq[i]);
      }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (p.leq(x, y) == above[x].test(y))
        return detail::explain(
            why, p.leq(x, y) ? "comparable pair " + p.label(x) + " < " + p.label(y) +
                                   " has no witnessing co-occurrence"
                             : "pair " + p.label(x) + "," + p.label(y) +
                                   " is never reversed (" + p.label(x) + " above " +
                                   p.label(y) + " missing)");
    }
  return true;
}

/**
 * Zero out the entries of φ never realized by a pair of elements, keeping
 * realized entries. Requires a verifying certificate (else NotARealizer) and
 * an arity small enough for an extensional table. The result still verifies,
 * satisfies φ(1,...,1) = 1, and has φ(α) = 0 or φ(~α) = 0 for every α.
 */
inline TruthTable normalize_truth_table(const Poset& p, const BooleanRealizer& br) {
  std::string why;
  if (!verify_boolean_realizer(p, br, &why))
    throw NotARealizer("normalize_truth_table: certificate does not verify: " + why);
  int d = br.arity();
  TruthTable out = TruthTable::of_arity(d);
  int n = p.size();
  std::vector<std::vector<int>> pos;
  for (const auto& order : br.orders)
    pos.push_back(order_positions(order, n, "boolean realizer order"));
  std::vector<bool> alpha(d);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int i = 0; i < d; ++i) alpha[i] = x == y || pos[i][x] < pos[i][y];
      out.bits[TruthTable::index_of(alpha)] = formula_eval(br.phi, alpha);
    }
  return out;
}

/** A realizer is a boolean realizer whose formula is the d-way conjunction. */
inline BooleanRealizer boolean_from_realizer(const Realizer& r) {
  int d = static_cast<int>(r.orders.size());
  TruthTable phi = TruthTable::of_arity(d);
  phi.bits[(std::size_t{1} << d) - 1] = true;
  return BooleanRealizer{r.orders, phi};
}

/** Full linear extensions, read as a local realizer of width = family size. */
inline LocalRealizer local_from_realizer(const Realizer& r) {
  std::vector<PartialLinearExtension> ples;
  ples.reserve(r.orders.size());
  for (const auto& order : r.orders) ples.push_back(PartialLinearExtension{order});
  return LocalRealizer(std::move(ples));
}

}  // namespace posetdim
