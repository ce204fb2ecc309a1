#include <optional>
#include <vector>

#include "tgwa/tgwc.hpp"

// Word reduction by the defining relations only.  Every rewrite is one of
//   (i)   Y_i X_i -> t_i,  X_i Y_i -> sigma_i(t_i)       (contraction)
//   (ii)  X_a Y_b -> mu_ab Y_b X_a    (a != b)           (forward swap)
//   (iii) Y_a X_b -> mu_ba^{-1} X_b Y_a  (a != b)        (backward swap)
// read as equalities, so the term is unchanged as an element of the
// construction.  A contraction commutes the produced ring element left past
// the prefix via the group action, keeping coefficients on the left.
//
// Strategy: while some index occurs with both kinds, the closest such pair
// is eliminated by swapping letters inside its window until the pair meets
// and contracts.  In an X...Y window the applicable moves are forward swaps,
// in a Y...X window backward swaps; each strictly decreases the window's
// inversion count, and any same-index adjacency that appears along the way
// contracts immediately, so every round shortens the word by two.  Once no
// index has both kinds the word is sorted into (Y block)(X block) shape by
// forward swaps.

namespace tgwa {

namespace {

struct TermState {
  Polynomial coeff;
  Word w;
};

bool is_contraction(const Word& w, size_t p) {
  return w[p].index == w[p + 1].index && w[p].kind != w[p + 1].kind;
}

std::optional<size_t> find_contraction(const Word& w, ReduceStrategy strategy) {
  if (w.size() < 2) return std::nullopt;
  if (strategy == ReduceStrategy::leftmost) {
    for (size_t p = 0; p + 1 < w.size(); ++p)
      if (is_contraction(w, p)) return p;
  } else {
    for (size_t p = w.size() - 1; p-- > 0;)
      if (is_contraction(w, p)) return p;
  }
  return std::nullopt;
}

void contract_at(const TgwcDatum& d, TermState& t, size_t p) {
  const int i = t.w[p].index;
  // Y_i X_i = t_i, X_i Y_i = sigma_i(t_i).
  Polynomial produced = (t.w[p].kind == LetterKind::y)
                            ? d.t(i)
                            : d.sigma(i).apply(d.t(i));
  Word prefix(t.w.begin(), t.w.begin() + static_cast<long>(p));
  t.coeff *= group_action(d, word_degree(prefix, d.rank()), produced);
  t.w.erase(t.w.begin() + static_cast<long>(p),
            t.w.begin() + static_cast<long>(p) + 2);
}

// Swaps the adjacent opposite-kind letters at (p, p+1); requires distinct
// indices.
void swap_at(const TgwcDatum& d, TermState& t, size_t p) {
  const Letter a = t.w[p];
  const Letter b = t.w[p + 1];
  if (a.kind == LetterKind::x)
    t.coeff *= d.mu(a.index, b.index);             // X_a Y_b = mu_ab Y_b X_a
  else
    t.coeff *= d.mu(b.index, a.index).inverse();   // Y_a X_b = mu_ba^{-1} X_b Y_a
  std::swap(t.w[p], t.w[p + 1]);
}

struct PairSelection {
  size_t p, q;  // same index, opposite kinds, p < q
};

std::optional<PairSelection> select_pair(const Word& w,
                                         ReduceStrategy strategy) {
  std::optional<PairSelection> best;
  for (size_t p = 0; p < w.size(); ++p) {
    for (size_t q = p + 1; q < w.size(); ++q) {
      if (w[p].index != w[q].index || w[p].kind == w[q].kind) continue;
      if (!best || q - p < best->q - best->p) {
        best = PairSelection{p, q};
      } else if (q - p == best->q - best->p &&
                 strategy == ReduceStrategy::rightmost && p > best->p) {
        best = PairSelection{p, q};
      }
      break;  // only the nearest partner of w[p] matters
    }
  }
  return best;
}

void reduce_term(const TgwcDatum& d, TermState& t, ReduceStrategy strategy) {
  for (;;) {
    if (auto c = find_contraction(t.w, strategy)) {
      contract_at(d, t, *c);
      continue;
    }
    auto sel = select_pair(t.w, strategy);
    if (!sel) break;
    size_t p = sel->p;
    size_t q = sel->q;
    const bool x_first = (t.w[p].kind == LetterKind::x);
    while (q > p + 1 && !find_contraction(t.w, strategy)) {
      std::vector<size_t> candidates;
      for (size_t m = p; m < q; ++m) {
        const bool xy = t.w[m].kind == LetterKind::x &&
                        t.w[m + 1].kind == LetterKind::y;
        const bool yx = t.w[m].kind == LetterKind::y &&
                        t.w[m + 1].kind == LetterKind::x;
        if (x_first ? xy : yx) candidates.push_back(m);
      }
      // A kind switch always exists strictly inside an X...Y (or Y...X)
      // window, so candidates is nonempty.
      const size_t m = (strategy == ReduceStrategy::leftmost)
                           ? candidates.front()
                           : candidates.back();
      swap_at(d, t, m);
      if (m == p)
        ++p;
      else if (m + 1 == q)
        --q;
    }
  }
  // No index occurs with both kinds; sort into (Y block)(X block).
  for (;;) {
    std::vector<size_t> candidates;
    for (size_t m = 0; m + 1 < t.w.size(); ++m)
      if (t.w[m].kind == LetterKind::x && t.w[m + 1].kind == LetterKind::y)
        candidates.push_back(m);
    if (candidates.empty()) break;
    swap_at(d, t,
            strategy == ReduceStrategy::leftmost ? candidates.front()
                                                 : candidates.back());
  }
}

}  // namespace

Polynomial project_to_base(const TgwcDatum& d, const GradedElement& a,
                           ReduceStrategy strategy) {
  const Degree zero(d.rank(), 0);
  Polynomial out(d.ring());
  for (const auto& [w, c] : a.terms()) {
    if (word_degree(w, d.rank()) != zero)
      throw DegreeError("projection requires every word to have degree zero");
    TermState t{c, w};
    reduce_term(d, t, strategy);
    if (!t.w.empty())
      throw InconsistencyError("degree-zero word failed to contract fully");
    out += t.coeff;
  }
  return out;
}

GradedElement reduce_to_spanning(const TgwcDatum& d, const GradedElement& a,
                                 ReduceStrategy strategy) {
  if (!a.is_homogeneous(d.rank()))
    throw DegreeError("spanning reduction requires homogeneous input");
  GradedElement out;
  for (const auto& [w, c] : a.terms()) {
    TermState t{c, w};
    reduce_term(d, t, strategy);
    out.add_term(t.coeff, t.w);
  }
  return out;
}

}  // namespace tgwa
