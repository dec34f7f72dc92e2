#include "exclusionpoly/majorization.hpp"

#include <algorithm>
#include <numeric>

#include "exclusionpoly/errors.hpp"

namespace exclusionpoly {

RationalVector PermutationCombination::apply(const RationalVector& x) const {
  RationalVector out(x.size());
  for (const auto& t : terms)
    for (size_t i = 0; i < x.size(); ++i) out[i] += t.weight * x[t.perm[i]];
  return out;
}

RationalMatrix PermutationCombination::to_matrix() const {
  if (terms.empty()) return {};
  const size_t d = terms.front().perm.size();
  RationalMatrix m(d, RationalVector(d));
  for (const auto& t : terms)
    for (size_t i = 0; i < d; ++i) m[i][t.perm[i]] += t.weight;
  return m;
}

RationalVector sort_desc(RationalVector v) {
  std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return b < a; });
  return v;
}

bool majorizes(const RationalVector& v, const RationalVector& w) {
  if (v.size() != w.size()) throw StructuralError("majorization needs equal lengths");
  const RationalVector a = sort_desc(v), b = sort_desc(w);
  Rational pa, pb;
  for (size_t k = 0; k < a.size(); ++k) {
    pa += a[k];
    pb += b[k];
    if (k + 1 < a.size() && pb < pa) return false;
  }
  return pa == pb;
}

bool is_doubly_stochastic(const RationalMatrix& m) {
  const size_t d = m.size();
  if (d == 0) return false;
  for (const auto& row : m) {
    if (row.size() != d) return false;
    for (const auto& x : row)
      if (x.sign() < 0) return false;
    if (sum(row) != Rational(1)) return false;
  }
  for (size_t j = 0; j < d; ++j) {
    Rational col;
    for (size_t i = 0; i < d; ++i) col += m[i][j];
    if (col != Rational(1)) return false;
  }
  return true;
}

RationalMatrix hlp_transfer(const RationalVector& v, const RationalVector& w) {
  if (v.size() != w.size()) throw StructuralError("hlp_transfer needs equal lengths");
  if (!majorizes(v, w)) throw MajorizationError("hlp_transfer: v is not majorized by w");

  const size_t d = v.size();
  const RationalVector target = sort_desc(v);
  RationalVector b = sort_desc(w);

  RationalMatrix m(d, RationalVector(d));
  for (size_t i = 0; i < d; ++i) m[i][i] = 1;

  // Invariant: every prefix sum of b dominates the one of target (equality at
  // the end). Each transfer moves mass from the first surplus coordinate to
  // the first following deficit coordinate and pins at least one of them to
  // its target for good, so at most d-1 transfers happen.
  for (;;) {
    size_t k = d;
    Rational pb, pt;
    for (size_t i = 0; i < d; ++i) {
      pb += b[i];
      pt += target[i];
      if (pb != pt) { k = i; break; }
    }
    if (k == d) break;  // b == target
    size_t l = k + 1;
    while (l < d && !(b[l] < target[l])) ++l;
    if (l == d) throw MajorizationError("hlp_transfer: internal invariant broken");

    const Rational surplus = b[k] - target[k];
    const Rational deficit = target[l] - b[l];
    const Rational delta = std::min(surplus, deficit);
    const Rational theta = delta / (b[k] - b[l]);

    // T-transform on coordinates (k, l) with mixing parameter theta
    RationalVector row_k = m[k], row_l = m[l];
    const Rational one_minus = Rational(1) - theta;
    for (size_t j = 0; j < d; ++j) {
      m[k][j] = one_minus * row_k[j] + theta * row_l[j];
      m[l][j] = theta * row_k[j] + one_minus * row_l[j];
    }
    b[k] -= delta;
    b[l] += delta;
  }
  return m;
}

namespace {

// Kuhn augmenting-path matching on the support graph; match_col[j] is the row
// matched to column j, -1 when free.
bool try_augment(const std::vector<std::vector<int>>& adj, int row, std::vector<int>& match_col,
                 std::vector<bool>& visited) {
  for (int j : adj[row]) {
    if (visited[j]) continue;
    visited[j] = true;
    if (match_col[j] < 0 || try_augment(adj, match_col[j], match_col, visited)) {
      match_col[j] = row;
      return true;
    }
  }
  return false;
}

bool has_perfect_matching(const std::vector<std::vector<int>>& adj, int num_cols) {
  std::vector<int> match_col(num_cols, -1);
  for (size_t i = 0; i < adj.size(); ++i) {
    std::vector<bool> visited(num_cols, false);
    if (!try_augment(adj, static_cast<int>(i), match_col, visited)) return false;
  }
  return true;
}

// Lexicographically smallest perfect matching: fix columns row by row,
// keeping the remainder matchable.
Permutation lex_min_perfect_matching(const RationalMatrix& m) {
  const int d = static_cast<int>(m.size());
  Permutation perm(d, -1);
  std::vector<bool> col_used(d, false);
  for (int i = 0; i < d; ++i) {
    bool placed = false;
    for (int j = 0; j < d && !placed; ++j) {
      if (col_used[j] || m[i][j].is_zero()) continue;
      // residual graph on rows > i and unused columns != j
      std::vector<std::vector<int>> adj(d - i - 1);
      for (int r = i + 1; r < d; ++r)
        for (int c = 0; c < d; ++c)
          if (c != j && !col_used[c] && !m[r][c].is_zero()) adj[r - i - 1].push_back(c);
      if (has_perfect_matching(adj, d)) {
        perm[i] = j;
        col_used[j] = true;
        placed = true;
      }
    }
    if (!placed) throw StructuralError("birkhoff_decompose: support graph lost its perfect matching");
  }
  return perm;
}

// Caratheodory reduction: while more terms than (d-1)^2 + 1, find an affine
// dependence among the permutation matrices and shift weight along it until
// one term drops out.
void caratheodory_prune(std::vector<WeightedPermutation>& terms, int d) {
  const size_t bound = static_cast<size_t>(d - 1) * (d - 1) + 1;
  while (terms.size() > bound) {
    const size_t t = terms.size();
    // columns: one per term; rows: d*d matrix entries plus the affine row
    const size_t rows = static_cast<size_t>(d) * d + 1;
    RationalMatrix a(rows, RationalVector(t));
    for (size_t c = 0; c < t; ++c) {
      for (int i = 0; i < d; ++i) a[static_cast<size_t>(i) * d + terms[c].perm[i]][c] = 1;
      a[rows - 1][c] = 1;
    }
    // nullspace vector via Gauss-Jordan
    std::vector<int> pivot_col_of_row;
    size_t r = 0;
    for (size_t lead = 0; lead < t && r < rows; ++lead) {
      size_t piv = r;
      while (piv < rows && a[piv][lead].is_zero()) ++piv;
      if (piv == rows) continue;
      std::swap(a[r], a[piv]);
      const Rational p = a[r][lead];
      for (size_t c = 0; c < t; ++c) a[r][c] /= p;
      for (size_t rr = 0; rr < rows; ++rr) {
        if (rr == r || a[rr][lead].is_zero()) continue;
        const Rational f = a[rr][lead];
        for (size_t c = 0; c < t; ++c) a[rr][c] -= f * a[r][c];
      }
      pivot_col_of_row.push_back(static_cast<int>(lead));
      ++r;
    }
    std::vector<bool> is_pivot(t, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    int free_col = -1;
    for (size_t c = 0; c < t; ++c)
      if (!is_pivot[c]) { free_col = static_cast<int>(c); break; }
    if (free_col < 0) return;  // affinely independent; nothing to prune

    RationalVector mu(t);
    mu[free_col] = 1;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
      mu[pivot_col_of_row[r]] = -a[r][free_col];

    // largest step keeping all weights nonnegative; drives one weight to zero
    bool first = true;
    Rational alpha;
    for (size_t c = 0; c < t; ++c) {
      if (mu[c].sign() <= 0) continue;
      const Rational step = terms[c].weight / mu[c];
      if (first || step < alpha) { alpha = step; first = false; }
    }
    if (first) {
      for (auto& x : mu) x = -x;
      for (size_t c = 0; c < t; ++c) {
        if (mu[c].sign() <= 0) continue;
        const Rational step = terms[c].weight / mu[c];
        if (first || step < alpha) { alpha = step; first = false; }
      }
    }
    std::vector<WeightedPermutation> kept;
    for (size_t c = 0; c < t; ++c) {
      const Rational w = terms[c].weight - alpha * mu[c];
      if (!w.is_zero()) kept.push_back({w, terms[c].perm});
    }
    terms = std::move(kept);
  }
}

}  // namespace

PermutationCombination birkhoff_decompose(const RationalMatrix& m) {
  if (!is_doubly_stochastic(m)) throw StructuralError("birkhoff_decompose needs a doubly stochastic matrix");
  const int d = static_cast<int>(m.size());

  RationalMatrix rem = m;
  PermutationCombination out;
  Rational total;
  while (total < Rational(1)) {
    const Permutation perm = lex_min_perfect_matching(rem);
    Rational theta = rem[0][perm[0]];
    for (int i = 1; i < d; ++i) theta = std::min(theta, rem[i][perm[i]]);
    for (int i = 0; i < d; ++i) rem[i][perm[i]] -= theta;
    out.terms.push_back({theta, perm});
    total += theta;
  }
  caratheodory_prune(out.terms, d);
  return out;
}

bool schur_horn_check(const RationalVector& diag, const RationalVector& spectrum) {
  if (diag.size() != spectrum.size()) throw StructuralError("schur_horn_check needs equal lengths");
  return majorizes(diag, spectrum);
}

}  // namespace exclusionpoly
