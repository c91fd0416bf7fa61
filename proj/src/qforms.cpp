#include "avk/qforms.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace avk {

SquareForm::SquareForm(Labels basis, Matrix gram) : basis_(std::move(basis)), gram_(std::move(gram)) {
  if (!gram_.square() || gram_.rows() != basis_.size())
    throw InputError("form gram size does not match its basis");
  std::set<std::string> seen(basis_.begin(), basis_.end());
  if (seen.size() != basis_.size()) throw InputError("duplicate basis label");
}

std::size_t SquareForm::index_of(const std::string& label) const {
  auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end()) throw InputError("unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - basis_.begin());
}

bool SquareForm::has(const std::string& label) const {
  return std::find(basis_.begin(), basis_.end(), label) != basis_.end();
}

const Rational& SquareForm::at(const std::string& a, const std::string& b) const {
  return gram_(index_of(a), index_of(b));
}

Rational SquareForm::eval(const std::vector<std::pair<std::string, Rational>>& u,
                          const std::vector<std::pair<std::string, Rational>>& v) const {
  Rational s = 0;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : v) s += x * y * at(a, b);
  return s;
}

SymmetricForm::SymmetricForm(Labels basis, Matrix gram) : SquareForm(std::move(basis), std::move(gram)) {
  if (!gram_.is_symmetric()) throw InputError("gram matrix is not symmetric");
}

InertiaTriple inertia(const SymmetricForm& f) {
  InertiaTriple t;
  Matrix a = f.gram();
  std::size_t n = a.rows();
  while (n > 0) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (a(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // No usable diagonal: e_i += e_j for the first nonzero a_ij.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        t.zero += static_cast<long>(n);
        break;
      }
      for (std::size_t k = 0; k < n; ++k) a(pi, k) += a(pj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, pi) += a(k, pj);
      piv = pi;
    }
    const Rational p = a(piv, piv);
    if (p > 0) ++t.plus; else ++t.minus;
    Matrix b(n - 1, n - 1);
    for (std::size_t i = 0, bi = 0; i < n; ++i) {
      if (i == piv) continue;
      for (std::size_t j = 0, bj = 0; j < n; ++j) {
        if (j == piv) continue;
        b(bi, bj) = a(i, j) - a(i, piv) * a(piv, j) / p;
        ++bj;
      }
      ++bi;
    }
    a = std::move(b);
    --n;
  }
  return t;
}

std::vector<Vector> radical_basis(const SymmetricForm& f) { return nullspace(f.gram()); }

namespace {

std::vector<std::size_t> indices_of(const SquareForm& f, const Labels& labels) {
  std::vector<std::size_t> idx;
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InputError("duplicate label '" + l + "' in selection");
    idx.push_back(f.index_of(l));
  }
  // keep the original basis order
  std::sort(idx.begin(), idx.end());
  return idx;
}

Labels pick(const Labels& all, const std::vector<std::size_t>& idx) {
  Labels out;
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

}  // namespace

SquareForm restrict_form(const SquareForm& f, const Labels& labels) {
  const auto idx = indices_of(f, labels);
  return SquareForm(pick(f.basis(), idx), f.gram().submatrix(idx, idx));
}

SymmetricForm restrict_form(const SymmetricForm& f, const Labels& labels) {
  const auto idx = indices_of(f, labels);
  return SymmetricForm(pick(f.basis(), idx), f.gram().submatrix(idx, idx));
}

DegenerateBlock::DegenerateBlock(Labels labels, Vector witness)
    : CheckFailure("degenerate block: the projected-out block has a nonzero radical"),
      labels_(std::move(labels)),
      witness_(std::move(witness)) {}

SymmetricForm complement_form(const SymmetricForm& f, const Labels& e_labels) {
  const auto e = indices_of(f, e_labels);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (!std::binary_search(e.begin(), e.end(), i)) rest.push_back(i);
  const Matrix a = f.gram().submatrix(e, e);
  const auto rad = nullspace(a);
  if (!rad.empty()) throw DegenerateBlock(pick(f.basis(), e), rad.front());
  Matrix c = f.gram().submatrix(rest, rest);
  if (!e.empty()) {
    const Matrix b = f.gram().submatrix(e, rest);
    c -= b.transpose() * inverse(a) * b;
  }
  return SymmetricForm(pick(f.basis(), rest), c);
}

namespace {

Labels pair_labels(const Labels& a, const Labels& b) {
  Labels out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "*" + y);
  return out;
}

}  // namespace

SquareForm tensor_scaled(const SquareForm& f, const SquareForm& g, const Rational& c) {
  return SquareForm(pair_labels(f.basis(), g.basis()), kronecker(f.gram(), g.gram()) * c);
}

SymmetricForm tensor_scaled(const SymmetricForm& f, const SymmetricForm& g, const Rational& c) {
  return SymmetricForm(pair_labels(f.basis(), g.basis()), kronecker(f.gram(), g.gram()) * c);
}

SymmetricForm direct_sum(const SymmetricForm& f, const SymmetricForm& g) {
  Labels l = f.basis();
  l.insert(l.end(), g.basis().begin(), g.basis().end());
  const std::size_t n = f.dim(), m = g.dim();
  Matrix s(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = f.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s(n + i, n + j) = g.gram()(i, j);
  return SymmetricForm(std::move(l), std::move(s));
}

namespace {

struct PermSearch {
  const Matrix& f;
  const Matrix& g;
  std::size_t n;
  std::vector<std::size_t> perm;
  std::vector<int> signs;
  std::vector<bool> used;

  bool consistent(std::size_t k) const {
    for (std::size_t i = 0; i <= k; ++i) {
      const Rational s = signs[i] * signs[k];
      if (g(perm[i], perm[k]) != s * f(i, k)) return false;
      if (g(perm[k], perm[i]) != s * f(k, i)) return false;
    }
    return true;
  }

  bool run(std::size_t k) {
    if (k == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t]) continue;
      used[t] = true;
      perm[k] = t;
      for (int s : {1, -1}) {
        signs[k] = s;
        if (consistent(k) && run(k + 1)) return true;
      }
      used[t] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<SignedPermutation> signed_perm_congruent(const SquareForm& f, const SquareForm& g) {
  if (f.dim() != g.dim()) return std::nullopt;
  PermSearch s{f.gram(), g.gram(), f.dim(), std::vector<std::size_t>(f.dim()), std::vector<int>(f.dim(), 1),
               std::vector<bool>(f.dim(), false)};
  if (!s.run(0)) return std::nullopt;
  return SignedPermutation{s.perm, s.signs};
}

Labels labels_with_prefix(const std::string& prefix, std::size_t n) {
  Labels l;
  for (std::size_t i = 1; i <= n; ++i) l.push_back(prefix + std::to_string(i));
  return l;
}

}  // namespace avk
