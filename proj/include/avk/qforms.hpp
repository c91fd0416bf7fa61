#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avk/matrix.hpp"

namespace avk {

using Labels = std::vector<std::string>;

/* Labeled square matrix. Bilinear forms that need not be symmetric
   (canonical local forms, sector Euler forms) live here. */
class SquareForm {
 public:
  SquareForm() = default;
  SquareForm(Labels basis, Matrix gram);

  const Labels& basis() const { return basis_; }
  const Matrix& gram() const { return gram_; }
  std::size_t dim() const { return basis_.size(); }

  std::size_t index_of(const std::string& label) const;  // throws InputError
  bool has(const std::string& label) const;
  const Rational& at(const std::string& a, const std::string& b) const;
  // Value on formal combinations given as (label, coefficient) lists.
  Rational eval(const std::vector<std::pair<std::string, Rational>>& u,
                const std::vector<std::pair<std::string, Rational>>& v) const;

  friend bool operator==(const SquareForm& a, const SquareForm& b) {
    return a.basis_ == b.basis_ && a.gram_ == b.gram_;
  }

 protected:
  Labels basis_;
  Matrix gram_;
};

class SymmetricForm : public SquareForm {
 public:
  SymmetricForm() = default;
  SymmetricForm(Labels basis, Matrix gram);  // throws InputError if not symmetric
  explicit SymmetricForm(const SquareForm& f) : SymmetricForm(f.basis(), f.gram()) {}
};

struct InertiaTriple {
  long plus = 0;
  long minus = 0;
  long zero = 0;
  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

InertiaTriple inertia(const SymmetricForm& f);
std::vector<Vector> radical_basis(const SymmetricForm& f);

SquareForm restrict_form(const SquareForm& f, const Labels& labels);
SymmetricForm restrict_form(const SymmetricForm& f, const Labels& labels);

/* Thrown by complement_form when the block to project out is degenerate;
   carries a radical vector of that block (coordinates in e_labels order). */
class DegenerateBlock : public CheckFailure {
 public:
  DegenerateBlock(Labels labels, Vector witness);
  const Labels& labels() const { return labels_; }
  const Vector& witness() const { return witness_; }

 private:
  Labels labels_;
  Vector witness_;
};

// Form on the orthogonal complement of span(e_labels), in the basis
// w - proj_E(w) for the remaining labels (Schur complement C - B^T A^-1 B).
SymmetricForm complement_form(const SymmetricForm& f, const Labels& e_labels);

// c * (f ⊗ g); labels are "a*b".
SquareForm tensor_scaled(const SquareForm& f, const SquareForm& g, const Rational& c);
SymmetricForm tensor_scaled(const SymmetricForm& f, const SymmetricForm& g, const Rational& c);

SymmetricForm direct_sum(const SymmetricForm& f, const SymmetricForm& g);

struct SignedPermutation {
  std::vector<std::size_t> perm;  // basis i of f goes to basis perm[i] of g
  std::vector<int> signs;         // with sign signs[i]
};

// Exhaustive search for P with P^T f P = g, P a signed permutation.
std::optional<SignedPermutation> signed_perm_congruent(const SquareForm& f, const SquareForm& g);

Labels labels_with_prefix(const std::string& prefix, std::size_t n);

}  // namespace avk
