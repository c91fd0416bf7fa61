#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "avk/qforms.hpp"

namespace avk {

using SignVector = std::vector<int>;  // entries +1 / -1

struct Sector {
  std::string label;
  int sign = 1;    // sign of the defining function on the sector
  Rational chi;    // chi(V_i), Euler characteristic of the closed sector in the link
};

/* Local partition regions around a point: sectors of the link sphere with
   their Euler data. */
struct SectorSystem {
  int ambient_d = 2;
  std::vector<Sector> sectors;
  std::map<std::pair<std::string, std::string>, Rational> chi_pair;  // symmetric, missing = 0

  Rational chi_between(const std::string& a, const std::string& b) const;
  const Sector& sector(const std::string& label) const;
  Labels labels() const;
};

enum class FormKind { lambda, lambda_bar, chi, q, q_bar };

struct LocalForm {
  SquareForm form;
  FormKind kind = FormKind::lambda;
  int ambient_d = 2;
  std::vector<int> signs;  // per basis vector
};

std::string to_string(FormKind k);

// Identity germ (C,0) -> (C,0): lambda in the basis v1 (+), v2 (-).
Matrix lambda_identity_seed();
// The same form in the complexified basis: rows/cols of (re, im) pairs.
std::vector<std::vector<std::pair<Rational, Rational>>> lambda_identity_seed_complex();

// (-1)^{d(d-1)/2} 2^{1-d} sign(b) i^{d(a,b) - a_- - b_-}, for the germ x1...xd.
Rational lambda_normal_crossing(int d, const SignVector& a, const SignVector& b);
// Same value read through the complex line of the formula: i^{a_- + b_-} times
// the real value must equal (-1)^{d(d-1)/2} 2^{1-d} sign(b) i^{d(a,b)}.
bool lambda_complex_line_consistent(int d, const SignVector& a, const SignVector& b);

// All 2^d sign vectors in lexicographic order, + before -.
std::vector<SignVector> sign_vectors(int d);
std::string sector_label(const SignVector& a);
int sign_of_vector(const SignVector& a);

// lambda over all sectors of x1...xd, in the sign-vector basis.
LocalForm lambda_normal_crossing_form(int d);
// 0.5 (-1)^{pq} f (x) g, for canonical forms of germs in p and q variables.
LocalForm lambda_product(const LocalForm& f, const LocalForm& g);

// Normal crossing x*y at a point in the plane, in the characteristic-cochain
// basis of its four sectors: the (+,+) generator is oriented opposite to the
// product basis. Labels "++", "+-", "-+", "--".
LocalForm lambda_node();
SectorSystem node_sectors();

LocalForm chi_form(const SectorSystem& s);
// q = lambda - (-1)^{d(d-1)/2} chi; rejects cross-sign coupling.
LocalForm residue_form(const LocalForm& lam, const SectorSystem& s);
// 2 q restricted to the positive sectors.
LocalForm residue_form_bar(const LocalForm& q);

LocalForm relative_twist(const LocalForm& f, const std::map<std::string, int>& side);

// sign(v_i) (-1)^n chi(V_i ∩ V_j) / 2 for sectors of opposite sign.
Rational lambda_opposite_sign_value(const SectorSystem& s, const std::string& i, const std::string& j, int n);

}  // namespace avk
