#include "avk/localforms.hpp"

#include <algorithm>

namespace avk {

namespace {

// Gaussian rational, only what evaluating powers of i needs.
struct Gauss {
  Rational re, im;
  Gauss operator*(const Gauss& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
};

Gauss i_power(long e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

int minus_count(const SignVector& a) {
  return static_cast<int>(std::count(a.begin(), a.end(), -1));
}

int distance(const SignVector& a, const SignVector& b) {
  int d = 0;
  for (std::size_t k = 0; k < a.size(); ++k) d += a[k] != b[k];
  return d;
}

void check_pair(int d, const SignVector& a, const SignVector& b) {
  if (d < 1) throw InputError("normal crossing dimension must be at least 1");
  if (a.size() != static_cast<std::size_t>(d) || b.size() != static_cast<std::size_t>(d))
    throw InputError("sign vector length does not match the dimension");
  for (int x : a)
    if (x != 1 && x != -1) throw InputError("sign vector entries must be +1 or -1");
  for (int x : b)
    if (x != 1 && x != -1) throw InputError("sign vector entries must be +1 or -1");
}

Rational prefactor(int d) {
  Rational r(1);
  r /= Rational(Integer(1) << static_cast<unsigned long>(d - 1));
  return (d * (d - 1) / 2) % 2 == 0 ? r : Rational(-r);
}

}  // namespace

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::lambda: return "lambda";
    case FormKind::lambda_bar: return "lambda_bar";
    case FormKind::chi: return "chi";
    case FormKind::q: return "q";
    case FormKind::q_bar: return "q_bar";
  }
  return "?";
}

Rational SectorSystem::chi_between(const std::string& a, const std::string& b) const {
  auto it = chi_pair.find({a, b});
  if (it != chi_pair.end()) return it->second;
  it = chi_pair.find({b, a});
  return it == chi_pair.end() ? Rational(0) : it->second;
}

const Sector& SectorSystem::sector(const std::string& label) const {
  for (const auto& s : sectors)
    if (s.label == label) return s;
  throw InputError("unknown sector '" + label + "'");
}

Labels SectorSystem::labels() const {
  Labels l;
  for (const auto& s : sectors) l.push_back(s.label);
  return l;
}

Matrix lambda_identity_seed() { return Matrix{{1, -1}, {1, 1}}; }

std::vector<std::vector<std::pair<Rational, Rational>>> lambda_identity_seed_complex() {
  return {{{1, 0}, {0, -1}}, {{0, 1}, {-1, 0}}};
}

Rational lambda_normal_crossing(int d, const SignVector& a, const SignVector& b) {
  check_pair(d, a, b);
  const long e = distance(a, b) - minus_count(a) - minus_count(b);
  if (e % 2 != 0) throw std::logic_error("odd power of i in the normal crossing formula");
  const Gauss p = i_power(e);
  return prefactor(d) * sign_of_vector(b) * p.re;
}

bool lambda_complex_line_consistent(int d, const SignVector& a, const SignVector& b) {
  const Rational real = lambda_normal_crossing(d, a, b);
  const Gauss lhs = i_power(minus_count(a) + minus_count(b)) * Gauss{real, 0};
  const Gauss rhs = Gauss{prefactor(d) * sign_of_vector(b), 0} * i_power(distance(a, b));
  return lhs == rhs;
}

std::vector<SignVector> sign_vectors(int d) {
  std::vector<SignVector> out;
  for (unsigned long m = 0; m < (1ul << d); ++m) {
    SignVector v(d);
    for (int k = 0; k < d; ++k) v[k] = (m >> (d - 1 - k)) & 1ul ? -1 : 1;
    out.push_back(v);
  }
  return out;
}

std::string sector_label(const SignVector& a) {
  std::string s;
  for (int x : a) s += x > 0 ? '+' : '-';
  return s;
}

int sign_of_vector(const SignVector& a) { return minus_count(a) % 2 == 0 ? 1 : -1; }

LocalForm lambda_normal_crossing_form(int d) {
  const auto vs = sign_vectors(d);
  Labels labels;
  LocalForm out;
  Matrix m(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    labels.push_back(sector_label(vs[i]));
    out.signs.push_back(sign_of_vector(vs[i]));
    for (std::size_t j = 0; j < vs.size(); ++j) m(i, j) = lambda_normal_crossing(d, vs[i], vs[j]);
  }
  out.form = SquareForm(labels, m);
  out.kind = FormKind::lambda;
  out.ambient_d = d;
  return out;
}

LocalForm lambda_product(const LocalForm& f, const LocalForm& g) {
  if (f.kind != FormKind::lambda || g.kind != FormKind::lambda)
    throw InputError("product formula applies to canonical forms only");
  const int p = f.ambient_d, q = g.ambient_d;
  const Rational c = Rational(1, 2) * ((p * q) % 2 == 0 ? 1 : -1);
  const SquareForm t = tensor_scaled(f.form, g.form, c);
  Labels labels;
  LocalForm out;
  for (std::size_t i = 0; i < f.form.dim(); ++i)
    for (std::size_t j = 0; j < g.form.dim(); ++j) {
      labels.push_back(f.form.basis()[i] + g.form.basis()[j]);
      out.signs.push_back(f.signs[i] * g.signs[j]);
    }
  out.form = SquareForm(labels, t.gram());
  out.kind = FormKind::lambda;
  out.ambient_d = p + q;
  return out;
}

LocalForm lambda_node() {
  LocalForm nc = lambda_normal_crossing_form(2);
  std::vector<int> orient = {-1, 1, 1, 1};  // "++", "+-", "-+", "--"
  Matrix m = nc.form.gram();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) *= orient[i] * orient[j];
  nc.form = SquareForm(nc.form.basis(), m);
  return nc;
}

SectorSystem node_sectors() {
  SectorSystem s;
  s.ambient_d = 2;
  const auto vs = sign_vectors(2);
  for (const auto& v : vs) s.sectors.push_back({sector_label(v), sign_of_vector(v), 1});
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (distance(vs[i], vs[j]) == 1) s.chi_pair[{sector_label(vs[i]), sector_label(vs[j])}] = 1;
  return s;
}

LocalForm chi_form(const SectorSystem& s) {
  const std::size_t n = s.sectors.size();
  Matrix m(n, n);
  LocalForm out;
  for (std::size_t i = 0; i < n; ++i) {
    out.signs.push_back(s.sectors[i].sign);
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = i == j ? s.sectors[i].chi
                       : Rational(s.sectors[i].sign * s.chi_between(s.sectors[i].label, s.sectors[j].label) / 2);
  }
  out.form = SquareForm(s.labels(), m);
  out.kind = FormKind::chi;
  out.ambient_d = s.ambient_d;
  return out;
}

LocalForm residue_form(const LocalForm& lam, const SectorSystem& s) {
  if (lam.kind != FormKind::lambda) throw InputError("residue form needs a canonical form");
  if (lam.ambient_d != s.ambient_d) throw InputError("canonical form and sectors disagree on dimension");
  if (lam.form.basis() != s.labels()) throw InputError("canonical form and sectors have different bases");
  const int d = s.ambient_d;
  const LocalForm chi = chi_form(s);
  Matrix q = lam.form.gram();
  const int e = (d * (d - 1) / 2) % 2 == 0 ? 1 : -1;
  q -= chi.form.gram() * Rational(e);
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (chi.signs[i] != chi.signs[j] && q(i, j) != 0)
        throw CheckFailure("not a QI^S-consistent input: residue form couples sectors '" + s.sectors[i].label +
                           "' and '" + s.sectors[j].label + "' of opposite sign");
  LocalForm out{SquareForm(s.labels(), q), FormKind::q, d, chi.signs};
  return out;
}

LocalForm residue_form_bar(const LocalForm& q) {
  if (q.kind != FormKind::q) throw InputError("expected a residue form");
  Labels pos;
  for (std::size_t i = 0; i < q.form.dim(); ++i)
    if (q.signs[i] > 0) pos.push_back(q.form.basis()[i]);
  SquareForm r = restrict_form(q.form, pos);
  LocalForm out{SquareForm(r.basis(), r.gram() * Rational(2)), FormKind::q_bar, q.ambient_d,
                std::vector<int>(pos.size(), 1)};
  return out;
}

LocalForm relative_twist(const LocalForm& f, const std::map<std::string, int>& side) {
  const auto& b = f.form.basis();
  std::vector<int> s;
  for (const auto& l : b) {
    auto it = side.find(l);
    if (it == side.end()) throw InputError("no side given for '" + l + "'");
    s.push_back(it->second);
  }
  Matrix m = f.form.gram();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (s[i] != s[j]) m(i, j) = -m(i, j);
  LocalForm out = f;
  out.form = SquareForm(b, m);
  return out;
}

Rational lambda_opposite_sign_value(const SectorSystem& s, const std::string& i, const std::string& j, int n) {
  const Sector& a = s.sector(i);
  const Sector& b = s.sector(j);
  if (a.sign == b.sign) throw InputError("sectors '" + i + "' and '" + j + "' have the same sign");
  return Rational(a.sign * (n % 2 == 0 ? 1 : -1)) * s.chi_between(i, j) / 2;
}

}  // namespace avk
