#include "avk/bounds.hpp"

#include <algorithm>
#include <functional>

namespace avk {

namespace {

using Q = Rational;

Q half(const Q& x) { return x / 2; }
Q qmin(std::initializer_list<Q> xs) { return std::min(xs); }
Q qmax(const Q& a, const Q& b) { return std::max(a, b); }

int parity_sign(const Q& n) {
  if (!is_integer(n)) throw InputError("n must be an integer");
  return mpz_odd_p(n.get_num().get_mpz_t()) ? -1 : 1;
}

class Builder {
 public:
  Builder(std::string family, const InvariantBundle& iv) : iv_(iv.completed()) { report_.family = std::move(family); }

  Q get(const std::string& key) const { return iv_.get(key, report_.family); }
  bool has(const std::string& key) const { return iv_.has(key); }
  const InvariantBundle& bundle() const { return iv_; }

  std::optional<Q> opt(const std::string& key) const {
    if (!iv_.has(key)) return std::nullopt;
    return iv_.get(key, report_.family);
  }
  // Sum of optional fields; absent if any is.
  std::optional<Q> opt_sum(std::initializer_list<std::string> keys) const {
    Q s = 0;
    for (const auto& k : keys) {
      if (!iv_.has(k)) return std::nullopt;
      s += iv_.get(k, report_.family);
    }
    return s;
  }

  void add(const std::string& id, const std::string& statement, std::optional<Q> lhs, const Q& rhs,
           RowKind kind = RowKind::Bound) {
    BoundRow r;
    r.id = id;
    r.statement = statement;
    r.kind = kind;
    r.lhs = std::move(lhs);
    r.rhs = rhs;
    report_.rows.push_back(std::move(r));
  }
  void note(const std::string& n) { report_.notes.push_back(n); }

  BoundsReport done() { return std::move(report_); }

 private:
  InvariantBundle iv_;
  BoundsReport report_;
};

// σ keys for the ϰ-relative inequalities.
std::string sigma_key(int sign) { return sign > 0 ? "sigma_plus" : "sigma_minus"; }
std::string sign_word(int sign) { return sign > 0 ? "plus" : "minus"; }

void double_plane_general(Builder& b) {
  const int kap = parity_sign(b.get("n"));
  const Q kappa = b.get("kappa");
  const std::string lo = sign_word(-kap), hi = sign_word(kap);
  const Q m = qmin({Q(0), b.get("delta") - b.get("sigma_zero")});
  b.add("sigma_-kappa", "sigma_-kappa <= (b^-kappa(X^tau) - kappa - mu^-kappa)/2 + min(0, delta - sigma_0)",
        b.opt(sigma_key(-kap)), half(b.get("b_" + lo + "_xtau") - kappa - b.get("mu_" + lo)) + m);
  b.add("sigma_kappa", "sigma_kappa <= (b^kappa(X^tau) + chi(RX) + kappa - mu^kappa)/2 - 1 + min(0, delta - sigma_0)",
        b.opt(sigma_key(kap)), half(b.get("b_" + hi + "_xtau") + b.get("chi_rx") + kappa - b.get("mu_" + hi)) - 1 + m);
}

void homology_manifold(Builder& b) {
  const Q k = b.get("k");
  const Q base_p = half((k - 1) * (k - 2)) - b.get("frak_p");
  const Q base_m = Q(3, 2) * k * (k - 1) + half(b.get("chi_rx")) - half(b.get("mu_minus"));
  const Q rn = b.get("r") - b.get("nu");
  const Q beta = b.get("beta");
  const Q m = qmin({half(rn), half(b.get("bt0_ca2")), b.get("bt0_ca1"), beta});
  const auto s0 = b.opt_sum({"sigma_plus", "sigma_zero"});
  const auto s1 = b.opt_sum({"sigma_minus", "sigma_zero"});
  b.add("sigma+", "sigma_+ <= (k-1)(k-2)/2 - p + min((r-nu)/2, bt0(CA'')/2, bt0(CA'), beta)", b.opt("sigma_plus"),
        base_p + m);
  b.add("sigma+ + sigma0", "sigma_+ + sigma_0 <= (k-1)(k-2)/2 - p + beta + (r-nu)", s0, base_p + beta + rn);
  b.add("sigma-", "sigma_- <= 3k(k-1)/2 + chi(RX)/2 - mu^-/2 + min((r-nu)/2, bt0(CA'')/2, bt0(CA'), beta)",
        b.opt("sigma_minus"), base_m + m);
  b.add("sigma- + sigma0", "sigma_- + sigma_0 <= 3k(k-1)/2 + chi(RX)/2 - mu^-/2 + (r-nu)", s1, base_m + rn);
}

void homology_manifold_nonessential(Builder& b) {
  const Q k = b.get("k");
  const Q m = qmin({Q(0), b.get("r") - b.get("nu") - b.get("sigma_zero")});
  b.add("sigma+", "sigma_+ <= (k-1)(k-2)/2 - mu^+/2 + min(0, (r-nu) - sigma_0)", b.opt("sigma_plus"),
        half((k - 1) * (k - 2)) - half(b.get("mu_plus")) + m);
  b.add("sigma-", "sigma_- <= 3k(k-1)/2 + chi(RX)/2 - mu^-/2 + min(0, (r-nu) - sigma_0)", b.opt("sigma_minus"),
        Q(3, 2) * k * (k - 1) + half(b.get("chi_rx")) - half(b.get("mu_minus")) + m);
}

void complete_intersection(Builder& b) {
  const int kap = parity_sign(b.get("n"));
  const Q kappa = b.get("kappa");
  const Q m = qmin({Q(0), b.get("delta") - b.get("sigma_zero")});
  const std::string lo = sign_word(-kap), hi = sign_word(kap);
  b.add("sigma_-kappa", "sigma_-kappa <= (b^-kappa(CX) - kappa)/2 + min(0, delta - sigma_0)", b.opt(sigma_key(-kap)),
        half(b.get("b_" + lo + "_cx") - kappa) + m);
  b.add("sigma_kappa", "sigma_kappa <= (b^kappa(CX) + chi(RX) + kappa)/2 - 1 + min(0, delta - sigma_0)",
        b.opt(sigma_key(kap)), half(b.get("b_" + hi + "_cx") + b.get("chi_rx") + kappa) - 1 + m);
}

void isolated_singularities(Builder& b) {
  const int kap = parity_sign(b.get("n"));
  const Q kappa = b.get("kappa");
  const std::string lo = sign_word(-kap), hi = sign_word(kap);
  const Q p = half(b.get("mu_" + lo) + b.get("mu_zero"));
  const Q beta = b.get("beta"), gamma = b.get("gamma");
  const Q d0 = b.get("delta_prime") - b.get("sigma_zero");
  b.add("sigma_-kappa", "sigma_-kappa(bar psi) <= (b^-kappa(X^tau) - kappa)/2 - p + min(gamma, beta + delta' - sigma_0)",
        b.opt(sigma_key(-kap)), half(b.get("b_" + lo + "_xtau") - kappa) - p + qmin({gamma, beta + d0}));
  b.add("sigma_kappa",
        "sigma_kappa(bar psi) <= (b^kappa(X^tau) + chi(RX) + kappa - mu^kappa)/2 - 1 + min(gamma - beta, delta' - sigma_0)",
        b.opt(sigma_key(kap)),
        half(b.get("b_" + hi + "_xtau") + b.get("chi_rx") + kappa - b.get("mu_" + hi)) - 1 + qmin({gamma - beta, d0}));
}

Q curve_min_term(Builder& b) {
  const Q beta = b.get("beta");
  return half(qmin({b.get("bt0_ca2"), b.get("bt0_ca") + 2 * beta, b.get("b2_ca") - b.get("nu")}));
}

void curve_bar(Builder& b) {
  const Q beta = b.get("beta"), t2 = b.get("t2");
  const Q mn = curve_min_term(b);
  const Q plus = b.get("b2_plus_cp") + half(b.get("LKL")) - b.get("frak_p");
  const Q minus = b.get("b2_minus_cp") + half(b.get("LK3L") + b.get("chi_rx") - b.get("mu_minus"));
  const Q extra = 2 * t2 + b.get("b1_cp") + (b.get("b2_ca1") - b.get("nu_prime")) +
                  qmax(0, 3 * b.get("alpha_im0") - 1);
  b.add("sigma+", "sigma_+ <= b2+(CP) + L.(K+L)/2 - p + t2 + min(bt0(CA''), bt0(CA) + 2beta, b2(CA) - nu)/2",
        b.opt("sigma_plus"), plus + t2 + mn);
  b.add("sigma+ + sigma0",
        "sigma_+ + sigma_0 <= b2+(CP) + L.(K+L)/2 - p + 2t2 + b1(CP) + (b2(CA') - nu') + beta + max(0, 3alpha0 - 1)",
        b.opt_sum({"sigma_plus", "sigma_zero"}), plus + extra + beta);
  b.add("sigma-",
        "sigma_- <= b2-(CP) + (L.(K+3L) + chi(RX) - mu^-)/2 + t2 - beta + min(bt0(CA''), bt0(CA) + 2beta, b2(CA) - nu)/2",
        b.opt("sigma_minus"), minus + t2 - beta + mn);
  b.add("sigma- + sigma0",
        "sigma_- + sigma_0 <= b2-(CP) + (L.(K+3L) + chi(RX) - mu^-)/2 + 2t2 + b1(CP) + (b2(CA') - nu') + max(0, 3alpha0 - 1)",
        b.opt_sum({"sigma_minus", "sigma_zero"}), minus + extra);
}

void curve(Builder& b) {
  if (b.has("b1_cp_z2") && b.get("b1_cp_z2") != 0) b.note("b1(CP; Z/2) is nonzero; these bounds assume it vanishes");
  const Q rn = b.get("r") - b.get("nu");
  const Q plus = b.get("b2_plus_cp") + half(b.get("LKL")) - half(b.get("mu_plus"));
  const Q minus = b.get("b2_minus_cp") + half(b.get("LK3L") + b.get("chi_rx") - b.get("mu_minus"));
  const Q m = qmin({rn - b.get("sigma_zero"), Q(0)});
  b.add("sigma+", "sigma_+ <= b2+(CP) + L.(K+L)/2 - mu^+/2 + min(r - nu - sigma_0, 0)", b.opt("sigma_plus"),
        plus + m);
  b.add("sigma-", "sigma_- <= b2-(CP) + (L.(K+3L) + chi(RX) - mu^-)/2 + min(r - nu - sigma_0, 0)",
        b.opt("sigma_minus"), minus + m);
  // The gaps without the nullity correction; they add up to the gap formula.
  b.add("gap+", "b2+(CP) + L.(K+L)/2 - mu^+/2 - sigma_+", b.opt("sigma_plus"), plus, RowKind::Bookkeeping);
  b.add("gap-", "b2-(CP) + (L.(K+3L) + chi(RX) - mu^-)/2 - sigma_-", b.opt("sigma_minus"), minus,
        RowKind::Bookkeeping);
  b.add("gap0", "(r - nu) - sigma_0", b.opt("sigma_zero"), rn, RowKind::Bookkeeping);
}

void surface_resolution(Builder& b) {
  const Q extra = b.get("b1_res_z2") + qmax(0, b.get("alpha_im2") - 1) + b.get("d_r2");
  b.add("sigma+", "sigma_+ <= p_g(CX^res)", b.opt("sigma_plus"), b.get("p_g"));
  b.add("sigma+ + sigma0",
        "sigma_+ + sigma_0 <= chi_a(CX^res) + b1(CX^res; Z/2) + beta + max(0, alpha2 - 1) + d_R",
        b.opt_sum({"sigma_plus", "sigma_zero"}), b.get("chi_a") + b.get("beta") + extra);
  b.add("sigma-", "sigma_- <= (b2-(CX^res) - 1 + chi(RX) + chi^(RE))/2 - b2(E bar)", b.opt("sigma_minus"),
        half(b.get("b2_minus_res") - 1 + b.get("chi_rx") + b.get("chi_hat_re")) - b.get("b2_ebar"));
  b.add("sigma- + sigma0",
        "sigma_- + sigma_0 <= (b2-(CX^res) + 1 + chi(RX) - chi^(CE))/2 + b1(CX^res; Z/2) - b1(CX^res)/2 + max(0, "
        "alpha2 - 1) + d_R",
        b.opt_sum({"sigma_minus", "sigma_zero"}),
        half(b.get("b2_minus_res") + 1 + b.get("chi_rx") - b.get("chi_hat_ce")) - half(b.get("b1_res")) + extra);
}

// Line arrangements: the bounds that become equalities.
void arrangement(Builder& b) {
  const Q m = b.get("m");
  if (!is_integer(m) || m.get_num() % 2 != 0 || m < 4) throw InputError("arrangement: m must be an even integer >= 4");
  const long mm = m.get_num().get_si();
  const Q k = m / 2;
  const Q bp = (k - 1) * (k - 2) + 1;
  const Q bm = 3 * k * (k - 1) + 1 - binomial(mm, 2);
  const Q delta = b.has("delta") ? b.get("delta") : arrangement_nullity_bound(mm, 2);
  b.add("sigma+ + sigma0", "sigma_+ + sigma_0 <= (b2+(X) - 1)/2 + delta", b.opt_sum({"sigma_plus", "sigma_zero"}),
        half(bp - 1) + delta);
  b.add("sigma-", "sigma_- <= (b2-(X) + 1 + chi(RX))/2 - 1", b.opt("sigma_minus"), half(bm + 1 + b.get("chi_rx")) - 1);
  b.add("sigma0", "sigma_0 = number of regions meeting one line", b.opt("sigma_zero"),
        arrangement_nullity_bound(mm, 2), RowKind::Identity);
}

struct Variant {
  const char* name;
  std::function<void(Builder&)> run;
};

const std::vector<Variant>& variants() {
  static const std::vector<Variant> v = {
      {"double-plane", double_plane_general},
      {"homology-manifold", homology_manifold},
      {"homology-manifold-nonessential", homology_manifold_nonessential},
      {"complete-intersection", complete_intersection},
      {"isolated-singularities", isolated_singularities},
      {"curve-bar", curve_bar},
      {"curve", curve},
      {"surface-resolution", surface_resolution},
      {"arrangement", arrangement},
  };
  return v;
}

Q table_sum(const Builder& b, const std::string& key, long from, long to) {
  Q s = 0;
  for (long k = from; k <= to; ++k) s += b.bundle().table(key, k, "smith");
  return s;
}

Q integral_half(const Q& twice, const std::string& what) {
  const Q h = twice / 2;
  if (!is_integer(h))
    throw CheckFailure("inconsistent inputs: " + what + " = " + to_string(h) + " is not an integer");
  return h;
}

}  // namespace

Rational InvariantBundle::get(const std::string& key, const std::string& context) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw InputError("missing field '" + key + "' for " + context);
  return it->second;
}

Rational InvariantBundle::get_or(const std::string& key, const Rational& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

Rational InvariantBundle::table(const std::string& key, long index, const std::string& context) const {
  const auto& t = table(key, context);
  if (index < 0 || index >= static_cast<long>(t.size())) return 0;
  return t[index];
}

const std::vector<Rational>& InvariantBundle::table(const std::string& key, const std::string& context) const {
  auto it = tables_.find(key);
  if (it == tables_.end()) throw InputError("missing table '" + key + "' for " + context);
  return it->second;
}

InvariantBundle InvariantBundle::completed() const {
  InvariantBundle out = *this;
  auto derive = [&](const std::string& key, const Rational& v) {
    if (out.has(key) && out.values_.at(key) != v)
      throw InputError("field '" + key + "' = " + to_string(out.values_.at(key)) + " disagrees with derived value " +
                       to_string(v));
    out.values_[key] = v;
  };
  if (get_or("cp2", 0) != 0) {
    const Rational k = get("k", "plane data");
    derive("n", 1);
    derive("b2_plus_cp", 1);
    derive("b2_minus_cp", 0);
    derive("b1_cp", 0);
    derive("b1_cp_z2", 0);
    derive("t2", 0);
    derive("chi_rp", 1);
    derive("LKL", k * (k - 3));
    derive("LK3L", 3 * k * (k - 1));
    derive("b_plus_xtau", (k - 1) * (k - 2) + 1);
    derive("b_minus_xtau", 3 * k * (k - 1) + 1);
  }
  if (out.has("n")) {
    const int kap = parity_sign(out.values_.at("n"));
    derive("kappa_sign", kap);
    derive("kappa", kap < 0 ? 1 : 0);
  }
  if (out.has("mu_plus") && out.has("mu_zero")) derive("frak_p", (out.values_.at("mu_plus") + out.values_.at("mu_zero")) / 2);
  if (out.has("mu_plus") && !out.has("mu_zero") && !out.has("frak_p")) {
    // No degenerate Milnor forms unless stated.
    derive("mu_zero", 0);
    derive("frak_p", out.values_.at("mu_plus") / 2);
  }
  auto total = [&](const std::string& prefix, const std::string& key) {
    const std::string a = prefix + "_plus", b = prefix + "_minus", c = prefix + "_zero";
    if (out.has(a) && out.has(b) && out.has(c)) derive(key, out.values_.at(a) + out.values_.at(b) + out.values_.at(c));
  };
  total("even", "even_total");
  total("odd", "odd_total");
  return out;
}

std::optional<Rational> BoundRow::slack() const {
  if (!lhs) return std::nullopt;
  return rhs - *lhs;
}

std::string BoundRow::verdict() const {
  if (kind == RowKind::Bookkeeping) return "info";
  if (!lhs) return "rhs-only";
  if (kind == RowKind::Identity) return *lhs == rhs ? "ok" : "violated";
  return *slack() >= 0 ? "ok" : "violated";
}

bool BoundsReport::all_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.verdict() != "violated"; });
}

Interval petrovskii_classic(long k) {
  if (k < 1) throw InputError("k must be at least 1");
  const Q lo = make_rational(3 * k * (k - 1), 2);
  return {lo, lo + 1};
}

DoublePlaneBetti double_plane_betti(long k) {
  if (k < 1) throw InputError("k must be at least 1");
  const Q pg = make_rational((k - 1) * (k - 2), 2);
  return {2 * pg + 1, Q(3 * k * (k - 1) + 1), pg};
}

const std::vector<std::string>& arnold_viro_variants() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& v : variants()) n.push_back(v.name);
    return n;
  }();
  return names;
}

BoundsReport arnold_viro_rhs(const std::string& variant, const InvariantBundle& iv) {
  for (const auto& v : variants())
    if (variant == v.name) {
      Builder b("arnold-viro:" + variant, iv);
      v.run(b);
      return b.done();
    }
  throw InputError("unknown Arnold-Viro variant '" + variant + "'");
}

BoundsReport smith_rhs(const InvariantBundle& iv) {
  Builder b("smith", iv);
  const auto& bd = b.bundle();
  int emitted = 0;
  // Involution c on Z with fixed set F and quotient Z/c.
  if (bd.has_table("betti_Z") && bd.has_table("betti_F") && bd.has_table("betti_quot_rel")) {
    const long top = static_cast<long>(std::max({bd.table("betti_Z", "smith").size(), bd.table("betti_F", "smith").size(),
                                                 bd.table("betti_quot_rel", "smith").size()}));
    for (long k = 0; k < top; ++k) {
      const std::string s = std::to_string(k);
      b.add("involution-step:" + s, "b_k(Z/c,F) + b_k(F) <= b_k+1(Z/c,F) + b_k(Z), k = " + s,
            table_sum(b, "betti_quot_rel", k, k) + table_sum(b, "betti_F", k, k),
            table_sum(b, "betti_quot_rel", k + 1, k + 1) + table_sum(b, "betti_Z", k, k));
      b.add("involution-tail:" + s, "b_l(Z/c,F) + sum_{k>=l} b_k(F) <= sum_{k>=l} b_k(Z), l = " + s,
            table_sum(b, "betti_quot_rel", k, k) + table_sum(b, "betti_F", k, top), table_sum(b, "betti_Z", k, top));
    }
    b.add("fixed-total", "b_*(F) <= b_*(Z)", table_sum(b, "betti_F", 0, top), table_sum(b, "betti_Z", 0, top));
    ++emitted;
  }
  if (bd.has_table("betti_Z") && bd.has_table("betti_quot") && bd.has_table("betti_quot_rel")) {
    const long top = static_cast<long>(bd.table("betti_Z", "smith").size());
    for (long k = 0; k < top; ++k)
      b.add("quotient-split:" + std::to_string(k), "b_k(Z) <= b_k(Z/c) + b_k(Z/c,F), k = " + std::to_string(k),
            table_sum(b, "betti_Z", k, k), table_sum(b, "betti_quot", k, k) + table_sum(b, "betti_quot_rel", k, k));
    ++emitted;
  }
  if (bd.has_table("betti_Z") && bd.has_table("betti_quot") && bd.has_table("betti_F") && bd.has_table("nu_smith")) {
    const long top = static_cast<long>(bd.table("betti_Z", "smith").size());
    for (long k = 0; k < top; ++k) {
      Q rhs = 2 * table_sum(b, "betti_quot", k, k) - bd.table("nu_smith", k, "smith");
      if (k > 0) rhs += table_sum(b, "betti_F", k - 1, k - 1) - bd.table("nu_smith", k - 1, "smith");
      b.add("quotient-fixed:" + std::to_string(k),
            "b_k(Z) <= 2 b_k(Z/c) + b_k-1(F) - nu_k - nu_k-1, k = " + std::to_string(k), table_sum(b, "betti_Z", k, k),
            rhs);
    }
    ++emitted;
  }
  if (bd.has("dim_Z") && bd.has_table("betti_Z") && bd.has_table("betti_quot") && bd.has_table("betti_F")) {
    const long m = b.get("dim_Z").get_num().get_si();
    // Reduced b_{m-2}(F).
    Q f = table_sum(b, "betti_F", m - 2, m - 2);
    if (m - 2 == 0) f -= 1;
    b.add("top-improvement", "b_m-1(Z) <= 2 b_m-1(Z/c) + b~_m-2(F) - 1 (b_m(Z) = 1, dim F <= m - 2)",
          table_sum(b, "betti_Z", m - 1, m - 1), 2 * table_sum(b, "betti_quot", m - 1, m - 1) + f - 1);
    b.note("top-improvement assumes b_m(Z; Z/2) = 1 and dim F <= m - 2");
    ++emitted;
  }
  // Estimates of delta for real varieties of dimension d.
  const auto delta = b.opt("delta");
  if (bd.has("d") && bd.has("b_xbar_d1")) {
    const long d = b.get("d").get_num().get_si();
    const Q bx = b.get("b_xbar_d1");
    if (bd.has_table("betti_cx_z2")) {
      b.add("delta-variety", "delta <= sum_{k=d+1}^{2d} b_k(CX; Z/2) - b_d+1(X bar)", delta,
            table_sum(b, "betti_cx_z2", d + 1, 2 * d) - bx);
      if (bd.has("n"))
        b.add("delta-complete-intersection", "delta <= b_d+1(CX; Z/2) + n - b_d+1(X bar)", delta,
              table_sum(b, "betti_cx_z2", d + 1, d + 1) + b.get("n") - bx);
    }
    if (bd.has_table("betti_cp_ca_z2") && bd.has("n"))
      b.add("delta-double-cover", "delta <= sum_{k=d+1}^{2d-1} b_k(CP^d, CA; Z/2) + (n - 1) - b_d+1(X bar)", delta,
            table_sum(b, "betti_cp_ca_z2", d + 1, 2 * d - 1) + b.get("n") - 1 - bx);
    if (bd.has("b_ca_d_z2") && bd.has("nu_d") && bd.has("n"))
      b.add("delta-isolated", "delta <= (b_d(CA; Z/2) - nu_d) + n - b_d+1(X bar)", delta,
            b.get("b_ca_d_z2") - b.get("nu_d") + b.get("n") - bx);
    ++emitted;
  }
  // Double covers of surfaces.
  if (bd.has("b1_cp_z2") && bd.has("bt0_ca")) {
    b.add("b1-quotient", "b1(X bar) <= b1(CP; Z/2) + bt0(A)/2", b.opt("b1_xbar"), b.get("b1_cp_z2") + half(b.get("bt0_ca")));
    if (bd.has("bt0_ca2") && bd.has("b2_ca") && bd.has("nu") && bd.has("beta"))
      b.add("b3-quotient", "b3(X bar) <= b1(CP; Z/2) + min(bt0(CA''), bt0(CA) + 2beta, b2(CA) - nu)/2",
            b.opt("b3_xbar"), b.get("b1_cp_z2") + curve_min_term(b));
    if (bd.has("bt0_ca1"))
      b.add("b3-quotient-real", "b3(X bar) <= b1(CP; Z/2) + bt0(CA')", b.opt("b3_xbar"),
            b.get("b1_cp_z2") + b.get("bt0_ca1"));
    if (bd.has("b1_xbar") && bd.has("b2_ca1") && bd.has("nu_prime") && bd.has("alpha_im0"))
      b.add("delta-prime", "delta' <= 2b1(CP; Z/2) - b1(X bar) + (b2(CA') - nu') + max(0, 3alpha0 - 1)",
            b.opt("delta_prime"),
            2 * b.get("b1_cp_z2") - b.get("b1_xbar") + b.get("b2_ca1") - b.get("nu_prime") +
                qmax(0, 3 * b.get("alpha_im0") - 1));
    if (bd.has("b3_xbar") && bd.has("b2_ca1") && bd.has("nu_prime") && bd.has("alpha_im0") && bd.has("beta"))
      b.add("nullity-delta-prime",
            "b2^0(X bar) + delta' <= 2b1(CP; Z/2) - b3(X bar) + (b2(CA') - nu') + beta + max(0, 3alpha0 - 1)",
            b.opt_sum({"b2_zero_xbar", "delta_prime"}),
            2 * b.get("b1_cp_z2") - b.get("b3_xbar") + b.get("b2_ca1") - b.get("nu_prime") + b.get("beta") +
                qmax(0, 3 * b.get("alpha_im0") - 1));
    ++emitted;
  }
  if (bd.has("m") && bd.has("d")) {
    const long m = b.get("m").get_num().get_si(), d = b.get("d").get_num().get_si();
    b.add("delta-arrangement", "delta <= number of regions meeting one hyperplane", delta,
          arrangement_nullity_bound(m, d));
    ++emitted;
  }
  if (!emitted) throw InputError("missing data for smith: no row has all of its inputs");
  return b.done();
}

BoundsReport hodge_identities(const InvariantBundle& iv) {
  Builder b("hodge", iv);
  const auto& bd = b.bundle();
  int emitted = 0;
  if (bd.has("n") && bd.has("b_plus_cx") && bd.has("b_minus_cx")) {
    const int kap = parity_sign(b.get("n"));
    Q t;
    if (bd.has("t"))
      t = b.get("t");
    else if (bd.get_or("complete_intersection", 0) != 0)
      t = b.get("kappa");
    else
      throw InputError("missing field 't' for hodge (or set complete_intersection = 1)");
    const std::string lo = sign_word(-kap), hi = sign_word(kap);
    const Q lo_v = integral_half(b.get("b_" + lo + "_cx") - t, "b^-kappa(X bar)");
    b.add("b^-kappa(X bar)", "b_d^-kappa(X bar) = (b_d^-kappa(CX) - t)/2", b.opt("b_" + lo + "_xbar"), lo_v,
          RowKind::Identity);
    if (bd.has("chi_rx")) {
      const Q hi_v = integral_half(b.get("b_" + hi + "_cx") + b.get("chi_rx") - t, "b^kappa(X bar)");
      b.add("b^kappa(X bar)", "b_d^kappa(X bar) = (b_d^kappa(CX) + chi(RX) - t)/2", b.opt("b_" + hi + "_xbar"), hi_v,
            RowKind::Identity);
    }
    ++emitted;
  }
  if (bd.has("n") && bd.has("chi_cx") && bd.has("sigma_cx") && bd.has("chi_xbar") && bd.has("sigma_xbar")) {
    const int kap = parity_sign(b.get("n"));
    auto dval = [&](int s) {
      return b.get("chi_xbar") + s * b.get("sigma_xbar") - half(b.get("chi_cx") + s * b.get("sigma_cx"));
    };
    b.add("D^-kappa", "D^-kappa(CX) = T^-kappa(X bar) - T^-kappa(CX)/2 = 0", dval(-kap), 0, RowKind::Identity);
    if (bd.has("chi_rx"))
      b.add("D^kappa", "D^kappa(CX) = chi(RX)", dval(kap), b.get("chi_rx"), RowKind::Identity);
    ++emitted;
  }
  if (bd.has("n") && bd.has("b_plus_cu") && bd.has("b_minus_cu") && bd.has("b_zero_cu")) {
    const int kap = parity_sign(b.get("n"));
    const std::string lo = sign_word(-kap), hi = sign_word(kap);
    const Q lo_v = integral_half(b.get("b_" + lo + "_cu") + b.get("b_zero_cu"), "b^-kappa(U bar) + b^0(U bar)");
    b.add("b^-kappa+b^0(U bar)", "b_d^-kappa(U bar) + b_d^0(U bar) = (b_d^-kappa(CU) + b_d^0(CU))/2",
          b.opt_sum({"b_" + lo + "_ubar", "b_zero_ubar"}), lo_v, RowKind::Identity);
    if (bd.has("chi_ru")) {
      const Q hi_v = integral_half(b.get("b_" + hi + "_cu") + b.get("chi_ru") - 1, "b^kappa(U bar)");
      b.add("b^kappa(U bar)", "b_d^kappa(U bar) = (b_d^kappa(CU) + chi(RU) - 1)/2", b.opt("b_" + hi + "_ubar"), hi_v,
            RowKind::Identity);
    }
    ++emitted;
  }
  if (!emitted) throw InputError("missing data for hodge: need n with b_plus_cx and b_minus_cx (or local CU data)");
  return b.done();
}

BoundsReport petrovskii_general(const InvariantBundle& iv) {
  Builder b("petrovskii", iv);
  const Q beta = b.get("beta"), mu = b.get("mu_minus");
  const Q mn = curve_min_term(b);
  const Q base = b.get("b2_minus_cp") + half(b.get("LK3L")) - half(mu) + b.get("t2") - beta + mn;
  for (const char* eps : {"plus", "minus"}) {
    const std::string key = std::string("chi_rx_") + eps;
    if (!b.has(key)) continue;
    b.add(std::string("chi(RX") + (eps[0] == 'p' ? "+" : "-") + ")",
          "-chi(RX^eps)/2 <= b2-(CP) + L.(K+3L)/2 - mu^-/2 + t2 - beta + min(bt0(CA''), bt0(CA) + 2beta, b2(CA) - nu)/2",
          -half(b.get(key)), base);
  }
  std::optional<Q> diff;
  if (b.has("chi_rp_plus") && b.has("chi_rp_minus")) diff = abs(b.get("chi_rp_plus") - b.get("chi_rp_minus"));
  const Q beta2 = 2 * beta;
  b.add("|chi(RP+) - chi(RP-)|",
        "|chi(RP+) - chi(RP-)| <= 2b2-(CP) + chi(RP) + L.(K+3L) - mu^- + 2t2 + min(bt0(CA'') - 2beta, bt0(CA), b2(CA) - "
        "nu - 2beta)",
        diff,
        2 * b.get("b2_minus_cp") + b.get("chi_rp") + b.get("LK3L") - mu + 2 * b.get("t2") +
            qmin({b.get("bt0_ca2") - beta2, b.get("bt0_ca"), b.get("b2_ca") - b.get("nu") - beta2}));
  if (b.has("k") && b.bundle().get_or("cp2", 0) != 0) {
    const Q k = b.get("k");
    b.add("plane |chi(RP+) - chi(RP-)|",
          "|chi(RP+) - chi(RP-)| <= 3k(k-1) + 1 - mu^- + min(0, bt0(CA'') - 2beta, b2(CA) - nu - 2beta)", diff,
          3 * k * (k - 1) + 1 - mu + qmin({Q(0), b.get("bt0_ca2") - beta2, b.get("b2_ca") - b.get("nu") - beta2}));
  }
  return b.done();
}

BoundsReport cuspidal_bounds(const InvariantBundle& iv) {
  Builder b("cuspidal", iv);
  const Q k = b.get("k");
  if (!is_integer(k)) throw InputError("k must be an integer");
  const bool k_even = k.get_num() % 2 == 0;
  const Q ind = b.get("eps_plus") + b.get("eps_zero") + b.get("eps_minus");
  for (const char* e : {"eps_plus", "eps_zero", "eps_minus"})
    if (b.get(e) != 0 && b.get(e) != 1) throw InputError(std::string(e) + " must be 0 or 1");
  if (ind != (k_even ? 0 : 1))
    throw InputError("indicator inconsistency: eps+ + eps0 + eps- must be " + std::string(k_even ? "0" : "1") +
                     " for " + (k_even ? "even" : "odd") + " k");
  const bool flat = b.bundle().get_or("non_parabolic", 0) != 0;
  const Q odd_k = k_even ? 0 : 1;  // (1 - (-1)^k)/2
  const Q even_k = 1 - odd_k;      // (1 + (-1)^k)/2
  const Q pg = half((k - 1) * (k - 2)) - half(b.get("mu_plus"));
  const Q pm = Q(3, 2) * k * (k - 1) - half(b.get("mu_minus"));
  const Q np = b.get("odd_minus"), n0 = b.get("odd_zero");
  const Q pmn = b.get("even_minus"), p0 = b.get("even_zero");
  const Q n = b.get("odd_total"), p = b.get("even_total");
  if (flat) b.note("non_parabolic set: using the sharper constants that exclude all-parabolic topology");
  if (b.has("r") && b.has("nu")) {
    const Q rn = b.get("r") - b.get("nu");
    const Q corr = flat ? Q(1) : odd_k;
    b.add("quasi:odd", "n- + n0 + eps- <= (k-1)(k-2)/2 - mu^+/2 + min(n0, r - nu - 1)", np + n0 + b.get("eps_minus"),
          pg + qmin({n0, rn - 1}));
    b.add("quasi:even", "p- + p0 <= (k-1)(k-2)/2 - mu^+/2 + min(p0, r - nu - (1-(-1)^k)/2)", pmn + p0,
          pg + qmin({p0, rn - corr}));
    b.add("quasi:n-p", "n - p- <= 3k(k-1)/2 - mu^-/2 + min(p0, r - nu - (1-(-1)^k)/2)", n - pmn,
          pm + qmin({p0, rn - corr}));
    b.add("quasi:p-n", "p - n- + eps+ <= 3k(k-1)/2 - mu^-/2 + min(n0 + 1, r - nu)", p - np + b.get("eps_plus"),
          pm + qmin({n0 + 1, rn}));
  }
  const Q extra = flat ? Q(0) : even_k;
  b.add("cusp:odd", "n- + n0 + eps- <= (k-1)(k-2)/2 - mu^+/2", np + n0 + b.get("eps_minus"), pg);
  b.add("cusp:even", "p- + p0 <= (k-1)(k-2)/2 - mu^+/2 + (1+(-1)^k)/2", pmn + p0, pg + extra);
  b.add("cusp:n-p", "n - p- <= 3k(k-1)/2 - mu^-/2 + (1+(-1)^k)/2", n - pmn, pm + extra);
  b.add("cusp:p-n", "p - n- + eps+ <= 3k(k-1)/2 - mu^-/2 + 1", p - np + b.get("eps_plus"), pm + 1);
  return b.done();
}

Rational arrangement_nullity_bound(long m, long d) {
  Q s = 0;
  for (long k = 0; k <= d - 1; ++k) s += binomial(m - 2, k);
  return s;
}

}  // namespace avk
