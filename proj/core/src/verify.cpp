#include "nvlab/verify.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

namespace nvlab {

namespace {

FrequencyPair draw_nonzero(std::mt19937_64& rng, i64 max_frequency) {
  std::uniform_int_distribution<i64> d(-max_frequency, max_frequency);
  for (;;) {
    FrequencyPair z{d(rng), d(rng)};
    if (!z.is_zero()) return z;
  }
}

double abs2(FrequencyPair z) {
  return double(z.xi) * double(z.xi) + double(z.eta) * double(z.eta);
}

}  // namespace

IdentityReport verify_m_r_identity(long sample_count, i64 max_frequency, std::uint64_t seed) {
  if (sample_count <= 0 || max_frequency <= 0)
    throw std::invalid_argument("verify_m_r_identity: counts must be positive");
  std::mt19937_64 rng(seed);
  IdentityReport rep;
  rep.samples = sample_count;
  rep.exact_identity_holds = true;
  for (long s = 0; s < sample_count; ++s) {
    FrequencyPair z1 = draw_nonzero(rng, max_frequency);
    FrequencyPair z2 = draw_nonzero(rng, max_frequency);
    double m = symbol_m(z1, z2);
    double dot = double(z1.xi) * double(z2.xi) + double(z1.eta) * double(z2.eta);
    double rhs = (2.0 / 3.0) * dot / (abs2(z1) * abs2(z2)) * double(resonance_r(z1, z2));
    double dev = std::abs(m - rhs) / std::max(1.0, std::abs(m));
    if (dev > rep.max_deviation) {
      rep.max_deviation = dev;
      rep.worst_z1 = z1;
      rep.worst_z2 = z2;
    }
    if (!m_r_identity_exact(z1, z2)) rep.exact_identity_holds = false;
  }
  rep.pass = rep.exact_identity_holds && rep.max_deviation < 1e-12;
  return rep;
}

BoundReport verify_interpolation_bound(double theta, long sample_count, i64 max_frequency,
                                       bool constant_free, std::uint64_t seed) {
  if (theta <= 0.0 || theta >= 1.0)
    throw std::invalid_argument("verify_interpolation_bound: theta must lie in (0,1)");
  if (sample_count <= 0 || max_frequency <= 0)
    throw std::invalid_argument("verify_interpolation_bound: counts must be positive");
  std::mt19937_64 rng(seed);
  BoundReport rep;
  rep.samples = sample_count;
  rep.theta = theta;
  rep.constant_free = constant_free;
  rep.derived_constant = 2.0 * std::pow(3.0, -theta);
  double allowed = constant_free ? 1.0 : rep.derived_constant * (1.0 + 1e-9);
  rep.max_deviation = -1.0;
  for (long s = 0; s < sample_count; ++s) {
    // The sharp witness goes first so the empirical constant is the true supremum.
    FrequencyPair z1 = s == 0 ? FrequencyPair{1, 0} : draw_nonzero(rng, max_frequency);
    FrequencyPair z2 = s == 0 ? FrequencyPair{1, 0} : draw_nonzero(rng, max_frequency);
    FrequencyPair z = z1 + z2;
    if (z.is_zero()) continue;
    double r = std::abs(double(resonance_r(z1, z2)));
    double az = std::sqrt(abs2(z)), a1 = std::sqrt(abs2(z1)), a2 = std::sqrt(abs2(z2));
    double rc = r / (az * a1 * a2);
    rep.r_constant = std::max(rep.r_constant, rc);
    if (r == 0.0) continue;  // the identity forces m = 0; nothing to bound
    double ratio = std::abs(symbol_m(z1, z2)) /
                   (std::pow(az, 1.0 - theta) * std::pow(a1 * a2, -theta) * std::pow(r, theta));
    double dev = ratio / allowed - 1.0;
    if (ratio > rep.smallest_constant) rep.smallest_constant = ratio;
    if (dev > rep.max_deviation) {
      rep.max_deviation = dev;
      rep.worst_z1 = z1;
      rep.worst_z2 = z2;
    }
  }
  rep.pass = rep.max_deviation <= 0.0 && rep.r_constant <= 3.0 + 1e-9;
  return rep;
}

namespace {

// Minimal exact polynomial arithmetic in the variables (tau, xi, eta, x, y).
using Rat = boost::rational<long long>;
using Expo = std::array<int, 5>;
constexpr const char* kVarNames[5] = {"tau", "xi", "eta", "x", "y"};

struct Poly {
  std::map<Expo, Rat> terms;

  static Poly var(int idx, Rat c = Rat(1)) {
    Poly p;
    Expo e{};
    e[idx] = 1;
    p.terms[e] = c;
    return p;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms) {
      Rat& r = terms[e];
      r += c;
      if (r == Rat(0)) terms.erase(e);
    }
    return *this;
  }
  Poly operator+(const Poly& o) const {
    Poly p = *this;
    p += o;
    return p;
  }
  Poly operator-() const {
    Poly p = *this;
    for (auto& [e, c] : p.terms) c = -c;
    return p;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    Poly p;
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        Expo e;
        for (int i = 0; i < 5; ++i) e[i] = e1[i] + e2[i];
        Rat& r = p.terms[e];
        r += c1 * c2;
        if (r == Rat(0)) p.terms.erase(e);
      }
    return p;
  }
  Poly scaled(Rat c) const {
    Poly p = *this;
    for (auto& [e, r] : p.terms) r *= c;
    return p;
  }
};

std::string format_rat(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

std::string format_monomial(const Expo& e) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 5; ++i) {
    if (!e[i]) continue;
    if (!first) os << "*";
    os << kVarNames[i];
    if (e[i] > 1) os << "^" << e[i];
    first = false;
  }
  return first ? std::string("1") : os.str();
}

std::string format_poly(const Poly& p) {
  // Stable order: tau first, then decreasing total degree, then map order.
  std::vector<std::pair<Expo, Rat>> v(p.terms.begin(), p.terms.end());
  auto rank = [](const Expo& e) {
    int deg = 0;
    for (int x : e) deg += x;
    return std::make_tuple(-e[0], -deg);
  };
  std::stable_sort(v.begin(), v.end(),
                   [&](const auto& a, const auto& b) { return rank(a.first) < rank(b.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : v) {
    Rat a = c < Rat(0) ? -c : c;
    os << (first ? (c < Rat(0) ? "-" : "") : (c < Rat(0) ? " - " : " + "));
    first = false;
    if (a != Rat(1) || format_monomial(e) == "1") os << format_rat(a) << "*";
    os << format_monomial(e);
  }
  return os.str();
}

Poly phase_poly(const Poly& a, const Poly& b) {  // a^3 - 3 a b^2
  return a * a * a - (a * b * b).scaled(Rat(3));
}

}  // namespace

HalfShiftReport half_shift_expansion() {
  const int TAU = 0, XI = 1, ETA = 2, X = 3, Y = 4;
  Poly tau = Poly::var(TAU), xi = Poly::var(XI), eta = Poly::var(ETA);
  Poly x = Poly::var(X), y = Poly::var(Y);

  Poly xi1 = x + xi.scaled(Rat(1, 2)), eta1 = y + eta.scaled(Rat(1, 2));
  Poly xi2 = xi.scaled(Rat(1, 2)) - x, eta2 = eta.scaled(Rat(1, 2)) - y;
  Poly derived = tau - phase_poly(xi1, eta1) - phase_poly(xi2, eta2);

  // Reference display: tau - 1/4 xi^3 + 7/4 xi eta^2 + 3 xi x^2 - 3 xi y^2 - 6 eta x y.
  Poly reference = tau - (xi * xi * xi).scaled(Rat(1, 4)) + (xi * eta * eta).scaled(Rat(7, 4)) +
                   (xi * x * x).scaled(Rat(3)) - (xi * y * y).scaled(Rat(3)) -
                   (eta * x * y).scaled(Rat(6));

  HalfShiftReport rep;
  rep.derived_terms = format_poly(derived);
  rep.reference_terms = format_poly(reference);

  Expo e_xieta2{};
  e_xieta2[XI] = 1;
  e_xieta2[ETA] = 2;
  auto coeff_of = [&](const Poly& p, const Expo& e) {
    auto it = p.terms.find(e);
    return it == p.terms.end() ? Rat(0) : it->second;
  };
  rep.xi_eta2_coefficient = format_rat(coeff_of(derived, e_xieta2));
  rep.reference_xi_eta2_coefficient = format_rat(coeff_of(reference, e_xieta2));

  Expo e_xix2{};
  e_xix2[XI] = 1;
  e_xix2[X] = 2;
  rep.quadratic_form_sign_matches =
      (coeff_of(derived, e_xix2) > Rat(0)) == (coeff_of(reference, e_xix2) > Rat(0));

  std::map<Expo, Rat> all;
  for (const auto& [e, c] : derived.terms) all[e] = c;
  for (const auto& [e, c] : reference.terms) all.try_emplace(e, Rat(0));
  rep.matches_reference = true;
  for (const auto& [e, unused] : all) {
    (void)unused;
    Rat a = coeff_of(derived, e), b = coeff_of(reference, e);
    std::ostringstream os;
    os << format_monomial(e) << ": derived " << format_rat(a) << ", reference " << format_rat(b)
       << (a == b ? " (match)" : " (DIFFERS)");
    rep.term_comparison.push_back(os.str());
    if (a != b) rep.matches_reference = false;
  }
  rep.window_argument_note =
      "reference window argument chi_2R(2x + xi, 2eta + y) appears to transpose eta and y; "
      "the consistent argument is chi_2R(2x + xi, 2y + eta)";
  return rep;
}

}  // namespace nvlab
