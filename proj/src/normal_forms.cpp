#include "npcoh/normal_forms.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "npcoh/scalar.hpp"

namespace npcoh {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::Regular: return "regular";
    case Family::Quadratic: return "quadratic";
  }
  throw InputError("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "A" || name == "a") return Family::A;
  if (name == "D" || name == "d") return Family::D;
  if (name == "E" || name == "e") return Family::E;
  std::string low;
  for (char c : name) low += static_cast<char>(std::tolower(c));
  if (low == "regular") return Family::Regular;
  if (low == "quadratic") return Family::Quadratic;
  throw InputError("unknown singularity family '" + name + "'");
}

std::string SingularityClass::label() const {
  switch (family) {
    case Family::A:
    case Family::D:
    case Family::E:
      return family_name(family) + std::to_string(index);
    case Family::Regular: return "regular";
    case Family::Quadratic: return "quadratic";
  }
  throw InputError("unknown family");
}

namespace {

// Written terms, integer weights, common degree N, expected codimension.
struct FamilyData {
  std::vector<Monomial> terms;
  std::vector<long> weights;
  long N = 0;
  long mu = 0;
};

Monomial power_mono(int n, int var, unsigned e) {
  Monomial m(n);
  m.set_exp(var, e);
  return m;
}

FamilyData build_family(const SingularityClass& cls) {
  int n = cls.n;
  FamilyData d;
  d.weights.assign(n, 0);
  switch (cls.family) {
    case Family::A: {
      if (cls.index < 1)
        throw InputError("A-series index must be at least 1");
      long k = cls.index;
      long N = std::lcm<long>(k + 1, 2);
      d.N = N;
      d.weights[0] = N / (k + 1);
      for (int i = 1; i < n; ++i) d.weights[i] = N / 2;
      d.terms.push_back(power_mono(n, 0, static_cast<unsigned>(k + 1)));
      for (int i = 1; i < n; ++i) d.terms.push_back(power_mono(n, i, 2));
      d.mu = k;
      break;
    }
    case Family::D: {
      if (cls.index < 4)
        throw InputError("D-series index must be at least 4");
      long k = cls.index;
      long N = 2 * (k - 1);
      d.N = N;
      d.weights[0] = k - 2;
      d.weights[1] = 2;
      for (int i = 2; i < n; ++i) d.weights[i] = k - 1;
      Monomial lead(n);
      lead.set_exp(0, 2);
      lead.set_exp(1, 1);
      d.terms.push_back(lead);
      d.terms.push_back(power_mono(n, 1, static_cast<unsigned>(k - 1)));
      for (int i = 2; i < n; ++i) d.terms.push_back(power_mono(n, i, 2));
      d.mu = k;
      break;
    }
    case Family::E: {
      if (cls.index < 6 || cls.index > 8)
        throw InputError("E-series index must be 6, 7 or 8");
      long k = cls.index;
      if (k == 6) {
        d.N = 12;
        d.weights[0] = 4;
        d.weights[1] = 3;
        d.terms.push_back(power_mono(n, 0, 3));
        d.terms.push_back(power_mono(n, 1, 4));
      } else if (k == 7) {
        d.N = 18;
        d.weights[0] = 6;
        d.weights[1] = 4;
        d.terms.push_back(power_mono(n, 0, 3));
        Monomial m(n);
        m.set_exp(0, 1);
        m.set_exp(1, 3);
        d.terms.push_back(m);
      } else {
        d.N = 30;
        d.weights[0] = 10;
        d.weights[1] = 6;
        d.terms.push_back(power_mono(n, 0, 3));
        d.terms.push_back(power_mono(n, 1, 5));
      }
      for (int i = 2; i < n; ++i) {
        d.weights[i] = d.N / 2;
        d.terms.push_back(power_mono(n, i, 2));
      }
      d.mu = k;
      break;
    }
    case Family::Regular: {
      d.N = 1;
      for (int i = 0; i < n; ++i) d.weights[i] = 1;
      d.terms.push_back(power_mono(n, 0, 1));
      d.mu = 0;
      break;
    }
    case Family::Quadratic: {
      d.N = 2;
      for (int i = 0; i < n; ++i) d.weights[i] = 1;
      for (int i = 0; i < n; ++i) d.terms.push_back(power_mono(n, i, 2));
      d.mu = 1;
      break;
    }
  }
  long g = d.N;
  for (long w : d.weights) g = std::gcd(g, w);
  if (g > 1) {
    d.N /= g;
    for (long& w : d.weights) w /= g;
  }
  return d;
}

}  // namespace

NormalForm standard_polynomial(const SingularityClass& cls) {
  if (cls.n < 3) throw InputError("the ambient dimension must be at least 3");
  FamilyData d = build_family(cls);
  size_t nterms = d.terms.size();
  std::vector<int> signs(nterms, 1);
  if (!cls.signs.empty()) {
    if (cls.signs.size() == nterms) {
      if (cls.signs[0] != 1)
        throw InputError("the leading sign of a normal form must be +1");
      for (size_t i = 0; i < nterms; ++i) signs[i] = cls.signs[i];
    } else if (cls.signs.size() == nterms - 1) {
      for (size_t i = 1; i < nterms; ++i) signs[i] = cls.signs[i - 1];
    } else {
      throw InputError("expected " + std::to_string(nterms - 1) + " or " +
                       std::to_string(nterms) + " signs for class " +
                       cls.label() + ", got " +
                       std::to_string(cls.signs.size()));
    }
    for (int s : signs)
      if (s != 1 && s != -1) throw InputError("signs must be +1 or -1");
  }
  NormalForm nf;
  nf.cls = cls;
  nf.weights.w = d.weights;
  nf.degree = d.N;
  nf.milnor = d.mu;
  Polynomial f;
  for (size_t i = 0; i < nterms; ++i)
    f += Polynomial::term(d.terms[i], Rational(signs[i]));
  nf.f = f;
  for (const Monomial& t : d.terms)
    if (quasidegree(nf.weights, t) != d.N)
      throw std::logic_error("normal form term degrees are inconsistent");
  return nf;
}

SingularityClass parse_class_label(const std::string& label, int n) {
  if (label.empty()) throw InputError("empty class name");
  SingularityClass cls;
  cls.n = n;
  char c = label[0];
  if (c == 'A' || c == 'a' || c == 'D' || c == 'd' || c == 'E' || c == 'e') {
    std::string digits = label.substr(1);
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      cls.family = family_from_name(std::string(1, c));
      cls.index = std::stoi(digits);
      return cls;
    }
  }
  cls.family = family_from_name(label);
  cls.index = 0;
  return cls;
}

std::vector<NormalForm> catalog_sweep(int n_lo, int n_hi,
                                      const std::vector<Family>& families,
                                      int kmax) {
  if (n_lo < 3 || n_hi < n_lo)
    throw InputError("catalog range must satisfy 3 <= n_lo <= n_hi");
  if (kmax < 1) throw InputError("kmax must be at least 1");
  auto wants = [&](Family f) {
    return std::find(families.begin(), families.end(), f) != families.end();
  };
  std::vector<NormalForm> out;
  auto push_unique = [&](const SingularityClass& cls) {
    NormalForm nf = standard_polynomial(cls);
    for (const NormalForm& seen : out)
      if (seen.cls.n == nf.cls.n && seen.weights == nf.weights &&
          seen.f == nf.f)
        return;
    out.push_back(std::move(nf));
  };
  for (int n = n_lo; n <= n_hi; ++n) {
    if (wants(Family::A))
      for (int k = 1; k <= kmax; ++k)
        push_unique({Family::A, k, n, {}});
    if (wants(Family::D))
      for (int k = 4; k <= kmax; ++k)
        push_unique({Family::D, k, n, {}});
    if (wants(Family::E))
      for (int k = 6; k <= std::min(kmax, 8); ++k)
        push_unique({Family::E, k, n, {}});
    if (wants(Family::Regular)) push_unique({Family::Regular, 0, n, {}});
    if (wants(Family::Quadratic)) push_unique({Family::Quadratic, 0, n, {}});
  }
  return out;
}

}  // namespace npcoh
