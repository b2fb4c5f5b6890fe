#include "caylap/weights.hpp"

#include <stdexcept>

namespace caylap {

const char* weight_domain_name(WeightDomain d) {
  switch (d) {
    case WeightDomain::g_full: return "g";
    case WeightDomain::g_plus: return "g_plus";
    case WeightDomain::g_prime: return "g_prime";
    case WeightDomain::g_prime_plus: return "g_prime_plus";
  }
  return "?";
}

WeightDomain weight_domain_from_name(const std::string& name) {
  if (name == "g") return WeightDomain::g_full;
  if (name == "g_plus") return WeightDomain::g_plus;
  if (name == "g_prime") return WeightDomain::g_prime;
  if (name == "g_prime_plus") return WeightDomain::g_prime_plus;
  throw std::invalid_argument("unknown weight domain '" + name + "'");
}

bool weight_domain_symmetric(WeightDomain d) {
  return d == WeightDomain::g_prime || d == WeightDomain::g_prime_plus;
}

bool weight_domain_positive(WeightDomain d) {
  return d == WeightDomain::g_plus || d == WeightDomain::g_prime_plus;
}

void check_weight_vector(const GeneratorSet& s, const WeightVector& wv) {
  if (static_cast<int>(wv.values.size()) != s.size())
    throw std::invalid_argument("weight vector length does not match generator count");
  if (weight_domain_positive(wv.domain))
    for (const Rational& v : wv.values)
      if (v <= 0) throw std::invalid_argument("weight vector must be strictly positive");
  if (weight_domain_symmetric(wv.domain)) {
    if (!s.symmetric)
      throw std::invalid_argument("symmetric weight domain requires a symmetric generator set");
    for (std::size_t i = 0; i < wv.values.size(); ++i)
      if (wv.values[i] != wv.values[static_cast<std::size_t>(s.pairing[i])])
        throw std::invalid_argument("weight vector is not inversion-symmetric");
  }
}

std::vector<std::vector<int>> sprime_classes(const GeneratorSet& s) {
  if (!s.symmetric)
    throw std::invalid_argument("S' classes require a symmetric generator set");
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(static_cast<std::size_t>(s.size()), false);
  for (int i = 0; i < s.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int j = s.pairing[static_cast<std::size_t>(i)];
    seen[static_cast<std::size_t>(i)] = true;
    if (j == i) {
      classes.push_back({i});
    } else {
      seen[static_cast<std::size_t>(j)] = true;
      classes.push_back({i, j});
    }
  }
  return classes;
}

WeightVector symmetrize(const GeneratorSet& s, const std::vector<Rational>& per_class,
                        WeightDomain domain) {
  auto classes = sprime_classes(s);
  if (per_class.size() != classes.size())
    throw std::invalid_argument("one value per S' class required");
  WeightVector wv;
  wv.domain = domain;
  wv.values.assign(static_cast<std::size_t>(s.size()), Rational(0));
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int pos : classes[c]) wv.values[static_cast<std::size_t>(pos)] = per_class[c];
  check_weight_vector(s, wv);
  return wv;
}

}  // namespace caylap
