#include <algorithm>

#include "covcert/error.hpp"
#include "covcert/numberfields.hpp"
#include "covcert/specfun.hpp"

namespace covcert::numberfields {

namespace {

bool square_root(const Integer& n, Integer& root) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

// Bit i set when the i-th embedding is negative.
unsigned long sign_mask(const std::vector<int>& signs) {
  unsigned long m = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] < 0) m |= 1UL << i;
  }
  return m;
}

int f2_rank(std::vector<unsigned long> rows) {
  int rank = 0;
  for (int bit = 0; bit < 64; ++bit) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](unsigned long r) { return (r >> bit) & 1; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (auto it = rows.begin(); it != rows.end(); ++it) {
      if (it != rows.begin() + rank && ((*it >> bit) & 1)) *it ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::vector<unsigned long> generator_masks(const NumberFieldRecord& field) {
  std::vector<unsigned long> masks;
  for (const auto& g : unit_generators(field)) masks.push_back(sign_mask(embedding_signs(field, g)));
  return masks;
}

}  // namespace

std::pair<Integer, Integer> pell_fundamental_unit(long D) {
  if (D < 2 || !specfun::is_fundamental_discriminant(D)) {
    throw Error(Errc::InvalidArgument, "not a real quadratic fundamental discriminant: " + std::to_string(D));
  }
  for (Integer b = 1;; ++b) {
    Integer root;
    if (square_root(D * b * b - 4, root) && root > 0) return {root, b};
    if (square_root(D * b * b + 4, root)) return {root, b};
  }
}

std::vector<int> embedding_signs(const NumberFieldRecord& field, const Poly& x) {
  for (long bits = 64; bits <= 2048; bits *= 2) {
    auto roots = real_roots(field.polynomial, bits);
    if (static_cast<int>(roots.size()) != field.degree) {
      throw Error(Errc::InvariantViolation, field.label + " is not totally real");
    }
    std::vector<int> signs;
    for (const auto& r : roots) {
      Interval v = evaluate(x, r);
      if (v.contains_zero()) break;
      signs.push_back(v.is_positive() ? 1 : -1);
    }
    if (static_cast<int>(signs.size()) == field.degree) return signs;
  }
  throw Error(Errc::InvariantViolation, field.label + ": sign not resolved at 2048 bits");
}

std::vector<Poly> unit_generators(const NumberFieldRecord& field) {
  std::vector<Poly> gens{Poly{Rational(-1)}};
  if (field.degree == 2) {
    auto [a, b] = pell_fundamental_unit(field.discriminant);
    // theta = (-c1 + sqrt(c1^2 - 4 c0)) / 2 for one of the roots, and
    // c1^2 - 4 c0 = D k^2, so sqrt(D) = (2 theta + c1) / k.
    const Rational& c1 = field.polynomial[1];
    Rational k(field.polynomial_index);
    gens.push_back(trim(Poly{Rational(a) / 2 + Rational(b) * c1 / (2 * k), Rational(b) / k}));
  } else {
    for (const auto& u : field.units) gens.push_back(u);
  }
  return gens;
}

long count_totally_positive_classes(const NumberFieldRecord& field) {
  auto masks = generator_masks(field);
  long count = 0;
  for (unsigned long subset = 0; subset < (1UL << masks.size()); ++subset) {
    unsigned long m = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if ((subset >> i) & 1) m ^= masks[i];
    }
    if (m == 0) ++count;
  }
  return count;
}

long totally_positive_index(const NumberFieldRecord& field) {
  if (field.degree == 1) return 1;
  if (field.degree == 2 || static_cast<int>(field.units.size()) == field.degree - 1) {
    return count_totally_positive_classes(field);
  }
  if (totally_positive_index_upper(field) == 1) return 1;
  throw Error(Errc::UnsupportedField, field.label + ": no fundamental unit system on record");
}

long totally_positive_index_upper(const NumberFieldRecord& field) {
  if (field.degree == 1) return 1;
  return 1L << (field.degree - f2_rank(generator_masks(field)));
}

}  // namespace covcert::numberfields
