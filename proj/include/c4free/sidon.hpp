#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "c4free/graph.hpp"

namespace c4free {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t x);

/// Smallest prime q with q^2 - 1 >= min_size.
std::uint64_t next_prime_with(std::uint64_t min_size);

/// Element a + b*w of GF(q^2).
struct FieldElement {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// GF(q^2) as GF(q)[w] / (w^2 - s*w - r).
///
/// For odd q, s = 0 and r is a quadratic non-residue; for q = 2 the modulus is
/// w^2 + w + 1 (r = s = 1). `primitive` generates the multiplicative group.
class QuadExtField {
 public:
  std::uint64_t q() const { return q_; }
  std::uint64_t order() const { return q_ * q_; }
  std::uint64_t nonresidue() const { return r_; }
  std::uint64_t linear_coefficient() const { return s_; }
  FieldElement primitive() const { return primitive_; }

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(FieldElement x) const;

  friend QuadExtField build_field(std::uint64_t q);

 private:
  std::uint64_t q_ = 0;
  std::uint64_t r_ = 0;
  std::uint64_t s_ = 0;
  FieldElement primitive_;
};

/// Throws FieldError if q is not prime.
QuadExtField build_field(std::uint64_t q);

/// Table of discrete logarithms base the field's primitive element, indexed
/// by a * q + b. The zero element maps to ~0.
std::vector<std::uint64_t> discrete_log_table(const QuadExtField& field);

/// { log(theta + a) : a in GF(q) }, a q-element Sidon set modulo q^2 - 1.
std::vector<std::uint64_t> bose_sidon(const QuadExtField& field);

/// Partition of Z_m (m = q^2 - 1) into Sidon sets.
struct SidonPartition {
  std::uint64_t q = 0;
  std::uint64_t m = 0;
  std::vector<std::vector<std::uint64_t>> classes;
  /// class_of[r] is the index of the class holding residue r.
  std::vector<std::uint32_t> class_of;
};

/// The q - 1 translates of the Bose set by the logs of GF(q)^* (each log is a
/// multiple of q + 1), followed by the leftover progression
/// {0, q + 1, ..., (q - 2)(q + 1)} split first-fit into Sidon sets.
/// Every class is checked before return; throws std::logic_error on failure.
SidonPartition sidon_partition(std::uint64_t q);

struct CompleteOptions {
  /// Added to ceil(2 sqrt t) to form the class budget.
  std::size_t budget_slack = 0;
  /// Further primes tried when a construction misses the budget.
  int prime_retries = 3;
  /// t at or below this uses exact search instead of the Sidon construction.
  std::size_t exact_up_to = 8;
  /// Run find_c4 on every class before returning.
  bool verify = true;
};

/// A C4-free colouring of K_t, held as a pair -> class lookup so that large t
/// does not force materialising all t(t-1)/2 edges.
class CompleteColouring {
 public:
  enum class Source { trivial, exact_search, sidon };

  std::size_t order() const { return t_; }
  std::size_t classes() const { return classes_; }
  /// Prime behind the Sidon construction, 0 for other sources.
  std::uint64_t prime() const { return prime_; }
  Source source() const { return source_; }
  /// Whether classes() <= ceil(2 sqrt t) + slack.
  bool within_budget() const { return within_budget_; }

  /// Class of the edge {i, j}, i != j, both < order().
  Colour class_of(Vertex i, Vertex j) const {
    if (modulus_ != 0) return residue_class_[(std::uint64_t{i} + j) % modulus_];
    return matrix_[std::size_t{i} * t_ + j];
  }

  EdgeColouring to_edge_colouring() const;

  friend CompleteColouring complete_c4_free_colouring(std::size_t t, const CompleteOptions&);

 private:
  std::size_t t_ = 0;
  std::size_t classes_ = 0;
  std::uint64_t prime_ = 0;
  Source source_ = Source::trivial;
  bool within_budget_ = true;
  std::uint64_t modulus_ = 0;
  std::vector<Colour> residue_class_;
  std::vector<Colour> matrix_;
};

/// ceil(2 sqrt t) in exact integer arithmetic.
std::uint64_t two_sqrt_ceil(std::uint64_t t);

/// C4-free edge colouring of K_t: vertex i is read as a residue mod
/// m = q^2 - 1 and edge {i, j} takes the Sidon class holding (i + j) mod m.
/// Unused classes are dropped and the rest renumbered in order. Small t goes
/// through exact search seeded at the ex(t, C4) lower bound.
CompleteColouring complete_c4_free_colouring(std::size_t t, const CompleteOptions& options = {});

}  // namespace c4free
