#include "c4free/sidon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "c4free/generators.hpp"
#include "c4free/oracle.hpp"
#include "c4free/verify.hpp"

namespace c4free {
namespace {

std::uint64_t isqrt_floor(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      out.push_back(p);
      while (x % p == 0) x /= p;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (e) {
    if (e & 1) result = result * base % mod;
    base = base * base % mod;
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p == 0) return false;
  }
  return true;
}

std::uint64_t next_prime_with(std::uint64_t min_size) {
  std::uint64_t q = isqrt_floor(min_size + 1);
  if (q * q < min_size + 1) ++q;
  q = std::max<std::uint64_t>(q, 2);
  while (!is_prime(q)) ++q;
  return q;
}

FieldElement QuadExtField::add(FieldElement x, FieldElement y) const {
  return {(x.a + y.a) % q_, (x.b + y.b) % q_};
}

FieldElement QuadExtField::mul(FieldElement x, FieldElement y) const {
  // (a + bw)(c + dw) = ac + bd*r + (ad + bc + bd*s) w, using w^2 = r + s w.
  const std::uint64_t bd = x.b * y.b % q_;
  return {(x.a * y.a + bd * r_) % q_, (x.a * y.b + x.b * y.a + bd * s_) % q_};
}

FieldElement QuadExtField::pow(FieldElement x, std::uint64_t e) const {
  FieldElement result{1 % q_, 0};
  while (e) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

std::uint64_t QuadExtField::multiplicative_order(FieldElement x) const {
  if (x == FieldElement{}) throw FieldError("zero has no multiplicative order");
  std::uint64_t order = q_ * q_ - 1;
  for (auto p : prime_factors(q_ * q_ - 1)) {
    while (order % p == 0 && pow(x, order / p) == FieldElement{1, 0}) order /= p;
  }
  return order;
}

QuadExtField build_field(std::uint64_t q) {
  if (!is_prime(q)) throw FieldError(std::to_string(q) + " is not prime");
  if (q > (std::uint64_t{1} << 31)) throw FieldError("characteristic too large");
  QuadExtField f;
  f.q_ = q;
  if (q == 2) {
    f.r_ = 1;
    f.s_ = 1;
  } else {
    for (std::uint64_t r = 2; r < q; ++r) {
      if (pow_mod(r, (q - 1) / 2, q) == q - 1) {
        f.r_ = r;
        break;
      }
    }
  }
  const std::uint64_t m = q * q - 1;
  const auto factors = prime_factors(m);
  for (std::uint64_t b = 1; b < q; ++b) {
    for (std::uint64_t a = 0; a < q; ++a) {
      FieldElement x{a, b};
      bool generates = std::none_of(factors.begin(), factors.end(), [&](std::uint64_t p) {
        return f.pow(x, m / p) == FieldElement{1, 0};
      });
      if (generates) {
        f.primitive_ = x;
        return f;
      }
    }
  }
  throw std::logic_error("no primitive element found in GF(" + std::to_string(q) + "^2)");
}

std::vector<std::uint64_t> discrete_log_table(const QuadExtField& field) {
  const std::uint64_t q = field.q();
  const std::uint64_t m = q * q - 1;
  std::vector<std::uint64_t> log(q * q, ~std::uint64_t{0});
  FieldElement x{1, 0};
  for (std::uint64_t k = 0; k < m; ++k) {
    auto& slot = log[x.a * q + x.b];
    if (slot != ~std::uint64_t{0}) throw std::logic_error("primitive element repeats a power");
    slot = k;
    x = field.mul(x, field.primitive());
  }
  return log;
}

std::vector<std::uint64_t> bose_sidon(const QuadExtField& field) {
  const std::uint64_t q = field.q();
  const auto log = discrete_log_table(field);
  const auto theta = field.primitive();
  std::vector<std::uint64_t> set;
  set.reserve(q);
  for (std::uint64_t a = 0; a < q; ++a) {
    auto x = field.add(theta, {a, 0});
    set.push_back(log[x.a * q + x.b]);
  }
  std::sort(set.begin(), set.end());
  if (!is_sidon(set, q * q - 1)) throw std::logic_error("Bose set is not Sidon");
  return set;
}

SidonPartition sidon_partition(std::uint64_t q) {
  const auto field = build_field(q);
  const auto base = bose_sidon(field);
  SidonPartition out;
  out.q = q;
  out.m = q * q - 1;
  const std::uint64_t m = out.m;

  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    std::vector<std::uint64_t> cls;
    for (auto b : base) cls.push_back((b + k * (q + 1)) % m);
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  const std::size_t translates = out.classes.size();
  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    const std::uint64_t r = k * (q + 1);
    bool placed = false;
    for (std::size_t c = translates; c < out.classes.size() && !placed; ++c) {
      auto& cls = out.classes[c];
      cls.push_back(r);
      if (is_sidon(cls, m)) {
        placed = true;
      } else {
        cls.pop_back();
      }
    }
    if (!placed) out.classes.push_back({r});
  }

  out.class_of.assign(m, ~std::uint32_t{0});
  for (std::uint32_t c = 0; c < out.classes.size(); ++c) {
    if (!is_sidon(out.classes[c], m)) {
      throw std::logic_error("Sidon partition class " + std::to_string(c) + " is not Sidon");
    }
    for (auto r : out.classes[c]) {
      if (r >= m || out.class_of[r] != ~std::uint32_t{0}) {
        throw std::logic_error("Sidon partition classes overlap at residue " + std::to_string(r));
      }
      out.class_of[r] = c;
    }
  }
  if (std::find(out.class_of.begin(), out.class_of.end(), ~std::uint32_t{0}) != out.class_of.end()) {
    throw std::logic_error("Sidon partition does not cover Z_m");
  }
  if (out.classes.size() > (q - 1) + two_sqrt_ceil(q) + 2) {
    throw std::logic_error("Sidon partition uses " + std::to_string(out.classes.size()) +
                           " classes, above (q-1) + ceil(2 sqrt q) + 2");
  }
  return out;
}

std::uint64_t two_sqrt_ceil(std::uint64_t t) {
  std::uint64_t r = isqrt_floor(4 * t);
  return r * r == 4 * t ? r : r + 1;
}

EdgeColouring CompleteColouring::to_edge_colouring() const {
  EdgeColouring out;
  out.classes = classes_;
  const std::size_t pairs = t_ < 2 ? 0 : t_ * (t_ - 1) / 2;
  out.edges.reserve(pairs);
  out.colour.reserve(pairs);
  for (Vertex i = 0; i < t_; ++i) {
    for (Vertex j = i + 1; j < t_; ++j) {
      out.edges.push_back({i, j});
      out.colour.push_back(class_of(i, j));
    }
  }
  return out;
}

namespace {

void verify_or_throw(const CompleteColouring& kt) {
  auto report = verify_c4_free_colouring(kt.to_edge_colouring());
  if (!report.ok) {
    throw std::logic_error("complete colouring of K_" + std::to_string(kt.order()) +
                           " failed verification: " + report.summary());
  }
}

}  // namespace

CompleteColouring complete_c4_free_colouring(std::size_t t, const CompleteOptions& options) {
  CompleteColouring out;
  out.t_ = t;
  const std::uint64_t budget = two_sqrt_ceil(t) + options.budget_slack;
  if (t < 2) return out;

  if (t <= options.exact_up_to) {
    const Graph kt = complete_graph(t);
    OracleLimits unlimited{std::size_t{1} << 20};
    for (std::size_t k = std::max<std::uint64_t>(1, phi_lower_bound(t - 1));; ++k) {
      if (auto found = find_c4_free_colouring(kt, k, unlimited)) {
        out.source_ = CompleteColouring::Source::exact_search;
        out.classes_ = found->classes;
        out.matrix_.assign(t * t, kNoColour);
        for (std::size_t i = 0; i < found->edges.size(); ++i) {
          const auto& e = found->edges[i];
          out.matrix_[e.u * t + e.v] = found->colour[i];
          out.matrix_[e.v * t + e.u] = found->colour[i];
        }
        break;
      }
    }
  } else {
    std::uint64_t q = next_prime_with(t);
    bool have = false;
    for (int attempt = 0; attempt <= options.prime_retries; ++attempt) {
      const auto partition = sidon_partition(q);
      const std::uint64_t m = partition.m;
      // Pair sums of K_t cover 1..2t-3; keep only the classes they hit.
      std::vector<std::uint8_t> used(partition.classes.size(), 0);
      for (std::uint64_t s = 1; s <= 2 * t - 3 && s <= m; ++s) used[partition.class_of[s % m]] = 1;
      std::vector<Colour> renumber(used.size(), kNoColour);
      Colour next = 0;
      for (std::size_t c = 0; c < used.size(); ++c) {
        if (used[c]) renumber[c] = next++;
      }
      if (!have || next < out.classes_) {
        have = true;
        out.source_ = CompleteColouring::Source::sidon;
        out.prime_ = q;
        out.modulus_ = m;
        out.classes_ = next;
        out.residue_class_.resize(m);
        for (std::uint64_t r = 0; r < m; ++r) out.residue_class_[r] = renumber[partition.class_of[r]];
      }
      if (out.classes_ <= budget) break;
      do {
        ++q;
      } while (!is_prime(q));
    }
  }
  out.within_budget_ = out.classes_ <= budget;
  if (options.verify) verify_or_throw(out);
  return out;
}

}  // namespace c4free
