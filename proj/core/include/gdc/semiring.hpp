#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gdc {

// An element of a grading semiring. The component vector is opaque; its
// meaning belongs to the semiring that produced it (one entry for the
// naturals, two for pairs and for rationals stored as num/den).
struct Grade {
  std::vector<long long> v;

  static Grade nat(long long n) { return Grade{{n}}; }
  friend bool operator==(const Grade&, const Grade&) = default;
  friend bool operator<(const Grade& a, const Grade& b) { return a.v < b.v; }
};

class GradeSemiring {
public:
  using Ptr = std::shared_ptr<const GradeSemiring>;
  virtual ~GradeSemiring() = default;

  virtual std::string name() const = 0;
  virtual Grade zero() const = 0;
  virtual Grade one() const = 0;
  virtual Grade add(const Grade&, const Grade&) const = 0;
  virtual Grade mul(const Grade&, const Grade&) const = 0;

  // Whether the semiring is declared finite-additive-split. splittings()
  // refuses to run without the declaration; check_fas() is the bounded audit
  // of the declaration itself.
  virtual bool fas_declared() const = 0;

  // All pairs (s, t) with s + t = r, sorted by first component. Finite for a
  // finite-additive-split semiring.
  virtual std::vector<std::pair<Grade, Grade>> splittings(const Grade& r) const = 0;

  // Deterministic, sorted enumeration of elements "up to" a size bound.
  virtual std::vector<Grade> enumerate(int bound) const = 0;

  virtual std::string show(const Grade&) const = 0;
  virtual std::optional<Grade> parse(const std::string&) const = 0;
};

GradeSemiring::Ptr nat_semiring();
GradeSemiring::Ptr nat2_semiring();
GradeSemiring::Ptr nonneg_rational_semiring();  // scalar semiring; not f.a.s.
GradeSemiring::Ptr boolean_semiring();          // 1+1 = 1; audit fixture

// CLI/config keys: "nat", "nat2", "rat-nonneg", "bool". Null when unknown.
GradeSemiring::Ptr semiring_by_key(const std::string& key);

// Canonical image of a natural number: 1 + 1 + ... + 1 (n times).
Grade nat_image(long long n, const GradeSemiring& sr);

// As a convenience for the models, which grade over the naturals only.
long long grade_to_nat(const Grade& g);

struct FasCheckResult {
  bool pass = true;
  int failed_condition = 0;  // 1, 2 or 3 when !pass
  std::string detail;
};

// Bounded audit of the three finite-additive-split conditions:
//   (1) splitting sets are finite (checked as stability of the splitting set
//       when the enumeration bound is doubled),
//   (2) 0 and 1 only split trivially,
//   (3) addition is cancellative.
// A failed condition is a result, not an error.
FasCheckResult check_fas(const GradeSemiring& sr, int bound);

// Bounded audit of the semiring laws themselves (associativity, units,
// commutativity of +, distributivity, annihilation).
FasCheckResult check_semiring_axioms(const GradeSemiring& sr, int bound);

}  // namespace gdc
