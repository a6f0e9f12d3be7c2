#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orlicz/algebra.hpp"

namespace orlicz {

enum class FiltrationKind { dyadic, matrix, tensor };

// One conditional expectation of the family: keeps the first n levels of the first factor
// and the first m levels of the second (m = 0 for singly indexed filtrations).
struct FiltrationLevel {
  int n = 0;
  int m = 0;
};

// Algebras are modelled on 2^Q basis states split into Q binary registers ("qubits"):
// classical registers carry the commutative dyadic structure, quantum ones a full matrix
// factor. Classical registers always come first, so the algebra is block diagonal.
class Filtration {
 public:
  static Filtration dyadic(int N);
  static Filtration matrix(int N);
  static Filtration tensor(const Filtration& first, const Filtration& second);

  FiltrationKind kind() const { return kind_; }
  bool doubly_indexed() const { return kind_ == FiltrationKind::tensor; }
  // factor kinds; second is meaningful only for tensor filtrations
  FiltrationKind first_kind() const { return first_kind_; }
  FiltrationKind second_kind() const { return second_kind_; }
  int depth_first() const { return depth_[0]; }
  int depth_second() const { return depth_[1]; }
  const AlgebraPtr& algebra() const { return algebra_; }
  int classical_registers() const { return classical_; }
  int quantum_registers() const { return quantum_; }
  std::string label() const;

  // all levels: n = 0..N (and m = 0..M for tensor), n-major
  const std::vector<FiltrationLevel>& levels() const { return levels_; }

  Element expect(const Element& x, const FiltrationLevel& level) const;
  Element expect(const Element& x, int n) const { return expect(x, FiltrationLevel{n, 0}); }
  Element expect(const Element& x, int n, int m) const { return expect(x, FiltrationLevel{n, m}); }

  // register positions (0 = most significant bit of the basis index) for factor f in {0, 1}
  int factor_offset(int f) const { return offset_[f]; }

 private:
  Filtration() = default;
  void build_algebra();
  void check_level(const FiltrationLevel& level) const;

  FiltrationKind kind_ = FiltrationKind::dyadic;
  FiltrationKind first_kind_ = FiltrationKind::dyadic;
  FiltrationKind second_kind_ = FiltrationKind::dyadic;
  int depth_[2] = {0, 0};
  int offset_[2] = {0, 0};
  int classical_ = 0;
  int quantum_ = 0;
  AlgebraPtr algebra_;
  std::vector<FiltrationLevel> levels_;
};

struct FiltrationCheck {
  int trials = 0;
  double unital_error = 0.0;
  double trace_error = 0.0;
  double positivity_min = 0.0;  // smallest eigenvalue of E(x) over PSD inputs
  double tower_error = 0.0;
  bool passed = false;
};

// Unital, trace preserving, positive and tower property on random inputs.
// Matrix filtrations run it with kConstructionTrials when built.
inline constexpr int kConstructionTrials = 100;
FiltrationCheck verify_filtration(const Filtration& f, std::uint64_t seed, int trials);

}  // namespace orlicz
