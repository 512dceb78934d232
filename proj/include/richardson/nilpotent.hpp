#pragma once

#include "richardson/algebra.hpp"
#include "richardson/diagram.hpp"

#include <vector>

namespace richardson {

class Partition {
 public:
  Partition() = default;
  // Sorts the parts non-increasing; throws NonPositiveBlock on parts <= 0.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  int length() const { return static_cast<int>(parts_.size()); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition dual_partition(const Partition& p);

// sl: +E_ij. sp: +E_ij for i <= n, else -E_ij. so: +E_ij for i + j <= N,
// else -E_ij (labels 1-based); lines with i + j = N + 1 are rejected in so.
ExactMatrix realize(const LineDiagram& d, const ParabolicSpec& spec);

Partition jordan_partition(const ExactMatrix& m);

enum class CentralizerConvention { Default, GeneralLinear };

// For SpecialLinear the default is the sl value (gl value minus one).
long long centralizer_dimension_formula(const Partition& p, const AlgebraKind& kind,
                                        CentralizerConvention convention = CentralizerConvention::Default);

long long centralizer_dimension_direct(const ExactMatrix& m, const AlgebraKind& kind);

}  // namespace richardson
