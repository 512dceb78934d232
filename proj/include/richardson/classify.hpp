#pragma once

#include "richardson/algebra.hpp"

#include <string>

namespace richardson {

enum class SimpleCase { SL, Case1, Case2, Case3, Case4, NotSimple };

struct Classification {
  SimpleCase tag;
  std::string reason;  // empty unless NotSimple

  bool simple() const { return tag != SimpleCase::NotSimple; }
  std::string label() const;  // "SL", "SimpleCase1".."SimpleCase4", "NotSimple"
};

// Multiplicities are counted within one half (d_1..d_r) of the block vector.
Classification classify_simple(const ParabolicSpec& spec);

}  // namespace richardson
