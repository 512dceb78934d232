#include "richardson/classify.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace richardson {

std::string Classification::label() const {
  switch (tag) {
    case SimpleCase::SL: return "SL";
    case SimpleCase::Case1: return "SimpleCase1";
    case SimpleCase::Case2: return "SimpleCase2";
    case SimpleCase::Case3: return "SimpleCase3";
    case SimpleCase::Case4: return "SimpleCase4";
    case SimpleCase::NotSimple: return "NotSimple";
  }
  return "NotSimple";
}

namespace {

Classification not_simple(const std::string& why) { return {SimpleCase::NotSimple, why}; }

// First value that occurs more than once among those accepted by keep.
template <typename Pred>
int repeated(const std::vector<int>& half, Pred keep) {
  std::map<int, int> count;
  for (int x : half)
    if (keep(x) && ++count[x] > 1) return x;
  return 0;
}

Classification classify_orthogonal_b(const std::vector<int>& half, int c) {
  std::vector<int> evens, odds;
  for (int x : half) (x % 2 == 0 ? evens : odds).push_back(x);
  int max_even = evens.empty() ? 0 : *std::max_element(evens.begin(), evens.end());
  for (int x : odds)
    if (x != c && x < max_even)
      return not_simple("even block " + std::to_string(max_even) + " exceeds odd block " +
                        std::to_string(x));
  if (int x = repeated(half, [&](int v) { return v % 2 == 0 && v > c; }))
    return not_simple("even block " + std::to_string(x) + " above the center repeats");
  if (c % 2 == 0) {
    for (int x : odds)
      if (x < c)
        return not_simple("odd block " + std::to_string(x) + " below an even center");
    if (int x = repeated(half, [](int v) { return v % 2 == 1; }))
      return not_simple("odd block " + std::to_string(x) + " repeats with an even center");
  }
  return {SimpleCase::Case4, ""};
}

}  // namespace

Classification classify_simple(const ParabolicSpec& spec) {
  const AlgebraKind& kind = spec.kind();
  if (kind.is_special_linear()) return {SimpleCase::SL, ""};
  std::vector<int> half(spec.blocks().begin(), spec.blocks().begin() + spec.half());
  if (spec.is_type_a()) {
    if (kind.is_symplectic()) return {SimpleCase::Case1, ""};
    if (int x = repeated(half, [](int v) { return v % 2 == 1; }))
      return not_simple("odd block " + std::to_string(x) + " repeats within a half");
    return {SimpleCase::Case2, ""};
  }
  int c = spec.center();
  if (kind.is_symplectic()) {
    if (int x = repeated(half, [c](int v) { return v % 2 == 1 && v < c; }))
      return not_simple("odd block " + std::to_string(x) + " below the center repeats");
    return {SimpleCase::Case3, ""};
  }
  return classify_orthogonal_b(half, c);
}

}  // namespace richardson
