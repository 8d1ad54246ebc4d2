#ifndef TPV_SRC_SAMPLING_HPP
#define TPV_SRC_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace tpv::detail {

// mt19937_64 is fully specified by the standard; the distributions are not,
// so bounded draws use a plain reduction to keep streams portable.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tpv::detail

#endif  // TPV_SRC_SAMPLING_HPP
