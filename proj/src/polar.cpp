#include "polarfade/polar.hpp"

#include <stdexcept>
#include <string>

namespace polarfade {

PolarCode::PolarCode(int n, std::vector<int> info_set, double design_snr, double design_eps)
    : n_(n), info_set_(std::move(info_set)), design_snr_(design_snr), design_eps_(design_eps) {
  if (n < 0 || n > 30) throw std::invalid_argument("PolarCode: n out of range");
  const int N = 1 << n;
  if (static_cast<int>(info_set_.size()) > N) {
    throw std::invalid_argument("PolarCode: more information positions than channel uses");
  }
  if (design_snr_ < 0.0) throw std::invalid_argument("PolarCode: design SNR must be nonnegative");
  if (design_eps_ < 0.0 || design_eps_ > 1.0) {
    throw std::invalid_argument("PolarCode: design eps must lie in [0,1]");
  }
  std::sort(info_set_.begin(), info_set_.end());
  frozen_.assign(static_cast<std::size_t>(N), 1);
  int prev = -1;
  for (int idx : info_set_) {
    if (idx < 0 || idx >= N) throw std::invalid_argument("PolarCode: info-set index out of range");
    if (idx == prev) throw std::invalid_argument("PolarCode: duplicate info-set index");
    prev = idx;
    frozen_[static_cast<std::size_t>(idx)] = 0;
  }
}

BitVector transform(BitVector u) {
  const std::size_t N = u.size();
  if (!is_power_of_two(N)) {
    throw std::invalid_argument("transform: length must be a power of two, got " +
                                std::to_string(N));
  }
  for (std::size_t len = 1; len < N; len <<= 1) {
    for (std::size_t blk = 0; blk < N; blk += 2 * len) {
      for (std::size_t i = 0; i < len; ++i) {
        u[blk + i] ^= u[blk + i + len];
      }
    }
  }
  return u;
}

BitVector encode(const BitVector& message, const PolarCode& code) {
  if (static_cast<int>(message.size()) != code.dimension()) {
    throw std::invalid_argument("encode: message length " + std::to_string(message.size()) +
                                " does not match code dimension " +
                                std::to_string(code.dimension()));
  }
  BitVector u(static_cast<std::size_t>(code.block_length()), 0);
  const auto& info = code.info_set();
  for (std::size_t j = 0; j < info.size(); ++j) {
    u[static_cast<std::size_t>(info[j])] = message[j] & 1u;
  }
  return transform(std::move(u));
}

BitVector sc_decode(const SoftVector& observation, const PolarCode& code) {
  auto standard = [&code](std::size_t i, double llr) -> int {
    if (code.is_frozen(static_cast<int>(i))) return 0;
    return llr < 0.0 ? 1 : 0;
  };
  const BitVector u = sc_decode_full(observation, code, standard);
  BitVector message(static_cast<std::size_t>(code.dimension()));
  const auto& info = code.info_set();
  for (std::size_t j = 0; j < info.size(); ++j) {
    message[j] = u[static_cast<std::size_t>(info[j])];
  }
  return message;
}

}  // namespace polarfade
