#include "core/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace pb {

ChannelParams make_channel(double ebn0_db, int K, int N) {
  if (K < 1 || N < 1) throw std::invalid_argument("make_channel: bad K or N");
  ChannelParams ch;
  ch.ebn0_db = ebn0_db;
  const double rate = static_cast<double>(K) / static_cast<double>(N);
  ch.sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
  return ch;
}

Llrs transmit(const Bits& x, const ChannelParams& ch, std::mt19937_64& rng) {
  std::normal_distribution<double> noise(0.0, std::sqrt(ch.sigma2));
  Llrs llrs(x.size());
  const double scale = 2.0 / ch.sigma2;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double s = x[i] ? -1.0 : 1.0;
    llrs[i] = scale * (s + noise(rng));
  }
  return llrs;
}

Llrs transmit_noiseless(const Bits& x) {
  Llrs llrs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    llrs[i] = x[i] ? -kLlrSaturation : kLlrSaturation;
  }
  return llrs;
}

Bits random_bits(int n, std::mt19937_64& rng) {
  Bits out(n);
  std::uniform_int_distribution<int> bit(0, 1);
  for (auto& b : out) b = static_cast<std::uint8_t>(bit(rng));
  return out;
}

}  // namespace pb
