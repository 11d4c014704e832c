#include "laz/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace laz {

int next_pow2(int n) {
  int m = 1;
  while (m < n) m <<= 1;
  return m;
}

void fft_pow2(std::vector<cdouble>& a, bool inverse) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft_pow2: length must be a power of two");

  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const cdouble wlen = std::polar(1.0, ang);
    for (size_t i = 0; i < n; i += len) {
      cdouble w{1.0, 0.0};
      for (size_t k = 0; k < len / 2; ++k) {
        const cdouble u = a[i + k];
        const cdouble v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

Dft::Dft(int n) : n_(n) {
  if (n <= 0) throw std::invalid_argument("Dft: length must be positive");
  if ((n & (n - 1)) == 0) return;  // radix-2 handles it directly

  conv_len_ = next_pow2(2 * n - 1);
  chirp_.resize(static_cast<size_t>(n));
  // exp(-i*pi*k^2/n); k^2 reduced mod 2n keeps the angle small and exact.
  for (long long k = 0; k < n; ++k) {
    const long long q = (k * k) % (2LL * n);
    chirp_[static_cast<size_t>(k)] =
        std::polar(1.0, -std::numbers::pi * static_cast<double>(q) / n);
  }

  auto build_kernel = [&](bool inv) {
    std::vector<cdouble> v(static_cast<size_t>(conv_len_), cdouble{0.0, 0.0});
    for (int k = 0; k < n; ++k) {
      const cdouble c = inv ? chirp_[static_cast<size_t>(k)] : std::conj(chirp_[static_cast<size_t>(k)]);
      v[static_cast<size_t>(k)] = c;
      if (k > 0) v[static_cast<size_t>(conv_len_ - k)] = c;
    }
    fft_pow2(v, false);
    return v;
  };
  kernel_fwd_ = build_kernel(false);
  kernel_inv_ = build_kernel(true);
}

void Dft::transform(std::vector<cdouble>& a, bool inv) const {
  if (static_cast<int>(a.size()) != n_)
    throw std::invalid_argument("Dft: input length mismatch");
  if (conv_len_ == 0) {
    fft_pow2(a, inv);
    return;
  }
  bluestein(a, inv);
}

void Dft::bluestein(std::vector<cdouble>& a, bool inv) const {
  const auto& kernel = inv ? kernel_inv_ : kernel_fwd_;
  std::vector<cdouble> buf(static_cast<size_t>(conv_len_), cdouble{0.0, 0.0});
  for (int k = 0; k < n_; ++k) {
    const cdouble c = inv ? std::conj(chirp_[static_cast<size_t>(k)]) : chirp_[static_cast<size_t>(k)];
    buf[static_cast<size_t>(k)] = a[static_cast<size_t>(k)] * c;
  }
  fft_pow2(buf, false);
  for (int k = 0; k < conv_len_; ++k) buf[static_cast<size_t>(k)] *= kernel[static_cast<size_t>(k)];
  fft_pow2(buf, true);
  const double scale = 1.0 / conv_len_;
  for (int k = 0; k < n_; ++k) {
    const cdouble c = inv ? std::conj(chirp_[static_cast<size_t>(k)]) : chirp_[static_cast<size_t>(k)];
    a[static_cast<size_t>(k)] = buf[static_cast<size_t>(k)] * scale * c;
  }
}

std::vector<cdouble> dft(const std::vector<cdouble>& x) {
  std::vector<cdouble> a = x;
  Dft plan(static_cast<int>(a.size()));
  plan.forward(a);
  const double s = 1.0 / std::sqrt(static_cast<double>(a.size()));
  for (cdouble& v : a) v *= s;
  return a;
}

std::vector<cdouble> idft(const std::vector<cdouble>& x) {
  std::vector<cdouble> a = x;
  Dft plan(static_cast<int>(a.size()));
  plan.inverse(a);
  const double s = 1.0 / std::sqrt(static_cast<double>(a.size()));
  for (cdouble& v : a) v *= s;
  return a;
}

}  // namespace laz
