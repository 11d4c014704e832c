#pragma once

#include <vector>

#include "laz/seqcore.hpp"

namespace laz {

// In-place unnormalized discrete Fourier transforms of arbitrary length.
// forward:  X[f] = sum_t a[t] exp(-2*pi*i*f*t/n)
// inverse:  x[t] = sum_f a[f] exp(+2*pi*i*f*t/n)      (no 1/n)
// Power-of-two lengths run radix-2 directly; everything else goes through
// Bluestein's chirp-z reduction to a power-of-two convolution. A Dft is
// immutable after construction and safe to share across threads.
class Dft {
 public:
  explicit Dft(int n);

  int size() const { return n_; }
  void forward(std::vector<cdouble>& a) const { transform(a, false); }
  void inverse(std::vector<cdouble>& a) const { transform(a, true); }

 private:
  void transform(std::vector<cdouble>& a, bool inv) const;
  void bluestein(std::vector<cdouble>& a, bool inv) const;

  int n_;
  int conv_len_ = 0;                  // power-of-two convolution length
  std::vector<cdouble> chirp_;        // exp(-i*pi*k^2/n)
  std::vector<cdouble> kernel_fwd_;   // FFT of the wrapped conjugate chirp
  std::vector<cdouble> kernel_inv_;
};

// n must be a power of two; in-place, unnormalized.
void fft_pow2(std::vector<cdouble>& a, bool inverse);

int next_pow2(int n);

// Symmetric-normalization transform pair: 1/sqrt(n) in both directions, so
// idft(dft(x)) == x and energy is preserved exactly.
std::vector<cdouble> dft(const std::vector<cdouble>& x);
std::vector<cdouble> idft(const std::vector<cdouble>& x);

}  // namespace laz
