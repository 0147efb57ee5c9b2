#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace needlet::fft {

namespace {

struct BufferDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex, BufferDeleter>;

Buffer allocate(std::size_t n) {
  Buffer b(fftw_alloc_complex(n));
  if (!b) throw std::bad_alloc();
  return b;
}

// FFTW planning is not thread-safe; execution with the new-array interface
// is. Plans are created once per (size, sign) with FFTW_ESTIMATE so the
// chosen algorithm (and therefore every rounding) is independent of timing.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, Sign sign) {
    const std::lock_guard<std::mutex> lock(mutex_);
    const auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    Buffer scratch = allocate(n);
    const int dir = sign == Sign::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), scratch.get(), scratch.get(), dir,
                                      FFTW_ESTIMATE);
    if (plan == nullptr) throw std::runtime_error("FFTW planning failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, Sign>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void transform(std::vector<std::complex<double>>& data, Sign sign) {
  const std::size_t n = data.size();
  if (n == 0) return;
  static_assert(sizeof(std::complex<double>) == sizeof(fftw_complex));
  fftw_plan plan = cache().get(n, sign);
  Buffer buf = allocate(n);
  std::memcpy(buf.get(), data.data(), n * sizeof(fftw_complex));
  fftw_execute_dft(plan, buf.get(), buf.get());
  std::memcpy(static_cast<void*>(data.data()), buf.get(), n * sizeof(fftw_complex));
}

std::vector<double> convolve(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  std::size_t n = 1;
  while (n < out_len) n <<= 1;

  std::vector<std::complex<double>> fa(n), fb(n);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  transform(fa, Sign::Forward);
  transform(fb, Sign::Forward);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  transform(fa, Sign::Backward);

  std::vector<double> out(out_len);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = fa[i].real() * scale;
  return out;
}

}  // namespace needlet::fft
