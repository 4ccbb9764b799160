#include "hitchin/calculus.hpp"

#include <numbers>
#include <random>
#include <stdexcept>

#include "hitchin/parallel.hpp"

namespace hitchin {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Box-Muller over mt19937_64 bits; avoids the implementation-defined
// std::normal_distribution so one toolchain gives one bit pattern.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}
  double next() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_ = true;
    return r * std::cos(t);
  }
  cplx next_cplx() {
    const double re = next();
    const double im = next();
    return cplx(re, im);
  }

 private:
  double uniform01() {
    // in (0, 1], so log() is safe
    return (double(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }
  std::mt19937_64 rng_;
  bool have_ = false;
  double spare_ = 0.0;
};

}  // namespace

MatrixField random_field(std::uint64_t seed, const Grid& g, int cutoff, RandomFlag flag) {
  g.validate();
  if (cutoff < 0 || cutoff > g.N / 4)
    throw std::invalid_argument("random_field: cutoff must satisfy 0 <= cutoff <= N/4");

  std::uint64_t mix = seed;
  Gaussian gen(splitmix64(mix));

  // Draw coefficients in a fixed (ky, kx, row, col) order, then synthesize
  // per site; the mode sum per site runs in the same fixed order for every
  // thread count.
  struct Mode {
    int kx, ky;
    std::vector<cplx> coeff;
  };
  std::vector<Mode> modes;
  for (int ky = -cutoff; ky <= cutoff; ++ky)
    for (int kx = -cutoff; kx <= cutoff; ++kx) {
      Mode m{kx, ky, std::vector<cplx>(size_t(g.n) * g.n)};
      for (auto& c : m.coeff) c = gen.next_cplx();
      modes.push_back(std::move(m));
    }

  MatrixField sample(g);
  const int len = sample.mat_len();
  parallel_for(0, sample.site_count(), [&](int s) {
    const int iy = s / g.N, ix = s % g.N;
    cplx* out = sample.site(s);
    for (const Mode& m : modes) {
      const double phase = 2.0 * std::numbers::pi *
                           (double(m.kx) * ix / g.N + double(m.ky) * iy / g.N);
      const cplx e(std::cos(phase), std::sin(phase));
      for (int i = 0; i < len; ++i) out[i] += m.coeff[i] * e;
    }
  });

  switch (flag) {
    case RandomFlag::general:
      return sample;
    case RandomFlag::anti_hermitian: {
      MatrixField adj = site_adjoint(sample);
      MatrixField out(g);
      parallel_for(0, sample.site_count(), [&](int s) {
        for (int i = 0; i < len; ++i) out.site(s)[i] = 0.5 * (sample.site(s)[i] - adj.site(s)[i]);
      });
      return out;
    }
    case RandomFlag::unitary: {
      MatrixField adj = site_adjoint(sample);
      MatrixField ah(g);
      parallel_for(0, sample.site_count(), [&](int s) {
        for (int i = 0; i < len; ++i) ah.site(s)[i] = 0.5 * (sample.site(s)[i] - adj.site(s)[i]);
      });
      return site_expm(ah);
    }
  }
  throw std::logic_error("random_field: unknown flag");
}

}  // namespace hitchin
