#include "toricskt/search.hpp"

#include "toricskt/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toricskt {

namespace {

constexpr std::int64_t kFastPathMaxBound = 10000;
constexpr int kFastPathMaxVars = 64;

bool fits_i64(const Int& v) {
  return v.fits_slong_p() != 0 && sizeof(long) == 8;
}

// State shared by both kernels: decode a flat index into x, filter canonical
// representatives, evaluate the form.
struct Box {
  int vars;
  std::int64_t bound;
  std::int64_t radix;  // 2*bound + 1
  unsigned long long total;

  Box(int vars_, std::int64_t bound_) : vars(vars_), bound(bound_), radix(2 * bound_ + 1) {
    unsigned long long t = 1;
    for (int i = 0; i < vars; ++i) {
      if (t > (1ull << 62) / static_cast<unsigned long long>(radix))
        throw BoundError("search box too large to enumerate");
      t *= static_cast<unsigned long long>(radix);
    }
    total = t;
  }

  void decode(unsigned long long idx, std::vector<std::int64_t>& x) const {
    for (int t = vars - 1; t >= 0; --t) {
      x[t] = static_cast<std::int64_t>(idx % radix) - bound;
      idx /= radix;
    }
  }

  static bool canonical(const std::vector<std::int64_t>& x) {
    std::int64_t g = 0;
    std::int64_t lead = 0;
    for (std::int64_t v : x) {
      if (lead == 0) lead = v;
      g = std::gcd(g, v < 0 ? -v : v);
    }
    return lead > 0 && g == 1;
  }
};

struct Evaluator {
  const GramForm& form;
  bool fast;
  std::vector<std::vector<std::int64_t>> gram64;
  // scratch
  mutable std::vector<__int128> acc128;
  mutable IntVec acc;

  Evaluator(const GramForm& f, bool fast_path) : form(f), fast(fast_path) {
    if (fast) {
      gram64.resize(form.gram.size());
      for (std::size_t t = 0; t < form.gram.size(); ++t) {
        gram64[t].resize(form.out_dim);
        for (int d = 0; d < form.out_dim; ++d) gram64[t][d] = form.gram[t][d].get_si();
      }
      acc128.resize(form.out_dim);
    } else {
      acc.resize(form.out_dim);
    }
  }

  bool is_square_zero(const std::vector<std::int64_t>& x) const {
    if (fast) {
      std::fill(acc128.begin(), acc128.end(), __int128{0});
      std::size_t pair = 0;
      for (int t = 0; t < form.vars; ++t) {
        for (int s = t; s < form.vars; ++s, ++pair) {
          std::int64_t c = (t == s) ? x[t] * x[t] : 2 * x[t] * x[s];
          if (c == 0) continue;
          const auto& g = gram64[pair];
          for (int d = 0; d < form.out_dim; ++d) acc128[d] += static_cast<__int128>(c) * g[d];
        }
      }
      for (int d = 0; d < form.out_dim; ++d)
        if (acc128[d] != 0) return false;
      return true;
    }
    std::fill(acc.begin(), acc.end(), Int(0));
    std::size_t pair = 0;
    for (int t = 0; t < form.vars; ++t) {
      for (int s = t; s < form.vars; ++s, ++pair) {
        std::int64_t c = (t == s) ? x[t] * x[t] : 2 * x[t] * x[s];
        if (c == 0) continue;
        const auto& g = form.gram[pair];
        for (int d = 0; d < form.out_dim; ++d) acc[d] += c * g[d];
      }
    }
    return std::all_of(acc.begin(), acc.end(), [](const Int& v) { return v == 0; });
  }
};

}  // namespace

bool GramForm::fits_int64() const {
  for (const auto& entry : gram)
    for (const Int& v : entry)
      if (!fits_i64(v)) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> enumerate_square_zero_serial(const GramForm& form,
                                                                    std::int64_t bound) {
  if (bound < 1) throw BoundError("bound must be >= 1");
  assert(static_cast<std::size_t>(form.vars) * (form.vars + 1) / 2 == form.gram.size());
  Box box(form.vars, bound);
  Evaluator eval(form, false);  // the reference stays in arbitrary precision

  std::vector<std::vector<std::int64_t>> hits;
  std::vector<std::int64_t> x(form.vars);
  for (unsigned long long idx = 0; idx < box.total; ++idx) {
    box.decode(idx, x);
    if (!Box::canonical(x)) continue;
    if (eval.is_square_zero(x)) hits.push_back(x);
  }
  return hits;
}

std::vector<std::vector<std::int64_t>> enumerate_square_zero_parallel(const GramForm& form,
                                                                      std::int64_t bound) {
  if (bound < 1) throw BoundError("bound must be >= 1");
  Box box(form.vars, bound);
  const bool fast =
      form.fits_int64() && bound <= kFastPathMaxBound && form.vars <= kFastPathMaxVars;

  int num_chunks = 1;
#ifdef _OPENMP
  num_chunks = std::max(1, omp_get_max_threads() * 8);
#endif
  if (static_cast<unsigned long long>(num_chunks) > box.total)
    num_chunks = static_cast<int>(box.total);
  std::vector<std::vector<std::vector<std::int64_t>>> chunk_hits(num_chunks);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int chunk = 0; chunk < num_chunks; ++chunk) {
    Evaluator eval(form, fast);
    std::vector<std::int64_t> x(form.vars);
    auto boundary = [&](int c) {
      return static_cast<unsigned long long>(static_cast<unsigned __int128>(box.total) * c /
                                             num_chunks);
    };
    unsigned long long begin = boundary(chunk);
    unsigned long long end = boundary(chunk + 1);
    for (unsigned long long idx = begin; idx < end; ++idx) {
      box.decode(idx, x);
      if (!Box::canonical(x)) continue;
      if (eval.is_square_zero(x)) chunk_hits[chunk].push_back(x);
    }
  }

  // Chunks are contiguous index ranges, so in-order concatenation preserves
  // the lexicographic output order for any thread count.
  std::vector<std::vector<std::int64_t>> hits;
  for (auto& c : chunk_hits)
    for (auto& x : c) hits.push_back(std::move(x));
  return hits;
}

}  // namespace toricskt
