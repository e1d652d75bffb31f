//
// radflux: computational radiometry on the unit sphere.
//
// Copyright 2026 The radflux authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace radflux {

/// Thread cap: RADFLUX_THREADS if set, otherwise the hardware default.
std::size_t thread_cap();

/// Deterministic map-reduce: sums term(i) for i in [0, n).
///
/// The index range is split into fixed-size chunks; each chunk is reduced
/// in index order and the chunk partials are combined in chunk order. The
/// result is therefore bit-identical for any thread count, including 1.
template <typename T, typename Term>
T chunked_sum(std::size_t n, Term&& term) {
  constexpr std::size_t kChunk = 2048;
  if (n == 0) return T{};

  const std::size_t n_chunks = (n + kChunk - 1) / kChunk;
  std::vector<T> partial(n_chunks, T{});
  std::vector<std::exception_ptr> errors(n_chunks);

  auto run_chunk = [&](std::size_t c) {
    try {
      T acc{};
      const std::size_t lo = c * kChunk;
      const std::size_t hi = std::min(n, lo + kChunk);
      for (std::size_t i = lo; i < hi; ++i) acc += term(i);
      partial[c] = acc;
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };

  const std::size_t workers = std::min(thread_cap(), n_chunks);
  if (workers <= 1 || n_chunks == 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (std::size_t c = w; c < n_chunks; c += workers) run_chunk(c);
      });
    }
    for (auto& t : pool) t.join();
  }

  // First error in chunk order wins, so failures are deterministic too.
  for (std::size_t c = 0; c < n_chunks; ++c) {
    if (errors[c]) std::rethrow_exception(errors[c]);
  }

  T total{};
  for (std::size_t c = 0; c < n_chunks; ++c) total += partial[c];
  return total;
}

}  // namespace radflux
