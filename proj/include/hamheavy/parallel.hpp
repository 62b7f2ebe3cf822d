#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hamheavy {

inline unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

/// out[i] = f(in[i]) computed on up to `threads` workers; result order is
/// the input order, so merged output does not depend on scheduling.
template <class In, class F>
auto parallel_map(const std::vector<In>& in, F&& f, unsigned threads) {
  using Out = decltype(f(in.front()));
  std::vector<Out> out(in.size());
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(in.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < in.size(); i += threads) out[i] = f(in[i]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace hamheavy
