#pragma once

// Deterministic thread-parallel fold over an index range.

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace pathlab {

/// Folds body(acc, task) over tasks 0..count-1. Worker w owns tasks
/// w, w + jobs, w + 2 jobs, ...; partial results are merged in worker order,
/// so the result is independent of scheduling whenever merge is
/// associative and commutative. jobs <= 1 runs inline.
template <class Acc, class MakeAcc, class Body, class Merge>
Acc parallel_fold(int count, int jobs, MakeAcc make_acc, Body body, Merge merge) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    Acc acc = make_acc();
    for (int t = 0; t < count; ++t) body(acc, t);
    return acc;
  }
  std::vector<Acc> partial;
  partial.reserve(static_cast<size_t>(jobs));
  for (int w = 0; w < jobs; ++w) partial.push_back(make_acc());
  std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
  {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (int t = w; t < count; t += jobs) body(partial[static_cast<size_t>(w)], t);
        } catch (...) {
          errors[static_cast<size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& th : workers) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Acc acc = std::move(partial[0]);
  for (int w = 1; w < jobs; ++w) merge(acc, std::move(partial[static_cast<size_t>(w)]));
  return acc;
}

}  // namespace pathlab
