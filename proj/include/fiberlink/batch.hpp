#pragma once

#include <cstdint>
#include <exception>
#include <span>
#include <vector>

#include "fiberlink/invariants.hpp"
#include "fiberlink/obstruction.hpp"
#include "fiberlink/realizability.hpp"
#include "fiberlink/scene.hpp"

namespace fiberlink {

/// Everything computed for one framed link of a corpus.
struct CorpusRecord {
  LinkingMatrix linking{0};
  SeifertData seifert;
  std::int64_t hopf = 0;
  ObstructionVector obstruction;
  ParityCheck parity = ParityCheck::NotApplicable;
  Verdict submersion = Verdict::NotApplicable;

  friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

CorpusRecord evaluate(const FramedLink& fl);

std::vector<CorpusRecord> evaluate_corpus_serial(std::span<const FramedLink> corpus);
std::vector<CorpusRecord> evaluate_corpus_parallel(std::span<const FramedLink> corpus);

/// out[i] = fn(in[i]) over an OpenMP loop. The first exception thrown by fn
/// is rethrown after the loop.
template <class In, class Fn>
auto parallel_map(std::span<const In> in, Fn fn) {
  using Out = decltype(fn(in[0]));
  std::vector<Out> out(in.size());
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[i] = fn(in[i]);
    } catch (...) {
#pragma omp critical(fiberlink_parallel_map)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace fiberlink
