#include "fiberlink/batch.hpp"

namespace fiberlink {

CorpusRecord evaluate(const FramedLink& fl) {
  CorpusRecord r;
  r.linking = linking_matrix(fl.diagram());
  r.seifert = seifert(fl.diagram());
  r.hopf = hopf_invariant(fl);
  r.obstruction = obstruction_vector(fl);
  r.parity = parity_identity_check(fl);
  r.submersion = hp_submersion_check(fl.diagram()).verdict;
  return r;
}

std::vector<CorpusRecord> evaluate_corpus_serial(std::span<const FramedLink> corpus) {
  std::vector<CorpusRecord> out;
  out.reserve(corpus.size());
  for (const auto& fl : corpus) out.push_back(evaluate(fl));
  return out;
}

std::vector<CorpusRecord> evaluate_corpus_parallel(std::span<const FramedLink> corpus) {
  return parallel_map(corpus, [](const FramedLink& fl) { return evaluate(fl); });
}

}  // namespace fiberlink
