// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fiberlink/batch.hpp"
#include "fiberlink/cli.hpp"
#include "fiberlink/invariants.hpp"
#include "fiberlink/obstruction.hpp"
#include "fiberlink/realizability.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace fiberlink;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), secs,
              o.detail.c_str());
  std::fflush(stdout);
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

LabeledScene scene(const std::string& text) { return labeled_scene(parse_file(text)); }

const char* kHopf = "X 1 3 2 4 / X 3 1 4 2";

std::vector<FramedLink> make_corpus(Rng& rng, int n) {
  std::vector<FramedLink> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(null_cobordant_framing(gen::diagram(rng, 50, 60), rng));
  return out;
}

bool same_off_diagonal(const LinkingMatrix& a, const LinkingMatrix& b) {
  if (a.size() != b.size()) return false;
  for (int i = 1; i <= a.size(); ++i) {
    for (int j = 1; j <= a.size(); ++j) {
      if (i != j && a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

int cli(std::vector<std::string> args, const std::string& input, std::string* out = nullptr) {
  std::istringstream in(input);
  std::ostringstream o, e;
  const int code = run_cli(args, in, o, e);
  if (out) *out = o.str();
  return code;
}

std::string file_text(const FramedLink& fl) {
  DiagramFile f{fl.diagram(), {}, {}, {}};
  for (ComponentId c = 1; c <= fl.component_count(); ++c) f.framings[c] = fl.framing(c);
  return serialize(f);
}

}  // namespace

int main() {
  report(1, "hopf fiber pair with framings (1,1), one component reversed", [] {
    const auto t0 = Clock::now();
    const FramedLink fl(reverse_component(parse_diagram(kHopf), 2), {1, 1});
    const auto h = hopf_invariant(fl);
    const auto a = obstruction_vector(fl);
    const auto split = split_possible(fl, Target::Plane);
    const auto r = realize_singular(
        scene("X 1 3 2 4 / X 4 2 3 1 / U 5 / F 1 1 / F 2 1 / R 1 fiber / R 2 fiber / R 3 singular"),
        Target::Plane);
    const double secs = since(t0);
    const bool ok = h == 0 && a.a == std::vector<int>{0, 0} && split.possible &&
                    r.verdict == Verdict::Realizable && secs < 1.0;
    return Outcome{ok, "h=" + std::to_string(h) + " a=(" + std::to_string(a.a[0]) + "," +
                           std::to_string(a.a[1]) + ") split=" + (split.possible ? "yes" : "no") +
                           " verdict=" + to_string(r.verdict)};
  });

  report(2, "0-framed unknot: obstruction and singular-set choices", [] {
    const FramedLink fl(parse_diagram("U 1"), {0});
    const auto a = obstruction_vector(fl);
    const auto meridian =
        realize_singular(scene("X 1 4 2 3 / X 4 1 3 2 / F 1 0 / R 1 fiber / R 2 singular"), Target::Plane);
    const auto split = realize_singular(scene("U 1 / U 2 / F 1 0 / R 1 fiber / R 2 singular"), Target::Plane);
    const bool ok = a.a == std::vector<int>{1} && meridian.verdict == Verdict::Realizable &&
                    split.verdict == Verdict::NotRealizable &&
                    split.mismatches == std::vector<ComponentId>{1};
    return Outcome{ok, "a=(" + std::to_string(a.a[0]) + ") meridian=" + to_string(meridian.verdict) +
                           " split=" + to_string(split.verdict)};
  });

  report(3, "submersion fibers: hopf, unknot, 3-chain", [] {
    const LinkDiagram hopf = parse_diagram(kHopf);
    const auto h = hp_submersion_check(hopf);
    const auto u = hp_submersion_check(parse_diagram("U 1"));
    const auto c = hp_submersion_check(add_meridian(hopf, hopf.component_arcs(2).front(), Sign::Positive));
    const bool ok = h.verdict == Verdict::Realizable && u.verdict == Verdict::NotRealizable &&
                    c.verdict == Verdict::NotRealizable && c.failing == std::vector<ComponentId>{2};
    return Outcome{ok, "hopf=" + to_string(h.verdict) + " unknot=" + to_string(u.verdict) +
                           " chain=" + to_string(c.verdict)};
  });

  Rng rng(20261016);
  std::vector<FramedLink> corpus;
  std::vector<CorpusRecord> records;

  report(4, "parity identity over 1000 random null-cobordant links", [&] {
    const auto t0 = Clock::now();
    corpus = make_corpus(rng, 1000);
    records = evaluate_corpus_parallel(corpus);
    int holds = 0;
    std::size_t max_cross = 0;
    std::size_t total_cross = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (records[i].hopf == 0 && records[i].parity == ParityCheck::Holds) ++holds;
      max_cross = std::max(max_cross, corpus[i].diagram().crossing_count());
      total_cross += corpus[i].diagram().crossing_count();
    }
    const double secs = since(t0);
    const bool ok = holds == 1000 && max_cross <= 60 && secs < 30.0;
    return Outcome{ok, std::to_string(holds) + "/1000 hold, crossings mean " +
                           std::to_string(total_cross / 1000) + " max " + std::to_string(max_cross)};
  });

  report(5, "seifert euler characteristic parity over the corpus", [&] {
    int holds = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const int n = corpus[i].component_count();
      const auto& s = records[i].seifert;
      if (s.euler_characteristic == s.circle_count - s.crossing_count &&
          ((s.euler_characteristic - n) % 2 + 2) % 2 == 0) {
        ++holds;
      }
    }
    return Outcome{holds == static_cast<int>(corpus.size()) && !corpus.empty(),
                   std::to_string(holds) + "/" + std::to_string(corpus.size())};
  });

  report(6, "invariance under random moves and component reorderings (500 trials)", [&] {
    int same = 0;
    const int trials = 500;
    for (int t = 0; t < trials; ++t) {
      const LinkDiagram d = gen::diagram(rng, 50, 60);
      const LabeledScene sc = gen::scene(d, rng);
      const FramedLink fl = null_cobordant_framing(d, rng);
      const auto lk = linking_matrix(d);
      const auto a = obstruction_vector(fl);
      const auto v_real = realize_singular(sc, Target::Plane).verdict;
      const auto v_split = split_possible(fl, Target::Plane).possible;
      const auto v_hp = hp_submersion_check(d).verdict;

      const LinkDiagram moved = scramble(d, rng, 1 + static_cast<int>(rng() % 50), 60);
      const FramedLink fl_m(moved, fl.framings());
      bool ok = same_off_diagonal(lk, linking_matrix(moved)) && obstruction_vector(fl_m) == a &&
                realize_singular(LabeledScene(moved, sc.to_file().roles, sc.to_file().framings),
                                 Target::Plane)
                        .verdict == v_real &&
                split_possible(fl_m, Target::Plane).possible == v_split &&
                hp_submersion_check(moved).verdict == v_hp;

      const auto perm = gen::random_permutation(d.component_count(), rng);
      const LinkDiagram p = permute_components(d, perm);
      const auto lk_p = linking_matrix(p);
      std::map<ComponentId, Role> roles;
      std::map<ComponentId, Framing> fr;
      std::vector<Framing> fp;
      for (int k = 0; k < d.component_count(); ++k) {
        roles[k + 1] = sc.role(perm[k]);
        if (sc.role(perm[k]) == Role::Fiber) fr[k + 1] = sc.framing(perm[k]);
        fp.push_back(fl.framing(perm[k]));
        for (int j = 0; j < d.component_count(); ++j) {
          if (j != k && lk_p(k + 1, j + 1) != lk(perm[k], perm[j])) ok = false;
        }
      }
      const FramedLink fl_p(p, fp);
      for (int k = 0; k < d.component_count(); ++k) {
        if (obstruction_vector(fl_p).at(k + 1) != a.at(perm[k])) ok = false;
      }
      ok = ok && realize_singular(LabeledScene(p, roles, fr), Target::Plane).verdict == v_real &&
           split_possible(fl_p, Target::Plane).possible == v_split && hp_submersion_check(p).verdict == v_hp;
      if (ok) ++same;
    }
    return Outcome{same == trials, std::to_string(same) + "/" + std::to_string(trials)};
  });

  report(7, "witness output accepted by realize (200 random links)", [&] {
    int ok = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
      const FramedLink fl = null_cobordant_framing(gen::diagram(rng, 50, 60), rng);
      std::string witness;
      if (cli({"witness", "-"}, file_text(fl), &witness) != exit_code::kPositive) continue;
      if (cli({"realize", "-"}, witness) == exit_code::kPositive) ++ok;
    }
    return Outcome{ok == trials, std::to_string(ok) + "/" + std::to_string(trials)};
  });

  report(8, "linking numbers match the over-crossing oracle on the corpus", [&] {
    int agree = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& lk = records[i].linking;
      const auto ref = oracle::over_crossing_linking(corpus[i].diagram().pd());
      bool same = true;
      for (int a = 1; a <= lk.size(); ++a) {
        for (int b = 1; b <= lk.size(); ++b) {
          if (a != b && lk(a, b) != ref[a][b]) same = false;
        }
      }
      if (same) ++agree;
    }
    return Outcome{agree == static_cast<int>(corpus.size()) && !corpus.empty(),
                   std::to_string(agree) + "/" + std::to_string(corpus.size())};
  });

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
