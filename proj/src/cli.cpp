#include "fiberlink/cli.hpp"

#include <openssl/sha.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "fiberlink/batch.hpp"
#include "fiberlink/invariants.hpp"
#include "fiberlink/obstruction.hpp"
#include "fiberlink/realizability.hpp"
#include "fiberlink/scene.hpp"

namespace fiberlink {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Outcome {
  int code = exit_code::kPositive;
  json result = json::object();
  std::string text;  // human-readable body
  bool raw = false;  // text is a file to be printed verbatim (witness)
};

struct Report {
  std::string command;
  std::optional<std::string> digest;
  Outcome outcome;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), md);
  std::ostringstream os;
  for (unsigned char b : md) os << std::hex << std::setw(2) << std::setfill('0') << int(b);
  return os.str();
}

DiagramFile canonical_file(DiagramFile f) {
  f.diagram = canonical(f.diagram);
  return f;
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

template <class Int>
std::vector<int> ints(const std::vector<Int>& v) {
  return {v.begin(), v.end()};
}

json matrix_json(const LinkingMatrix& lk) {
  json rows = json::array();
  for (int i = 1; i <= lk.size(); ++i) {
    json row = json::array();
    for (int j = 1; j <= lk.size(); ++j) row.push_back(lk(i, j));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const LinkingMatrix& lk) {
  std::ostringstream os;
  for (int i = 1; i <= lk.size(); ++i) {
    os << "  ";
    for (int j = 1; j <= lk.size(); ++j) os << (j > 1 ? " " : "") << std::setw(3) << lk(i, j);
    os << "\n";
  }
  return os.str();
}

bool fully_framed(const DiagramFile& f) {
  return static_cast<int>(f.framings.size()) == f.diagram.component_count();
}

Outcome cmd_parse(const DiagramFile& f) {
  const LinkDiagram& d = f.diagram;
  Outcome o;
  json comps = json::array();
  std::ostringstream os;
  os << "components: " << d.component_count() << "\n"
     << "crossings: " << d.crossing_count() << "\n";
  for (ComponentId c = 1; c <= d.component_count(); ++c) {
    const auto& arcs = d.component_arcs(c);
    comps.push_back({{"label", c}, {"arcs", arcs}, {"crossingless", d.is_crossingless(c)}});
    os << "component " << c << ": " << join(arcs) << (d.is_crossingless(c) ? " (crossingless)" : "")
       << "\n";
  }
  o.result = {{"components", d.component_count()},
              {"crossings", d.crossing_count()},
              {"arc_cycles", comps},
              {"valid", true}};
  o.text = os.str();
  return o;
}

Outcome cmd_invariants(const DiagramFile& f) {
  const LinkDiagram& d = f.diagram;
  const LinkingMatrix lk = linking_matrix(d);
  const SeifertData sd = seifert(d);
  std::vector<int> self;
  for (ComponentId c = 1; c <= d.component_count(); ++c) self.push_back(self_crossing_count(d, c));

  Outcome o;
  o.result = {{"linking_matrix", matrix_json(lk)},
              {"self_crossings", self},
              {"seifert",
               {{"circles", sd.circle_count},
                {"crossings", sd.crossing_count},
                {"euler_characteristic", sd.euler_characteristic}}}};
  std::ostringstream os;
  os << "linking matrix:\n" << matrix_text(lk) << "self-crossings: " << join(self) << "\n"
     << "seifert circles: " << sd.circle_count << ", crossings: " << sd.crossing_count
     << ", euler characteristic: " << sd.euler_characteristic << "\n";
  if (fully_framed(f)) {
    const FramedLink fl = framed_link(f);
    const auto h = hopf_invariant(fl);
    o.result["hopf_invariant"] = h;
    o.result["null_cobordant"] = h == 0;
    o.result["framings"] = fl.framings();
    os << "framings: " << join(ints(fl.framings())) << "\n"
       << "hopf invariant: " << h << "\n"
       << "framed null-cobordant: " << (h == 0 ? "yes" : "no") << "\n";
  }
  o.text = os.str();
  return o;
}

Outcome cmd_obstruction(const DiagramFile& f) {
  const FramedLink fl = framed_link(f);
  const ObstructionVector a = obstruction_vector(fl);
  const ParityCheck pc = parity_identity_check(fl);
  const auto h = hopf_invariant(fl);
  Outcome o;
  o.result = {{"obstruction", a.a},
              {"total_parity", a.total_parity()},
              {"component_parity", fl.component_count() % 2},
              {"parity_identity", to_string(pc)},
              {"hopf_invariant", h},
              {"null_cobordant", h == 0}};
  std::ostringstream os;
  os << "obstruction: (" << join(a.a, ",") << ")\n"
     << "sum mod 2: " << a.total_parity() << "\n"
     << "components mod 2: " << fl.component_count() % 2 << "\n"
     << "parity identity: " << to_string(pc) << "\n"
     << "hopf invariant: " << h << "\n";
  o.text = os.str();
  return o;
}

Outcome cmd_realize(const DiagramFile& f, Target target) {
  const LabeledScene scene = labeled_scene(f);
  const RealizabilityReport r = realize_singular(scene, target);
  Outcome o;
  o.code = r.verdict == Verdict::Realizable      ? exit_code::kPositive
           : r.verdict == Verdict::NotRealizable ? exit_code::kNegative
                                                 : exit_code::kInvalid;
  o.result = {{"verdict", to_string(r.verdict)},
              {"target", to_string(r.target)},
              {"fibers", r.fibers},
              {"singular", r.singular},
              {"obstruction", r.obstruction.a},
              {"singular_linking_parity", r.j_class},
              {"mismatches", r.mismatches},
              {"hopf_invariant", r.hopf_invariant},
              {"notes", r.notes}};
  std::ostringstream os;
  os << "target: " << to_string(r.target) << "\n"
     << "fibers: " << join(r.fibers) << "\n"
     << "singular: " << join(r.singular) << "\n"
     << "hopf invariant: " << r.hopf_invariant << "\n"
     << "obstruction: (" << join(r.obstruction.a, ",") << ")\n"
     << "singular linking parity: (" << join(r.j_class, ",") << ")\n";
  if (!r.mismatches.empty()) os << "mismatch at components: " << join(r.mismatches) << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "verdict: " << to_string(r.verdict) << "\n";
  o.text = os.str();
  return o;
}

Outcome cmd_hp(const DiagramFile& f) {
  const SplitSingularCertificate c = chillingworth_report(f.diagram);
  const SubmersionReport& r = c.submersion;
  Outcome o;
  o.code = r.verdict == Verdict::Realizable      ? exit_code::kPositive
           : r.verdict == Verdict::NotRealizable ? exit_code::kNegative
                                                 : exit_code::kInvalid;
  std::vector<int> parities;
  for (int s : r.row_sums) parities.push_back(((s % 2) + 2) % 2);
  o.result = {{"verdict", to_string(r.verdict)},
              {"row_sums", r.row_sums},
              {"row_sum_parities", parities},
              {"failing", r.failing},
              {"notes", r.notes},
              {"split_singular_certificate", c.certificate},
              {"certificate_note", c.explanation}};
  std::ostringstream os;
  os << "row sums: " << join(r.row_sums) << "\n"
     << "parities: " << join(parities) << "\n";
  if (!r.failing.empty()) os << "even at components: " << join(r.failing) << "\n";
  os << "verdict: " << to_string(r.verdict) << "\n"
     << "split singular set: " << c.explanation << "\n";
  o.text = os.str();
  return o;
}

Outcome cmd_witness(const DiagramFile& f) {
  const WitnessLink w = witness_singular(framed_link(f));
  Outcome o;
  o.text = serialize(w.scene.to_file());
  o.raw = true;
  o.result = {{"scene", o.text},
              {"meridians", w.meridians},
              {"extra_split_unknot", w.extra_split_unknot},
              {"singular", w.scene.singular()}};
  return o;
}

Outcome error_outcome(int code, json result, std::string text) {
  Outcome o;
  o.code = code;
  o.result = std::move(result);
  o.text = std::move(text);
  return o;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"parse", "invariants", "obstruction", "realize", "hp", "witness"};
  return c;
}

Report evaluate_text(const std::string& command, const std::string& text, Target target) {
  Report rep;
  rep.command = command;
  try {
    DiagramFile f = parse_file(text);
    f = canonical_file(std::move(f));
    rep.digest = sha256_hex(serialize(f));
    if (command == "parse") rep.outcome = cmd_parse(f);
    else if (command == "invariants") rep.outcome = cmd_invariants(f);
    else if (command == "obstruction") rep.outcome = cmd_obstruction(f);
    else if (command == "realize") rep.outcome = cmd_realize(f, target);
    else if (command == "hp") rep.outcome = cmd_hp(f);
    else rep.outcome = cmd_witness(f);
  } catch (const ParseError& e) {
    rep.outcome = error_outcome(exit_code::kInvalid,
                                {{"error", "syntax"},
                                 {"line", e.line()},
                                 {"column", e.column()},
                                 {"message", e.what()}},
                                std::string("syntax error: ") + e.what() + "\n");
  } catch (const InvalidDiagram& e) {
    json vs = json::array();
    std::string text_out = "invalid diagram:\n";
    for (const auto& v : e.violations()) {
      vs.push_back({{"kind", to_string(v.kind)}, {"where", v.where}, {"message", v.message}});
      text_out += "  " + to_string(v.kind) + " at " + v.where + ": " + v.message + "\n";
    }
    rep.outcome = error_outcome(exit_code::kInvalid, {{"error", "invalid-diagram"}, {"violations", vs}},
                                text_out);
  } catch (const SceneError& e) {
    rep.outcome = error_outcome(exit_code::kInvalid, {{"error", "scene"}, {"message", e.what()}},
                                std::string("scene error: ") + e.what() + "\n");
  } catch (const IllegalArgument& e) {
    rep.outcome = error_outcome(exit_code::kInvalid, {{"error", "argument"}, {"message", e.what()}},
                                std::string("error: ") + e.what() + "\n");
  }
  return rep;
}

json report_json(const Report& r) {
  return {{"version", kVersion},
          {"command", r.command},
          {"input_digest", r.digest ? json(*r.digest) : json(nullptr)},
          {"result", r.outcome.result}};
}

void emit(const Report& r, bool as_json, std::ostream& out, std::ostream& err) {
  if (as_json) {
    out << report_json(r).dump(2) << "\n";
    return;
  }
  if (r.outcome.code == exit_code::kInvalid && r.outcome.result.contains("error")) {
    err << r.outcome.text;
    return;
  }
  if (r.outcome.raw) {
    out << r.outcome.text;
    return;
  }
  out << "fiberlink " << kVersion << " " << r.command << "\n";
  if (r.digest) out << "input: sha256:" << *r.digest << "\n";
  out << r.outcome.text;
}

std::optional<std::string> read_all(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) return std::nullopt;
  std::ifstream file(path, std::ios::binary);
  if (!file) return std::nullopt;
  buf << file.rdbuf();
  if (file.bad()) return std::nullopt;
  return buf.str();
}

Target parse_target(const std::string& t) { return t == "sphere" ? Target::Sphere : Target::Plane; }

struct FileResult {
  std::string name;
  int code = 0;
  Report report;
  bool io_error = false;
};

std::optional<std::vector<std::string>> batch_files(const std::string& dir, std::ostream& err) {
  std::error_code ec;
  std::vector<std::string> files;
  fs::directory_iterator it(dir, ec);
  if (ec) {
    err << "error: cannot read directory " << dir << ": " << ec.message() << "\n";
    return std::nullopt;
  }
  for (const auto& entry : it) {
    if (entry.is_regular_file() && entry.path().extension() == ".pd") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

FileResult evaluate_path(const std::string& command, const std::string& path, Target target) {
  FileResult fr;
  fr.name = fs::path(path).filename().string();
  std::istringstream none;
  const auto text = read_all(path, none);
  fr.report.command = command;
  if (!text) {
    fr.io_error = true;
    fr.code = exit_code::kIo;
    fr.report.outcome = error_outcome(exit_code::kIo, {{"error", "io"}, {"message", "cannot read " + path}},
                                      "error: cannot read " + path + "\n");
    return fr;
  }
  fr.report = evaluate_text(command, *text, target);
  fr.code = fr.report.outcome.code;
  return fr;
}

int emit_batch(const std::vector<FileResult>& results, bool as_json, std::ostream& out,
               std::ostream& err) {
  int worst = 0;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"file", r.name}, {"exit_code", r.code}, {"report", report_json(r.report)}});
    }
    out << arr.dump(2) << "\n";
  }
  for (const auto& r : results) {
    worst = std::max(worst, r.code);
    if (!as_json) {
      out << "== " << r.name << " (exit " << r.code << ")\n";
      emit(r.report, false, out, err);
    }
  }
  return worst;
}

}  // namespace

std::string input_digest(const std::string& text) {
  return sha256_hex(serialize(canonical_file(parse_file(text))));
}

int run_batch_serial(const std::string& command, const std::string& dir, const std::string& target,
                     bool json, std::ostream& out, std::ostream& err) {
  const auto files = batch_files(dir, err);
  if (!files) return exit_code::kIo;
  std::vector<FileResult> results;
  for (const auto& f : *files) results.push_back(evaluate_path(command, f, parse_target(target)));
  return emit_batch(results, json, out, err);
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Realizability deciders for singular sets and regular fibers of maps to the plane",
               "fiberlink"};
  std::string command;
  std::string path;
  std::string target = "plane";
  std::string batch_dir;
  bool as_json = false;
  app.add_option("command", command, "parse|invariants|obstruction|realize|hp|witness")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("file", path, "diagram file, or - for standard input");
  app.add_option("--target", target, "target of the map for realize")
      ->check(CLI::IsMember({"plane", "sphere"}));
  app.add_flag("--json", as_json, "machine-readable report");
  app.add_option("--batch", batch_dir, "evaluate every file in a directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_code::kPositive;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return exit_code::kInvalid;
  }

  if (!batch_dir.empty()) {
    const auto files = batch_files(batch_dir, err);
    if (!files) return exit_code::kIo;
    const Target t = parse_target(target);
    const auto results = parallel_map(std::span<const std::string>(*files), [&](const std::string& f) {
      return evaluate_path(command, f, t);
    });
    return emit_batch(results, as_json, out, err);
  }
  if (path.empty()) {
    err << "usage error: a file argument (or -) is required\n";
    return exit_code::kInvalid;
  }

  const auto text = read_all(path, in);
  if (!text) {
    err << "error: cannot read " << path << "\n";
    return exit_code::kIo;
  }
  const Report rep = evaluate_text(command, *text, parse_target(target));
  emit(rep, as_json, out, err);
  return rep.outcome.code;
}

}  // namespace fiberlink
