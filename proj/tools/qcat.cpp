#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "qcat/anodyne.hpp"
#include "qcat/catalog.hpp"
#include "qcat/certify.hpp"
#include "qcat/comparisons.hpp"
#include "qcat/equivalence.hpp"
#include "qcat/errors.hpp"
#include "qcat/function_complex.hpp"
#include "qcat/hom_sets.hpp"
#include "qcat/homotopy_category.hpp"
#include "qcat/json_io.hpp"
#include "qcat/nerve.hpp"
#include "qcat/quasi_iso.hpp"
#include "qcat/saturation.hpp"

#ifndef QCAT_VERSION
#define QCAT_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace qcat;
using io::Json;

namespace {

constexpr int kDefaultMaxLen = 3;

struct Outcome {
  Json report;
  bool verdict = true;
};

Json report_head(const std::string& command, Json inputs) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"version", "qcat " QCAT_VERSION}};
}

Json horn_json(const HornMap& h) {
  Json faces = Json::array();
  for (int i = 0; i <= h.n; ++i) {
    if (i == h.k) continue;
    auto f = io::to_json(h.faces[static_cast<std::size_t>(i)]);
    f["face"] = i;
    faces.push_back(f);
  }
  return {{"n", h.n}, {"k", h.k}, {"faces", faces}};
}

Json counts_json(const SimplicialSet& x) { return x.counts(); }

Json cert_report_json(const CertReport& r) {
  Json out = {{"verdict", to_string(r.verdict)},
              {"certified_up_to", r.certified_up_to},
              {"horns_checked", r.horns_checked},
              {"reason", r.reason}};
  out["coskeletal_at"] = r.coskeletal_at ? Json(*r.coskeletal_at) : Json(nullptr);
  out["counterexample"] = r.counterexample ? horn_json(*r.counterexample) : Json(nullptr);
  return out;
}

void maybe_emit(const std::string& path, const Json& artifact) {
  if (!path.empty()) io::write_file(path, artifact);
}

Outcome run_pathcat(const std::string& file, bool homsets, int max_len, const std::string& emit) {
  const auto x = io::sset_from_json(io::read_file(file));
  const auto p = path_category(x);
  const bool loop_free = is_loop_free(p);
  std::optional<HomSetTable> table;
  if (homsets) table = loop_free ? hom_sets(p) : bounded_hom_sets(p, max_len);
  Json result = io::to_json(p, table ? &*table : nullptr);
  maybe_emit(emit, result);
  Json r = report_head("pathcat", {file});
  r["counts"] = {{"objects", p.object_count}, {"generators", p.generators.size()}, {"relations", p.relations.size()}};
  r["verdicts"] = {{"loop_free", loop_free}, {"exact", !table || !table->partial}};
  r["result"] = result;
  return {r, true};
}

Outcome run_homset(const std::string& file, SimplexId vx, SimplexId vy, int max_len) {
  const auto x = io::sset_from_json(io::read_file(file));
  const auto p = path_category(x);
  const auto ox = object_of_vertex(p, vx), oy = object_of_vertex(p, vy);
  const HomEntry e = is_loop_free(p) ? hom_sets(p).at(ox, oy) : bounded_hom_classes(p, ox, oy, max_len);
  Json classes = Json::array();
  for (const auto& c : e.classes)
    classes.push_back({{"canonical", c.canonical}, {"name", p.word_name(c.canonical)}, {"words", c.words.size()}});
  Json r = report_head("homset", {file, vx, vy});
  r["counts"] = {{"class_count", e.classes.size()}};
  r["verdicts"] = {{"exact", !e.partial}};
  r["result"] = {{"x", vx}, {"y", vy}, {"max_len", e.max_len}, {"classes", classes}};
  return {r, true};
}

Outcome run_certify(const std::string& file) {
  const auto x = io::sset_from_json(io::read_file(file));
  const auto cert = certify_quasi_category(x);
  Json r = report_head("certify", {file});
  r["counts"] = {{"simplices", counts_json(x)}, {"horns_checked", cert.horns_checked}};
  r["verdicts"] = {{"quasi_category", cert.verdict == Verdict::quasi_category}};
  r["result"] = cert_report_json(cert);
  return {r, cert.verdict == Verdict::quasi_category};
}

Outcome run_core(const std::string& file, const std::string& emit) {
  const auto x = io::sset_from_json(io::read_file(file));
  const auto cert = certify_quasi_category(x);
  Json r = report_head("core", {file});
  r["certificate"] = cert_report_json(cert);
  if (cert.verdict != Verdict::quasi_category) {
    r["verdicts"] = {{"quasi_category", false}};
    return {r, false};
  }
  const auto j = core(cert);
  const Json result = io::to_json(j.inclusion);
  maybe_emit(emit, result);
  r["counts"] = {{"complex", counts_json(cert.complex)}, {"core", counts_json(j.complex)}};
  r["verdicts"] = {{"quasi_category", true}, {"core_is_whole", j.complex.size() == cert.complex.size()}};
  r["result"] = result;
  return {r, true};
}

Outcome run_ho(const std::string& file, int max_len, const std::string& emit) {
  const auto x = io::sset_from_json(io::read_file(file));
  const auto cert = certify_quasi_category(x);
  Json r = report_head("ho", {file});
  r["certificate"] = cert_report_json(cert);
  if (cert.verdict != Verdict::quasi_category) {
    r["verdicts"] = {{"quasi_category", false}};
    return {r, false};
  }
  const auto ho = ho_category(cert);
  const auto cmp = compare_with_path_category(ho, cert.complex, max_len);
  const Json result = io::to_json(ho.category);
  maybe_emit(emit, result);
  r["counts"] = {{"objects", ho.category.object_count()}, {"arrows", ho.category.arrow_count()}};
  r["verdicts"] = {{"quasi_category", true},
                   {"composition_independent", ho.composition_independent},
                   {"homotopy_coherent", ho.homotopy_coherent},
                   {"path_category_isomorphism", cmp.isomorphism},
                   {"path_category_partial", cmp.partial}};
  r["result"] = result;
  return {r, ho.composition_independent && ho.homotopy_coherent && cmp.isomorphism};
}

Outcome run_tau0(const std::string& kfile, const std::string& xfile, std::size_t limit) {
  const auto k = io::sset_from_json(io::read_file(kfile));
  const auto x = io::sset_from_json(io::read_file(xfile));
  const auto t = tau0(k, x, limit);
  Json r = report_head("tau0", {kfile, xfile});
  r["counts"] = {{"maps", t.class_of.size()}, {"class_count", t.class_count},
                 {"function_complex", counts_json(t.function_complex.complex)}};
  r["result"] = {{"class_of", t.class_of}};
  return {r, true};
}

Outcome run_saturate(const std::string& file, int max_dim, const std::string& emit) {
  const auto x = io::sset_from_json(io::read_file(file));
  const auto s = saturation_step(x, max_dim);
  Json horns = Json::array();
  for (const auto& h : s.horns) horns.push_back(horn_json(h));
  const Json result = io::to_json(s.result);
  maybe_emit(emit, result);
  Json r = report_head("saturate", {file});
  r["counts"] = {{"horns", s.horns.size()}, {"cells_added", s.cells_added}, {"result", counts_json(s.result)}};
  r["result"] = {{"complex", result}, {"horns", horns}};
  return {r, true};
}

Outcome run_shuffles(int a, int b) {
  const auto all = shuffles(a, b);
  const auto lo = minimal_shuffle(a, b), hi = maximal_shuffle(a, b);
  Json paths = Json::array();
  for (const auto& p : all) {
    Json pts = Json::array();
    for (const auto& [i, j] : p.points) pts.push_back({i, j});
    auto c1 = find_descending_segment(p, Corner::up_then_right);
    auto c2 = find_descending_segment(p, Corner::right_then_up);
    paths.push_back({{"points", pts},
                     {"minimal", p == lo},
                     {"maximal", p == hi},
                     {"corner_up_right", c1 ? Json(*c1) : Json(nullptr)},
                     {"corner_right_up", c2 ? Json(*c2) : Json(nullptr)}});
  }
  Json r = report_head("shuffles", {a, b});
  r["counts"] = {{"shuffles", all.size()}};
  r["result"] = paths;
  return {r, true};
}

Outcome run_cert_build(const std::vector<int>& t45, const std::vector<int>& l8, bool verify, const std::string& emit) {
  if (t45.empty() == l8.empty()) throw CLI::ValidationError("cert-build", "give exactly one of --theorem45 or --lemma8");
  Json inputs;
  AnodyneCertificate c;
  if (!t45.empty()) {
    if (t45.size() != 3) throw CLI::ValidationError("--theorem45", "expects n k m");
    inputs = {{"theorem45", t45}};
    c = theorem45_certificate(t45[0], t45[1], t45[2]);
  } else {
    if (l8.size() < 2) throw CLI::ValidationError("--lemma8", "expects n followed by the face indices");
    inputs = {{"lemma8", l8}};
    c = lemma8_certificate(l8[0], std::set<int>(l8.begin() + 1, l8.end()));
  }
  const Json cert = io::to_json(c);
  maybe_emit(emit, cert);
  Json r = report_head("cert-build", inputs);
  r["counts"] = {{"steps", c.steps.size()}, {"source", counts_json(c.source)}, {"target", counts_json(c.target)}};
  bool ok = true;
  if (verify) {
    const auto v = verify_certificate(c);
    ok = v.ok;
    r["verdicts"] = {{"verified", v.ok}};
    r["verification"] = {{"reason", v.reason}, {"failing_step", v.failing_step ? Json(*v.failing_step) : Json(nullptr)}};
  }
  if (emit.empty()) r["result"] = cert;
  return {r, ok};
}

Outcome run_cert_verify(const std::string& file) {
  Json j = io::read_file(file);
  // accept a cert-build report as well as a bare certificate
  if (j.contains("result") && j["result"].is_object() && j["result"].contains("steps")) j = j["result"];
  const auto c = io::cert_from_json(j);
  const auto v = verify_certificate(c);
  Json r = report_head("cert-verify", {file});
  r["counts"] = {{"steps", c.steps.size()}};
  r["verdicts"] = {{"verified", v.ok}};
  r["result"] = {{"reason", v.reason}, {"failing_step", v.failing_step ? Json(*v.failing_step) : Json(nullptr)}};
  return {r, v.ok};
}

Outcome run_equiv40(const std::string& file) {
  const auto f = io::fun_from_json(io::read_file(file));
  const auto srcdata = example40_data(f.source);
  const auto tgtdata = example40_data(f.target);
  const auto e40 = example40_nerve_equivalence(f, srcdata, tgtdata);
  const bool direct = is_equivalence_of_categories(f);
  Json r = report_head("equiv40", {file});
  r["verdicts"] = {{"equivalent", e40.equivalent}, {"direct_equivalence", direct}, {"agree", e40.equivalent == direct}};
  r["result"] = {{"per_presentation", e40.per_presentation}};
  return {r, e40.equivalent};
}

Outcome run_corpus(const std::string& dir, int dim_bound) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  Json cats = Json::array(), complexes = Json::array();
  bool all_ok = true;
  for (const auto& path : files) {
    const auto name = path.filename().string();
    if (name.ends_with(".cat.json")) {
      const auto c = io::cat_from_json(io::read_file(path.string()));
      const auto counit = counit_check(c);
      const auto cert = certify_quasi_category(nerve(c, dim_bound).complex);
      const bool ok = counit.holds && cert.verdict == Verdict::quasi_category;
      all_ok = all_ok && ok;
      cats.push_back({{"file", name}, {"counit", counit.holds}, {"nerve_quasi_category", cert.verdict == Verdict::quasi_category}});
    } else if (name.ends_with(".sset.json")) {
      const auto x = io::sset_from_json(io::read_file(path.string()));
      const auto cert = certify_quasi_category(x);
      complexes.push_back({{"file", name}, {"counts", counts_json(x)}, {"loop_free", is_loop_free(x)},
                           {"certify", to_string(cert.verdict)}});
    }
  }
  Json r = report_head("corpus-run", {dir});
  r["counts"] = {{"categories", cats.size()}, {"complexes", complexes.size()}};
  r["verdicts"] = {{"categories_pass", all_ok}};
  r["result"] = {{"categories", cats}, {"complexes", complexes}};
  return {r, all_ok};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite simplicial sets, path categories and quasi-categories"};
  app.require_subcommand(1);
  std::string out;
  bool timing = false;
  app.add_option("--out", out, "Write the report here instead of stdout");
  app.add_flag("--timing", timing, "Include wall-clock time in the report");

  std::string file, file2, emit;
  bool homsets = false, verify = false;
  int max_len = kDefaultMaxLen, horn_dim = 2, nerve_dim = 3, r_dim = 0, s_dim = 0;
  std::size_t limit = kDefaultMapLimit;
  SimplexId vx = 0, vy = 0;
  std::vector<int> t45, l8;

  auto* pathcat = app.add_subcommand("pathcat", "Presentation of P(X), optionally with hom-sets");
  pathcat->add_option("file", file, "*.sset.json")->required();
  pathcat->add_flag("--homsets", homsets);
  pathcat->add_option("--max-len", max_len, "Word bound when X is not loop-free");
  pathcat->add_option("--emit", emit, "Write the *.pcat.json here");

  auto* homset = app.add_subcommand("homset", "Classes of words between two vertices of P(X)");
  homset->add_option("file", file)->required();
  homset->add_option("x", vx)->required();
  homset->add_option("y", vy)->required();
  homset->add_option("--max-len", max_len);

  auto* certify = app.add_subcommand("certify", "Decide whether X is a quasi-category");
  certify->add_option("file", file)->required();

  auto* core_cmd = app.add_subcommand("core", "The core of a quasi-category");
  core_cmd->add_option("file", file)->required();
  core_cmd->add_option("--emit", emit, "Write the inclusion as *.smap.json");

  auto* ho = app.add_subcommand("ho", "Homotopy category of a quasi-category");
  ho->add_option("file", file)->required();
  ho->add_option("--max-len", max_len);
  ho->add_option("--emit", emit, "Write ho(X) as *.cat.json");

  auto* tau = app.add_subcommand("tau0", "Isomorphism classes of P(hom(K, X))");
  tau->add_option("K", file)->required();
  tau->add_option("X", file2)->required();
  tau->add_option("--limit", limit);

  auto* sat = app.add_subcommand("saturate", "One stage of inner-horn saturation");
  sat->add_option("file", file)->required();
  sat->add_option("--dim-bound", horn_dim, "Largest horn dimension");
  sat->add_option("--emit", emit);

  auto* shuf = app.add_subcommand("shuffles", "Shuffles of Delta^r x Delta^s");
  shuf->add_option("r", r_dim)->required()->check(CLI::NonNegativeNumber);
  shuf->add_option("s", s_dim)->required()->check(CLI::NonNegativeNumber);

  auto* build = app.add_subcommand("cert-build", "Build an inner anodyne certificate");
  build->add_option("--theorem45", t45, "n k m")->expected(3);
  build->add_option("--lemma8", l8, "n followed by S")->expected(2, 64);
  build->add_flag("--verify", verify);
  build->add_option("--emit", emit, "Write the *.cert.json here");

  auto* cverify = app.add_subcommand("cert-verify", "Replay a certificate");
  cverify->add_option("file", file)->required();

  auto* e40 = app.add_subcommand("equiv40", "Equivalence test through functor groupoids");
  e40->add_option("file", file, "*.fun.json")->required();

  auto* corpus_cmd = app.add_subcommand("corpus-run", "Run the checks over a corpus directory");
  std::string dir = "corpus";
  corpus_cmd->add_option("dir", dir);
  corpus_cmd->add_option("--dim-bound", nerve_dim, "Nerve dimension bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (*pathcat) o = run_pathcat(file, homsets, max_len, emit);
    else if (*homset) o = run_homset(file, vx, vy, max_len);
    else if (*certify) o = run_certify(file);
    else if (*core_cmd) o = run_core(file, emit);
    else if (*ho) o = run_ho(file, max_len, emit);
    else if (*tau) o = run_tau0(file, file2, limit);
    else if (*sat) o = run_saturate(file, horn_dim, emit);
    else if (*shuf) o = run_shuffles(r_dim, s_dim);
    else if (*build) o = run_cert_build(t45, l8, verify, emit);
    else if (*cverify) o = run_cert_verify(file);
    else if (*e40) o = run_equiv40(file);
    else if (*corpus_cmd) o = run_corpus(dir, nerve_dim);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (timing)
    o.report["timing"] = {{"ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()}};
  try {
    if (out.empty()) std::cout << io::dump(o.report);
    else io::write_file(out, o.report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return o.verdict ? 0 : 1;
}
