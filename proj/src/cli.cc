// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amplikit/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <random>
#include <thread>

#include "amplikit/amplituhedron.h"
#include "amplikit/arrangement.h"
#include "amplikit/diagram_families.h"
#include "amplikit/errors.h"
#include "amplikit/json_io.h"
#include "amplikit/plabic_graph.h"
#include "amplikit/positroid.h"
#include "amplikit/sign_vector.h"
#include "amplikit/suites.h"

namespace amplikit {

namespace {

struct Options {
  int n = -1;
  int k = -1;
  int m = 1;
  uint64_t seed = 1;
  int bound = -1;
  std::string format = "json";
  std::string file;
  std::string basis;
  std::string family = "all";
  std::string target;  // Positional: what to enumerate, convert, build...
  bool open = false;
  bool relaxed = false;
  bool full_sweep = false;
  bool geometric = false;
  int samples = -1;
  int certificates = 10;
  int instances = 100;
};

// Default scale bounds on n, raised with --bound.
constexpr int kDefaultBound = 10;

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  CheckArgument(in.good(), "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

int Bound(const Options& o, int fallback) {
  return o.bound > 0 ? o.bound : fallback;
}

void CheckN(const Options& o, int n, int fallback) {
  CheckArgument(n >= 1, "--n must be at least 1");
  CheckScale(n <= Bound(o, fallback),
             "n = " + std::to_string(n) + " exceeds the scale bound " +
                 std::to_string(Bound(o, fallback)));
}

int RequireN(const Options& o, int fallback) {
  CheckArgument(o.n >= 1, "--n is required");
  CheckN(o, o.n, fallback);
  return o.n;
}

// Values of k for type n: the given one, or all 0 <= k <= top.
std::vector<int> Ks(const Options& o, int n, int top) {
  if (o.k >= 0) {
    CheckArgument(o.k <= top, "--k out of range for n = " + std::to_string(n));
    return {o.k};
  }
  std::vector<int> ks;
  for (int k = 0; k <= top; ++k) ks.push_back(k);
  return ks;
}

void Emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string Join(const std::vector<int64_t>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s;
}

DiagramFamily ParseFamily(const std::string& name) {
  if (name == "D") return DiagramFamily::kD;
  if (name == "Dbar") return DiagramFamily::kDBar;
  if (name == "L") return DiagramFamily::kL;
  return DiagramFamily::kLBar;
}

int Enumerate(const Options& o, std::ostream& out) {
  const int n = RequireN(o, kDefaultBound);
  const bool csv = o.format == "csv";
  CheckArgument(csv || o.format == "json", "enumerate supports json or csv");
  Json items = Json::array();
  std::vector<int64_t> counts;
  std::string table = o.target == "signsets" ? "k,sign_vector\n"
                                             : "k,diagram,permutation\n";
  // Positroid cells exist for k = n; the m = 1 families stop at n - 1.
  const bool all_cells = o.target == "cells" && o.family == "all";
  for (int k : Ks(o, n, all_cells ? n : n - 1)) {
    int64_t count = 0;
    if (o.target == "signsets") {
      for (const SignVector& s : EnumerateSignSet(n, k, !o.open)) {
        ++count;
        items.push_back(Json{{"k", k}, {"sign_vector", s.ToString()}});
        table += std::to_string(k) + "," + s.ToString() + "\n";
      }
    } else {
      std::vector<LeDiagram> cells;
      if (o.target == "bcfw") {
        cells = BcfwCells(n, k);
        std::sort(cells.begin(), cells.end());
      } else if (all_cells) {
        cells = AllLeDiagrams(k, n);
      } else {
        cells = EnumerateFamily(n, k, ParseFamily(o.family));
      }
      for (const LeDiagram& d : cells) {
        ++count;
        const std::string pi = LeToPermutation(d).ToString();
        items.push_back(
            Json{{"k", k}, {"diagram", d.ToString()}, {"permutation", pi}});
        table += std::to_string(k) + ",\"" + d.ToString() + "\",\"" + pi +
                 "\"\n";
      }
    }
    counts.push_back(count);
  }
  if (csv) {
    out << table;
  } else {
    Emit(out, Json{{"n", n},
                   {"what", o.target},
                   {"counts", counts},
                   {"summary", Join(counts)},
                   {"items", items}});
  }
  return kExitOk;
}

int Convert(const Options& o, std::ostream& out) {
  CheckArgument(!o.file.empty(), "--file is required");
  const Json in = ReadJsonFile(o.file);
  LeDiagram d;
  if (o.target == "le") {
    d = DiagramFromJson(in);
  } else if (o.target == "perm") {
    d = PermutationToLe(PermutationFromJson(in));
  } else {
    d = PositroidToLe(MatroidFromJson(in));
  }
  CheckN(o, d.n(), kDefaultBound);
  if (o.format == "dot") {
    out << LeToPlabic(d).ToDot();
    return kExitOk;
  }
  CheckArgument(o.format == "json", "convert supports json or dot");
  Json result{{"diagram", DiagramToJson(d)},
              {"permutation", PermutationToJson(LeToPermutation(d))},
              {"positroid", MatroidToJson(PositroidOfDiagram(d))}};
  if (d.k() < d.n() && InFamily(d, DiagramFamily::kDBar)) {
    result["sign_vector"] = OmegaDS(d).ToString();
    result["code"] = CodeToJson(OmegaDMCode(d));
  }
  Emit(out, result);
  return kExitOk;
}

CyclicArrangement LoadArrangement(const Options& o) {
  if (!o.basis.empty()) {
    const Json in = ReadJsonFile(o.basis);
    const RationalMatrix b = MatrixFromJson(in.contains("basis") ? in.at("basis")
                                                                 : in);
    CheckN(o, b.cols(), kDefaultBound);
    return CyclicArrangement::Build(b.RowVectors(), o.relaxed);
  }
  const int n = RequireN(o, kDefaultBound);
  CheckArgument(o.k >= 1 && o.k < n, "--k with 1 <= k < n is required");
  RationalVector t;
  for (int i = 1; i <= n; ++i) t.push_back(Rational(i));
  return VandermondeArrangement(t, o.k);
}

int Arrangement(const Options& o, std::ostream& out) {
  const CyclicArrangement a = LoadArrangement(o);
  if (o.target == "build") {
    Emit(out, ArrangementToJson(a));
    return kExitOk;
  }
  const std::vector<Face> faces = EnumerateFaces(a, o.full_sweep);
  if (o.target == "svg" || o.format == "svg") {
    out << ArrangementSvg(a, faces);
    return kExitOk;
  }
  if (o.format == "csv") {
    out << FacesToCsv(faces);
    return kExitOk;
  }
  Json list = Json::array();
  for (const Face& f : faces) list.push_back(FaceToJson(f));
  Emit(out, Json{{"n", a.n()},
                 {"k", a.k()},
                 {"f_vector", FVector(faces, a.k(), false)},
                 {"bounded_f_vector", FVector(faces, a.k(), true)},
                 {"faces", list}});
  return kExitOk;
}

Json CertificateToJson(const NoninjectivityCertificate& c, bool verified) {
  return Json{{"tau", c.tau.ToString()},
              {"b", c.b},
              {"t", RationalToJson(c.t)},
              {"v", MatrixToJson(c.v.basis())},
              {"v_t", MatrixToJson(c.v_t.basis())},
              {"line", VectorToJson(c.line)},
              {"verified", verified}};
}

int Image(const Options& o, std::ostream& out) {
  CheckArgument(!o.file.empty(), "a diagram file is required");
  const LeDiagram d = DiagramFromJson(ReadJsonFile(o.file));
  CheckN(o, d.n(), 8);
  CheckArgument(d.k() < d.n(), "the m = 1 image needs k < n");
  const CellImage image = ImageOfCell(d, Bound(o, 8));
  Json result = CellImageToJson(d, image);
  const Subspace w = AmplituhedronModel::Default(d.n(), d.k()).w();
  std::mt19937_64 rng(o.seed);
  int landed = 0;
  const int samples = o.samples >= 0 ? o.samples : 10;
  for (int s = 0; s < samples; ++s) {
    const Subspace v = Subspace::RowSpan(RandomCellRepresentative(d, rng));
    landed += std::binary_search(image.strata.begin(), image.strata.end(),
                                 SignOf(PhiW(w, v)));
  }
  result["samples"] = samples;
  result["samples_in_strata"] = landed;
  bool ok = landed == samples && image.dimension == image.plus_rows;
  if (image.injective) ok = ok && image.strata == image.slide_strata;
  if (!image.injective && d.k() >= 1) {
    const NoninjectivityCertificate cert =
        NoninjectivityCertificateFor(d, w, rng);
    const bool verified = VerifyCertificate(d, w, cert);
    result["certificate"] = CertificateToJson(cert, verified);
    ok = ok && verified;
  }
  Emit(out, result);
  return ok ? kExitOk : kExitVerifyFailed;
}

struct Item {
  int n;
  int k;
};

// Runs fn over items on up to AMPLIKIT_THREADS threads; results keep the
// order of items.
std::vector<SuiteResult> RunItems(
    const std::vector<Item>& items,
    const std::function<SuiteResult(const Item&)>& fn) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("AMPLIKIT_THREADS")) {
    threads = std::clamp(std::atoi(env), 1, 256);
  }
  threads = std::min<unsigned>(threads, std::max<size_t>(items.size(), 1));
  std::vector<SuiteResult> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < items.size();) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

int Verify(const Options& o, std::ostream& out) {
  const std::string& suite = o.target;
  // Largest n examined when --n is absent.
  int top = 7;
  if (suite == "triangulation") top = 10;
  if (suite == "image" || suite == "fvector") top = 6;
  std::vector<Item> items;
  const int lo = o.n >= 1 ? o.n : 1;
  const int hi = o.n >= 1 ? o.n : Bound(o, top);
  CheckN(o, hi, top);
  for (int n = lo; n <= hi; ++n) {
    for (int k : Ks(o, n, n - 1)) items.push_back({n, k});
  }
  const int samples = o.samples >= 0 ? o.samples : 50;
  const std::vector<SuiteResult> results =
      RunItems(items, [&](const Item& it) -> SuiteResult {
        const uint64_t seed = ItemSeed(o.seed, it.n, it.k);
        if (suite == "bijections") return VerifyBijections(it.n, it.k);
        if (suite == "triangulation") return VerifyTriangulation(it.n, it.k);
        if (suite == "adjacency") {
          return VerifyAdjacency(it.n, it.k, o.geometric);
        }
        if (suite == "boundary") return VerifyBoundary(it.n, it.k, o.geometric);
        if (suite == "image") {
          return VerifyImages(it.n, it.k, seed, samples, o.certificates);
        }
        if (suite == "gk-sampling") {
          return VerifyGantmakherKrein(it.n, it.k, seed, o.instances);
        }
        return VerifyFVector(it.n, it.k);
      });
  bool ok = true;
  Json list = Json::array();
  for (size_t i = 0; i < items.size(); ++i) {
    const SuiteResult& r = results[i];
    if (o.format == "json") {
      Json j{{"n", items[i].n},
             {"k", items[i].k},
             {"passed", r.passed},
             {"checked", r.checked},
             {"detail", r.detail}};
      if (!r.passed) j["counterexample"] = r.counterexample;
      list.push_back(j);
    } else {
      out << suite << " n=" << items[i].n << " k=" << items[i].k << ": "
          << (r.passed ? "PASS" : "FAIL") << " (" << r.checked << " checked)";
      if (!r.detail.empty()) out << " " << r.detail;
      out << "\n";
      if (!r.passed) out << "counterexample: " << r.counterexample << "\n";
    }
    if (!r.passed) {
      ok = false;
      break;
    }
  }
  if (o.format == "json") {
    Emit(out, Json{{"suite", suite}, {"passed", ok}, {"results", list}});
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int Report(const Options& o, std::ostream& out) {
  if (!o.basis.empty()) {
    const Json in = ReadJsonFile(o.basis);
    const RationalMatrix z =
        MatrixFromJson(in.contains("basis") ? in.at("basis") : in);
    CheckN(o, z.cols(), 8);
    Emit(out, ModelReport(AmplituhedronModel::FromMatrix(z)));
    return kExitOk;
  }
  const int n = RequireN(o, 8);
  CheckArgument(o.k >= 0 && o.k < n, "--k with 0 <= k < n is required");
  Emit(out, ModelReport(AmplituhedronModel::Default(n, o.k)));
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Positroid cells and the m = 1 amplituhedron", "amplikit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--n", o.n, "Number of columns");
  app.add_option("--k", o.k, "Rank");
  app.add_option("--m", o.m, "Amplituhedron parameter (only 1)");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--bound", o.bound, "Scale bound on n");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "dot", "svg"}));

  CLI::App* enumerate = app.add_subcommand("enumerate", "List cells or signs");
  enumerate->add_option("what", o.target)
      ->required()
      ->check(CLI::IsMember({"cells", "bcfw", "signsets"}));
  enumerate->add_option("--family", o.family, "Cell family for 'cells'")
      ->check(CLI::IsMember({"all", "D", "Dbar", "L", "Lbar"}));
  enumerate->add_flag("--open", o.open, "Open sign sets instead of closed");

  CLI::App* convert =
      app.add_subcommand("convert", "Le-diagram, permutation, positroid");
  convert->add_option("from", o.target)
      ->required()
      ->check(CLI::IsMember({"le", "perm", "positroid"}));
  convert->add_option("--file", o.file, "Input JSON")->required();

  CLI::App* arrangement =
      app.add_subcommand("arrangement", "Cyclic hyperplane arrangements");
  arrangement->add_option("action", o.target)
      ->required()
      ->check(CLI::IsMember({"build", "faces", "svg"}));
  arrangement->add_option("--basis", o.basis, "JSON rows w0, w1, ..., wk");
  arrangement->add_flag("--relaxed", o.relaxed, "Skip the TP test on W");
  arrangement->add_flag("--full-sweep", o.full_sweep, "Test all 3^n labels");

  CLI::App* image = app.add_subcommand("image", "Image of a cell under phi_W");
  image->add_option("diagram", o.file, "Diagram JSON")->required();
  image->add_option("--samples", o.samples, "Sampled points");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.target)
      ->required()
      ->check(CLI::IsMember({"bijections", "triangulation", "adjacency",
                             "boundary", "image", "gk-sampling", "fvector"}));
  verify->add_flag("--geometric", o.geometric,
                   "Also check the arrangement conditions");
  verify->add_option("--samples", o.samples, "Samples per cell (image)");
  verify->add_option("--certificates", o.certificates,
                     "Noninjectivity certificates per type (image)");
  verify->add_option("--instances", o.instances,
                     "Vandermonde instances per type (gk-sampling)");

  CLI::App* report = app.add_subcommand("report", "Strata report for B_{n,k,1}");
  report->add_option("--basis", o.basis, "JSON matrix Z");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    CheckArgument(o.m == 1, "only m = 1 is supported");
    // verify prints one line per item unless JSON is asked for.
    if (verify->parsed() && app.count("--format") == 0) o.format = "text";
    if (enumerate->parsed()) return Enumerate(o, out);
    if (convert->parsed()) return Convert(o, out);
    if (arrangement->parsed()) return Arrangement(o, out);
    if (image->parsed()) return Image(o, out);
    if (verify->parsed()) return Verify(o, out);
    return Report(o, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ScaleBoundExceeded& e) {
    err << "scale bound exceeded: " << e.what() << "\n";
    return kExitScale;
  }
}

}  // namespace amplikit
