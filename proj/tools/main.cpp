// rxmeet: decide emptiness of the intersection of two regexps, generate and
// verify orthogonal-vectors reductions, and benchmark the routing table.
//
// Output is one machine-parseable key=value line per command; the empty
// word is printed as <epsilon>. Exit codes: 0 success, 2 malformed input,
// 3 budget exhausted, 4 internal invariant failure. --exitcode switches
// intersect/member to 0 = NONEMPTY/member, 1 = EMPTY/non-member; verify
// exits 0 PASS, 1 FAIL, 3 Inconclusive.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rxmeet/gen.hpp"
#include "rxmeet/intersect.hpp"
#include "rxmeet/nfa.hpp"
#include "rxmeet/ov.hpp"
#include "rxmeet/parse.hpp"
#include "rxmeet/scaling.hpp"

namespace {

using namespace rxmeet;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}


std::string show_verdict(Verdict v) {
  return v == Verdict::NonEmpty ? "NONEMPTY" : "EMPTY";
}

std::string fmt(double value, const char* spec = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, value);
  return buf;
}

int cmd_classify(const std::string& file) {
  NodePtr n = parse(read_file(file));
  TypeDescriptor t = classify(n);
  std::string coercions;
  for (const Coercion& c : coercible_types(n)) {
    if (!coercions.empty()) coercions += ',';
    coercions += type_name(c.type);
  }
  if (coercions.empty()) coercions = "-";
  std::cout << "type=" << type_name(t) << " depth=" << t.depth
            << " homogeneous=" << (t.homogeneous ? "true" : "false")
            << " coercions=" << coercions << "\n";
  return 0;
}

int cmd_intersect(const std::string& file_a, const std::string& file_b,
                  bool force_baseline, bool check_witness, bool exitcode,
                  std::uint64_t budget) {
  NodePtr a = parse(read_file(file_a));
  NodePtr b = parse(read_file(file_b));
  ProductLimits limits{budget};
  auto t0 = std::chrono::steady_clock::now();
  Answer ans = dispatch(a, b, force_baseline, limits);
  auto t1 = std::chrono::steady_clock::now();
  std::cout << "verdict=" << show_verdict(ans.verdict) << " witness="
            << (ans.witness ? word_display(*ans.witness) : std::string("-"))
            << " algo=" << ans.algo << " size_m=" << ast_size(a)
            << " size_n=" << ast_size(b) << " seconds="
            << fmt(std::chrono::duration<double>(t1 - t0).count());
  if (check_witness) {
    bool ok = !ans.nonempty() ||
              (ans.witness && nfa_member(*ans.witness, a) &&
               nfa_member(*ans.witness, b));
    std::cout << " witness_ok=" << (ok ? "true" : "false");
  }
  std::cout << "\n";
  if (exitcode) return ans.nonempty() ? 0 : 1;
  return 0;
}

int cmd_member(const std::string& file, const std::string& word_text,
               bool exitcode) {
  NodePtr n = parse(read_file(file));
  Word w = word_from_text(word_text);
  bool in = nfa_member(w, n);
  std::cout << "member=" << (in ? "true" : "false") << " word=" << word_display(w)
            << "\n";
  if (exitcode) return in ? 0 : 1;
  return 0;
}

int cmd_reduce(const std::string& ov_file, const std::string& out_a,
               const std::string& out_b) {
  OvInstance inst = read_ov_file(ov_file);
  NormalizeResult norm = normalize_instance(inst);
  if (const auto* triv = std::get_if<TriviallyDecided>(&norm)) {
    std::string pair = "-";
    if (triv->pair)
      pair = std::to_string(triv->pair->first) + "," +
             std::to_string(triv->pair->second);
    std::cout << "trivial=true verdict="
              << (triv->nonempty ? "NONEMPTY" : "EMPTY") << " pair=" << pair
              << "\n";
    return 0;
  }
  Reduction red = build_reduction(std::get<NormalizedOv>(norm));
  write_file(out_a, render(red.a) + "\n");
  write_file(out_b, render(red.b) + "\n");
  std::cout << "trivial=false file_a=" << out_a << " file_b=" << out_b
            << " size_a=" << red.size_a << " size_b=" << red.size_b
            << " dollars_a=" << red.dollars_a << " dollars_b_min="
            << red.dollars_b_min << " dollars_b_max=" << red.dollars_b_max
            << "\n";
  return 0;
}

int cmd_verify(const std::string& ov_file, std::uint64_t budget) {
  OvInstance inst = read_ov_file(ov_file);
  VerifyReport rep = verify_reduction(inst, ProductLimits{budget});
  std::string status = rep.status == VerifyReport::Status::Pass   ? "PASS"
                       : rep.status == VerifyReport::Status::Fail ? "FAIL"
                                                                  : "Inconclusive";
  std::string pair = "-";
  if (rep.bruteforce_pair)
    pair = std::to_string(rep.bruteforce_pair->first) + "," +
           std::to_string(rep.bruteforce_pair->second);
  std::cout << "status=" << status
            << " trivial=" << (rep.trivial ? "true" : "false")
            << " product=" << (rep.product_nonempty ? "NONEMPTY" : "EMPTY")
            << " bruteforce=" << pair << " witness_len="
            << (rep.witness ? std::to_string(rep.witness->size())
                            : std::string("-"))
            << " pairs_visited=" << rep.pairs_visited
            << " size_a=" << rep.size_a << " size_b=" << rep.size_b << "\n";
  if (rep.status == VerifyReport::Status::Pass) return 0;
  if (rep.status == VerifyReport::Status::Fail) return 1;
  return 3;
}

int cmd_genov(int m, int n, int d, const std::string& out,
              std::uint64_t seed, bool plant) {
  OvInstance inst = gen_ov_instance(m, n, d, seed, plant);
  write_file(out, write_ov_text(inst));
  std::cout << "file=" << out << " m=" << m << " n=" << n << " d=" << d
            << " planted=" << (plant ? "true" : "false") << " seed=" << seed
            << "\n";
  return 0;
}

int cmd_bench(const std::string& route, std::vector<std::size_t> sizes,
              int trials, std::uint64_t seed, const std::string& csv_path) {
  std::ofstream csv;
  std::ostream* csv_os = nullptr;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) throw std::invalid_argument("cannot write file: " + csv_path);
    write_csv_header(csv);
    csv_os = &csv;
  }
  std::vector<std::string> routes;
  if (route == "all")
    routes = scaling_route_ids();
  else
    routes.push_back(route);
  for (const std::string& r : routes) {
    std::vector<std::size_t> use = sizes;
    if (use.empty())
      use = is_baseline_route(r) ? default_baseline_sizes()
                                 : default_linear_sizes();
    ScalingReport rep = run_scaling(r, use, trials, seed, csv_os);
    std::cout << "route=" << r << " slope=" << fmt(rep.slope, "%.3f")
              << " stderr=" << fmt(rep.slope_stderr, "%.3f")
              << " points=" << rep.points << " warnings=" << rep.warnings.size()
              << "\n";
    for (const std::string& w : rep.warnings)
      std::cerr << "warning: route " << r << ": " << w << "\n";
  }
  return 0;
}

int cmd_selftest(std::uint64_t count, std::uint64_t seed) {
  for (std::uint64_t i = 0; i < count; ++i) {
    OraclePair p = gen_oracle_pair(i, seed);
    Answer fast = dispatch(p.a, p.b);
    Answer base = dispatch(p.a, p.b, /*force_baseline=*/true);
    bool witness_ok = true;
    for (const Answer* ans : {&fast, &base}) {
      if (!ans->nonempty()) continue;
      witness_ok = witness_ok && ans->witness &&
                   nfa_member(*ans->witness, p.a) &&
                   nfa_member(*ans->witness, p.b);
    }
    if (fast.verdict != base.verdict || !witness_ok) {
      std::cout << "mismatch index=" << i << " seed=" << seed
                << " a_type=" << p.a_type << " b_type=" << p.b_type
                << " a=" << render(p.a) << " b=" << render(p.b)
                << " fast=" << show_verdict(fast.verdict) << "/" << fast.algo
                << " base=" << show_verdict(base.verdict)
                << " witness_ok=" << (witness_ok ? "true" : "false") << "\n";
      return 1;
    }
  }
  std::cout << count << "/" << count << " agree\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "regexp intersection nonemptiness: linear routes for tractable "
      "type pairs, product baseline otherwise, plus an orthogonal-vectors "
      "reduction generator"};
  app.require_subcommand(1);
  int exit_code = 0;

  // classify
  std::string cl_file;
  auto* cl = app.add_subcommand("classify", "print type, depth and coercions");
  cl->add_option("file", cl_file, "regexp file")->required();
  cl->callback([&] { exit_code = cmd_classify(cl_file); });

  // intersect
  std::string in_a, in_b;
  bool in_force = false, in_witness = false, in_exit = false;
  std::uint64_t in_budget = ProductLimits{}.max_pairs;
  auto* in = app.add_subcommand("intersect", "decide L(a) ∩ L(b) = ∅?");
  in->add_option("file_a", in_a, "left regexp file")->required();
  in->add_option("file_b", in_b, "right regexp file")->required();
  in->add_flag("--force-baseline", in_force, "skip the routing table");
  in->add_flag("--witness", in_witness, "re-check the witness by membership");
  in->add_flag("--exitcode", in_exit, "exit 0 NONEMPTY / 1 EMPTY");
  in->add_option("--budget", in_budget, "max product state pairs");
  in->callback([&] {
    exit_code = cmd_intersect(in_a, in_b, in_force, in_witness, in_exit,
                              in_budget);
  });

  // member
  std::string mb_file, mb_word;
  bool mb_exit = false;
  auto* mb = app.add_subcommand("member", "test one word for membership");
  mb->add_option("file", mb_file, "regexp file")->required();
  mb->add_option("word", mb_word, "word (letters, #id; <epsilon> for ε)")
      ->required();
  mb->add_flag("--exitcode", mb_exit, "exit 0 member / 1 non-member");
  mb->callback([&] { exit_code = cmd_member(mb_file, mb_word, mb_exit); });

  // reduce
  std::string rd_ov, rd_a, rd_b;
  auto* rd = app.add_subcommand(
      "reduce", "build the regexp pair for an orthogonal-vectors instance");
  rd->add_option("ov_file", rd_ov, "OV instance file")->required();
  rd->add_option("out_a", rd_a, "output file, ∘+ side")->required();
  rd->add_option("out_b", rd_b, "output file, ∘| side")->required();
  rd->callback([&] { exit_code = cmd_reduce(rd_ov, rd_a, rd_b); });

  // verify
  std::string vf_ov;
  std::uint64_t vf_budget = ProductLimits{}.max_pairs;
  auto* vf = app.add_subcommand(
      "verify", "check the reduction against brute force on one instance");
  vf->add_option("ov_file", vf_ov, "OV instance file")->required();
  vf->add_option("--budget", vf_budget, "max product state pairs");
  vf->callback([&] { exit_code = cmd_verify(vf_ov, vf_budget); });

  // genov
  int gv_m = 0, gv_n = 0, gv_d = 0;
  std::string gv_out;
  std::uint64_t gv_seed = 1;
  bool gv_plant = false;
  auto* gv = app.add_subcommand("genov", "write a random OV instance");
  gv->add_option("m", gv_m, "rows in A")->required();
  gv->add_option("n", gv_n, "rows in B")->required();
  gv->add_option("d", gv_d, "dimension")->required();
  gv->add_option("out", gv_out, "output file")->required();
  gv->add_option("--seed", gv_seed, "random seed");
  gv->add_flag("--plant", gv_plant, "force one orthogonal pair");
  gv->callback([&] {
    exit_code = cmd_genov(gv_m, gv_n, gv_d, gv_out, gv_seed, gv_plant);
  });

  // bench
  std::string bn_route = "all";
  std::vector<std::size_t> bn_sizes;
  int bn_trials = 5;
  std::uint64_t bn_seed = 1;
  std::string bn_csv;
  auto* bn = app.add_subcommand("bench", "fit log-log runtime slopes");
  bn->add_option("--route", bn_route, "route id or 'all'");
  bn->add_option("--sizes", bn_sizes, "size ladder override")->delimiter(',');
  bn->add_option("--trials", bn_trials, "timed trials per size (median)");
  bn->add_option("--seed", bn_seed, "random seed");
  bn->add_option("--csv", bn_csv, "write per-trial rows to this file");
  bn->callback([&] {
    exit_code = cmd_bench(bn_route, bn_sizes, bn_trials, bn_seed, bn_csv);
  });

  // selftest
  std::uint64_t st_count = 10000, st_seed = 1;
  auto* st = app.add_subcommand(
      "selftest", "random pairs: routed verdict vs product baseline");
  st->add_option("--count", st_count, "number of pairs");
  st->add_option("--seed", st_seed, "random seed");
  st->callback([&] { exit_code = cmd_selftest(st_count, st_seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const rxmeet::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const rxmeet::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 4;
  }
  return exit_code;
}
