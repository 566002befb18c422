#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hilbgap/hilbgap.h"

namespace {

enum Exit { ok = 0, failure = 1, bad_input = 2, capped = 3 };

int exit_for(hm_status s) {
  switch (s) {
    case HM_OK:
      return ok;
    case HM_INVALID_INPUT:
    case HM_NOT_POSITIVE:
    case HM_NOT_HOMOGENEOUS:
    case HM_DIMENSION_MISMATCH:
      return bad_input;
    case HM_CAP_EXCEEDED:
    case HM_OVERFLOW:
    case HM_NOT_STABILIZED:
      return capped;
    default:
      return failure;
  }
}

struct InputError {
  std::string message;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputError{"cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int fail(hm_status s) {
  std::fprintf(stderr, "hilbgap: %s: %s\n", hm_status_name(s), hm_last_error());
  return exit_for(s);
}

// Prints a returned string (also when a cap produced a partial report).
int emit(hm_status s, char* out) {
  if (out) {
    std::fputs(out, stdout);
    hm_string_free(out);
  }
  if (s != HM_OK) return fail(s);
  return ok;
}

class Monoid {
 public:
  ~Monoid() { hm_monoid_free(q_); }
  hm_status load(const std::string& path) { return hm_monoid_from_json(slurp(path).c_str(), &q_); }
  hm_monoid* get() const { return q_; }
  hm_monoid** slot() { return &q_; }

 private:
  hm_monoid* q_ = nullptr;
};

void print_criterion(int id, const char* name, int passed, const char* detail, double seconds, void*) {
  std::printf("%s %d %s: %s (%.1fs)\n", passed ? "PASS" : "FAIL", id, name, detail, seconds);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series of affine monoids and their normalizations"};
  app.require_subcommand(1);

  hm_options opts;
  hm_options_init(&opts);
  std::string format = "json";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--degree-bound,-D", opts.degree_bound, "fixed top degree D");
    sub->add_option("--window,-W", opts.window, "trailing zero differences required to accept a numerator");
    sub->add_option("--margin", opts.margin, "infer hole families through D minus this");
    sub->add_option("--degree-limit", opts.degree_limit, "ceiling for the automatically grown D");
    sub->add_option("--point-cap", opts.point_cap, "largest slice held in memory");
    sub->add_option("--cycle-cap", opts.cycle_cap, "odd cycles enumerated before giving up");
    sub->add_option("--certificate-bound", opts.certificate_bound, "degree through which a Hilbert basis is checked");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  std::string input;
  struct Kind {
    const char* name;
    const char* help;
    hm_report_kind kind;
  };
  const Kind kinds[] = {
      {"hilb", "counts and h-polynomials", HM_REPORT_HILB},
      {"normalize", "Hilbert basis, normality, spanning", HM_REPORT_NORMALIZE},
      {"holes", "hole slices, families, S2 verdict, depth estimate", HM_REPORT_HOLES},
      {"compare", "numerator degrees of the monoid and its normalization", HM_REPORT_COMPARE},
  };
  std::vector<std::pair<CLI::App*, hm_report_kind>> reports;
  for (const auto& k : kinds) {
    CLI::App* sub = app.add_subcommand(k.name, k.help);
    sub->add_option("input", input, "monoid JSON file (default stdin)");
    add_common(sub);
    reports.emplace_back(sub, k.kind);
  }

  std::string graph;
  CLI::App* edge = app.add_subcommand("edge-ring", "edge monoid of a graph, exceptional pairs, normalization");
  edge->add_option("--graph,input", graph, "graph JSON file (default stdin)");
  add_common(edge);

  std::string left, right;
  CLI::App* join = app.add_subcommand("join", "join of two monoids");
  join->add_option("a", left, "first monoid JSON file")->required();
  join->add_option("b", right, "second monoid JSON file")->required();
  join->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string family_name;
  std::int64_t k = -1, m = -1, n = -1;
  CLI::App* family = app.add_subcommand("family", "named families: gk (--k), rm (--m), veronese (--n)");
  family->add_option("name", family_name)->required()->check(CLI::IsMember({"gk", "rm", "veronese"}));
  family->add_option("--k", k);
  family->add_option("--m", m);
  family->add_option("--n", n);
  family->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  CLI::App* check = app.add_subcommand("paper-check", "reproduce the published examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : bad_input;
  }
  opts.text = format == "text";

  try {
    for (const auto& [sub, kind] : reports) {
      if (!sub->parsed()) continue;
      Monoid q;
      if (hm_status s = q.load(input); s != HM_OK) return fail(s);
      char* out = nullptr;
      hm_status s = hm_report(q.get(), kind, &opts, &out);
      return emit(s, out);
    }
    if (edge->parsed()) {
      char* out = nullptr;
      hm_status s = hm_edge_ring_report(slurp(graph).c_str(), &opts, &out);
      return emit(s, out);
    }
    if (join->parsed()) {
      Monoid a, b, j;
      if (hm_status s = a.load(left); s != HM_OK) return fail(s);
      if (hm_status s = b.load(right); s != HM_OK) return fail(s);
      if (hm_status s = hm_monoid_join(a.get(), b.get(), j.slot()); s != HM_OK) return fail(s);
      char* out = nullptr;
      hm_status s = hm_monoid_to_json(j.get(), opts.text, &out);
      return emit(s, out);
    }
    if (family->parsed()) {
      const std::int64_t param = family_name == "gk" ? k : family_name == "rm" ? m : n;
      const char* flag = family_name == "gk" ? "--k" : family_name == "rm" ? "--m" : "--n";
      if (param < 0) {
        std::fprintf(stderr, "hilbgap: family %s needs %s\n", family_name.c_str(), flag);
        return bad_input;
      }
      Monoid q;
      if (hm_status s = hm_monoid_from_family(family_name.c_str(), param, q.slot()); s != HM_OK) return fail(s);
      char* out = nullptr;
      hm_status s = hm_monoid_to_json(q.get(), opts.text, &out);
      return emit(s, out);
    }
    if (check->parsed()) {
      int failed = 0;
      hm_status s = hm_paper_check(print_criterion, nullptr, &failed);
      if (s == HM_CHECK_FAILED) {
        std::fprintf(stderr, "hilbgap: %d criteria failed\n", failed);
        return failure;
      }
      if (s != HM_OK) return fail(s);
      return ok;
    }
  } catch (const InputError& e) {
    std::fprintf(stderr, "hilbgap: %s\n", e.message.c_str());
    return bad_input;
  }
  return failure;
}
