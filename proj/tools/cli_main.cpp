// Command-line front end for the verification suites: suite selection,
// truncation configuration, and report emission (human text or JSON).

#include <sl213/suites.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr const char* kVersion = "1.0.0";

nlohmann::json report_to_json(const sl213::SuiteReport& rep) {
  nlohmann::json doc;
  doc["version"] = kVersion;
  doc["config"] = {
      {"truncation_margin", rep.config.truncation_margin},
      {"suites", rep.config.suites_enabled.empty()
                     ? sl213::suite_names()
                     : rep.config.suites_enabled},
      {"jobs", rep.config.parallelism},
      {"self_test", rep.config.self_test},
  };
  doc["results"] = nlohmann::json::array();
  for (const auto& r : rep.results) {
    nlohmann::json jr;
    jr["name"] = r.name;
    jr["suite"] = r.suite;
    jr["status"] = sl213::to_string(r.status);
    if (r.symbolic)
      jr["truncation"] = "symbolic";
    else
      jr["truncation"] = r.truncation_used;
    if (!r.witness.empty()) jr["witness"] = r.witness;
    jr["ms"] = r.elapsed_ms;
    doc["results"].push_back(std::move(jr));
  }
  doc["summary"] = {{"pass", rep.n_pass},
                    {"fail", rep.n_fail},
                    {"inconclusive", rep.n_inconclusive}};
  return doc;
}

void print_text_report(const sl213::SuiteReport& rep) {
  std::string current;
  for (const auto& r : rep.results) {
    if (r.suite != current) {
      current = r.suite;
      std::printf("== %s ==\n", current.c_str());
    }
    std::printf("  %-34s %-12s", r.name.c_str(),
                sl213::to_string(r.status));
    if (r.symbolic)
      std::printf(" [symbolic]      ");
    else
      std::printf(" [certified %3ld]", r.truncation_used);
    std::printf(" %8.1f ms", r.elapsed_ms);
    if (!r.witness.empty()) std::printf("  %s", r.witness.c_str());
    std::printf("\n");
  }
  std::printf("summary: %d pass, %d fail, %d inconclusive\n", rep.n_pass,
              rep.n_fail, rep.n_inconclusive);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Certifies the invariant-theoretic and modular-form identities of the "
      "six-dimensional SL(2,13) representation attached to the order-13 "
      "theta constants"};

  std::vector<std::string> suites;
  long truncation = 30;
  int jobs = int(std::max(1u, std::thread::hardware_concurrency()));
  bool json_out = false, list = false, self_test = false;

  app.add_option("--suite", suites,
                 "suite to run (repeatable; default: all)")
      ->check(CLI::IsMember(sl213::suite_names()));
  app.add_option("--truncation", truncation,
                 "integral q-power margin beyond each valuation (>= 5)")
      ->check(CLI::Range(5L, 1000L));
  app.add_option("--jobs", jobs, "parallelism cap")->check(CLI::Range(1, 256));
  app.add_flag("--json", json_out, "emit a JSON report on stdout");
  app.add_flag("--list", list, "list suite names and exit");
  app.add_flag("--self-test", self_test,
               "include negative controls (they report fail by design, so "
               "the exit status is nonzero when they work)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints usage/help
    return code == 0 ? 0 : 2;
  }

  if (list) {
    for (const auto& s : sl213::suite_names()) std::printf("%s\n", s.c_str());
    return 0;
  }

  sl213::SuiteConfig cfg;
  cfg.truncation_margin = truncation;
  cfg.suites_enabled = suites;
  cfg.parallelism = jobs;
  cfg.self_test = self_test;

  sl213::SuiteReport rep;
  try {
    rep = sl213::run_all(cfg);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }

  if (json_out)
    std::cout << report_to_json(rep).dump(2) << std::endl;
  else
    print_text_report(rep);

  return rep.all_pass() ? 0 : 1;
}
