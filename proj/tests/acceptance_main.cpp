#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  hololab::Limits limits;
  unsigned threads = 4;
  std::vector<int> only;
  app.add_option("--threads", threads, "worker threads");
  app.add_option("--only", only, "run only these criterion ids");
  CLI11_PARSE(app, argc, argv);
  limits.threads = threads;
  const auto results = hololab::acceptance::run(limits, std::cout, only);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? EXIT_SUCCESS : EXIT_FAILURE;
}
