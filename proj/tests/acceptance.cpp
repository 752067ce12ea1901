// Acceptance runner: one PASS/FAIL line per criterion, exit 0 iff all pass.
//   raagtk_acceptance [--seed N] [--only 1,2,...]

#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "raagtk/selftest/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"raagtk acceptance criteria"};
  std::uint64_t seed = 0;
  std::vector<int> only;
  app.add_option("--seed", seed, "seed for the sampled criteria");
  app.add_option("--only", only, "criterion ids to run")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const auto results = raagtk::verify::run_acceptance(
      seed, std::set<int>(only.begin(), only.end()),
      [](const raagtk::verify::CriterionResult& r) { std::cout << raagtk::verify::format(r) << std::endl; });
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
