#include <fstream>
#include <iostream>

#include "cocycle_lab/hopf.hpp"
#include "cocycle_lab/verify.hpp"

using namespace cocycle_lab;

int main() {
  const VerificationReport report = verify_paper();
  for (const auto& [criterion, ok] : report.by_criterion())
    std::cout << "criterion " << criterion << " [" << (ok ? "PASS" : "FAIL") << "] " << criterion_title(criterion) << '\n';
  for (const auto& c : report.claims)
    if (!c.pass) std::cout << "  failed " << c.id << ": " << c.detail << '\n';
  std::cout << report.passed() << " claims passed, " << report.failed() << " failed\n";

  std::ofstream("acceptance_report.txt") << report.to_text();
  std::ofstream crosscheck("delta_crosscheck.txt");
  for (int n : {2, 3, 5}) crosscheck << prop53_delta_crosscheck(n, root_of_unity(n, 1)).to_string() << '\n';

  return report.by_criterion().size() == kCriteriaCount && report.all_pass() ? 0 : 1;
}
