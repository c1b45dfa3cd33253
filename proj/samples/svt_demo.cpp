// Builds I = (x1,x2,x3) ∩ (y1,y2,y3) in k[x1..x4, y1..y4] and prints both
// sides of the second vanishing theorem together with the cohomology table.

#include <iostream>

#include "loccoh/loccoh.hpp"

int main() {
  using namespace loccoh;
  auto ctx = std::make_shared<const VariableContext>(
      std::vector<std::string>{"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"});
  const auto I = intersection_of_primes(ctx, {VarSet::of({0, 1, 2}), VarSet::of({4, 5, 6})});

  const auto table = local_cohomology_table(I);
  const auto report = svt_check(I, {}, &table);

  std::cout << "generators: " << I.generator_count() << '\n'
            << "Spec° connected: " << std::boolalpha << report.verdicts.connected << '\n'
            << "H^7 vanishes:    " << report.verdicts.vanishing_top_minus_one << '\n'
            << "cd(I, S) = " << report.verdicts.cd << '\n';
  for (const auto& e : table.entries()) {
    std::cout << "  H^" << e.i << " pattern {";
    bool first = true;
    for (const auto& name : ctx->names_of(e.pattern)) {
      std::cout << (first ? "" : ",") << name;
      first = false;
    }
    std::cout << "} dim " << e.dim << '\n';
  }
  return report.verdicts.agreement ? 0 : 1;
}
