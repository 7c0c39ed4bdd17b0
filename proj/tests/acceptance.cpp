// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "criteria.hpp"

namespace {

struct Criterion {
  const char* name;
  std::function<wedder::criteria::Outcome()> run;
};

}  // namespace

int main() {
  namespace c = wedder::criteria;
  const std::vector<Criterion> criteria = {
      {"golden-table-q200", c::golden_table},
      {"sl23-sl25-decompositions", c::known_decompositions},
      {"never-critical", c::never_critical_groups},
      {"property-efg-tower", c::property_splitting},
      {"property-dual-forms", c::property_dual_forms},
      {"property-local-support", c::property_support},
      {"property-dimension-audit", c::property_dimensions},
      {"property-cyclotomic-vs-general", c::property_cyclotomic},
      {"property-quotient-minimality", c::property_minimality},
      {"property-r-invariance", c::property_r_invariance},
      {"oracle-order-24", c::tiny_order_oracle},
      {"enumerate-q-10000", c::enumeration_scale},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    c::Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %-32s %s\n", out.pass ? "PASS" : "FAIL", cr.name, out.detail.c_str());
    std::fflush(stdout);
    failures += !out.pass;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
