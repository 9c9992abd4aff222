#include "young/report.hpp"

#include <stdexcept>

namespace young {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kUnstable: return "unstable";
  }
  return "fail";
}

void CheckReport::add_mismatch(Witness w) {
  ++mismatch_count;
  if (mismatches.size() < kWitnessCap) mismatches.push_back(std::move(w));
}

void CheckReport::add_boundary(Witness w) {
  ++boundary_count;
  if (w.oracle != w.characterization) ++boundary_disagreements;
  if (boundary.size() < kWitnessCap) boundary.push_back(std::move(w));
}

void CheckReport::settle() {
  if (mismatch_count > 0)
    verdict = Verdict::kFail;
  else if (stability_flips && *stability_flips > 0)
    verdict = Verdict::kUnstable;
  else
    verdict = Verdict::kPass;
}

const CheckReport& PropositionReport::primary() const { return variant(primary_variant); }

const CheckReport& PropositionReport::variant(const std::string& name) const {
  for (const auto& r : variants)
    if (r.variant == name) return r;
  throw std::out_of_range("no reading named '" + name + "' in " + this->name);
}

}  // namespace young
