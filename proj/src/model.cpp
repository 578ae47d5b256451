#include "allsat/model.hpp"

#include <algorithm>

namespace allsat {

bool PartialModel::contains(Lit l) const {
  return std::find(literals.begin(), literals.end(), l) != literals.end();
}

bool PartialModel::consistent() const {
  for (size_t i = 0; i < literals.size(); ++i)
    for (size_t j = i + 1; j < literals.size(); ++j)
      if (literals[i].var() == literals[j].var() && literals[i] != literals[j])
        return false;
  return true;
}

bool PartialModel::satisfies(const CnfFormula& f) const {
  auto sat = [&](const std::vector<Lit>& lits) {
    for (Lit l : lits)
      if (contains(l)) return true;
    return false;
  };
  for (const Clause& c : f.clauses)
    if (!sat(c.lits)) return false;
  for (Lit u : f.units)
    if (!contains(u)) return false;
  return true;
}

std::vector<Lit> PartialModel::sorted_by_var() const {
  std::vector<Lit> out = literals;
  std::sort(out.begin(), out.end(),
            [](Lit a, Lit b) { return a.var() < b.var(); });
  return out;
}

}  // namespace allsat
