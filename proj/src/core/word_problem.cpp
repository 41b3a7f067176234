#include "word_problem.hpp"

#include <unordered_map>
#include <unordered_set>

namespace amenlab {

FolnerOracle search_oracle(const Group& computable, Budget budget) {
  return [computable, budget](std::uint64_t n, const CodeSet& D) {
    auto r = search_folner(computable, D, n, budget, FolnerForm::kStrict);
    if (!r.certificate) {
      throw Error(ErrorCode::kPreconditionFailed,
                  "Følner oracle found no set within its budget");
    }
    return r.certificate->F;
  };
}

WordProblemResult decide_mult_from_folner(const Group& ce,
                                          const FolnerOracle& folner, Code n1,
                                          Code n2, Code n3, Budget budget) {
  const Code ns[3] = {n1, n2, n3};
  const CodeSet F = make_set(folner(4, make_set({n1, n2, n3})));
  if (F.empty()) throw Error(ErrorCode::kEmptySet, "Følner oracle returned an empty set");
  const std::size_t k = F.size();
  std::unordered_map<Code, std::size_t> idx;
  for (std::size_t i = 0; i < k; ++i) idx[F[i]] = i;

  // sigma[l][i] = j records n_l f_i = f_j.
  std::vector<std::vector<std::optional<std::size_t>>> sigma(
      3, std::vector<std::optional<std::size_t>>(k));
  WordProblemResult out;
  out.k = k;
  StepMeter meter(budget);
  MultTCursor cursor(ce);

  auto done = [&] {
    auto m = std::min({out.sigma_sizes[0], out.sigma_sizes[1], out.sigma_sizes[2]});
    return 4 * m > 3 * k;
  };
  while (!done()) {
    if (!meter.charge()) {
      out.steps = meter.limit();
      return out;
    }
    auto t = cursor.next();
    if (!t) continue;
    auto i = idx.find(t->y);
    auto j = idx.find(t->z);
    if (i == idx.end() || j == idx.end()) continue;
    for (int l = 0; l < 3; ++l) {
      if (t->x == ns[l] && !sigma[l][i->second]) {
        sigma[l][i->second] = j->second;
        ++out.sigma_sizes[l];
      }
    }
  }
  out.steps = meter.used();

  // i -n2-> j1 -n1-> j2 and i -n3-> j2.
  for (std::size_t i = 0; i < k; ++i) {
    auto j1 = sigma[1][i];
    if (!j1) continue;
    auto j2 = sigma[0][*j1];
    if (j2 && sigma[2][i] == j2) ++out.witnesses;
  }
  out.equal = out.witnesses > 0;
  return out;
}

}  // namespace amenlab
