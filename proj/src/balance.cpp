#include <algorithm>
#include <map>
#include <set>

#include "figureqa/qa.hpp"
#include "figureqa/rng.hpp"

namespace figureqa {

std::vector<QAPair> balance(std::vector<QAPair> pairs, std::uint64_t seed) {
  std::map<int, std::vector<std::size_t>> by_template;
  for (std::size_t i = 0; i < pairs.size(); ++i) by_template[pairs[i].template_id].push_back(i);

  std::vector<bool> keep(pairs.size(), true);
  for (const auto& [template_id, members] : by_template) {
    std::vector<std::size_t> yes, no;
    for (auto i : members) (pairs[i].answer ? yes : no).push_back(i);
    if (yes.size() == no.size()) continue;

    const bool drop_yes = yes.size() > no.size();
    const auto& majority = drop_yes ? yes : no;
    const auto& minority = drop_yes ? no : yes;
    std::set<int> figures_with_sibling;
    for (auto i : minority) figures_with_sibling.insert(pairs[i].figure_id);

    std::vector<std::size_t> unpaired, paired;
    for (auto i : majority) (figures_with_sibling.count(pairs[i].figure_id) ? paired : unpaired).push_back(i);

    Rng rng(hash64(seed, static_cast<std::uint64_t>(template_id)));
    rng.shuffle(std::span<std::size_t>(unpaired));
    rng.shuffle(std::span<std::size_t>(paired));
    std::size_t excess = majority.size() - minority.size();
    for (auto* pool : {&unpaired, &paired})
      for (std::size_t k = 0; k < pool->size() && excess > 0; ++k, --excess) keep[(*pool)[k]] = false;
  }

  std::vector<QAPair> out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (keep[i]) out.push_back(std::move(pairs[i]));
  std::stable_sort(out.begin(), out.end(), [](const QAPair& a, const QAPair& b) {
    return std::tie(a.figure_id, a.template_id, a.answer) < std::tie(b.figure_id, b.template_id, b.answer);
  });
  return out;
}

}  // namespace figureqa
