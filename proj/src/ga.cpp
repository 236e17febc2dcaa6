#include <algorithm>
#include <cmath>
#include <numeric>

#include "swath/errors.hpp"
#include "swath/random.hpp"
#include "swath/router.hpp"

namespace swath {

namespace {

struct Chromosome {
    std::vector<int> order;
    std::vector<int> choices;
    double fitness = 0.0;
};

void validate(const GAConfig& c) {
    if (c.population < 2) throw InvalidSpecError("GA population must be at least 2");
    if (c.generations < 0) throw InvalidSpecError("GA generations must be non-negative");
    if (c.tournament_size < 1) throw InvalidSpecError("GA tournament size must be positive");
    auto prob = [](double p, const char* name) {
        if (!(p >= 0.0 && p <= 1.0)) throw InvalidSpecError(std::string("GA ") + name + " must lie in [0, 1]");
    };
    prob(c.elite_fraction, "elite fraction");
    prob(c.p_mut_order, "order mutation rate");
    prob(c.p_mut_choice, "choice mutation rate");
    prob(c.p_crossover, "crossover rate");
    if (!(c.lambda_turns >= 0.0) || !std::isfinite(c.lambda_turns)) throw InvalidSpecError("GA turn weight must be non-negative");
}

// Order crossover: a slice of the first parent, remaining genes in the
// second parent's order starting after the slice.
std::vector<int> order_crossover(const std::vector<int>& p1, const std::vector<int>& p2, Rng& rng) {
    const int n = static_cast<int>(p1.size());
    if (n < 2) return p1;
    int lo = rng.index(n), hi = rng.index(n);
    if (lo > hi) std::swap(lo, hi);
    std::vector<int> child(static_cast<std::size_t>(n), -1);
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    for (int k = lo; k <= hi; ++k) {
        child[static_cast<std::size_t>(k)] = p1[static_cast<std::size_t>(k)];
        taken[static_cast<std::size_t>(p1[static_cast<std::size_t>(k)])] = 1;
    }
    int pos = (hi + 1) % n;
    for (int k = 0; k < n; ++k) {
        const int gene = p2[static_cast<std::size_t>((hi + 1 + k) % n)];
        if (taken[static_cast<std::size_t>(gene)]) continue;
        child[static_cast<std::size_t>(pos)] = gene;
        pos = (pos + 1) % n;
    }
    return child;
}

}  // namespace

double ga_fitness(std::span<const std::vector<SweepCandidate>> table, std::span<const int> order,
                  std::span<const int> choices, double lambda_turns) {
    return plan_cost(table, order, choices, CostParams{lambda_turns});
}

GlobalPlan ga_route(std::span<const std::vector<SweepCandidate>> table, const GAConfig& config) {
    validate(config);
    const int n = static_cast<int>(table.size());
    for (const auto& row : table)
        if (row.empty()) throw IncompleteMatrixError("a partition has no sweep candidates");
    if (n == 0) return {};

    // Dense lookups so fitness evaluation stays allocation free.
    std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        offset[static_cast<std::size_t>(i) + 1] = offset[static_cast<std::size_t>(i)] + static_cast<int>(table[static_cast<std::size_t>(i)].size());
    const auto ks = static_cast<std::size_t>(offset.back());
    std::vector<const SweepCandidate*> slot(ks);
    for (int i = 0; i < n; ++i)
        for (std::size_t j = 0; j < table[static_cast<std::size_t>(i)].size(); ++j)
            slot[static_cast<std::size_t>(offset[static_cast<std::size_t>(i)]) + j] = &table[static_cast<std::size_t>(i)][j];
    std::vector<double> local(ks), link(ks * ks);
    for (std::size_t a = 0; a < ks; ++a) {
        local[a] = slot[a]->length + config.lambda_turns * slot[a]->turns;
        for (std::size_t b = 0; b < ks; ++b) link[a * ks + b] = connector_cost(slot[a]->exit, slot[b]->entry);
    }
    auto evaluate = [&](Chromosome& c) {
        double total = 0.0;
        std::size_t prev = ks;
        for (int p : c.order) {
            const auto s = static_cast<std::size_t>(offset[static_cast<std::size_t>(p)] + c.choices[static_cast<std::size_t>(p)]);
            total += local[s];
            if (prev != ks) total += link[prev * ks + s];
            prev = s;
        }
        c.fitness = total;
    };
    auto count_of = [&](int p) { return static_cast<int>(table[static_cast<std::size_t>(p)].size()); };

    Rng rng(config.seed);
    const int pop_size = config.population;
    std::vector<Chromosome> pop(static_cast<std::size_t>(pop_size));
    for (Chromosome& c : pop) {
        c.order.resize(static_cast<std::size_t>(n));
        std::iota(c.order.begin(), c.order.end(), 0);
        rng.shuffle(c.order.begin(), c.order.end());
        c.choices.resize(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) c.choices[static_cast<std::size_t>(p)] = rng.index(count_of(p));
        evaluate(c);
    }

    auto by_fitness = [](const Chromosome& a, const Chromosome& b) { return a.fitness < b.fitness; };
    const int elites = std::max(1, static_cast<int>(std::lround(config.elite_fraction * pop_size)));
    Chromosome best = *std::min_element(pop.begin(), pop.end(), by_fitness);

    auto tournament = [&]() -> const Chromosome& {
        int pick = rng.index(pop_size);
        for (int t = 1; t < config.tournament_size; ++t) {
            const int other = rng.index(pop_size);
            if (pop[static_cast<std::size_t>(other)].fitness < pop[static_cast<std::size_t>(pick)].fitness) pick = other;
        }
        return pop[static_cast<std::size_t>(pick)];
    };

    std::vector<Chromosome> next;
    next.reserve(static_cast<std::size_t>(pop_size));
    for (int gen = 0; gen < config.generations; ++gen) {
        std::stable_sort(pop.begin(), pop.end(), by_fitness);
        next.assign(pop.begin(), pop.begin() + std::min(elites, pop_size));
        while (static_cast<int>(next.size()) < pop_size) {
            const Chromosome& a = tournament();
            const Chromosome& b = tournament();
            Chromosome child;
            if (rng.chance(config.p_crossover)) {
                child.order = order_crossover(a.order, b.order, rng);
                child.choices.resize(static_cast<std::size_t>(n));
                for (int p = 0; p < n; ++p)
                    child.choices[static_cast<std::size_t>(p)] =
                        rng.chance(0.5) ? a.choices[static_cast<std::size_t>(p)] : b.choices[static_cast<std::size_t>(p)];
            } else {
                child.order = a.order;
                child.choices = a.choices;
            }
            if (n >= 2 && rng.chance(config.p_mut_order)) {
                const int i = rng.index(n);
                int j = rng.index(n - 1);
                if (j >= i) ++j;
                std::swap(child.order[static_cast<std::size_t>(i)], child.order[static_cast<std::size_t>(j)]);
            }
            if (rng.chance(config.p_mut_choice)) {
                const int p = rng.index(n);
                child.choices[static_cast<std::size_t>(p)] = rng.index(count_of(p));
            }
            evaluate(child);
            if (child.fitness < best.fitness) best = child;
            next.push_back(std::move(child));
        }
        pop.swap(next);
    }

    GlobalPlan plan = assemble_plan(table, std::move(best.order), std::move(best.choices), CostParams{config.lambda_turns});
    return plan;
}

}  // namespace swath
