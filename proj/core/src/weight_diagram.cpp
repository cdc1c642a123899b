#include "chevk1/weight_diagram.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace chevk1 {

namespace {

bool minuscule_pair(const RootSystem &sys, int fundamental) {
    char family = sys.label()[0];
    switch (family) {
    case 'A':
        return fundamental == 1;
    case 'D':
        return fundamental == 1;
    case 'E':
        return (sys.rank() == 6 && fundamental == 1) ||
               (sys.rank() == 7 && fundamental == 7);
    default:
        return false;
    }
}

int depth_sum(const Weight &w) {
    return std::accumulate(w.begin(), w.end(), 0);
}

// node order: highest weight first, then by total depth, lex within a depth
bool canonical_less(const Weight &a, const Weight &b) {
    int sa = depth_sum(a), sb = depth_sum(b);
    if (sa != sb)
        return sa < sb;
    return a < b;
}

} // namespace

std::vector<Weight> weight_orbit(RootSystemPtr system, int fundamental) {
    const RootSystem &sys = *system;
    if (fundamental < 1 || fundamental > sys.rank() ||
        !minuscule_pair(sys, fundamental))
        throw not_minuscule(sys.label() + ":w" + std::to_string(fundamental));

    const auto &cartan = sys.cartan();
    const int rank = sys.rank();
    std::set<Weight> seen;
    std::deque<Weight> queue;
    Weight top(rank, 0);
    seen.insert(top);
    queue.push_back(top);
    while (!queue.empty()) {
        Weight d = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank; ++i) {
            int p = (i == fundamental - 1) ? 1 : 0;
            for (int j = 0; j < rank; ++j)
                p -= cartan[i][j] * d[j];
            if (p < -1 || p > 1)
                throw internal_postcondition_failure(
                    "weight pairing out of range in minuscule orbit");
            if (p == 0)
                continue;
            Weight next = d;
            next[i] += p; // lambda - p*alpha_i, in depth coordinates
            if (seen.insert(next).second)
                queue.push_back(next);
        }
    }
    std::vector<Weight> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

DiagramPtr WeightDiagram::build(RootSystemPtr system, int fundamental) {
    auto d = std::make_shared<WeightDiagram>();
    d->system_ = system;
    d->fundamental_ = fundamental;
    d->weights_ = weight_orbit(system, fundamental);
    for (std::size_t i = 0; i < d->weights_.size(); ++i)
        d->index_.emplace(d->weights_[i], i);

    const int rank = system->rank();
    for (std::size_t i = 0; i < d->weights_.size(); ++i)
        for (int k = 0; k < rank; ++k) {
            Weight child = d->weights_[i];
            child[k] += 1;
            auto it = d->index_.find(child);
            if (it != d->index_.end())
                d->edges_.push_back({i, it->second, k + 1});
        }
    return d;
}

std::size_t WeightDiagram::index_of(const Weight &w) const {
    auto it = index_.find(w);
    if (it == index_.end())
        throw no_such_element("weight not in diagram");
    return it->second;
}

int WeightDiagram::pairing(std::size_t node, const Root &alpha) const {
    const auto &cartan = system_->cartan();
    const Weight &d = weights_.at(node);
    const int rank = system_->rank();
    int p = alpha.at(fundamental_ - 1);
    for (int i = 0; i < rank; ++i) {
        if (!alpha[i])
            continue;
        for (int j = 0; j < rank; ++j)
            p -= alpha[i] * cartan[i][j] * d[j];
    }
    return p;
}

std::optional<std::size_t> WeightDiagram::shift(std::size_t node,
                                                const Root &alpha) const {
    Weight w = weights_.at(node);
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] -= alpha[i];
    auto it = index_.find(w);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::vector<std::size_t>> level_decomposition(const WeightDiagram &d,
                                                          int pivot) {
    int max_level = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        max_level = std::max(max_level, d.level(i, pivot));
    std::vector<std::vector<std::size_t>> levels(max_level + 1);
    for (std::size_t i = 0; i < d.size(); ++i)
        levels[d.level(i, pivot)].push_back(i);
    return levels;
}

std::vector<std::size_t> suborbit(const WeightDiagram &d,
                                  const SubsystemEmbedding &delta,
                                  std::size_t seed) {
    std::set<std::size_t> seen{seed};
    std::deque<std::size_t> queue{seed};
    while (!queue.empty()) {
        std::size_t node = queue.front();
        queue.pop_front();
        for (const Root &g : delta.generators) {
            int p = d.pairing(node, g);
            if (!p)
                continue;
            Root step = g;
            for (int &c : step)
                c *= -p;
            auto next = d.shift(node, step); // s_g(lambda) = lambda - p*g
            if (!next)
                throw internal_postcondition_failure(
                    "reflection left the weight diagram");
            if (seen.insert(*next).second)
                queue.push_back(*next);
        }
    }
    return {seen.begin(), seen.end()};
}

std::string to_dot(const WeightDiagram &d) {
    std::ostringstream os;
    os << "digraph \"" << d.label() << "\" {\n  rankdir=TB;\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
        os << "  n" << i << " [label=\"" << i + 1 << " (";
        const Weight &w = d.weight(i);
        for (std::size_t j = 0; j < w.size(); ++j)
            os << (j ? "," : "") << w[j];
        os << ")\"];\n";
    }
    for (const DiagramEdge &e : d.edges())
        os << "  n" << e.parent << " -> n" << e.child << " [label=\"" << e.label
           << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace chevk1
