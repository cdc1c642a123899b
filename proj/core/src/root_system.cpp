#include "chevk1/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace chevk1 {

namespace {

std::vector<std::vector<int>> cartan_matrix(char family, int rank) {
    std::vector<std::pair<int, int>> edges; // 0-based
    switch (family) {
    case 'A':
        if (rank < 1)
            throw unsupported_type("A_l needs l >= 1");
        for (int i = 0; i + 1 < rank; ++i)
            edges.emplace_back(i, i + 1);
        break;
    case 'D':
        if (rank < 3)
            throw unsupported_type("D_l needs l >= 3");
        for (int i = 0; i + 2 < rank; ++i)
            edges.emplace_back(i, i + 1);
        edges.emplace_back(rank - 3, rank - 1);
        break;
    case 'E':
        if (rank != 6 && rank != 7)
            throw unsupported_type("only E6 and E7 are supported");
        // Bourbaki: chain 1-3-4-5-6(-7), branch 2-4
        edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
        if (rank == 7)
            edges.emplace_back(5, 6);
        break;
    default:
        throw unsupported_type(std::string("unsupported family ") + family);
    }
    std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i)
        c[i][i] = 2;
    for (auto [a, b] : edges)
        c[a][b] = c[b][a] = -1;
    return c;
}

} // namespace

RootSystemPtr RootSystem::build(const std::string &label) {
    if (label.size() < 2)
        throw unsupported_type(label);
    char family = label[0];
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (...) {
        throw unsupported_type(label);
    }
    auto sys = std::make_shared<RootSystem>();
    sys->label_ = label;
    sys->rank_ = rank;
    sys->cartan_ = cartan_matrix(family, rank);

    // reflection closure of the simple roots
    std::set<Root> closed;
    std::deque<Root> queue;
    for (int i = 0; i < rank; ++i) {
        Root a(rank, 0);
        a[i] = 1;
        closed.insert(a);
        queue.push_back(a);
    }
    while (!queue.empty()) {
        Root r = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank; ++i) {
            int p = 0;
            for (int j = 0; j < rank; ++j)
                p += sys->cartan_[i][j] * r[j];
            Root s = r;
            s[i] -= p;
            if (closed.insert(s).second)
                queue.push_back(s);
        }
    }
    sys->roots_.assign(closed.begin(), closed.end());
    sys->root_set_ = std::move(closed);
    for (const Root &r : sys->roots_)
        if (sys->is_positive(r))
            sys->positive_.push_back(r);

    // maximal root: the unique positive root that no simple root extends
    for (const Root &r : sys->positive_) {
        bool top = true;
        for (int i = 0; i < rank && top; ++i) {
            Root s = r;
            s[i] += 1;
            if (sys->root_set_.count(s))
                top = false;
        }
        if (top) {
            if (!sys->maximal_.empty())
                throw internal_postcondition_failure("maximal root not unique");
            sys->maximal_ = r;
        }
    }
    return sys;
}

bool RootSystem::is_positive(const Root &r) const {
    for (int c : r)
        if (c > 0)
            return true;
        else if (c < 0)
            return false;
    return false;
}

Root RootSystem::simple(int i) const {
    Root a(rank_, 0);
    a.at(i - 1) = 1;
    return a;
}

int RootSystem::pairing(const Root &b, const Root &a) const {
    int p = 0;
    for (int i = 0; i < rank_; ++i) {
        if (!a[i])
            continue;
        for (int j = 0; j < rank_; ++j)
            p += b[j] * cartan_[i][j] * a[i];
    }
    return p;
}

Root RootSystem::reflect(const Root &a, const Root &v) const {
    if (!is_root(a))
        throw not_a_root("reflection axis is not a root");
    int p = pairing(v, a);
    Root out = v;
    for (int i = 0; i < rank_; ++i)
        out[i] -= p * a[i];
    return out;
}

int RootSystem::height(const Root &r) const {
    int h = 0;
    for (int c : r)
        h += c;
    return h;
}

// ---------------------------------------------------------------------------

bool SubsystemEmbedding::contains(const Root &r) const {
    return std::binary_search(members.begin(), members.end(), r);
}

std::vector<Root> SubsystemEmbedding::complement() const {
    std::vector<Root> out;
    for (const Root &r : ambient->roots())
        if (!contains(r))
            out.push_back(r);
    return out;
}

SubsystemEmbedding subsystem(RootSystemPtr ambient,
                             const std::vector<int> &keep_simple,
                             const std::vector<Root> &extra,
                             const std::string &label) {
    SubsystemEmbedding emb;
    emb.ambient = ambient;
    emb.label = label;
    for (int i : keep_simple)
        emb.generators.push_back(ambient->simple(i));
    for (const Root &r : extra) {
        if (!ambient->is_root(r))
            throw not_a_root("subsystem generator is not a root");
        emb.generators.push_back(r);
    }
    for (std::size_t i = 0; i < emb.generators.size(); ++i)
        for (std::size_t j = i + 1; j < emb.generators.size(); ++j) {
            Root neg = emb.generators[j];
            for (int &c : neg)
                c = -c;
            if (emb.generators[i] == emb.generators[j] ||
                emb.generators[i] == neg)
                throw not_closed("collinear subsystem generators");
        }

    std::set<Root> members;
    for (const Root &g : emb.generators) {
        members.insert(g);
        Root neg = g;
        for (int &c : neg)
            c = -c;
        members.insert(neg);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Root> snapshot(members.begin(), members.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                Root sum = snapshot[i];
                for (int k = 0; k < ambient->rank(); ++k)
                    sum[k] += snapshot[j][k];
                if (ambient->is_root(sum) && members.insert(sum).second)
                    grew = true;
            }
    }
    emb.members.assign(members.begin(), members.end());
    return emb;
}

Root apply_weyl_word(const RootSystem &sys, const WeylWord &word,
                     const Root &r) {
    Root out = r;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = sys.reflect(*it, out);
    return out;
}

std::optional<WeylWord> find_weyl_conjugator(const SubsystemEmbedding &delta,
                                             const Root &source,
                                             const Root &target) {
    const RootSystem &sys = *delta.ambient;
    if (!sys.is_root(source) || !sys.is_root(target))
        throw not_a_root("conjugator endpoints must be roots");
    if (source == target)
        return WeylWord{};

    std::map<Root, std::pair<Root, Root>> parent; // node -> (reflection, from)
    std::vector<Root> layer{source};
    std::set<Root> seen{source};
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end());
        std::vector<Root> next;
        for (const Root &r : layer)
            for (const Root &g : delta.generators) {
                Root s = sys.reflect(g, r);
                if (seen.insert(s).second) {
                    parent.emplace(s, std::make_pair(g, r));
                    if (s == target) {
                        WeylWord word;
                        Root cur = target;
                        while (cur != source) {
                            auto &[refl, from] = parent.at(cur);
                            word.push_back(refl);
                            cur = from;
                        }
                        return word;
                    }
                    next.push_back(s);
                }
            }
        layer = std::move(next);
    }
    return std::nullopt;
}

} // namespace chevk1
