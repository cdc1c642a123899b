#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chevk1/errors.hpp"

namespace chevk1 {

/// Root as integer coefficients over the fundamental basis (Bourbaki order).
using Root = std::vector<int>;

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Simply-laced root system (A_l, D_l, E6, E7) generated by reflection
/// closure from the simple roots.
class RootSystem {
  public:
    /// label: "A3", "D5", "E6", "E7". Throws unsupported_type otherwise.
    static RootSystemPtr build(const std::string &label);

    const std::string &label() const { return label_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>> &cartan() const { return cartan_; }

    const std::vector<Root> &roots() const { return roots_; }
    const std::vector<Root> &positive_roots() const { return positive_; }
    bool is_root(const Root &r) const { return root_set_.count(r) > 0; }
    bool is_positive(const Root &r) const;

    /// alpha_i in Bourbaki numbering, i in [1, rank].
    Root simple(int i) const;
    const Root &maximal_root() const { return maximal_; }

    /// <b, a^vee> = b^T C a (simply-laced normalization).
    int pairing(const Root &b, const Root &a) const;
    /// s_a(v) = v - <v, a^vee> a. Throws not_a_root unless a is a root.
    Root reflect(const Root &a, const Root &v) const;
    /// Sum of simple-root coefficients.
    int height(const Root &r) const;

  private:
    std::string label_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> roots_;
    std::vector<Root> positive_;
    std::set<Root> root_set_;
    Root maximal_;
};

/// Closed subsystem Delta of an ambient system, given by chosen simple
/// generators (fundamental roots kept, plus extras such as the maximal root).
struct SubsystemEmbedding {
    RootSystemPtr ambient;
    std::vector<Root> generators;
    std::vector<Root> members;
    std::string label;

    bool contains(const Root &r) const;
    /// Ambient roots outside the subsystem.
    std::vector<Root> complement() const;
};

/// Delta generated by the kept simple roots (1-based Bourbaki indices) and
/// any extra roots; members are the addition-closure inside the ambient set.
SubsystemEmbedding subsystem(RootSystemPtr ambient,
                             const std::vector<int> &keep_simple,
                             const std::vector<Root> &extra = {},
                             const std::string &label = "");

/// Sequence of reflections; apply() composes them right to left.
using WeylWord = std::vector<Root>;

Root apply_weyl_word(const RootSystem &sys, const WeylWord &word,
                     const Root &r);

/// Word over the subsystem's simple generators mapping source to target, by
/// breadth-first orbit search with lexicographic tie-breaking; nullopt when
/// target is outside the orbit.
std::optional<WeylWord> find_weyl_conjugator(const SubsystemEmbedding &delta,
                                             const Root &source,
                                             const Root &target);

} // namespace chevk1
