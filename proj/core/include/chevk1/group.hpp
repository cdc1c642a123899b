#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevk1/ring.hpp"
#include "chevk1/weight_diagram.hpp"

namespace chevk1 {

enum class LetterKind { X, W, H };

/// One generator: x_root(scalar), w_root(scalar) or h_root(scalar).
/// W/H scalars must be units. `tag` is free-form provenance used by
/// membership certificates (e.g. "E(Delta,R)"); empty by default.
struct Letter {
    LetterKind kind = LetterKind::X;
    Root root;
    RingElement scalar;
    std::string tag;

    Letter inverse() const;
};

struct GeneratorWord {
    std::string rep; // e.g. "E6:w1"
    std::vector<Letter> letters;

    GeneratorWord inverse() const; // reversed word of letter inverses
};

/// Sparse support of the nilpotent part of x_alpha: gen_x(alpha, xi) is the
/// identity plus xi*sign at each (to, from) with weight(to) = weight(from) + alpha.
struct PatternEntry {
    std::size_t to;
    std::size_t from;
    int sign; // +1 or -1
};

/// Cached per (diagram, root). Simple roots use the all-plus edge action;
/// negatives are the transposed pattern; other roots are defined by
/// conjugating the alpha_1 pattern with the shortest Weyl word (BFS,
/// lexicographic tie-break) taking alpha_1 to the root.
const std::vector<PatternEntry> &root_pattern(const WeightDiagram &d,
                                              const Root &alpha);

class GroupElement {
  public:
    GroupElement() = default;
    static GroupElement identity(DiagramPtr diagram, RingDescPtr ring);

    const DiagramPtr &diagram() const { return diagram_; }
    const RingDescPtr &ring() const { return ring_; }
    std::size_t dim() const { return n_; }

    const RingElement &at(std::size_t row, std::size_t col) const {
        return m_.at(row * n_ + col);
    }
    RingElement &at(std::size_t row, std::size_t col) {
        return m_.at(row * n_ + col);
    }

    const std::optional<GeneratorWord> &provenance() const { return word_; }
    void clear_provenance() { word_.reset(); }

    bool operator==(const GroupElement &o) const;
    bool is_identity() const;

    friend GroupElement realize(DiagramPtr diagram, RingDescPtr ring,
                                const GeneratorWord &word);
    friend GroupElement multiply(const GroupElement &a, const GroupElement &b);
    friend GroupElement invert(const GroupElement &a);

  private:
    DiagramPtr diagram_;
    RingDescPtr ring_;
    std::size_t n_ = 0;
    std::vector<RingElement> m_; // row-major n x n
    std::optional<GeneratorWord> word_;
};

/// x_alpha(xi): identity plus xi on the alpha-pattern. Throws not_a_root.
GroupElement gen_x(DiagramPtr diagram, const Root &alpha,
                   const RingElement &xi);
/// w_alpha(eps) = x_alpha(eps) x_{-alpha}(-eps^{-1}) x_alpha(eps); eps a unit.
GroupElement gen_w(DiagramPtr diagram, const Root &alpha,
                   const RingElement &eps);
/// h_alpha(eps) = w_alpha(eps) w_alpha(-1); eps a unit.
GroupElement gen_h(DiagramPtr diagram, const Root &alpha,
                   const RingElement &eps);
/// z_alpha(xi, zeta) = x_{-alpha}(-zeta) x_alpha(xi) x_{-alpha}(zeta).
GroupElement z_gen(DiagramPtr diagram, const Root &alpha,
                   const RingElement &xi, const RingElement &zeta);

/// Exact matrix of the word (left-to-right product); provenance = word.
GroupElement realize(DiagramPtr diagram, RingDescPtr ring,
                     const GeneratorWord &word);

GroupElement multiply(const GroupElement &a, const GroupElement &b);
/// Word reversal when provenance exists; adjugate for dim <= 6 otherwise.
GroupElement invert(const GroupElement &a);
/// Matrix times coordinate vector (indexed by diagram nodes).
std::vector<RingElement> act(const GroupElement &a,
                             const std::vector<RingElement> &v);
/// Replay a word on a vector without materializing matrices.
std::vector<RingElement> act_word(const WeightDiagram &d,
                                  const GeneratorWord &word,
                                  std::vector<RingElement> v);

} // namespace chevk1
