#include "chevk1/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace chevk1 {

namespace {

// --- pattern cache ---------------------------------------------------------

// Signed permutation: e_j -> sign[j] * e_perm[j]. The matrices of w_alpha(1)
// and their products have this shape in a minuscule weight basis.
struct SignedPerm {
    std::vector<std::size_t> perm;
    std::vector<int> sign;

    static SignedPerm id(std::size_t n) {
        SignedPerm p;
        p.perm.resize(n);
        p.sign.assign(n, 1);
        for (std::size_t i = 0; i < n; ++i)
            p.perm[i] = i;
        return p;
    }
};

SignedPerm compose(const SignedPerm &a, const SignedPerm &b) {
    SignedPerm out;
    std::size_t n = a.perm.size();
    out.perm.resize(n);
    out.sign.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.perm[j] = a.perm[b.perm[j]];
        out.sign[j] = b.sign[j] * a.sign[b.perm[j]];
    }
    return out;
}

// matrix of w_{alpha_i}(1): swaps each alpha_i-edge pair, e^parent -> -e^child
SignedPerm simple_w_perm(const WeightDiagram &d, int label) {
    SignedPerm p = SignedPerm::id(d.size());
    for (const DiagramEdge &e : d.edges())
        if (e.label == label) {
            p.perm[e.parent] = e.child;
            p.sign[e.parent] = -1;
            p.perm[e.child] = e.parent;
            p.sign[e.child] = 1;
        }
    return p;
}

std::vector<PatternEntry> transpose(const std::vector<PatternEntry> &p) {
    std::vector<PatternEntry> out;
    out.reserve(p.size());
    for (const PatternEntry &e : p)
        out.push_back({e.from, e.to, e.sign});
    return out;
}

std::vector<PatternEntry> conjugate(const std::vector<PatternEntry> &p,
                                    const SignedPerm &w) {
    std::vector<PatternEntry> out;
    out.reserve(p.size());
    for (const PatternEntry &e : p)
        out.push_back(
            {w.perm[e.to], w.perm[e.from], e.sign * w.sign[e.to] * w.sign[e.from]});
    return out;
}

std::optional<int> simple_index(const Root &alpha) {
    int idx = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0)
            continue;
        if (alpha[i] != 1 || idx)
            return std::nullopt;
        idx = static_cast<int>(i) + 1;
    }
    if (!idx)
        return std::nullopt;
    return idx;
}

std::vector<PatternEntry> build_pattern(const WeightDiagram &d,
                                        const Root &alpha) {
    const RootSystem &sys = *d.system();
    if (!sys.is_root(alpha))
        throw not_a_root("pattern requested for a non-root");

    if (auto i = simple_index(alpha)) {
        std::vector<PatternEntry> out;
        for (const DiagramEdge &e : d.edges())
            if (e.label == *i)
                out.push_back({e.parent, e.child, 1});
        return out;
    }
    Root neg = alpha;
    for (int &c : neg)
        c = -c;
    if (!sys.is_positive(alpha))
        return transpose(root_pattern(d, neg));

    // canonical definition: conjugate x_{alpha_1} by the shortest Weyl word
    std::vector<int> all(sys.rank());
    for (int i = 0; i < sys.rank(); ++i)
        all[i] = i + 1;
    static std::map<std::string, SubsystemEmbedding> full_cache;
    auto it = full_cache.find(sys.label());
    if (it == full_cache.end())
        it = full_cache.emplace(sys.label(), subsystem(d.system(), all)).first;
    auto word = find_weyl_conjugator(it->second, sys.simple(1), alpha);
    if (!word)
        throw internal_postcondition_failure("root outside the Weyl orbit");

    SignedPerm w = SignedPerm::id(d.size());
    // apply_weyl_word composes right to left; match it as matrices
    for (const Root &beta : *word) {
        auto bi = simple_index(beta);
        if (!bi)
            throw internal_postcondition_failure("non-simple conjugator letter");
        w = compose(w, simple_w_perm(d, *bi));
    }
    return conjugate(root_pattern(d, sys.simple(1)), w);
}

std::map<std::pair<std::string, Root>, std::vector<PatternEntry>> g_patterns;
std::mutex g_patterns_mutex;

// --- letter application ----------------------------------------------------

// left-multiply the row block by x_alpha(xi); safe in place since the
// pattern is square-zero in a minuscule representation
void apply_x(const WeightDiagram &d, const Root &alpha, const RingElement &xi,
             std::vector<RingElement> &m, std::size_t cols) {
    if (xi.is_zero())
        return;
    for (const PatternEntry &e : root_pattern(d, alpha)) {
        RingElement c = e.sign < 0 ? -xi : xi;
        for (std::size_t j = 0; j < cols; ++j) {
            const RingElement &src = m[e.from * cols + j];
            if (!src.is_zero())
                m[e.to * cols + j] = m[e.to * cols + j] + c * src;
        }
    }
}

void apply_letter(const WeightDiagram &d, const Letter &l,
                  std::vector<RingElement> &m, std::size_t cols) {
    switch (l.kind) {
    case LetterKind::X:
        apply_x(d, l.root, l.scalar, m, cols);
        return;
    case LetterKind::W: {
        auto inv = l.scalar.try_invert();
        if (!inv)
            throw not_a_unit("w-letter scalar is not a unit");
        Root neg = l.root;
        for (int &c : neg)
            c = -c;
        // w_a(e) = x_a(e) x_{-a}(-e^{-1}) x_a(e), applied right factor first
        apply_x(d, l.root, l.scalar, m, cols);
        apply_x(d, neg, -*inv, m, cols);
        apply_x(d, l.root, l.scalar, m, cols);
        return;
    }
    case LetterKind::H: {
        RingElement minus_one = -RingElement::one(l.scalar.descriptor());
        apply_letter(d, {LetterKind::W, l.root, minus_one, {}}, m, cols);
        apply_letter(d, {LetterKind::W, l.root, l.scalar, {}}, m, cols);
        return;
    }
    }
}

} // namespace

const std::vector<PatternEntry> &root_pattern(const WeightDiagram &d,
                                              const Root &alpha) {
    auto key = std::make_pair(d.label(), alpha);
    {
        std::lock_guard<std::mutex> lock(g_patterns_mutex);
        auto it = g_patterns.find(key);
        if (it != g_patterns.end())
            return it->second;
    }
    auto pattern = build_pattern(d, alpha); // may recurse into the cache
    std::lock_guard<std::mutex> lock(g_patterns_mutex);
    return g_patterns.emplace(std::move(key), std::move(pattern)).first->second;
}

Letter Letter::inverse() const {
    switch (kind) {
    case LetterKind::X:
        return {LetterKind::X, root, -scalar, tag};
    case LetterKind::W:
        return {LetterKind::W, root, -scalar, tag};
    case LetterKind::H: {
        auto inv = scalar.try_invert();
        if (!inv)
            throw not_a_unit("h-letter scalar is not a unit");
        return {LetterKind::H, root, *inv, tag};
    }
    }
    throw internal_postcondition_failure("bad letter kind");
}

GeneratorWord GeneratorWord::inverse() const {
    GeneratorWord out;
    out.rep = rep;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.letters.push_back(it->inverse());
    return out;
}

GroupElement GroupElement::identity(DiagramPtr diagram, RingDescPtr ring) {
    GroupElement g;
    g.diagram_ = diagram;
    g.ring_ = ring;
    g.n_ = diagram->size();
    g.m_.assign(g.n_ * g.n_, RingElement::zero(ring));
    for (std::size_t i = 0; i < g.n_; ++i)
        g.m_[i * g.n_ + i] = RingElement::one(ring);
    g.word_ = GeneratorWord{diagram->label(), {}};
    return g;
}

bool GroupElement::operator==(const GroupElement &o) const {
    if (!diagram_ || !o.diagram_ || diagram_->label() != o.diagram_->label())
        return false;
    if (!(*ring_ == *o.ring_))
        throw descriptor_mismatch("comparing elements over different rings");
    return m_ == o.m_;
}

bool GroupElement::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const RingElement &e = m_[i * n_ + j];
            if (i == j ? !e.is_one() : !e.is_zero())
                return false;
        }
    return true;
}

GroupElement realize(DiagramPtr diagram, RingDescPtr ring,
                     const GeneratorWord &word) {
    for (const Letter &l : word.letters)
        if (!(*l.scalar.descriptor() == *ring))
            throw descriptor_mismatch("letter scalar from a different ring");
    GroupElement g = GroupElement::identity(diagram, ring);
    // product L1 ... Lk applied to I: left-multiply from the last letter up
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        apply_letter(*diagram, *it, g.m_, g.n_);
    g.word_ = word;
    if (g.word_->rep.empty())
        g.word_->rep = diagram->label();
    return g;
}

GroupElement gen_x(DiagramPtr diagram, const Root &alpha,
                   const RingElement &xi) {
    return realize(diagram, xi.descriptor(),
                   {diagram->label(), {{LetterKind::X, alpha, xi, {}}}});
}

GroupElement gen_w(DiagramPtr diagram, const Root &alpha,
                   const RingElement &eps) {
    if (!eps.is_unit())
        throw not_a_unit("gen_w needs a unit scalar");
    return realize(diagram, eps.descriptor(),
                   {diagram->label(), {{LetterKind::W, alpha, eps, {}}}});
}

GroupElement gen_h(DiagramPtr diagram, const Root &alpha,
                   const RingElement &eps) {
    if (!eps.is_unit())
        throw not_a_unit("gen_h needs a unit scalar");
    return realize(diagram, eps.descriptor(),
                   {diagram->label(), {{LetterKind::H, alpha, eps, {}}}});
}

GroupElement z_gen(DiagramPtr diagram, const Root &alpha,
                   const RingElement &xi, const RingElement &zeta) {
    require_same_ring(xi, zeta);
    Root neg = alpha;
    for (int &c : neg)
        c = -c;
    return realize(diagram, xi.descriptor(),
                   {diagram->label(),
                    {{LetterKind::X, neg, -zeta, {}},
                     {LetterKind::X, alpha, xi, {}},
                     {LetterKind::X, neg, zeta, {}}}});
}

GroupElement multiply(const GroupElement &a, const GroupElement &b) {
    if (!a.diagram_ || !b.diagram_ || a.diagram_->label() != b.diagram_->label())
        throw descriptor_mismatch("multiplying elements of different representations");
    if (!(*a.ring_ == *b.ring_))
        throw descriptor_mismatch("multiplying elements over different rings");
    std::size_t n = a.n_;
    GroupElement out;
    out.diagram_ = a.diagram_;
    out.ring_ = a.ring_;
    out.n_ = n;
    out.m_.assign(n * n, RingElement::zero(a.ring_));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const RingElement &aik = a.m_[i * n + k];
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                const RingElement &bkj = b.m_[k * n + j];
                if (!bkj.is_zero())
                    out.m_[i * n + j] = out.m_[i * n + j] + aik * bkj;
            }
        }
    if (a.word_ && b.word_) {
        out.word_ = GeneratorWord{a.word_->rep, a.word_->letters};
        out.word_->letters.insert(out.word_->letters.end(),
                                  b.word_->letters.begin(),
                                  b.word_->letters.end());
    }
    return out;
}

namespace {

RingElement det_minor(const std::vector<RingElement> &m, std::size_t n,
                      std::vector<std::size_t> rows,
                      std::vector<std::size_t> cols) {
    if (rows.size() == 1)
        return m[rows[0] * n + cols[0]];
    RingElement acc = RingElement::zero(m[0].descriptor());
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const RingElement &pivot = m[rows[0] * n + cols[k]];
        if (pivot.is_zero())
            continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k)
                sub_cols.push_back(cols[j]);
        RingElement term = pivot * det_minor(m, n, sub_rows, sub_cols);
        acc = (k % 2) ? acc - term : acc + term;
    }
    return acc;
}

} // namespace

GroupElement invert(const GroupElement &a) {
    if (a.word_) {
        GroupElement out = realize(a.diagram_, a.ring_, a.word_->inverse());
        return out;
    }
    std::size_t n = a.n_;
    if (n > 6)
        throw unsupported_type("matrix inverse without provenance is limited to small dimensions");
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i)
        all[i] = i;
    RingElement det = det_minor(a.m_, n, all, all);
    auto det_inv = det.try_invert();
    if (!det_inv)
        throw not_a_unit("determinant is not a unit");
    GroupElement out;
    out.diagram_ = a.diagram_;
    out.ring_ = a.ring_;
    out.n_ = n;
    out.m_.assign(n * n, RingElement::zero(a.ring_));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j)
                    rows.push_back(k);
                if (k != i)
                    cols.push_back(k);
            }
            RingElement cof = n == 1 ? RingElement::one(a.ring_)
                                     : det_minor(a.m_, n, rows, cols);
            if ((i + j) % 2)
                cof = -cof;
            out.m_[i * n + j] = cof * *det_inv;
        }
    return out;
}

std::vector<RingElement> act(const GroupElement &a,
                             const std::vector<RingElement> &v) {
    if (v.size() != a.dim())
        throw descriptor_mismatch("vector length does not match the representation");
    std::vector<RingElement> out(a.dim(), RingElement::zero(a.ring()));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const RingElement &e = a.at(i, j);
            if (!e.is_zero() && !v[j].is_zero())
                out[i] = out[i] + e * v[j];
        }
    return out;
}

std::vector<RingElement> act_word(const WeightDiagram &d,
                                  const GeneratorWord &word,
                                  std::vector<RingElement> v) {
    if (v.size() != d.size())
        throw descriptor_mismatch("vector length does not match the representation");
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        apply_letter(d, *it, v, 1);
    return v;
}

} // namespace chevk1
