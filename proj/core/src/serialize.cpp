#include "chevk1/serialize.hpp"

namespace chevk1 {

namespace {

RingDescPtr scalar_descriptor(const RingDescPtr &ring) {
    RingDescPtr d = ring;
    while (!d->is_scalar())
        d = d->base;
    return d;
}

Root root_from_json(const json &j) {
    if (!j.is_array())
        throw parse_error("root must be an integer array");
    Root r;
    for (const auto &c : j)
        r.push_back(c.get<int>());
    return r;
}

LetterKind kind_from_string(const std::string &s) {
    if (s == "x")
        return LetterKind::X;
    if (s == "w")
        return LetterKind::W;
    if (s == "h")
        return LetterKind::H;
    throw parse_error("unknown letter kind '" + s + "'");
}

const char *kind_to_string(LetterKind k) {
    switch (k) {
    case LetterKind::X:
        return "x";
    case LetterKind::W:
        return "w";
    default:
        return "h";
    }
}

} // namespace

json element_to_json(const RingElement &e) {
    const RingDescPtr &ring = e.descriptor();
    if (ring->is_scalar())
        return e.to_string();
    RingDescPtr base = scalar_descriptor(ring);
    json out = json::object();
    for (const auto &[mono, coeff] : e.terms())
        out[monomial_to_string(*ring, mono)] =
            RingElement::from_fraction(base, coeff.num, coeff.den).to_string();
    return out;
}

RingElement element_from_json(RingDescPtr ring, const json &j) {
    if (j.is_string())
        return RingElement::parse(ring, j.get<std::string>());
    if (j.is_number_integer())
        return RingElement::from_int(ring, Int(j.get<long long>()));
    if (!j.is_object())
        throw parse_error("ring element must be a string or monomial map");
    RingDescPtr base = scalar_descriptor(ring);
    std::map<Monomial, Coeff, GradedLex> terms;
    for (auto it = j.begin(); it != j.end(); ++it) {
        Monomial m = monomial_parse(*ring, it.key());
        Coeff c =
            RingElement::parse(base, it.value().get<std::string>()).scalar_value();
        terms[std::move(m)] = c;
    }
    return RingElement(std::move(ring), std::move(terms));
}

json word_to_json(const GeneratorWord &w) {
    json out = json::array();
    for (const Letter &l : w.letters) {
        json jl = {{"kind", kind_to_string(l.kind)},
                   {"root", l.root},
                   {"scalar", element_to_json(l.scalar)}};
        if (!l.tag.empty())
            jl["tag"] = l.tag;
        out.push_back(std::move(jl));
    }
    return out;
}

GeneratorWord word_from_json(RingDescPtr ring, const std::string &rep,
                             const json &j) {
    const json &arr = j.is_object() && j.contains("letters") ? j["letters"] : j;
    if (!arr.is_array())
        throw parse_error("word must be an array of letters");
    GeneratorWord w{rep, {}};
    for (const auto &jl : arr) {
        Letter l;
        l.kind = kind_from_string(jl.at("kind").get<std::string>());
        l.root = root_from_json(jl.at("root"));
        l.scalar = element_from_json(ring, jl.at("scalar"));
        if (jl.contains("tag"))
            l.tag = jl["tag"].get<std::string>();
        w.letters.push_back(std::move(l));
    }
    return w;
}

DiagramPtr parse_rep(const std::string &label) {
    auto colon = label.find(':');
    if (colon == std::string::npos || colon + 2 >= label.size() ||
        label[colon + 1] != 'w')
        throw parse_error("representation label must look like 'E6:w1'");
    int fundamental = 0;
    try {
        fundamental = std::stoi(label.substr(colon + 2));
    } catch (const std::exception &) {
        throw parse_error("bad fundamental-weight index in '" + label + "'");
    }
    return WeightDiagram::build(RootSystem::build(label.substr(0, colon)),
                                fundamental);
}

json matrix_to_json(const GroupElement &g) {
    json rows = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            rows.push_back(g.at(i, j).to_string());
    return {{"rep", g.diagram()->label()},
            {"ring", g.ring()->to_string()},
            {"matrix", std::move(rows)}};
}

GroupElement matrix_from_json(const json &j) {
    DiagramPtr d = parse_rep(j.at("rep").get<std::string>());
    RingDescPtr ring = RingDescriptor::parse(j.at("ring").get<std::string>());
    const json &rows = j.at("matrix");
    std::size_t n = d->size();
    if (!rows.is_array() || rows.size() != n * n)
        throw parse_error("matrix must have " + std::to_string(n * n) +
                          " row-major entries");
    GroupElement g = GroupElement::identity(d, ring);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            g.at(i, k) =
                RingElement::parse(ring, rows[i * n + k].get<std::string>());
    g.clear_provenance();
    return g;
}

json diagram_to_json(const WeightDiagram &d) {
    json nodes = json::array();
    for (const Weight &w : d.weights())
        nodes.push_back(w);
    json edges = json::array();
    for (const DiagramEdge &e : d.edges())
        edges.push_back({e.parent + 1, e.child + 1, e.label});
    return {{"rep", d.label()}, {"nodes", std::move(nodes)},
            {"edges", std::move(edges)}};
}

json vector_to_json(const std::vector<RingElement> &v) {
    json coords = json::array();
    for (const RingElement &e : v)
        coords.push_back(element_to_json(e));
    json out = {{"coordinates", std::move(coords)}};
    if (!v.empty())
        out["ring"] = v.front().descriptor()->to_string();
    return out;
}

std::vector<RingElement> vector_from_json(RingDescPtr ring, const json &j) {
    const json &arr =
        j.is_object() && j.contains("coordinates") ? j["coordinates"] : j;
    if (!arr.is_array())
        throw parse_error("vector must be an array of ring elements");
    std::vector<RingElement> v;
    for (const auto &e : arr)
        v.push_back(element_from_json(ring, e));
    return v;
}

json split_to_json(const ParabolicSplit &s) {
    if (!s.v.provenance() || !s.u.provenance())
        throw internal_postcondition_failure("split factors lack words");
    return {{"v", word_to_json(*s.v.provenance())},
            {"g1", matrix_to_json(s.g1)},
            {"u", word_to_json(*s.u.provenance())}};
}

json certificate_to_json(const MembershipCertificate &c) {
    return {{"word", word_to_json(c.word)}, {"target", matrix_to_json(c.target)}};
}

json report_to_json(const std::vector<CheckReport> &reports) {
    json out = json::array();
    for (const CheckReport &r : reports) {
        json jr = {{"check", r.check},
                   {"status", r.pass ? "pass" : "fail"},
                   {"elapsed_ms", r.elapsed_ms}};
        if (!r.detail.empty())
            jr["detail"] = r.detail;
        out.push_back(std::move(jr));
    }
    return out;
}

} // namespace chevk1
