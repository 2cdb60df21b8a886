#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "homuce/corep.hpp"
#include "homuce/hom.hpp"
#include "homuce/text.hpp"

namespace homuce {

/// Named checks attached to a document: key -> scalar text, e.g. "center" -> "span{a1}".
using Expectations = std::map<std::string, std::string>;

struct CoRepBlock {
    std::vector<std::string> labels;
    Mat alpha_m;
    std::vector<Mat> lam;  // lam[i]: m -> e_i . m
    std::vector<Mat> rho;  // rho[i]: m -> m . e_i
    bool operator==(const CoRepBlock&) const = default;
};

struct HomBlock {
    std::string name, src, dst;
    Mat matrix;
    Expectations expect, reference;
    bool operator==(const HomBlock&) const = default;
};

struct CompositionBlock {
    std::string outer, inner;
    Expectations expect, reference;
    bool operator==(const CompositionBlock&) const = default;
};

/// One algebra with optional coefficients, homomorphisms out of it,
/// compositions of extensions and recorded expectations.
struct AlgebraDocument {
    std::string name;
    long field = 0;  // 0: rationals, d: Q(sqrt(d))
    Flavor flavor = Flavor::leibniz;
    std::vector<std::string> labels;
    std::string note;
    Mat structure;  // dim x dim^2
    Mat alpha;
    std::optional<CoRepBlock> corep;
    std::vector<HomBlock> homs;
    std::vector<CompositionBlock> compositions;
    Expectations expect, reference;
    bool operator==(const AlgebraDocument&) const = default;

    std::size_t dim() const { return labels.size(); }
};

namespace detail {

inline int line_of(const YAML::Node& n) { return n.Mark().line + 1; }
inline int col_of(const YAML::Node& n) { return n.Mark().column; }

[[noreturn]] inline void fail_at(const YAML::Node& n, const std::string& expected) {
    throw ParseError(expected, line_of(n), col_of(n) + 1);
}

inline std::string scalar_text(const YAML::Node& n, const std::string& what) {
    if (!n.IsScalar()) fail_at(n, what);
    return n.Scalar();
}

inline std::vector<std::string> string_list(const YAML::Node& n, const std::string& what) {
    if (!n.IsSequence()) fail_at(n, "a list of " + what);
    std::vector<std::string> out;
    for (const auto& e : n) out.push_back(scalar_text(e, what));
    return out;
}

inline std::size_t label_index(const std::vector<std::string>& labels, const YAML::Node& n) {
    const std::string l = scalar_text(n, "a basis label");
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l) return i;
    throw UnknownLabel(l, line_of(n), col_of(n) + 1);
}

inline Mat scalar_matrix(const YAML::Node& n, std::size_t rows, std::size_t cols, long field, const std::string& what) {
    if (!n.IsSequence()) fail_at(n, what + " as a list of rows");
    if (n.size() != rows)
        throw DimensionMismatch(what + " at line " + std::to_string(line_of(n)) + ": expected " +
                                std::to_string(rows) + " rows, found " + std::to_string(n.size()));
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const YAML::Node row = n[i];
        if (!row.IsSequence()) fail_at(row, "a row of scalars");
        if (row.size() != cols)
            throw DimensionMismatch(what + " at line " + std::to_string(line_of(row)) + ": expected " +
                                    std::to_string(cols) + " entries per row, found " + std::to_string(row.size()));
        for (std::size_t j = 0; j < cols; ++j) {
            const YAML::Node e = row[j];
            m(i, j) = parse_scalar(scalar_text(e, "a scalar"), field, line_of(e), col_of(e));
        }
    }
    return m;
}

inline long parse_field(const YAML::Node& n) {
    const std::string s = scalar_text(n, "rational or quadratic(d)");
    if (s == "rational") return 0;
    if (s.rfind("quadratic(", 0) == 0 && s.back() == ')') {
        const std::string d = s.substr(10, s.size() - 11);
        try {
            std::size_t used = 0;
            const long v = std::stol(d, &used);
            if (used == d.size()) {
                (void)Scalar::sqrt_of(v);  // rejects non square-free radicands
                return v;
            }
        } catch (const std::logic_error&) {
        }
    }
    fail_at(n, "rational or quadratic(d) with square-free d > 1");
}

inline Expectations parse_expectations(const YAML::Node& n) {
    if (!n.IsMap()) fail_at(n, "a map of expectations");
    Expectations out;
    for (const auto& kv : n) out[scalar_text(kv.first, "a key")] = scalar_text(kv.second, "a scalar value");
    return out;
}

inline void check_keys(const YAML::Node& n, const std::set<std::string>& allowed) {
    for (const auto& kv : n) {
        const std::string k = scalar_text(kv.first, "a key");
        if (!allowed.count(k)) {
            std::string list;
            for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
            fail_at(kv.first, "one of: " + list);
        }
    }
}

inline void check_unique(const std::vector<std::string>& labels, const YAML::Node& n) {
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) fail_at(n, "unique labels ('" + l + "' repeats)");
}

inline CoRepBlock parse_corep(const YAML::Node& n, const std::vector<std::string>& labels, long field) {
    if (!n.IsMap()) fail_at(n, "a corep map");
    check_keys(n, {"labels", "alpha_m", "lam", "rho"});
    if (!n["labels"]) fail_at(n, "corep key 'labels'");
    CoRepBlock c;
    c.labels = string_list(n["labels"], "module labels");
    check_unique(c.labels, n["labels"]);
    const std::size_t md = c.labels.size(), l = labels.size();
    c.alpha_m = n["alpha_m"] ? scalar_matrix(n["alpha_m"], md, md, field, "alpha_m") : Mat::identity(md);
    c.lam.assign(l, Mat(md, md));
    c.rho.assign(l, Mat(md, md));
    auto read = [&](const char* key, bool left) {
        if (!n[key]) return;
        const YAML::Node list = n[key];
        if (!list.IsSequence()) fail_at(list, std::string("a list of action triples under '") + key + "'");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& t : list) {
            if (!t.IsSequence() || t.size() != 3) fail_at(t, left ? "[x, m, value]" : "[m, x, value]");
            const std::size_t x = label_index(labels, left ? t[0] : t[1]);
            const std::size_t m = label_index(c.labels, left ? t[1] : t[0]);
            if (!seen.insert({x, m}).second) fail_at(t, "each action listed once");
            const YAML::Node v = t[2];
            const Vector val = parse_linear(scalar_text(v, "a linear combination"), c.labels, field, line_of(v), col_of(v));
            Mat& target = left ? c.lam[x] : c.rho[x];
            for (std::size_t k = 0; k < md; ++k) target(k, m) = val[k];
        }
    };
    read("lam", true);
    read("rho", false);
    return c;
}

inline AlgebraDocument parse_node(const YAML::Node& root, long default_field) {
    if (!root.IsMap()) fail_at(root, "a document map");
    check_keys(root, {"name", "field", "flavor", "labels", "note", "brackets", "alpha", "corep", "homs",
                      "compositions", "expect", "reference"});
    for (const char* k : {"name", "labels"})
        if (!root[k]) fail_at(root, std::string("key '") + k + "'");
    AlgebraDocument d;
    d.name = scalar_text(root["name"], "a name");
    d.field = root["field"] ? parse_field(root["field"]) : default_field;
    if (root["flavor"]) {
        const std::string f = scalar_text(root["flavor"], "leibniz or lie");
        if (f == "leibniz") {
            d.flavor = Flavor::leibniz;
        } else if (f == "lie") {
            d.flavor = Flavor::lie;
        } else {
            fail_at(root["flavor"], "leibniz or lie");
        }
    }
    d.labels = string_list(root["labels"], "basis labels");
    check_unique(d.labels, root["labels"]);
    if (root["note"]) d.note = scalar_text(root["note"], "a note");
    const std::size_t n = d.dim();
    d.structure = Mat(n, n * n);
    if (root["brackets"] && !root["brackets"].IsNull()) {
        const YAML::Node list = root["brackets"];
        if (!list.IsSequence()) fail_at(list, "a list of [x, y, value] brackets");
        std::set<std::size_t> seen;
        for (const auto& t : list) {
            if (!t.IsSequence() || t.size() != 3) fail_at(t, "[x, y, value]");
            const std::size_t i = label_index(d.labels, t[0]), j = label_index(d.labels, t[1]);
            if (!seen.insert(i * n + j).second) fail_at(t, "each bracket listed once");
            const YAML::Node v = t[2];
            d.structure.set_column(
                i * n + j, parse_linear(scalar_text(v, "a linear combination"), d.labels, d.field, line_of(v), col_of(v)));
        }
    }
    d.alpha = root["alpha"] ? scalar_matrix(root["alpha"], n, n, d.field, "alpha") : Mat::identity(n);
    if (root["corep"]) d.corep = parse_corep(root["corep"], d.labels, d.field);
    if (root["homs"]) {
        if (!root["homs"].IsSequence()) fail_at(root["homs"], "a list of homomorphisms");
        for (const auto& h : root["homs"]) {
            if (!h.IsMap()) fail_at(h, "a homomorphism map");
            check_keys(h, {"name", "src", "dst", "matrix", "expect", "reference"});
            for (const char* k : {"name", "dst", "matrix"})
                if (!h[k]) fail_at(h, std::string("homomorphism key '") + k + "'");
            HomBlock b;
            b.name = scalar_text(h["name"], "a name");
            b.src = h["src"] ? scalar_text(h["src"], "a name") : d.name;
            b.dst = scalar_text(h["dst"], "a name");
            const YAML::Node m = h["matrix"];
            if (!m.IsSequence()) fail_at(m, "matrix as a list of rows");
            const std::size_t rows = m.size();
            b.matrix = scalar_matrix(m, rows, n, d.field, "matrix of " + b.name);
            if (h["expect"]) b.expect = parse_expectations(h["expect"]);
            if (h["reference"]) b.reference = parse_expectations(h["reference"]);
            d.homs.push_back(std::move(b));
        }
    }
    if (root["compositions"]) {
        if (!root["compositions"].IsSequence()) fail_at(root["compositions"], "a list of compositions");
        for (const auto& c : root["compositions"]) {
            if (!c.IsMap()) fail_at(c, "a composition map");
            check_keys(c, {"outer", "inner", "expect", "reference"});
            if (!c["outer"] || !c["inner"]) fail_at(c, "keys 'outer' and 'inner'");
            CompositionBlock b;
            b.outer = scalar_text(c["outer"], "a homomorphism name");
            b.inner = scalar_text(c["inner"], "a homomorphism name");
            if (c["expect"]) b.expect = parse_expectations(c["expect"]);
            if (c["reference"]) b.reference = parse_expectations(c["reference"]);
            d.compositions.push_back(std::move(b));
        }
    }
    if (root["expect"]) d.expect = parse_expectations(root["expect"]);
    if (root["reference"]) d.reference = parse_expectations(root["reference"]);
    return d;
}

template <class F>
auto with_yaml_errors(F&& f) {
    try {
        return f();
    } catch (const YAML::ParserException& e) {
        throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
    } catch (const YAML::BadConversion& e) {
        throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
    }
}

}  // namespace detail

/// Every document of a (possibly multi-document) YAML stream.
inline std::vector<AlgebraDocument> parse_documents(const std::string& text, long default_field = 0) {
    return detail::with_yaml_errors([&] {
        std::vector<AlgebraDocument> out;
        for (const auto& node : YAML::LoadAll(text))
            if (!node.IsNull()) out.push_back(detail::parse_node(node, default_field));
        return out;
    });
}

inline AlgebraDocument parse_document(const std::string& text, long default_field = 0) {
    auto docs = parse_documents(text, default_field);
    if (docs.size() != 1) throw ParseError("exactly one document", 1, 1);
    return std::move(docs.front());
}

namespace detail {

inline void emit_matrix(YAML::Emitter& out, const Mat& m) {
    out << YAML::BeginSeq;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << YAML::Flow << YAML::BeginSeq;
        for (std::size_t j = 0; j < m.cols(); ++j) out << m(i, j).str();
        out << YAML::EndSeq;
    }
    out << YAML::EndSeq;
}

inline void emit_expectations(YAML::Emitter& out, const char* key, const Expectations& e) {
    if (e.empty()) return;
    out << YAML::Key << key << YAML::Value << YAML::BeginMap;
    for (const auto& [k, v] : e) out << YAML::Key << k << YAML::Value << v;
    out << YAML::EndMap;
}

inline void emit_document(YAML::Emitter& out, const AlgebraDocument& d) {
    const std::size_t n = d.dim();
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << d.name;
    out << YAML::Key << "field" << YAML::Value
        << (d.field == 0 ? std::string("rational") : "quadratic(" + std::to_string(d.field) + ")");
    out << YAML::Key << "flavor" << YAML::Value << to_string(d.flavor);
    out << YAML::Key << "labels" << YAML::Value << YAML::Flow << d.labels;
    if (!d.note.empty()) out << YAML::Key << "note" << YAML::Value << d.note;
    out << YAML::Key << "brackets" << YAML::Value << YAML::BeginSeq;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector v = d.structure.column(i * n + j);
            if (is_zero_vector(v)) continue;
            out << YAML::Flow << YAML::BeginSeq << d.labels[i] << d.labels[j] << format_linear(v, d.labels)
                << YAML::EndSeq;
        }
    out << YAML::EndSeq;
    out << YAML::Key << "alpha" << YAML::Value;
    emit_matrix(out, d.alpha);
    if (d.corep) {
        const CoRepBlock& c = *d.corep;
        out << YAML::Key << "corep" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "labels" << YAML::Value << YAML::Flow << c.labels;
        out << YAML::Key << "alpha_m" << YAML::Value;
        emit_matrix(out, c.alpha_m);
        for (int side = 0; side < 2; ++side) {
            out << YAML::Key << (side == 0 ? "lam" : "rho") << YAML::Value << YAML::BeginSeq;
            const auto& fam = side == 0 ? c.lam : c.rho;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t m = 0; m < c.labels.size(); ++m) {
                    const Vector v = fam[x].column(m);
                    if (is_zero_vector(v)) continue;
                    out << YAML::Flow << YAML::BeginSeq;
                    if (side == 0) {
                        out << d.labels[x] << c.labels[m];
                    } else {
                        out << c.labels[m] << d.labels[x];
                    }
                    out << format_linear(v, c.labels) << YAML::EndSeq;
                }
            out << YAML::EndSeq;
        }
        out << YAML::EndMap;
    }
    if (!d.homs.empty()) {
        out << YAML::Key << "homs" << YAML::Value << YAML::BeginSeq;
        for (const auto& h : d.homs) {
            out << YAML::BeginMap;
            out << YAML::Key << "name" << YAML::Value << h.name;
            out << YAML::Key << "src" << YAML::Value << h.src;
            out << YAML::Key << "dst" << YAML::Value << h.dst;
            out << YAML::Key << "matrix" << YAML::Value;
            emit_matrix(out, h.matrix);
            emit_expectations(out, "expect", h.expect);
            emit_expectations(out, "reference", h.reference);
            out << YAML::EndMap;
        }
        out << YAML::EndSeq;
    }
    if (!d.compositions.empty()) {
        out << YAML::Key << "compositions" << YAML::Value << YAML::BeginSeq;
        for (const auto& c : d.compositions) {
            out << YAML::BeginMap;
            out << YAML::Key << "outer" << YAML::Value << c.outer;
            out << YAML::Key << "inner" << YAML::Value << c.inner;
            emit_expectations(out, "expect", c.expect);
            emit_expectations(out, "reference", c.reference);
            out << YAML::EndMap;
        }
        out << YAML::EndSeq;
    }
    emit_expectations(out, "expect", d.expect);
    emit_expectations(out, "reference", d.reference);
    out << YAML::EndMap;
}

}  // namespace detail

/// Canonical text: fixed key order, brackets in basis order, zero brackets omitted.
inline std::string serialize(const AlgebraDocument& d) {
    YAML::Emitter out;
    detail::emit_document(out, d);
    return std::string(out.c_str()) + "\n";
}

inline std::string serialize(const std::vector<AlgebraDocument>& docs) {
    std::string s;
    for (std::size_t i = 0; i < docs.size(); ++i) s += (i ? "---\n" : "") + serialize(docs[i]);
    return s;
}

inline long field_of(const Mat& m) {
    for (const auto& x : m.entries())
        if (x.radicand() != 0) return x.radicand();
    return 0;
}

inline AlgebraDocument to_document(const HomAlgebra& L) {
    AlgebraDocument d;
    d.name = L.name();
    d.field = field_of(L.structure()) != 0 ? field_of(L.structure()) : field_of(L.alpha());
    d.flavor = L.flavor();
    d.labels = L.labels();
    d.structure = L.structure();
    d.alpha = L.alpha();
    return d;
}

inline HomAlgebra to_algebra(const AlgebraDocument& d) {
    return HomAlgebra(d.name, d.labels, d.structure, d.alpha, d.flavor);
}

inline std::optional<HomCoRep> to_corep(const AlgebraDocument& d) {
    if (!d.corep) return std::nullopt;
    const CoRepBlock& c = *d.corep;
    return HomCoRep(to_algebra(d), c.labels.size(), c.lam, c.rho, c.alpha_m, c.labels);
}

inline CoRepBlock to_corep_block(const HomCoRep& C) {
    CoRepBlock b{C.labels(), C.alpha_m(), {}, {}};
    for (std::size_t i = 0; i < C.ldim(); ++i) {
        b.lam.push_back(C.left(i));
        b.rho.push_back(C.right(i));
    }
    return b;
}

/// Algebras and homomorphisms of a set of documents, resolved by name.
class Library {
public:
    Library() = default;
    explicit Library(std::vector<AlgebraDocument> docs) : docs_(std::move(docs)) {
        for (std::size_t i = 0; i < docs_.size(); ++i)
            if (!index_.emplace(docs_[i].name, i).second)
                throw ParseError("unique document names ('" + docs_[i].name + "' repeats)", 1, 1);
    }

    const std::vector<AlgebraDocument>& documents() const { return docs_; }
    bool has(const std::string& name) const { return index_.count(name) != 0; }

    const AlgebraDocument& document(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw UnknownLabel(name);
        return docs_[it->second];
    }
    HomAlgebra algebra(const std::string& name) const { return to_algebra(document(name)); }

    const HomBlock& hom_block(const std::string& name) const {
        for (const auto& d : docs_)
            for (const auto& h : d.homs)
                if (h.name == name) return h;
        throw UnknownLabel(name);
    }
    /// Validated homomorphism; throws NotAHomomorphism or DimensionMismatch.
    Hom hom(const std::string& name) const {
        const HomBlock& b = hom_block(name);
        return make_hom(b.name, algebra(b.src), algebra(b.dst), b.matrix);
    }

private:
    std::vector<AlgebraDocument> docs_;
    std::map<std::string, std::size_t> index_;
};

/// Parses "span{x, y - z}" against a basis; "span{}" is the zero subspace.
inline Subspace parse_span(const std::string& text, const std::vector<std::string>& labels, long field = 0) {
    const auto open = text.find('{');
    const auto close = text.rfind('}');
    if (text.rfind("span", 0) != 0 || open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("span{...}", 1, 1);
    std::vector<Vector> vs;
    std::string inner = text.substr(open + 1, close - open - 1);
    std::size_t start = 0;
    while (start <= inner.size()) {
        auto comma = inner.find(',', start);
        if (comma == std::string::npos) comma = inner.size();
        const std::string part = inner.substr(start, comma - start);
        if (part.find_first_not_of(" \t") != std::string::npos)
            vs.push_back(parse_linear(part, labels, field, 1, static_cast<int>(open + 1 + start)));
        start = comma + 1;
    }
    return Subspace::span(labels.size(), vs);
}

/// "span{...}" with the reduced basis of S.
inline std::string format_span(const Subspace& S, const std::vector<std::string>& labels) {
    std::string out = "span{";
    for (std::size_t i = 0; i < S.dim(); ++i) out += (i ? ", " : "") + format_linear(S.basis()[i], labels);
    return out + "}";
}

}  // namespace homuce
