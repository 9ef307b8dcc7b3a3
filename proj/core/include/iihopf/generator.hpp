#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "iihopf/decoration.hpp"

namespace iihopf {

/// Shape of a plane rooted trivalent tree: the full binary tree hanging
/// below the root leg. A leaf is a bottom leg; an internal node is a
/// trivalent vertex with an ordered (plane) pair of children.
struct TreeShape {
    std::vector<TreeShape> ch;  // empty = leaf, otherwise exactly two

    bool is_leaf() const { return ch.empty(); }
    int leaves() const;
    int internal_vertices() const { return leaves() - 1; }
    std::string str() const;

    friend bool operator==(const TreeShape& a, const TreeShape& b) { return a.ch == b.ch; }
};

/// The iterated-integral generator I(a0; l1,...,ln; a_end).
struct WordPayload {
    Decoration a0;
    DecorationList letters;
    Decoration a_end;
};

/// An S-decorated plane rooted trivalent tree: shape plus the m+2 arc
/// decorations read left to right.
struct TreePayload {
    TreeShape shape;
    DecorationList arcs;  // size = leaves + 1
};

/// Formal difference symbol [a - b] in A_1 = F* (x) Q. Only constructed for
/// irreducible pairs; rational and cyclotomic differences reduce to the
/// prime / cyclotomic-unit symbols below.
struct DiffPayload {
    Decoration a, b;
};

struct LogSymPayload {
    std::string name;
};

struct LogPrimePayload {
    mpz_class p;
};

/// [1 - zeta_N^j], the cyclotomic-unit symbol, canonicalized to 1 <= j <= N/2.
struct CycUnitPayload {
    long j, N;
};

struct ZetaPayload {
    std::vector<int> indices;
};

struct LiPayload {
    std::vector<int> indices;
    DecorationList args;
};

/// A kind-tagged algebra generator. Immutable and cheap to copy; ordering is
/// lexicographic on the cached canonical serialization, which makes every
/// container and printout deterministic.
class Generator {
public:
    using Payload = std::variant<WordPayload, TreePayload, DiffPayload, LogSymPayload,
                                 LogPrimePayload, CycUnitPayload, ZetaPayload, LiPayload>;

    static Generator word(Decoration a0, DecorationList letters, Decoration a_end);
    static Generator tree(TreeShape shape, DecorationList arcs);
    static Generator diff(Decoration a, Decoration b);
    static Generator log_sym(std::string name);
    static Generator log_prime(mpz_class p);
    static Generator cyc_unit(long j, long N);
    static Generator zeta(std::vector<int> indices);
    static Generator li(std::vector<int> indices, DecorationList args);

    const Payload& payload() const { return p_->payload; }
    const WordPayload* as_word() const { return std::get_if<WordPayload>(&p_->payload); }
    const TreePayload* as_tree() const { return std::get_if<TreePayload>(&p_->payload); }
    const ZetaPayload* as_zeta() const { return std::get_if<ZetaPayload>(&p_->payload); }
    const LiPayload* as_li() const { return std::get_if<LiPayload>(&p_->payload); }

    int weight() const { return p_->weight; }
    int depth() const { return p_->depth; }
    const std::string& key() const { return p_->key; }

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.p_ == b.p_ || a.p_->key == b.p_->key;
    }
    friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
    friend bool operator<(const Generator& a, const Generator& b) {
        return a.p_ != b.p_ && a.p_->key < b.p_->key;
    }

private:
    struct Data {
        Payload payload;
        int weight;
        int depth;
        std::string key;
    };

    explicit Generator(std::shared_ptr<const Data> p) : p_(std::move(p)) {}
    static Generator make(Payload payload, int weight, int depth, std::string key);

    std::shared_ptr<const Data> p_;
};

/// Canonical text form of a word without constructing a Generator (valid for
/// empty words too).
std::string word_str(const Decoration& a0, const DecorationList& letters, const Decoration& a_end);

}  // namespace iihopf
