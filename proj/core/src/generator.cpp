#include "iihopf/generator.hpp"

#include <algorithm>

namespace iihopf {

int TreeShape::leaves() const {
    if (is_leaf()) return 1;
    return ch[0].leaves() + ch[1].leaves();
}

std::string TreeShape::str() const {
    if (is_leaf()) return "*";
    return "(" + ch[0].str() + ch[1].str() + ")";
}

std::string word_str(const Decoration& a0, const DecorationList& letters, const Decoration& a_end) {
    std::string s = "I(" + a0.str() + "; ";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ", ";
        s += letters[i].str();
    }
    s += "; " + a_end.str() + ")";
    return s;
}

namespace {

// Body of the tree rendering: in-order walk, each internal vertex prints the
// arc sitting between its two subtrees.
std::string tree_body(const TreeShape& shape, const DecorationList& arcs, int leaf_base) {
    if (shape.is_leaf()) return "*";
    int split = leaf_base + shape.ch[0].leaves() - 1;  // arc index under this vertex
    return "(" + tree_body(shape.ch[0], arcs, leaf_base) + " " + arcs[split].str() + " " +
           tree_body(shape.ch[1], arcs, leaf_base + shape.ch[0].leaves()) + ")";
}

std::string int_list(const std::vector<int>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s;
}

}  // namespace

Generator Generator::make(Payload payload, int weight, int depth, std::string key) {
    auto d = std::make_shared<Data>(Data{std::move(payload), weight, depth, std::move(key)});
    return Generator(std::move(d));
}

Generator Generator::word(Decoration a0, DecorationList letters, Decoration a_end) {
    if (letters.empty())
        throw KernelError("EMPTY_WORD_GENERATOR", "weight-0 words are the scalar 1, not generators");
    int depth = 0;
    for (const auto& l : letters)
        if (!l.is_zero()) ++depth;
    std::string key = word_str(a0, letters, a_end);
    int weight = static_cast<int>(letters.size());
    return make(WordPayload{std::move(a0), std::move(letters), std::move(a_end)}, weight, depth,
                std::move(key));
}

Generator Generator::tree(TreeShape shape, DecorationList arcs) {
    int leaves = shape.leaves();
    if (static_cast<size_t>(leaves) + 1 != arcs.size())
        throw KernelError("BAD_TREE", "tree with " + std::to_string(leaves) + " bottom legs needs " +
                                          std::to_string(leaves + 1) + " arcs");
    if (leaves < 2)
        throw KernelError("BAD_TREE", "a single-edge tree is the scalar 1, not a generator");
    std::string key =
        "T<" + arcs.front().str() + "|" + tree_body(shape, arcs, 1) + "|" + arcs.back().str() + ">";
    int weight = leaves - 1;
    return make(TreePayload{std::move(shape), std::move(arcs)}, weight, 0, std::move(key));
}

Generator Generator::diff(Decoration a, Decoration b) {
    if (a == b) throw KernelError("BAD_DIFF", "difference symbol needs distinct decorations");
    if (b < a) std::swap(a, b);  // [a-b] = [b-a] modulo torsion
    std::string key = "[" + a.str() + "-" + b.str() + "]";
    return make(DiffPayload{std::move(a), std::move(b)}, 1, 0, std::move(key));
}

Generator Generator::log_sym(std::string name) {
    std::string key = "[" + name + "]";
    return make(LogSymPayload{std::move(name)}, 1, 0, std::move(key));
}

Generator Generator::log_prime(mpz_class p) {
    std::string key = "[" + p.get_str() + "]";
    return make(LogPrimePayload{std::move(p)}, 1, 0, std::move(key));
}

Generator Generator::cyc_unit(long j, long N) {
    j = ((j % N) + N) % N;
    if (j == 0) throw KernelError("BAD_DIFF", "cyclotomic unit symbol needs j != 0 mod N");
    if (2 * j > N) j = N - j;  // [1 - w^-j] = [1 - w^j] modulo torsion
    std::string key = "[1-w" + std::to_string(j) + "/" + std::to_string(N) + "]";
    return make(CycUnitPayload{j, N}, 1, 0, std::move(key));
}

Generator Generator::zeta(std::vector<int> indices) {
    if (indices.empty()) throw KernelError("BAD_ZETA", "zeta symbol needs at least one index");
    int w = 0;
    for (int n : indices) {
        if (n < 1) throw KernelError("BAD_ZETA", "zeta indices must be >= 1");
        w += n;
    }
    std::string key = "zeta(" + int_list(indices) + ")";
    int depth = static_cast<int>(indices.size());
    return make(ZetaPayload{std::move(indices)}, w, depth, std::move(key));
}

Generator Generator::li(std::vector<int> indices, DecorationList args) {
    if (indices.empty() || indices.size() != args.size())
        throw KernelError("BAD_LI", "Li symbol needs matching index and argument lists");
    int w = 0;
    for (int n : indices) {
        if (n < 1) throw KernelError("BAD_LI", "Li indices must be >= 1");
        w += n;
    }
    std::string key = "Li[" + int_list(indices) + "](";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) key += ",";
        if (args[i].is_zero()) throw KernelError("ZERO_ARGUMENT", "Li argument must be nonzero");
        key += args[i].str();
    }
    key += ")";
    int depth = static_cast<int>(indices.size());
    return make(LiPayload{std::move(indices), std::move(args)}, w, depth, std::move(key));
}

}  // namespace iihopf
