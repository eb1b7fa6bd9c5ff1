#include "hq/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hq {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.size() < 2) throw std::invalid_argument("Partition: need at least 2 parts");
    for (int x : parts)
        if (x < 1) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Partition::k() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
}

OrderedPartition::OrderedPartition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.size() < 2) throw std::invalid_argument("OrderedPartition: need at least 2 parts");
    for (int x : parts)
        if (x < 1) throw std::invalid_argument("OrderedPartition: parts must be positive");
}

int OrderedPartition::k() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

std::string OrderedPartition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
}

std::vector<Partition> enumerate_partitions(int k) {
    if (k < 2) return {};
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending-part recursion; proper = at least two parts
    std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
        if (remaining == 0) {
            if (cur.size() >= 2) out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxPart); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(k, k - 1);  // cap k-1 excludes the trivial one-part partition
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts > b.parts; });
    return out;
}

std::optional<RefinementWitness> is_refinement(const Partition& fine,
                                               const Partition& coarse) {
    if (fine.k() != coarse.k())
        throw std::invalid_argument("is_refinement: partitions of different integers");
    int r = int(fine.parts.size()), t = int(coarse.parts.size());
    std::vector<int> cap(coarse.parts.begin(), coarse.parts.end());
    std::vector<int> phi(r, -1);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == r) return true;  // all capacities exactly consumed
        for (int j = 0; j < t; ++j) {
            if (cap[j] < fine.parts[i]) continue;
            // skip bins identical to an earlier untried bin at this depth
            bool dup = false;
            for (int j2 = 0; j2 < j; ++j2)
                if (cap[j2] == cap[j] && coarse.parts[j2] == coarse.parts[j]) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            cap[j] -= fine.parts[i];
            phi[i] = j;
            if (place(i + 1)) return true;
            cap[j] += fine.parts[i];
            phi[i] = -1;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    // capacities sum to zero and every coarse part is positive, so each bin
    // received at least one fine part: phi is onto
    return RefinementWitness{phi};
}

// ---------------------------------------------------------------------------
// Property poset
// ---------------------------------------------------------------------------

std::string PropertyNode::label() const {
    switch (kind) {
        case PropertyKind::Disc:
            return "Disc";
        case PropertyKind::CD:
            return "CD(" + std::to_string(level) + ")";
        case PropertyKind::Dev:
            return "Dev(" + std::to_string(level) + ")";
        case PropertyKind::Expand: {
            std::string s = "Expand[";
            for (size_t i = 0; i < partition.size(); ++i)
                s += (i ? "," : "") + std::to_string(partition[i]);
            return s + "]";
        }
    }
    return "?";
}

bool PropertyNode::operator==(const PropertyNode& o) const {
    return kind == o.kind && level == o.level && partition == o.partition;
}

std::string PropertyPoset::class_label(int i) const {
    std::string s;
    for (size_t j = 0; j < classes[i].size(); ++j)
        s += (j ? " = " : "") + classes[i][j].label();
    return s;
}

bool PropertyPoset::implies(int from, int to) const {
    if (from == to) return true;
    std::vector<char> seen(classes.size(), 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [a, b] : hasse)
            if (a == u && !seen[b]) {
                if (b == to) return true;
                seen[b] = 1;
                stack.push_back(b);
            }
    }
    return false;
}

int PropertyPoset::find(const PropertyNode& p) const {
    for (size_t i = 0; i < classes.size(); ++i)
        for (const PropertyNode& q : classes[i])
            if (q == p) return int(i);
    return -1;
}

std::string PropertyPoset::to_dot() const {
    std::ostringstream os;
    os << "digraph implications {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box];\n";
    for (size_t i = 0; i < classes.size(); ++i)
        os << "  \"" << class_label(int(i)) << "\";\n";
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [a, b] : hasse) es.emplace_back(class_label(a), class_label(b));
    std::sort(es.begin(), es.end());
    for (auto& [a, b] : es) os << "  \"" << a << "\" -> \"" << b << "\";\n";
    os << "}\n";
    return os.str();
}

std::string PropertyPoset::to_json() const {
    std::ostringstream os;
    os << "{\"k\":" << k << ",\"nodes\":[";
    for (size_t i = 0; i < classes.size(); ++i) {
        os << (i ? "," : "") << "{\"id\":" << i << ",\"members\":[";
        for (size_t j = 0; j < classes[i].size(); ++j)
            os << (j ? "," : "") << '"' << classes[i][j].label() << '"';
        os << "]}";
    }
    os << "],\"edges\":[";
    for (size_t e = 0; e < hasse.size(); ++e)
        os << (e ? "," : "") << '[' << hasse[e].first << ',' << hasse[e].second << ']';
    os << "],\"equivalences\":[";
    bool first = true;
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].size() < 2) continue;
        os << (first ? "" : ",") << "[";
        for (size_t j = 0; j < classes[i].size(); ++j)
            os << (j ? "," : "") << '"' << classes[i][j].label() << '"';
        os << ']';
        first = false;
    }
    os << "]}";
    return os.str();
}

PropertyPoset build_property_poset(int k) {
    if (k < 3) throw std::invalid_argument("build_property_poset: need k >= 3");

    std::vector<PropertyNode> nodes;
    nodes.push_back({PropertyKind::Disc, 0, {}});
    for (const Partition& pi : enumerate_partitions(k))
        nodes.push_back({PropertyKind::Expand, 0, pi.parts});
    for (int l = 1; l <= k - 1; ++l) nodes.push_back({PropertyKind::CD, l, {}});
    for (int l = 2; l <= k; ++l) nodes.push_back({PropertyKind::Dev, l, {}});
    int N = int(nodes.size());

    // implication generators
    std::vector<std::vector<char>> imp(N, std::vector<char>(N, 0));
    auto idx = [&](const PropertyNode& p) {
        for (int i = 0; i < N; ++i)
            if (nodes[i] == p) return i;
        return -1;
    };
    int disc = idx({PropertyKind::Disc, 0, {}});
    auto cd = [&](int l) { return idx({PropertyKind::CD, l, {}}); };
    auto dev = [&](int l) { return idx({PropertyKind::Dev, l, {}}); };

    for (int i = 0; i < N; ++i) imp[i][i] = 1;
    for (int i = 0; i < N; ++i) {
        const PropertyNode& p = nodes[i];
        if (p.kind == PropertyKind::Expand) {
            Partition pi(p.partition);
            // Expand[pi] implies Expand[pi'] exactly for refinements pi' of pi
            for (int j = 0; j < N; ++j)
                if (nodes[j].kind == PropertyKind::Expand && j != i)
                    if (is_refinement(Partition(nodes[j].partition), pi)) imp[i][j] = 1;
            imp[i][cd(1)] = 1;  // every expansion property implies CD(1)
        } else if (p.kind == PropertyKind::CD) {
            if (p.level >= 2) imp[i][cd(p.level - 1)] = 1;
            // CD(l) implies Expand[pi] exactly when max pi <= l
            for (int j = 0; j < N; ++j)
                if (nodes[j].kind == PropertyKind::Expand &&
                    *std::max_element(nodes[j].partition.begin(), nodes[j].partition.end()) <=
                        p.level)
                    imp[i][j] = 1;
            if (p.level == k - 1) imp[i][dev(k)] = 1;  // top CD ties to top Dev
            if (p.level == 1) imp[i][disc] = 1;        // CD(1) and Disc coincide
        } else if (p.kind == PropertyKind::Dev) {
            if (p.level >= 3) imp[i][dev(p.level - 1)] = 1;
            imp[i][cd(p.level - 1)] = 1;
            for (int j = 0; j < N; ++j)  // deviation implies every expansion
                if (nodes[j].kind == PropertyKind::Expand) imp[i][j] = 1;
        } else {  // Disc
            imp[i][cd(1)] = 1;
        }
    }

    // transitive closure
    for (int w = 0; w < N; ++w)
        for (int u = 0; u < N; ++u)
            if (imp[u][w])
                for (int v = 0; v < N; ++v)
                    if (imp[w][v]) imp[u][v] = 1;

    // equivalence classes: mutual reachability
    std::vector<int> cls(N, -1);
    std::vector<std::vector<PropertyNode>> classes;
    for (int i = 0; i < N; ++i) {
        if (cls[i] >= 0) continue;
        int c = int(classes.size());
        classes.emplace_back();
        for (int j = i; j < N; ++j)
            if (cls[j] < 0 && imp[i][j] && imp[j][i]) {
                cls[j] = c;
                classes[c].push_back(nodes[j]);
            }
    }
    int C = int(classes.size());

    // canonical member order inside a class, canonical class order by label
    auto node_key = [](const PropertyNode& p) {
        return std::make_tuple(int(p.kind), p.level, p.partition);
    };
    for (auto& c : classes)
        std::sort(c.begin(), c.end(), [&](const PropertyNode& a, const PropertyNode& b) {
            return node_key(a) < node_key(b);
        });

    PropertyPoset poset;
    poset.k = k;
    std::vector<int> order(C);
    for (int i = 0; i < C; ++i) order[i] = i;
    auto label_of = [&](int c) {
        std::string s;
        for (size_t j = 0; j < classes[c].size(); ++j)
            s += (j ? " = " : "") + classes[c][j].label();
        return s;
    };
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return label_of(a) < label_of(b); });
    std::vector<int> newid(C);
    for (int i = 0; i < C; ++i) newid[order[i]] = i;
    poset.classes.resize(C);
    for (int i = 0; i < C; ++i) poset.classes[newid[i]] = classes[i];

    // class-level reachability
    std::vector<std::vector<char>> creach(C, std::vector<char>(C, 0));
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v)
            if (imp[u][v]) creach[newid[cls[u]]][newid[cls[v]]] = 1;

    // Hasse: covers only
    for (int u = 0; u < C; ++u)
        for (int v = 0; v < C; ++v) {
            if (u == v || !creach[u][v]) continue;
            bool cover = true;
            for (int w = 0; w < C && cover; ++w)
                if (w != u && w != v && creach[u][w] && creach[w][v]) cover = false;
            if (cover) poset.hasse.emplace_back(u, v);
        }
    std::sort(poset.hasse.begin(), poset.hasse.end());
    return poset;
}

}  // namespace hq
