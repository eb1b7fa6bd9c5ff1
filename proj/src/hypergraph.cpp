#include "hq/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hq {

namespace {

constexpr int kTableN = 68;  // every C(n,r) with n <= 67 fits in int64

const std::uint64_t* binom_table() {
    static std::uint64_t t[kTableN][kTableN] = {};
    static bool built = [] {
        for (int i = 0; i < kTableN; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j) {
                // saturate instead of wrapping; saturated entries are only
                // reachable through binom()'s overflow guard below
                std::uint64_t s = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
                t[i][j] = (s < t[i - 1][j - 1]) ? ~0ull : s;
            }
        }
        return true;
    }();
    (void)built;
    return &t[0][0];
}

inline std::uint64_t table_at(int n, int r) { return binom_table()[n * kTableN + r]; }

}  // namespace

std::uint64_t binom(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    if (n < kTableN) return table_at(n, r);
    // Multiplicative form with 128-bit intermediates for large n, small r.
    unsigned __int128 acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * std::uint64_t(n - r + i) / std::uint64_t(i);
        if (acc > (unsigned __int128)~0ull)
            throw std::overflow_error("binom: value exceeds 64 bits");
    }
    return std::uint64_t(acc);
}

std::uint64_t colex_rank(const VertexId* v, int k) {
    std::uint64_t r = 0;
    for (int i = 0; i < k; ++i) r += binom(v[i], i + 1);
    return r;
}

void colex_unrank(std::uint64_t rank, int k, VertexId* out) {
    for (int i = k; i >= 1; --i) {
        // largest v with C(v, i) <= rank
        int v = i - 1;
        while (binom(v + 1, i) <= rank) ++v;
        out[i - 1] = v;
        rank -= binom(v, i);
    }
}

std::vector<KSet> enumerate_ksubsets(int n, int r) {
    std::vector<KSet> out;
    if (r < 0 || r > n) return out;
    if (r == 0) {
        out.push_back({});
        return out;
    }
    KSet cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        // colex successor: bump the lowest entry with headroom, reset below
        int i = 0;
        while (i < r) {
            int limit = (i + 1 < r) ? cur[i + 1] : n;
            if (cur[i] + 1 < limit) break;
            ++i;
        }
        if (i == r) break;
        ++cur[i];
        for (int j = 0; j < i; ++j) cur[j] = j;
    }
    return out;
}

Hypergraph::Hypergraph(int n, int k) : n_(n), k_(k) {
    if (k < 1 || n < k) throw std::invalid_argument("Hypergraph: need 1 <= k <= n");
    total_ = binom(n, k);
    if (total_ > (1ull << 33))
        throw std::invalid_argument("Hypergraph: C(n,k) exceeds the 2^33-bit storage guard");
    bits_.assign((total_ + 63) / 64, 0);
}

Hypergraph Hypergraph::complete(int n, int k) {
    Hypergraph H(n, k);
    for (std::uint64_t r = 0; r < H.total_; ++r) H.bits_[r >> 6] |= 1ull << (r & 63);
    if (H.total_ % 64) {
        // clear the tail bits beyond the universe
        std::uint64_t keep = (1ull << (H.total_ % 64)) - 1;
        H.bits_.back() &= keep;
    }
    H.m_ = H.total_;
    return H;
}

namespace {
void check_kset(const KSet& e, int n, int k, const char* what) {
    if (int(e.size()) != k) throw std::invalid_argument(std::string(what) + ": wrong arity");
    for (int i = 0; i < k; ++i) {
        if (e[i] < 0 || e[i] >= n) throw std::invalid_argument(std::string(what) + ": vertex out of range");
        if (i && e[i] <= e[i - 1]) throw std::invalid_argument(std::string(what) + ": not strictly ascending");
    }
}
}  // namespace

void Hypergraph::add_edge(const KSet& e) {
    check_kset(e, n_, k_, "add_edge");
    add_edge_rank(colex_rank(e.data(), k_));
}

void Hypergraph::add_edge_rank(std::uint64_t r) {
    std::uint64_t& w = bits_[r >> 6];
    std::uint64_t bit = 1ull << (r & 63);
    if (!(w & bit)) {
        w |= bit;
        ++m_;
    }
}

void Hypergraph::remove_edge_rank(std::uint64_t r) {
    std::uint64_t& w = bits_[r >> 6];
    std::uint64_t bit = 1ull << (r & 63);
    if (w & bit) {
        w &= ~bit;
        --m_;
    }
}

bool Hypergraph::has_edge(const KSet& e) const {
    check_kset(e, n_, k_, "has_edge");
    return test_(colex_rank(e.data(), k_));
}

bool Hypergraph::has_edge_ptr(const VertexId* v) const {
    return test_(colex_rank(v, k_));
}

std::vector<KSet> Hypergraph::edges() const {
    std::vector<KSet> out;
    out.reserve(m_);
    KSet buf(k_);
    for (std::uint64_t r = 0; r < total_; ++r) {
        if (test_(r)) {
            colex_unrank(r, k_, buf.data());
            out.push_back(buf);
        }
    }
    return out;
}

std::uint64_t Hypergraph::induced_edge_count(const std::vector<VertexId>& U) const {
    std::vector<VertexId> u(U);
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    int s = int(u.size());
    if (s < k_) return 0;
    // Enumerate k-subsets of U when that is cheaper than scanning edges.
    if (binom(s, k_) <= m_ || n_ > 64) {
        std::uint64_t cnt = 0;
        std::vector<int> idx(k_);
        for (int i = 0; i < k_; ++i) idx[i] = i;
        KSet buf(k_);
        for (;;) {
            for (int i = 0; i < k_; ++i) buf[i] = u[idx[i]];
            if (test_(colex_rank(buf.data(), k_))) ++cnt;
            int i = k_ - 1;
            while (i >= 0 && idx[i] == s - k_ + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k_; ++j) idx[j] = idx[j - 1] + 1;
        }
        return cnt;
    }
    std::uint64_t mask = 0;
    for (VertexId v : u) mask |= 1ull << v;
    std::uint64_t cnt = 0;
    KSet buf(k_);
    for (std::uint64_t r = 0; r < total_; ++r) {
        if (!test_(r)) continue;
        colex_unrank(r, k_, buf.data());
        std::uint64_t em = 0;
        for (int i = 0; i < k_; ++i) em |= 1ull << buf[i];
        if ((em & mask) == em) ++cnt;
    }
    return cnt;
}

std::uint64_t Hypergraph::induced_count_in_kset(const VertexId* T, int klen) const {
    // count r-subsets of T that are edges (r = k_ of this graph)
    std::uint64_t cnt = 0;
    std::vector<int> idx(k_);
    for (int i = 0; i < k_; ++i) idx[i] = i;
    std::vector<VertexId> buf(k_);
    if (klen < k_) return 0;
    for (;;) {
        for (int i = 0; i < k_; ++i) buf[i] = T[idx[i]];
        if (test_(colex_rank(buf.data(), k_))) ++cnt;
        int i = k_ - 1;
        while (i >= 0 && idx[i] == klen - k_ + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k_; ++j) idx[j] = idx[j - 1] + 1;
    }
    return cnt;
}

Hypergraph Hypergraph::cliques(int K) const {
    if (K < k_) throw std::invalid_argument("cliques: K must be >= uniformity");
    Hypergraph out(n_, K);
    std::uint64_t want = binom(K, k_);
    KSet T(K);
    std::uint64_t tot = binom(n_, K);
    for (std::uint64_t r = 0; r < tot; ++r) {
        colex_unrank(r, K, T.data());
        if (induced_count_in_kset(T.data(), K) == want) out.add_edge_rank(r);
    }
    return out;
}

Hypergraph Hypergraph::complement() const {
    Hypergraph out(n_, k_);
    for (std::uint64_t i = 0; i < bits_.size(); ++i) out.bits_[i] = ~bits_[i];
    if (total_ % 64) out.bits_.back() &= (1ull << (total_ % 64)) - 1;
    out.m_ = total_ - m_;
    return out;
}

std::string Hypergraph::to_text() const {
    std::vector<KSet> es = edges();
    std::sort(es.begin(), es.end());  // lexicographic on vertex sequences
    std::ostringstream os;
    os << k_ << ' ' << n_ << ' ' << m_ << '\n';
    for (const KSet& e : es) {
        for (int i = 0; i < k_; ++i) os << (i ? " " : "") << e[i];
        os << '\n';
    }
    return os.str();
}

Hypergraph Hypergraph::from_text(const std::string& text) {
    std::istringstream is(text);
    int k, n;
    std::uint64_t m;
    if (!(is >> k >> n >> m)) throw std::invalid_argument("Hypergraph::from_text: bad header");
    Hypergraph H(n, k);
    KSet e(k);
    for (std::uint64_t i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j)
            if (!(is >> e[j])) throw std::invalid_argument("Hypergraph::from_text: truncated");
        H.add_edge(e);
    }
    return H;
}

void Hypergraph::save(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << to_text();
}

Hypergraph Hypergraph::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return from_text(ss.str());
}

// ---------------------------------------------------------------------------

SubsetFamily::SubsetFamily(int n, int r) : n_(n), r_(r) {
    if (r < 1 || n < 0) throw std::invalid_argument("SubsetFamily: need r >= 1");
    std::uint64_t total = binom(n, r);
    if (total > (1ull << 33))
        throw std::invalid_argument("SubsetFamily: C(n,r) exceeds the storage guard");
    words_.assign((total + 63) / 64, 0);
}

void SubsetFamily::add(const KSet& s) {
    check_kset(s, n_, r_, "SubsetFamily::add");
    std::uint64_t r = colex_rank(s.data(), r_);
    std::uint64_t& w = words_[r >> 6];
    std::uint64_t bit = 1ull << (r & 63);
    if (!(w & bit)) {
        w |= bit;
        ++count_;
        ranks_.insert(std::lower_bound(ranks_.begin(), ranks_.end(), r), r);
    }
}

bool SubsetFamily::contains(const KSet& s) const {
    check_kset(s, n_, r_, "SubsetFamily::contains");
    std::uint64_t r = colex_rank(s.data(), r_);
    return (words_[r >> 6] >> (r & 63)) & 1u;
}

std::vector<KSet> SubsetFamily::sets() const {
    std::vector<KSet> out;
    out.reserve(count_);
    KSet buf(r_);
    for (std::uint64_t r : ranks_) {
        colex_unrank(r, r_, buf.data());
        out.push_back(buf);
    }
    return out;
}

std::string SubsetFamily::to_text() const {
    std::vector<KSet> ss = sets();
    std::sort(ss.begin(), ss.end());
    std::ostringstream os;
    os << r_ << ' ' << n_ << ' ' << count_ << '\n';
    for (const KSet& s : ss) {
        for (int i = 0; i < r_; ++i) os << (i ? " " : "") << s[i];
        os << '\n';
    }
    return os.str();
}

SubsetFamily SubsetFamily::from_text(const std::string& text) {
    std::istringstream is(text);
    int r, n;
    std::uint64_t m;
    if (!(is >> r >> n >> m)) throw std::invalid_argument("SubsetFamily::from_text: bad header");
    SubsetFamily F(n, r);
    KSet s(r);
    for (std::uint64_t i = 0; i < m; ++i) {
        for (int j = 0; j < r; ++j)
            if (!(is >> s[j])) throw std::invalid_argument("SubsetFamily::from_text: truncated");
        F.add(s);
    }
    return F;
}

void SubsetFamily::save(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << to_text();
}

SubsetFamily SubsetFamily::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return from_text(ss.str());
}

}  // namespace hq
