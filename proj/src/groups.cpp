#include "qcohom/groups.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace qcohom {

namespace {

IntMatrix power(const IntMatrix& m, int e) {
    IntMatrix out = IntMatrix::identity(m.rows());
    for (int i = 0; i < e; ++i) out = out * m;
    return out;
}

int matrix_order(const IntMatrix& m, int cap) {
    IntMatrix p = m;
    for (int k = 1; k <= cap; ++k) {
        if (p.is_identity()) return k;
        p = p * m;
    }
    return -1;
}

}  // namespace

PointGroup PointGroup::from_generators(const std::vector<std::string>& labels,
                                       const std::vector<IntMatrix>& mats,
                                       int element_cap) {
    if (labels.size() != mats.size() || mats.empty())
        throw MalformedInput("from_generators needs matching labels and matrices");
    int r = mats[0].rows();
    for (auto& m : mats)
        if (m.rows() != r || m.cols() != r)
            throw MalformedInput("generator matrices must share a square shape");

    PointGroup g;
    g.rank_ = r;

    // BFS over words in the generators, shortest first, so each element gets
    // its shortlex-first word as label.  The identity is discovered as the
    // empty word and always sits at index 0.
    std::map<std::vector<Int>, int> seen;
    auto flat = [](const IntMatrix& m) {
        std::vector<Int> f;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) f.push_back(m(i, j));
        return f;
    };

    IntMatrix id = IntMatrix::identity(r);
    g.labels_.push_back("e");
    g.rep_.push_back(id);
    seen[flat(id)] = 0;
    g.identity_ = 0;

    std::queue<int> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop();
        for (size_t s = 0; s < mats.size(); ++s) {
            IntMatrix next = g.rep_[cur] * mats[s];
            auto key = flat(next);
            if (seen.count(key)) continue;
            if (int(g.labels_.size()) >= element_cap)
                throw NotFinite("generated group exceeds element cap");
            int idx = int(g.labels_.size());
            seen[key] = idx;
            std::string word = (cur == 0) ? labels[s] : g.labels_[cur] + "*" + labels[s];
            g.labels_.push_back(word);
            g.rep_.push_back(next);
            frontier.push(idx);
        }
    }

    int n = int(g.labels_.size());
    g.table_.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto it = seen.find(flat(g.rep_[i] * g.rep_[j]));
            if (it == seen.end()) throw NotFinite("closure not closed");  // unreachable
            g.table_[i][j] = it->second;
        }

    g.gens_.clear();
    for (auto& m : mats) g.gens_.push_back(seen.at(flat(m)));

    g.finalize_and_verify();
    return g;
}

PointGroup PointGroup::from_table(const std::vector<std::string>& labels,
                                  const std::vector<std::vector<int>>& table,
                                  const std::vector<IntMatrix>& reps,
                                  const std::vector<int>& generators) {
    if (labels.empty() || labels.size() != table.size() || labels.size() != reps.size())
        throw MalformedInput("from_table needs matching labels, table and reps");
    PointGroup g;
    g.rank_ = reps[0].rows();
    g.labels_ = labels;
    g.table_ = table;
    g.rep_ = reps;
    g.gens_ = generators;
    g.identity_ = -1;
    int n = int(labels.size());
    for (int i = 0; i < n && g.identity_ < 0; ++i) {
        bool id = true;
        for (int j = 0; j < n; ++j) id &= (table[i][j] == j && table[j][i] == j);
        if (id) g.identity_ = i;
    }
    if (g.identity_ < 0) throw NotFinite("table has no identity");
    g.finalize_and_verify();
    return g;
}

void PointGroup::finalize_and_verify() {
    int n = order();
    // inverses, and with them two-sidedness
    inv_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (table_[i][j] == identity_ && table_[j][i] == identity_) inv_[i] = j;
        if (inv_[i] < 0) throw NotFinite("element without two-sided inverse");
    }
    // identity behaves
    for (int i = 0; i < n; ++i)
        if (table_[identity_][i] != i || table_[i][identity_] != i)
            throw NotFinite("identity fails");
    // associativity on all triples; |G| <= 48 in practice so cubic is fine
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
                    throw NotFinite("associativity fails");
    // rep is compatible with the table, and every matrix is unimodular
    for (int i = 0; i < n; ++i) {
        Int d = rep_[i].det();
        if (d != 1 && d != -1) throw NotFinite("rep matrix not invertible over Z");
        for (int j = 0; j < n; ++j)
            if (!(rep_[i] * rep_[j] == rep_[table_[i][j]]))
                throw NotFinite("rep does not respect the table");
    }
    act_.clear();
    for (int i = 0; i < n; ++i) act_.push_back(rep_[i].transposed());
}

int PointGroup::index_of(const std::string& label) const {
    for (int i = 0; i < order(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

int PointGroup::element_order(int i) const {
    int k = 1, cur = i;
    while (cur != identity_) {
        cur = mul(cur, i);
        ++k;
    }
    return k;
}

bool PointGroup::is_abelian() const {
    for (int i = 0; i < order(); ++i)
        for (int j = 0; j < i; ++j)
            if (mul(i, j) != mul(j, i)) return false;
    return true;
}

PointGroup cyclic_group(int n, const IntMatrix& rep_generator) {
    if (n < 1) throw MalformedInput("cyclic order must be positive");
    if (matrix_order(rep_generator, n) != n)
        throw WrongOrder("generator does not have order " + std::to_string(n));
    if (n == 1) return PointGroup::from_generators({"r"}, {rep_generator}, 2);
    return PointGroup::from_generators({"r"}, {rep_generator}, n + 1);
}

PointGroup dihedral_group(int n, const IntMatrix& rotation, const IntMatrix& mirror) {
    if (n < 1) throw MalformedInput("dihedral order must be positive");
    if (matrix_order(rotation, n) != n)
        throw RelationViolation("rotation^" + std::to_string(n) + " = 1 fails");
    if (!(mirror * mirror).is_identity())
        throw RelationViolation("mirror^2 = 1 fails");
    IntMatrix rot_inv = power(rotation, n - 1);
    if (!(mirror * rotation * mirror == rot_inv))
        throw RelationViolation("mirror*rotation*mirror = rotation^-1 fails");

    // Build the abstract group of order 2N from the presentation, then
    // attach the matrices.  The representation is allowed to be unfaithful
    // (the mirror acts trivially on a rank-1 lattice), so closure over the
    // matrices alone would undercount.
    auto encode = [n](int i, int j) { return i + n * j; };
    auto mulp = [n, encode](int a, int b) {
        int i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
        int i = j1 ? (i1 + n - i2) % n : (i1 + i2) % n;
        return encode(i, j1 ^ j2);
    };

    // BFS from the identity so labels come out shortlex, matching
    // from_generators on faithful inputs
    std::vector<int> index_of_state(2 * n, -1);
    std::vector<std::string> labels;
    std::vector<IntMatrix> reps;
    std::vector<int> states;
    auto push = [&](int st, const std::string& lab, const IntMatrix& rep) {
        index_of_state[st] = int(labels.size());
        labels.push_back(lab);
        reps.push_back(rep);
        states.push_back(st);
    };
    push(encode(0, 0), "e", IntMatrix::identity(rotation.rows()));
    int gen_state[2] = {encode(1 % n, 0), encode(0, 1)};
    const IntMatrix* gen_mat[2] = {&rotation, &mirror};
    const char* gen_lab[2] = {"r", "m"};
    for (size_t head = 0; head < labels.size(); ++head) {
        for (int s = 0; s < 2; ++s) {
            int next = mulp(states[head], gen_state[s]);
            if (index_of_state[next] >= 0) continue;
            std::string word =
                (head == 0) ? gen_lab[s] : labels[head] + "*" + gen_lab[s];
            push(next, word, reps[head] * *gen_mat[s]);
        }
    }
    std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b)
            table[a][b] = index_of_state[mulp(states[a], states[b])];
    std::vector<int> gens = {index_of_state[gen_state[0]], index_of_state[gen_state[1]]};
    return PointGroup::from_table(labels, table, reps, gens);
}

SubgroupData normal_subgroup(const PointGroup& g, const std::vector<int>& members) {
    int n = g.order();
    SubgroupData h;
    h.parent = &g;
    h.member.assign(n, false);
    for (int m : members) {
        if (m < 0 || m >= n) throw MalformedInput("member index out of range");
        h.member[m] = true;
    }
    if (!h.member[g.identity()]) throw NotSubgroup("identity missing");
    for (int i = 0; i < n; ++i)
        if (h.member[i]) {
            if (!h.member[g.inv(i)]) throw NotSubgroup("not closed under inverse");
            for (int j = 0; j < n; ++j)
                if (h.member[j] && !h.member[g.mul(i, j)])
                    throw NotSubgroup("not closed under product");
        }
    for (int i = 0; i < n; ++i)
        if (h.member[i]) h.members.push_back(i);

    h.normal = true;
    for (int x = 0; x < n && h.normal; ++x)
        for (int m : h.members)
            if (!h.member[g.mul(g.mul(x, m), g.inv(x))]) {
                h.normal = false;
                break;
            }
    if (!h.normal) return h;

    // left cosets; representative = smallest element index in the coset
    h.coset_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (h.coset_of[x] >= 0) continue;
        int c = int(h.coset_reps.size());
        h.coset_reps.push_back(x);
        for (int m : h.members) h.coset_of[g.mul(x, m)] = c;
    }
    int q = h.quotient_order();
    h.quotient_table.assign(q, std::vector<int>(q, -1));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            h.quotient_table[a][b] = h.coset_of[g.mul(h.coset_reps[a], h.coset_reps[b])];
    return h;
}

}  // namespace qcohom
