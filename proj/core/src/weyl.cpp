#include "motives/weyl.hpp"

#include "motives/errors.hpp"

#include <algorithm>
#include <deque>

namespace motives {

namespace {

using Mat = std::vector<int>;  // r*r row-major

Mat identity(int r) {
    Mat m(static_cast<size_t>(r) * r, 0);
    for (int i = 0; i < r; ++i) m[static_cast<size_t>(i) * r + i] = 1;
    return m;
}

Mat matmul(const Mat& a, const Mat& b, int r) {
    Mat c(static_cast<size_t>(r) * r, 0);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            int aik = a[static_cast<size_t>(i) * r + k];
            if (!aik) continue;
            for (int j = 0; j < r; ++j)
                c[static_cast<size_t>(i) * r + j] += aik * b[static_cast<size_t>(k) * r + j];
        }
    return c;
}

std::vector<int> matvec(const Mat& a, const std::vector<int>& x, int r) {
    std::vector<int> y(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) y[i] += a[static_cast<size_t>(i) * r + j] * x[j];
    return y;
}

// generator matrices for simple reflection i
Mat coroot_gen(const RootDatum& rd, int i) {
    int r = rd.rank;
    Mat m = identity(r);
    for (int j = 0; j < r; ++j) m[static_cast<size_t>(i) * r + j] -= rd.cartan[i][j];
    return m;
}

Mat root_gen(const RootDatum& rd, int i) {
    int r = rd.rank;
    Mat m = identity(r);
    for (int j = 0; j < r; ++j) m[static_cast<size_t>(i) * r + j] -= rd.cartan[j][i];
    return m;
}

bool root_is_positive(const std::vector<int>& n) {
    for (int v : n)
        if (v != 0) return v > 0;
    return false;  // zero vector, callers never pass it
}

}  // namespace

std::vector<int> WeylGroupTable::apply_coroot(int w, const std::vector<int>& c) const {
    return matvec(elements[static_cast<size_t>(w)].coroot_action, c, rd.rank);
}

std::vector<int> WeylGroupTable::apply_root_inv(int w, const std::vector<int>& n) const {
    return matvec(elements[static_cast<size_t>(w)].root_action_inv, n, rd.rank);
}

WeylGroupTable weyl_enumerate(const RootDatum& rd, size_t limit) {
    WeylGroupTable t;
    t.rd = rd;
    int r = rd.rank;
    std::vector<Mat> cg(static_cast<size_t>(r)), rg(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        cg[static_cast<size_t>(i)] = coroot_gen(rd, i);
        rg[static_cast<size_t>(i)] = root_gen(rd, i);
    }
    WeylElement id{identity(r), identity(r), identity(r), 0, -1, -1};
    t.index[id.coroot_action] = 0;
    t.elements.push_back(std::move(id));
    for (size_t head = 0; head < t.elements.size(); ++head) {
        for (int i = 0; i < r; ++i) {
            Mat nc = matmul(t.elements[head].coroot_action, cg[static_cast<size_t>(i)], r);
            if (t.index.count(nc)) continue;
            WeylElement e;
            e.coroot_action = std::move(nc);
            e.root_action = matmul(t.elements[head].root_action, rg[static_cast<size_t>(i)], r);
            e.root_action_inv =
                matmul(rg[static_cast<size_t>(i)], t.elements[head].root_action_inv, r);
            e.length = t.elements[head].length + 1;
            e.parent = static_cast<int>(head);
            e.gen = i;
            t.index[e.coroot_action] = static_cast<int>(t.elements.size());
            t.elements.push_back(std::move(e));
            if (t.elements.size() > limit)
                throw LimitExceeded("Weyl group enumeration exceeded the element limit");
        }
    }
    t.max_length = t.elements.back().length;
    return t;
}

TargetPoly weyl_poincare(const RootDatum& rd, PoincareMethod method) {
    if (method == PoincareMethod::Bfs) {
        WeylGroupTable t = weyl_enumerate(rd);
        TargetPoly p;
        for (const auto& e : t.elements) p.add_term(e.length, 0, Rational(1));
        return p;
    }
    TargetPoly p = TargetPoly::one();
    for (int d : rd.degrees) {
        TargetPoly f;
        for (int i = 0; i < d; ++i) f.add_term(i, 0, Rational(1));
        p = p * f;
    }
    return p;
}

TargetPoly parabolic_coset_poincare(const RootDatum& rd, const Cocharacter& lambda) {
    if (!lambda.is_dominant())
        throw NotDominant("coset enumeration requires a dominant cocharacter");
    int r = rd.rank;
    std::map<std::vector<int>, int> depth;
    std::deque<std::vector<int>> queue;
    depth[lambda.pairings] = 0;
    queue.push_back(lambda.pairings);
    TargetPoly p = TargetPoly::one();
    while (!queue.empty()) {
        std::vector<int> m = queue.front();
        queue.pop_front();
        int d = depth[m];
        for (int i = 0; i < r; ++i) {
            if (m[i] == 0) continue;  // reflection fixes this point
            std::vector<int> nm = m;
            for (int j = 0; j < r; ++j) nm[j] -= rd.cartan[j][i] * m[i];
            if (depth.emplace(nm, d + 1).second) {
                p.add_term(d + 1, 0, Rational(1));
                queue.push_back(std::move(nm));
            }
        }
    }
    return p;
}

AffineEnumeration affine_enumerate(const RootDatum& rd, int maxlen, size_t limit) {
    WeylGroupTable t = weyl_enumerate(rd);
    int r = rd.rank;

    // affine generators: one reflection per component, t_{theta^vee} s_theta
    struct AffineGen {
        int s_theta;                  // index into the finite table
        std::vector<int> translation; // theta^vee in coroot coordinates
    };
    std::vector<AffineGen> affine_gens;
    for (const auto& comp : rd.components) {
        // s_theta as its coroot-coordinate matrix, then located in the table
        Mat cm = identity(r);
        const std::vector<int>& th = comp.highest_root;
        const std::vector<int>& thv = comp.highest_coroot;
        std::vector<int> u(static_cast<size_t>(r), 0);  // value of theta on alpha_j^vee
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) u[j] += th[k] * rd.cartan[k][j];
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) cm[static_cast<size_t>(i) * r + j] -= thv[i] * u[j];
        auto it = t.index.find(cm);
        if (it == t.index.end()) throw MotiveError("highest-root reflection not found");
        affine_gens.push_back({it->second, thv});
    }

    struct Key {
        int w;
        std::vector<int> c;
        bool operator<(const Key& o) const {
            if (w != o.w) return w < o.w;
            return c < o.c;
        }
    };
    std::map<Key, int> depth;
    std::deque<Key> queue;
    Key id{0, std::vector<int>(static_cast<size_t>(r), 0)};
    depth[id] = 0;
    queue.push_back(id);
    AffineEnumeration out;
    out.counts.assign(static_cast<size_t>(maxlen) + 1, Integer(0));
    out.counts[0] = 1;
    out.lengths_consistent = true;

    // independent length: hyperplanes separating the fundamental alcove
    auto im_length = [&](const Key& k) -> long {
        long len = 0;
        for (const auto& alpha : rd.positive_roots) {
            long pair_c = 0;
            for (int j = 0; j < r; ++j)
                for (int kk = 0; kk < r; ++kk)
                    pair_c += static_cast<long>(k.c[j]) * alpha[kk] * rd.cartan[kk][j];
            std::vector<int> wa = t.apply_root_inv(k.w, alpha);
            if (root_is_positive(wa))
                len += std::abs(pair_c);
            else
                len += std::abs(pair_c - 1);
        }
        return len;
    };

    while (!queue.empty()) {
        Key k = queue.front();
        queue.pop_front();
        int d = depth[k];
        if (d >= maxlen) continue;
        auto push = [&](Key nk) {
            if (depth.emplace(nk, d + 1).second) {
                out.counts[static_cast<size_t>(d) + 1] += 1;
                if (im_length(nk) != d + 1) out.lengths_consistent = false;
                if (depth.size() > limit)
                    throw LimitExceeded("affine enumeration exceeded the element limit");
                queue.push_back(std::move(nk));
            }
        };
        // finite generators act on the right without moving the translation
        for (int i = 0; i < r; ++i) {
            const WeylElement& cur = t.elements[static_cast<size_t>(k.w)];
            Mat nc = matmul(cur.coroot_action, coroot_gen(t.rd, i), r);
            push(Key{t.index.at(nc), k.c});
        }
        for (const auto& g : affine_gens) {
            const WeylElement& cur = t.elements[static_cast<size_t>(k.w)];
            Mat nc = matmul(cur.coroot_action,
                            t.elements[static_cast<size_t>(g.s_theta)].coroot_action, r);
            std::vector<int> moved = matvec(cur.coroot_action, g.translation, r);
            std::vector<int> ntrans = k.c;
            for (int j = 0; j < r; ++j) ntrans[j] += moved[j];
            push(Key{t.index.at(nc), std::move(ntrans)});
        }
    }
    return out;
}

TargetPoly affine_poincare(const RootDatum& rd, int maxlen, PoincareMethod method) {
    if (method == PoincareMethod::Bfs) {
        AffineEnumeration e = affine_enumerate(rd, maxlen);
        TargetPoly p;
        for (size_t i = 0; i < e.counts.size(); ++i)
            p.add_term(static_cast<int>(i), 0, Rational(e.counts[i]));
        return p;
    }
    TargetPoly p = weyl_poincare(rd, PoincareMethod::Formula).truncated(maxlen);
    for (int d : rd.degrees) {
        TargetPoly f = TargetPoly::one();
        f.add_term(d - 1, 0, Rational(-1));
        p = truncated_mul(p, series_inverse(f, maxlen), maxlen);
    }
    return p;
}

}  // namespace motives
