#include "motives/root_datum.hpp"

#include "motives/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace motives {

namespace {

std::vector<int> degree_table(char t, int n) {
    std::vector<int> d;
    switch (t) {
        case 'A':
            for (int i = 2; i <= n + 1; ++i) d.push_back(i);
            return d;
        case 'B':
        case 'C':
            for (int i = 1; i <= n; ++i) d.push_back(2 * i);
            return d;
        case 'D':
            for (int i = 1; i <= n - 1; ++i) d.push_back(2 * i);
            d.push_back(n);
            std::sort(d.begin(), d.end());
            return d;
        case 'E':
            if (n == 6) return {2, 5, 6, 8, 9, 12};
            if (n == 7) return {2, 6, 8, 10, 12, 14, 18};
            return {2, 8, 12, 14, 18, 20, 24, 30};
        case 'F':
            return {2, 6, 8, 12};
        case 'G':
            return {2, 6};
    }
    throw InvalidType("unknown Cartan type");
}

void check_factor(char t, int n) {
    bool ok = false;
    switch (t) {
        case 'A': ok = n >= 1; break;
        case 'B': ok = n >= 2; break;
        case 'C': ok = n >= 2; break;
        case 'D': ok = n >= 4; break;
        case 'E': ok = n >= 6 && n <= 8; break;
        case 'F': ok = n == 4; break;
        case 'G': ok = n == 2; break;
        default: break;
    }
    if (!ok)
        throw InvalidType("no such Cartan type: " + std::string(1, t) + std::to_string(n));
    if (n > 24) throw LimitExceeded("rank too large");
}

// block for one irreducible factor; entry [i][j] = <alpha_i, alpha_j^vee>
std::vector<std::vector<int>> cartan_block(char t, int n) {
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto bond = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
    switch (t) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case 'B':  // last simple root short
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c[n - 2][n - 1] = -2;
            break;
        case 'C':  // last simple root long
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c[n - 1][n - 2] = -2;
            break;
        case 'D':
            for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
            bond(n - 3, n - 1);
            break;
        case 'E':
            bond(0, 2);
            bond(1, 3);
            for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case 'F':
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
            c[1][2] = -2;
            break;
        case 'G':
            bond(0, 1);
            c[1][0] = -3;
            break;
    }
    return c;
}

struct FactorSpec {
    char type;
    int rank;
    int iso;  // -1 unspecified, 0 sc, 1 adjoint
};

FactorSpec parse_factor(const std::string& tok) {
    FactorSpec f{'?', 0, -1};
    std::string body = tok;
    if (auto p = body.rfind("-sc"); p != std::string::npos && p == body.size() - 3) {
        f.iso = 0;
        body = body.substr(0, p);
    } else if (auto q = body.rfind("-adjoint");
               q != std::string::npos && q == body.size() - 8) {
        f.iso = 1;
        body = body.substr(0, q);
    }
    if (body.size() < 2 || body[0] < 'A' || body[0] > 'G')
        throw InvalidType("malformed group descriptor: " + tok);
    f.type = body[0];
    for (size_t i = 1; i < body.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(body[i])))
            throw InvalidType("malformed group descriptor: " + tok);
    f.rank = std::stoi(body.substr(1));
    check_factor(f.type, f.rank);
    return f;
}

}  // namespace

Integer RootDatum::weyl_order() const {
    Integer w = 1;
    for (int d : degrees) w *= d;
    return w;
}

std::vector<Integer> smith_normal_diagonal(std::vector<std::vector<Integer>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<Integer> diag;
    size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // find a nonzero pivot
        size_t pr = r0, pc = c0;
        bool found = false;
        for (size_t i = r0; i < rows && !found; ++i)
            for (size_t j = c0; j < cols && !found; ++j)
                if (m[i][j] != 0) { pr = i; pc = j; found = true; }
        if (!found) break;
        std::swap(m[r0], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
        // reduce until the pivot divides its row and column
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = r0 + 1; i < rows; ++i) {
                if (m[i][c0] == 0) continue;
                Integer q = m[i][c0] / m[r0][c0];
                for (size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
                if (m[i][c0] != 0) { std::swap(m[r0], m[i]); again = true; }
            }
            for (size_t j = c0 + 1; j < cols; ++j) {
                if (m[r0][j] == 0) continue;
                Integer q = m[r0][j] / m[r0][c0];
                for (size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
                if (m[r0][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][j]);
                    again = true;
                }
            }
        }
        diag.push_back(m[r0][c0] < 0 ? Integer(-m[r0][c0]) : m[r0][c0]);
        ++r0, ++c0;
    }
    return diag;
}

RootDatum build_root_datum(const std::string& spec) {
    if (spec.empty()) throw InvalidType("empty group descriptor");
    std::vector<std::string> toks;
    size_t start = 0;
    while (true) {
        size_t p = spec.find('x', start);
        if (p == std::string::npos) {
            toks.push_back(spec.substr(start));
            break;
        }
        toks.push_back(spec.substr(start, p - start));
        start = p + 1;
    }
    std::vector<FactorSpec> fs;
    int iso = -1;
    for (const auto& t : toks) {
        FactorSpec f = parse_factor(t);
        if (f.iso != -1) {
            if (iso != -1 && iso != f.iso)
                throw InvalidType("factors disagree on the isogeny type: " + spec);
            iso = f.iso;
        }
        fs.push_back(f);
    }
    if (iso == -1) iso = 0;

    RootDatum rd;
    rd.isogeny = iso == 0 ? Isogeny::SimplyConnected : Isogeny::Adjoint;
    for (const auto& f : fs) {
        rd.factors.push_back({f.type, f.rank});
        rd.rank += f.rank;
    }
    // normalized label: per-factor suffixes collapsed to one convention
    rd.label.clear();
    for (size_t i = 0; i < fs.size(); ++i) {
        if (i) rd.label += 'x';
        rd.label += fs[i].type + std::to_string(fs[i].rank);
    }
    rd.label += iso == 0 ? "-sc" : "-adjoint";

    rd.cartan.assign(rd.rank, std::vector<int>(rd.rank, 0));
    int off = 0;
    for (const auto& f : fs) {
        auto blk = cartan_block(f.type, f.rank);
        for (int i = 0; i < f.rank; ++i)
            for (int j = 0; j < f.rank; ++j) rd.cartan[off + i][off + j] = blk[i][j];
        rd.components.push_back({off, off + f.rank, {}, {}});
        for (int d : degree_table(f.type, f.rank)) rd.degrees.push_back(d);
        off += f.rank;
    }
    std::sort(rd.degrees.begin(), rd.degrees.end());

    // close the simple roots under root strings
    std::map<std::vector<int>, int> seen;
    std::vector<std::vector<int>>& roots = rd.positive_roots;
    for (int i = 0; i < rd.rank; ++i) {
        std::vector<int> e(rd.rank, 0);
        e[i] = 1;
        seen[e] = static_cast<int>(roots.size());
        roots.push_back(e);
        rd.heights.push_back(1);
    }
    for (size_t idx = 0; idx < roots.size(); ++idx) {
        std::vector<int> beta = roots[idx];
        for (int i = 0; i < rd.rank; ++i) {
            int c = 0;
            for (int j = 0; j < rd.rank; ++j) c += beta[j] * rd.cartan[j][i];
            int p = 0;
            std::vector<int> down = beta;
            while (true) {
                down[i] -= 1;
                bool zero = std::all_of(down.begin(), down.end(), [](int v) { return v == 0; });
                if (zero || !seen.count(down)) break;
                ++p;
            }
            if (p - c > 0) {
                std::vector<int> up = beta;
                up[i] += 1;
                if (!seen.count(up)) {
                    seen[up] = static_cast<int>(roots.size());
                    roots.push_back(up);
                    rd.heights.push_back(rd.heights[idx] + 1);
                }
            }
        }
    }

    rd.dim = rd.rank + 2 * rd.num_positive_roots();
    rd.height_mult.assign(rd.rank, 0);
    for (const auto& r : roots)
        for (int j = 0; j < rd.rank; ++j) rd.height_mult[j] += r[j];

    int degsum = 0;
    for (int d : rd.degrees) degsum += d - 1;
    if (degsum != rd.num_positive_roots())
        throw MotiveError("degree table inconsistent with the root system");

    // symmetrizer: minimal positive integers with d_i*cartan[i][j] = d_j*cartan[j][i]
    {
        std::vector<Rational> d(rd.rank, Rational(0));
        for (const auto& comp : rd.components) {
            d[comp.begin] = 1;
            std::vector<int> todo{comp.begin};
            while (!todo.empty()) {
                int i = todo.back();
                todo.pop_back();
                for (int j = comp.begin; j < comp.end; ++j) {
                    if (j == i || rd.cartan[i][j] == 0 || d[j] != 0) continue;
                    d[j] = d[i] * rd.cartan[j][i] / rd.cartan[i][j];
                    todo.push_back(j);
                }
            }
            Integer den_lcm = 1;
            for (int j = comp.begin; j < comp.end; ++j)
                den_lcm = boost::multiprecision::lcm(den_lcm, denominator(d[j]));
            Integer num_gcd = 0;
            for (int j = comp.begin; j < comp.end; ++j) {
                d[j] *= den_lcm;
                num_gcd = boost::multiprecision::gcd(num_gcd, numerator(d[j]));
            }
            for (int j = comp.begin; j < comp.end; ++j) d[j] /= num_gcd;
        }
        rd.symmetrizer.resize(rd.rank);
        for (int j = 0; j < rd.rank; ++j)
            rd.symmetrizer[j] = static_cast<long>(numerator(d[j]));
    }

    // highest root and its coroot, per component
    for (auto& comp : rd.components) {
        int best = -1, best_h = -1;
        for (size_t i = 0; i < roots.size(); ++i) {
            bool inside = true;
            for (int j = 0; j < rd.rank; ++j)
                if (roots[i][j] != 0 && (j < comp.begin || j >= comp.end)) inside = false;
            if (inside && rd.heights[i] > best_h) {
                best_h = rd.heights[i];
                best = static_cast<int>(i);
            }
        }
        comp.highest_root = roots[best];
        // (theta,theta)/2 in units where (alpha_j,alpha_j)/2 = symmetrizer[j]
        Rational half_norm = 0;
        for (int j = 0; j < rd.rank; ++j)
            for (int k = 0; k < rd.rank; ++k)
                half_norm += Rational(comp.highest_root[j]) * comp.highest_root[k] *
                             rd.symmetrizer[k] * rd.cartan[j][k];
        half_norm /= 2;
        comp.highest_coroot.assign(rd.rank, 0);
        for (int k = 0; k < rd.rank; ++k) {
            Rational c = Rational(comp.highest_root[k]) * rd.symmetrizer[k] / half_norm;
            if (denominator(c) != 1) throw MotiveError("highest coroot is not integral");
            comp.highest_coroot[k] = static_cast<int>(numerator(c));
        }
    }

    if (rd.isogeny == Isogeny::Adjoint) {
        std::vector<std::vector<Integer>> m(rd.rank, std::vector<Integer>(rd.rank));
        for (int i = 0; i < rd.rank; ++i)
            for (int j = 0; j < rd.rank; ++j) m[i][j] = rd.cartan[i][j];
        Integer order = 1;
        for (const auto& e : smith_normal_diagonal(std::move(m))) order *= e;
        rd.pi1_order = order;
    }
    return rd;
}

bool Cocharacter::is_dominant() const {
    return std::all_of(pairings.begin(), pairings.end(), [](int v) { return v >= 0; });
}

Cocharacter make_cocharacter(const RootDatum& rd, const std::vector<int>& coords) {
    if (static_cast<int>(coords.size()) != rd.rank)
        throw MotiveError("cocharacter coordinate count does not match the rank");
    Cocharacter co;
    co.coords = coords;
    if (rd.isogeny == Isogeny::SimplyConnected) {
        co.pairings.assign(rd.rank, 0);
        for (int j = 0; j < rd.rank; ++j)
            for (int k = 0; k < rd.rank; ++k) co.pairings[j] += rd.cartan[j][k] * coords[k];
    } else {
        co.pairings = coords;
    }
    co.pairing_2rho = 0;
    for (int j = 0; j < rd.rank; ++j) co.pairing_2rho += rd.height_mult[j] * co.pairings[j];
    return co;
}

Cocharacter zero_cocharacter(const RootDatum& rd) {
    return make_cocharacter(rd, std::vector<int>(rd.rank, 0));
}

std::vector<Cocharacter> dominant_cochars_upto(const RootDatum& rd, int bound) {
    std::vector<Cocharacter> out;
    if (bound < 0) return out;
    std::vector<int> coords(rd.rank, 0);
    // box bound per coordinate: the 2rho pairing of a basis vector
    std::vector<int> unit_cost(rd.rank, 0);
    for (int k = 0; k < rd.rank; ++k) {
        if (rd.isogeny == Isogeny::SimplyConnected) {
            // basis vector alpha_k^vee costs sum_j h_j * cartan[j][k]
            for (int j = 0; j < rd.rank; ++j) unit_cost[k] += rd.height_mult[j] * rd.cartan[j][k];
        } else {
            unit_cost[k] = rd.height_mult[k];
        }
    }
    // for the coroot basis the cost is 2 for every k; positive either way
    for (int k = 0; k < rd.rank; ++k)
        if (unit_cost[k] <= 0) throw MotiveError("degenerate 2rho pairing");
    auto rec = [&](auto&& self, int pos, int budget) -> void {
        if (pos == rd.rank) {
            Cocharacter co = make_cocharacter(rd, coords);
            if (co.is_dominant() && co.pairing_2rho <= bound) out.push_back(co);
            return;
        }
        for (int v = 0; v * unit_cost[pos] <= budget; ++v) {
            coords[pos] = v;
            self(self, pos + 1, budget - v * unit_cost[pos]);
        }
        coords[pos] = 0;
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end(), [](const Cocharacter& a, const Cocharacter& b) {
        if (a.pairing_2rho != b.pairing_2rho) return a.pairing_2rho < b.pairing_2rho;
        return a.coords < b.coords;
    });
    return out;
}

long pairing(const RootDatum& rd, const Cocharacter& lambda, const std::vector<int>& chi) {
    if (static_cast<int>(chi.size()) != rd.rank)
        throw MotiveError("character coordinate count does not match the rank");
    long s = 0;
    for (int j = 0; j < rd.rank; ++j) s += static_cast<long>(chi[j]) * lambda.pairings[j];
    return s;
}

}  // namespace motives
