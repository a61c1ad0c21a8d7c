#include "colorvir/classifier.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace colorvir {

std::string CochainPair::to_string() const {
    return "(" + a.to_string() + ", " + b.to_string() + ")";
}

namespace {

// ---------------------------------------------------------------------------
// Content bi-grading.  The structural bracket adds (P-family, X-family)
// contents, so unknowns and constraint rows split into independent blocks.
// ---------------------------------------------------------------------------

struct Content {
    int p = 0, x = 0;
    friend bool operator==(Content a, Content b) { return a.p == b.p && a.x == b.x; }
    friend bool operator<(Content a, Content b) {
        return a.p != b.p ? a.p < b.p : a.x < b.x;
    }
    friend Content operator+(Content a, Content b) { return {a.p + b.p, a.x + b.x}; }
};

Content content_of(GenKind k) {
    switch (k) {
        case GenKind::L: return {0, 0};
        case GenKind::P: return {1, 0};
        case GenKind::X: return {0, 1};
        case GenKind::P2: return {2, 0};
        case GenKind::X2: return {0, 2};
        case GenKind::T: return {1, 1};
        default: throw std::logic_error("content of a central symbol");
    }
}

int sector_slot(Degree d) {
    const auto all = all_degrees();
    for (int s = 0; s < 4; ++s)
        if (all[static_cast<std::size_t>(s)] == d) return s;
    throw std::logic_error("unreachable sector");
}

HalfInt total_index(const Generator& g) { return g.i1 + g.i2; }

// ---------------------------------------------------------------------------
// Assembly of the four sector systems in one sweep over the window.
// ---------------------------------------------------------------------------

// Cached oriented bracket ⟦basis[i], basis[j]⟧ (central terms stripped),
// i ≤ j.  No entry of the table expands into more than two raw terms.
struct PairEntry {
    RawTerm term[2];
    std::uint8_t n = 0;
    bool escapes = false;  // some term lies outside the window
};

void normalize_row(std::vector<std::pair<std::uint32_t, Rational>>& acc, SparseRow& out) {
    out.clear();
    std::sort(acc.begin(), acc.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t t = 0; t < acc.size();) {
        Rational sum = acc[t].second;
        std::size_t t2 = t + 1;
        while (t2 < acc.size() && acc[t2].first == acc[t].first) sum = sum + acc[t2++].second;
        if (!sum.is_zero()) out.emplace_back(acc[t].first, sum);
        t = t2;
    }
    if (out.empty()) return;
    // Primitive integer scaling with positive leading entry.
    std::int64_t l = 1;
    for (const auto& [c, v] : out) l = std::lcm(l, v.den());
    std::int64_t g = 0;
    for (auto& [c, v] : out) {
        v = v * Rational(l);
        g = std::gcd(g, v.num());
    }
    const std::int64_t s = out.front().second.sign() < 0 ? -g : g;
    for (auto& [c, v] : out) v = Rational(v.num() / s);
}

std::array<CocycleSystem, 4> build_all(const AlgebraParams& p, const Window& w) {
    // The baseline is the non-extended table; central functions never enter.
    const AlgebraParams base(p.l1, p.l2, false, p.rho);
    const CocycleTables tables(base);

    std::vector<Generator> basis;
    {
        std::vector<Generator> full = window_basis(base, w);
        for (const Generator& g : full)
            if (!is_central(g.kind)) basis.push_back(g);
    }
    const std::size_t n = basis.size();

    std::vector<Degree> deg(n);
    std::vector<std::int64_t> idx2(n);  // twice the total index
    for (std::size_t i = 0; i < n; ++i) {
        deg[i] = degree_unchecked(basis[i].kind);
        idx2[i] = total_index(basis[i]).twice();
    }

    const auto tri = [n](std::size_t i, std::size_t j) {
        return i * n - i * (i - 1) / 2 + (j - i);
    };
    std::vector<PairEntry> cache(n * (n + 1) / 2);
    {
        TermBuf<4> buf;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                buf.clear();
                bracket_core(basis[i], basis[j], base, tables, GaussianRational(1),
                             /*strip_center=*/true, buf);
                if (buf.n > 2)
                    throw std::logic_error("bracket expansion exceeded table bound");
                PairEntry& e = cache[tri(i, j)];
                e.n = static_cast<std::uint8_t>(buf.n);
                for (std::size_t t = 0; t < buf.n; ++t) {
                    e.term[t] = buf.data[t];
                    if (!in_window(buf.data[t].gen, w)) e.escapes = true;
                }
            }
    }

    // Canonical unknowns, restricted to total index 0; the self-pair (a,a)
    // only survives when deg(a)·deg(a) is odd.
    struct SectorBuild {
        std::vector<CochainPair> unknowns;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> upos;  // basis positions
        std::map<std::pair<Generator, Generator>, std::uint32_t> index;
        std::set<SparseRow> rows;
        std::vector<SparseRow> coboundaries;
    };
    std::array<SectorBuild, 4> sb;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (idx2[i] + idx2[j] != 0) continue;
            if (i == j && deg[i].dot(deg[i]) == 0) continue;
            SectorBuild& b = sb[static_cast<std::size_t>(sector_slot(deg[i] + deg[j]))];
            b.index.emplace(std::make_pair(basis[i], basis[j]),
                            static_cast<std::uint32_t>(b.unknowns.size()));
            b.unknowns.push_back(CochainPair{basis[i], basis[j]});
            b.upos.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }

    // One constraint row per index-0 in-window triple whose inner brackets
    // stay inside the window.
    std::map<std::int64_t, std::vector<std::size_t>> by_index;
    for (std::size_t i = 0; i < n; ++i) by_index[idx2[i]].push_back(i);

    std::vector<std::pair<std::uint32_t, Rational>> acc;
    SparseRow row;

    const auto coeff_re = [](const GaussianRational& c) {
        if (!c.im().is_zero())
            throw std::logic_error("structural bracket produced a complex coefficient");
        return c.re();
    };

    // ω(x, g) resolved against the canonical unknown storage.
    const auto add_ref = [&](SectorBuild& b, const Generator& x, Degree dx,
                             const Generator& g, const Rational& coef) {
        const Generator* lo = &x;
        const Generator* hi = &g;
        Rational c = coef;
        if (x == g) {
            if (dx.dot(dx) == 0) return;  // ω(a,a) = 0 for an even pair
        } else if (g < x) {
            lo = &g;
            hi = &x;
            // ω(x,g) = −(−1)^{deg(x)·deg(g)} ω(g,x)
            if (dx.dot(degree_unchecked(g.kind)) == 0) c = -c;
        }
        const auto it = b.index.find(std::make_pair(*lo, *hi));
        if (it == b.index.end())
            throw std::logic_error("constraint row referenced a missing unknown");
        acc.emplace_back(it->second, c);
    };

    for (std::size_t i = 0; i < n; ++i) {
        const Generator& a = basis[i];
        const Degree da = deg[i];
        for (std::size_t j = i; j < n; ++j) {
            const Generator& b = basis[j];
            const Degree db = deg[j];
            const PairEntry& ab = cache[tri(i, j)];
            const auto it = by_index.find(-(idx2[i] + idx2[j]));
            if (it == by_index.end()) continue;
            const auto& lst = it->second;
            for (auto kt = std::lower_bound(lst.begin(), lst.end(), j); kt != lst.end();
                 ++kt) {
                const std::size_t k = *kt;
                const PairEntry& bc = cache[tri(j, k)];
                const PairEntry& ac = cache[tri(i, k)];
                if (ab.escapes || bc.escapes || ac.escapes) continue;
                const Generator& c = basis[k];
                const Degree dc = deg[k];
                SectorBuild& sec =
                    sb[static_cast<std::size_t>(sector_slot(da + db + dc))];

                acc.clear();
                // (−1)^{a·c} ω(a, ⟦b,c⟧)
                const Rational s1(da.dot(dc) ? -1 : 1);
                for (std::size_t t = 0; t < bc.n; ++t)
                    add_ref(sec, a, da, bc.term[t].gen, s1 * coeff_re(bc.term[t].coeff));
                // (−1)^{b·a} ω(b, ⟦c,a⟧) with ⟦c,a⟧ = −(−1)^{a·c} ⟦a,c⟧
                const Rational s2 =
                    Rational(db.dot(da) ? -1 : 1) * Rational(da.dot(dc) ? 1 : -1);
                for (std::size_t t = 0; t < ac.n; ++t)
                    add_ref(sec, b, db, ac.term[t].gen, s2 * coeff_re(ac.term[t].coeff));
                // (−1)^{c·b} ω(c, ⟦a,b⟧)
                const Rational s3(dc.dot(db) ? -1 : 1);
                for (std::size_t t = 0; t < ab.n; ++t)
                    add_ref(sec, c, dc, ab.term[t].gen, s3 * coeff_re(ab.term[t].coeff));

                normalize_row(acc, row);
                if (!row.empty()) sec.rows.insert(row);
            }
        }
    }

    // Coboundary vectors: (δf_g)(a,b) = coefficient of g in ⟦a,b⟧, one per
    // in-window index-0 generator g of the sector's degree.
    for (std::size_t gi = 0; gi < n; ++gi) {
        if (idx2[gi] != 0) continue;
        SectorBuild& b = sb[static_cast<std::size_t>(sector_slot(deg[gi]))];
        const Content cg = content_of(basis[gi].kind);
        SparseRow v;
        for (std::uint32_t u = 0; u < b.unknowns.size(); ++u) {
            const CochainPair& pr = b.unknowns[u];
            if (!(content_of(pr.a.kind) + content_of(pr.b.kind) == cg)) continue;
            const PairEntry& e = cache[tri(b.upos[u].first, b.upos[u].second)];
            // Both terms of a two-term action can land on the same generator
            // (m = 0, or equal composite indices), so accumulate per pair.
            Rational cv;
            for (std::size_t t = 0; t < e.n; ++t)
                if (e.term[t].gen == basis[gi]) cv += coeff_re(e.term[t].coeff);
            if (!cv.is_zero()) v.emplace_back(u, cv);
        }
        b.coboundaries.push_back(std::move(v));
    }

    std::array<CocycleSystem, 4> out;
    const auto degs = all_degrees();
    for (int s = 0; s < 4; ++s) {
        auto& b = sb[static_cast<std::size_t>(s)];
        CocycleSystem& sys = out[static_cast<std::size_t>(s)];
        sys.params = p;
        sys.window = w;
        sys.sector = degs[static_cast<std::size_t>(s)];
        sys.unknowns = std::move(b.unknowns);
        sys.constraints.assign(b.rows.begin(), b.rows.end());
        sys.coboundaries = std::move(b.coboundaries);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact sparse reduced row echelon form over ℚ.
// ---------------------------------------------------------------------------

using QRow = std::vector<std::pair<std::uint32_t, mpq_class>>;

// a + f·b, columns merged, zeros dropped.
QRow axpy(const QRow& a, const QRow& b, const mpq_class& f) {
    QRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            mpq_class v = f * b[j].second;
            if (v != 0) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            mpq_class v = a[i].second + f * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Incrementally maintained RREF.  The final pivot set and rows depend only on
// the span of the rows fed in, never on their order, so every downstream
// result (ranks, kernels, representatives) is deterministic.
class Rref {
public:
    void reduce(QRow& r) const {
        std::size_t i = 0;
        while (i < r.size()) {
            const auto it = pivots_.find(r[i].first);
            if (it == pivots_.end()) {
                ++i;
                continue;
            }
            // Cancels column r[i].first exactly; only later columns change.
            r = axpy(r, it->second, -r[i].second);
        }
    }

    bool add(QRow r) {
        reduce(r);
        if (r.empty()) return false;
        if (r.front().second != 1) {
            const mpq_class inv = 1 / r.front().second;
            for (auto& [c, v] : r) v *= inv;
        }
        const std::uint32_t pc = r.front().first;
        for (auto& [c, row] : pivots_) {
            const auto it = find_col(row, pc);
            if (it != row.end()) row = axpy(row, r, -it->second);
        }
        pivots_.emplace(pc, std::move(r));
        return true;
    }

    [[nodiscard]] std::size_t rank() const { return pivots_.size(); }
    [[nodiscard]] const std::map<std::uint32_t, QRow>& pivots() const { return pivots_; }

    // Kernel basis over the given (ascending) column set: one vector per
    // free column, in free-column order.
    [[nodiscard]] std::vector<QRow> kernel(const std::vector<std::uint32_t>& cols) const {
        std::vector<QRow> out;
        for (const std::uint32_t f : cols) {
            if (pivots_.count(f) != 0) continue;
            QRow v;
            for (const auto& [pc, row] : pivots_) {
                const auto it = find_col(row, f);
                if (it != row.end()) v.emplace_back(pc, -it->second);
            }
            v.emplace_back(f, 1);
            std::sort(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    static QRow::const_iterator find_col(const QRow& row, std::uint32_t c) {
        const auto it = std::lower_bound(
            row.begin(), row.end(), c,
            [](const auto& e, std::uint32_t col) { return e.first < col; });
        return it != row.end() && it->first == c ? it : row.end();
    }

    std::map<std::uint32_t, QRow> pivots_;
};

mpq_class to_q(const Rational& r) {
    return {static_cast<long>(r.num()), static_cast<long>(r.den())};
}

QRow to_qrow(const SparseRow& r) {
    QRow out;
    out.reserve(r.size());
    for (const auto& [c, v] : r) out.emplace_back(c, to_q(v));
    return out;
}

mpq_class dot(const QRow& a, const QRow& b) {
    mpq_class s = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            ++i;
        } else if (b[j].first < a[i].first) {
            ++j;
        } else {
            s += a[i++].second * b[j++].second;
        }
    }
    return s;
}

// Primitive integer form with positive first entry.
SparseRow primitive(const QRow& v) {
    mpz_class l = 1;
    for (const auto& [c, q] : v) l = lcm(l, q.get_den());
    std::vector<std::pair<std::uint32_t, mpz_class>> ints;
    ints.reserve(v.size());
    mpz_class g = 0;
    for (const auto& [c, q] : v) {
        mpz_class z = q.get_num() * (l / q.get_den());
        g = gcd(g, z);
        ints.emplace_back(c, std::move(z));
    }
    if (g == 0) return {};
    if (ints.front().second < 0) g = -g;
    SparseRow out;
    out.reserve(ints.size());
    for (auto& [c, z] : ints) {
        const mpz_class q = z / g;
        if (!q.fits_slong_p())
            throw OverflowError("representative entry exceeds 64-bit range");
        out.emplace_back(c, Rational(q.get_si()));
    }
    return out;
}

struct Solved {
    SolveResult res;
    std::map<Content, std::vector<std::uint32_t>> blocks;  // column sets
    std::map<Content, Rref> ra;                            // constraints only
};

Content block_of_row(const CocycleSystem& sys, const SparseRow& r) {
    const CochainPair& pr = sys.unknowns[r.front().first];
    return content_of(pr.a.kind) + content_of(pr.b.kind);
}

Solved solve_core(const CocycleSystem& sys) {
    Solved s;
    for (std::uint32_t u = 0; u < sys.unknowns.size(); ++u) {
        const CochainPair& pr = sys.unknowns[u];
        s.blocks[content_of(pr.a.kind) + content_of(pr.b.kind)].push_back(u);
    }

    for (const SparseRow& r : sys.constraints) {
        if (r.empty()) continue;
        s.ra[block_of_row(sys, r)].add(to_qrow(r));
    }
    std::map<Content, Rref> rab = s.ra;
    for (const SparseRow& r : sys.coboundaries) {
        if (r.empty()) continue;
        rab[block_of_row(sys, r)].add(to_qrow(r));
    }

    std::size_t rank_a = 0, rank_ab = 0;
    for (const auto& [ct, rr] : s.ra) rank_a += rr.rank();
    for (const auto& [ct, rr] : rab) rank_ab += rr.rank();

    s.res.cocycle_dim =
        static_cast<std::int64_t>(sys.unknowns.size()) - static_cast<std::int64_t>(rank_a);
    s.res.coboundary_rank = static_cast<std::int64_t>(rank_ab - rank_a);
    s.res.quotient_dim = s.res.cocycle_dim - s.res.coboundary_rank;

    // Representatives: kernel of [constraints; coboundaries], block by block.
    // Coboundary vectors are cocycles, so this kernel is exactly the subspace
    // of the cocycle kernel orthogonal to the coboundary span, and its
    // dimension is the quotient dimension.
    for (const auto& [ct, cols] : s.blocks) {
        const auto it = rab.find(ct);
        if (it == rab.end()) {
            for (const std::uint32_t f : cols)
                s.res.representatives.push_back(primitive(QRow{{f, mpq_class(1)}}));
            continue;
        }
        for (const QRow& v : it->second.kernel(cols))
            s.res.representatives.push_back(primitive(v));
    }
    if (static_cast<std::int64_t>(s.res.representatives.size()) != s.res.quotient_dim)
        throw std::logic_error("quotient dimension mismatch in kernel extraction");
    return s;
}

// Checks the closed-form central table against the computed spaces: the
// per-symbol coefficient vectors of the corrected extended bracket must be
// cocycles, independent modulo coboundaries, and together with the
// coboundaries span the cocycle kernel.
bool theorem_match(const CocycleSystem& sys, const Solved& sol) {
    const AlgebraParams pe(sys.params.l1, sys.params.l2, true, RhoMode::corrected);

    std::vector<GenKind> kinds;
    for (const GenKind k : admissible_central_kinds(pe))
        if (degree_unchecked(k) == sys.sector) kinds.push_back(k);
    std::sort(kinds.begin(), kinds.end());

    std::map<GenKind, QRow> vecs;
    for (const GenKind k : kinds) vecs[k] = {};
    for (std::uint32_t u = 0; u < sys.unknowns.size(); ++u) {
        const CochainPair& pr = sys.unknowns[u];
        const Element e = color_bracket(pr.a, pr.b, pe);
        for (const auto& [g, c] : e.terms()) {
            if (!is_central(g.kind)) continue;
            const auto it = vecs.find(g.kind);
            if (it == vecs.end()) continue;
            if (!c.im().is_zero())
                throw std::logic_error("central coefficient is not real");
            if (!c.re().is_zero()) it->second.emplace_back(u, to_q(c.re()));
        }
    }

    // (a) Every theorem vector is annihilated by the constraint row space.
    for (const auto& [k, v] : vecs) {
        if (v.empty()) continue;
        const CochainPair& pr = sys.unknowns[v.front().first];
        const Content ct = content_of(pr.a.kind) + content_of(pr.b.kind);
        const auto it = sol.ra.find(ct);
        if (it == sol.ra.end()) continue;
        for (const auto& [pc, row] : it->second.pivots())
            if (dot(row, v) != 0) return false;
    }

    // (b) Each vector extends the coboundary span by one dimension.
    std::map<Content, Rref> rb;
    for (const SparseRow& r : sys.coboundaries) {
        if (r.empty()) continue;
        rb[block_of_row(sys, r)].add(to_qrow(r));
    }
    for (const auto& [k, v] : vecs) {
        if (v.empty()) return false;  // the symbol vanishes on this window
        const CochainPair& pr = sys.unknowns[v.front().first];
        const Content ct = content_of(pr.a.kind) + content_of(pr.b.kind);
        if (!rb[ct].add(v)) return false;
    }

    // (c) Together with the coboundaries the vectors span the cocycle kernel.
    std::size_t spanned = 0;
    for (const auto& [ct, rr] : rb) spanned += rr.rank();
    return static_cast<std::int64_t>(spanned) == sol.res.cocycle_dim;
}

}  // namespace

CocycleSystem build_system(const AlgebraParams& p, const Window& w, Degree sector) {
    auto all = build_all(p, w);
    return std::move(all[static_cast<std::size_t>(sector_slot(sector))]);
}

SolveResult solve(const CocycleSystem& sys) { return solve_core(sys).res; }

ExtensionReport classify(const AlgebraParams& p, const Window& w) {
    ExtensionReport rep;
    rep.params = p;
    rep.window = w;
    auto systems = build_all(p, w);
    for (std::size_t s = 0; s < 4; ++s) {
        CocycleSystem& sys = systems[s];
        Solved sol = solve_core(sys);
        SectorSolution& out = rep.sectors[s];
        out.sector = sys.sector;
        out.cocycle_dim = sol.res.cocycle_dim;
        out.coboundary_rank = sol.res.coboundary_rank;
        out.quotient_dim = sol.res.quotient_dim;
        out.theorem_match = theorem_match(sys, sol);
        out.representatives = std::move(sol.res.representatives);
        out.unknowns = std::move(sys.unknowns);
    }
    return rep;
}

bool verify_theorem_basis(const AlgebraParams& p, const Window& w) {
    return classify(p, w).theorem_match();
}

StabilizationTable stabilization_scan(const AlgebraParams& p,
                                      const std::vector<Window>& windows) {
    if (windows.empty()) throw ParamError("stabilization scan needs at least one window");
    for (std::size_t i = 1; i < windows.size(); ++i) {
        const Window& a = windows[i - 1];
        const Window& b = windows[i];
        const bool grows = b.m_max >= a.m_max && b.r_max >= a.r_max && b.u_max >= a.u_max &&
                           (b.m_max > a.m_max || b.r_max > a.r_max || b.u_max > a.u_max);
        if (!grows) throw ParamError("stabilization windows must be strictly increasing");
    }

    StabilizationTable table;
    for (const Window& w : windows) {
        StabilizationRow row;
        row.window = w;
        auto systems = build_all(p, w);
        for (std::size_t s = 0; s < 4; ++s) {
            row.dims[s] = solve_core(systems[s]).res.quotient_dim;
            row.total += row.dims[s];
        }
        table.rows.push_back(row);
    }

    const auto& last = table.rows.back().dims;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        bool tail_constant = true;
        for (std::size_t j = i; j < table.rows.size() && tail_constant; ++j)
            tail_constant = table.rows[j].dims == last;
        if (tail_constant) {
            table.stable_from = static_cast<int>(i);
            break;
        }
    }
    return table;
}

}  // namespace colorvir
