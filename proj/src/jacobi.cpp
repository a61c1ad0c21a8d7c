#include "colorvir/jacobi.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace colorvir {

Element jacobi_residual(const Generator& a, const Generator& b, const Generator& c,
                        const AlgebraParams& p) {
    const Degree da = degree_of(a, p);
    const Degree db = degree_of(b, p);
    const Degree dc = degree_of(c, p);
    const Element ea = Element::unit(a), eb = Element::unit(b), ec = Element::unit(c);
    const auto sgn = [](int dot) { return GaussianRational(dot ? -1 : 1); };

    Element r = sgn(da.dot(dc)) * bracket_elements(ea, bracket_elements(eb, ec, p), p);
    r += sgn(db.dot(da)) * bracket_elements(eb, bracket_elements(ec, ea, p), p);
    r += sgn(dc.dot(db)) * bracket_elements(ec, bracket_elements(ea, eb, p), p);
    return r;
}

namespace {

// Cached oriented bracket ⟦basis[i], basis[j]⟧, i ≤ j.  No entry of the
// table expands into more than two raw terms.
struct PairEntry {
    RawTerm term[2];
    std::uint8_t n = 0;
    bool escapes = false;  // some structural term lies outside the window
};

struct Slot {
    std::uint64_t checked = 0;
    std::uint64_t escaped = 0;
    std::vector<TripleFailure> failures;
};

}  // namespace

JacobiReport verify_window(const AlgebraParams& p, const Window& w, int workers) {
    JacobiReport rep;
    rep.params = p;
    rep.window = w;

    const std::vector<Generator> basis = window_basis(p, w);
    const std::size_t n = basis.size();
    const CocycleTables tables(p);

    std::vector<Degree> deg(n);
    for (std::size_t i = 0; i < n; ++i) deg[i] = degree_unchecked(basis[i].kind);

    // Upper-triangular cache of every pairwise bracket: the triple loop
    // below touches each pair O(n) times.
    const auto tri = [n](std::size_t i, std::size_t j) {
        return i * n - i * (i - 1) / 2 + (j - i);
    };
    std::vector<PairEntry> cache(n * (n + 1) / 2);
    {
        TermBuf<4> buf;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                buf.clear();
                bracket_core(basis[i], basis[j], p, tables, GaussianRational(1), false,
                             buf);
                if (buf.n > 2)
                    throw std::logic_error("bracket expansion exceeded table bound");
                PairEntry& e = cache[tri(i, j)];
                e.n = static_cast<std::uint8_t>(buf.n);
                for (std::size_t t = 0; t < buf.n; ++t) {
                    e.term[t] = buf.data[t];
                    if (!is_central(buf.data[t].gen.kind) &&
                        !in_window(buf.data[t].gen, w))
                        e.escapes = true;
                }
            }
    }

    // All (j, k) triples above one first index i; results land in a slot
    // owned by i so that merging is deterministic.
    const auto process_first = [&](std::size_t i, Slot& slot) {
        TermBuf<32> buf;
        const Generator& a = basis[i];
        const Degree da = deg[i];
        for (std::size_t j = i; j < n; ++j) {
            const Generator& b = basis[j];
            const Degree db = deg[j];
            const PairEntry& ab = cache[tri(i, j)];
            const GaussianRational s_ba(db.dot(da) ? -1 : 1);
            for (std::size_t k = j; k < n; ++k) {
                const PairEntry& bc = cache[tri(j, k)];
                const PairEntry& ac = cache[tri(i, k)];
                if (ab.escapes || bc.escapes || ac.escapes) {
                    ++slot.escaped;
                    continue;
                }
                const Generator& c = basis[k];
                const Degree dc = deg[k];
                ++slot.checked;

                buf.clear();
                // (−1)^{a·c} ⟦a, ⟦b,c⟧⟧
                const GaussianRational s1(da.dot(dc) ? -1 : 1);
                for (std::size_t t = 0; t < bc.n; ++t)
                    bracket_core(a, bc.term[t].gen, p, tables, s1 * bc.term[t].coeff,
                                 false, buf);
                // (−1)^{b·a} ⟦b, ⟦c,a⟧⟧ with ⟦c,a⟧ = −(−1)^{a·c} ⟦a,c⟧
                const GaussianRational s2 = s_ba * GaussianRational(da.dot(dc) ? 1 : -1);
                for (std::size_t t = 0; t < ac.n; ++t)
                    bracket_core(b, ac.term[t].gen, p, tables, s2 * ac.term[t].coeff,
                                 false, buf);
                // (−1)^{c·b} ⟦c, ⟦a,b⟧⟧
                const GaussianRational s3(dc.dot(db) ? -1 : 1);
                for (std::size_t t = 0; t < ab.n; ++t)
                    bracket_core(c, ab.term[t].gen, p, tables, s3 * ab.term[t].coeff,
                                 false, buf);

                if (buf.n == 0) continue;
                std::sort(buf.data.begin(), buf.data.begin() + buf.n,
                          [](const RawTerm& x, const RawTerm& y) { return x.gen < y.gen; });
                bool bad = false;
                for (std::size_t t = 0; t < buf.n && !bad;) {
                    GaussianRational sum = buf.data[t].coeff;
                    std::size_t t2 = t + 1;
                    while (t2 < buf.n && buf.data[t2].gen == buf.data[t].gen)
                        sum += buf.data[t2++].coeff;
                    if (!sum.is_zero()) bad = true;
                    t = t2;
                }
                if (bad) {
                    Element r;
                    for (const RawTerm& rt : buf) r.add_term(rt.gen, rt.coeff);
                    slot.failures.push_back(TripleFailure{a, b, c, std::move(r)});
                }
            }
        }
    };

    std::vector<Slot> slots(n);
    const int nw = std::max(1, workers);
    if (nw == 1) {
        for (std::size_t i = 0; i < n; ++i) process_first(i, slots[i]);
    } else {
        std::atomic<std::size_t> next{0};
        const auto body = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                process_first(i, slots[i]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nw));
        for (int t = 0; t < nw; ++t) pool.emplace_back(body);
        for (auto& th : pool) th.join();
    }

    for (auto& s : slots) {
        rep.triples_checked += s.checked;
        rep.escaped += s.escaped;
        for (auto& f : s.failures) rep.failures.push_back(std::move(f));
    }
    return rep;
}

}  // namespace colorvir
