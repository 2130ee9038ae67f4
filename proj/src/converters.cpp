#include "rlz/converters.hpp"

#include <algorithm>
#include <cassert>

#include "rlz/run_samples.hpp"

namespace rlz {

rlbwt_index reverse_rlbwt(const rlbwt_index& idx) {
    rlbwt_index out;
    auto ex = idx.extract_forward();
    symbol first = ex.next();
    if (first != BWT_TERM)
        throw validation_error("reverse_rlbwt: extraction did not start at '#'");
    while (ex.has_next()) out.extend(ex.next());
    return out;
}

/*
 * Greedy factorization by a forward scan of T. The scan LF-walks
 * index_rev (LF there advances one position forward in T). A second,
 * growing index holds exactly the scanned prefix, so a backward step
 * succeeds iff the current phrase extended by the next character occurs
 * with an earlier starting position -- the greedy test is exact.
 *
 * Sources: every row of the growing index is a rotation starting at
 * some text position e, which is where an occurrence of the reversed
 * pattern ends. When a phrase closes, its interval still contains every
 * occurrence of the phrase body; any row other than the terminator row
 * ends strictly before the phrase, so source = e - length + 1. The e is
 * read from a per-run suffix-array sample inside the interval, or, if
 * the interval only crosses run interiors that kept no sample, from an
 * exact LF walk to the terminator row (counted as a fallback).
 */
lz77_parse lz_factorize(const rlbwt_index& index_rev, conversion_stats* stats) {
    size_t n = index_rev.size();
    lz77_parse out;
    if (n == 0) return out;

    // position 0 is '#': unique, so always a literal phrase
    out.phrases.push_back({lz77_phrase::null_src, 0, BWT_TERM});
    if (n == 1) return out;

    rlbwt_index grow; // index of the scanned prefix T[0..i)
    run_samples samples;

    auto track = [&]() {
        if (!stats) return;
        stats->peak_runs = std::max(stats->peak_runs, grow.runs());
        stats->peak_nodes =
            std::max(stats->peak_nodes, grow.stored().node_count() + samples.slots());
        stats->peak_samples = std::max(stats->peak_samples, samples.sample_count());
        if (samples.sample_count() > 2 * grow.runs()) stats->sample_bound_ok = false;
    };

    // feed T[i] into the growing index; the materialized run character
    // belongs to the rotation starting at position i-1
    auto feed = [&](symbol c, size_t i) {
        auto res = grow.extend(c);
        samples.apply(res.ev, i - 1);
        track();
        return res;
    };

    // an occurrence of the closed phrase ends at some row of its final
    // interval [l, r); every such row except the terminator row ends
    // strictly before the phrase, and the last successful extension
    // guarantees a non-terminator row exists
    auto locate_source = [&](size_t l, size_t r, size_t i) -> uint64_t {
        size_t term = grow.term_row();
        size_t slo = l - (term < l ? 1 : 0);
        size_t shi = r - (term < r ? 1 : 0);
        if (auto hit = samples.find_in(grow.stored(), slo, shi)) return *hit;
        if (stats) ++stats->sample_fallbacks;
        size_t w = l != term ? l : l + 1;
        size_t steps = 0;
        while (w != term) {
            w = grow.lf(w);
            ++steps;
        }
        return (i - 1) - steps;
    };

    size_t v = 0;               // walk row in index_rev
    size_t s = 1;               // start of the open phrase
    size_t l = 0, r = grow.size(); // interval of the reversed open phrase

    for (size_t i = 1; i < n; ++i) {
        v = index_rev.lf(v);
        symbol c = index_rev.f_access(v); // c = T[i]

        auto [cl, cr] = grow.backward_step(l, r, c);
        if (cl < cr) {
            size_t j = feed(c, i).row;
            // rows >= j shifted up by one and row j joined the interval
            size_t na = cl + (cl >= j ? 1 : 0);
            size_t nb = cr + (j < cr ? 1 : 0);
            l = std::min(na, j);
            r = std::max(nb, j + 1);
            assert(r - l == (cr - cl) + 1);
        } else {
            uint64_t len = i - s;
            if (len == 0)
                out.phrases.push_back({lz77_phrase::null_src, 0, c});
            else
                out.phrases.push_back({locate_source(l, r, i) - len + 1, len, c});
            feed(c, i);
            s = i + 1;
            l = 0;
            r = grow.size();
        }
    }
    return out;
}

lz77_parse rlbwt_to_lz77(const rlbwt_runs& runs, conversion_stats* stats) {
    rlbwt_index idx = rlbwt_index::from_runs(runs);
    rlbwt_index rev = reverse_rlbwt(idx);
    return lz_factorize(rev, stats);
}

/*
 * Rebuilds the index of BWT(reverse T) from the parse, left to right.
 * Each new character lands at the row extend() returns, which is the
 * row of the rotation starting at its text position; the dynamic
 * function keeps that position -> row map current for phrase sources as
 * later insertions shift rows. Copied characters are read off the F
 * column of the tracked source row, which an LF step then advances one
 * text position forward.
 */
rlbwt_runs lz77_to_rlbwt(const lz77_parse& parse, conversion_stats* stats,
                         const step_observer& observe) {
    parse.validate();

    std::vector<uint64_t> sources;
    for (auto& p : parse.phrases)
        if (p.src != lz77_phrase::null_src) sources.push_back(p.src);
    dyn_function srcmap(std::move(sources));

    rlbwt_index idx; // grows into the index of BWT(reverse T)
    uint64_t i = 0;  // next text position

    auto place = [&](symbol c) -> size_t {
        size_t j;
        if (i == 0) {
            if (c != BWT_TERM)
                throw validation_error("lz77_to_rlbwt: text must start with '#'");
            j = 0; // the empty index already holds '#' at row 0
        } else {
            if (c == BWT_TERM)
                throw validation_error("lz77_to_rlbwt: '#' inside the text");
            j = idx.extend(c).row;
        }
        if (srcmap.in_domain(i))
            srcmap.assign(i, j);
        else
            srcmap.expand(j);
        if (observe) observe(i, j, srcmap);
        if (stats) {
            stats->peak_runs = std::max(stats->peak_runs, idx.runs());
            stats->peak_nodes = std::max(
                stats->peak_nodes, idx.stored().node_count() + srcmap.node_count());
        }
        ++i;
        return j;
    };

    for (auto& ph : parse.phrases) {
        if (ph.len > 0) {
            size_t jp = static_cast<size_t>(srcmap.map(ph.src)); // row of the source position
            for (uint64_t k = 0; k < ph.len; ++k) {
                symbol c = idx.f_access(jp);
                size_t j = place(c);
                if (j <= jp) ++jp; // the insertion shifted the tracked row
                jp = idx.lf(jp);   // advance the source one position forward
            }
        }
        place(ph.trail);
    }

    return reverse_rlbwt(idx).to_runs();
}

} // namespace rlz
