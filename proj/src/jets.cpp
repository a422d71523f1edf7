#include "nambu/jets.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "nambu/errors.hpp"

namespace nambu {

namespace {

// Sparse row over jet columns, entries sorted by column index.
using Row = std::vector<std::pair<int, Rat>>;

struct JetFrame {
    int nvars;
    int rank; // ambient rank p
    int cutoff;
    std::vector<Expo> monos;                           // graded enumeration
    std::unordered_map<Expo, int, ExpoHash> mono_index;

    JetFrame(int nvars_, int rank_, int cutoff_) : nvars(nvars_), rank(rank_), cutoff(cutoff_) {
        monos = monomials_up_to(nvars, cutoff);
        mono_index.reserve(monos.size() * 2);
        for (int i = 0; i < static_cast<int>(monos.size()); ++i) mono_index[monos[i]] = i;
    }

    int ncols() const { return static_cast<int>(monos.size()) * rank; }

    int col(int slot, const Expo& m) const {
        auto it = mono_index.find(m);
        assert(it != mono_index.end());
        return it->second * rank + slot;
    }
};

// row - factor * pivot, both sorted by column
Row row_axpy(const Row& row, const Rat& factor, const Row& pivot) {
    Row next;
    next.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() && j < pivot.size()) {
        if (row[i].first == pivot[j].first) {
            Rat v = row[i].second - factor * pivot[j].second;
            if (!is_zero(v)) next.emplace_back(row[i].first, std::move(v));
            ++i, ++j;
        } else if (row[i].first < pivot[j].first) {
            next.push_back(row[i++]);
        } else {
            next.emplace_back(pivot[j].first, -factor * pivot[j].second);
            ++j;
        }
    }
    for (; i < row.size(); ++i) next.push_back(row[i]);
    for (; j < pivot.size(); ++j) next.emplace_back(pivot[j].first, -factor * pivot[j].second);
    return next;
}

// Forward-elimination echelon keyed by leading column. Rank only; the
// non-pivot columns are exactly the surviving quotient classes.
struct Echelon {
    std::unordered_map<int, Row> pivots; // leading column -> normalized row

    // returns true if the row was independent (a new pivot was created)
    bool insert(Row row) {
        while (!row.empty()) {
            const int lead = row.front().first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                const Rat inv = Rat(1) / row.front().second;
                for (auto& [c, v] : row) v *= inv;
                pivots.emplace(lead, std::move(row));
                return true;
            }
            row = row_axpy(row, row.front().second, it->second);
        }
        return false;
    }

    // reduce without inserting; true iff the row reduces to zero
    bool reduces_to_zero(Row row) const {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) return false;
            row = row_axpy(row, row.front().second, it->second);
        }
        return true;
    }
};

Row tuple_row(const JetFrame& frame, const PolyTuple& tuple, const Expo* shift) {
    Row row;
    for (int slot = 0; slot < frame.rank; ++slot) {
        const Poly& g = tuple[slot];
        for (const auto& [e, c] : g.terms()) {
            Expo m = shift ? mono_mul(e, *shift) : e;
            if (total_deg(m) > frame.cutoff) continue;
            row.emplace_back(frame.col(slot, m), c);
        }
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

int tuple_low_deg(const PolyTuple& t) {
    int d = -1;
    for (const Poly& p : t) {
        const int l = p.low_deg();
        if (l >= 0 && (d < 0 || l < d)) d = l;
    }
    return d;
}

// Echelon of the truncated span; returns the quotient dimension and,
// optionally, the non-pivot columns.
long quotient_dim_once(const SubmoduleSpec& spec, int cutoff,
                       std::vector<QuotientBasisElem>* basis_out,
                       Echelon* echelon_out) {
    JetFrame frame(spec.nvars, spec.ambient_rank, cutoff);
    Echelon ech;
    long rank = 0;

    for (const PolyTuple& g : spec.ogenerators) {
        const int low = tuple_low_deg(g);
        if (low < 0) continue; // zero tuple
        const int max_shift = cutoff - low;
        if (max_shift < 0) continue;
        for (const Expo& alpha : monomials_up_to(spec.nvars, max_shift)) {
            Row r = tuple_row(frame, g, &alpha);
            if (!r.empty() && ech.insert(std::move(r))) ++rank;
        }
    }
    for (const PolyTuple& g : spec.cgenerators) {
        Row r = tuple_row(frame, g, nullptr);
        if (!r.empty() && ech.insert(std::move(r))) ++rank;
    }

    const long dim = frame.ncols() - rank;
    if (basis_out) {
        basis_out->clear();
        for (int mi = 0; mi < static_cast<int>(frame.monos.size()); ++mi)
            for (int slot = 0; slot < frame.rank; ++slot) {
                const int c = mi * frame.rank + slot;
                if (!ech.pivots.count(c))
                    basis_out->push_back({slot, frame.monos[mi]});
            }
    }
    if (echelon_out) *echelon_out = std::move(ech);
    return dim;
}

} // namespace

QuotientReport local_quotient_dim(const SubmoduleSpec& spec, const TruncationPolicy& policy) {
    if (spec.ambient_rank < 1) throw HypothesisError("local_quotient_dim: ambient rank < 1");
    for (const PolyTuple& t : spec.ogenerators)
        if (static_cast<int>(t.size()) != spec.ambient_rank)
            throw HypothesisError("local_quotient_dim: generator tuple length mismatch");
    for (const PolyTuple& t : spec.cgenerators)
        if (static_cast<int>(t.size()) != spec.ambient_rank)
            throw HypothesisError("local_quotient_dim: generator tuple length mismatch");

    if (policy.window < 1) throw HypothesisError("local_quotient_dim: stability window < 1");
    if (policy.max_cutoff < 0) throw HypothesisError("local_quotient_dim: negative cutoff cap");

    QuotientReport report;
    int run_start = 0;
    long run_value = -1;
    for (int cutoff = 0; cutoff <= policy.max_cutoff; ++cutoff) {
        const long dim = quotient_dim_once(spec, cutoff, nullptr, nullptr);
        report.dim_history.push_back(dim);
        if (dim != run_value) {
            run_value = dim;
            run_start = cutoff;
        }
        if (cutoff - run_start >= policy.window) {
            // dims agree on [run_start, run_start + window]
            report.dimension = dim;
            report.cutoff_used = run_start;
            report.stabilized = true;
            quotient_dim_once(spec, cutoff, &report.basis_monomials, nullptr);
            return report;
        }
    }
    report.dimension = std::nullopt;
    report.cutoff_used = policy.max_cutoff;
    report.stabilized = false;
    return report;
}

long jet_quotient_dim_at(const SubmoduleSpec& spec, int cutoff) {
    return quotient_dim_once(spec, cutoff, nullptr, nullptr);
}

bool jet_class_is_zero(const SubmoduleSpec& spec, const PolyTuple& element, int cutoff) {
    if (static_cast<int>(element.size()) != spec.ambient_rank)
        throw HypothesisError("jet_class_is_zero: tuple length mismatch");
    Echelon ech;
    quotient_dim_once(spec, cutoff, nullptr, &ech);
    JetFrame frame(spec.nvars, spec.ambient_rank, cutoff);
    return ech.reduces_to_zero(tuple_row(frame, element, nullptr));
}

ClassStatus quotient_class_status(const SubmoduleSpec& spec, const PolyTuple& element,
                                  const TruncationPolicy& policy) {
    QuotientReport report = local_quotient_dim(spec, policy);
    if (!report.stabilized) return ClassStatus::Unstable;
    const int cutoff = report.cutoff_used + policy.window;
    return jet_class_is_zero(spec, element, cutoff) ? ClassStatus::ZeroAtStabilized
                                                    : ClassStatus::NonzeroAtStabilized;
}

} // namespace nambu
