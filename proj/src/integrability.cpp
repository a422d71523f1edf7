#include "nambu/integrability.hpp"

namespace nambu {

namespace {

// Iterate strictly increasing k-subsets of {0,...,n-1} in lex order.
bool next_subset(IdxSet& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

IdxSet first_subset(int k) {
    IdxSet idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

} // namespace

IntegrabilityVerdict is_integrable_form(const DiffForm& w) {
    const int n = w.nvars();
    const int p = w.degree();
    IntegrabilityVerdict verdict;
    if (p == 0 || w.is_zero()) {
        verdict.integrable = true;
        return verdict;
    }
    const DiffForm dw = ext_d(w);
    if (p == 1) {
        DiffForm residual = wedge(w, dw);
        if (residual.is_zero()) {
            verdict.integrable = true;
        } else {
            verdict.failing_condition = 2;
            verdict.witness_A = MultiVec::scalar(Poly::constant(n, Rat(1)));
            verdict.residual = residual;
        }
        return verdict;
    }
    if (p - 1 > n) {
        verdict.integrable = true; // no (p-1)-vectors at all
        return verdict;
    }
    IdxSet idx = first_subset(p - 1);
    do {
        const MultiVec a = MultiVec::basis(n, idx);
        const DiffForm iaw = contract(a, w);
        DiffForm r1 = wedge(w, iaw);
        if (!r1.is_zero()) {
            verdict.failing_condition = 1;
            verdict.witness_A = a;
            verdict.residual = r1;
            return verdict;
        }
        DiffForm r2 = wedge(dw, iaw);
        if (!r2.is_zero()) {
            verdict.failing_condition = 2;
            verdict.witness_A = a;
            verdict.residual = r2;
            return verdict;
        }
    } while (next_subset(idx, n));
    verdict.integrable = true;
    return verdict;
}

IntegrabilityVerdict is_nambu(const MultiVec& t) {
    const int n = t.nvars();
    const int q = t.degree();
    if (q == 0 || q == 1 || q == n || t.is_zero()) {
        IntegrabilityVerdict verdict;
        verdict.integrable = true;
        return verdict;
    }
    return is_integrable_form(dualize(t));
}

} // namespace nambu
