#pragma once

// Antisymmetric dx index tuples.  A q-form component is keyed by a strictly
// increasing tuple of 0-based coordinate indices; these helpers produce the
// permutation signs for wedging and interior contraction.

#include <vector>

namespace fedosov {

using DxTuple = std::vector<int>;  // strictly increasing

// dx^i ^ dx^J from the left.  Returns sign in {-1,0,+1}; fills `out` when
// the sign is nonzero.
inline int wedge_insert(int i, const DxTuple& J, DxTuple& out) {
    int pos = 0;
    for (int j : J) {
        if (j == i) return 0;
        if (j < i) ++pos;
    }
    out.clear();
    out.reserve(J.size() + 1);
    out.insert(out.end(), J.begin(), J.begin() + pos);
    out.push_back(i);
    out.insert(out.end(), J.begin() + pos, J.end());
    return (pos % 2 == 0) ? 1 : -1;
}

// interior contraction of slot k: iota_k(dx^J).  Returns sign, fills `out`.
inline int contract_slot(int k, const DxTuple& J, DxTuple& out) {
    for (std::size_t m = 0; m < J.size(); ++m) {
        if (J[m] == k) {
            out.clear();
            out.reserve(J.size() - 1);
            for (std::size_t t = 0; t < J.size(); ++t)
                if (t != m) out.push_back(J[t]);
            return (m % 2 == 0) ? 1 : -1;
        }
    }
    return 0;
}

// dx^J ^ dx^K.  Returns sign, fills `out` with the sorted union.
inline int wedge_merge(const DxTuple& J, const DxTuple& K, DxTuple& out) {
    out = K;
    int sign = 1;
    for (auto it = J.rbegin(); it != J.rend(); ++it) {
        DxTuple next;
        int s = wedge_insert(*it, out, next);
        if (s == 0) return 0;
        sign *= s;
        out = std::move(next);
    }
    return sign;
}

}  // namespace fedosov
