#include "fedosov/multi_index.hpp"

#include <algorithm>

namespace fedosov {

std::vector<Exp> exps_of_degree(int dim, int total) {
    std::vector<Exp> out;
    Exp cur(dim, 0);
    // depth-first over positions, lexicographically ascending
    // exponent vectors with fixed total
    struct Rec {
        int dim, total;
        std::vector<Exp>* out;
        void go(Exp& cur, int pos, int left) {
            if (pos == dim - 1) {
                cur[pos] = static_cast<std::uint32_t>(left);
                out->push_back(cur);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cur[pos] = static_cast<std::uint32_t>(v);
                go(cur, pos + 1, left - v);
            }
        }
    } rec{dim, total, &out};
    if (dim == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    rec.go(cur, 0, total);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exp> exps_up_to(int dim, int max_total) {
    std::vector<Exp> out;
    for (int t = 0; t <= max_total; ++t) {
        auto part = exps_of_degree(dim, t);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<std::pair<std::vector<Exp>, Rational>> exp_splits(const Exp& e, int parts) {
    std::vector<std::pair<std::vector<Exp>, Rational>> out;
    if (parts <= 0) {
        if (exp_total(e) == 0) out.push_back({{}, 1});
        return out;
    }
    if (parts == 1) {
        out.push_back({{e}, 1});
        return out;
    }
    // choose the first part as any sub-multi-index of e, recurse on the rest
    const int dim = static_cast<int>(e.size());
    std::vector<Exp> subs;
    {
        Exp cur(dim, 0);
        struct Rec {
            const Exp* e;
            int dim;
            std::vector<Exp>* subs;
            void go(Exp& cur, int pos) {
                if (pos == dim) {
                    subs->push_back(cur);
                    return;
                }
                for (std::uint32_t v = 0; v <= (*e)[pos]; ++v) {
                    cur[pos] = v;
                    go(cur, pos + 1);
                }
            }
        } rec{&e, dim, &subs};
        rec.go(cur, 0);
    }
    for (const auto& first : subs) {
        Exp rest = exp_sub(e, first);
        for (auto& tail : exp_splits(rest, parts - 1)) {
            std::vector<Exp> all;
            all.reserve(parts);
            all.push_back(first);
            for (auto& t : tail.first) all.push_back(std::move(t));
            // multinomial = prod over coords of multinomials; build it as
            // binom(e, first) * multinomial(rest over tail) recursively
            Rational coeff = exp_binomial(e, first) * tail.second;
            out.push_back({std::move(all), std::move(coeff)});
        }
    }
    return out;
}

}  // namespace fedosov
